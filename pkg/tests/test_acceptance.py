"""The nine acceptance criteria, each timed against its limit.

Every test records a pass/fail line that is printed in the terminal summary.
"""

import itertools
import time

from conftest import F2, F3, F5, record_criterion
from totrefl.algebra import (Ring, annihilator, exact_zerodivisor_partner, maximal_ideal_square,
                             principal_ideal, socle, socle_rank)
from totrefl.conjugacy import are_conjugate, brute_force_conjugate, is_indecomposable_probe, is_witness, wild_family
from totrefl.field import QQ, KMatrix, Subspace, invert, rank
from totrefl.linmat import LinearMatrix, SMatrix, flatten, is_invertible_local, random_invertible, random_scramble
from totrefl.modrep import betti_numbers, cokernel
from totrefl.normalform import normalize
from totrefl.seeding import make_rng
from totrefl.trcheck import (biduality_check, ext_oracle, total_acyclicity_check, total_acyclicity_check_raw,
                             yoshino_conditions)
from totrefl.tuples import presentation_from_tuple, random_tuple, sigma_from_tuple, verify_matrix_factorization


def criterion(number, title, limit, body):
    start = time.perf_counter()
    failures = body()
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < limit
    detail = f"({elapsed:.2f}s, limit {limit}s)" + ("" if not failures else f" {failures[:3]}")
    record_criterion(number, title, ok, detail)
    assert not failures, failures
    assert elapsed < limit, f"took {elapsed:.2f}s"


def acceptance_tuple(k):
    n = 1 + k % 5
    i = 2 + (k // 5) % 2
    field = [QQ, F5][(k // 10) % 2]
    return random_tuple(Ring(i, field), n, k)


def acyclicity_failures(t):
    out = []
    if not verify_matrix_factorization(t):
        out.append("factorization")
    rep = total_acyclicity_check(t)
    target = t.n * t.ring.e
    r = rep.ranks
    if not (r["d"] == r["sigma"] == target):
        out.append(f"ranks {r}")
    if not rep.passed:
        out.append(f"conditions {rep.conditions}")
    if rank(flatten(presentation_from_tuple(t))) != target or rank(flatten(sigma_from_tuple(t))) != target:
        out.append("flatten ranks")
    return out


def test_criterion_1_ring_structure():
    def body():
        bad = []
        for i, f in itertools.product([2, 3, 4, 5], [QQ, F5]):
            R = Ring(i, f)
            if R.dim != 2 * (i + 1) or socle_rank(R) != i:
                bad.append((i, f.name, "dim/socle"))
            if socle(R) != maximal_ideal_square(R) or maximal_ideal_square(R).rank != i:
                bad.append((i, f.name, "m^2"))
        return bad
    criterion(1, "ring structure", 1, body)


def test_criterion_2_exact_zerodivisors():
    def body():
        R = Ring(2, F3)
        bad = []
        exact = 0
        for a, b1, b2 in itertools.product(range(3), repeat=3):
            s = R.linear_form(a, [b1, b2])
            if s.is_zero():
                # zero is excluded from the notion
                if a != 0:
                    bad.append("zero")
                continue
            t = exact_zerodivisor_partner(s)
            if (t is not None) != (a != 0):
                bad.append((a, b1, b2))
                continue
            if t is None:
                continue
            exact += 1
            span = lambda els: Subspace(F3, [e.coeffs for e in els], R.dim)
            if span(annihilator(s)[0]) != principal_ideal(t) or span(annihilator(t)[0]) != principal_ideal(s):
                bad.append(("ann", a, b1, b2))
        if exact != 18:
            bad.append(f"{exact} exact forms")
        return bad
    criterion(2, "exact zerodivisors over F_3", 1, body)


def test_criterion_3_factorization_and_acyclicity():
    def body():
        bad = []
        for k in range(200):
            fails = acyclicity_failures(acceptance_tuple(k))
            if fails:
                bad.append((k, fails))
        return bad
    criterion(3, "matrix factorization and total acyclicity, 200 tuples", 60, body)


def test_criterion_4_definitional_cross_validation():
    def body():
        bad = []
        for m_ in range(20):
            k = 10 * m_ + m_ % 10
            t = acceptance_tuple(k)
            m = cokernel(presentation_from_tuple(t))
            if any(ext_oracle(m, 6)):
                bad.append((k, "ext"))
            if not biduality_check(m):
                bad.append((k, "biduality"))
            rep = yoshino_conditions(m, 6)
            if not rep.passed or rep.details["length"] != t.n * t.ring.e or rep.details["betti"] != [t.n] * 6:
                bad.append((k, "yoshino", rep.conditions))
        return bad
    criterion(4, "Ext, biduality and length/Betti conditions on 20 tuples", 60, body)


def test_criterion_5_negative_controls():
    def body():
        bad = []
        R = Ring(2)
        d = LinearMatrix(R, 1, KMatrix.zeros(QQ, 1), (KMatrix.identity(QQ, 1), KMatrix.zeros(QQ, 1)))
        if total_acyclicity_check_raw(d).passed:
            bad.append("raw [y1] passed")
        m = cokernel(SMatrix.from_entries(R, [[R.y(1)]]))
        if not any(ext_oracle(m, 3)):
            bad.append("Ext vanishes")
        betti = betti_numbers(m, 4)
        if not all(a < b for a, b in zip(betti[1:], betti[2:])):
            bad.append(f"betti {betti}")
        if biduality_check(m) or yoshino_conditions(m, 4).passed:
            bad.append("module looks reflexive")
        return bad
    criterion(5, "negative controls [y1] and S/(y1)", 5, body)


def test_criterion_6_normal_form_round_trip():
    def body():
        bad = []
        for k in range(100):
            field = [QQ, F5][k % 2]
            n = 1 + k % 4
            t = random_tuple(Ring(2, field), n, k, 3, "normal-form")
            A, B, d = random_scramble(presentation_from_tuple(t), k)
            nf = normalize(d)
            if not (is_invertible_local(nf.row_ops) and is_invertible_local(nf.col_ops)):
                bad.append((k, "factors"))
            if nf.row_ops @ d @ nf.col_ops != presentation_from_tuple(nf.tuple).to_smatrix():
                bad.append((k, "product"))
            dec = are_conjugate(t, nf.tuple)
            if not (dec.conjugate and dec.certain and is_witness(dec.witness, t, nf.tuple)):
                bad.append((k, "conjugacy", dec.method))
        return bad
    criterion(6, "normal form round trip on 100 scrambles", 120, body)


def test_criterion_7_conjugacy_vs_brute_force():
    def body():
        bad = []
        for field in (F2, F3):
            R = Ring(2, field)
            for k in range(25):
                a, b = random_tuple(R, 2, k, 1, "pair-a"), random_tuple(R, 2, k, 1, "pair-b")
                if are_conjugate(a, b).conjugate != brute_force_conjugate(a, b):
                    bad.append((field.name, "random", k))
            for k in range(10):
                a = random_tuple(R, 2, k, 1, "orbit")
                b = a.conjugate(random_invertible(field, 2, make_rng(k, "orbit-P")))
                dec = are_conjugate(a, b)
                if not (dec.conjugate and brute_force_conjugate(a, b)):
                    bad.append((field.name, "constructed", k))
        return bad
    criterion(7, "conjugacy agrees with GL_2 enumeration over F_2, F_3", 30, body)


def test_criterion_8_equivalence_laws():
    def body():
        bad = []
        for k in range(30):
            field = [QQ, F3, F5][k % 3]
            R = Ring(2 + k % 2, field)
            n = 1 + k % 3
            a = random_tuple(R, n, k, 3, "laws")
            rng = make_rng(k, "laws-P")
            P, Q = random_invertible(field, n, rng), random_invertible(field, n, rng)
            b, c = a.conjugate(P), a.conjugate(P).conjugate(Q)
            refl = are_conjugate(a, a)
            ab, ba = are_conjugate(a, b), are_conjugate(b, a)
            bc, ac = are_conjugate(b, c), are_conjugate(a, c)
            if not (refl.conjugate and ab.conjugate and ba.conjugate and bc.conjugate and ac.conjugate):
                bad.append((k, "decision"))
                continue
            # composed witnesses: (W_bc W_ab) carries a to c, W_ab^-1 carries b to a
            if not is_witness(bc.witness @ ab.witness, a, c):
                bad.append((k, "transitivity witness"))
            if not is_witness(invert(ab.witness), b, a):
                bad.append((k, "symmetry witness"))
        return bad
    criterion(8, "reflexivity, symmetry, transitivity on 30 triples", 10, body)


def test_criterion_9_wild_family():
    def body():
        bad = []
        R = Ring(2)
        for n in (1, 2, 3):
            family = wild_family(n, [0, 1, 2, 3, 4], R)
            for lam, t in zip(range(5), family):
                if acyclicity_failures(t):
                    bad.append((n, lam, "acyclicity"))
            for a, b in itertools.combinations(family, 2):
                if are_conjugate(a, b).conjugate:
                    bad.append((n, "conjugate pair"))
            if n == 1:
                for lam, t in enumerate(family):
                    if is_indecomposable_probe(t).status != "indecomposable":
                        bad.append((n, lam, "probe"))
        for field in (F2, F3):
            Rp = Ring(2, field)
            for n in (1, 2, 3):
                for lam, t in zip(range(field.p), wild_family(n, list(range(field.p)), Rp)):
                    probe = is_indecomposable_probe(t)
                    if probe.status != "indecomposable" or acyclicity_failures(t):
                        bad.append((field.name, n, lam, probe.method))
        return bad
    criterion(9, "Jordan-block family over Q, F_2, F_3", 60, body)
