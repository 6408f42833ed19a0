"""Build the Jordan-block family (J_n(lam), 0, ..., 0) and report on each member.

Usage: python3 scripts/wild_family.py [--field Q] [--n-max 3] [--lambdas 0,1,2,3,4]
"""

import argparse
import itertools
import json
from dataclasses import asdict, dataclass

from totrefl.algebra import Ring
from totrefl.conjugacy import are_conjugate, is_indecomposable_probe, wild_family
from totrefl.field import FieldSpec
from totrefl.trcheck import check_tuple


@dataclass
class FamilyConfig:
    field: str = "Q"
    i: int = 2
    n_max: int = 3
    lambdas: tuple = ("0", "1", "2", "3", "4")
    depth: int = 4


def main():
    cfg = FamilyConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--field", default=cfg.field)
    p.add_argument("--i", type=int, default=cfg.i)
    p.add_argument("--n-max", type=int, default=cfg.n_max)
    p.add_argument("--lambdas", default=",".join(cfg.lambdas))
    args = p.parse_args()
    cfg = FamilyConfig(args.field, args.i, args.n_max, tuple(args.lambdas.split(",")))
    print(json.dumps({"config": asdict(cfg)}))
    f = FieldSpec.from_name(cfg.field)
    R = Ring(cfg.i, f)
    lams = [f.parse(v) for v in cfg.lambdas]
    for n in range(1, cfg.n_max + 1):
        family = wild_family(n, lams, R)
        for lam, t in zip(cfg.lambdas, family):
            out = check_tuple(t, depth=cfg.depth, oracle=True)
            probe = is_indecomposable_probe(t)
            print(json.dumps({"n": n, "lambda": lam, "passed": out["passed"],
                              "betti": out["yoshino"]["details"]["betti"],
                              "probe": probe.status, "probe_method": probe.method}))
        conj = sum(are_conjugate(a, b).conjugate for a, b in itertools.combinations(family, 2))
        print(json.dumps({"n": n, "conjugate_pairs": conj}))


if __name__ == "__main__":
    main()
