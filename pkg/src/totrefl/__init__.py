"""Totally reflexive modules over k[X, Y_1..Y_i]/(X^2, (Y_1..Y_i)^2)."""

from .algebra import Ring, SElement, annihilator, exact_zerodivisor_partner, s_mul, socle_rank
from .conjugacy import are_conjugate, brute_force_conjugate, intertwiner_space, is_indecomposable_probe, wild_family
from .field import QQ, FieldSpec, KMatrix, invert, rank_and_kernel, solve_linear
from .linmat import LinearMatrix, SMatrix, flatten, random_scramble
from .modrep import FDModule, betti_numbers, cokernel, min_generators, syzygy_presentation
from .normalform import normalize
from .trcheck import biduality_check, ext_oracle, total_acyclicity_check, yoshino_conditions
from .tuples import MatrixTuple, presentation_from_tuple, sigma_from_tuple, verify_matrix_factorization

__all__ = [
    "QQ", "FieldSpec", "KMatrix", "invert", "rank_and_kernel", "solve_linear",
    "Ring", "SElement", "annihilator", "exact_zerodivisor_partner", "s_mul", "socle_rank",
    "LinearMatrix", "SMatrix", "flatten", "random_scramble",
    "MatrixTuple", "presentation_from_tuple", "sigma_from_tuple", "verify_matrix_factorization",
    "FDModule", "betti_numbers", "cokernel", "min_generators", "syzygy_presentation",
    "total_acyclicity_check", "ext_oracle", "biduality_check", "yoshino_conditions",
    "normalize",
    "are_conjugate", "brute_force_conjugate", "intertwiner_space", "is_indecomposable_probe", "wild_family",
]
