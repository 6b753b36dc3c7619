"""fatpoints: exact initial degrees of symbolic powers of planar point sets."""

from .algebra import (
    QQ,
    HomoPoly,
    PrimeField,
    ProjectivePoint,
    evaluate,
    linear_form,
    monomial_basis,
    order_of_vanishing,
    partial_derivative,
    point,
    poly,
    prime_field,
)
from .linsys import (
    AlphaReport,
    ExactRational,
    FatPointScheme,
    LinearSystemReport,
    MultiPrime,
    SinglePrime,
    alpha,
    alpha_diff,
    alpha_sequence,
    build_condition_matrix,
    expected_dim,
    kernel_basis,
    system_dim,
)

__version__ = "0.1.0"
