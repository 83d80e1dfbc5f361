"""Exact linear algebra over the rationals and prime fields."""

from .fields import (
    Field,
    Fp,
    PrimeField,
    QQ,
    Rationals,
    Scalar,
    factorize,
    is_prime,
    multiplicative_order,
)
from .matrix import Matrix
from .poly import (
    Polynomial,
    poly_gcd,
    pow_mod,
    prime_field_roots,
    rational_roots,
    squarefree_part,
)
from .decomp import (
    is_semisimple,
    jordan_chevalley,
    nilpotent_exp,
    nilpotent_log,
    reduce_mod_p,
)

__all__ = [
    "Field",
    "Fp",
    "PrimeField",
    "QQ",
    "Rationals",
    "Scalar",
    "factorize",
    "is_prime",
    "multiplicative_order",
    "Matrix",
    "Polynomial",
    "poly_gcd",
    "pow_mod",
    "prime_field_roots",
    "rational_roots",
    "squarefree_part",
    "is_semisimple",
    "jordan_chevalley",
    "nilpotent_exp",
    "nilpotent_log",
    "reduce_mod_p",
]
