"""Multiplicative Jordan decomposition and friends, exactly.

An invertible matrix P factors uniquely as P = s * u with s semisimple,
u unipotent, and s u = u s, and both factors are polynomials in P.  The
semisimple factor is computed by Newton iteration against the squarefree
part q of the characteristic polynomial: starting from x = P, the map
x -> x - q(x) q'(x)^(-1) converges quadratically, so ceil(log2 n) + 1
steps suffice for an n x n input.  Everything is exact; over a prime
field the characteristic must exceed n or the construction is refused.

The unipotent/nilpotent dictionary uses the truncated log and exp series,
which terminate because the argument is nilpotent and are honest inverses
of each other as long as the characteristic exceeds the matrix size.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple

from ..errors import (
    DomainError,
    InternalInvariantError,
    NotNilpotentError,
    NotPIntegralError,
    NotUnipotentError,
    SingularError,
    WildCharacteristicError,
)
from .fields import Field, Fp, PrimeField, QQ
from .matrix import Matrix
from .poly import squarefree_part

__all__ = [
    "jordan_chevalley",
    "nilpotent_log",
    "nilpotent_exp",
    "reduce_mod_p",
    "is_semisimple",
]


def _char_guard(field: Field, n: int, what: str) -> None:
    ch = field.characteristic
    if ch != 0 and ch <= n:
        raise WildCharacteristicError(
            f"{what} needs characteristic 0 or > {n}, got {ch}"
        )


def jordan_chevalley(p_mat: Matrix) -> Tuple[Matrix, Matrix]:
    """Split invertible P into (semisimple, unipotent) with P = s*u = u*s."""
    if not p_mat.is_square:
        raise DomainError("Jordan decomposition needs a square matrix")
    n = p_mat.nrows
    _char_guard(p_mat.field, n, "Jordan decomposition")
    if p_mat.det() == p_mat.field.zero:
        raise SingularError("Jordan decomposition is only taken of invertible matrices")
    q = squarefree_part(p_mat.charpoly())
    dq = q.derivative()
    x = p_mat
    # quadratic convergence: the defect lives in the nilpotent commutant
    # and squares away each round
    steps = (max(n, 1) - 1).bit_length() + 1
    for _ in range(steps):
        qx = q(x)
        if qx.is_zero():
            break
        try:
            corr = dq(x).inverse()
        except SingularError:
            raise InternalInvariantError(
                "Newton correction became singular during Jordan decomposition"
            ) from None
        x = x - qx * corr
    if not q(x).is_zero():
        raise InternalInvariantError("Jordan decomposition Newton loop did not converge")
    s = x
    u = s.inverse() * p_mat
    return s, u


def nilpotent_log(u_mat: Matrix) -> Matrix:
    """Truncated log of a unipotent matrix; inverse of nilpotent_exp."""
    if not u_mat.is_square:
        raise DomainError("log needs a square matrix")
    n = u_mat.nrows
    field = u_mat.field
    _char_guard(field, n, "unipotent log")
    m = u_mat - Matrix.identity(field, n)
    if not (m ** max(n, 1)).is_zero():
        raise NotUnipotentError("matrix is not unipotent")
    acc = Matrix.zeros(field, n, n)
    power = Matrix.identity(field, n)
    for k in range(1, n):
        power = power * m
        term = power * (field.one / field.coerce(k))
        acc = acc + term if k % 2 == 1 else acc - term
    return acc


def nilpotent_exp(n_mat: Matrix) -> Matrix:
    """Truncated exp of a nilpotent matrix; inverse of nilpotent_log."""
    if not n_mat.is_square:
        raise DomainError("exp needs a square matrix")
    n = n_mat.nrows
    field = n_mat.field
    _char_guard(field, n, "nilpotent exp")
    if not (n_mat ** max(n, 1)).is_zero():
        raise NotNilpotentError("matrix is not nilpotent")
    acc = Matrix.identity(field, n)
    power = Matrix.identity(field, n)
    fact = field.one
    for k in range(1, n):
        power = power * n_mat
        fact = fact * field.coerce(k)
        acc = acc + power * (field.one / fact)
    return acc


def reduce_mod_p(mat: Matrix, p: int) -> Matrix:
    """Entrywise reduction of a rational matrix mod p.

    Every denominator must be a unit mod p; the first entry that is not
    gets named in the error so callers can report something actionable.
    """
    if mat.field is not QQ and mat.field.characteristic != 0:
        raise DomainError("reduction expects a matrix over the rationals")
    target = PrimeField(p)
    out = []
    for i in range(mat.nrows):
        for j in range(mat.ncols):
            e = mat[i, j]
            if e.denominator % p == 0:
                raise NotPIntegralError(
                    f"entry ({i},{j}) = {e} has denominator divisible by {p}"
                )
            out.append(Fp(e.numerator, p) / Fp(e.denominator, p))
    return Matrix(target, mat.nrows, mat.ncols, out)


def is_semisimple(mat: Matrix) -> bool:
    """True when the matrix is annihilated by a squarefree polynomial."""
    if not mat.is_square:
        raise DomainError("semisimplicity is a property of square matrices")
    if mat.nrows == 0:
        return True
    return squarefree_part(mat.charpoly())(mat).is_zero()
