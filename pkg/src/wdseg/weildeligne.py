"""Pairs (invertible operator, nilpotent operator) tied by a twist relation.

A representation here is a triple: a residue-size parameter q, an invertible
matrix phi, and a nilpotent matrix nil, subject to

    q * (phi @ nil) == nil @ phi

so nil shifts phi-eigenvalues down by a factor of q.  The parameter q stays a
plain integer even when the matrices live over a prime field; only its image
in the coefficient field enters the twist check, and that image has to be a
unit or the relation is meaningless.

The constructor is the single validation chokepoint: every function below
returns its result through it, so an object of this type can always be
trusted to satisfy the axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import (
    DomainError,
    InternalInvariantError,
    NotNilpotentError,
    NotPIntegralError,
    SingularError,
    TwistRelationError,
)
from .exact import (
    Field,
    Matrix,
    QQ,
    factorize,
    is_prime,
    jordan_chevalley,
    nilpotent_log,
    reduce_mod_p,
)

__all__ = [
    "WeilDeligneRep",
    "GaloisSample",
    "RankProfile",
    "from_galois_sample",
    "special_rep",
    "direct_sum",
    "frobenius_semisimplify",
    "reduce_wd",
    "rank_profile",
    "is_minimal_lift",
]


def _is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorize(q)) == 1


@dataclass(frozen=True)
class WeilDeligneRep:
    """Validated twist-compatible pair over an exact field."""

    field: Field
    q: int
    phi: Matrix
    nil: Matrix

    def __post_init__(self) -> None:
        if not isinstance(self.q, int) or isinstance(self.q, bool):
            raise DomainError(f"residue size must be an integer, got {self.q!r}")
        if not _is_prime_power(self.q):
            raise DomainError(f"residue size must be a prime power >= 2, got {self.q}")
        if self.phi.field != self.field or self.nil.field != self.field:
            raise DomainError("operator entries do not live over the declared field")
        if not self.phi.is_square or self.phi.nrows != self.nil.nrows \
                or self.nil.nrows != self.nil.ncols:
            raise DomainError("operators must be square and of equal size")
        n = self.phi.nrows
        if self.phi.det() == self.field.zero:
            raise SingularError("the invertible operator is singular")
        if n and not (self.nil ** n).is_zero():
            raise NotNilpotentError("the monodromy operator is not nilpotent")
        qs = self.field.coerce(self.q)
        if qs == self.field.zero:
            raise DomainError(
                f"residue size {self.q} vanishes in characteristic "
                f"{self.field.characteristic}"
            )
        if qs * (self.phi * self.nil) != self.nil * self.phi:
            raise TwistRelationError(
                "twist relation q*(phi@nil) == nil@phi fails"
            )

    @property
    def dim(self) -> int:
        return self.phi.nrows


@dataclass(frozen=True)
class GaloisSample:
    """Raw sample (frobenius, unipotent monodromy) before taking the log."""

    field: Field
    q: int
    frobenius: Matrix
    monodromy: Matrix

    def __post_init__(self) -> None:
        if self.frobenius.field != self.field or self.monodromy.field != self.field:
            raise DomainError("sample entries do not live over the declared field")
        if not self.frobenius.is_square \
                or self.frobenius.nrows != self.monodromy.nrows \
                or not self.monodromy.is_square:
            raise DomainError("sample matrices must be square and of equal size")
        if self.frobenius.det() == self.field.zero:
            raise SingularError("sampled frobenius is singular")
        # unipotence of the monodromy is checked by nilpotent_log at
        # conversion time; duplicating it here would double the work


def from_galois_sample(sample: GaloisSample) -> WeilDeligneRep:
    """Convert a (frobenius, unipotent) sample to the twisted-pair form.

    The nilpotent operator is the truncated log of the monodromy, and the
    constructor's twist check is what rejects incompatible samples, e.g. a
    trivial frobenius next to a nontrivial monodromy.
    """
    nil = nilpotent_log(sample.monodromy)
    return WeilDeligneRep(sample.field, sample.q, sample.frobenius, nil)


def special_rep(scalar, length: int, q: int, field: Field = QQ) -> WeilDeligneRep:
    """The standard indecomposable block of a given length.

    Eigenvalues run scalar, scalar/q, ..., scalar/q^(length-1) down the
    diagonal and the nilpotent part is the full lower shift, so the block
    is as non-semisimple as the twist relation allows.
    """
    if length < 1:
        raise DomainError(f"block length must be >= 1, got {length}")
    lam = field.coerce(scalar)
    if lam == field.zero:
        raise DomainError("block eigenvalue must be nonzero")
    qs = field.coerce(q)
    if qs == field.zero:
        raise DomainError(f"residue size {q} vanishes in the coefficient field")
    diag = []
    cur = lam
    for _ in range(length):
        diag.append(cur)
        cur = cur / qs
    phi = Matrix.diagonal(field, diag)
    nil = Matrix.zeros(field, length, length)
    ent = list(nil.entries)
    for i in range(length - 1):
        ent[(i + 1) * length + i] = field.one
    nil = Matrix(field, length, length, ent)
    return WeilDeligneRep(field, q, phi, nil)


def direct_sum(*reps: WeilDeligneRep) -> WeilDeligneRep:
    if not reps:
        raise DomainError("direct sum of nothing")
    first = reps[0]
    for r in reps[1:]:
        if r.field != first.field or r.q != first.q:
            raise DomainError("summands must share field and residue size")
    return WeilDeligneRep(
        first.field,
        first.q,
        Matrix.block_diag([r.phi for r in reps]),
        Matrix.block_diag([r.nil for r in reps]),
    )


def frobenius_semisimplify(rep: WeilDeligneRep) -> WeilDeligneRep:
    """Replace phi by its semisimple Jordan factor, keeping nil.

    The unipotent factor commutes with nil (both shift the same eigenspace
    grading), so dropping it cannot break the twist relation; if either
    fact fails to hold numerically the input object was corrupt.
    """
    s, u = jordan_chevalley(rep.phi)
    if u * rep.nil != rep.nil * u:
        raise InternalInvariantError(
            "unipotent Jordan factor failed to commute with the nilpotent operator"
        )
    try:
        return WeilDeligneRep(rep.field, rep.q, s, rep.nil)
    except TwistRelationError:
        raise InternalInvariantError(
            "semisimplification broke the twist relation"
        ) from None


def reduce_wd(rep: WeilDeligneRep, p: int) -> WeilDeligneRep:
    """Entrywise reduction mod p of a rational twisted pair.

    Requires p-integral entries with p-unit determinant for phi, and p
    coprime to the residue size.  The reduced object is validated from
    scratch, so nilpotency and the twist relation survive by construction.
    """
    if rep.field != QQ:
        raise DomainError("only rational representations can be reduced")
    if not is_prime(p):
        raise DomainError(f"reduction modulus must be prime, got {p!r}")
    if rep.q % p == 0:
        raise DomainError(f"residue size {rep.q} is divisible by the reduction prime {p}")
    phi_bar = reduce_mod_p(rep.phi, p)
    nil_bar = reduce_mod_p(rep.nil, p)
    if phi_bar.det() == phi_bar.field.zero:
        raise NotPIntegralError(
            f"invertible operator becomes singular mod {p}; "
            "the representation is not integrally normalized at this prime"
        )
    return WeilDeligneRep(phi_bar.field, rep.q, phi_bar, nil_bar)


@dataclass(frozen=True)
class RankProfile:
    """Ranks of the nilpotent operator's powers, the conjugacy invariant."""

    dim: int
    ranks: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.ranks) != self.dim:
            raise DomainError("profile length must equal the dimension")


def rank_profile(rep: WeilDeligneRep) -> RankProfile:
    """rank(nil^i) for i = 1..dim; determines the nilpotent orbit."""
    n = rep.dim
    ranks = []
    power = rep.nil
    for _ in range(n):
        ranks.append(power.rank())
        power = power * rep.nil
    return RankProfile(n, tuple(ranks))


def is_minimal_lift(rep: WeilDeligneRep, p: int) -> bool:
    """True when reduction mod p does not degenerate the nilpotent orbit."""
    return rank_profile(rep).ranks == rank_profile(reduce_wd(rep, p)).ranks
