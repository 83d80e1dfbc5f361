"""Reduction mod p of the dictionary and the generic/special comparison.

Reducing an exact rational pair mod p and reducing its multisegment are two
different walks around the same square.  The reduced multisegment always
sits below the multisegment of the reduced pair (reduction can only merge
monodromy away, never create it), with equality exactly when the nilpotent
orbit survives reduction.  Both facts are checked at runtime; a violation
means the code, not the input, is wrong, and raises the internal error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CyclicLineError,
    DomainError,
    InternalInvariantError,
    NotPIntegralError,
)
from .exact import QQ, is_prime, multiplicative_order
from .multiseg import (
    CuspidalLabel,
    Multisegment,
    Segment,
    TwistedMultisegment,
    cycle_line_id,
    leq,
    wd_to_multisegment,
)
from .weildeligne import (
    RankProfile,
    WeilDeligneRep,
    frobenius_semisimplify,
    rank_profile,
    reduce_wd,
)

__all__ = [
    "SpecializationReport",
    "reduce_segments",
    "specialize",
    "breuil_schneider",
]


def breuil_schneider(rep: WeilDeligneRep) -> TwistedMultisegment:
    """Multisegment of a pair that may still carry a unipotent part."""
    return wd_to_multisegment(frobenius_semisimplify(rep))


def reduce_segments(tms: TwistedMultisegment, p: int, q: int) -> TwistedMultisegment:
    """Push a free-line multisegment onto the cyclic lines mod p.

    Each free anchor must reduce to a unit mod p; its segments slide onto
    the cyclic line through that unit, shifted so that positions keep
    naming the same eigenvalues.  Lengths never change, so a segment
    longer than the cycle has no home and trips the wraparound guard.
    """
    if not is_prime(p):
        raise DomainError(f"reduction modulus must be prime, got {p!r}")
    if q % p == 0:
        raise DomainError(f"residue size {q} is divisible by the reduction prime {p}")
    qbar = q % p
    o = multiplicative_order(qbar, p)
    qbar_inv = pow(qbar, -1, p)
    out = []
    for seg in tms.ms:
        label = CuspidalLabel.parse(seg.line)
        if label.is_cyclic:
            raise CyclicLineError(
                f"line {seg.line!r} is already cyclic; reduction starts from free lines"
            )
        anchor = label.anchor
        if anchor.denominator % p == 0:
            raise NotPIntegralError(
                f"anchor {seg.line!r} has denominator divisible by {p}"
            )
        if anchor.numerator % p == 0:
            raise NotPIntegralError(
                f"anchor {seg.line!r} reduces to zero mod {p}"
            )
        vbar = anchor.numerator * pow(anchor.denominator, -1, p) % p
        cyc_anchor = int(cycle_line_id(p, qbar, vbar).rsplit("/", 1)[1])
        shift = 0
        cur = cyc_anchor
        while cur != vbar:
            cur = cur * qbar_inv % p
            shift += 1
            if shift >= o:  # pragma: no cover - vbar lies on its own cycle
                raise InternalInvariantError("anchor escaped its own cycle")
        line = f"F{p}/{qbar}/{cyc_anchor}"
        out.append(Segment(line, (seg.start + shift) % o, seg.len))
    return TwistedMultisegment(Multisegment(out), tms.half_twist)


@dataclass(frozen=True)
class SpecializationReport:
    """Everything the generic-vs-special comparison produces.

    dominance_ok is true in every report that is ever returned: a failed
    dominance check is a bug in this package, not a property of the input,
    so it surfaces as an internal error instead of a field value.  The
    field still exists so serialized reports are self-contained.
    """

    S: TwistedMultisegment
    S_bar: TwistedMultisegment
    S_prime: TwistedMultisegment
    dominance_ok: bool
    is_isomorphism: bool
    generic_profile: RankProfile
    reduced_profile: RankProfile


def specialize(rep: WeilDeligneRep, p: int) -> SpecializationReport:
    """Compare the multisegment before and after reduction mod p.

    Computes the multisegment S of the input, reduces the input and takes
    the multisegment S_prime of the result, and separately reduces S
    combinatorially into S_bar.  S_bar must lie below S_prime, with
    equality exactly when the rank profile of the monodromy survives
    reduction; both implications are asserted.
    """
    if rep.field != QQ:
        raise DomainError("specialization starts from a rational representation")
    s_gen = breuil_schneider(rep)
    rep_bar = reduce_wd(rep, p)
    s_prime = breuil_schneider(rep_bar)
    s_bar = reduce_segments(s_gen, p, rep.q)
    if not leq(s_bar.ms, s_prime.ms):
        raise InternalInvariantError(
            "reduced generic multisegment fails to lie below the special one"
        )
    gen_prof = rank_profile(rep)
    red_prof = rank_profile(rep_bar)
    iso = gen_prof.ranks == red_prof.ranks
    if iso != (s_bar == s_prime):
        raise InternalInvariantError(
            "rank-profile test disagrees with multisegment equality"
        )
    return SpecializationReport(
        S=s_gen,
        S_bar=s_bar,
        S_prime=s_prime,
        dominance_ok=True,
        is_isomorphism=iso,
        generic_profile=gen_prof,
        reduced_profile=red_prof,
    )
