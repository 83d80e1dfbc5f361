"""Strict JSON document models for the service and CLI boundary.

Every model forbids unknown keys and refuses floating point outright: exact
scalars travel as strings ("a" or "a/b") over the rationals and as plain
integers over a prime field, with the field declared once per matrix.  The
models only shuttle data; all mathematical validation stays in the domain
constructors, which the to_* converters call.
"""

from __future__ import annotations

import json
from typing import Annotated, Dict, List, Literal, Mapping, Optional, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field as SchemaField,
    StrictBool,
    StrictInt,
    StrictStr,
)

from .errors import FieldMismatchError
from .exact import Field, Matrix, PrimeField, QQ, Rationals
from .gl2 import Gl2Regime, Gl2Shape
from .multiseg import (
    Multisegment,
    Segment,
    TwistedMultisegment,
    order_multisegment,
)
from .specialize import SpecializationReport
from .weildeligne import GaloisSample, WeilDeligneRep

__all__ = [
    "MatrixDoc",
    "WdRepDoc",
    "GaloisSampleDoc",
    "SegmentDoc",
    "MultisegmentDoc",
    "TwistedMultisegmentDoc",
    "SpecializeRequest",
    "SpecializationReportDoc",
    "LeqRequest",
    "LeqResponse",
    "DownsetRequest",
    "DownsetResponse",
    "GenericSupportRequest",
    "Gl2Request",
    "Gl2Response",
    "LengthBoundRequest",
    "LengthBoundResponse",
    "ErrorResponse",
    "canonical_json",
]


def canonical_json(payload: Mapping) -> str:
    """One canonical byte representation per payload: sorted keys, no spaces."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


class _Doc(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RationalFieldTag(_Doc):
    type: Literal["rational"]


class PrimeFieldTag(_Doc):
    type: Literal["prime"]
    p: StrictInt


FieldTag = Annotated[
    Union[RationalFieldTag, PrimeFieldTag], SchemaField(discriminator="type")
]


class MatrixDoc(_Doc):
    """Exact matrix: rational entries are strings, prime-field entries ints."""

    field: FieldTag
    rows: List[List[Union[StrictInt, StrictStr]]]

    def domain_field(self) -> Field:
        if isinstance(self.field, RationalFieldTag):
            return QQ
        return PrimeField(self.field.p)

    def to_matrix(self) -> Matrix:
        fld = self.domain_field()
        return Matrix.from_rows(fld, [[fld.decode(e) for e in r] for r in self.rows])

    @classmethod
    def from_matrix(cls, m: Matrix) -> "MatrixDoc":
        if isinstance(m.field, Rationals):
            tag: Union[RationalFieldTag, PrimeFieldTag] = RationalFieldTag(
                type="rational"
            )
        else:
            tag = PrimeFieldTag(type="prime", p=m.field.p)
        return cls(field=tag, rows=[[m.field.encode(e) for e in r] for r in m.rows()])


def _common_field(a: MatrixDoc, b: MatrixDoc, names: str) -> Field:
    fa, fb = a.domain_field(), b.domain_field()
    if fa != fb:
        raise FieldMismatchError(f"{names} declare different fields")
    return fa


class WdRepDoc(_Doc):
    """An exact twist-compatible pair (P invertible, N nilpotent)."""

    q: StrictInt
    P: MatrixDoc
    N: MatrixDoc

    def to_rep(self) -> WeilDeligneRep:
        fld = _common_field(self.P, self.N, "P and N")
        return WeilDeligneRep(fld, self.q, self.P.to_matrix(), self.N.to_matrix())

    @classmethod
    def from_rep(cls, rep: WeilDeligneRep) -> "WdRepDoc":
        return cls(
            q=rep.q,
            P=MatrixDoc.from_matrix(rep.phi),
            N=MatrixDoc.from_matrix(rep.nil),
        )


class GaloisSampleDoc(_Doc):
    """Raw sample: invertible phi next to a unipotent sigma."""

    q: StrictInt
    phi: MatrixDoc
    sigma: MatrixDoc

    def to_sample(self) -> GaloisSample:
        fld = _common_field(self.phi, self.sigma, "phi and sigma")
        return GaloisSample(fld, self.q, self.phi.to_matrix(), self.sigma.to_matrix())

    @classmethod
    def from_sample(cls, sample: GaloisSample) -> "GaloisSampleDoc":
        return cls(
            q=sample.q,
            phi=MatrixDoc.from_matrix(sample.frobenius),
            sigma=MatrixDoc.from_matrix(sample.monodromy),
        )


class SegmentDoc(_Doc):
    line: StrictStr
    start: StrictInt
    len: StrictInt

    def to_segment(self) -> Segment:
        return Segment(self.line, self.start, self.len)

    @classmethod
    def from_segment(cls, seg: Segment) -> "SegmentDoc":
        return cls(line=seg.line, start=seg.start, len=seg.len)


class MultisegmentDoc(_Doc):
    segments: List[SegmentDoc]

    def to_ms(self) -> Multisegment:
        return Multisegment(s.to_segment() for s in self.segments)

    @classmethod
    def from_ms(cls, ms: Multisegment) -> "MultisegmentDoc":
        # emitted so that no segment precedes a later one
        return cls(segments=[SegmentDoc.from_segment(s) for s in order_multisegment(ms)])


class TwistedMultisegmentDoc(_Doc):
    half_twist: StrictInt
    segments: List[SegmentDoc]

    def to_tms(self) -> TwistedMultisegment:
        ms = Multisegment(s.to_segment() for s in self.segments)
        return TwistedMultisegment(ms, self.half_twist)

    @classmethod
    def from_tms(cls, tms: TwistedMultisegment) -> "TwistedMultisegmentDoc":
        return cls(
            half_twist=tms.half_twist,
            segments=[SegmentDoc.from_segment(s) for s in order_multisegment(tms.ms)],
        )


class SpecializeRequest(_Doc):
    rep: WdRepDoc
    p: StrictInt


class SpecializationReportDoc(_Doc):
    S: TwistedMultisegmentDoc
    S_bar: TwistedMultisegmentDoc
    S_prime: TwistedMultisegmentDoc
    dominance_ok: StrictBool
    is_isomorphism: StrictBool
    generic_profile: List[StrictInt]
    reduced_profile: List[StrictInt]

    @classmethod
    def from_report(cls, report: SpecializationReport) -> "SpecializationReportDoc":
        return cls(
            S=TwistedMultisegmentDoc.from_tms(report.S),
            S_bar=TwistedMultisegmentDoc.from_tms(report.S_bar),
            S_prime=TwistedMultisegmentDoc.from_tms(report.S_prime),
            dominance_ok=report.dominance_ok,
            is_isomorphism=report.is_isomorphism,
            generic_profile=list(report.generic_profile.ranks),
            reduced_profile=list(report.reduced_profile.ranks),
        )


class LeqRequest(_Doc):
    lower: MultisegmentDoc
    upper: MultisegmentDoc


class LeqResponse(_Doc):
    leq: StrictBool


class DownsetRequest(_Doc):
    segments: List[SegmentDoc]
    bound: StrictInt = 10


class DownsetResponse(_Doc):
    elements: List[MultisegmentDoc]


class GenericSupportRequest(_Doc):
    # JSON object keys are strings, so inner position keys arrive as "0",
    # "-1", ...; plain int (not StrictInt) lets pydantic parse them back
    support: Dict[StrictStr, Dict[int, StrictInt]]


class Gl2Request(_Doc):
    p: StrictInt
    q_mod_p: StrictInt
    shape: Gl2Shape


class Gl2Response(_Doc):
    regime: Gl2Regime
    constituents: List[StrictStr]
    extension_note: Optional[StrictStr] = None


class LengthBoundRequest(_Doc):
    n: StrictInt


class LengthBoundResponse(_Doc):
    bound: StrictInt


class ErrorResponse(_Doc):
    error: StrictStr
