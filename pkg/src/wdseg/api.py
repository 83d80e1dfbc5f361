"""Command handlers shared by the HTTP service and the CLI.

Each handler takes a validated request model and returns a response model;
run_command wraps that with dict-level validation so the CLI can dispatch
in process without ever touching HTTP.  Input that fails model validation
is a domain error, the same as input that fails a mathematical check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Mapping, Type

from pydantic import BaseModel, ValidationError

from .errors import DomainError
from .gl2 import Gl2ModpInput, gl2_modp_table, length_bound
from .multiseg import (
    Multisegment,
    down_set,
    generic_from_support,
    leq,
    order_multisegment,
    wd_to_multisegment,
)
from .schemas import (
    DownsetRequest,
    DownsetResponse,
    GenericSupportRequest,
    Gl2Request,
    Gl2Response,
    LengthBoundRequest,
    LengthBoundResponse,
    LeqRequest,
    LeqResponse,
    MultisegmentDoc,
    SpecializationReportDoc,
    SpecializeRequest,
    TwistedMultisegmentDoc,
    WdRepDoc,
)
from .specialize import breuil_schneider, specialize
from .weildeligne import frobenius_semisimplify

__all__ = ["COMMANDS", "CommandSpec", "run_command"]


def fss_command(req: WdRepDoc) -> WdRepDoc:
    return WdRepDoc.from_rep(frobenius_semisimplify(req.to_rep()))


def to_multisegment_command(req: WdRepDoc) -> TwistedMultisegmentDoc:
    return TwistedMultisegmentDoc.from_tms(wd_to_multisegment(req.to_rep()))


def bs_command(req: WdRepDoc) -> TwistedMultisegmentDoc:
    return TwistedMultisegmentDoc.from_tms(breuil_schneider(req.to_rep()))


def specialize_command(req: SpecializeRequest) -> SpecializationReportDoc:
    return SpecializationReportDoc.from_report(specialize(req.rep.to_rep(), req.p))


def leq_command(req: LeqRequest) -> LeqResponse:
    return LeqResponse(leq=leq(req.lower.to_ms(), req.upper.to_ms()))


def _ms_sort_key(ms: Multisegment):
    return tuple((s.line, s.start, s.len) for s in order_multisegment(ms))


def downset_command(req: DownsetRequest) -> DownsetResponse:
    ms = Multisegment(s.to_segment() for s in req.segments)
    elements = sorted(down_set(ms, bound=req.bound), key=_ms_sort_key)
    return DownsetResponse(elements=[MultisegmentDoc.from_ms(m) for m in elements])


def generic_support_command(req: GenericSupportRequest) -> MultisegmentDoc:
    return MultisegmentDoc.from_ms(generic_from_support(req.support))


def gl2_modp_command(req: Gl2Request) -> Gl2Response:
    out = gl2_modp_table(Gl2ModpInput(req.p, req.q_mod_p, req.shape))
    return Gl2Response(
        regime=out.regime,
        constituents=list(out.constituents),
        extension_note=out.extension_note,
    )


def length_bound_command(req: LengthBoundRequest) -> LengthBoundResponse:
    return LengthBoundResponse(bound=length_bound(req.n))


@dataclass(frozen=True)
class CommandSpec:
    request: Type[BaseModel]
    handler: Callable[[Any], BaseModel]


COMMANDS: Dict[str, CommandSpec] = {
    "fss": CommandSpec(WdRepDoc, fss_command),
    "to-multisegment": CommandSpec(WdRepDoc, to_multisegment_command),
    "bs": CommandSpec(WdRepDoc, bs_command),
    "specialize": CommandSpec(SpecializeRequest, specialize_command),
    "leq": CommandSpec(LeqRequest, leq_command),
    "downset": CommandSpec(DownsetRequest, downset_command),
    "generic-support": CommandSpec(GenericSupportRequest, generic_support_command),
    "gl2-modp": CommandSpec(Gl2Request, gl2_modp_command),
    "length-bound": CommandSpec(LengthBoundRequest, length_bound_command),
}


def _validation_message(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors()[:3]:
        loc = ".".join(str(piece) for piece in err["loc"]) or "<root>"
        parts.append(f"{loc}: {err['msg']}")
    more = exc.error_count() - len(parts)
    if more > 0:
        parts.append(f"and {more} more")
    return "invalid request: " + "; ".join(parts)


def run_command(name: str, payload: Mapping) -> Dict[str, Any]:
    """Validate payload for the named command, run it, return a JSON dict."""
    if name not in COMMANDS:
        raise DomainError(f"unknown command {name!r}")
    spec = COMMANDS[name]
    try:
        req = spec.request.model_validate(payload)
    except ValidationError as exc:
        raise DomainError(_validation_message(exc)) from None
    return spec.handler(req).model_dump(mode="json")
