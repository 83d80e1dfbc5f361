"""The explicit two-dimensional mod-p table.

For 2 x 2 mod-p data everything can be tabulated by hand: the answer only
depends on whether q is 1, -1, or neither mod p (the regime) and on the
coarse shape of the input (split with the two characters in q-ratio,
nonsplit with the cyclic piece on either side, or nothing in q-ratio at
all).  The table lists the semisimplified constituents in a fixed order;
in the degenerate regime q = 1 the two nonsplit shapes also carry a note
recording that the constituents glue along a one-parameter family of
extension classes, distinct parameters giving non-isomorphic objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .errors import DomainError
from .exact import is_prime

__all__ = [
    "Gl2Regime",
    "Gl2Shape",
    "Gl2ModpInput",
    "Gl2ModpOutput",
    "classify_regime",
    "gl2_modp_table",
    "length_bound",
    "ST_TWISTED",
    "DET_CHARACTER",
    "STEINBERG",
    "TRIVIAL",
    "SMOOTH_PI_ONE",
    "UNIQUE_GENERIC",
]

ST_TWISTED = "St⊗(|·|∘det)"
DET_CHARACTER = "|·|∘det"
STEINBERG = "St"
TRIVIAL = "1"
SMOOTH_PI_ONE = "π(1)"
UNIQUE_GENERIC = "unique-generic(scs)"

EXTENSION_NOTE = (
    "nonsplit gluings of the two constituents are classified by lines in the "
    "extension space of the trivial constituent by the generic one; each line "
    "determines a single isomorphism class"
)


class Gl2Regime(str, Enum):
    BANAL = "Banal"
    Q_IS_MINUS_ONE = "QisMinusOne"
    Q_IS_ONE = "QisOne"


class Gl2Shape(str, Enum):
    SPLIT = "Split"
    NONSPLIT_CYC_BY_ONE = "NonsplitCycByOne"
    NONSPLIT_ONE_BY_CYC = "NonsplitOneByCyc"
    SUB_GENERIC = "SubGeneric"


@dataclass(frozen=True)
class Gl2ModpInput:
    p: int
    q_mod_p: int
    shape: Gl2Shape

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p == 2:
            raise DomainError(f"the table needs an odd prime, got {self.p!r}")
        if not (1 <= self.q_mod_p <= self.p - 1):
            raise DomainError(
                f"q mod p must lie in [1, {self.p - 1}], got {self.q_mod_p!r}"
            )


@dataclass(frozen=True)
class Gl2ModpOutput:
    regime: Gl2Regime
    constituents: Tuple[str, ...]
    extension_note: Optional[str] = None


def classify_regime(p: int, q_mod_p: int) -> Gl2Regime:
    if q_mod_p % p == 1 % p:
        return Gl2Regime.Q_IS_ONE
    if q_mod_p % p == p - 1:
        return Gl2Regime.Q_IS_MINUS_ONE
    return Gl2Regime.BANAL


_CELLS = {
    (Gl2Regime.BANAL, Gl2Shape.SPLIT): (ST_TWISTED, DET_CHARACTER),
    (Gl2Regime.BANAL, Gl2Shape.NONSPLIT_CYC_BY_ONE): (ST_TWISTED,),
    (Gl2Regime.BANAL, Gl2Shape.NONSPLIT_ONE_BY_CYC): (ST_TWISTED,),
    (Gl2Regime.Q_IS_MINUS_ONE, Gl2Shape.SPLIT): (SMOOTH_PI_ONE, TRIVIAL, DET_CHARACTER),
    (Gl2Regime.Q_IS_MINUS_ONE, Gl2Shape.NONSPLIT_CYC_BY_ONE): (SMOOTH_PI_ONE, DET_CHARACTER),
    (Gl2Regime.Q_IS_MINUS_ONE, Gl2Shape.NONSPLIT_ONE_BY_CYC): (SMOOTH_PI_ONE, TRIVIAL),
    (Gl2Regime.Q_IS_ONE, Gl2Shape.SPLIT): (STEINBERG, TRIVIAL, TRIVIAL),
    (Gl2Regime.Q_IS_ONE, Gl2Shape.NONSPLIT_CYC_BY_ONE): (STEINBERG, TRIVIAL),
    (Gl2Regime.Q_IS_ONE, Gl2Shape.NONSPLIT_ONE_BY_CYC): (STEINBERG, TRIVIAL),
}


def gl2_modp_table(inp: Gl2ModpInput) -> Gl2ModpOutput:
    """Constituent list for one cell of the two-dimensional mod-p table."""
    regime = classify_regime(inp.p, inp.q_mod_p)
    if inp.shape is Gl2Shape.SUB_GENERIC:
        return Gl2ModpOutput(regime, (UNIQUE_GENERIC,))
    constituents = _CELLS[(regime, inp.shape)]
    note = EXTENSION_NOTE if regime is Gl2Regime.Q_IS_ONE and inp.shape in (
        Gl2Shape.NONSPLIT_CYC_BY_ONE, Gl2Shape.NONSPLIT_ONE_BY_CYC
    ) else None
    return Gl2ModpOutput(regime, constituents, note)


def length_bound(n: int) -> int:
    """Crude bound on constituent counts in rank n: b(1)=1, b(n)=(2^n-1)b(n-1)."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"rank must be a positive integer, got {n!r}")
    acc = 1
    for k in range(2, n + 1):
        acc *= (1 << k) - 1
    return acc
