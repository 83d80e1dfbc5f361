"""Segment combinatorics and the dictionary to twisted operator pairs.

A segment is a run of consecutive positions on a cuspidal line.  Lines come
in two flavours, told apart by their identifier string:

* free lines, identified by a nonzero rational written "a" or "a/b"; the
  position set is all of Z and the identifier is the eigenvalue sitting at
  position 0,
* cyclic lines, identified as "F{p}/{qbar}/{anchor}"; positions live in
  Z/o where o is the multiplicative order of qbar mod p, and the anchor is
  the smallest residue on the whole multiplicative cycle, whether or not
  that residue actually occurs as an eigenvalue.

A multisegment is a finite multiset of segments, stored in a canonical
sort order so equal multisets compare equal.  The partial order on
multisegments with a common support is decided through window counts: a
multisegment is lower exactly when every window is covered at least as
often.  On free lines the same order is generated by the classical
elementary operation (replace a linked pair by union and intersection),
which is what the brute-force checker walks.

The dictionary maps a semisimple twisted pair to a multisegment by reading
off eigenvalue chains and ranks of composite maps between eigenspaces, and
maps a multisegment back by writing one companion block per segment.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from .errors import (
    CyclicLineError,
    DomainError,
    InternalInvariantError,
    NonSplitError,
    SearchBoundError,
    WraparoundError,
)
from .exact import (
    Field,
    Fp,
    Matrix,
    PrimeField,
    QQ,
    is_prime,
    is_semisimple,
    multiplicative_order,
    prime_field_roots,
    rational_roots,
)
from .weildeligne import WeilDeligneRep

__all__ = [
    "CuspidalLabel",
    "Segment",
    "Multisegment",
    "TwistedMultisegment",
    "GradedNilpotentPair",
    "cycle_line_id",
    "line_modulus",
    "linked",
    "precedes",
    "order_multisegment",
    "elementary_operation",
    "window_count",
    "leq",
    "leq_bruteforce",
    "down_set",
    "is_primitive",
    "supercuspidal_support",
    "generic_from_support",
    "graded_pair",
    "twist",
    "wd_to_multisegment",
    "multisegment_to_wd",
]


_CYCLE_RE = re.compile(r"^F(\d+)/(\d+)/(\d+)$")


def _cycle_of(residue: int, qbar: int, p: int) -> List[int]:
    orbit = [residue]
    cur = residue * qbar % p
    while cur != residue:
        orbit.append(cur)
        cur = cur * qbar % p
    return orbit


def cycle_line_id(p: int, qbar: int, residue: int) -> str:
    """Canonical identifier of the cyclic line through a nonzero residue."""
    if not is_prime(p):
        raise DomainError(f"cyclic line modulus must be prime, got {p}")
    qbar %= p
    residue %= p
    if qbar == 0 or residue == 0:
        raise DomainError("cyclic line data must be units mod p")
    return f"F{p}/{qbar}/{min(_cycle_of(residue, qbar, p))}"


@dataclass(frozen=True)
class CuspidalLabel:
    """Parsed form of a line identifier; modulus 0 means a free line."""

    raw: str
    modulus: int
    anchor: Optional[Fraction]
    p: Optional[int]
    qbar: Optional[int]
    residue: Optional[int]

    @property
    def is_cyclic(self) -> bool:
        return self.modulus > 0

    @staticmethod
    def parse(line: str) -> "CuspidalLabel":
        return _parse_label(line)


@lru_cache(maxsize=4096)
def _parse_label(line: str) -> CuspidalLabel:
    if not isinstance(line, str):
        raise DomainError(f"line identifier must be a string, got {line!r}")
    m = _CYCLE_RE.match(line)
    if m:
        p, qbar, residue = int(m.group(1)), int(m.group(2)), int(m.group(3))
        if not is_prime(p):
            raise DomainError(f"cyclic line modulus must be prime in {line!r}")
        if not (0 < qbar < p and 0 < residue < p):
            raise DomainError(f"cyclic line data must be units mod p in {line!r}")
        if min(_cycle_of(residue, qbar, p)) != residue:
            raise DomainError(
                f"cyclic line {line!r} is not canonical; "
                f"expected {cycle_line_id(p, qbar, residue)}"
            )
        o = multiplicative_order(qbar, p)
        return CuspidalLabel(line, o, None, p, qbar, residue)
    anchor = QQ.decode(line)
    if anchor == 0:
        raise DomainError("free line anchor must be a nonzero rational")
    if str(anchor) != line:
        # line identifiers are dictionary keys, so one rational gets one
        # spelling; entries inside matrices stay free-form
        raise DomainError(
            f"free line {line!r} is not canonical; expected {str(anchor)!r}"
        )
    return CuspidalLabel(line, 0, anchor, None, None, None)


def line_modulus(line: str) -> int:
    """0 for a free line, the cycle length for a cyclic one."""
    return _parse_label(line).modulus


@dataclass(frozen=True)
class Segment:
    """A run of `len` consecutive positions starting at `start` on `line`."""

    line: str
    start: int
    len: int

    def __post_init__(self) -> None:
        label = _parse_label(self.line)
        if not isinstance(self.start, int) or isinstance(self.start, bool):
            raise DomainError(f"segment start must be an integer, got {self.start!r}")
        if not isinstance(self.len, int) or isinstance(self.len, bool) or self.len < 1:
            raise DomainError(f"segment length must be a positive integer, got {self.len!r}")
        if label.is_cyclic:
            o = label.modulus
            if not (0 <= self.start < o):
                raise DomainError(
                    f"cyclic segment start must lie in [0,{o}), got {self.start}"
                )
            if self.len > o:
                raise WraparoundError(
                    f"segment of length {self.len} wraps a cycle of length {o}"
                )

    @property
    def end(self) -> int:
        """Last covered position; on a cyclic line this is a lift, not a residue."""
        return self.start + self.len - 1

    def covers(self, pos: int) -> bool:
        o = line_modulus(self.line)
        if o == 0:
            return self.start <= pos <= self.end
        j = (pos - self.start) % o
        return j <= self.len - 1


def _storage_key(seg: Segment) -> Tuple[str, int, int]:
    return (seg.line, -seg.start, -seg.len)


@dataclass(frozen=True, init=False)
class Multisegment:
    """Finite multiset of segments in canonical storage order."""

    segments: Tuple[Segment, ...]

    def __init__(self, segments: Iterable[Segment]) -> None:
        segs = list(segments)
        for s in segs:
            if not isinstance(s, Segment):
                raise DomainError(f"multisegment entries must be segments, got {s!r}")
        object.__setattr__(self, "segments", tuple(sorted(segs, key=_storage_key)))

    def __iter__(self):
        return iter(self.segments)

    def __len__(self) -> int:
        return len(self.segments)

    def lines(self) -> Tuple[str, ...]:
        return tuple(sorted({s.line for s in self.segments}))

    def on_line(self, line: str) -> Tuple[Segment, ...]:
        return tuple(s for s in self.segments if s.line == line)

    def total_length(self) -> int:
        return sum(s.len for s in self.segments)


@dataclass(frozen=True)
class TwistedMultisegment:
    """Multisegment plus the half-integral normalization offset.

    The offset is pinned to -(total length - 1), the value the normalized
    dictionary always produces, and 0 for the empty multisegment; anything
    else is rejected because it cannot come from an untwisted exact pair.
    """

    ms: Multisegment
    half_twist: int

    def __post_init__(self) -> None:
        total = self.ms.total_length()
        expected = -(total - 1) if total else 0
        if self.half_twist != expected:
            raise DomainError(
                f"half twist must be {expected} for total length {total}, "
                f"got {self.half_twist}"
            )


def twist(tms: TwistedMultisegment, k: int) -> TwistedMultisegment:
    """Shift every segment k positions along its line (mod o on cycles)."""
    out = []
    for s in tms.ms:
        o = line_modulus(s.line)
        start = s.start + k if o == 0 else (s.start + k) % o
        out.append(Segment(s.line, start, s.len))
    return TwistedMultisegment(Multisegment(out), tms.half_twist)


# ---------------------------------------------------------------- order


def linked(a: Segment, b: Segment) -> bool:
    """Neither contains the other and the union is again a segment."""
    if a.line != b.line:
        return False
    if line_modulus(a.line) > 0:
        raise CyclicLineError(
            "linkage is only defined on free lines; got " + a.line
        )
    if (a.start <= b.start and b.end <= a.end) or (b.start <= a.start and a.end <= b.end):
        return False
    return max(a.start, b.start) <= min(a.end, b.end) + 1


def precedes(a: Segment, b: Segment) -> bool:
    """Linked and a starts strictly earlier; the pair admits the merge move."""
    return linked(a, b) and a.start < b.start


def order_multisegment(ms: Multisegment) -> Tuple[Segment, ...]:
    """Emission order: no segment precedes any later one."""
    return tuple(sorted(ms.segments, key=lambda s: (-s.start, -s.len, s.line)))


def elementary_operation(ms: Multisegment, i: int, j: int) -> Multisegment:
    """Replace the preceding pair (i, j) by union and intersection.

    Indices refer to the canonical storage order.  The union always
    survives; the intersection is kept only when nonempty.  The move
    strictly descends in the partial order.
    """
    segs = ms.segments
    n = len(segs)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise DomainError(f"invalid segment indices ({i},{j}) for {n} segments")
    a, b = segs[i], segs[j]
    if not precedes(a, b):
        raise DomainError("segments are not a preceding linked pair")
    rest = [s for k, s in enumerate(segs) if k not in (i, j)]
    rest.append(Segment(a.line, a.start, b.end - a.start + 1))
    if b.start <= a.end:
        rest.append(Segment(a.line, b.start, a.end - b.start + 1))
    return Multisegment(rest)


def window_count(ms: Multisegment, line: str, a: int, i: int) -> int:
    """Number of segments on `line` covering the whole window [a, a+i]."""
    if i < 0:
        raise DomainError(f"window extent must be >= 0, got {i}")
    o = line_modulus(line)
    count = 0
    for s in ms.on_line(line):
        if o == 0:
            if s.start <= a and a + i <= s.end:
                count += 1
        else:
            j = (a - s.start) % o
            if j + i <= s.len - 1:
                count += 1
    return count


def supercuspidal_support(ms: Multisegment) -> Dict[str, Dict[int, int]]:
    """Multiset of covered positions, per line."""
    out: Dict[str, Counter] = {}
    for s in ms.segments:
        o = line_modulus(s.line)
        c = out.setdefault(s.line, Counter())
        for k in range(s.len):
            c[(s.start + k) % o if o else s.start + k] += 1
    return {line: dict(c) for line, c in out.items()}


def leq(lower: Multisegment, upper: Multisegment) -> bool:
    """Window-domination test for the partial order.

    Equal supports are required; given that, `lower` sits below `upper`
    exactly when every window of every line is covered at least as often
    in `lower` as in `upper`.
    """
    if supercuspidal_support(lower) != supercuspidal_support(upper):
        return False
    lines = set(lower.lines()) | set(upper.lines())
    for line in lines:
        o = line_modulus(line)
        segs = list(lower.on_line(line)) + list(upper.on_line(line))
        if o > 0:
            a_range = range(o)
            max_i = o - 1
        else:
            a_range = range(min(s.start for s in segs), max(s.end for s in segs) + 1)
            max_i = max(s.len for s in segs) - 1
        for a in a_range:
            for i in range(1, max_i + 1):
                if window_count(upper, line, a, i) > window_count(lower, line, a, i):
                    return False
    return True


def _successors(ms: Multisegment) -> Set[Multisegment]:
    segs = ms.segments
    out: Set[Multisegment] = set()
    for i in range(len(segs)):
        for j in range(len(segs)):
            if i != j and precedes(segs[i], segs[j]):
                out.add(elementary_operation(ms, i, j))
    return out


def down_set(ms: Multisegment, bound: int = 10) -> FrozenSet[Multisegment]:
    """Everything reachable downward by elementary operations, self included.

    `bound` caps the number of operation layers; free lines only, since the
    merge move is not defined on cycles.
    """
    seen: Set[Multisegment] = {ms}
    frontier: List[Multisegment] = [ms]
    for _ in range(bound):
        if not frontier:
            break
        nxt: List[Multisegment] = []
        for m in frontier:
            for succ in _successors(m):
                if succ not in seen:
                    seen.add(succ)
                    nxt.append(succ)
        frontier = nxt
    if frontier:
        raise SearchBoundError(
            f"descent did not close within {bound} operation layers"
        )
    return frozenset(seen)


def leq_bruteforce(lower: Multisegment, upper: Multisegment, bound: int = 10) -> bool:
    """Order test by explicit search, the independent cross-check for leq."""
    if lower == upper:
        return True
    seen: Set[Multisegment] = {upper}
    frontier: List[Multisegment] = [upper]
    for _ in range(bound):
        if not frontier:
            return False
        nxt: List[Multisegment] = []
        for m in frontier:
            for succ in _successors(m):
                if succ == lower:
                    return True
                if succ not in seen:
                    seen.add(succ)
                    nxt.append(succ)
        frontier = nxt
    if frontier:
        raise SearchBoundError(
            f"descent did not close within {bound} operation layers"
        )
    return False


def is_primitive(ms: Multisegment) -> bool:
    """No elementary operation applies; bottom of its support class."""
    segs = ms.segments
    for i in range(len(segs)):
        for j in range(len(segs)):
            if i != j and precedes(segs[i], segs[j]):
                return False
    return True


def generic_from_support(support: Mapping[str, Mapping[int, int]]) -> Multisegment:
    """Greedy longest-run multisegment for a given support.

    Runs are peeled off starting from the smallest available position of
    each line, which on free lines yields the unique multisegment at the
    bottom of the order for that support.  On cyclic lines the same scan
    order serves as the canonical choice; runs there are capped at the
    cycle length.
    """
    out: List[Segment] = []
    for line in sorted(support):
        o = line_modulus(line)
        left = Counter()
        for pos, mult in support[line].items():
            if not isinstance(pos, int) or isinstance(pos, bool):
                raise DomainError(f"support positions must be integers, got {pos!r}")
            if not isinstance(mult, int) or mult < 0:
                raise DomainError(f"support multiplicities must be >= 0, got {mult!r}")
            if o and not (0 <= pos < o):
                raise DomainError(
                    f"support position {pos} outside the cycle [0,{o}) of {line!r}"
                )
            if mult:
                left[pos] = mult
        while left:
            a = min(left)
            length = 0
            while True:
                if o and length >= o:
                    break
                pos = (a + length) % o if o else a + length
                if left.get(pos, 0) <= 0:
                    break
                left[pos] -= 1
                if left[pos] == 0:
                    del left[pos]
                length += 1
            out.append(Segment(line, a, length))
    return Multisegment(out)


# ------------------------------------------------- graded pair bridge


@dataclass(frozen=True)
class GradedNilpotentPair:
    """Dimension vector and chain maps of a multisegment on one line.

    For a free line the pieces sit at offset..offset+len(dims)-1 and maps[t]
    sends piece t to piece t+1.  For a cyclic line the offset is 0, dims has
    length o, and the last map wraps around to piece 0.
    """

    line: str
    modulus: int
    offset: int
    dims: Tuple[int, ...]
    maps: Tuple[Matrix, ...]

    def window_rank(self, a: int, i: int) -> int:
        """Rank of the composite of i consecutive maps starting at piece a."""
        if i < 0:
            raise DomainError(f"window extent must be >= 0, got {i}")
        if self.modulus:
            a %= self.modulus
            idx = a
        else:
            if a < self.offset or a + i > self.offset + len(self.dims) - 1:
                return 0
            idx = a - self.offset
        if i == 0:
            return self.dims[idx]
        comp = Matrix.identity(QQ, self.dims[idx])
        for t in range(i):
            step = (idx + t) % self.modulus if self.modulus else idx + t
            comp = self.maps[step] * comp
        return comp.rank()


def graded_pair(ms: Multisegment, line: str) -> GradedNilpotentPair:
    """Basis-explicit graded pair whose composite ranks are window counts."""
    segs = ms.on_line(line)
    o = line_modulus(line)
    if not segs:
        return GradedNilpotentPair(line, o, 0, tuple([0] * o), tuple(
            Matrix.zeros(QQ, 0, 0) for _ in range(o)
        ) if o else ())
    if o:
        offset = 0
        positions = list(range(o))
    else:
        offset = min(s.start for s in segs)
        positions = list(range(offset, max(s.end for s in segs) + 1))
    slots = [
        [k for k, s in enumerate(segs) if s.covers(pos)] for pos in positions
    ]
    dims = tuple(len(sl) for sl in slots)
    maps: List[Matrix] = []
    nmaps = len(positions) if o else len(positions) - 1
    for t in range(nmaps):
        src = slots[t]
        dst = slots[(t + 1) % len(positions)]
        ent = []
        for segr in dst:
            for segc in src:
                if segr != segc:
                    ent.append(QQ.zero)
                    continue
                # a slot survives into the next piece only while its own
                # segment has room left; covering both positions is not
                # enough once a cyclic segment closes up on itself
                s = segs[segc]
                j = (positions[t] - s.start) % o if o else positions[t] - s.start
                ent.append(QQ.one if j + 1 <= s.len - 1 else QQ.zero)
        maps.append(Matrix(QQ, len(dst), len(src), ent))
    return GradedNilpotentPair(line, o, offset, dims, tuple(maps))


# ------------------------------------------------------ the dictionary


def _q_power_exponent(ratio: Fraction, q: int) -> Optional[int]:
    # ratio == q**e for some integer e, or None
    if ratio <= 0:
        return None
    e = 0
    r = ratio
    while r > 1:
        r /= q
        e += 1
    while r < 1:
        r *= q
        e -= 1
    return e if r == 1 else None


def _rational_lines(roots: Dict[Fraction, int], q: int):
    # group eigenvalues into q-power chains, anchored at the
    # (numerator, denominator)-lexicographic minimum of each chain
    lines: List[Tuple[Fraction, Dict[int, int]]] = []
    for lam in sorted(roots, key=lambda f: (f.numerator, f.denominator)):
        for anchor, posmap in lines:
            e = _q_power_exponent(lam / anchor, q)
            if e is not None:
                posmap[-e] = roots[lam]
                break
        else:
            lines.append((lam, {0: roots[lam]}))
    return [(str(anchor), 0, anchor, posmap) for anchor, posmap in lines]


def _cyclic_lines(roots: Dict[Fp, int], q: int, p: int):
    qbar = q % p
    o = multiplicative_order(qbar, p)
    grouped: Dict[int, Dict[int, int]] = {}
    for lam in sorted(roots, key=lambda x: x.val):
        anchor = min(_cycle_of(lam.val, qbar, p))
        posmap = grouped.setdefault(anchor, {})
        cur = anchor
        inv = pow(qbar, -1, p)
        for k in range(o):
            if cur == lam.val:
                posmap[k] = roots[lam]
                break
            cur = cur * inv % p
        else:  # pragma: no cover - the cycle contains lam by construction
            raise InternalInvariantError("eigenvalue escaped its own cycle")
    return [
        (f"F{p}/{qbar}/{anchor}", o, Fp(anchor, p), posmap)
        for anchor, posmap in sorted(grouped.items())
    ]


def _line_to_segments(
    rep: WeilDeligneRep, line: str, o: int, anchor, posmap: Dict[int, int]
) -> List[Segment]:
    field = rep.field
    n = rep.dim
    qs = field.coerce(rep.q)
    ident = Matrix.identity(field, n)

    if o:
        lo, hi = 0, o - 1
    else:
        lo, hi = min(posmap), max(posmap)
    npos = hi - lo + 1

    bases: List[Matrix] = []
    # walk eigenvalues anchor * q^-k down the position range
    eig = anchor
    for _ in range(lo, 0):
        eig = eig * qs
    for _ in range(0, lo):
        eig = eig / qs
    cur = eig
    for k in range(lo, hi + 1):
        if k - lo > 0:
            cur = cur / qs
        if posmap.get(k, 0):
            b = (rep.phi - cur * ident).nullspace()
            if b.ncols != posmap[k]:
                raise InternalInvariantError(
                    "eigenspace dimension disagrees with root multiplicity"
                )
        else:
            b = Matrix.zeros(field, n, 0)
        bases.append(b)

    maps: List[Matrix] = []
    nmaps = npos if o else npos - 1
    for t in range(nmaps):
        src = bases[t]
        dst = bases[(t + 1) % npos]
        rhs = rep.nil * src
        if dst.ncols == 0:
            if not rhs.is_zero():
                raise InternalInvariantError(
                    "monodromy leaked outside the eigenvalue chain"
                )
            maps.append(Matrix.zeros(field, 0, src.ncols))
        else:
            maps.append(dst.solve(rhs))
    if not o:
        tail = rep.nil * bases[-1]
        if not tail.is_zero():
            raise InternalInvariantError(
                "monodromy leaked past the top of the eigenvalue chain"
            )

    dims = [b.ncols for b in bases]

    def wrank(a: int, i: int) -> int:
        # rank of i consecutive chain maps starting at position index a
        if not o and (a < 0 or a + i > npos - 1):
            return 0
        if o:
            a %= o
        if i == 0:
            return dims[a]
        comp = Matrix.identity(rep.field, dims[a])
        for t in range(i):
            comp = maps[(a + t) % npos if o else a + t] * comp
        return comp.rank()

    if o:
        for a in range(o):
            if wrank(a, o) != 0:
                raise WraparoundError(
                    "monodromy survives a full cycle; the pair has no "
                    "segment presentation on this line"
                )

    segs: List[Segment] = []
    max_len = o if o else npos
    for a_idx in range(npos):
        for length in range(1, max_len + 1):
            if o:
                c = (
                    wrank(a_idx, length - 1)
                    - wrank(a_idx - 1, length)
                    - (wrank(a_idx, length) if length < o else 0)
                    + (wrank(a_idx - 1, length + 1) if length + 1 <= o else 0)
                )
            else:
                c = (
                    wrank(a_idx, length - 1)
                    - wrank(a_idx - 1, length)
                    - wrank(a_idx, length)
                    + wrank(a_idx - 1, length + 1)
                )
            if c < 0:
                raise InternalInvariantError("negative segment multiplicity")
            start = a_idx if o else lo + a_idx
            segs.extend(Segment(line, start, length) for _ in range(c))
    return segs


def wd_to_multisegment(rep: WeilDeligneRep) -> TwistedMultisegment:
    """Read a semisimple twisted pair off as a twisted multisegment.

    Requires split, semisimple phi; pass through frobenius_semisimplify
    first if the input might carry a unipotent part.  Eigenvalues are
    grouped into q-power chains, one line each, and segment multiplicities
    drop out of ranks of composite eigenspace maps by inclusion-exclusion.
    """
    n = rep.dim
    if n == 0:
        return TwistedMultisegment(Multisegment([]), 0)
    if not is_semisimple(rep.phi):
        raise DomainError(
            "the invertible operator is not semisimple; "
            "apply frobenius_semisimplify first"
        )
    cp = rep.phi.charpoly()
    if rep.field.characteristic == 0:
        roots = rational_roots(cp)
    else:
        roots = prime_field_roots(cp)
    if sum(roots.values()) != n:
        raise NonSplitError(
            "characteristic polynomial does not split over the coefficient field"
        )
    if rep.field.characteristic == 0:
        lines = _rational_lines(roots, rep.q)
    else:
        lines = _cyclic_lines(roots, rep.q, rep.field.characteristic)
    segs: List[Segment] = []
    for line, o, anchor, posmap in lines:
        segs.extend(_line_to_segments(rep, line, o, anchor, posmap))
    if sum(s.len for s in segs) != n:
        raise InternalInvariantError(
            "segment lengths do not account for the full dimension"
        )
    return TwistedMultisegment(Multisegment(segs), -(n - 1))


def _infer_field(labels: Sequence[CuspidalLabel], q: int) -> Field:
    ps = {lab.p for lab in labels if lab.is_cyclic}
    if not ps:
        return QQ
    if len(ps) > 1 or any(not lab.is_cyclic for lab in labels):
        raise DomainError("cannot mix cyclic lines of different moduli with free lines")
    p = ps.pop()
    for lab in labels:
        if lab.qbar != q % p:
            raise DomainError(
                f"line {lab.raw!r} was built with residue size {lab.qbar} mod {p}, "
                f"but q = {q} reduces to {q % p}"
            )
    return PrimeField(p)


def multisegment_to_wd(tms: TwistedMultisegment, q: int) -> WeilDeligneRep:
    """Companion-block realization: one indecomposable block per segment."""
    labels = [_parse_label(s.line) for s in tms.ms]
    field = _infer_field(labels, q)
    if not len(tms.ms):
        return WeilDeligneRep(
            field, q, Matrix.identity(field, 0), Matrix.zeros(field, 0, 0)
        )
    qs = field.coerce(q)
    phis: List[Matrix] = []
    nils: List[Matrix] = []
    for seg, lab in zip(tms.ms.segments, labels):
        if lab.is_cyclic:
            eig = field.coerce(lab.residue)
        else:
            eig = field.coerce(lab.anchor)
        for _ in range(0, seg.start):
            eig = eig / qs
        for _ in range(seg.start, 0):
            eig = eig * qs
        diag = []
        cur = eig
        for k in range(seg.len):
            if k:
                cur = cur / qs
            diag.append(cur)
        phis.append(Matrix.diagonal(field, diag))
        ent = [field.zero] * (seg.len * seg.len)
        for i in range(seg.len - 1):
            ent[(i + 1) * seg.len + i] = field.one
        nils.append(Matrix(field, seg.len, seg.len, ent))
    return WeilDeligneRep(
        field, q, Matrix.block_diag(phis), Matrix.block_diag(nils)
    )
