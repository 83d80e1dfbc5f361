"""Shared oracles and generators for the test suite.

The oracles are deliberately independent reimplementations: cofactor
determinants, textbook Gaussian elimination, window counting straight off
the segment tuples.  Library results get checked against arithmetic that
shares no code with the library.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from wdseg import (
    Matrix,
    Multisegment,
    QQ,
    Segment,
    WeilDeligneRep,
    direct_sum,
    special_rep,
)

# ------------------------------------------------------------- oracles


def det_cofactor(rows):
    """Cofactor-expansion determinant; works for Fraction and Fp entries."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def rank_gauss_qq(rows: Sequence[Sequence[Fraction]]) -> int:
    """Row-echelon rank over the rationals, written from scratch."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def rank_gauss_fp(rows: Sequence[Sequence[int]], p: int) -> int:
    """Row-echelon rank mod p, integers only."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    col = 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] % p:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def window_count_oracle(ms: Multisegment, line: str, a: int, i: int, o: int) -> int:
    """Count segments containing the window of extent i at position a.

    Free lines (o == 0): the window is [a, a+i].  Cyclic lines: the window
    walks i steps along the cycle; a segment contains it when the window
    fits inside the segment's own run.
    """
    count = 0
    for s in ms.on_line(line):
        if o == 0:
            if s.start <= a and a + i <= s.start + s.len - 1:
                count += 1
        else:
            j = (a - s.start) % o
            if j + i <= s.len - 1:
                count += 1
    return count


# --------------------------------------------- multisegment enumeration


def free_windows(max_pos: int, max_len: Optional[int] = None) -> List[Tuple[int, int]]:
    """All (start, len) windows inside [0, max_pos]."""
    top = max_pos + 1
    out = []
    for s in range(top):
        for l in range(1, top - s + 1):
            if max_len is None or l <= max_len:
                out.append((s, l))
    return out


def enumerate_free_multisegments(
    max_pos: int, max_total: int, line: str = "1"
) -> List[Multisegment]:
    """Every multisegment on one free line with windows in [0, max_pos]
    and total length <= max_total, the empty one included."""
    windows = free_windows(max_pos)
    found: List[Multisegment] = []

    def rec(idx: int, total: int, acc: List[Tuple[int, int]]) -> None:
        found.append(Multisegment(Segment(line, s, l) for s, l in acc))
        for k in range(idx, len(windows)):
            s, l = windows[k]
            if total + l <= max_total:
                acc.append(windows[k])
                rec(k, total + l, acc)
                acc.pop()

    rec(0, 0, [])
    return found


def support_key(ms: Multisegment) -> Tuple[Tuple[int, int], ...]:
    supp: Counter = Counter()
    for s in ms:
        for x in range(s.start, s.start + s.len):
            supp[x] += 1
    return tuple(sorted(supp.items()))


def partitions_of_support(
    positions: Dict[int, int], line: str = "1"
) -> List[Multisegment]:
    """Every multisegment on one free line with exactly this support."""
    out: List[Multisegment] = []

    def rec(left: Counter, acc: List[Segment]) -> None:
        if not left:
            out.append(Multisegment(list(acc)))
            return
        a = min(left)
        # the first segment to use position a can have any length the
        # remaining multiplicities allow
        length = 0
        while left.get(a + length, 0) > 0:
            left[a + length] -= 1
            if left[a + length] == 0:
                del left[a + length]
            length += 1
            acc.append(Segment(line, a, length))
            rec(left, acc)
            acc.pop()
        for back in range(length):
            left[a + back] += 1

    rec(Counter({k: v for k, v in positions.items() if v}), [])
    # partitions can repeat when equal segments arise in different orders
    seen = set()
    unique = []
    for ms in out:
        if ms not in seen:
            seen.add(ms)
            unique.append(ms)
    return unique


# ----------------------------------------------------- random matrices


ENTRY_POOL = [Fraction(k) for k in range(-3, 4)] + [
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(1, 3),
    Fraction(-1, 3),
]


def random_matrix(rng: random.Random, n: int, pool=ENTRY_POOL) -> Matrix:
    return Matrix.from_rows(
        QQ, [[rng.choice(pool) for _ in range(n)] for _ in range(n)]
    )


def random_invertible(rng: random.Random, n: int, pool=ENTRY_POOL) -> Matrix:
    while True:
        m = random_matrix(rng, n, pool)
        if m.det() != 0:
            return m


def random_unimodular(rng: random.Random, n: int) -> Matrix:
    """Product of integer shears; det 1 and an integer inverse."""
    m = Matrix.identity(QQ, n)
    if n < 2:
        return m
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        rows = [
            [
                QQ.one if r == cidx else (QQ.coerce(c) if (r, cidx) == (i, j) else QQ.zero)
                for cidx in range(n)
            ]
            for r in range(n)
        ]
        m = m * Matrix.from_rows(QQ, rows)
    return m


def random_strict_upper(rng: random.Random, n: int, pool=None) -> Matrix:
    pool = pool if pool is not None else [-2, -1, 0, 0, 1, 2]
    rows = [
        [QQ.coerce(rng.choice(pool)) if j > i else QQ.zero for j in range(n)]
        for i in range(n)
    ]
    return Matrix.from_rows(QQ, rows)


def random_unipotent(rng: random.Random, n: int) -> Matrix:
    u = Matrix.identity(QQ, n) + random_strict_upper(rng, n)
    g = random_unimodular(rng, n)
    return g * u * g.inverse()


def p_unit_scalars(p: int) -> List[Fraction]:
    """Small nonzero rationals whose numerator and denominator avoid p."""
    out = []
    for num in range(-4, 5):
        for den in range(1, 5):
            if num and num % p and den % p:
                f = Fraction(num, den)
                if f not in out:
                    out.append(f)
    return out


def conjugate_rep(rep: WeilDeligneRep, g: Matrix) -> WeilDeligneRep:
    gi = g.inverse()
    return WeilDeligneRep(rep.field, rep.q, g * rep.phi * gi, g * rep.nil * gi)


def random_triangular_rep(
    rng: random.Random,
    q: int,
    n: int,
    scalars: Sequence[Fraction],
    p: Optional[int] = None,
) -> WeilDeligneRep:
    """Upper-triangular frobenius with zero monodromy.

    Diagonal entries are drawn so any two are either equal as rationals or,
    when p is given, distinct mod p; that keeps the semisimple part of the
    decomposition p-integral.
    """
    diag: List[Fraction] = []
    while len(diag) < n:
        cand = rng.choice(scalars)
        if p is None:
            diag.append(cand)
            continue
        ok = True
        for d in diag:
            if cand == d:
                continue
            diff = cand - d
            if diff.numerator % p == 0:
                ok = False
                break
        if ok:
            diag.append(cand)
    tri = Matrix.diagonal(QQ, diag) + random_strict_upper(rng, n)
    return WeilDeligneRep(QQ, q, tri, Matrix.zeros(QQ, n, n))


def random_block_rep(
    rng: random.Random,
    q: int,
    p: Optional[int] = None,
    max_dim: int = 4,
    max_chain: Optional[int] = None,
) -> WeilDeligneRep:
    """Direct sum of chain blocks and a triangular summand, conjugated.

    With p given, every scalar is a p-unit and the result reduces mod p
    cleanly; max_chain caps chain lengths (stay within the cycle length of
    q mod p to keep reductions wraparound-free).
    """
    scalars = p_unit_scalars(p) if p else [s for s in ENTRY_POOL if s != 0]
    chain_cap = max_chain if max_chain is not None else max_dim
    blocks: List[WeilDeligneRep] = []
    dim = 0
    while dim < max_dim:
        room = max_dim - dim
        if rng.random() < 0.4 and room >= 2:
            n = rng.randint(2, room)
            blocks.append(random_triangular_rep(rng, q, n, scalars, p))
            dim += n
        else:
            length = rng.randint(1, min(room, chain_cap))
            blocks.append(special_rep(rng.choice(scalars), length, q))
            dim += length
        if rng.random() < 0.3 and dim >= 1:
            break
    rep = blocks[0] if len(blocks) == 1 else direct_sum(*blocks)
    return conjugate_rep(rep, random_unimodular(rng, rep.dim))
