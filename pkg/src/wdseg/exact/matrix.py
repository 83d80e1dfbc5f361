"""Exact dense matrices over a tagged coefficient field.

Entries live in a flat tuple, row major, and every constructor coerces
through the field tag so a matrix can never hold mixed scalar types.
Matrices are immutable and hashable.  Zero-width shapes (n x 0, 0 x n) are
legal and show up naturally as empty eigenspace bases, so the elimination
routines are written to tolerate them instead of special-casing callers.

The characteristic polynomial uses the Berkowitz algorithm.  It is division
free, so it is exact over the rationals and correct over prime fields of any
characteristic, including ones small enough that fraction-free elimination
tricks would divide by zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from ..errors import DomainError, SingularError
from .fields import Field, Fp, Scalar
from .poly import Polynomial

__all__ = ["Matrix"]


class Matrix:
    """Immutable exact matrix; all arithmetic stays in the coefficient field."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: Field, nrows: int, ncols: int, entries: Sequence) -> None:
        if nrows < 0 or ncols < 0:
            raise DomainError(f"negative shape {nrows}x{ncols}")
        flat = tuple(field.coerce(e) for e in entries)
        if len(flat) != nrows * ncols:
            raise DomainError(
                f"shape {nrows}x{ncols} wants {nrows * ncols} entries, got {len(flat)}"
            )
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "entries", flat)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Matrix is immutable")

    # construction helpers

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DomainError("ragged rows")
        return cls(field, nrows, ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(
            field, n, n,
            [field.one if i == j else field.zero for i in range(n) for j in range(n)],
        )

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        return cls(field, nrows, ncols, [field.zero] * (nrows * ncols))

    @classmethod
    def diagonal(cls, field: Field, diag: Sequence) -> "Matrix":
        n = len(diag)
        out = [field.zero] * (n * n)
        for i, d in enumerate(diag):
            out[i * n + i] = field.coerce(d)
        return cls(field, n, n, out)

    @classmethod
    def from_columns(cls, field: Field, nrows: int, cols: Sequence[Sequence]) -> "Matrix":
        ncols = len(cols)
        out = [field.zero] * (nrows * ncols)
        for j, col in enumerate(cols):
            if len(col) != nrows:
                raise DomainError("column length does not match row count")
            for i, e in enumerate(col):
                out[i * ncols + j] = field.coerce(e)
        return cls(field, nrows, ncols, out)

    @classmethod
    def block_diag(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        if not blocks:
            raise DomainError("block_diag needs at least one block")
        field = blocks[0].field
        for b in blocks:
            if b.field != field:
                raise DomainError("block_diag blocks live over different fields")
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        out = [field.zero] * (n * m)
        ro = co = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[(ro + i) * m + (co + j)] = b[i, j]
            ro += b.nrows
            co += b.ncols
        return cls(field, n, m, out)

    # access

    def __getitem__(self, key: Tuple[int, int]) -> Scalar:
        i, j = key
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"({i},{j}) outside {self.nrows}x{self.ncols}")
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def column(self, j: int) -> Tuple[Scalar, ...]:
        return tuple(self.entries[i * self.ncols + j] for i in range(self.nrows))

    def rows(self) -> List[List[Scalar]]:
        return [list(self.row(i)) for i in range(self.nrows)]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(e == z for e in self.entries)

    # structural ops

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.ncols, self.nrows,
            [self.entries[i * self.ncols + j]
             for j in range(self.ncols) for i in range(self.nrows)],
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DomainError("hstack row mismatch")
        self._match(other)
        rows = []
        for i in range(self.nrows):
            rows.append(list(self.row(i)) + list(other.row(i)))
        return Matrix.from_rows(self.field, rows) if rows else Matrix(
            self.field, 0, self.ncols + other.ncols, []
        )

    def map_entries(self, fn: Callable, field: Optional[Field] = None) -> "Matrix":
        target = field if field is not None else self.field
        return Matrix(
            target, self.nrows, self.ncols, [fn(e) for e in self.entries]
        )

    def _match(self, other: "Matrix") -> None:
        if self.field != other.field:
            raise DomainError("matrices live over different fields")

    # arithmetic

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._match(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DomainError("shape mismatch in addition")
        return Matrix(
            self.field, self.nrows, self.ncols,
            [a + b for a, b in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._match(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DomainError("shape mismatch in subtraction")
        return Matrix(
            self.field, self.nrows, self.ncols,
            [a - b for a, b in zip(self.entries, other.entries)],
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, self.nrows, self.ncols, [-e for e in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            self._match(other)
            if self.ncols != other.nrows:
                raise DomainError(
                    f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
                )
            z = self.field.zero
            out = [z] * (self.nrows * other.ncols)
            for i in range(self.nrows):
                base = i * self.ncols
                for k in range(self.ncols):
                    a = self.entries[base + k]
                    if a == z:
                        continue
                    obase = k * other.ncols
                    tbase = i * other.ncols
                    for j in range(other.ncols):
                        out[tbase + j] = out[tbase + j] + a * other.entries[obase + j]
            return Matrix(self.field, self.nrows, other.ncols, out)
        c = self.field.coerce(other)
        return Matrix(
            self.field, self.nrows, self.ncols, [e * c for e in self.entries]
        )

    def __rmul__(self, other) -> "Matrix":
        c = self.field.coerce(other)
        return Matrix(
            self.field, self.nrows, self.ncols, [c * e for e in self.entries]
        )

    def __pow__(self, exp: int) -> "Matrix":
        if not self.is_square:
            raise DomainError("only square matrices have powers")
        if exp < 0:
            return self.inverse() ** (-exp)
        acc = Matrix.identity(self.field, self.nrows)
        base = self
        e = exp
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # elimination

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        """Reduced row echelon form and the pivot column indices."""
        field = self.field
        z, one = field.zero, field.one
        rows = self.rows()
        pivots: List[int] = []
        pr = 0
        for col in range(self.ncols):
            sel = None
            for r in range(pr, self.nrows):
                if rows[r][col] != z:
                    sel = r
                    break
            if sel is None:
                continue
            rows[pr], rows[sel] = rows[sel], rows[pr]
            inv = one / rows[pr][col]
            rows[pr] = [e * inv for e in rows[pr]]
            for r in range(self.nrows):
                if r != pr and rows[r][col] != z:
                    f = rows[r][col]
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[pr])]
            pivots.append(col)
            pr += 1
            if pr == self.nrows:
                break
        flat = [e for row in rows for e in row]
        return Matrix(field, self.nrows, self.ncols, flat), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> Scalar:
        if not self.is_square:
            raise DomainError("determinant needs a square matrix")
        field = self.field
        z = field.zero
        n = self.nrows
        rows = self.rows()
        sign = 1
        acc = field.one
        for col in range(n):
            sel = None
            for r in range(col, n):
                if rows[r][col] != z:
                    sel = r
                    break
            if sel is None:
                return z
            if sel != col:
                rows[col], rows[sel] = rows[sel], rows[col]
                sign = -sign
            piv = rows[col][col]
            acc = acc * piv
            inv = field.one / piv
            for r in range(col + 1, n):
                if rows[r][col] != z:
                    f = rows[r][col] * inv
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        return acc if sign == 1 else -acc

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise DomainError("only square matrices can be inverted")
        n = self.nrows
        aug = self.hstack(Matrix.identity(self.field, n))
        red, pivots = aug.rref()
        if len(pivots) < n or any(p >= n for p in pivots):
            raise SingularError("matrix is singular")
        rows = [list(red.row(i))[n:] for i in range(n)]
        return Matrix.from_rows(self.field, rows)

    def nullspace(self) -> "Matrix":
        """Basis of the right kernel, returned as the columns of an n x k matrix."""
        field = self.field
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        cols = []
        for fcol in free:
            v = [field.zero] * self.ncols
            v[fcol] = field.one
            for r, pcol in enumerate(pivots):
                v[pcol] = -red[r, fcol]
            cols.append(v)
        return Matrix.from_columns(field, self.ncols, cols)

    def solve(self, rhs: "Matrix") -> "Matrix":
        """Some X with self @ X = rhs; raises SingularError if none exists."""
        if rhs.nrows != self.nrows:
            raise DomainError("right-hand side has the wrong height")
        self._match(rhs)
        field = self.field
        aug = self.hstack(rhs)
        red, pivots = aug.rref()
        for p in pivots:
            if p >= self.ncols:
                raise SingularError("inconsistent linear system")
        out = [[field.zero] * rhs.ncols for _ in range(self.ncols)]
        for r, pcol in enumerate(pivots):
            for j in range(rhs.ncols):
                out[pcol][j] = red[r, self.ncols + j]
        return Matrix(
            field, self.ncols, rhs.ncols, [e for row in out for e in row]
        )

    # characteristic polynomial

    def charpoly(self) -> Polynomial:
        """Monic characteristic polynomial det(t*I - self), by Berkowitz.

        Each step extends the leading principal block by one row and column;
        the coefficient vector transforms through a lower-triangular Toeplitz
        convolution built from -R M^j C Krylov products.  No divisions occur.
        """
        if not self.is_square:
            raise DomainError("characteristic polynomial needs a square matrix")
        field = self.field
        n = self.nrows
        if n == 0:
            return Polynomial(field, [field.one])
        a = self.rows()
        coeffs = [field.one]  # descending, char poly of the empty block
        for k in range(n):
            items = [field.one, -a[k][k]]
            if k:
                r = a[k][:k]
                v = [a[i][k] for i in range(k)]
                for _ in range(k):
                    items.append(-sum(
                        (ri * vi for ri, vi in zip(r, v)), field.zero
                    ))
                    v = [
                        sum((a[i][j] * v[j] for j in range(k)), field.zero)
                        for i in range(k)
                    ]
            nxt = [field.zero] * (k + 2)
            for i in range(k + 2):
                acc = field.zero
                for j in range(min(i, k) + 1):
                    if i - j < len(items):
                        acc = acc + items[i - j] * coeffs[j]
                nxt[i] = acc
            coeffs = nxt
        return Polynomial(field, list(reversed(coeffs)))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(e) for e in self.row(i)) for i in range(self.nrows)
        )
        return f"Matrix({self.nrows}x{self.ncols}: {body})"
