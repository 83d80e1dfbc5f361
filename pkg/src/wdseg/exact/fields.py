"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are immutable values supporting +, -, *, /, ** and ==:
``fractions.Fraction`` over the rationals, :class:`Fp` residues over a
prime field.  A :class:`Field` object tags every matrix and polynomial,
coerces raw input (ints, "a/b" strings, residues) into scalars, and
fixes the wire encoding: rationals travel as decimal-free strings,
prime-field elements as plain integers.

The number-theory helpers at the bottom use trial division for small
inputs and defer to sympy above that, so the common small-modulus paths
never pay the sympy import.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from ..errors import DomainError, FieldMismatchError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class Fp:
    """A residue modulo a prime p, with exact field arithmetic."""

    __slots__ = ("val", "p")

    def __init__(self, val: int, p: int):
        self.val = val % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(
                    f"mixed prime-field moduli {self.p} and {other.p}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Fp(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else Fp(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise DomainError(f"division by zero in GF({self.p})")
        return Fp(self.val * pow(o.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is None else o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if self.val == 0:
                raise DomainError(f"inverse of zero in GF({self.p})")
            return Fp(pow(pow(self.val, -1, self.p), -e, self.p), self.p)
        return Fp(pow(self.val, e, self.p), self.p)

    def __neg__(self):
        return Fp(-self.val, self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int) and not isinstance(other, bool):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return f"{self.val}"


Scalar = Union[Fraction, Fp]


class Field:
    """Abstract coefficient field tag; see Rationals and PrimeField."""

    characteristic: int
    zero: Scalar
    one: Scalar

    def coerce(self, x) -> Scalar:
        raise NotImplementedError

    def encode(self, x: Scalar):
        raise NotImplementedError

    def decode(self, v) -> Scalar:
        raise NotImplementedError


class Rationals(Field):
    """The field of rational numbers, backed by fractions.Fraction."""

    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        if isinstance(x, str):
            return self.decode(x)
        if isinstance(x, Fp):
            raise FieldMismatchError(
                f"residue mod {x.p} cannot be coerced into the rationals"
            )
        raise DomainError(f"cannot interpret {x!r} as a rational scalar")

    def encode(self, x: Fraction) -> str:
        return str(x)

    def decode(self, v) -> Fraction:
        # wire format is decimal-free: "a" or "a/b"
        if not isinstance(v, str) or not _RATIONAL_RE.match(v):
            raise DomainError(f"rational entries must be strings 'a' or 'a/b', got {v!r}")
        try:
            return Fraction(v)
        except ZeroDivisionError:
            raise DomainError(f"zero denominator in {v!r}") from None

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class PrimeField(Field):
    """The field with p elements, p prime."""

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise DomainError(f"prime-field modulus must be prime, got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = Fp(0, p)
        self.one = Fp(1, p)

    def coerce(self, x) -> Fp:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatchError(f"residue mod {x.p} used in GF({self.p})")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fp(x, self.p)
        if isinstance(x, Fraction):
            raise FieldMismatchError(
                f"rational {x} used in GF({self.p}); reduce explicitly instead"
            )
        raise DomainError(f"cannot interpret {x!r} as an element of GF({self.p})")

    def encode(self, x: Fp) -> int:
        return x.val

    def decode(self, v) -> Fp:
        if not isinstance(v, int) or isinstance(v, bool):
            raise DomainError(f"prime-field entries must be integers, got {v!r}")
        return Fp(v, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def is_prime(n: int) -> bool:
    """Primality test; exact for all n (sympy handles the large tail)."""
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if n % d == 0:
            return n == d
    if n < 37 * 37:
        return True
    if n < 10**6:
        d = 37
        while d * d <= n:
            if n % d == 0:
                return False
            d += 2
        return True
    from sympy import isprime  # local import keeps small-modulus paths sympy-free

    return bool(isprime(n))


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in GF(p)^*."""
    a %= p
    if a == 0:
        raise DomainError(f"0 has no multiplicative order mod {p}")
    if p <= 100000:
        order, x = 1, a
        while x != 1:
            x = x * a % p
            order += 1
        return order
    from sympy import n_order

    return int(n_order(a, p))


def factorize(n: int) -> dict:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise DomainError(f"factorize expects a positive integer, got {n}")
    out: dict = {}
    for d in (2, 3, 5):
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    d = 7
    while d * d <= n and d < 10**5:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    if n > 1:
        if n < 10**10:
            # residual below the trial bound squared is necessarily prime
            out[n] = out.get(n, 0) + 1
        else:
            from sympy import factorint

            for q, e in factorint(n).items():
                out[int(q)] = out.get(int(q), 0) + int(e)
    return out
