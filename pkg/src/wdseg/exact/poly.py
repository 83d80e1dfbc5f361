"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first with trailing zeros stripped,
so the zero polynomial has an empty coefficient tuple and degree -1.  Every
operation stays inside the coefficient field; nothing here ever touches a
float.  Root extraction comes in two flavours: rational roots through the
integer divisor bound, and prime-field roots through either an exhaustive
scan or Cantor-Zassenhaus splitting once the modulus makes scanning silly.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from ..errors import DomainError, WildCharacteristicError
from .fields import Field, Fp, QQ, Scalar, factorize

__all__ = [
    "Polynomial",
    "poly_gcd",
    "squarefree_part",
    "pow_mod",
    "rational_roots",
    "prime_field_roots",
]


class Polynomial:
    """Immutable dense polynomial; index k of coeffs is the t^k coefficient."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence) -> None:
        cs = [field.coerce(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Scalar:
        if self.is_zero():
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    @classmethod
    def constant(cls, field: Field, c) -> "Polynomial":
        return cls(field, [c])

    @classmethod
    def variable(cls, field: Field) -> "Polynomial":
        return cls(field, [field.zero, field.one])

    def _match(self, other) -> "Polynomial":
        # scalars promote to constants so x - 1 reads the way it is written
        if not isinstance(other, Polynomial):
            other = Polynomial(self.field, [self.field.coerce(other)])
        if self.field is not other.field and self.field != other.field:
            raise DomainError("polynomials live over different fields")
        return other

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(type(self)), self.coeffs))

    def __add__(self, other) -> "Polynomial":
        other = self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.field, [self.coeff(k) + other.coeff(k) for k in range(n)]
        )

    def __radd__(self, other) -> "Polynomial":
        return self.__add__(other)

    def __sub__(self, other) -> "Polynomial":
        other = self._match(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.field, [self.coeff(k) - other.coeff(k) for k in range(n)]
        )

    def __rsub__(self, other) -> "Polynomial":
        return (-self).__add__(other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other: Union["Polynomial", int, Fraction, Fp]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = self.field.coerce(other)
            return Polynomial(self.field, [a * c for a in self.coeffs])
        self._match(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field, [])
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            raise DomainError(f"polynomial powers take exponents >= 0, got {k!r}")
        acc = Polynomial(self.field, [self.field.one])
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        other = self._match(other)
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(field, []), self
        inv_lead = field.one / other.leading()
        quo = [field.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lead
            quo[k] = c
            if c != field.zero:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Polynomial(field, quo), Polynomial(field, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(
            self.field, [k * c for k, c in enumerate(self.coeffs)][1:]
        )

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise DomainError("cannot normalize the zero polynomial")
        inv = self.field.one / self.leading()
        return Polynomial(self.field, [c * inv for c in self.coeffs])

    def __call__(self, x):
        """Evaluate by Horner's rule; accepts a scalar or a square matrix."""
        if hasattr(x, "nrows"):
            ident = x ** 0
            acc = ident * self.field.zero
            for c in reversed(self.coeffs):
                acc = acc * x + ident * c
            return acc
        acc = self.field.zero
        xv = self.field.coerce(x)
        for c in reversed(self.coeffs):
            acc = acc * xv + c
        return acc

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return "Polynomial(" + " + ".join(parts) + ")"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor via the Euclidean algorithm."""
    a._match(b)
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    """Monic product of the distinct irreducible factors of f.

    Over characteristic p the usual f / gcd(f, f') identity can silently drop
    factors whose multiplicity is divisible by p, so the modulus is required
    to exceed the degree.  That is exactly the regime every caller in this
    package lives in; anything wilder is refused rather than half-handled.
    """
    if f.is_zero():
        raise DomainError("squarefree part of the zero polynomial is undefined")
    ch = f.field.characteristic
    if ch != 0 and ch <= f.degree:
        raise WildCharacteristicError(
            f"characteristic {ch} does not exceed degree {f.degree}"
        )
    g = poly_gcd(f, f.derivative())
    if g.is_zero() or g.degree == 0:
        return f.monic()
    return (f // g).monic()


def pow_mod(base: Polynomial, exp: int, modulus: Polynomial) -> Polynomial:
    """base**exp reduced mod modulus, by binary exponentiation."""
    if exp < 0:
        raise DomainError("negative exponent in modular polynomial power")
    field = base.field
    result = Polynomial(field, [field.one])
    acc = base % modulus
    e = exp
    while e:
        if e & 1:
            result = (result * acc) % modulus
        acc = (acc * acc) % modulus
        e >>= 1
    return result


def _deflate(f: Polynomial, root: Scalar) -> Tuple[Polynomial, int]:
    # strip (t - root)^m, returning the cofactor and m
    field = f.field
    lin = Polynomial(field, [-root, field.one])
    mult = 0
    while True:
        quo, rem = divmod(f, lin)
        if not rem.is_zero():
            return f, mult
        f = quo
        mult += 1


def _divisors(n: int) -> List[int]:
    if n == 0:
        raise DomainError("divisor enumeration needs a nonzero integer")
    divs = [1]
    for p, e in factorize(abs(n)).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(f: Polynomial) -> Dict[Fraction, int]:
    """All rational roots of f with multiplicities.

    Clears denominators, peels off roots at zero, then tests the classical
    candidates p/q with p dividing the constant term and q the leading one.
    """
    if f.field is not QQ:
        raise DomainError("rational root extraction expects a polynomial over QQ")
    if f.is_zero():
        raise DomainError("the zero polynomial has every root")
    roots: Dict[Fraction, int] = {}
    g, mult0 = _deflate(f, Fraction(0))
    if mult0:
        roots[Fraction(0)] = mult0
    if g.degree < 1:
        return roots
    lcm = 1
    for c in g.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in g.coeffs]
    a0, an = ints[0], ints[-1]
    seen = set()
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in seen:
                    continue
                seen.add(cand)
                if g(cand) == 0:
                    g, m = _deflate(g, cand)
                    roots[cand] = m
    return roots


_CZ_RNG = random.Random(0x5EED)


def _cz_split(f: Polynomial, p: int, out: List[Fp]) -> None:
    # f is squarefree and splits into distinct linear factors over F_p
    if f.degree == 0:
        return
    if f.degree == 1:
        c0, c1 = f.coeffs
        out.append(-c0 / c1)
        return
    field = f.field
    t = Polynomial.variable(field)
    while True:
        a = field.coerce(_CZ_RNG.randrange(p))
        h = pow_mod(t + Polynomial.constant(field, a), (p - 1) // 2, f)
        g = poly_gcd(h - Polynomial.constant(field, field.one), f)
        if 0 < g.degree < f.degree:
            _cz_split(g, p, out)
            _cz_split(f // g, p, out)
            return


def prime_field_roots(f: Polynomial) -> Dict[Fp, int]:
    """All roots of f in its prime coefficient field, with multiplicities."""
    p = f.field.characteristic
    if p == 0:
        raise DomainError("prime-field root extraction got a characteristic-zero input")
    if f.is_zero():
        raise DomainError("the zero polynomial has every root")
    if f.degree < 1:
        return {}
    field = f.field
    roots: Dict[Fp, int] = {}
    if p <= 3000 or p <= f.degree * 16:
        for r in range(p):
            rv = field.coerce(r)
            if f(rv) == 0:
                f, m = _deflate(f, rv)
                roots[rv] = m
        return roots
    # large modulus: gcd with t^p - t isolates the distinct linear factors,
    # Cantor-Zassenhaus splits them (p is odd here since p > 3000)
    t = Polynomial.variable(field)
    frob = pow_mod(t, p, f.monic())
    lin = poly_gcd(frob - t, f)
    found: List[Fp] = []
    if lin.degree >= 1:
        _cz_split(lin, p, found)
    for rv in found:
        f, m = _deflate(f, rv)
        roots[rv] = m
    return roots
