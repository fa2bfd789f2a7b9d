"""Exact scalars, polynomials in the spectral parameter, and Gamma quotients.

Scalars are :class:`fractions.Fraction` throughout; they are kept in lowest
terms with a positive denominator by the standard library, so equality is a
structural comparison.
"""
from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Scalar = Fraction
Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


class PoleError(ZeroDivisionError):
    """An exact expression has a vanishing denominator.

    ``argument`` carries the offset ``x`` of the vanishing linear factor
    (for instance ``g(x) = 0``) when the caller knows it, ``family`` names the
    factor family (``"g"``, ``"gtilde"``, ``"gamma"``, ...), and ``where``
    describes the basis vector or index at which the pole was hit.
    """

    def __init__(self, message, *, argument=None, family=None, where=None):
        super().__init__(message)
        self.argument = argument
        self.family = family
        self.where = where


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {x!r} as an exact scalar")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (base 10, optional leading minus)."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s and int(s.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(s)


def format_rational(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def gamma_ratio(z: Number, m: int) -> Fraction:
    """Return ``Gamma(z + m) / Gamma(z)`` for an integer offset ``m``.

    For ``m >= 0`` this is the rising factorial ``z (z+1) ... (z+m-1)``; a
    vanishing factor simply gives 0.  For ``m < 0`` it is
    ``1 / ((z-1)(z-2)...(z+m))`` and a vanishing factor raises
    :class:`PoleError`.
    """
    z = Fraction(z)
    if m >= 0:
        out = Fraction(1)
        for i in range(m):
            out *= z + i
        return out
    den = Fraction(1)
    for i in range(1, -m + 1):
        f = z - i
        if f == 0:
            raise PoleError(f"Gamma({z + m})/Gamma({z}) has a pole",
                            argument=z + m, family="gamma", where=i)
        den *= f
    return 1 / den


def gamma_quotient(num_arg: Number, den_arg: Number) -> Fraction:
    """``Gamma(num_arg) / Gamma(den_arg)`` for arguments differing by an integer."""
    offset = Fraction(num_arg) - Fraction(den_arg)
    if offset.denominator != 1:
        raise ValueError(
            f"Gamma arguments {num_arg} and {den_arg} do not differ by an integer")
    return gamma_ratio(den_arg, int(offset))


def gamma_product(pairs: Iterable[Tuple[Number, Number]]) -> Fraction:
    """``prod Gamma(a) / Gamma(b)`` over integer-offset pairs ``(a, b)``.

    Every quotient is expanded into linear factors and equal factors cancel
    across the whole product before anything is evaluated, so a pole is
    reported only if it survives the cancellation.
    """
    num: Counter = Counter()
    den: Counter = Counter()
    for a, b in pairs:
        a, b = Fraction(a), Fraction(b)
        offset = a - b
        if offset.denominator != 1:
            raise ValueError(f"Gamma arguments {a} and {b} do not differ by an integer")
        m = int(offset)
        if m >= 0:
            num.update(b + i for i in range(m))
        else:
            den.update(b - i for i in range(1, -m + 1))
    common = num & den
    num, den = num - common, den - common
    if den[Fraction(0)]:
        raise PoleError("Gamma product has a surviving pole", argument=Fraction(0),
                        family="gamma")
    if num[Fraction(0)]:
        return Fraction(0)
    out = Fraction(1)
    for x, e in num.items():
        out *= x ** e
    for x, e in den.items():
        out /= x ** e
    return out


class SpectralPoly:
    """Univariate polynomial in ``u`` with exact rational coefficients.

    Coefficients are stored constant term first with trailing zeros stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Number) -> "SpectralPoly":
        return cls((c,))

    @classmethod
    def linear(cls, c0: Number, c1: Number = 1) -> "SpectralPoly":
        """``c1 * u + c0``."""
        return cls((c0, c1))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, u: Number) -> Fraction:
        u = Fraction(u)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * u + c
        return out

    def shift(self, c: Number) -> "SpectralPoly":
        """Return ``p(u + c)``."""
        c = Fraction(c)
        out = SpectralPoly()
        lin = SpectralPoly((c, 1))
        for a in reversed(self.coeffs):
            out = out * lin + a
        return out

    @staticmethod
    def _coerce(other):
        if isinstance(other, SpectralPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SpectralPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return SpectralPoly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return SpectralPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SpectralPoly([c * other for c in self.coeffs])
        if not isinstance(other, SpectralPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return SpectralPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return SpectralPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __repr__(self):
        return f"SpectralPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = format_rational(mag)
            else:
                mono = "u" if p == 1 else f"u^{p}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "SpectralPoly":
        return cls(parse_rational(s) for s in data)


U = SpectralPoly((0, 1))


def poly_equal(p: SpectralPoly, q: SpectralPoly) -> bool:
    return SpectralPoly._coerce(p).coeffs == SpectralPoly._coerce(q).coeffs


def entry_to_json(x) -> list:
    """Serialize a matrix entry (scalar or polynomial) as a coefficient array."""
    if isinstance(x, SpectralPoly):
        return x.to_json()
    return SpectralPoly((x,)).to_json()
