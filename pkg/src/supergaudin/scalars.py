"""Exact scalar types used throughout the engine.

Representation data is exact: rationals (`fractions.Fraction`), Gaussian
rationals (`GaussianRational`) for exact complex spectral points, and real
quadratic irrationalities (`SqrtExt`) for Bethe roots that are algebraic of
degree two.  Floating point enters only through numerically solved Bethe
roots; every arithmetic helper here is duck-typed so the same formulas run
on either kind of scalar.
"""

from __future__ import annotations

import math
from fractions import Fraction


def is_exact(x) -> bool:
    """True for scalars carrying exact arithmetic."""
    return isinstance(x, (int, Fraction, GaussianRational, SqrtExt))


def to_complex(x) -> complex:
    """Numeric (float) value of any supported scalar."""
    if isinstance(x, (GaussianRational, SqrtExt)):
        return x.to_complex()
    return complex(x)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, GaussianRational) and x.im == 0:
        return x.re
    if isinstance(x, SqrtExt) and x.b == 0:
        return x.a
    raise TypeError(f"not an exact rational: {x!r}")


def exact_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"{self.re}"
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


class SqrtExt:
    """Element a + b*sqrt(d) of a real quadratic field, a, b rational, d a fixed
    positive non-square rational."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=None):
        self.a = Fraction(a)
        self.b = Fraction(b)
        if b != 0 and d is None:
            raise ValueError("radicand d required when b != 0")
        self.d = None if b == 0 and d is None else (None if d is None else Fraction(d))

    def _join(self, other):
        """Coerce other into the same field; returns (self', other') or None."""
        if isinstance(other, (int, Fraction)):
            other = SqrtExt(other, 0, None)
        if not isinstance(other, SqrtExt):
            return None
        d = self.d if self.d is not None else other.d
        if other.d is not None and self.d is not None and other.d != self.d:
            raise ValueError("mixing distinct quadratic fields")
        return SqrtExt(self.a, self.b, d), SqrtExt(other.a, other.b, d)

    def __add__(self, other):
        j = self._join(other)
        if j is None:
            return NotImplemented
        x, y = j
        return SqrtExt(x.a + y.a, x.b + y.b, x.d)

    __radd__ = __add__

    def __neg__(self):
        return SqrtExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        j = self._join(other)
        if j is None:
            return NotImplemented
        x, y = j
        return SqrtExt(x.a - y.a, x.b - y.b, x.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        j = self._join(other)
        if j is None:
            return NotImplemented
        x, y = j
        d = x.d if x.d is not None else 0
        return SqrtExt(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, x.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        j = self._join(other)
        if j is None:
            return NotImplemented
        x, y = j
        d = x.d if x.d is not None else 0
        n = y.a * y.a - y.b * y.b * d
        if n == 0:
            raise ZeroDivisionError("division by zero SqrtExt")
        conj = SqrtExt(y.a / n, -y.b / n, x.d)
        return x * conj

    def __rtruediv__(self, other):
        j = self._join(other)
        if j is None:
            return NotImplemented
        x, y = j
        return y / x

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, SqrtExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.a == other.a and self.b == other.b and self.d == other.d
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def to_complex(self) -> complex:
        v = float(self.a)
        if self.b != 0:
            v += float(self.b) * math.sqrt(float(self.d))
        return complex(v)

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        return f"({self.a}+{self.b}*sqrt({self.d}))"
