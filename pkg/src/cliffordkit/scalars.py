"""Scalar backends shared by all algebra modules.

Two backends exist and are never mixed inside a single algebraic value:

* ``"exact"`` -- elements of the field Q(i, sqrt2), represented as
  ``(re1 + im1*i) + (re2 + im2*i)*sqrt2`` with ``fractions.Fraction``
  components.  Plain rationals and Gaussian rationals are the special
  cases with vanishing surd (and imaginary) parts.  Every identity with
  rational, Gaussian-rational or quarter-turn trigonometric content is
  therefore testable bit-exactly.
* ``"float"`` -- complex doubles, compared with a relative policy that
  has an absolute floor of 1 (see :func:`approx_eq`).
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "ExactScalar",
    "ZERO",
    "ONE",
    "I",
    "SQRT2",
    "HALF_SQRT2",
    "DEFAULT_TOL",
    "approx_eq",
    "promote",
    "exact_cos_sin_pi",
    "format_fraction",
    "parse_fraction",
]

DEFAULT_TOL = 1e-12

_F0 = Fraction(0)
_F1 = Fraction(1)
_SQRT2_FLOAT = math.sqrt(2.0)


class ExactScalar:
    """A number ``(re1 + im1*i) + (re2 + im2*i)*sqrt2`` with rational parts.

    The four components are a canonical form: 1, i, sqrt2 and i*sqrt2 are
    linearly independent over Q, so equality is componentwise.  Values are
    immutable; every operation returns a new instance.
    """

    __slots__ = ("re1", "im1", "re2", "im2")

    def __init__(self, re1=0, im1=0, re2=0, im2=0):
        object.__setattr__(self, "re1", Fraction(re1))
        object.__setattr__(self, "im1", Fraction(im1))
        object.__setattr__(self, "re2", Fraction(re2))
        object.__setattr__(self, "im2", Fraction(im2))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def _make(cls, re1: Fraction, im1: Fraction, re2: Fraction, im2: Fraction) -> "ExactScalar":
        self = object.__new__(cls)
        object.__setattr__(self, "re1", re1)
        object.__setattr__(self, "im1", im1)
        object.__setattr__(self, "re2", re2)
        object.__setattr__(self, "im2", im2)
        return self

    @classmethod
    def gaussian(cls, re, im) -> "ExactScalar":
        return cls(re, im)

    # -- coercion -----------------------------------------------------

    @staticmethod
    def _coerce(value) -> "ExactScalar | None":
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return ExactScalar._make(Fraction(value), _F0, _F0, _F0)
        return None

    # -- structure ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re1 or self.im1 or self.re2 or self.im2)

    @property
    def is_real(self) -> bool:
        return not (self.im1 or self.im2)

    @property
    def has_surd(self) -> bool:
        return bool(self.re2 or self.im2)

    @property
    def is_rational(self) -> bool:
        return not (self.im1 or self.re2 or self.im2)

    def real(self) -> "ExactScalar":
        return ExactScalar._make(self.re1, _F0, self.re2, _F0)

    def imag(self) -> "ExactScalar":
        return ExactScalar._make(self.im1, _F0, self.im2, _F0)

    def conjugate(self) -> "ExactScalar":
        return ExactScalar._make(self.re1, -self.im1, self.re2, -self.im2)

    def as_fraction(self) -> Fraction:
        """The value as a plain rational; raises if i or sqrt2 parts remain."""
        if self.im1 or self.re2 or self.im2:
            raise ValueError(f"{self!r} is not a plain rational")
        return self.re1

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar._make(
            self.re1 + o.re1, self.im1 + o.im1, self.re2 + o.re2, self.im2 + o.im2
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ExactScalar._make(
            self.re1 - o.re1, self.im1 - o.im1, self.re2 - o.re2, self.im2 - o.im2
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ExactScalar._make(-self.re1, -self.im1, -self.re2, -self.im2)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self.re1, self.im1, self.re2, self.im2
        a2, b2, c2, d2 = o.re1, o.im1, o.re2, o.im2
        if not (c1 or d1 or c2 or d2):
            return ExactScalar._make(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2, _F0, _F0)
        return ExactScalar._make(
            a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2),
            a1 * c2 - b1 * d2 + c1 * a2 - d1 * b2,
            a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ExactScalar":
        # 1/(x + y*sqrt2) = (x - y*sqrt2)/(x^2 - 2 y^2), then invert the
        # Gaussian-rational denominator.
        a, b, c, d = self.re1, self.im1, self.re2, self.im2
        den_re = a * a - b * b - 2 * (c * c - d * d)
        den_im = 2 * (a * b - 2 * c * d)
        n = den_re * den_re + den_im * den_im
        if n == 0:
            raise ZeroDivisionError("division by zero ExactScalar")
        inv = ExactScalar._make(den_re / n, -den_im / n, _F0, _F0)
        return ExactScalar._make(a, b, -c, -d) * inv

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison and conversion -------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (
            self.re1 == o.re1
            and self.im1 == o.im1
            and self.re2 == o.re2
            and self.im2 == o.im2
        )

    def __hash__(self):
        return hash((self.re1, self.im1, self.re2, self.im2))

    def to_complex(self) -> complex:
        return complex(
            float(self.re1) + _SQRT2_FLOAT * float(self.re2),
            float(self.im1) + _SQRT2_FLOAT * float(self.im2),
        )

    def __repr__(self):
        parts = []
        if self.re1:
            parts.append(str(self.re1))
        if self.im1:
            parts.append(f"{self.im1}*i")
        if self.re2:
            parts.append(f"{self.re2}*sqrt2")
        if self.im2:
            parts.append(f"{self.im2}*i*sqrt2")
        return " + ".join(parts) if parts else "0"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)
SQRT2 = ExactScalar(0, 0, 1)
HALF_SQRT2 = ExactScalar(0, 0, Fraction(1, 2))


def approx_eq(a: complex, b: complex, tol: float = DEFAULT_TOL) -> bool:
    """Relative comparison with absolute floor 1: |a-b| <= tol*max(1,|a|,|b|)."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    a = complex(a)
    b = complex(b)
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def promote(x: ExactScalar) -> complex:
    """Nearest-representable complex double of an exact scalar.

    Each real component is converted independently; the conversion of a
    Gaussian rational is the correctly rounded double of each part.
    """
    return x.to_complex()


def exact_cos_sin_pi(k: Fraction | int) -> tuple[ExactScalar, ExactScalar]:
    """Exact (cos(k*pi), sin(k*pi)) for k with denominator dividing 4.

    Quarter-turn multiples are the angles whose cosine and sine live in
    Q(sqrt2): the values are drawn from {0, +-1, +-sqrt2/2}.
    """
    k = Fraction(k)
    steps = k * 4  # angle in units of pi/4
    if steps.denominator != 1:
        raise ValueError("angle must be a multiple of pi/4 for exact trigonometry")
    idx = steps.numerator % 8
    s = HALF_SQRT2
    cos_table = [ONE, s, ZERO, -s, -ONE, -s, ZERO, s]
    sin_table = [ZERO, s, ONE, s, ZERO, -s, -ONE, -s]
    return cos_table[idx], sin_table[idx]


def format_fraction(f: Fraction) -> str:
    """Serialize a rational as "p/q", omitting the denominator when it is 1."""
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)
