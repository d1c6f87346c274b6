"""Quaternions, their matrix representations and the cover of SO(3).

Components are real scalars of the active backend (exact values may carry
a sqrt2 part, which quarter-turn rotors need).  The conjugate negates all
three imaginary components, the norm comes from ``q conj(q)``, and unit
quaternions act on the imaginary part by conjugation, covering SO(3)
two-to-one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import DEFAULT_TOL, ExactScalar, approx_eq

__all__ = [
    "Quaternion",
    "Sp1Element",
    "real_rep",
    "complex_rep",
    "c2_to_quat",
    "hopf_matrix",
    "rho",
    "su2_to_so3",
    "rational_unit_quaternion",
]


def _coerce_real(value, exact: bool):
    if exact:
        if isinstance(value, (int, Fraction)):
            return ExactScalar(value)
        if isinstance(value, ExactScalar):
            if not value.is_real:
                raise ValueError("quaternion components must be real")
            return value
        raise TypeError(f"exact quaternion rejects component {value!r}")
    v = float(value)
    return v


class Quaternion:
    """``a + b i + c j + d k`` over one scalar backend."""

    __slots__ = ("a", "b", "c", "d", "exact")

    def __init__(self, a, b, c, d, exact: bool = True):
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, _coerce_real(v, exact))
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def units(cls, exact: bool = True):
        """(1, i, j, k) for the chosen backend."""
        mk = lambda a, b, c, d: cls(a, b, c, d, exact=exact)
        return mk(1, 0, 0, 0), mk(0, 1, 0, 0), mk(0, 0, 1, 0), mk(0, 0, 0, 1)

    @classmethod
    def zero(cls, exact: bool = True):
        return cls(0, 0, 0, 0, exact=exact)

    def components(self):
        return (self.a, self.b, self.c, self.d)

    # -- ring structure ---------------------------------------------------

    def _check(self, other: "Quaternion"):
        if self.exact != other.exact:
            raise TypeError("mixed quaternion backends")

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        return Quaternion(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d,
            exact=self.exact,
        )

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d, exact=self.exact)

    def scale(self, s) -> "Quaternion":
        s = _coerce_real(s, self.exact)
        return Quaternion(self.a * s, self.b * s, self.c * s, self.d * s, exact=self.exact)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        self._check(other)
        a1, b1, c1, d1 = self.components()
        a2, b2, c2, d2 = other.components()
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            exact=self.exact,
        )

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d, exact=self.exact)

    def norm_sq(self):
        """``q conj(q)`` as a real scalar: a^2 + b^2 + c^2 + d^2."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("zero quaternion has no inverse")
        inv = n.inverse() if self.exact else 1.0 / n
        return self.conjugate().scale(inv)

    def is_unit(self, tol: float = DEFAULT_TOL) -> bool:
        n = self.norm_sq()
        if self.exact:
            return n == ExactScalar(1)
        return approx_eq(n, 1.0, tol)

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        if self.exact != other.exact:
            return False
        if self.exact:
            return self.components() == other.components()
        return all(approx_eq(x, y, DEFAULT_TOL) for x, y in zip(self.components(), other.components()))

    def __hash__(self):
        return hash((self.exact, self.components() if self.exact else None))

    def __repr__(self):
        return f"Quaternion({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


@dataclass(frozen=True)
class Sp1Element:
    """A unit quaternion."""

    q: Quaternion

    def __post_init__(self):
        if not self.q.is_unit():
            raise ValueError("Sp1Element requires a unit quaternion")

    def inverse(self) -> "Sp1Element":
        return Sp1Element(self.q.conjugate())

    def __mul__(self, other: "Sp1Element") -> "Sp1Element":
        return Sp1Element(self.q * other.q)


def real_rep(q: Quaternion):
    """4x4 real matrix of left multiplication on the basis (1, i, j, k)."""
    a, b, c, d = q.components()
    return (
        (a, -b, -c, -d),
        (b, a, -d, c),
        (c, d, a, -b),
        (d, -c, b, a),
    )


def _as_complex_scalar(re, im, exact: bool):
    if exact:
        return re + ExactScalar(0, 1) * im
    return complex(re, im)


def complex_rep(q: Quaternion):
    """2x2 complex matrix ``[[a+bi, c+di], [-c+di, a-bi]]``."""
    a, b, c, d = q.components()
    e = q.exact
    return (
        (_as_complex_scalar(a, b, e), _as_complex_scalar(c, d, e)),
        (_as_complex_scalar(-c, d, e), _as_complex_scalar(a, -b, e)),
    )


def _real_imag(z, exact: bool):
    if exact:
        if not isinstance(z, ExactScalar):
            z = ExactScalar(z)
        return z.real(), z.imag()
    z = complex(z)
    return z.real, z.imag


def c2_to_quat(c1, c2, exact: bool = True) -> Quaternion:
    """The norm-preserving identification ``(c1, c2) |-> c1 + c2 j``.

    The complex unit multiplies on the left, so ``(0, i)`` lands on
    ``i j = k``.
    """
    re1, im1 = _real_imag(c1, exact)
    re2, im2 = _real_imag(c2, exact)
    return Quaternion(re1, im1, re2, im2, exact=exact)


def hopf_matrix(phi: Sp1Element):
    """4x4 matrix of ``q |-> phi q phi^-1``; fixes the real axis."""
    q = phi.q
    qc = q.conjugate()
    units = Quaternion.units(exact=q.exact)
    cols = [(q * u * qc).components() for u in units]
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def rho(phi: Sp1Element):
    """The SO(3) matrix: the conjugation action on the imaginary part."""
    h = hopf_matrix(phi)
    return tuple(row[1:] for row in h[1:])


def su2_to_so3(m) -> tuple:
    """The two-to-one cover applied to ``[[c1, c2], [-conj c2, conj c1]]``.

    Rejects matrices that are not of that shape or have determinant != 1.
    """
    if len(m) != 2 or any(len(row) != 2 for row in m):
        raise ValueError("expected a 2x2 matrix")
    c1, c2 = m[0]
    c3, c4 = m[1]
    exact = isinstance(c1, ExactScalar)
    if exact:
        shape_ok = c3 == -c2.conjugate() and c4 == c1.conjugate()
        det_ok = c1 * c4 - c2 * c3 == ExactScalar(1)
    else:
        c1, c2, c3, c4 = complex(c1), complex(c2), complex(c3), complex(c4)
        shape_ok = approx_eq(c3, -c2.conjugate()) and approx_eq(c4, c1.conjugate())
        det_ok = approx_eq(c1 * c4 - c2 * c3, 1.0)
    if not (shape_ok and det_ok):
        raise ValueError("matrix is not a unit-determinant quaternion matrix")
    q = c2_to_quat(c1, c2, exact=exact)
    return rho(Sp1Element(q))


def rational_unit_quaternion(p: Quaternion) -> Quaternion:
    """An exactly unit quaternion from any nonzero exact quaternion.

    ``p^2 / |p|^2`` has rational components and unit norm, which keeps
    group-law tests on the three-sphere exact.
    """
    if not p.exact:
        raise TypeError("rational_unit_quaternion needs the exact backend")
    n = p.norm_sq()
    if not n:
        raise ZeroDivisionError("zero quaternion")
    return (p * p).scale(n.inverse())
