"""The grade-2 Lie algebra, Clifford exponentials and the Spin group.

The commutator action of a grade-2 element on vectors gives the linear
isomorphism ``tau`` onto antisymmetric matrices; conjugation by group
elements exponentiates it to the two-to-one map onto rotations.  The group
elements are even multivectors ``g`` certified to satisfy ``g g* = 1``.

Everything here assumes the all-ones quadratic form: the matrix images are
antisymmetric/orthogonal only in an orthonormal basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import matrices as mx
from .algebra import (
    AlgebraContext,
    GradeError,
    Multivector,
    clifford_product,
    grade_project,
    star_involution,
    wedge,
)
from .scalars import ExactScalar, approx_eq, exact_cos_sin_pi

__all__ = [
    "SoMatrix",
    "SpinElement",
    "super_bracket",
    "tau",
    "tau_inv",
    "clifford_exp",
    "rotor_at_angle",
    "rotor_from_unit_vectors",
    "spin_conjugate",
    "spin_to_so",
    "exact_cos_sin_pi",
]

SERIES_EPS = 1e-16
SERIES_MAX_TERMS = 200


def _require_euclidean(ctx: AlgebraContext, what: str):
    if not ctx.is_euclidean:
        raise ValueError(f"{what} requires the all-ones quadratic form")


@dataclass(frozen=True)
class SoMatrix:
    """A square matrix of scalars with a validated role.

    ``SoMatrix.lie`` checks antisymmetry (a Lie-algebra element);
    ``SoMatrix.group`` checks orthogonality and unit determinant.
    Exactness of the check follows the entry type.
    """

    n: int
    rows: tuple

    @staticmethod
    def _tol_for(rows, tol: float | None):
        exact = isinstance(rows[0][0], ExactScalar)
        return None if exact else tol

    @classmethod
    def lie(cls, rows, tol: float = 1e-9) -> "SoMatrix":
        rows = tuple(tuple(r) for r in rows)
        if not mx.is_antisymmetric(rows, cls._tol_for(rows, tol)):
            raise ValueError("matrix is not antisymmetric")
        return cls(len(rows), rows)

    @classmethod
    def group(cls, rows, tol: float = 1e-9) -> "SoMatrix":
        rows = tuple(tuple(r) for r in rows)
        if not mx.is_special_orthogonal(rows, cls._tol_for(rows, tol)):
            raise ValueError("matrix is not special orthogonal")
        return cls(len(rows), rows)

    @classmethod
    def unchecked(cls, rows) -> "SoMatrix":
        rows = tuple(tuple(r) for r in rows)
        return cls(len(rows), rows)

    def __matmul__(self, other: "SoMatrix") -> "SoMatrix":
        return SoMatrix.unchecked(mx.mat_mul(self.rows, other.rows))

    def entry(self, i: int, j: int):
        return self.rows[i][j]


class SpinElement:
    """An even multivector ``g`` certified to satisfy ``g g* = 1``."""

    __slots__ = ("value",)

    def __init__(self, value: Multivector):
        ctx = value.context
        _require_euclidean(ctx, "SpinElement")
        if not value.has_even_parity():
            raise ValueError("a spin element must be an even multivector")
        prod = clifford_product(value, star_involution(value))
        if prod != ctx.one():
            raise ValueError("certification failed: g g* != 1")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, v):
        raise AttributeError("SpinElement is immutable")

    @property
    def context(self) -> AlgebraContext:
        return self.value.context

    def inverse_value(self) -> Multivector:
        # g^-1 = g* because g g* = 1.
        return star_involution(self.value)

    def __mul__(self, other: "SpinElement") -> "SpinElement":
        if not isinstance(other, SpinElement):
            return NotImplemented
        return SpinElement(clifford_product(self.value, other.value))

    def __neg__(self) -> "SpinElement":
        return SpinElement(-self.value)

    def __eq__(self, other):
        if not isinstance(other, SpinElement):
            return NotImplemented
        return self.value == other.value

    def __repr__(self):
        return f"SpinElement({self.value!r})"


def super_bracket(a: Multivector, b: Multivector) -> Multivector:
    """The bracket ``[a, b] = a b - (-1)^(|a||b|) b a`` of the superalgebra.

    Both arguments must be parity-homogeneous; the bracket reduces to the
    plain commutator whenever either argument is even.
    """
    for name, x in (("first", a), ("second", b)):
        if not (x.has_even_parity() or x.has_odd_parity()):
            raise GradeError(f"super_bracket: {name} argument is not parity-homogeneous")
    ab = clifford_product(a, b)
    ba = clifford_product(b, a)
    if a.has_odd_parity() and b.has_odd_parity():
        return ab + ba
    return ab - ba


def tau(a: Multivector) -> SoMatrix:
    """Matrix of ``v |-> [a, v]`` on the basis vectors, for grade-2 ``a``."""
    ctx = a.context
    _require_euclidean(ctx, "tau")
    if not a.is_homogeneous(2):
        raise GradeError("tau requires a grade-2 element")
    n = ctx.dim
    cols = []
    for j in range(1, n + 1):
        image = super_bracket(a, ctx.e(j))
        cols.append([image.coefficient([i]) for i in range(1, n + 1)])
    rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return SoMatrix.lie(rows, tol=ctx.tol * 10)


def tau_inv(A: SoMatrix) -> Multivector:
    """The grade-2 element with commutator-action matrix ``A``.

    With ``A`` antisymmetric the element is ``(1/2) sum_{i<j} A_ji e_i e_j``.
    The result lives in a fresh exact context unless float entries force
    the float backend.
    """
    from .algebra import context as make_context

    exact = isinstance(A.rows[0][0], ExactScalar)
    if not mx.is_antisymmetric(A.rows, None if exact else 1e-9):
        raise ValueError("tau_inv requires an antisymmetric matrix")
    ctx = make_context(A.n, backend="exact" if exact else "float")
    half = Fraction(1, 2) if exact else 0.5
    terms = {}
    for i in range(A.n):
        for j in range(i + 1, A.n):
            c = A.rows[j][i] * half
            if c:
                terms[(1 << i) | (1 << j)] = c
    return ctx.from_terms(terms)


def _bivector_invariants(a: Multivector):
    """(scalar square, decomposable) for grade-2 ``a``.

    Decomposable means ``a ^ a = 0`` together with a purely scalar Clifford
    square; on the float backend both vanishing conditions hold up to the
    context tolerance relative to |a|^2.
    """
    ctx = a.context
    square = clifford_product(a, a)
    scalar = square.scalar_part()
    residue = square - ctx.scalar(scalar)
    wedge_sq = wedge(a, a)
    if ctx.backend == "exact":
        return scalar, (not residue) and (not wedge_sq)
    scale = max(1.0, a.sup_norm() ** 2)
    small = ctx.tol * scale
    return scalar, residue.sup_norm() <= small and wedge_sq.sup_norm() <= small


def clifford_exp(a: Multivector, mode: str = "closed") -> SpinElement:
    """Exponential of a grade-2 element.

    ``closed`` mode requires ``a = t v1 v2`` with orthonormal ``v1, v2``
    (detected via ``a ^ a = 0`` and scalar square) and returns
    ``cos(t) + sin(t) v1 v2``.  ``series`` mode sums the power series on
    the float backend.  Exact inputs with a nonzero angle cannot evaluate
    cos/sin exactly; use :func:`rotor_at_angle` with exact values instead.
    """
    ctx = a.context
    _require_euclidean(ctx, "clifford_exp")
    if not a.is_homogeneous(2):
        raise GradeError("clifford_exp requires a grade-2 element")
    if mode == "series":
        if ctx.backend == "exact":
            raise ValueError("series mode needs the float backend")
        return _exp_series(a)
    if mode != "closed":
        raise ValueError(f"unknown exponential mode {mode!r}")
    if not a:
        return SpinElement(ctx.one())
    square, decomposable = _bivector_invariants(a)
    if not decomposable:
        raise ValueError("closed mode requires a decomposable bivector")
    if ctx.backend == "exact":
        raise ValueError(
            "closed mode on the exact backend cannot evaluate cos/sin of a "
            "nonzero angle; use rotor_at_angle with exact cosine/sine values"
        )
    t_sq = -complex(square)
    if t_sq.real < -ctx.tol or abs(t_sq.imag) > ctx.tol * max(1.0, abs(t_sq)):
        raise ValueError("closed mode requires a bivector with real nonpositive square")
    t = math.sqrt(max(t_sq.real, 0.0))
    if t == 0.0:
        return SpinElement(ctx.one())
    direction = a * (1.0 / t)
    return SpinElement(ctx.scalar(math.cos(t)) + direction * math.sin(t))


def _exp_series(a: Multivector) -> SpinElement:
    ctx = a.context
    total = ctx.one()
    term = ctx.one()
    for k in range(1, SERIES_MAX_TERMS + 1):
        term = clifford_product(term, a) * (1.0 / k)
        total = total + term
        if term.sup_norm() < SERIES_EPS:
            break
    else:
        raise ValueError("exponential series did not converge")
    return SpinElement(total)


def rotor_at_angle(direction: Multivector, cos_t, sin_t) -> SpinElement:
    """``cos_t + sin_t * direction`` for a unit decomposable bivector.

    Supplying exact cosine/sine values (for instance from
    :func:`exact_cos_sin_pi`) keeps the rotor bit-exact on the exact
    backend; floats are accepted on the float backend.
    """
    ctx = direction.context
    _require_euclidean(ctx, "rotor_at_angle")
    if not direction.is_homogeneous(2):
        raise GradeError("rotor_at_angle requires a grade-2 direction")
    square, decomposable = _bivector_invariants(direction)
    minus_one = ExactScalar(-1) if ctx.backend == "exact" else -1.0 + 0j
    if not decomposable or not ctx.scalar_eq(square, minus_one):
        raise ValueError("direction must be decomposable with square -1")
    c = ctx.coerce_scalar(cos_t)
    s = ctx.coerce_scalar(sin_t)
    one = ExactScalar(1) if ctx.backend == "exact" else 1.0 + 0j
    if not ctx.scalar_eq(c * c + s * s, one):
        raise ValueError("cos^2 + sin^2 must equal 1")
    return SpinElement(ctx.scalar(c) + direction * s)


def rotor_from_unit_vectors(vs) -> SpinElement:
    """Clifford product of an even number of unit vectors."""
    vs = list(vs)
    if len(vs) % 2 != 0:
        raise ValueError("a rotor needs an even number of unit vectors")
    if not vs:
        raise ValueError("empty vector list")
    ctx = vs[0].context
    _require_euclidean(ctx, "rotor_from_unit_vectors")
    minus_one = ExactScalar(-1) if ctx.backend == "exact" else -1.0 + 0j
    for v in vs:
        if not v.is_homogeneous(1):
            raise GradeError("rotor factors must be grade-1")
        vv = clifford_product(v, v).scalar_part()
        if not ctx.scalar_eq(vv, minus_one):
            raise ValueError("rotor factors must be unit vectors")
    out = ctx.one()
    for v in vs:
        out = clifford_product(out, v)
    return SpinElement(out)


def spin_conjugate(g: SpinElement, v: Multivector) -> Multivector:
    """The conjugation ``g v g^-1`` of a vector; preserves the form."""
    if not v.is_homogeneous(1):
        raise GradeError("spin_conjugate acts on grade-1 elements")
    full = clifford_product(clifford_product(g.value, v), g.inverse_value())
    ctx = v.context
    result = grade_project(full, 1).payload
    residue = full - result
    if residue:
        if ctx.backend == "exact" or residue.sup_norm() > ctx.tol * max(1.0, full.sup_norm()):
            raise ValueError("conjugation produced non-vector terms")
    return result


def spin_to_so(g: SpinElement) -> SoMatrix:
    """The rotation whose columns are the conjugates of the basis vectors."""
    ctx = g.context
    n = ctx.dim
    cols = []
    for j in range(1, n + 1):
        image = spin_conjugate(g, ctx.e(j))
        cols.append([image.coefficient([i]) for i in range(1, n + 1)])
    rows = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return SoMatrix.group(rows, tol=max(ctx.tol * 100, 1e-10))
