"""Clifford and exterior algebra over one sparse storage form.

A :class:`Multivector` is a finitely supported map from basis blades
(bitmasks over 1..dim) to scalars.  The same storage carries both the
Clifford algebra C(V, Q) and the exterior algebra Lambda(V): which algebra
is meant is a property of the operation applied, never of the value.  In
particular the quantization map is the identity on storage (the blade
``e_{i1}...e_{ik}`` with ascending indices *is* the wedge blade), while the
symbol map is computed honestly through the Clifford action on Lambda(V)
and must land back on the same storage.

Sign conventions: generators square to ``-Q(v)``, i.e.
``v1 v2 + v2 v1 = -2 Q(v1, v2)``; blade products are canonicalized by
transposition counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import DEFAULT_TOL, ExactScalar, approx_eq, promote

__all__ = [
    "AlgebraContext",
    "ContextMismatchError",
    "GradeError",
    "GradedPart",
    "Multivector",
    "context",
    "to_float",
    "clifford_product",
    "wedge",
    "ext_mul",
    "contract",
    "clifford_action",
    "symbol",
    "quantize",
    "star_involution",
    "grade_project",
    "even_odd_split",
]

MAX_DIM = 12


class ContextMismatchError(ValueError):
    """Operands live in different algebra contexts."""


class GradeError(ValueError):
    """An operand violates a grade precondition."""


@dataclass(frozen=True)
class AlgebraContext:
    """Dimension, diagonal quadratic form, scalar backend and float policy.

    ``metric[i]`` is Q(e_{i+1}, e_{i+1}); the form is positive definite and
    diagonal in the fixed basis.  ``backend`` is ``"exact"`` or ``"float"``.
    """

    dim: int
    metric: tuple[Fraction, ...]
    backend: str
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be in 1..{MAX_DIM}, got {self.dim}")
        if len(self.metric) != self.dim:
            raise ValueError("metric length must equal dim")
        if any(m <= 0 for m in self.metric):
            raise ValueError("metric entries must be positive")
        if self.backend not in ("exact", "float"):
            raise ValueError("backend must be 'exact' or 'float'")
        if self.tol < 0:
            raise ValueError("tol must be nonnegative")

    @property
    def is_euclidean(self) -> bool:
        return all(m == 1 for m in self.metric)

    # -- scalar handling ------------------------------------------------

    def coerce_scalar(self, value):
        """Check/convert a coefficient into this context's scalar type."""
        if self.backend == "exact":
            if isinstance(value, ExactScalar):
                return value
            if isinstance(value, (int, Fraction)):
                return ExactScalar(value)
            raise TypeError(f"exact backend rejects coefficient {value!r}")
        if isinstance(value, ExactScalar):
            raise TypeError("float backend rejects ExactScalar; promote explicitly")
        z = complex(value)
        if not (_finite(z.real) and _finite(z.imag)):
            raise ValueError("non-finite coefficient")
        return z

    def scalar_eq(self, a, b) -> bool:
        if self.backend == "exact":
            return a == b
        return approx_eq(a, b, self.tol)

    # -- constructors ----------------------------------------------------

    def from_terms(self, terms: Mapping[int, object]) -> "Multivector":
        clean = {}
        full = (1 << self.dim) - 1
        for mask, coeff in terms.items():
            if not 0 <= mask <= full:
                raise ValueError(f"blade mask {mask:#x} out of range for dim {self.dim}")
            c = self.coerce_scalar(coeff)
            if mask in clean:
                c = clean[mask] + c
            if c:
                clean[mask] = c
            elif mask in clean:
                del clean[mask]
        return Multivector(self, clean)

    def zero(self) -> "Multivector":
        return Multivector(self, {})

    def scalar(self, value) -> "Multivector":
        return self.from_terms({0: value})

    def one(self) -> "Multivector":
        return self.scalar(1 if self.backend == "exact" else 1.0)

    def e(self, i: int) -> "Multivector":
        """The basis vector e_i, 1-based."""
        if not 1 <= i <= self.dim:
            raise ValueError(f"basis index {i} out of range")
        return self.from_terms({1 << (i - 1): 1 if self.backend == "exact" else 1.0})

    def blade(self, indices: Iterable[int], coeff=None) -> "Multivector":
        """The blade with the given strictly increasing 1-based indices."""
        mask = indices_to_mask(indices, self.dim)
        if coeff is None:
            coeff = 1 if self.backend == "exact" else 1.0
        return self.from_terms({mask: coeff})

def context(dim: int, metric=None, backend: str = "exact", tol: float = DEFAULT_TOL) -> AlgebraContext:
    """Build an :class:`AlgebraContext`; the metric defaults to all ones."""
    if metric is None:
        metric = (Fraction(1),) * dim
    else:
        metric = tuple(Fraction(m) for m in metric)
    return AlgebraContext(dim, metric, backend, tol)


def indices_to_mask(indices: Iterable[int], dim: int) -> int:
    mask = 0
    prev = 0
    for i in indices:
        if not 1 <= i <= dim:
            raise ValueError(f"basis index {i} out of range for dim {dim}")
        if i <= prev:
            raise ValueError("blade indices must be strictly increasing")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def mask_to_indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def to_float(a: "Multivector", tol: float | None = None) -> "Multivector":
    """Explicit promotion of an exact multivector to the float backend."""
    ctx = a.context
    if ctx.backend == "float":
        return a
    fctx = context(ctx.dim, ctx.metric, backend="float", tol=ctx.tol if tol is None else tol)
    return fctx.from_terms({m: promote(c) for m, c in a.terms.items()})


def _finite(x: float) -> bool:
    return math.isfinite(x)


def _reorder_sign(a: int, b: int) -> int:
    """Parity sign of merging blade ``a`` with blade ``b`` (a then b)."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


class Multivector:
    """Finitely supported blade-to-coefficient map tied to a context.

    Instances are immutable.  Addition, subtraction, negation and scalar
    multiplication are the vector-space operations; the two algebra
    products are the module-level :func:`clifford_product` and
    :func:`wedge`.
    """

    __slots__ = ("context", "terms")

    def __init__(self, ctx: AlgebraContext, terms: dict):
        object.__setattr__(self, "context", ctx)
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- inspection -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def grades(self) -> set[int]:
        return {m.bit_count() for m in self.terms}

    def is_homogeneous(self, k: int) -> bool:
        return all(m.bit_count() == k for m in self.terms)

    def has_even_parity(self) -> bool:
        return all(m.bit_count() % 2 == 0 for m in self.terms)

    def has_odd_parity(self) -> bool:
        return all(m.bit_count() % 2 == 1 for m in self.terms)

    def coefficient(self, indices: Iterable[int]):
        mask = indices_to_mask(indices, self.context.dim)
        return self.terms.get(mask, _zero_of(self.context))

    def scalar_part(self):
        return self.terms.get(0, _zero_of(self.context))

    def sup_norm(self) -> float:
        if not self.terms:
            return 0.0
        if self.context.backend == "exact":
            return max(abs(promote(c)) for c in self.terms.values())
        return max(abs(c) for c in self.terms.values())

    # -- vector space ops -------------------------------------------------

    def _check_same(self, other: "Multivector"):
        if self.context != other.context:
            raise ContextMismatchError("operands belong to different algebra contexts")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check_same(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            elif m in terms:
                del terms[m]
        return Multivector(self.context, terms)

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Multivector(self.context, {m: -c for m, c in self.terms.items()})

    def __mul__(self, scalar):
        try:
            c = self.context.coerce_scalar(scalar)
        except (TypeError, ValueError):
            return NotImplemented
        if not c:
            return self.context.zero()
        return Multivector(self.context, {m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.context != other.context:
            return False
        if self.context.backend == "exact":
            return self.terms == other.terms
        zero = 0j
        for m in self.terms.keys() | other.terms.keys():
            if not approx_eq(self.terms.get(m, zero), other.terms.get(m, zero), self.context.tol):
                return False
        return True

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            name = "".join(f"e{i}" for i in mask_to_indices(m)) or "1"
            parts.append(f"({c!r})*{name}" if m else f"({c!r})")
        return " + ".join(parts)


def _zero_of(ctx: AlgebraContext):
    return ExactScalar(0) if ctx.backend == "exact" else 0j


# -- products ------------------------------------------------------------


def clifford_product(a: Multivector, b: Multivector) -> Multivector:
    """The product of C(V, Q); on common indices ``e_i e_i = -Q(e_i, e_i)``."""
    a._check_same(b)
    ctx = a.context
    metric = ctx.metric
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            sign = _reorder_sign(ma, mb)
            common = ma & mb
            coeff = ca * cb
            if sign < 0:
                coeff = -coeff
            while common:
                low = common & -common
                q = metric[low.bit_length() - 1]
                coeff = coeff * (-q if ctx.backend == "exact" else -float(q))
                common ^= low
            m = ma ^ mb
            s = out.get(m)
            s = coeff if s is None else s + coeff
            if s:
                out[m] = s
            elif m in out:
                del out[m]
    return Multivector(ctx, out)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """The exterior product: grade-additive, alternating."""
    a._check_same(b)
    ctx = a.context
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            sign = _reorder_sign(ma, mb)
            coeff = ca * cb
            if sign < 0:
                coeff = -coeff
            m = ma | mb
            s = out.get(m)
            s = coeff if s is None else s + coeff
            if s:
                out[m] = s
            elif m in out:
                del out[m]
    return Multivector(ctx, out)


def _require_grade1(v: Multivector, what: str):
    if not v.is_homogeneous(1):
        raise GradeError(f"{what} requires a grade-1 argument")


def ext_mul(v: Multivector):
    """The exterior-multiplication operator eps(v): w |-> v ^ w."""
    _require_grade1(v, "ext_mul")

    def op(w: Multivector) -> Multivector:
        return wedge(v, w)

    return op


def contract(v: Multivector):
    """The contraction operator iota(v) on Lambda(V).

    On a wedge of vectors, iota(v) replaces each factor in turn by
    ``Q(v, .)`` with alternating signs; on grade 0 it vanishes.
    """
    _require_grade1(v, "contract")
    ctx = v.context
    metric = ctx.metric

    def op(w: Multivector) -> Multivector:
        if ctx != w.context:
            raise ContextMismatchError("operands belong to different algebra contexts")
        out: dict = {}
        for mv_mask, cv in v.terms.items():
            i_bit = mv_mask
            q = metric[i_bit.bit_length() - 1]
            weight = cv * (q if ctx.backend == "exact" else float(q))
            for mw, cw in w.terms.items():
                if not (mw & i_bit):
                    continue
                below = (i_bit - 1) & mw
                sign = -1 if below.bit_count() & 1 else 1
                coeff = weight * cw
                if sign < 0:
                    coeff = -coeff
                m = mw ^ i_bit
                s = out.get(m)
                s = coeff if s is None else s + coeff
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Multivector(ctx, out)

    return op


def clifford_action(v: Multivector, w: Multivector) -> Multivector:
    """Action of a grade-1 element on Lambda(V): c(v) = eps(v) - iota(v)."""
    _require_grade1(v, "clifford_action")
    return wedge(v, w) - contract(v)(w)


def _action_of_blade(ctx: AlgebraContext, mask: int, w: Multivector) -> Multivector:
    # c(e_{i1} ... e_{ik}) = c(e_{i1}) o ... o c(e_{ik}); apply right to left.
    for i in reversed(mask_to_indices(mask)):
        w = clifford_action(ctx.e(i), w)
    return w


def symbol(a: Multivector) -> Multivector:
    """The symbol map: apply the Clifford action of ``a`` to 1 in Lambda(V)."""
    ctx = a.context
    out = ctx.zero()
    for mask, coeff in a.terms.items():
        out = out + _action_of_blade(ctx, mask, ctx.one()) * coeff
    return out


def quantize(x: Multivector) -> Multivector:
    """The quantization map, inverse to :func:`symbol`.

    Blade-wise ``e_{i1} ^ ... ^ e_{ik} |-> e_{i1} ... e_{ik}``; with
    ascending indices the Clifford word is already canonical, so the
    storage is reused unchanged.
    """
    return Multivector(x.context, dict(x.terms))


def star_involution(a: Multivector) -> Multivector:
    """The anti-automorphism induced by v |-> -v.

    On a blade of cardinality k it reverses the factors and flips each
    sign, which amounts to the sign (-1)^(k(k+1)/2).
    """
    out = {}
    for m, c in a.terms.items():
        k = m.bit_count()
        out[m] = -c if (k * (k + 1) // 2) & 1 else c
    return Multivector(a.context, out)


@dataclass(frozen=True)
class GradedPart:
    """A homogeneous component: the payload is supported in one grade."""

    grade: int
    payload: Multivector


def grade_project(a: Multivector, k: int) -> GradedPart:
    if not 0 <= k <= a.context.dim:
        raise ValueError(f"grade {k} out of range 0..{a.context.dim}")
    terms = {m: c for m, c in a.terms.items() if m.bit_count() == k}
    return GradedPart(k, Multivector(a.context, terms))


def even_odd_split(a: Multivector) -> tuple[Multivector, Multivector]:
    even = {m: c for m, c in a.terms.items() if m.bit_count() % 2 == 0}
    odd = {m: c for m, c in a.terms.items() if m.bit_count() % 2 == 1}
    return Multivector(a.context, even), Multivector(a.context, odd)
