"""The four-dimensional spinor module and its matrix representation.

The complexified vector space splits along the isotropic plane spanned by
``w_i = (e_{2i-1} - i e_{2i})/sqrt2``; the spinor space is the exterior
algebra of that plane with ordered basis ``(1, w1^w2, w1, w2)``.  A vector
acts by ``sqrt2`` times wedging with its isotropic part minus ``sqrt2``
times contracting with its conjugate part, and the action extends to an
algebra homomorphism whose sixteen blade matrices are cached exactly.

The first two basis elements span the +1 eigenspace of the chirality
operator and the last two the -1 eigenspace; matrices of even elements are
block diagonal and matrices of vectors are block off-diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import matrices as mx
from .algebra import (
    AlgebraContext,
    GradeError,
    Multivector,
    contract,
    context,
    mask_to_indices,
    wedge,
)
from .scalars import HALF_SQRT2, SQRT2, ExactScalar, I, promote
from .spin import SpinElement

__all__ = [
    "Spinor",
    "Polarization",
    "OneFormC",
    "chirality",
    "polarization",
    "rep_matrix",
    "act",
    "split_pm",
    "blade_matrix",
    "hom_restriction",
    "hom_pm_to_oneform",
    "oneform_to_hom",
    "spin4_spinor_action",
]

# Basis order (1, w1^w2, w1, w2) as masks over the isotropic plane.
_BASIS_MASKS = (0b00, 0b11, 0b01, 0b10)
_P_CTX = context(2, backend="exact")


def chirality(ctx: AlgebraContext) -> Multivector:
    """``i^p e_1 ... e_dim`` with ``p = ceil(dim/2)``; squares to 1."""
    dim = ctx.dim
    p = (dim + 1) // 2
    coeff = I**p
    full = (1 << dim) - 1
    if ctx.backend == "exact":
        return ctx.from_terms({full: coeff})
    return ctx.from_terms({full: promote(coeff)})


@dataclass(frozen=True)
class Polarization:
    """The isotropic basis ``w_i`` and its conjugate for an even dimension."""

    ws: tuple
    wbars: tuple

    def w(self, i: int) -> Multivector:
        return self.ws[i - 1]

    def wbar(self, i: int) -> Multivector:
        return self.wbars[i - 1]


def polarization(ctx: AlgebraContext) -> Polarization:
    if ctx.dim % 2:
        raise ValueError("a polarization needs an even dimension")
    if not ctx.is_euclidean:
        raise ValueError("a polarization needs the all-ones quadratic form")
    ws = []
    wbars = []
    for i in range(1, ctx.dim // 2 + 1):
        odd = 1 << (2 * i - 2)
        even = 1 << (2 * i - 1)
        if ctx.backend == "exact":
            ws.append(ctx.from_terms({odd: HALF_SQRT2, even: -I * HALF_SQRT2}))
            wbars.append(ctx.from_terms({odd: HALF_SQRT2, even: I * HALF_SQRT2}))
        else:
            h = promote(HALF_SQRT2).real
            ws.append(ctx.from_terms({odd: complex(h, 0), even: complex(0, -h)}))
            wbars.append(ctx.from_terms({odd: complex(h, 0), even: complex(0, h)}))
    return Polarization(tuple(ws), tuple(wbars))


# -- the action on the exterior algebra of the isotropic plane -------------


def _isotropic_coordinates(i: int):
    """(alpha_1, alpha_2, beta_1, beta_2) of the basis vector e_i, dim 4."""
    z = ExactScalar(0)
    h = HALF_SQRT2
    ih = I * HALF_SQRT2
    return {
        1: (h, z, h, z),
        2: (ih, z, -ih, z),
        3: (z, h, z, h),
        4: (z, ih, z, -ih),
    }[i]


def _vector_action(alpha, beta, u: Multivector) -> Multivector:
    """``sqrt2 (eps(alpha) - iota(beta))`` on the isotropic exterior algebra."""
    a_vec = _P_CTX.from_terms({0b01: alpha[0], 0b10: alpha[1]})
    b_vec = _P_CTX.from_terms({0b01: beta[0], 0b10: beta[1]})
    out = _P_CTX.zero()
    if a_vec:
        out = out + wedge(a_vec, u)
    if b_vec:
        out = out - contract(b_vec)(u)
    return out * SQRT2


def _basis_element(idx: int) -> Multivector:
    return _P_CTX.from_terms({_BASIS_MASKS[idx]: 1})


def _columns_to_matrix(images) -> tuple:
    return tuple(
        tuple(images[j].terms.get(_BASIS_MASKS[i], ExactScalar(0)) for j in range(4))
        for i in range(4)
    )


def _generator_matrix(i: int) -> tuple:
    alpha1, alpha2, beta1, beta2 = _isotropic_coordinates(i)
    images = [
        _vector_action((alpha1, alpha2), (beta1, beta2), _basis_element(idx))
        for idx in range(4)
    ]
    return _columns_to_matrix(images)


_BLADE_CACHE: dict[int, tuple] = {}


def blade_matrix(mask: int) -> tuple:
    """Exact 4x4 matrix of the blade with the given bitmask (dim 4)."""
    cached = _BLADE_CACHE.get(mask)
    if cached is not None:
        return cached
    if mask == 0:
        m = mx.identity(4, exact=True)
    else:
        m = None
        for i in mask_to_indices(mask):
            g = _generator_matrix(i)
            m = g if m is None else mx.mat_mul(m, g)
    _BLADE_CACHE[mask] = m
    return m


def _require_spinor_context(ctx: AlgebraContext):
    if ctx.dim != 4 or not ctx.is_euclidean:
        raise ValueError("the concrete spinor module lives in dimension 4 with the all-ones form")


def rep_matrix(a: Multivector) -> tuple:
    """The 4x4 matrix of a complexified Clifford element on the spinors."""
    ctx = a.context
    _require_spinor_context(ctx)
    exact = ctx.backend == "exact"
    total = mx.zeros(4, 4, exact=exact)
    for mask, coeff in a.terms.items():
        m = blade_matrix(mask)
        if not exact:
            m = tuple(tuple(promote(x) for x in row) for row in m)
        total = mx.mat_add(total, mx.mat_scale(m, coeff))
    return total


@dataclass(frozen=True)
class Spinor:
    """Coordinates in the ordered basis ``(1, w1^w2, w1, w2)``."""

    s1: object
    s2: object
    s3: object
    s4: object

    def column(self):
        return (self.s1, self.s2, self.s3, self.s4)


def act(a: Multivector, s: Spinor) -> Spinor:
    return Spinor(*mx.mat_vec(rep_matrix(a), s.column()))


def split_pm(s: Spinor) -> tuple[tuple, tuple]:
    """Positional split into the chirality +1 and -1 coordinate pairs."""
    return (s.s1, s.s2), (s.s3, s.s4)


def hom_restriction(i: int, direction: str) -> tuple:
    """The 2x2 block of the basis vector e_i between the chirality halves."""
    m = blade_matrix(1 << (i - 1))
    if direction == "plus_to_minus":
        return (m[2][:2], m[3][:2])
    if direction == "minus_to_plus":
        return (m[0][2:], m[1][2:])
    raise ValueError("direction must be 'plus_to_minus' or 'minus_to_plus'")


@dataclass(frozen=True)
class OneFormC:
    """A complexified one-form, stored in basis-vector coordinates.

    ``coeffs[i]`` multiplies ``e_{i+1}``.  The isotropic coordinates are
    taken with respect to the fixed change of basis
    ``e_{2i-1} = (w_i + wbar_i)/sqrt2``, ``e_{2i} = (-w_i + wbar_i)/(sqrt2 i)``.
    """

    coeffs: tuple

    @property
    def exact(self) -> bool:
        return isinstance(self.coeffs[0], ExactScalar)

    def as_multivector(self, ctx: AlgebraContext) -> Multivector:
        return ctx.from_terms({1 << i: c for i, c in enumerate(self.coeffs)})

    def w_coordinates(self) -> dict:
        """Coefficients over (w1, w2, wbar1, wbar2)."""
        a1, a2, a3, a4 = self.coeffs
        if self.exact:
            h, i_unit = HALF_SQRT2, I
        else:
            h, i_unit = promote(HALF_SQRT2).real, 1j
        return {
            "w1": (a1 + i_unit * a2) * h,
            "w2": (a3 + i_unit * a4) * h,
            "wbar1": (a1 - i_unit * a2) * h,
            "wbar2": (a3 - i_unit * a4) * h,
        }

    @classmethod
    def from_w_coordinates(cls, w1, w2, wbar1, wbar2, exact: bool = True) -> "OneFormC":
        if exact:
            h, i_unit = HALF_SQRT2, I
        else:
            h, i_unit = promote(HALF_SQRT2).real, 1j
        return cls(
            (
                (w1 + wbar1) * h,
                (wbar1 - w1) * h * i_unit,
                (w2 + wbar2) * h,
                (wbar2 - w2) * h * i_unit,
            )
        )


def _half_and_i(exact: bool):
    if exact:
        return ExactScalar(Fraction(1, 2)), I
    return 0.5 + 0j, 1j


def hom_pm_to_oneform(m, direction: str) -> OneFormC:
    """The one-form whose block action between the chirality halves is ``m``.

    For ``plus_to_minus`` a matrix ``[[A, B], [C, D]]`` maps to
    ``(A-D)/2 e1 - i (A+D)/2 e2 + (B+C)/2 e3 + i (B-C)/2 e4``; the other
    direction flips the signs of the e1, e3 and e4 coefficients.
    """
    (A, B), (C, D) = (tuple(m[0]), tuple(m[1]))
    exact = isinstance(A, ExactScalar)
    half, i_unit = _half_and_i(exact)
    a1 = (A - D) * half
    a2 = -i_unit * (A + D) * half
    a3 = (B + C) * half
    a4 = i_unit * (B - C) * half
    if direction == "plus_to_minus":
        return OneFormC((a1, a2, a3, a4))
    if direction == "minus_to_plus":
        return OneFormC((-a1, a2, -a3, -a4))
    raise ValueError("direction must be 'plus_to_minus' or 'minus_to_plus'")


def oneform_to_hom(phi: OneFormC, direction: str) -> tuple:
    """Inverse of :func:`hom_pm_to_oneform` via the block matrices of e_i."""
    exact = phi.exact
    total = mx.zeros(2, 2, exact=exact)
    for i, c in enumerate(phi.coeffs, start=1):
        block = hom_restriction(i, direction)
        if not exact:
            block = tuple(tuple(promote(x) for x in row) for row in block)
        total = mx.mat_add(total, mx.mat_scale(block, c))
    return total


def spin4_spinor_action(g: SpinElement) -> tuple:
    """The block-diagonal 4x4 spinor matrix of a dimension-4 spin element."""
    return rep_matrix(g.value)
