"""Hodge duality on the exterior algebra and the six two-form generators.

The star operator is defined against the all-ones form and the standard
orientation: a blade maps to its complement with the sign of the
permutation that lists the blade indices followed by the complement.  In
dimension four the grade-2 space splits into +-1 eigenspaces with bases

    wp_1 = e1^e2 + e3^e4   wp_2 = e1^e3 + e4^e2   wp_3 = e1^e4 + e2^e3
    wm_1 = e1^e2 - e3^e4   wm_2 = e1^e3 - e4^e2   wm_3 = e1^e4 - e2^e3

The same six symbols also name their quantizations; an explicit
``interpretation`` flag keeps the wedge and Clifford readings apart, since
the isotropic-basis expressions differ between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraContext,
    GradeError,
    Multivector,
    clifford_product,
    quantize,
    wedge,
)
from .scalars import I
from .spinor import polarization, rep_matrix

__all__ = [
    "WpmBasis",
    "hodge_star",
    "sd_project",
    "wpm_basis",
    "wpm_in_polarization",
    "wpm_spinor_matrices",
    "complex_sd_basis",
]


def hodge_star(x: Multivector) -> Multivector:
    """Blade-wise oriented complement with permutation sign."""
    ctx = x.context
    if not ctx.is_euclidean:
        raise ValueError("the star operator is defined for the all-ones form")
    full = (1 << ctx.dim) - 1
    out = {}
    for mask, c in x.terms.items():
        comp = full ^ mask
        # inversions between the blade list and the ascending complement
        inversions = 0
        rest = mask
        while rest:
            low = rest & -rest
            inversions += (comp & (low - 1)).bit_count()
            rest ^= low
        out[comp] = -c if inversions & 1 else c
    return Multivector(ctx, out)


def sd_project(x: Multivector, sign: int) -> Multivector:
    """The idempotent (1 +- star)/2 on grade-2 elements."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not x.is_homogeneous(2):
        raise GradeError("sd_project acts on grade-2 elements")
    starred = hodge_star(x)
    total = x + starred if sign == 1 else x - starred
    half = 0.5 if x.context.backend == "float" else Fraction(1, 2)
    return total * half


@dataclass(frozen=True)
class WpmBasis:
    """The three self-dual and three anti-self-dual generators."""

    plus: tuple
    minus: tuple

    def get(self, which: str, i: int) -> Multivector:
        if which == "+":
            return self.plus[i - 1]
        if which == "-":
            return self.minus[i - 1]
        raise ValueError("which must be '+' or '-'")


def _e(ctx: AlgebraContext, i: int, j: int, coeff) -> Multivector:
    return ctx.from_terms({(1 << (i - 1)) | (1 << (j - 1)): coeff})


def wpm_basis(ctx: AlgebraContext) -> WpmBasis:
    if ctx.dim != 4 or not ctx.is_euclidean:
        raise ValueError("the duality basis lives in dimension 4 with the all-ones form")
    one = 1 if ctx.backend == "exact" else 1.0
    plus = (
        _e(ctx, 1, 2, one) + _e(ctx, 3, 4, one),
        _e(ctx, 1, 3, one) - _e(ctx, 2, 4, one),  # e1^e3 + e4^e2
        _e(ctx, 1, 4, one) + _e(ctx, 2, 3, one),
    )
    minus = (
        _e(ctx, 1, 2, one) - _e(ctx, 3, 4, one),
        _e(ctx, 1, 3, one) + _e(ctx, 2, 4, one),  # e1^e3 - e4^e2
        _e(ctx, 1, 4, one) - _e(ctx, 2, 3, one),
    )
    return WpmBasis(plus, minus)


def wpm_in_polarization(which: str, i: int, interpretation: str, ctx: AlgebraContext) -> Multivector:
    """The duality generators written in the isotropic basis.

    ``interpretation`` selects the product used to expand the expression:
    ``"clifford"`` gives e.g. ``i (2 + wbar1 w1 + wbar2 w2)`` for the first
    self-dual generator, ``"form"`` gives ``i (wbar1 ^ w1 + wbar2 ^ w2)``.
    No coercion between the two readings is ever performed.
    """
    if interpretation == "clifford":
        mul = clifford_product
        with_two = True
    elif interpretation == "form":
        mul = wedge
        with_two = False
    else:
        raise ValueError("interpretation must be 'clifford' or 'form'")
    pol = polarization(ctx)
    w1, w2 = pol.w(1), pol.w(2)
    b1, b2 = pol.wbar(1), pol.wbar(2)
    i_unit = I if ctx.backend == "exact" else 1j
    two = 2 if ctx.backend == "exact" else 2.0
    if which == "+":
        if i == 1:
            base = mul(b1, w1) + mul(b2, w2)
            if with_two:
                base = base + ctx.scalar(two)
            return base * i_unit
        if i == 2:
            return mul(w1, w2) + mul(b1, b2)
        if i == 3:
            return (mul(w1, w2) - mul(b1, b2)) * i_unit
    elif which == "-":
        if i == 1:
            return (mul(b1, w1) - mul(b2, w2)) * i_unit
        if i == 2:
            return mul(b1, w2) + mul(w1, b2)
        if i == 3:
            return (mul(b1, w2) - mul(w1, b2)) * i_unit
    raise ValueError("which must be '+' or '-' and i in 1..3")


def wpm_spinor_matrices(ctx: AlgebraContext) -> dict:
    """Spinor matrices of the quantized duality generators.

    The self-dual three act only on the chirality +1 block, the
    anti-self-dual three only on the -1 block.
    """
    basis = wpm_basis(ctx)
    out = {}
    for i in (1, 2, 3):
        out[f"wp{i}"] = rep_matrix(quantize(basis.plus[i - 1]))
        out[f"wm{i}"] = rep_matrix(quantize(basis.minus[i - 1]))
    return out


def complex_sd_basis(which: str, ctx: AlgebraContext) -> dict:
    """The standard complex basis of the (anti-)self-dual two-forms.

    For the self-dual side: ``wbar1^w1 + wbar2^w2`` (equal to ``-i`` times
    the first generator), ``w1^w2`` and ``wbar1^wbar2``; the anti-self-dual
    side swaps in the mixed wedges.  Values are wedge-expanded two-forms in
    basis-vector coordinates, paired with their quantized spinor matrices.
    """
    pol = polarization(ctx)
    w1, w2 = pol.w(1), pol.w(2)
    b1, b2 = pol.wbar(1), pol.wbar(2)
    if which == "+":
        forms = {
            "diag": wedge(b1, w1) + wedge(b2, w2),
            "ww": wedge(w1, w2),
            "wbarwbar": wedge(b1, b2),
        }
    elif which == "-":
        forms = {
            "diag": wedge(b1, w1) - wedge(b2, w2),
            "wbarw": wedge(b1, w2),
            "wwbar": wedge(w1, b2),
        }
    else:
        raise ValueError("which must be '+' or '-'")
    return {name: (form, rep_matrix(quantize(form))) for name, form in forms.items()}
