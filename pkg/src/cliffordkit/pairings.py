"""Hermitian and symplectic structures on the spinor halves.

Both forms are written in the ordered half-bases ``(1, w1^w2)`` and
``(w1, w2)``.  The Hermitian product conjugates its first slot; the
symplectic form is bilinear and alternating.  Each induces an
identification of a half with its dual, and through those identifications
the tensor squares and mixed tensors of the halves decompose into scalars,
(anti-)self-dual two-forms and one-forms.  The composition of the two
dual identifications produces the anti-linear map ``j`` that turns the
positive half into a quaternion module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import matrices as mx
from .algebra import AlgebraContext, quantize
from .scalars import ExactScalar, HALF_SQRT2, I
from .selfdual import complex_sd_basis
from .spinor import polarization, rep_matrix

__all__ = [
    "SpinorHalf",
    "DualFunctional",
    "TensorMap",
    "DecompResult",
    "hermitian_form",
    "symplectic_form",
    "riesz_dual",
    "dual_j",
    "tensor_to_map",
    "tensor_to_forms",
    "quat_apply",
]


def _conj(x):
    return x.conjugate() if isinstance(x, ExactScalar) else complex(x).conjugate()


@dataclass(frozen=True)
class SpinorHalf:
    """Two coordinates in the standard basis of one chirality half."""

    c1: object
    c2: object
    chirality: str

    def __post_init__(self):
        if self.chirality not in ("+", "-"):
            raise ValueError("chirality must be '+' or '-'")

    @property
    def exact(self) -> bool:
        return isinstance(self.c1, ExactScalar)

    def scale(self, s) -> "SpinorHalf":
        return SpinorHalf(self.c1 * s, self.c2 * s, self.chirality)

    def __add__(self, other: "SpinorHalf") -> "SpinorHalf":
        self._check(other)
        return SpinorHalf(self.c1 + other.c1, self.c2 + other.c2, self.chirality)

    def _check(self, other: "SpinorHalf"):
        if self.chirality != other.chirality:
            raise ValueError("chirality mismatch")


def hermitian_form(s: SpinorHalf, t: SpinorHalf):
    """``conj(s1) t1 + conj(s2) t2``; sesquilinear, positive on the diagonal."""
    s._check(t)
    return _conj(s.c1) * t.c1 + _conj(s.c2) * t.c2


def symplectic_form(s: SpinorHalf, t: SpinorHalf):
    """``s1 t2 - s2 t1``; bilinear and alternating."""
    s._check(t)
    return s.c1 * t.c2 - s.c2 * t.c1


@dataclass(frozen=True)
class DualFunctional:
    """A linear functional on a half, as dual-basis coordinates.

    Evaluation against ``t`` is ``d1 t1 + d2 t2``.
    """

    d1: object
    d2: object
    chirality: str

    def evaluate(self, t: SpinorHalf):
        if t.chirality != self.chirality:
            raise ValueError("chirality mismatch")
        return self.d1 * t.c1 + self.d2 * t.c2


def riesz_dual(s: SpinorHalf, kind: str) -> DualFunctional:
    """The dual of ``s`` under the chosen form.

    Hermitian: ``t |-> <s, t>`` has dual coordinates ``(conj s1, conj s2)``
    (an anti-linear bijection).  Symplectic: ``t |-> {s, t}`` has dual
    coordinates ``(-s2, s1)`` (a linear bijection).
    """
    if kind == "hermitian":
        return DualFunctional(_conj(s.c1), _conj(s.c2), s.chirality)
    if kind == "symplectic":
        return DualFunctional(-s.c2, s.c1, s.chirality)
    raise ValueError("kind must be 'hermitian' or 'symplectic'")


def dual_j(f: DualFunctional) -> DualFunctional:
    """The dual-side companion of ``j``: the Hermitian dual of a vector is
    sent to the symplectic dual of its ``j`` image."""
    companion = SpinorHalf(_conj(f.d1), _conj(f.d2), f.chirality)
    return riesz_dual(quat_apply("j", companion), "symplectic")


@dataclass(frozen=True)
class TensorMap:
    """A 2x2 matrix realizing a tensor of spinor halves as a map.

    The matrix sends the chirality half of the first factor to the half of
    the second; ``conjugates_first_factor`` tracks whether the construction
    is anti-linear in the first slot.
    """

    matrix: tuple
    source_chirality: str
    target_chirality: str
    linearity_tag: str

    @property
    def conjugates_first_factor(self) -> bool:
        return self.linearity_tag == "hermitian"


def tensor_to_map(first: SpinorHalf, second: SpinorHalf, kind: str) -> TensorMap:
    """The map ``t |-> form(first, t) * second``.

    With first components (a, b) and second components (c, d) the matrix is
    ``[[conj(a) c, conj(b) c], [conj(a) d, conj(b) d]]`` for the Hermitian
    form and ``[[-b c, a c], [-b d, a d]]`` for the symplectic one.
    """
    a, b = first.c1, first.c2
    c, d = second.c1, second.c2
    if kind == "hermitian":
        row = (_conj(a), _conj(b))
    elif kind == "symplectic":
        row = (-b, a)
    else:
        raise ValueError("kind must be 'hermitian' or 'symplectic'")
    matrix = ((row[0] * c, row[1] * c), (row[0] * d, row[1] * d))
    return TensorMap(matrix, first.chirality, second.chirality, kind)


@dataclass(frozen=True)
class DecompResult:
    """A map between halves decomposed against the quantized form bases.

    For an endomorphism of one half, ``scalar_part`` multiplies the
    identity of that half and ``form_part`` holds coefficients over the
    complex (anti-)self-dual basis (keys ``diag``, ``ww``/``wbarw``,
    ``wbarwbar``/``wwbar``).  For a map between opposite halves the
    ``form_part`` holds one-form coefficients over ``w1, w2, wbar1, wbar2``
    and ``scalar_part`` is zero.
    """

    scalar_part: object
    form_part: dict
    linearity_tag: str
    source_chirality: str
    target_chirality: str

    def reconstruct(self, ctx: AlgebraContext) -> tuple:
        """Rebuild the 2x2 matrix through the quantized actions."""
        exact = ctx.backend == "exact"
        if self.source_chirality == self.target_chirality:
            sign = "+" if self.source_chirality == "+" else "-"
            basis = complex_sd_basis(sign, ctx)
            block = slice(0, 2) if sign == "+" else slice(2, 4)
            total = mx.mat_scale(mx.identity(2, exact), self.scalar_part)
            for label, coeff in self.form_part.items():
                if not coeff:
                    continue
                full = basis[label][1]
                sub = tuple(tuple(row[block]) for row in full[block])
                total = mx.mat_add(total, mx.mat_scale(sub, coeff))
            return total
        pol = polarization(ctx)
        vectors = {
            "w1": pol.w(1),
            "w2": pol.w(2),
            "wbar1": pol.wbar(1),
            "wbar2": pol.wbar(2),
        }
        combo = ctx.zero()
        for label, coeff in self.form_part.items():
            if coeff:
                combo = combo + vectors[label] * coeff
        full = rep_matrix(quantize(combo))
        if self.source_chirality == "+":
            sub = (full[2][:2], full[3][:2])
        else:
            sub = (full[0][2:], full[1][2:])
        # the labeled one-form basis quantizes to sqrt2 times the matrix units
        scale = HALF_SQRT2 if exact else complex(HALF_SQRT2.to_complex())
        return mx.mat_scale(sub, scale)


def _quarter(exact: bool):
    return ExactScalar(Fraction(1, 4)) if exact else 0.25


def _half_s(exact: bool):
    return ExactScalar(Fraction(1, 2)) if exact else 0.5


def tensor_to_forms(first: SpinorHalf, second: SpinorHalf, kind: str) -> DecompResult:
    """Decompose a tensor of halves into scalar and form coefficients."""
    tm = tensor_to_map(first, second, kind)
    (A, B), (C, D) = tm.matrix
    exact = first.exact
    half = _half_s(exact)
    quarter = _quarter(exact)
    src, tgt = tm.source_chirality, tm.target_chirality
    if src == tgt == "+":
        form = {"diag": (D - A) * quarter, "ww": C * half, "wbarwbar": -B * half}
        scalar = (A + D) * half
    elif src == tgt == "-":
        form = {"diag": (A - D) * quarter, "wbarw": C * half, "wwbar": -B * half}
        scalar = (A + D) * half
    elif src == "+" and tgt == "-":
        form = {"w1": A, "w2": C, "wbar1": -D, "wbar2": B}
        scalar = ExactScalar(0) if exact else 0j
    else:
        form = {"w1": D, "w2": -C, "wbar1": -A, "wbar2": -B}
        scalar = ExactScalar(0) if exact else 0j
    return DecompResult(scalar, form, tm.linearity_tag, src, tgt)


def quat_apply(unit: str, s: SpinorHalf) -> SpinorHalf:
    """The quaternion units on the positive half.

    ``i`` multiplies the coordinates by the complex unit; ``j`` is the
    anti-linear map ``(s1, s2) |-> (-conj s2, conj s1)``; ``k = i o j``.
    """
    if s.chirality != "+":
        raise ValueError("the quaternionic structure is defined on the positive half")
    i_unit = I if s.exact else 1j
    if unit == "i":
        return SpinorHalf(i_unit * s.c1, i_unit * s.c2, "+")
    if unit == "j":
        return SpinorHalf(-_conj(s.c2), _conj(s.c1), "+")
    if unit == "k":
        return quat_apply("i", quat_apply("j", s))
    raise ValueError("unit must be 'i', 'j' or 'k'")
