"""Explicit low-dimensional algebra isomorphisms as generator tables.

Each map is stored as a table of basis-blade images plus linear extension;
multiplicativity is certified by the test suite rather than assumed, so a
mistranscribed entry fails loudly.  The quaternion-pair tables use the one
convention compatible with the spinor action implemented in
:mod:`cliffordkit.spinor`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraContext, Multivector, context
from .quaternions import Quaternion, Sp1Element, complex_rep
from .scalars import ExactScalar
from .spin import SpinElement

__all__ = [
    "HPlusH",
    "ISO_TAGS",
    "parse_iso_tag",
    "iso_apply",
    "iso_invert",
    "even_lift",
    "even_unlift",
    "spin4_split",
    "spin4_to_su2su2",
]

ISO_TAGS = (
    "C1_COMPLEX",
    "C2_QUAT",
    "C3_HH",
    "EVEN_LIFT",
    "C4EVEN_HH",
    "SPIN4_SP1SP1",
    "SPIN4_SU2SU2",
)


@dataclass(frozen=True)
class HPlusH:
    """An element of the direct-sum algebra of two quaternion copies."""

    left: Quaternion
    right: Quaternion

    def __mul__(self, other: "HPlusH") -> "HPlusH":
        return HPlusH(self.left * other.left, self.right * other.right)

    def __add__(self, other: "HPlusH") -> "HPlusH":
        return HPlusH(self.left + other.left, self.right + other.right)

    def __neg__(self) -> "HPlusH":
        return HPlusH(-self.left, -self.right)

    def scale(self, s) -> "HPlusH":
        return HPlusH(self.left.scale(s), self.right.scale(s))

    @classmethod
    def zero(cls, exact: bool = True) -> "HPlusH":
        return cls(Quaternion.zero(exact), Quaternion.zero(exact))


# -- generator tables ------------------------------------------------------
#
# Values are ((a, b, c, d), (a, b, c, d)) component pairs; masks are blade
# bitmasks.  The three-dimensional table and the even four-dimensional
# table agree through the lift e_i |-> e_i e_4.

_C3_FORWARD = {
    0b000: ((1, 0, 0, 0), (1, 0, 0, 0)),
    0b001: ((0, 0, 0, 1), (0, 0, 0, 1)),    # e1 -> k (+) k
    0b010: ((0, 0, 1, 0), (0, 0, -1, 0)),   # e2 -> j (+) -j
    0b100: ((0, -1, 0, 0), (0, -1, 0, 0)),  # e3 -> -i (+) -i
    0b011: ((0, -1, 0, 0), (0, 1, 0, 0)),   # e1e2 -> -i (+) i
    0b101: ((0, 0, -1, 0), (0, 0, -1, 0)),  # e1e3 -> -j (+) -j
    0b110: ((0, 0, 0, 1), (0, 0, 0, -1)),   # e2e3 -> k (+) -k
    0b111: ((-1, 0, 0, 0), (1, 0, 0, 0)),   # e1e2e3 -> -1 (+) 1
}

_H = Fraction(1, 2)

# slot order: (left 1, left i, left j, left k, right 1, right i, right j, right k)
_C3_INVERSE = (
    {0b000: _H, 0b111: -_H},   # 1 (+) 0
    {0b011: -_H, 0b100: -_H},  # i (+) 0
    {0b101: -_H, 0b010: _H},   # j (+) 0
    {0b110: _H, 0b001: _H},    # k (+) 0
    {0b000: _H, 0b111: _H},    # 0 (+) 1
    {0b011: _H, 0b100: -_H},   # 0 (+) i
    {0b101: -_H, 0b010: -_H},  # 0 (+) j
    {0b110: -_H, 0b001: _H},   # 0 (+) k
)

_C4EVEN_FORWARD = {
    0b0000: ((1, 0, 0, 0), (1, 0, 0, 0)),
    0b0011: ((0, -1, 0, 0), (0, 1, 0, 0)),   # e1e2 -> -i (+) i
    0b0101: ((0, 0, -1, 0), (0, 0, -1, 0)),  # e1e3 -> -j (+) -j
    0b1001: ((0, 0, 0, 1), (0, 0, 0, 1)),    # e1e4 -> k (+) k
    0b0110: ((0, 0, 0, 1), (0, 0, 0, -1)),   # e2e3 -> k (+) -k
    0b1010: ((0, 0, 1, 0), (0, 0, -1, 0)),   # e2e4 -> j (+) -j
    0b1100: ((0, -1, 0, 0), (0, -1, 0, 0)),  # e3e4 -> -i (+) -i
    0b1111: ((-1, 0, 0, 0), (1, 0, 0, 0)),   # e1e2e3e4 -> -1 (+) 1
}

_C4EVEN_INVERSE = (
    {0b0000: _H, 0b1111: -_H},   # 1 (+) 0
    {0b0011: -_H, 0b1100: -_H},  # i (+) 0
    {0b0101: -_H, 0b1010: _H},   # j (+) 0
    {0b0110: _H, 0b1001: _H},    # k (+) 0
    {0b0000: _H, 0b1111: _H},    # 0 (+) 1
    {0b0011: _H, 0b1100: -_H},   # 0 (+) i
    {0b0101: -_H, 0b1010: -_H},  # 0 (+) j
    {0b0110: -_H, 0b1001: _H},   # 0 (+) k
)

_C2_FORWARD = {
    0b00: (1, 0, 0, 0),
    0b01: (0, 1, 0, 0),  # e1 -> i
    0b10: (0, 0, 1, 0),  # e2 -> j
    0b11: (0, 0, 0, 1),  # e1e2 -> k
}


def parse_iso_tag(text: str) -> tuple[str, int | None]:
    """Parse a tag string, accepting ``EVEN_LIFT(n)`` for the lift."""
    text = text.strip()
    if text.startswith("EVEN_LIFT(") and text.endswith(")"):
        return "EVEN_LIFT", int(text[len("EVEN_LIFT(") : -1])
    if text not in ISO_TAGS:
        raise ValueError(f"unknown isomorphism tag {text!r}")
    return text, None


def _real_coefficient(mv: Multivector, mask: int):
    ctx = mv.context
    c = mv.terms.get(mask)
    if c is None:
        return ExactScalar(0) if ctx.backend == "exact" else 0.0
    if ctx.backend == "exact":
        if not c.is_real:
            raise ValueError("this isomorphism is defined over the reals")
        return c
    if abs(c.imag) > ctx.tol * max(1.0, abs(c)):
        raise ValueError("this isomorphism is defined over the reals")
    return c.real


def _require(ctx: AlgebraContext, dim: int, what: str):
    if ctx.dim != dim:
        raise ValueError(f"{what} needs a dimension-{dim} element")
    if not ctx.is_euclidean:
        raise ValueError(f"{what} needs the all-ones quadratic form")


def _pairs_apply(mv: Multivector, table, dim: int, what: str) -> HPlusH:
    _require(mv.context, dim, what)
    exact = mv.context.backend == "exact"
    out = HPlusH.zero(exact)
    for mask in mv.terms:
        if mask not in table:
            raise ValueError(f"{what} is not defined on odd blades")
        c = _real_coefficient(mv, mask)
        l_comp, r_comp = table[mask]
        out = out + HPlusH(
            Quaternion(*l_comp, exact=exact).scale(c),
            Quaternion(*r_comp, exact=exact).scale(c),
        )
    return out


def _pairs_invert(y: HPlusH, inverse_table, ctx: AlgebraContext) -> Multivector:
    coeffs = list(y.left.components()) + list(y.right.components())
    total = ctx.zero()
    for c, table in zip(coeffs, inverse_table):
        if not c:
            continue
        total = total + ctx.from_terms(table) * c
    return total


def _ctx_for(exact: bool, dim: int) -> AlgebraContext:
    return context(dim, backend="exact" if exact else "float")


def iso_apply(tag: str, x, n: int | None = None):
    """Apply one of the named isomorphisms to an element of its source."""
    if tag == "C1_COMPLEX":
        _require(x.context, 1, tag)
        a = _real_coefficient(x, 0b0)
        b = _real_coefficient(x, 0b1)
        if x.context.backend == "exact":
            return a + ExactScalar(0, 1) * b
        return complex(a, b)
    if tag == "C2_QUAT":
        _require(x.context, 2, tag)
        exact = x.context.backend == "exact"
        out = Quaternion.zero(exact)
        for mask in x.terms:
            c = _real_coefficient(x, mask)
            out = out + Quaternion(*_C2_FORWARD[mask], exact=exact).scale(c)
        return out
    if tag == "C3_HH":
        return _pairs_apply(x, _C3_FORWARD, 3, tag)
    if tag == "C4EVEN_HH":
        if not x.has_even_parity():
            raise ValueError("C4EVEN_HH is defined on the even subalgebra")
        return _pairs_apply(x, _C4EVEN_FORWARD, 4, tag)
    if tag == "EVEN_LIFT":
        if n is None:
            raise ValueError("EVEN_LIFT needs its dimension parameter")
        return even_lift(n, x)
    if tag == "SPIN4_SP1SP1":
        return spin4_split(x)
    if tag == "SPIN4_SU2SU2":
        return spin4_to_su2su2(x)
    raise ValueError(f"unknown isomorphism tag {tag!r}")


def iso_invert(tag: str, y, n: int | None = None):
    """Two-sided inverse of :func:`iso_apply` on the target algebra."""
    if tag == "C1_COMPLEX":
        if isinstance(y, ExactScalar):
            ctx = _ctx_for(True, 1)
            return ctx.from_terms({0b0: y.real(), 0b1: y.imag()})
        z = complex(y)
        ctx = _ctx_for(False, 1)
        return ctx.from_terms({0b0: z.real, 0b1: z.imag})
    if tag == "C2_QUAT":
        ctx = _ctx_for(y.exact, 2)
        a, b, c, d = y.components()
        return ctx.from_terms({0b00: a, 0b01: b, 0b10: c, 0b11: d})
    if tag == "C3_HH":
        ctx = _ctx_for(y.left.exact, 3)
        return _pairs_invert(y, _C3_INVERSE, ctx)
    if tag == "C4EVEN_HH":
        ctx = _ctx_for(y.left.exact, 4)
        return _pairs_invert(y, _C4EVEN_INVERSE, ctx)
    if tag == "EVEN_LIFT":
        if n is None:
            raise ValueError("EVEN_LIFT needs its dimension parameter")
        return even_unlift(n, y)
    raise ValueError(f"isomorphism tag {tag!r} has no implemented inverse")


def even_lift(n: int, x: Multivector) -> Multivector:
    """The algebra embedding of a dim-n Clifford algebra onto the even part
    one dimension up: even blades are unchanged, odd blades pick up the new
    last generator (appended at the end, so no sign)."""
    if not 1 <= n <= 11:
        raise ValueError("even_lift supports source dimensions 1..11")
    _require(x.context, n, "even_lift")
    ctx = context(n + 1, backend=x.context.backend, tol=x.context.tol)
    top = 1 << n
    terms = {}
    for mask, c in x.terms.items():
        terms[mask | top if mask.bit_count() % 2 else mask] = c
    return ctx.from_terms(terms)


def even_unlift(n: int, y: Multivector) -> Multivector:
    """Inverse of :func:`even_lift`: strips the last generator off odd-lifted
    blades of an even element one dimension up."""
    if not 1 <= n <= 11:
        raise ValueError("even_unlift supports target dimensions 1..11")
    _require(y.context, n + 1, "even_unlift")
    if not y.has_even_parity():
        raise ValueError("even_unlift is defined on the even subalgebra")
    ctx = context(n, backend=y.context.backend, tol=y.context.tol)
    top = 1 << n
    terms = {}
    for mask, c in y.terms.items():
        terms[mask ^ top if mask & top else mask] = c
    return ctx.from_terms(terms)


def spin4_split(g: SpinElement) -> tuple[Sp1Element, Sp1Element]:
    """Split a dimension-4 spin element into its two unit-quaternion parts."""
    pair = iso_apply("C4EVEN_HH", g.value)
    if not (pair.left.is_unit(g.context.tol) and pair.right.is_unit(g.context.tol)):
        raise ValueError("non-unit components: the element is not in the spin group")
    return Sp1Element(pair.left), Sp1Element(pair.right)


def spin4_to_su2su2(g: SpinElement) -> tuple[tuple, tuple]:
    """The pair of 2x2 unitary matrices of a dimension-4 spin element."""
    left, right = spin4_split(g)
    return complex_rep(left.q), complex_rep(right.q)
