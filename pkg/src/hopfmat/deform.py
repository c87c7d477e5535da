"""Bilinear forms, their Laplace extension to blades, and twisted products.

The circle (Clifford) product deforms the wedge by a bilinear form B on the
generators.  The extension B^ to blades follows the Laplace rules with
Grassmann shuffle signs; its sign convention is anchored so that the twisted
multiplication table of the standard 2-dimensional metric comes out with the
entries rho^2-nu^2 and -2 nu on the top-grade column.  On blades of equal
grade r this convention evaluates to (-1)^(r(r-1)/2) times the minor
det[B(s_p, t_q)].
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exterior import (
    Element,
    TensorElement,
    blade_wedge,
    grassmann_coproduct,
    shuffle_sign,
    tensor_mul,
    wedge,
)

__all__ = [
    "BilinearForm",
    "ExtendedForm",
    "laplace_extend",
    "circle_product",
    "grouplike_coproduct",
    "boolean_product",
    "minus_coproduct",
]


@dataclass(frozen=True)
class BilinearForm:
    """An n x n scalar matrix B(e_i, e_j) on the generators, not necessarily
    symmetric."""

    dim: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if len(rows) != self.dim or any(len(r) != self.dim for r in rows):
            raise ValueError(f"entries must be a {self.dim}x{self.dim} matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def zero(cls, dim: int) -> "BilinearForm":
        return cls(dim, tuple((0,) * dim for _ in range(dim)))

    @classmethod
    def diagonal(cls, diag) -> "BilinearForm":
        diag = tuple(diag)
        n = len(diag)
        return cls(n, tuple(
            tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)
        ))

    def __call__(self, i: int, j: int):
        """B(e_i, e_j), 1-based generator indices."""
        return self.entries[i - 1][j - 1]


class ExtendedForm:
    """Laplace extension B^ of a bilinear form to the full blade basis.

    Values are memoized; the object is read-only after creation apart from
    the internal cache, so concurrent reads are safe in CPython.
    """

    def __init__(self, form: BilinearForm):
        self.form = form
        self.dim = form.dim
        self._cache: dict = {(0, 0): 1}

    def __call__(self, s: int, t: int):
        """B^(e_S, e_T) on blade masks; zero unless grades agree."""
        if s.bit_count() != t.bit_count():
            return 0
        key = (s, t)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        # peel the lowest generator of S:
        # B^(e_s ^ e_S', e_T) =
        #   sum_t (-1)^(r-1) * shuffle_sign(t, T\t) * B(s,t) * B^(e_S', e_T\t)
        r = s.bit_count()
        low = s & -s
        rest = s ^ low
        s_idx = low.bit_length()  # 1-based generator index
        total = 0
        tt = t
        while tt:
            tb = tt & -tt
            tt ^= tb
            b_val = self.form(s_idx, tb.bit_length())
            if b_val != 0:
                sign = (-1) ** (r - 1) * shuffle_sign(tb, t ^ tb)
                total = total + sign * b_val * self(rest, t ^ tb)
        self._cache[key] = total
        return total


def laplace_extend(form: BilinearForm) -> ExtendedForm:
    return ExtendedForm(form)


def circle_product(x: Element, y: Element, form) -> Element:
    """Cliffordization: x o y = sum (-1)^(|x2||y1|) B^(x1,y1) x2 ^ y2.

    ``form`` may be a BilinearForm or a pre-built ExtendedForm (pass the
    latter when multiplying many pairs with the same metric).
    """
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} != {y.dim}")
    ext = form if isinstance(form, ExtendedForm) else ExtendedForm(form)
    if ext.dim != x.dim:
        raise ValueError(f"form dimension {ext.dim} != element dimension {x.dim}")
    dx = grassmann_coproduct(x)
    dy = grassmann_coproduct(y)
    out: dict = {}
    for (x1, x2), cx in dx.coeffs.items():
        for (y1, y2), cy in dy.coeffs.items():
            if x1.bit_count() != y1.bit_count():
                continue
            b_val = ext(x1, y1)
            if b_val == 0:
                continue
            wsign, m = blade_wedge(x.dim, x2, y2)
            if not wsign:
                continue
            sign = wsign * (-1) ** (x2.bit_count() * y1.bit_count())
            out[m] = out.get(m, 0) + sign * cx * cy * b_val
    return Element(x.dim, out)


def grouplike_coproduct(x: Element) -> TensorElement:
    """delta(b) = b (x) b on each basis blade, extended linearly.

    Basis-dependent by construction: the group-like rule cannot hold
    linearly for all elements at once.
    """
    return TensorElement(x.dim, {(m, m): c for m, c in x.coeffs.items()})


def boolean_product(x: Element, y: Element) -> Element:
    """Idempotent product: b o b' = b if b = b', else 0 (transpose of the
    group-like coproduct's structure matrix)."""
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} != {y.dim}")
    out: dict = {}
    for m, cx in x.coeffs.items():
        cy = y.coeffs.get(m)
        if cy is not None:
            out[m] = out.get(m, 0) + cx * cy
    return Element(x.dim, out)


def minus_coproduct(x: Element) -> TensorElement:
    """Kernel-valued coproduct: e_i -> e_i (x) Id - Id (x) e_i, extended as a
    homomorphism of the graded tensor algebra; Id -> Id (x) Id."""
    n = x.dim
    out = TensorElement(n, {})
    for m, c in x.coeffs.items():
        term = TensorElement(n, {(0, 0): 1})
        for b in range(n):
            if m >> b & 1:
                gen = 1 << b
                factor = TensorElement(n, {(gen, 0): 1, (0, gen): -1})
                term = tensor_mul(term, factor)
        out = out + c * term
    return out


def wedge_of_tensor(t: TensorElement) -> Element:
    """Apply the product map to a tensor element: m(sum c x (x) y) = sum c x^y."""
    out = Element.zero(t.dim)
    for (a, b), c in t.coeffs.items():
        sign, m = blade_wedge(t.dim, a, b)
        if sign:
            out = out + Element.blade(t.dim, m, sign * c)
    return out
