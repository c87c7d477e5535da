"""Blade combinatorics and the undeformed Grassmann Hopf algebra.

Blades of the exterior algebra over an n-dimensional generating space are
encoded as integer bitmasks: bit i-1 is set iff generator e_i is present.
The linear order on the 2^n blades is the integer order of the mask, so for
n=2 the basis reads Id, e1, e2, e1^e2.

Scalars are either exact (``fractions.Fraction`` / int) or binary64 floats;
a computation runs in one mode throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "Blade",
    "Element",
    "TensorElement",
    "blade_wedge",
    "wedge",
    "grassmann_coproduct",
    "antipode",
    "counit",
    "grade_project",
    "alpha_encode",
    "alpha_decode",
    "switch_permutation",
    "shuffle_splits",
    "shuffle_sign",
    "tensor_mul",
]


@dataclass(frozen=True)
class Blade:
    """A basis monomial e_{i1}^...^e_{ir}, encoded as an index subset."""

    dim: int
    mask: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be positive, got {self.dim}")
        if not 0 <= self.mask < (1 << self.dim):
            raise ValueError(f"mask {self.mask} out of range for dim {self.dim}")

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def indices(self) -> tuple[int, ...]:
        """Generator indices (1-based, increasing)."""
        return tuple(i + 1 for i in range(self.dim) if self.mask >> i & 1)

    def __str__(self):
        if self.mask == 0:
            return "Id"
        return "e" + "".join(str(i) for i in self.indices)


def _fmt_coeff(c) -> str:
    s = str(c)
    return f"({s})" if "/" in s or s.startswith("-") else s


@dataclass(frozen=True)
class Element:
    """Sparse scalar combination of blades; zero coefficients are dropped."""

    dim: int
    coeffs: dict = field(default_factory=dict)  # mask -> scalar

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {m: c for m, c in self.coeffs.items() if c != 0}
        )
        for m in self.coeffs:
            if not 0 <= m < (1 << self.dim):
                raise ValueError(f"blade mask {m} out of range for dim {self.dim}")

    @classmethod
    def zero(cls, dim: int) -> "Element":
        return cls(dim, {})

    @classmethod
    def blade(cls, dim: int, mask: int, coeff=1) -> "Element":
        return cls(dim, {mask: coeff})

    @classmethod
    def unit(cls, dim: int) -> "Element":
        return cls(dim, {0: 1})

    @classmethod
    def generator(cls, dim: int, i: int) -> "Element":
        """The generator e_i (1-based)."""
        if not 1 <= i <= dim:
            raise ValueError(f"generator index {i} out of range for dim {dim}")
        return cls(dim, {1 << (i - 1): 1})

    def __add__(self, other: "Element") -> "Element":
        _check_dims(self.dim, other.dim)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return Element(self.dim, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "Element":
        return Element(self.dim, {m: scalar * c for m, c in self.coeffs.items()})

    def __neg__(self) -> "Element":
        return (-1) * self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.dim == other.dim
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_vector(self, dtype=object) -> np.ndarray:
        """Dense coefficient column in the blade basis."""
        v = np.full(1 << self.dim, 0, dtype=dtype)
        for m, c in self.coeffs.items():
            v[m] = c
        return v

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = [
            f"{_fmt_coeff(c)}*{Blade(self.dim, m)}"
            for m, c in sorted(self.coeffs.items())
        ]
        return " + ".join(parts)


@dataclass(frozen=True)
class TensorElement:
    """Sparse element of the twofold tensor space, keyed by blade-mask pairs."""

    dim: int
    coeffs: dict = field(default_factory=dict)  # (mask1, mask2) -> scalar

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {k: c for k, c in self.coeffs.items() if c != 0}
        )

    def __add__(self, other: "TensorElement") -> "TensorElement":
        _check_dims(self.dim, other.dim)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(self.dim, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "TensorElement":
        return TensorElement(
            self.dim, {k: scalar * c for k, c in self.coeffs.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorElement)
            and self.dim == other.dim
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_vector(self, dtype=object) -> np.ndarray:
        """Dense coefficient column in the paired blade basis (alpha order)."""
        v = np.full(1 << (2 * self.dim), 0, dtype=dtype)
        for (i, j), c in self.coeffs.items():
            v[alpha_encode(i, j, self.dim)] = c
        return v


def _check_dims(a: int, b: int):
    if a != b:
        raise ValueError(f"dimension mismatch: {a} != {b}")


def blade_wedge(dim: int, s: int, t: int):
    """Wedge two blade masks: returns (sign, mask), sign 0 on overlap.

    The sign is the parity of the permutation sorting the concatenated
    index sequence, ie the number of pairs (i in s, j in t) with i > j.
    """
    if s & t:
        return 0, 0
    inversions = 0
    for b in range(dim):
        if t >> b & 1:
            inversions += (s >> (b + 1)).bit_count()
    return (-1) ** inversions, s | t


def wedge(x: Element, y: Element) -> Element:
    """Exterior product, the bilinear extension of blade_wedge."""
    _check_dims(x.dim, y.dim)
    out: dict = {}
    for mx, cx in x.coeffs.items():
        for my, cy in y.coeffs.items():
            sign, m = blade_wedge(x.dim, mx, my)
            if sign:
                out[m] = out.get(m, 0) + sign * cx * cy
    return Element(x.dim, out)


def shuffle_sign(s1: int, s2: int) -> int:
    """Parity of the shuffle splitting sorted(s1|s2) into sorted(s1)||sorted(s2).

    Equals (-1)^#{(i in s1, j in s2) : j < i}.
    """
    inversions = 0
    for b in range(max(s1.bit_length(), s2.bit_length())):
        if s1 >> b & 1:
            inversions += (s2 & ((1 << b) - 1)).bit_count()
    return (-1) ** inversions


def shuffle_splits(mask: int):
    """All 2^grade ordered splits (s1, s2, sign) with s1 | s2 = mask."""
    # standard submask enumeration, descending
    sub = mask
    while True:
        yield sub, mask ^ sub, shuffle_sign(sub, mask ^ sub)
        if sub == 0:
            break
        sub = (sub - 1) & mask


def grassmann_coproduct(x: Element) -> TensorElement:
    """Shuffle coproduct: each blade splits into all signed ordered halves."""
    out: dict = {}
    for m, c in x.coeffs.items():
        for s1, s2, sign in shuffle_splits(m):
            k = (s1, s2)
            out[k] = out.get(k, 0) + sign * c
    return TensorElement(x.dim, out)


def antipode(x: Element) -> Element:
    """Multiply each grade-s component by (-1)^s."""
    return Element(
        x.dim, {m: ((-1) ** m.bit_count()) * c for m, c in x.coeffs.items()}
    )


def counit(x: Element):
    """Coefficient of the empty blade."""
    return x.coeffs.get(0, 0)


def grade_project(x: Element, r: int) -> Element:
    """Keep exactly the grade-r coefficients."""
    if not 0 <= r <= x.dim:
        raise ValueError(f"grade {r} out of range for dim {x.dim}")
    return Element(x.dim, {m: c for m, c in x.coeffs.items() if m.bit_count() == r})


def alpha_encode(i: int, j: int, n: int) -> int:
    """Linear index of e_i (x) e_j in the paired basis; first slot fastest."""
    top = 1 << n
    if not (0 <= i < top and 0 <= j < top):
        raise ValueError(f"blade index out of range for dim {n}: ({i}, {j})")
    return j * top + i


def alpha_decode(index: int, n: int) -> tuple[int, int]:
    """Inverse of alpha_encode."""
    top = 1 << n
    if not 0 <= index < top * top:
        raise ValueError(f"pair index {index} out of range for dim {n}")
    return index % top, index // top


def switch_permutation(n: int) -> np.ndarray:
    """Permutation matrix swapping the two tensor slots, P^2 = Id.

    This is the ungraded permutation; graded signs live inside the algebra
    maps, not in P.
    """
    size = 1 << (2 * n)
    p = np.full((size, size), 0, dtype=object)
    for idx in range(size):
        i, j = alpha_decode(idx, n)
        p[alpha_encode(j, i, n), idx] = 1
    return p


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Graded product on the tensor square: (x@y)(z@w) = (-1)^{|y||z|} xz @ yw."""
    _check_dims(a.dim, b.dim)
    out: dict = {}
    for (x, y), ca in a.coeffs.items():
        for (z, w), cb in b.coeffs.items():
            s1, m1 = blade_wedge(a.dim, x, z)
            if not s1:
                continue
            s2, m2 = blade_wedge(a.dim, y, w)
            if not s2:
                continue
            sign = s1 * s2 * (-1) ** (y.bit_count() * z.bit_count())
            k = (m1, m2)
            out[k] = out.get(k, 0) + sign * ca * cb
    return TensorElement(a.dim, out)
