"""Rectangular structure matrices of products on the blade basis.

A bilinear product on the 2^n-dimensional blade space is materialized as a
2^n x 4^n matrix m whose column alpha_encode(i, j) holds the coefficients of
product(e_i, e_j); the Euclidean-dual coproduct is its transpose.  From these
we form the Gram operators A = m m^T and B = m^T m, iterated operators, and
exact polynomial identities.

Matrices are plain numpy arrays: dtype object with Fraction entries in exact
mode, float64 in float mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .deform import ExtendedForm, boolean_product, circle_product
from .exterior import Element, alpha_decode, wedge

__all__ = [
    "StructureTables",
    "build_product_matrix",
    "grassmann_tables",
    "clifford_tables",
    "boolean_tables",
    "gram_A",
    "gram_B",
    "iterated_product_matrix",
    "iterated_gram",
    "poly_annihilates",
    "spectrum_multiset",
    "exact_rank",
    "exact_identity",
    "is_exact",
    "to_float",
]


def exact_identity(size: int) -> np.ndarray:
    # python ints: exact and much faster than Fraction for integer tables
    m = np.full((size, size), 0, dtype=object)
    for i in range(size):
        m[i, i] = 1
    return m


def is_exact(m: np.ndarray) -> bool:
    return m.dtype == object


def to_float(m: np.ndarray) -> np.ndarray:
    return m.astype(float)


@dataclass(frozen=True)
class StructureTables:
    """A product's 2^n x 4^n structure matrix and its transposed coproduct."""

    n: int
    product_matrix: np.ndarray
    label: str = "custom"

    def __post_init__(self):
        rows, cols = self.product_matrix.shape
        if rows != 1 << self.n or cols != 1 << (2 * self.n):
            raise ValueError(
                f"expected {1 << self.n}x{1 << (2 * self.n)} matrix, got {rows}x{cols}"
            )

    @property
    def coproduct_matrix(self) -> np.ndarray:
        return self.product_matrix.T

    def as_float(self) -> "StructureTables":
        if not is_exact(self.product_matrix):
            return self
        return StructureTables(self.n, to_float(self.product_matrix), self.label)


def build_product_matrix(product, n: int, label: str = "custom") -> StructureTables:
    """Materialize a bilinear product given on blade pairs.

    ``product(ei, ej)`` receives two basis Elements and must return an
    Element of the same dimension.
    """
    size, pairs = 1 << n, 1 << (2 * n)
    m = np.full((size, pairs), 0, dtype=object)
    basis = [Element.blade(n, mask) for mask in range(size)]
    for col in range(pairs):
        i, j = alpha_decode(col, n)
        result = product(basis[i], basis[j])
        if result.dim != n:
            raise ValueError(f"product returned dimension {result.dim}, expected {n}")
        for mask, c in result.coeffs.items():
            m[mask, col] = c
    return StructureTables(n, m, label)


def grassmann_tables(n: int) -> StructureTables:
    return build_product_matrix(wedge, n, label="grassmann")


def clifford_tables(form) -> StructureTables:
    """Structure matrix of the circle product twisted by a bilinear form."""
    ext = form if isinstance(form, ExtendedForm) else ExtendedForm(form)
    return build_product_matrix(
        lambda x, y: circle_product(x, y, ext), ext.dim, label="clifford"
    )


def boolean_tables(n: int) -> StructureTables:
    return build_product_matrix(boolean_product, n, label="boolean")


def gram_A(t: StructureTables) -> np.ndarray:
    """A = m m^T, symmetric positive semidefinite, 2^n x 2^n."""
    m = t.product_matrix
    return m.dot(m.T)


def gram_B(t: StructureTables) -> np.ndarray:
    """B = m^T m, symmetric positive semidefinite, 4^n x 4^n."""
    m = t.product_matrix
    return m.T.dot(m)


def iterated_product_matrix(t: StructureTables, r: int) -> np.ndarray:
    """The r-fold product map m_r : (V^)^(tensor r) -> V^ as a 2^n x 2^(rn)
    matrix; m_1 = Id, m_r = m . (m_(r-1) (x) Id).

    Tensor factors extend the pair-index convention factor-wise with the
    first slot fastest, so f (x) g materializes as kron(g, f).
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    size = 1 << t.n
    exact = is_exact(t.product_matrix)
    acc = exact_identity(size) if exact else np.eye(size)
    ident = acc
    for _ in range(r - 1):
        acc = t.product_matrix.dot(np.kron(ident, acc))
    return acc


def iterated_gram(t: StructureTables, r: int) -> np.ndarray:
    """A^(r) = m_r m_r^T."""
    m_r = iterated_product_matrix(t, r)
    return m_r.dot(m_r.T)


def poly_annihilates(m: np.ndarray, roots) -> bool:
    """True iff prod_k (M - roots_k Id) is exactly zero (exact mode only)."""
    if not is_exact(m):
        raise ValueError("poly_annihilates requires exact-rational matrices")
    rows, cols = m.shape
    if rows != cols:
        raise ValueError("matrix must be square")
    acc = exact_identity(rows)
    for root in roots:
        acc = acc.dot(m - Fraction(root) * exact_identity(rows))
    return not acc.any()


def _row_to_integers(row):
    denom = lcm(*(Fraction(x).denominator for x in row)) if len(row) else 1
    return [int(Fraction(x) * denom) for x in row]


def exact_rank(m: np.ndarray) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination."""
    if not is_exact(m):
        raise ValueError("exact_rank requires exact-rational matrices")
    rows = [_row_to_integers(r) for r in m.tolist()]
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    rank = 0
    prev_pivot = 1
    for col in range(n_cols):
        pivot_row = next(
            (r for r in range(rank, n_rows) if rows[r][col] != 0), None
        )
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        pivot = rows[rank][col]
        for r in range(rank + 1, n_rows):
            factor = rows[r][col]
            for c in range(col, n_cols):
                rows[r][c] = (rows[r][c] * pivot - factor * rows[rank][c]) // prev_pivot
        prev_pivot = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def spectrum_multiset(m: np.ndarray, roots=None, tol: float = 1e-9) -> dict:
    """Eigenvalues with multiplicities of a symmetric matrix.

    Exact mode: reads a diagonal matrix off directly; otherwise requires a
    candidate root list (eg from a minimal-polynomial identity) and derives
    multiplicities from exact ranks of M - lambda Id.  Float mode clusters
    the eigensolver output with ``tol``.
    """
    rows, cols = m.shape
    if rows != cols:
        raise ValueError("matrix must be square")
    if is_exact(m):
        if not (m == m.T).all():
            raise ValueError("matrix must be symmetric")
        off = m - np.diag(np.diag(m))
        if roots is None:
            if off.any():
                raise ValueError("exact non-diagonal matrix requires a root list")
            out: dict = {}
            for x in np.diag(m):
                out[x] = out.get(x, 0) + 1
            return out
        out = {}
        total = 0
        for root in dict.fromkeys(Fraction(r) for r in roots):
            mult = rows - exact_rank(m - root * exact_identity(rows))
            if mult:
                out[root] = mult
                total += mult
        if total != rows:
            raise ValueError(
                f"root list accounts for {total} of {rows} dimensions"
            )
        return out
    from .spectral import sym_eig

    eig = sym_eig(m, tol=tol)
    out = {}
    scale = max(abs(eig.eigenvalues[0]), 1.0) if len(eig.eigenvalues) else 1.0
    for lam in eig.eigenvalues:
        for seen in out:
            if abs(lam - seen) <= tol * scale:
                out[seen] += 1
                break
        else:
            out[lam] = 1
    return out
