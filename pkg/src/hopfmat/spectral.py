"""Symmetric eigendecomposition and SVD of structure matrices.

The left singular vectors come from the small Gram operator A = m m^T; the
right vectors are then obtained by applying the transposed table (the
coproduct) to each left vector, which matches eigenvectors across the two
Gram operators singular value by singular value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .structmat import StructureTables, gram_A, gram_B, is_exact, to_float

__all__ = [
    "ConvergenceError",
    "EigenDecomposition",
    "SvdTriple",
    "sym_eig",
    "svd_of_product",
    "spectral_reconstruct",
    "kernel_basis",
    "frobenius_norm",
    "two_norm",
    "polar_decompose",
]

# stopping / thresholding policy for the rotation sweeps
OFFDIAG_TOL = 1e-12
MAX_SWEEPS = 50
KERNEL_REL_TOL = 1e-9


class ConvergenceError(RuntimeError):
    """Eigen-iteration failed to reach the off-diagonal threshold."""


@dataclass(frozen=True)
class EigenDecomposition:
    """Descending eigenvalues with orthonormal column eigenvectors."""

    eigenvalues: np.ndarray
    vectors: np.ndarray  # column i belongs to eigenvalues[i]

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]


@dataclass(frozen=True)
class SvdTriple:
    """Singular values d_i^(1/2) with matched left/right vectors and the
    kernel of the product map inside the tensor square."""

    singular_values: np.ndarray
    left_vectors: np.ndarray  # 2^n x k
    right_vectors: np.ndarray  # 4^n x k
    kernel_basis: np.ndarray  # 4^n x (4^n - k)


def _fix_signs(vectors: np.ndarray, tol: float) -> np.ndarray:
    """First nonzero component of each column made positive."""
    out = vectors.copy()
    for i in range(out.shape[1]):
        col = out[:, i]
        nonzero = np.nonzero(np.abs(col) > tol)[0]
        if len(nonzero) and col[nonzero[0]] < 0:
            out[:, i] = -col
    return out


def sym_eig(m: np.ndarray, tol: float = 1e-10) -> EigenDecomposition:
    """Diagonalize a symmetric matrix by cyclic Jacobi rotation sweeps.

    Stops when the off-diagonal Frobenius mass drops below
    OFFDIAG_TOL * ||M||_F; more than MAX_SWEEPS sweeps raises
    ConvergenceError rather than returning silently.
    """
    if is_exact(m):
        m = to_float(m)
    m = np.array(m, dtype=float)
    n = m.shape[0]
    if m.shape[1] != n:
        raise ValueError("matrix must be square")
    norm = np.linalg.norm(m)
    if np.linalg.norm(m - m.T) > tol * max(norm, 1.0):
        raise ValueError("matrix is not symmetric within tolerance")
    a = (m + m.T) / 2.0
    vecs = np.eye(n)
    target = OFFDIAG_TOL * max(norm, np.finfo(float).tiny)

    def offdiag(x):
        return np.linalg.norm(x - np.diag(np.diag(x)))

    sweeps = 0
    while offdiag(a) > target:
        if sweeps >= MAX_SWEEPS:
            raise ConvergenceError(
                f"Jacobi sweeps did not converge in {MAX_SWEEPS} iterations"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= target / max(n, 1):
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                else:
                    t = -np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                a[[p, q], :] = rot @ a[[p, q], :]
                a[:, [p, q]] = a[:, [p, q]] @ rot.T
                vecs[:, [p, q]] = vecs[:, [p, q]] @ rot.T
        sweeps += 1
    order = np.argsort(-np.diag(a), kind="stable")
    values = np.diag(a)[order]
    vectors = _fix_signs(vecs[:, order], tol=1e-12)
    return EigenDecomposition(values, vectors)


def svd_of_product(
    t: StructureTables, tol: float = 1e-10, with_kernel: bool = True
) -> SvdTriple:
    """SVD of the product map, with right vectors matched via the coproduct.

    Left vectors u_i diagonalize A = m m^T; for each positive eigenvalue d_i
    the right vector is m^T u_i / d_i^(1/2), an eigenvector of B = m^T m to
    the same eigenvalue.  The kernel basis spans the orthogonal complement
    inside the tensor square.
    """
    tf = t.as_float()
    m = tf.product_matrix
    eig = sym_eig(gram_A(tf), tol=tol)
    if len(eig.eigenvalues) and eig.eigenvalues[-1] < -tol:
        raise ValueError(
            f"Gram operator has negative eigenvalue {eig.eigenvalues[-1]}"
        )
    top_lam = max(eig.eigenvalues[0], 0.0) if len(eig.eigenvalues) else 0.0
    top = np.sqrt(top_lam)
    # kernel threshold on the eigenvalue scale; the relative singular-value
    # cut squares below the float noise floor of the Gram eigenvalues, so a
    # 1e-12 eigenvalue floor backs it up
    lam_cut = max((KERNEL_REL_TOL * top) ** 2, 1e-12 * top_lam)
    sv, us, vs = [], [], []
    for lam, u in zip(eig.eigenvalues, eig.vectors.T):
        if lam <= lam_cut:
            continue
        root = np.sqrt(lam)
        sv.append(root)
        us.append(u)
        vs.append(m.T @ u / root)
    k = len(sv)
    rows, cols = m.shape
    left = np.column_stack(us) if k else np.zeros((rows, 0))
    right = np.column_stack(vs) if k else np.zeros((cols, 0))
    if with_kernel:
        beig = sym_eig(gram_B(tf), tol=tol)
        kernel_cut = lam_cut if top else tol
        kernel_cols = [
            v for lam, v in zip(beig.eigenvalues, beig.vectors.T) if lam <= kernel_cut
        ]
        kernel = (
            np.column_stack(kernel_cols) if kernel_cols else np.zeros((cols, 0))
        )
    else:
        kernel = np.zeros((cols, 0))
    return SvdTriple(np.array(sv), left, right, kernel)


def spectral_reconstruct(s: SvdTriple) -> np.ndarray:
    """Rebuild the product matrix: sum_i u_i d_i^(1/2) v_i^T."""
    return s.left_vectors @ np.diag(s.singular_values) @ s.right_vectors.T


def kernel_basis(t: StructureTables, tol: float = 1e-10) -> np.ndarray:
    """Orthonormal basis of { w : m w = 0 } in the tensor square."""
    return svd_of_product(t, tol=tol).kernel_basis


def frobenius_norm(m: np.ndarray) -> float:
    if is_exact(m):
        m = to_float(m)
    return float(np.linalg.norm(np.asarray(m, dtype=float)))


def two_norm(s: SvdTriple) -> float:
    """Operator 2-norm: the largest singular value."""
    return float(s.singular_values[0]) if len(s.singular_values) else 0.0


def polar_decompose(t: StructureTables, tol: float = 1e-10):
    """Split m into scale . isometry.

    scale = U D_A^(1/2) U^T is symmetric positive semidefinite on V^;
    isometry = U V^T restricted to the matched singular pairs, so that
    scale . isometry reproduces m (the kernel carries no scale).
    """
    s = svd_of_product(t, tol=tol)
    u, v = s.left_vectors, s.right_vectors
    scale = u @ np.diag(s.singular_values) @ u.T
    isometry = u @ v.T
    return scale, isometry
