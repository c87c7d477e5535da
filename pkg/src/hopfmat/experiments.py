"""The 2-dimensional rho-nu deformation experiment and closed-form spectra.

The metric under study is B = [[0, rho+nu], [rho-nu, 0]] on a 2-dimensional
generating space; rho controls the symmetric (Clifford) part and nu the
antisymmetric part.  The Gram operator A of the twisted multiplication table
has a closed form whose eigenvalue surfaces over the rho-nu plane all meet
on the singular locus rho^2 - nu^2 = 1, where the metric squares to the
identity and the eigenvalues are fourfold degenerate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .deform import BilinearForm, ExtendedForm, circle_product
from .exterior import Element
from .structmat import clifford_tables, gram_A

__all__ = [
    "Dim2Params",
    "ScanRecord",
    "dim2_metric",
    "dim2_tables",
    "dim2_gram_closed_form",
    "dim2_eigenvalues",
    "locus_residual",
    "locus_rho",
    "scan_grid",
    "diagonal_metric_spectrum",
    "bracket_tables",
]


@dataclass(frozen=True)
class Dim2Params:
    rho: object
    nu: object


@dataclass(frozen=True)
class ScanRecord:
    rho: float
    nu: float
    eigenvalues: tuple  # 4 values, descending
    eigengap: float  # min pairwise gap over the three distinct surfaces
    on_locus: bool


def dim2_metric(p: Dim2Params) -> BilinearForm:
    rho, nu = p.rho, p.nu
    return BilinearForm(2, ((0, rho + nu), (rho - nu, 0)))


def dim2_tables(p: Dim2Params):
    return clifford_tables(dim2_metric(p))


def _closed_form_entries(p: Dim2Params):
    rho, nu = p.rho, p.nu
    a = (nu * nu + 1 + 2 * rho * nu + rho * rho) * (
        nu * nu + 1 - 2 * rho * nu + rho * rho
    )
    b = 2 * nu * (1 - rho * rho + nu * nu)
    c = 2 + 2 * rho * rho + 2 * nu * nu
    d = 4 + 4 * nu * nu
    return a, b, c, d


def dim2_gram_closed_form(p: Dim2Params) -> np.ndarray:
    """The 4x4 Gram operator A = m m^T of the twisted table, in closed form."""
    a, b, c, d = _closed_form_entries(p)
    zero = a - a
    return np.array(
        [
            [a, zero, zero, b],
            [zero, c, zero, zero],
            [zero, zero, c, zero],
            [b, zero, zero, d],
        ],
        dtype=object,
    )


def dim2_eigenvalues(p: Dim2Params):
    """Eigenvalues of the closed-form A, descending.

    A is a 2x2 block on the (Id, e12) pair plus the double eigenvalue c, so
    the spectrum is c, c and (a+d)/2 +- sqrt(((a-d)/2)^2 + b^2).
    """
    a, b, c, d = (float(x) for x in _closed_form_entries(p))
    mid = (a + d) / 2.0
    radius = math.hypot((a - d) / 2.0, b)
    return tuple(sorted((mid + radius, mid - radius, c, c), reverse=True))


def locus_residual(p: Dim2Params):
    """rho^2 - nu^2 - 1; zero exactly on the singular locus."""
    return p.rho * p.rho - p.nu * p.nu - 1


def locus_rho(nu: float) -> float:
    """The positive branch rho(nu) = sqrt(1 + nu^2) of the singular locus."""
    return math.hypot(1.0, nu)


def scan_grid(rho_range, nu_range, steps: int) -> list[ScanRecord]:
    """Closed-form eigenvalue surfaces on a (steps x steps) grid.

    Row order is nu-major then rho.  The locus flag tolerance is half the
    grid cell diagonal scaled by the local gradient of rho^2 - nu^2.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    rho_lo, rho_hi = (float(x) for x in rho_range)
    nu_lo, nu_hi = (float(x) for x in nu_range)
    if rho_hi < rho_lo or nu_hi < nu_lo:
        raise ValueError("empty scan range")
    drho = (rho_hi - rho_lo) / (steps - 1)
    dnu = (nu_hi - nu_lo) / (steps - 1)
    half_diag = 0.5 * math.hypot(drho, dnu)
    records = []
    for i_nu in range(steps):
        nu = nu_lo + i_nu * dnu
        for i_rho in range(steps):
            rho = rho_lo + i_rho * drho
            p = Dim2Params(rho, nu)
            lams = dim2_eigenvalues(p)
            # the three analytic surfaces: the block pair and the double c
            surfaces = sorted(set_or_triplet(p))
            gap = min(
                abs(x - y)
                for k, x in enumerate(surfaces)
                for y in surfaces[k + 1 :]
            )
            grad = 2.0 * math.hypot(rho, nu)
            tol = half_diag * max(grad, 1e-12)
            on_locus = abs(float(locus_residual(p))) <= tol
            records.append(ScanRecord(rho, nu, lams, gap, on_locus))
    return records


def set_or_triplet(p: Dim2Params):
    """The three analytic eigenvalue surfaces lambda+, lambda-, c at p."""
    a, b, c, d = (float(x) for x in _closed_form_entries(p))
    mid = (a + d) / 2.0
    radius = math.hypot((a - d) / 2.0, b)
    return [mid + radius, mid - radius, c]


def diagonal_metric_spectrum(diag) -> dict:
    """Gram eigenvalue attached to each blade for a diagonal metric.

    For g = diag(l_1..l_n) the eigenvalue on blade e_S is
    2^|S| * prod_{i not in S} (1 + l_i^2): the Grassmann factor times the
    elementary-symmetric sum over the complementary indices.
    """
    diag = tuple(diag)
    n = len(diag)
    out = {}
    for mask in range(1 << n):
        val = 1
        for i in range(n):
            if mask >> i & 1:
                val = val * 2
            else:
                val = val * (1 + diag[i] * diag[i])
        out[mask] = val
    return out


def bracket_tables(p: Dim2Params):
    """Anticommutator and commutator tables of the blade basis under the
    twisted product: ({x,y}+, [x,y]-) as two 4x4 grids of Elements."""
    ext = ExtendedForm(dim2_metric(p))
    basis = [Element.blade(2, m) for m in range(4)]
    anti, comm = [], []
    for x in basis:
        anti_row, comm_row = [], []
        for y in basis:
            xy = circle_product(x, y, ext)
            yx = circle_product(y, x, ext)
            anti_row.append(xy + yx)
            comm_row.append(xy - yx)
        anti.append(anti_row)
        comm.append(comm_row)
    return anti, comm


def dim2_gram_oracle(p: Dim2Params) -> np.ndarray:
    """Gram operator computed from the cliffordization pipeline (the
    defining cross-check of the closed form)."""
    return gram_A(dim2_tables(p))


def rational_params(rho, nu) -> Dim2Params:
    return Dim2Params(Fraction(rho), Fraction(nu))
