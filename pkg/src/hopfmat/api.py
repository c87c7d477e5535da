"""JSON-able operation layer shared by the CLI and the HTTP service.

Scalars serialize as "p/q" strings in exact mode and plain numbers in float
mode; metric files follow {"dim": n, "entries": [[...]]} with entries given
as numbers, decimal strings, or "p/q" rationals.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .deform import BilinearForm
from .experiments import (
    Dim2Params,
    dim2_tables,
    locus_residual,
    locus_rho,
    scan_grid,
)
from .spectral import svd_of_product
from .structmat import StructureTables, clifford_tables, grassmann_tables, is_exact
from .verify import run_verify_suite

__all__ = [
    "parse_scalar",
    "format_scalar",
    "metric_from_dict",
    "load_metric_file",
    "resolve_tables",
    "tables_result",
    "svd_result",
    "verify_result",
    "scan_result",
    "scan_csv_rows",
    "SCAN_CSV_HEADER",
    "locus_result",
]

SCAN_CSV_HEADER = (
    "rho",
    "nu",
    "lambda1",
    "lambda2",
    "lambda3",
    "lambda4",
    "eigengap",
    "on_locus",
)


def parse_scalar(value):
    """Accept numbers, decimal strings, and 'p/q' rational strings."""
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**12)
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"cannot parse scalar {value!r}")


def format_scalar(value):
    if isinstance(value, float):
        return value
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def matrix_payload(m: np.ndarray) -> dict:
    rows, cols = m.shape
    if is_exact(m):
        entries = [[format_scalar(x) for x in row] for row in m.tolist()]
    else:
        entries = [[float(x) for x in row] for row in m.tolist()]
    return {"rows": rows, "cols": cols, "entries": entries}


def metric_from_dict(data: dict) -> BilinearForm:
    dim = data["dim"]
    entries = data["entries"]
    if len(entries) != dim or any(len(r) != dim for r in entries):
        raise ValueError(f"metric entries must form a {dim}x{dim} matrix")
    return BilinearForm(
        dim, tuple(tuple(parse_scalar(x) for x in row) for row in entries)
    )


def load_metric_file(path) -> BilinearForm:
    with open(path) as fh:
        return metric_from_dict(json.load(fh))


def resolve_tables(
    dim=None, preset=None, metric=None, rho=None, nu=None
) -> StructureTables:
    """Pick the structure tables implied by a tables/svd request."""
    if metric is not None:
        form = metric if isinstance(metric, BilinearForm) else metric_from_dict(metric)
        if dim is not None and form.dim != dim:
            raise ValueError(f"metric dim {form.dim} != requested dim {dim}")
        return clifford_tables(form)
    if rho is not None or nu is not None:
        if rho is None or nu is None:
            raise ValueError("rho and nu must be given together")
        if dim not in (None, 2):
            raise ValueError("the rho-nu metric is 2-dimensional")
        return dim2_tables(Dim2Params(parse_scalar(rho), parse_scalar(nu)))
    if preset not in (None, "grassmann"):
        raise ValueError(f"unknown preset {preset!r}")
    if dim is None:
        raise ValueError("dim is required for the grassmann preset")
    return grassmann_tables(dim)


def tables_result(**kwargs) -> dict:
    t = resolve_tables(**kwargs)
    return {
        "dim": t.n,
        "label": t.label,
        "product_matrix": matrix_payload(t.product_matrix),
        "coproduct_matrix": matrix_payload(t.coproduct_matrix),
    }


def svd_result(**kwargs) -> dict:
    t = resolve_tables(**kwargs)
    s = svd_of_product(t.as_float())
    return {
        "dim": t.n,
        "label": t.label,
        "singular_values": [float(x) for x in s.singular_values],
        "left_vectors": [list(map(float, col)) for col in s.left_vectors.T],
        "right_vectors": [list(map(float, col)) for col in s.right_vectors.T],
        "kernel_dim": int(s.kernel_basis.shape[1]),
    }


def verify_result(suite: str, dim: int = 3) -> dict:
    return run_verify_suite(suite, dim=dim).to_dict()


def scan_result(rho_range, nu_range, steps: int) -> list[dict]:
    records = scan_grid(rho_range, nu_range, steps)
    return [
        {
            "rho": r.rho,
            "nu": r.nu,
            "eigenvalues": list(r.eigenvalues),
            "eigengap": r.eigengap,
            "on_locus": r.on_locus,
        }
        for r in records
    ]


def scan_csv_rows(rho_range, nu_range, steps: int):
    """CSV rows in the documented column order, nu-major then rho."""
    for r in scan_grid(rho_range, nu_range, steps):
        yield (
            repr(r.rho),
            repr(r.nu),
            repr(r.eigenvalues[0]),
            repr(r.eigenvalues[1]),
            repr(r.eigenvalues[2]),
            repr(r.eigenvalues[3]),
            repr(r.eigengap),
            "1" if r.on_locus else "0",
        )


def locus_result(nus) -> list[dict]:
    out = []
    for nu in nus:
        nu_f = float(nu)
        rho = locus_rho(nu_f)
        out.append(
            {
                "nu": nu_f,
                "rho": rho,
                "residual": float(locus_residual(Dim2Params(rho, nu_f))),
            }
        )
    return out
