"""Acceptance suite: ten criteria, one pass/fail line each.

Each test prints "criterion N: PASS" on success (pytest -s to see the
lines; failures surface as normal assertions with the same numbering).
"""

import csv
import json
import math
import random
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from hopfmat.deform import BilinearForm, minus_coproduct, wedge_of_tensor
from hopfmat.experiments import (
    Dim2Params,
    bracket_tables,
    diagonal_metric_spectrum,
    dim2_gram_closed_form,
    dim2_tables,
    locus_rho,
)
from hopfmat.exterior import Element
from hopfmat.spectral import (
    frobenius_norm,
    spectral_reconstruct,
    svd_of_product,
    sym_eig,
    two_norm,
)
from hopfmat.structmat import (
    boolean_tables,
    clifford_tables,
    exact_identity,
    exact_rank,
    gram_A,
    gram_B,
    grassmann_tables,
    iterated_gram,
    poly_annihilates,
    spectrum_multiset,
)
from hopfmat.verify import expected_brackets, printed_dim2_table
from hopfmat.cli import main as cli_main


def report(num, ok):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} failed"


def diag_exact(values):
    m = np.full((len(values), len(values)), 0, dtype=object)
    for i, v in enumerate(values):
        m[i, i] = v
    return m


def rand_fraction(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_form(rng, n):
    return BilinearForm(
        n, tuple(tuple(rand_fraction(rng) for _ in range(n)) for _ in range(n))
    )


def test_criterion_1_grassmann_spectra_exact():
    ok = True
    for n in range(1, 5):
        a = gram_A(grassmann_tables(n))
        expected = diag_exact([2 ** m.bit_count() for m in range(1 << n)])
        ok = ok and bool((a == expected).all())
        ok = ok and spectrum_multiset(a) == {
            2**r: comb(n, r) for r in range(n + 1)
        }
    report(1, ok)


def test_criterion_2_iterated_theorem_exact():
    ok = True
    for n in range(1, 4):
        t = grassmann_tables(n)
        for r in range(1, 5):
            expected = diag_exact([r ** m.bit_count() for m in range(1 << n)])
            ok = ok and bool((iterated_gram(t, r) == expected).all())
    diag = sorted(int(x) for x in np.diag(iterated_gram(grassmann_tables(2), 3)))
    ok = ok and diag == [1, 3, 3, 9]
    report(2, ok)


def test_criterion_3_minimal_polynomial_and_spectra():
    ok = True
    for n in range(1, 4):
        t = grassmann_tables(n)
        a, b = gram_A(t), gram_B(t)
        roots = [2**i for i in range(n + 1)]
        ok = ok and poly_annihilates(a, roots)
        ok = ok and poly_annihilates(b, [0] + roots)
        spec_a = spectrum_multiset(a)
        spec_b = spectrum_multiset(b, roots=[0] + roots)
        nz_b = {k: v for k, v in spec_b.items() if k != 0}
        ok = ok and spec_a == nz_b
        rank = exact_rank(t.product_matrix)
        ok = ok and rank == 1 << n  # full row rank: zero-count is 4^n - 2^n
        ok = ok and spec_b.get(0, 0) == (1 << (2 * n)) - rank
    report(3, ok)


def test_criterion_4_dim1_clifford_example():
    ok = True
    for a in (Fraction(0), Fraction(1), Fraction(2), Fraction(7, 3)):
        t = clifford_tables(BilinearForm(1, ((a,),)))
        expected_m = np.array([[1, 0, 0, a], [0, 1, 1, 0]], dtype=object)
        ok = ok and bool((t.product_matrix == expected_m).all())
        ok = ok and bool((gram_A(t) == diag_exact([1 + a * a, 2])).all())
        expected_b = np.array(
            [[1, 0, 0, a], [0, 1, 1, 0], [0, 1, 1, 0], [a, 0, 0, a * a]],
            dtype=object,
        )
        ok = ok and bool((gram_B(t) == expected_b).all())
        s = svd_of_product(t)
        af = float(a)
        expected_sv = sorted([math.sqrt(1 + af * af), math.sqrt(2)], reverse=True)
        ok = ok and len(s.singular_values) == 2
        ok = ok and max(
            abs(x - y)
            for x, y in zip(sorted(s.singular_values, reverse=True), expected_sv)
        ) <= 1e-12
        v3 = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2)
        v4 = np.array([af, 0.0, 0.0, -1.0]) / math.sqrt(1 + af * af)
        printed = np.column_stack([v3, v4])
        k = s.kernel_basis
        ok = ok and k.shape[1] == 2
        pk = k @ np.linalg.pinv(k)
        pp = printed @ np.linalg.pinv(printed)
        ok = ok and float(np.linalg.norm(pk - pp)) <= 1e-10
    report(4, ok)


def test_criterion_5_dim2_experiment_exact():
    ok = True
    rng = random.Random(2024)
    for _ in range(50):
        p = Dim2Params(rand_fraction(rng), rand_fraction(rng))
        t = dim2_tables(p)
        ok = ok and bool((t.product_matrix == printed_dim2_table(p)).all())
        ok = ok and bool((gram_A(t) == dim2_gram_closed_form(p)).all())
    p = Dim2Params(rand_fraction(rng), rand_fraction(rng))
    anti, comm = bracket_tables(p)
    exp_anti, exp_comm = expected_brackets(p)
    for i in range(4):
        for j in range(4):
            ok = ok and anti[i][j] == exp_anti[i][j]
            ok = ok and comm[i][j] == exp_comm[i][j]
    report(5, ok)


def test_criterion_6_singular_locus():
    ok = True
    for nu in (0.0, 0.5, 1.0, 2.0):
        p = Dim2Params(locus_rho(nu), nu)
        a = gram_A(dim2_tables(p).as_float())
        target = 4 + 4 * nu * nu
        eig = sym_eig(a)
        ok = ok and max(abs(lam - target) for lam in eig.eigenvalues) <= 1e-9
    # nu = 0, rho = 1: the self-inverse point with constant eigenvalue 4
    lam0 = sym_eig(gram_A(dim2_tables(Dim2Params(1.0, 0.0)).as_float()))
    ok = ok and max(abs(l - 4.0) for l in lam0.eigenvalues) <= 1e-9
    report(6, ok)


def test_criterion_7_diagonal_metric_formula():
    ok = True
    rng = random.Random(7)
    for n in range(1, 4):
        cases = [[rand_fraction(rng) for _ in range(n)] for _ in range(20)]
        cases.append([Fraction(rng.choice((-1, 1))) for _ in range(n)])
        cases.append([Fraction(0)] * n)
        for diag in cases:
            a = gram_A(clifford_tables(BilinearForm.diagonal(diag)))
            formula = diagonal_metric_spectrum(diag)
            expected = diag_exact([formula[m] for m in range(1 << n)])
            ok = ok and bool((a == expected).all())
        const = diagonal_metric_spectrum([rng.choice((-1, 1)) for _ in range(n)])
        ok = ok and all(v == 2**n for v in const.values())
        zero = diagonal_metric_spectrum([0] * n)
        ok = ok and zero == {m: 2 ** m.bit_count() for m in range(1 << n)}
    report(7, ok)


def test_criterion_8_main_theorem_and_reconstruction():
    ok = True
    rng = random.Random(8)
    tables = [grassmann_tables(n) for n in (1, 2, 3)]
    for _ in range(10):
        tables.append(clifford_tables(rand_form(rng, rng.randint(1, 3))))
    for t in tables:
        tf = t.as_float()
        m = tf.product_matrix
        a, b = gram_A(tf), gram_B(tf)
        eig = sym_eig(a)
        scale = max(float(np.linalg.norm(b)), 1.0)
        for lam, u in zip(eig.eigenvalues, eig.vectors.T):
            if lam <= 1e-9 * max(eig.eigenvalues[0], 1.0):
                continue
            w = m.T @ u
            ok = ok and float(np.linalg.norm(b @ w - lam * w)) / scale <= 1e-9
        s = svd_of_product(tf, with_kernel=False)
        rec_err = float(np.linalg.norm(spectral_reconstruct(s) - m))
        ok = ok and rec_err <= 1e-8 * frobenius_norm(m)
        frob2 = frobenius_norm(m) ** 2
        total = float(np.sum(s.singular_values**2))
        ok = ok and abs(frob2 - total) <= 1e-9 * max(frob2, 1.0)
    for n in range(1, 7):
        s = svd_of_product(grassmann_tables(n).as_float(), with_kernel=False)
        ok = ok and abs(two_norm(s) - 2 ** (n / 2)) <= 1e-9
    report(8, ok)


def test_criterion_9_auxiliary_coproducts():
    ok = True
    for n in range(1, 5):
        t = boolean_tables(n)
        ok = ok and bool(
            (t.product_matrix.dot(t.coproduct_matrix) == exact_identity(1 << n)).all()
        )
        b_op = t.coproduct_matrix.dot(t.product_matrix)
        diag = [int(x) for x in np.diag(b_op)]
        ok = ok and bool((b_op == diag_exact(diag)).all())
        ok = ok and sorted(diag) == [0] * ((1 << (2 * n)) - (1 << n)) + [1] * (1 << n)
        for mask in range(1, 1 << n):
            img = wedge_of_tensor(minus_coproduct(Element.blade(n, mask)))
            ok = ok and img.is_zero()
    report(9, ok)


def test_criterion_10_cli_contract(tmp_path, capsys):
    ok = True
    report_path = tmp_path / "report.json"
    code = cli_main(
        ["verify", "--suite", "all", "--dim", "3", "--report", str(report_path)]
    )
    capsys.readouterr()
    ok = ok and code == 0
    data = json.loads(report_path.read_text())
    ok = ok and data["pass"] is True
    expected_ids = {
        "grassmann.gram_2pow",
        "grassmann.iterated_r_pow",
        "grassmann.minimal_polynomial",
        "grassmann.spectra_match",
        "grassmann.hopf_axioms",
        "grassmann.aux_coproducts",
        "clifford.dim1_table",
        "clifford.dim1_gram",
        "clifford.dim1_singular_values",
        "clifford.dim1_kernel",
        "clifford.diagonal_metric_formula",
        "clifford.generator_relations",
        "clifford.selfinverse_gram",
        "dim2.table_match",
        "dim2.closed_form_A",
        "dim2.brackets",
        "dim2.car_relation",
        "dim2.locus_degeneracy",
        "dim2.mirror_symmetry",
        "svd.main_theorem",
        "svd.reconstruction",
        "svd.frobenius_sum",
        "svd.two_norm_growth",
        "svd.polar",
    }
    got = {c["id"]: c["status"] for c in data["checks"]}
    ok = ok and set(got) == expected_ids
    ok = ok and all(status == "pass" for status in got.values())

    scan_path = tmp_path / "scan.csv"
    code = cli_main(
        ["scan", "--rho", "0:3", "--nu", "0:3", "--steps", "61",
         "--out", str(scan_path)]
    )
    ok = ok and code == 0
    with open(scan_path, newline="") as fh:
        rows = list(csv.reader(fh))
    ok = ok and rows[0] == [
        "rho", "nu", "lambda1", "lambda2", "lambda3", "lambda4",
        "eigengap", "on_locus",
    ]
    ok = ok and len(rows) - 1 == 61 * 61
    report(10, ok)
