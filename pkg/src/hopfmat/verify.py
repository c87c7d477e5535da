"""Theorem-verification suites.

Each check runs one verifiable statement about the algebra (spectra,
minimal polynomials, printed worked examples, the rho-nu experiment, the
eigenvector-matching theorem) and reports pass/fail with a small witness.
Identity-level checks run in exact rational arithmetic; eigensolving runs
in floats.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .deform import (
    BilinearForm,
    ExtendedForm,
    boolean_product,
    circle_product,
    grouplike_coproduct,
    laplace_extend,
    minus_coproduct,
    wedge_of_tensor,
)
from .experiments import (
    Dim2Params,
    bracket_tables,
    diagonal_metric_spectrum,
    dim2_eigenvalues,
    dim2_gram_closed_form,
    dim2_metric,
    dim2_tables,
    locus_rho,
)
from .exterior import (
    Element,
    TensorElement,
    antipode,
    counit,
    grade_project,
    grassmann_coproduct,
    shuffle_splits,
    tensor_mul,
    wedge,
)
from .spectral import (
    frobenius_norm,
    polar_decompose,
    spectral_reconstruct,
    svd_of_product,
    sym_eig,
    two_norm,
)
from .structmat import (
    StructureTables,
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

__all__ = ["CheckResult", "VerifyReport", "SUITES", "run_verify_suite"]


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str  # "pass" | "fail"
    witness: dict

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {"id": c.id, "status": c.status, "witness": c.witness}
                for c in self.checks
            ],
            "pass": self.ok,
        }


def _result(check_id, ok, witness=None) -> CheckResult:
    return CheckResult(check_id, "pass" if ok else "fail", witness or {})


def _diag_exact(values) -> np.ndarray:
    size = len(values)
    m = np.full((size, size), 0, dtype=object)
    for i, v in enumerate(values):
        m[i, i] = v
    return m


def _eq(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and bool((a == b).all())


def _rand_fraction(rng: random.Random, span: int = 9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def _rand_form(rng: random.Random, n: int) -> BilinearForm:
    return BilinearForm(
        n, tuple(tuple(_rand_fraction(rng) for _ in range(n)) for _ in range(n))
    )


def _blades(n):
    return [Element.blade(n, m) for m in range(1 << n)]


# ---------------------------------------------------------------- grassmann


def check_gram_2pow(dim: int) -> CheckResult:
    """A = m m^T of the wedge table equals diag(2^grade), eigenvalue 2^r with
    multiplicity C(n, r)."""
    ok = True
    witness = {}
    for n in range(1, min(dim, 4) + 1):
        a = gram_A(grassmann_tables(n))
        expected = _diag_exact([2 ** m.bit_count() for m in range(1 << n)])
        if not _eq(a, expected):
            ok = False
            witness[f"n={n}"] = "gram mismatch"
            continue
        spectrum = spectrum_multiset(a)
        if spectrum != {2**r: comb(n, r) for r in range(n + 1)}:
            ok = False
            witness[f"n={n}"] = "multiplicity mismatch"
    witness["dims"] = list(range(1, min(dim, 4) + 1))
    return _result("grassmann.gram_2pow", ok, witness)


def check_iterated_r_pow(dim: int) -> CheckResult:
    """A^(r) equals diag(r^grade) for the wedge table."""
    ok = True
    witness = {}
    for n in range(1, min(dim, 3) + 1):
        t = grassmann_tables(n)
        for r in range(1, 5):
            a_r = iterated_gram(t, r)
            expected = _diag_exact([r ** m.bit_count() for m in range(1 << n)])
            if not _eq(a_r, expected):
                ok = False
                witness[f"n={n},r={r}"] = "mismatch"
    n2_r3 = sorted(
        int(x) for x in np.diag(iterated_gram(grassmann_tables(2), 3))
    )
    if n2_r3 != [1, 3, 3, 9]:
        ok = False
        witness["n=2,r=3"] = n2_r3
    return _result("grassmann.iterated_r_pow", ok, witness)


def check_minimal_polynomial(dim: int) -> CheckResult:
    """prod (A - 2^i Id) = 0 and the B version with the extra zero root."""
    ok = True
    witness = {}
    for n in range(1, min(dim, 3) + 1):
        t = grassmann_tables(n)
        roots = [2**i for i in range(n + 1)]
        if not poly_annihilates(gram_A(t), roots):
            ok = False
            witness[f"A,n={n}"] = "not annihilated"
        if not poly_annihilates(gram_B(t), [0] + roots):
            ok = False
            witness[f"B,n={n}"] = "not annihilated"
    return _result("grassmann.minimal_polynomial", ok, witness)


def check_spectra_match(dim: int) -> CheckResult:
    """Nonzero spectra of A and B agree as multisets; the kernel of B
    accounts for 4^n - rank(m) dimensions."""
    ok = True
    witness = {}
    rng = random.Random(11)
    for n in range(1, min(dim, 3) + 1):
        tables = [grassmann_tables(n), clifford_tables(_rand_form(rng, n))]
        for t in tables:
            roots = [0] + [2**i for i in range(n + 1)]
            a, b = gram_A(t), gram_B(t)
            if t.label == "grassmann":
                spec_a = spectrum_multiset(a)
                spec_b = spectrum_multiset(b, roots=roots)
            else:
                # generic rational Clifford grams are not diagonal and have
                # no known exact root list; compare float spectra
                spec_a = _float_spectrum(a)
                spec_b = _float_spectrum(b)
            nz_a = {k: v for k, v in spec_a.items() if _nonzero(k)}
            nz_b = {k: v for k, v in spec_b.items() if _nonzero(k)}
            if not _same_multiset(nz_a, nz_b):
                ok = False
                witness[f"{t.label},n={n}"] = "nonzero spectra differ"
            rank = exact_rank(t.product_matrix)
            zeros_b = spec_b.get(_zero_key(spec_b), 0)
            expected_zeros = (1 << (2 * n)) - rank
            if zeros_b != expected_zeros:
                ok = False
                witness[f"{t.label},n={n},kernel"] = (zeros_b, expected_zeros)
    return _result("grassmann.spectra_match", ok, witness)


def _nonzero(key) -> bool:
    return abs(float(key)) > 1e-8


def _zero_key(spectrum):
    for k in spectrum:
        if not _nonzero(k):
            return k
    return None


def _float_spectrum(m) -> dict:
    return spectrum_multiset(m.astype(float), tol=1e-8)


def _same_multiset(a: dict, b: dict) -> bool:
    if len(a) != len(b):
        return False
    used = set()
    for ka, va in a.items():
        hit = None
        for kb, vb in b.items():
            if kb in used:
                continue
            if abs(float(ka) - float(kb)) <= 1e-7 * max(abs(float(ka)), 1.0):
                if va != vb:
                    return False
                hit = kb
                break
        if hit is None:
            return False
        used.add(hit)
    return True


def check_hopf_axioms(dim: int) -> CheckResult:
    """Coassociativity, the product/coproduct compatibility law with graded
    switch sign, the antipode axiom, and the 2^r split count."""
    ok = True
    witness = {}
    for n in range(1, min(dim, 3) + 1):
        blades = _blades(n)
        for b in blades:
            mask = next(iter(b.coeffs), 0)
            delta = grassmann_coproduct(b)
            # split count
            if len(delta.coeffs) != 1 << mask.bit_count():
                ok = False
                witness[f"n={n},split"] = mask
            # coassociativity
            left = _coproduct_left(delta)
            right = _coproduct_right(delta)
            if left != right:
                ok = False
                witness[f"n={n},coassoc"] = mask
            # antipode axiom: m (S (x) Id) Delta = unit . counit
            acc = Element.zero(n)
            for (s1, s2), c in delta.coeffs.items():
                term = wedge(antipode(Element.blade(n, s1)), Element.blade(n, s2))
                acc = acc + c * term
            expected = Element(n, {0: counit(b)})
            if acc != expected:
                ok = False
                witness[f"n={n},antipode"] = mask
        # compatibility law on all basis pairs
        for x in blades:
            for y in blades:
                lhs = grassmann_coproduct(wedge(x, y))
                rhs = tensor_mul(grassmann_coproduct(x), grassmann_coproduct(y))
                if lhs != rhs:
                    ok = False
                    witness[f"n={n},axiom1"] = (
                        next(iter(x.coeffs), 0),
                        next(iter(y.coeffs), 0),
                    )
    return _result("grassmann.hopf_axioms", ok, witness)


def _coproduct_left(delta: TensorElement) -> dict:
    out: dict = {}
    for (s1, s2), c in delta.coeffs.items():
        inner = grassmann_coproduct(Element.blade(delta.dim, s1))
        for (a, b), ci in inner.coeffs.items():
            k = (a, b, s2)
            out[k] = out.get(k, 0) + c * ci
    return {k: v for k, v in out.items() if v != 0}


def _coproduct_right(delta: TensorElement) -> dict:
    out: dict = {}
    for (s1, s2), c in delta.coeffs.items():
        inner = grassmann_coproduct(Element.blade(delta.dim, s2))
        for (b, cc), ci in inner.coeffs.items():
            k = (s1, b, cc)
            out[k] = out.get(k, 0) + c * ci
    return {k: v for k, v in out.items() if v != 0}


def check_aux_coproducts(dim: int) -> CheckResult:
    """Boolean/group-like duality and the kernel-valued coproduct."""
    ok = True
    witness = {}
    for n in range(1, min(dim, 4) + 1):
        t = boolean_tables(n)
        m_b = t.product_matrix
        delta = t.coproduct_matrix
        if not _eq(m_b.dot(delta), exact_identity(1 << n)):
            ok = False
            witness[f"n={n},unit"] = "m_B . delta != Id"
        b_op = delta.dot(m_b)
        diag = np.diag(b_op)
        if (b_op - _diag_exact(list(diag))).any() or sorted(
            int(x) for x in diag
        ) != [0] * ((1 << (2 * n)) - (1 << n)) + [1] * (1 << n):
            ok = False
            witness[f"n={n},diag"] = "delta . m_B not 0/1 diagonal"
        # kernel-valued coproduct: wedge o Delta- vanishes on grade >= 1
        for mask in range(1, 1 << n):
            img = wedge_of_tensor(minus_coproduct(Element.blade(n, mask)))
            if not img.is_zero():
                ok = False
                witness[f"n={n},minus"] = mask
        if wedge_of_tensor(minus_coproduct(Element.unit(n))) != Element.unit(n):
            ok = False
            witness[f"n={n},minus_id"] = "m(Delta-(Id)) != Id"
        # idempotency of the Boolean product
        for mask in range(1 << n):
            b = Element.blade(n, mask)
            if boolean_product(b, b) != b:
                ok = False
                witness[f"n={n},idem"] = mask
    return _result("grassmann.aux_coproducts", ok, witness)


# ----------------------------------------------------------------- clifford

DIM1_SAMPLES = (Fraction(0), Fraction(1), Fraction(2), Fraction(7, 3))


def _dim1_tables(a: Fraction) -> StructureTables:
    return clifford_tables(BilinearForm(1, ((a,),)))


def check_dim1_table(dim: int = 1) -> CheckResult:
    """The twisted 1-dim multiplication table is [[1,0,0,a],[0,1,1,0]]."""
    ok = True
    witness = {}
    for a in DIM1_SAMPLES:
        t = _dim1_tables(a)
        expected = np.array([[1, 0, 0, a], [0, 1, 1, 0]], dtype=object)
        if not _eq(t.product_matrix, expected):
            ok = False
            witness[f"a={a}"] = "table mismatch"
    return _result("clifford.dim1_table", ok, witness)


def check_dim1_gram(dim: int = 1) -> CheckResult:
    """A = diag(1+a^2, 2) and the printed 4x4 B."""
    ok = True
    witness = {}
    for a in DIM1_SAMPLES:
        t = _dim1_tables(a)
        if not _eq(gram_A(t), _diag_exact([1 + a * a, 2])):
            ok = False
            witness[f"A,a={a}"] = "mismatch"
        expected_b = np.array(
            [[1, 0, 0, a], [0, 1, 1, 0], [0, 1, 1, 0], [a, 0, 0, a * a]],
            dtype=object,
        )
        if not _eq(gram_B(t), expected_b):
            ok = False
            witness[f"B,a={a}"] = "mismatch"
    return _result("clifford.dim1_gram", ok, witness)


def check_dim1_singular_values(dim: int = 1) -> CheckResult:
    """Singular values sqrt(1+a^2) and sqrt(2) within 1e-12."""
    ok = True
    witness = {}
    for a in DIM1_SAMPLES:
        s = svd_of_product(_dim1_tables(a))
        expected = sorted([math.sqrt(1 + float(a) ** 2), math.sqrt(2)], reverse=True)
        err = max(
            abs(x - y) for x, y in zip(sorted(s.singular_values, reverse=True), expected)
        )
        if len(s.singular_values) != 2 or err > 1e-12:
            ok = False
            witness[f"a={a}"] = err
    return _result("clifford.dim1_singular_values", ok, witness)


def check_dim1_kernel(dim: int = 1) -> CheckResult:
    """ker(m) is the span of the printed v3, v4 within 1e-10."""
    ok = True
    witness = {}
    for a in DIM1_SAMPLES:
        af = float(a)
        kernel = svd_of_product(_dim1_tables(a)).kernel_basis
        v3 = np.array([0.0, 1.0, -1.0, 0.0]) / math.sqrt(2)
        v4 = np.array([af, 0.0, 0.0, -1.0]) / math.sqrt(1 + af * af)
        printed = np.column_stack([v3, v4])
        err = _subspace_distance(kernel, printed)
        if kernel.shape[1] != 2 or err > 1e-10:
            ok = False
            witness[f"a={a}"] = err
    return _result("clifford.dim1_kernel", ok, witness)


def _subspace_distance(u: np.ndarray, w: np.ndarray) -> float:
    """Frobenius distance of orthogonal projectors onto the column spans."""
    pu = u @ np.linalg.pinv(u)
    pw = w @ np.linalg.pinv(w)
    return float(np.linalg.norm(pu - pw))


def check_diagonal_metric_formula(dim: int) -> CheckResult:
    """Per-blade closed-form eigenvalues 2^|S| prod_(i not in S)(1+l_i^2)
    against the brute-force Gram diagonal."""
    ok = True
    witness = {}
    rng = random.Random(23)
    cases = []
    for n in range(1, min(dim, 3) + 1):
        for _ in range(20):
            cases.append([_rand_fraction(rng) for _ in range(n)])
        cases.append([Fraction(0)] * n)
        cases.append([Fraction(rng.choice((-1, 1))) for _ in range(n)])
    for diag in cases:
        n = len(diag)
        a = gram_A(clifford_tables(BilinearForm.diagonal(diag)))
        formula = diagonal_metric_spectrum(diag)
        expected = _diag_exact([formula[m] for m in range(1 << n)])
        if not _eq(a, expected):
            ok = False
            witness[f"l={diag}"] = "mismatch"
    witness["cases"] = len(cases)
    return _result("clifford.diagonal_metric_formula", ok, witness)


def check_generator_relations(dim: int) -> CheckResult:
    """Unit law, e_i o e_j + e_j o e_i = (B_ij + B_ji) Id, associativity on
    basis triples, and the antisymmetric-twist filtration."""
    ok = True
    witness = {}
    rng = random.Random(37)
    for n in range(1, min(dim, 3) + 1):
        form = _rand_form(rng, n)
        ext = laplace_extend(form)
        blades = _blades(n)
        for x in blades:
            if (
                circle_product(Element.unit(n), x, ext) != x
                or circle_product(x, Element.unit(n), ext) != x
            ):
                ok = False
                witness[f"n={n},unit"] = str(x)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                ei, ej = Element.generator(n, i), Element.generator(n, j)
                anti = circle_product(ei, ej, ext) + circle_product(ej, ei, ext)
                if anti != Element(n, {0: form(i, j) + form(j, i)}):
                    ok = False
                    witness[f"n={n},rel"] = (i, j)
        for x in blades:
            for y in blades:
                for z in blades:
                    lhs = circle_product(circle_product(x, y, ext), z, ext)
                    rhs = circle_product(x, circle_product(y, z, ext), ext)
                    if lhs != rhs:
                        ok = False
                        witness[f"n={n},assoc"] = (str(x), str(y), str(z))
        # antisymmetric twist: generators deform only in lower grades
        if n >= 2:
            rows = [
                [
                    _rand_fraction(rng) if i < j else 0
                    for j in range(n)
                ]
                for i in range(n)
            ]
            for i in range(n):
                for j in range(i):
                    rows[i][j] = -rows[j][i]
            anti_form = BilinearForm(n, tuple(tuple(r) for r in rows))
            anti_ext = laplace_extend(anti_form)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    ei, ej = Element.generator(n, i), Element.generator(n, j)
                    prod = circle_product(ei, ej, anti_ext)
                    if grade_project(prod, 2) != wedge(ei, ej):
                        ok = False
                        witness[f"n={n},filtration"] = (i, j)
                    defect = prod - wedge(ei, ej)
                    if defect != Element(n, {0: anti_form(i, j)}):
                        ok = False
                        witness[f"n={n},defect"] = (i, j)
    return _result("clifford.generator_relations", ok, witness)


def check_selfinverse_gram(dim: int) -> CheckResult:
    """For diagonal metrics with entries +-1 the Gram operator is the
    constant 2^n."""
    ok = True
    witness = {}
    rng = random.Random(41)
    for n in range(1, min(dim, 3) + 1):
        for _ in range(4):
            diag = [rng.choice((-1, 1)) for _ in range(n)]
            a = gram_A(clifford_tables(BilinearForm.diagonal(diag)))
            if not _eq(a, _diag_exact([2**n] * (1 << n))):
                ok = False
                witness[f"n={n}"] = diag
    return _result("clifford.selfinverse_gram", ok, witness)


# --------------------------------------------------------------------- dim2


def printed_dim2_table(p: Dim2Params) -> np.ndarray:
    """The 4x16 multiplication table of the rho-nu metric, as printed."""
    rho, nu = p.rho, p.nu
    m = np.full((4, 16), 0, dtype=object)
    for col in (0, 1, 2, 3):
        m[col, col] = 1
    m[0, 6] = rho - nu
    m[0, 9] = rho + nu
    m[0, 15] = rho * rho - nu * nu
    m[1, 4] = 1
    m[1, 7] = rho - nu
    m[1, 13] = -(rho + nu)
    m[2, 8] = 1
    m[2, 11] = -(rho + nu)
    m[2, 14] = rho - nu
    m[3, 6] = -1
    m[3, 9] = 1
    m[3, 12] = 1
    m[3, 15] = -2 * nu
    return m


def _rand_params(rng: random.Random) -> Dim2Params:
    return Dim2Params(_rand_fraction(rng), _rand_fraction(rng))


def check_dim2_table_match(dim: int = 2, samples: int = 50) -> CheckResult:
    ok = True
    witness = {}
    rng = random.Random(53)
    for _ in range(samples):
        p = _rand_params(rng)
        if not _eq(dim2_tables(p).product_matrix, printed_dim2_table(p)):
            ok = False
            witness["params"] = (str(p.rho), str(p.nu))
    witness["samples"] = samples
    return _result("dim2.table_match", ok, witness)


def check_dim2_closed_form(dim: int = 2, samples: int = 50) -> CheckResult:
    ok = True
    witness = {}
    rng = random.Random(59)
    for _ in range(samples):
        p = _rand_params(rng)
        if not _eq(gram_A(dim2_tables(p)), dim2_gram_closed_form(p)):
            ok = False
            witness["params"] = (str(p.rho), str(p.nu))
    witness["samples"] = samples
    return _result("dim2.closed_form_A", ok, witness)


def expected_brackets(p: Dim2Params):
    """The printed anticommutator/commutator tables as Elements."""
    rho, nu = p.rho, p.nu
    n = 2
    e = lambda mask, c=1: Element.blade(n, mask, c)
    zero = Element.zero(n)
    anti = [
        [e(0, 2), e(1, 2), e(2, 2), e(3, 2)],
        [e(1, 2), zero, e(0, 2 * rho), e(1, -2 * nu)],
        [e(2, 2), e(0, 2 * rho), zero, e(2, -2 * nu)],
        [
            e(3, 2),
            e(1, -2 * nu),
            e(2, -2 * nu),
            Element(n, {0: 2 * (rho * rho - nu * nu), 3: -4 * nu}),
        ],
    ]
    comm = [
        [zero, zero, zero, zero],
        [zero, zero, Element(n, {0: 2 * nu, 3: 2}), e(1, -2 * rho)],
        [zero, Element(n, {0: -2 * nu, 3: -2}), zero, e(2, 2 * rho)],
        [zero, e(1, 2 * rho), e(2, -2 * rho), zero],
    ]
    return anti, comm


def check_dim2_brackets(dim: int = 2, samples: int = 10) -> CheckResult:
    ok = True
    witness = {}
    rng = random.Random(61)
    for _ in range(samples):
        p = _rand_params(rng)
        anti, comm = bracket_tables(p)
        exp_anti, exp_comm = expected_brackets(p)
        for i in range(4):
            for j in range(4):
                if anti[i][j] != exp_anti[i][j]:
                    ok = False
                    witness["anti"] = (i, j, str(p.rho), str(p.nu))
                if comm[i][j] != exp_comm[i][j]:
                    ok = False
                    witness["comm"] = (i, j, str(p.rho), str(p.nu))
    witness["samples"] = samples
    return _result("dim2.brackets", ok, witness)


def check_dim2_car(dim: int = 2, samples: int = 20) -> CheckResult:
    """CAR relation {e1, e2}+ = 2 rho Id for sampled parameters."""
    ok = True
    witness = {}
    rng = random.Random(67)
    for _ in range(samples):
        p = _rand_params(rng)
        ext = ExtendedForm(dim2_metric(p))
        e1, e2 = Element.generator(2, 1), Element.generator(2, 2)
        anti = circle_product(e1, e2, ext) + circle_product(e2, e1, ext)
        if anti != Element(2, {0: 2 * p.rho}):
            ok = False
            witness["params"] = (str(p.rho), str(p.nu))
    witness["samples"] = samples
    return _result("dim2.car_relation", ok, witness)


def check_dim2_locus(dim: int = 2) -> CheckResult:
    """On rho = sqrt(1+nu^2) all four eigenvalues equal 4+4nu^2 within 1e-9
    and the Gram operator is diagonal within 1e-9."""
    ok = True
    witness = {}
    for nu in (0.0, 0.5, 1.0, 2.0):
        p = Dim2Params(locus_rho(nu), nu)
        a = gram_A(dim2_tables(p).as_float())
        target = 4 + 4 * nu * nu
        eig = sym_eig(a)
        err = max(abs(lam - target) for lam in eig.eigenvalues)
        offdiag = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if err > 1e-9 or offdiag > 1e-9:
            ok = False
            witness[f"nu={nu}"] = {"eig_err": err, "offdiag": offdiag}
    return _result("dim2.locus_degeneracy", ok, witness)


def check_dim2_mirror(dim: int = 2) -> CheckResult:
    """Eigenvalue surfaces are mirror symmetric in rho and nu."""
    ok = True
    witness = {}
    for rho in (0.3, 1.1, 2.4):
        for nu in (0.2, 0.9, 1.7):
            base = dim2_eigenvalues(Dim2Params(rho, nu))
            for sr, sn in ((-1, 1), (1, -1), (-1, -1)):
                other = dim2_eigenvalues(Dim2Params(sr * rho, sn * nu))
                if max(abs(x - y) for x, y in zip(base, other)) > 1e-9:
                    ok = False
                    witness[f"rho={rho},nu={nu}"] = (sr, sn)
    return _result("dim2.mirror_symmetry", ok, witness)


# ---------------------------------------------------------------------- svd


def _svd_tables(dim: int):
    rng = random.Random(71)
    tables = [grassmann_tables(n) for n in range(1, min(dim, 3) + 1)]
    for _ in range(10):
        n = rng.randint(1, min(dim, 3))
        tables.append(clifford_tables(_rand_form(rng, n)))
    return tables


def check_main_theorem(dim: int) -> CheckResult:
    """The coproduct maps each positive-eigenvalue eigenvector of A to a
    B-eigenvector with the same eigenvalue."""
    ok = True
    witness = {"max_residual": 0.0}
    for t in _svd_tables(dim):
        tf = t.as_float()
        m = tf.product_matrix
        a, b = gram_A(tf), gram_B(tf)
        eig = sym_eig(a)
        scale = max(float(np.linalg.norm(b)), 1.0)
        for lam, u in zip(eig.eigenvalues, eig.vectors.T):
            if lam <= 1e-9 * max(eig.eigenvalues[0], 1.0):
                continue
            w = m.T @ u
            residual = float(np.linalg.norm(b @ w - lam * w)) / scale
            witness["max_residual"] = max(witness["max_residual"], residual)
            if residual > 1e-9:
                ok = False
                witness[t.label] = residual
    return _result("svd.main_theorem", ok, witness)


def check_reconstruction(dim: int) -> CheckResult:
    """||sum u_i d_i^(1/2) v_i^T - m||_F <= 1e-8 ||m||_F."""
    ok = True
    witness = {"max_rel_error": 0.0}
    for t in _svd_tables(dim):
        tf = t.as_float()
        s = svd_of_product(tf, with_kernel=False)
        err = float(
            np.linalg.norm(spectral_reconstruct(s) - tf.product_matrix)
        ) / max(frobenius_norm(tf.product_matrix), 1e-30)
        witness["max_rel_error"] = max(witness["max_rel_error"], err)
        if err > 1e-8:
            ok = False
            witness[t.label] = err
    return _result("svd.reconstruction", ok, witness)


def check_frobenius_sum(dim: int) -> CheckResult:
    """Frobenius norm squared equals the sum of the A-eigenvalues."""
    ok = True
    witness = {}
    for t in _svd_tables(dim):
        tf = t.as_float()
        s = svd_of_product(tf, with_kernel=False)
        frob2 = frobenius_norm(tf.product_matrix) ** 2
        total = float(np.sum(s.singular_values**2))
        if abs(frob2 - total) > 1e-9 * max(frob2, 1.0):
            ok = False
            witness[t.label] = (frob2, total)
    return _result("svd.frobenius_sum", ok, witness)


def check_two_norm_growth(dim: int = 6) -> CheckResult:
    """The Grassmann product map has operator norm 2^(n/2), n = 1..6."""
    ok = True
    witness = {}
    for n in range(1, 7):
        t = grassmann_tables(n).as_float()
        s = svd_of_product(t, with_kernel=False)
        expected = 2 ** (n / 2)
        err = abs(two_norm(s) - expected)
        if err > 1e-9:
            ok = False
            witness[f"n={n}"] = err
    return _result("svd.two_norm_growth", ok, witness)


def check_polar(dim: int) -> CheckResult:
    """scale . isometry reproduces m; scale is symmetric PSD."""
    ok = True
    witness = {}
    rng = random.Random(73)
    tables = [grassmann_tables(n) for n in (1, 2)]
    for _ in range(3):
        tables.append(clifford_tables(_rand_form(rng, 2)))
    for t in tables:
        tf = t.as_float()
        scale, isometry = polar_decompose(tf)
        err = float(np.linalg.norm(scale @ isometry - tf.product_matrix))
        sym_err = float(np.linalg.norm(scale - scale.T))
        eigs = np.linalg.eigvalsh((scale + scale.T) / 2)
        if err > 1e-10 or sym_err > 1e-12 or eigs.min() < -1e-10:
            ok = False
            witness[t.label] = {"reproduce": err, "sym": sym_err}
    return _result("svd.polar", ok, witness)


# ------------------------------------------------------------------- suites

SUITES = {
    "grassmann": (
        check_gram_2pow,
        check_iterated_r_pow,
        check_minimal_polynomial,
        check_spectra_match,
        check_hopf_axioms,
        check_aux_coproducts,
    ),
    "clifford": (
        check_dim1_table,
        check_dim1_gram,
        check_dim1_singular_values,
        check_dim1_kernel,
        check_diagonal_metric_formula,
        check_generator_relations,
        check_selfinverse_gram,
    ),
    "dim2": (
        check_dim2_table_match,
        check_dim2_closed_form,
        check_dim2_brackets,
        check_dim2_car,
        check_dim2_locus,
        check_dim2_mirror,
    ),
    "svd": (
        check_main_theorem,
        check_reconstruction,
        check_frobenius_sum,
        check_two_norm_growth,
        check_polar,
    ),
}


def run_verify_suite(name: str, dim: int = 3) -> VerifyReport:
    """Run one named suite (or 'all'); see SUITES for the check lists."""
    if name == "all":
        checks = [c for suite in SUITES.values() for c in suite]
    elif name in SUITES:
        checks = list(SUITES[name])
    else:
        raise KeyError(f"unknown suite {name!r}; choose from "
                       f"{sorted(SUITES) + ['all']}")
    return VerifyReport(name, tuple(c(dim) for c in checks))
