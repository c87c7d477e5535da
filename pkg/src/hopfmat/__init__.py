"""Grassmann/Clifford structure matrices and their singular value spectra."""

from .deform import (
    BilinearForm,
    ExtendedForm,
    boolean_product,
    circle_product,
    grouplike_coproduct,
    laplace_extend,
    minus_coproduct,
)
from .exterior import (
    Blade,
    Element,
    TensorElement,
    alpha_decode,
    alpha_encode,
    antipode,
    blade_wedge,
    counit,
    grade_project,
    grassmann_coproduct,
    switch_permutation,
    wedge,
)
from .experiments import (
    Dim2Params,
    ScanRecord,
    bracket_tables,
    diagonal_metric_spectrum,
    dim2_gram_closed_form,
    locus_residual,
    scan_grid,
)
from .spectral import (
    EigenDecomposition,
    SvdTriple,
    frobenius_norm,
    kernel_basis,
    polar_decompose,
    spectral_reconstruct,
    svd_of_product,
    sym_eig,
    two_norm,
)
from .structmat import (
    StructureTables,
    build_product_matrix,
    clifford_tables,
    gram_A,
    gram_B,
    grassmann_tables,
    iterated_gram,
    iterated_product_matrix,
    poly_annihilates,
    spectrum_multiset,
)
from .verify import VerifyReport, run_verify_suite

__version__ = "0.1.0"
