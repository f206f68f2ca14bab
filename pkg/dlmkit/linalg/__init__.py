from dlmkit.linalg.charpoly import CharPolynomial, char_poly
from dlmkit.linalg.jacobi import agreement_tolerance, numeric_eigenpairs, numeric_eigenvalues
from dlmkit.linalg.matrix import IntSymMatrix
from dlmkit.linalg.roots import (
    ExactSpectrum,
    RealRoot,
    SpectrumEntry,
    SquarefreeFactorization,
    compare_roots,
    exact_spectrum,
    isolate_real_roots,
    largest_multiplicity,
    spectrum_of_polynomial,
    squarefree_decompose,
)

__all__ = [
    "CharPolynomial",
    "char_poly",
    "agreement_tolerance",
    "numeric_eigenpairs",
    "numeric_eigenvalues",
    "IntSymMatrix",
    "ExactSpectrum",
    "RealRoot",
    "SpectrumEntry",
    "SquarefreeFactorization",
    "compare_roots",
    "exact_spectrum",
    "isolate_real_roots",
    "largest_multiplicity",
    "spectrum_of_polynomial",
    "squarefree_decompose",
]
