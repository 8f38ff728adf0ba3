"""h^{q,0} of symmetric products and Hilbert schemes of points on surfaces,
computed exactly over Q or F_p."""

from .exact_algebra import ExactMatrix, FieldScalar, FieldSpec, kernel_basis, rank
from .graded_basis import (
    DegreeComposition,
    Permutation,
    SignedBasisElement,
    SurfaceHodgeData,
    TensorBasisElement,
    act,
    enumerate_basis,
    enumerate_compositions,
    koszul_sign,
)
from .invariants import (
    InvariantReport,
    action_matrix,
    closed_form_q2,
    invariant_dimension,
    invariant_dimension_bruteforce,
)
from .series import BivariateSeries, char0_hq0_series, char2_predicted_series, compare

__version__ = "0.1.0"
