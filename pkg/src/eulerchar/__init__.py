"""Exact arithmetic for face-count invariants of simplicial complexes.

The library computes, over the rationals with no rounding anywhere:

- truncated formal power series, including composition and reversion;
- the Riordan group (pairs T(beta|alpha)), its action on series, and the
  two triangles that matter here: Pascal's and the simplex f-vector
  triangle F = T(1/(1-x)|1-x);
- Stirling numbers and the barycentric-subdivision operator B = S*D;
- finite abstract simplicial complexes with genuine barycentric
  subdivision as an independent cross-check;
- exact nullspaces, used to verify at any finite truncation that the
  multiples of the Euler characteristic are the only face-count linear
  combinations fixed by the homotopy-type constraints and by
  subdivision.
"""

from .fps import (
    CompositionError,
    NonInvertibleError,
    ReversionError,
    Series,
    as_fraction,
)
from .matrix import ExactMatrix, row_times_matrix
from .riordan import RiordanPair, f_matrix, identity_pair, pascal
from .simplicial import MAX_FACES, Complex, Face, FaceCountError, simplex
from .subdivision import (
    apply_B,
    delta,
    matrix_B,
    matrix_D,
    matrix_S,
    matrix_S_inverse,
    sd_fvector,
    stirling1,
    stirling2,
    stirling_triangle,
)
from .verify import (
    ChiReportRow,
    ChiSdReport,
    NullspaceBasis,
    SdInvariance,
    check_sd_invariant,
    chi_sd_report,
    eigenspace_of_b,
    homotopy_unique,
    nullspace,
)

__version__ = "0.1.0"

__all__ = [
    "ChiReportRow",
    "ChiSdReport",
    "Complex",
    "CompositionError",
    "ExactMatrix",
    "Face",
    "FaceCountError",
    "MAX_FACES",
    "NonInvertibleError",
    "NullspaceBasis",
    "ReversionError",
    "RiordanPair",
    "SdInvariance",
    "Series",
    "apply_B",
    "as_fraction",
    "check_sd_invariant",
    "chi_sd_report",
    "delta",
    "eigenspace_of_b",
    "f_matrix",
    "homotopy_unique",
    "identity_pair",
    "matrix_B",
    "matrix_D",
    "matrix_S",
    "matrix_S_inverse",
    "nullspace",
    "pascal",
    "row_times_matrix",
    "sd_fvector",
    "simplex",
    "stirling1",
    "stirling2",
    "stirling_triangle",
    "__version__",
]
