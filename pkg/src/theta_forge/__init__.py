"""theta-forge: exact q-series arithmetic, representation counting, and a
registry-driven harness that verifies a catalog of theta-function identities
and triangular-number counting theorems at configurable desk scale."""

from .backends import backend_name
from .counting import (
    FactoredInteger,
    c_constant,
    class_number,
    count_N,
    count_N_vector,
    count_R,
    count_t,
    count_t_prime,
    count_t_prime_vector,
    count_t_vector,
    divisor_T,
    factorize,
    gauss_r3,
    hurwitz_r3_square,
    is_square,
    is_squarefree,
    kronecker,
    r3,
)
from .conjectures import CONJECTURE_IDS, ConjectureReport, scan, scan_all
from .registry import (
    CheckRecord,
    CheckReport,
    UnknownCheckError,
    VectorCache,
    lookup,
    registry,
    run_all,
    run_check,
    run_count_check,
    run_series_check,
)
from .series import (
    CapacityError,
    MatchReport,
    PrecisionError,
    SeriesError,
    TruncatedSeries,
    one_series,
    series_add,
    series_coeff,
    series_equal,
    series_from_coeffs,
    series_mul,
    series_residue_extract,
    series_scale,
    series_shift,
    series_substitute_power,
    series_truncate,
    zero_series,
)
from .theta import (
    DiagonalForm,
    as_form,
    jacobi_cube_sides,
    n_series,
    phi,
    phi_neg,
    phi_pow,
    product_phi_neg,
    product_psi,
    psi,
    psi_pow,
    t_prime_series,
)

__version__ = "0.1.0"
