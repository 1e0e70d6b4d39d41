"""resolv: exact presentations of matrix algebras and their information content.

Everything is computed over the 8th cyclotomic field, so ranks, kernel
dimensions and scores are exact integers, never tolerance-dependent.
"""

from .catalog import (
    CatalogEntry,
    ComparisonReport,
    builtin_catalog,
    compare,
    random_presentation,
)
from .errors import ResolvError, ResourceLimitError, SchemaError, ValidationError
from .freealg import (
    DEFAULT_WORD_CAP,
    FiltrationBasis,
    FreeElement,
    derivation,
    enumerate_words,
    filtration_dim,
    from_coordinates,
    induced_endomorphism,
    substitute,
    to_coordinates,
)
from .info import (
    BogoliubovSolution,
    InfoReport,
    LowerBoundReport,
    bogoliubov_dimension,
    entropy_numbers,
    information_score,
    lifting_residuals,
    lower_bound_checks,
    raw_parameter_count,
)
from .linalg import ScalarMatrix, invert, rank_and_kernel, solve_linear
from .matrixrep import (
    MatrixAlgebraTarget,
    evaluate,
    generated_dimension,
    image_dimension,
    kernel_of_evaluation,
)
from .resolution import (
    FiniteFreeResolution,
    IdealTruncation,
    VerificationReport,
    clifford_resolution,
    deserialize,
    gamma_matrices,
    ideal_truncation,
    load_resolution,
    save_resolution,
    serialize,
    to_json_str,
    transform_generators,
    verify,
)
from .scalars import HALF, I, INV_SQRT2, ONE, SQRT2, ZERO, ZETA, CycScalar

__version__ = "0.1.0"
