"""Exact Catalan-like triangles, shifted Hankel determinants, verification."""

from .ring import (
    C,
    NotDivisibleError,
    Polynomial,
    RingElement,
    as_poly,
    eval_at,
    exact_div,
    parity_sign,
    render,
)
from .sequences import (
    AdmissibleTable,
    Constant,
    Explicit,
    OutOfRangeError,
    Shifted,
    TooLargeError,
    WeightSpec,
    admissible_table,
    column,
    parse_weight_spec,
    paths_oracle,
    shift,
    weight_at,
)
from .hankel import (
    HankelSpec,
    InternalDivisionError,
    SquareMatrix,
    det_fraction_free,
    hankel_det,
    hankel_matrix,
)
from .series import (
    NonUnitConstantTermError,
    TruncatedSeries,
    motzkin_series,
    reciprocal_power_coeffs,
)
from .polyfam import (
    fibonacci_poly,
    lucas_bivariate_at,
    lucas_bivariate_eval,
    lucas_poly,
)
from .verify import (
    CLAIM_IDS,
    CheckReport,
    Witness,
    check_conjectures9_10,
    check_corollary6,
    check_identities7_8,
    check_lemma13,
    check_lemma13_random,
    check_series_identities,
    check_theorem1,
    check_theorem1_random,
    check_theorem2,
    check_theorem3,
    lemma13_sides,
)

__version__ = "0.1.0"
