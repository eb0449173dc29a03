"""Exact Hankel determinants of Bernoulli and Euler sequence families.

All arithmetic is exact (rationals and polynomials over the rationals); the
package generates the sequences, computes their Hankel determinants by
several independent engines, extracts three-term recurrences from moments,
evaluates a catalog of closed-form determinant identities, and verifies
every cataloged identity against brute force.
"""

__version__ = "0.1.0"

from fractions import Fraction

from .characters import BUILTIN_CHARACTERS, DirichletCharacter
from .closed_forms import (
    ClosedFormIdentity,
    NegativeUmbralExponentError,
    OutOfRangeError,
    UmbralExpr,
    UnknownIdentityError,
    eval_closed_form,
    eval_misc,
    fk_general,
    get_identity,
    registry,
    umbral_eval,
)
from .hankel import (
    DetResult,
    HankelMatrix,
    InsufficientCoefficientsError,
    InternalInexactDivisionError,
    NotCheckerboardError,
    checkerboard_det,
    checkerboard_split,
    det_exact,
    hankel_det,
    hankel_matrix,
    shift_factor_dn,
)
from .orthopoly import (
    CommonRootViolatedError,
    DegenerateMomentsError,
    MonicOPS,
    RecurrenceCoeffs,
    builtin_recurrence_bern_odd,
    derivative_limit_hankel,
    hankel_from_recurrence,
    monic_ops,
    recurrence_from_moments,
    shift_relation_check,
)
from .poly import (
    NotDivisibleError,
    PoleAtLimitError,
    UniPoly,
    cancel_and_eval_limit,
    poly_affine_substitute,
    poly_derivative,
    poly_divide_exact,
    poly_eval,
)
from .sequences import (
    InvalidParametersError,
    Multiplier,
    SequenceSpec,
    alt_power_sum_seq,
    bern_diff_sum,
    bernoulli_number,
    bernoulli_poly,
    euler_diff_sum,
    euler_number,
    euler_poly,
    gen_bernoulli_number,
    gen_bernoulli_poly,
    get_spec,
    power_sum_seq,
    resolve,
    tangent_number,
    zigzag_number,
)
from .verify import VerificationReport, terms_equal, verify_all, verify_identity
