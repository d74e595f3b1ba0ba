"""Exact classification of symmetric bilinear composition laws on the plane."""

from .errors import (
    BadCharacteristic,
    Degenerate,
    DegenerateInput,
    Indeterminate,
    InternalError,
    NotHyperbolic,
    NotRegular,
    QuadlawError,
    SingularMap,
    SpecMismatch,
    TooLarge,
    Unsupported,
    ZeroDivisor,
)
from .field import FieldElement, FieldSpec, prime_field, rationals
from .clifford import (
    QuadAlgebra,
    QuadElement,
    SplitPair,
    cube_roots_complete,
    is_cube,
    norm_one_group,
    solve_cube,
    split,
    unsplit,
)
from .sbl import SBL, Covector, Mat2, QuadraticForm, Vec2, act, sigma
from .classify import (
    CliffordParams,
    DiagonalBasis,
    EquivResult,
    GTransform,
    IsotropyDescription,
    K,
    Na,
    NormalForm,
    apply_g,
    diagonalize,
    equivalent,
    from_normal_form,
    g_equivalent,
    invariants_J,
    isotropy,
    normal_form,
    recover_from_J,
    represent_minus_one,
    to_clifford_params,
)
from .oracle import (
    OrbitRecord,
    Report,
    census,
    cross_validate,
    enumerate_gl,
    gl_order,
    orbit,
    stabilizer,
)

__version__ = "0.1.0"
