"""ellisem: exact finite-semigroup structure theory, and finite shadows of
the Ellis semigroups of constant-length substitution subshifts."""

from .analysis import (
    ClassificationReport,
    classify_system,
    full_model_report,
    li_yorke_witness_map,
)
from .columns import ColumnMap, column_map_at, occurring_columns, recurrent_tuples
from .errors import (
    ConsistencyError,
    EllisemError,
    KernelModelUnavailable,
    ParseError,
    PreconditionError,
    ShadowUndefinedError,
)
from .fiber import (
    FiberSemigroup,
    KernelModel,
    build_fiber_semigroup,
    directional_shadows,
    first_column_cycle,
    kernel_model,
)
from .fixedpoint import FixedPoint, Window, expand_window
from .odometer import OdometerElement, from_int, odometer_add, ones, zeros
from .pairs import BACKWARD, FORWARD, PairClassification, classify_pair
from .rees import (
    ReesData,
    find_isomorphism,
    left_simple_dichotomy,
    rees_decompose,
    rees_multiply,
    rees_normalize,
    rees_semigroup,
)
from .semigroup import (
    FiniteSemigroup,
    GreensStructure,
    IdempotentPoset,
    KernelIdeals,
    StructureReport,
    closure,
    completely_regular_witness,
    cyclic_group,
    from_function,
    from_table,
    greens,
    idempotent_poset,
    is_completely_regular_element,
    kernel,
    left_zero,
    minimal_left_ideals,
    minimal_right_ideals,
    normal_inverse,
    product_semigroup,
    quotient,
    structure_report,
    sub_semigroup,
)
from .substitution import (
    Substitution,
    fixed_point_seeds,
    parse_substitution,
    parse_substitution_json,
    parse_substitution_text,
)
from .transformation import (
    Transformation,
    all_transformations,
    compose,
    constant,
    identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
