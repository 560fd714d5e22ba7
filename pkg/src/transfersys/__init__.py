"""Transfer systems on [n], their compatible pairs, and Fuss-Catalan counts."""

from .catalan_bijection import (
    CatalanTuple,
    ExtensionSpec,
    build_extension,
    count_by_cores,
    core_sum,
    enumerate_tuples,
    enumerate_tuples_with_core,
    excess,
    extend_tuple,
    list_extensions,
    make_catalan_tuple,
    sigma,
    sigma_inverse,
    tuple_core,
)
from .compatibility import (
    CompatiblePair,
    CountTable,
    compatible_partners,
    count_d,
    count_pairs,
    enumerate_pairs,
    filtration_level,
    is_compatible,
)
from .core import (
    UNIT,
    ClassificationFlags,
    Composition,
    TransferSystem,
    classify,
    complete,
    concat,
    core,
    decompose_wrapped,
    enumerate_all,
    fixed_points,
    generate_from,
    hull,
    leq,
    make_transfer_system,
    restrict,
    saturated_from_composition,
    trivial,
    wrap,
)
from .fuss_catalan import FussParams, catalan, check_identity, fuss_catalan

__version__ = "0.1.0"
