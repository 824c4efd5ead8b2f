"""Exact meets, joins and Jordan decompositions of measures on finite spaces."""

from .errors import (
    EmptyFamily,
    MeasureLatticeError,
    SpaceMismatch,
    TooLargeToEnumerate,
    UndefinedDifference,
)
from .extended_reals import (
    INF,
    ONE,
    ZERO,
    ExtNonneg,
    ExtSigned,
    add,
    ext_sum,
    format_ext,
    neg_part,
    parse_ext,
    pos_part,
    sub_checked,
)
from .measurable_space import (
    MeasurableSet,
    MeasurableSpace,
    Partition,
    bell_number,
    complement,
    enumerate_partitions,
    enumerate_sets,
    intersect,
    is_disjoint,
    union,
)
from .measures import (
    AdditivityReport,
    Measure,
    SetFunctionTable,
    SignedMeasure,
    add_measures,
    dirac,
    infinity_measure,
    is_measure,
    is_measure_pairwise,
    leq,
    leq_setwise,
    scale,
    sub_measures,
    zero_measure,
)
from .decomposition import (
    HahnDecomposition,
    JordanPair,
    hahn_decompose,
    inf_over_subsets,
    jordan_decompose,
    sup_over_subsets,
)
from .lattice import (
    MeasureFamily,
    PartitionAssignment,
    index_partition_formula,
    join2,
    join_family,
    join_via_jordan,
    meet2,
    meet_family,
    meet_via_jordan,
)
from .oracle import (
    oracle_family_bounds,
    oracle_family_join,
    oracle_family_meet,
    oracle_is_glb,
    oracle_is_lub,
    oracle_join2,
    oracle_meet2,
)

__version__ = "0.1.0"
