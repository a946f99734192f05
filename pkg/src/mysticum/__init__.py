"""Exact construction of Pascal's hexagrammum mysticum and its Veronese tower."""

from .projective import (
    INF,
    Point,
    Line,
    canonicalize,
    conic_point,
    cross_ratio_lines,
    cross_ratio_points,
    dependent_triple,
    incident,
    join,
    meet,
)
from .labels import (
    LetterPerm,
    NumberPerm,
    enumerate_labels,
    hexagon_of_pascal_label,
    parse_label,
    pascal_label_of_hexagon,
    zeta,
    zeta_inv,
)
from .base import (
    DegenerateSextuple,
    FIXTURE_PARAMS,
    Sextuple,
    build_base,
    build_pascal,
    fixture_sextuple,
    random_sextuple,
    validate_general_position,
)
from .mutation import Multimysticum, build_multimysticum, elevate
from .ranges import (
    RangeSpec,
    all_range_specs,
    extract_range,
    proof_witnesses,
    range_coordinates,
    verify_all,
    veronese_sequence,
)

__version__ = "0.1.0"
