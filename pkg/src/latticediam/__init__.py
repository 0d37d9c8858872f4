"""Exact lattice diameter computations for lattice polygons and point sets.

Everything is integer/Fraction arithmetic; no floats anywhere. The main entry
points are compute_diameter (all diameter lines of a 2D lattice polygon),
brute_force_diameter (ground-truth pair scan in any dimension),
count_diameter_lines / fit_quasipolynomial (dilation behavior), the Borsuk
partition tools, and the reference constructions.
"""

from .borsuk import (
    BorsukGraph,
    BorsukPartition,
    ComponentClass,
    build_borsuk_graph,
    classify_components,
    conv_is_cube,
    exact_borsuk_number,
    greedy_partition,
)
from .constructions import (
    HardnessCheck,
    HardnessInstance,
    PolyConstraint,
    demo_chamber,
    direction_maximal_polytope,
    hardness_instance,
    hardness_lattice_points,
    hull_facets,
    integer_points_of_hull,
    min_f_on_grid,
    slope_triangle,
    vertex_avoiding_polytope,
    verify_hardness_instance,
)
from .core import (
    Direction,
    Point,
    PointSet,
    Polygon2,
    RationalPoint,
    count_lattice_points_polygon,
    enumerate_lattice_points,
    lattice_width,
    segment_lattice_count,
)
from .diameter import (
    DiameterReport,
    OppositePair,
    compute_diameter,
    local_diameter_lines,
    opposite_pairs,
    u_diameter_line,
)
from .dilation import (
    BlockDecomposition,
    QuasiPolynomial,
    chamber_decomposition,
    count_diameter_lines,
    fit_quasipolynomial,
)
from .documents import (
    Document,
    decode_number,
    document_for_point_set,
    document_for_polygon,
    encode_number,
    load_document,
    parse_document,
    point_set_from_document,
    polygon_from_document,
    render_document,
)
from .errors import (
    BudgetError,
    FitError,
    LatticeDiamError,
    ParseError,
    ValidationError,
)
from .lines import ClippedSegment, LatticeLine, clip_line, lattice_count_on_clip, nvol
from .oracle import (
    OracleReport,
    brute_force_diameter,
    check_rabinowitz,
    diameter_directions,
)
from .svg import render_diameter_svg

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "BorsukGraph",
    "BorsukPartition",
    "BudgetError",
    "ClippedSegment",
    "ComponentClass",
    "DiameterReport",
    "Direction",
    "Document",
    "FitError",
    "HardnessCheck",
    "HardnessInstance",
    "LatticeDiamError",
    "LatticeLine",
    "OppositePair",
    "OracleReport",
    "ParseError",
    "Point",
    "PointSet",
    "PolyConstraint",
    "Polygon2",
    "QuasiPolynomial",
    "RationalPoint",
    "ValidationError",
    "brute_force_diameter",
    "build_borsuk_graph",
    "chamber_decomposition",
    "check_rabinowitz",
    "classify_components",
    "clip_line",
    "compute_diameter",
    "conv_is_cube",
    "count_diameter_lines",
    "count_lattice_points_polygon",
    "decode_number",
    "demo_chamber",
    "diameter_directions",
    "direction_maximal_polytope",
    "document_for_point_set",
    "document_for_polygon",
    "encode_number",
    "enumerate_lattice_points",
    "exact_borsuk_number",
    "fit_quasipolynomial",
    "greedy_partition",
    "hardness_instance",
    "hardness_lattice_points",
    "hull_facets",
    "integer_points_of_hull",
    "lattice_count_on_clip",
    "lattice_width",
    "load_document",
    "local_diameter_lines",
    "min_f_on_grid",
    "nvol",
    "opposite_pairs",
    "parse_document",
    "point_set_from_document",
    "polygon_from_document",
    "render_diameter_svg",
    "render_document",
    "segment_lattice_count",
    "slope_triangle",
    "u_diameter_line",
    "vertex_avoiding_polytope",
    "verify_hardness_instance",
    "__version__",
]
