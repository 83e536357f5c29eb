"""Two-robot wireless evacuation from unit disks of l_p norms.

Numerical library and CLI: geometry of the l_p unit circle (perimeter,
arc length and its inversion, chords), the evacuation search and its
worst-case cost, the minimum-chord function with monotonicity
certification, and matching lower bounds.
"""

__version__ = "0.1.0"

from .chord_arc import (
    ChordArcSample,
    Direction,
    MonotonicityReport,
    chord_of_arc,
    min_chord,
    tangential_chord,
    tangential_chord_profile,
    verify_min_chord_monotone,
    verify_tangential_chord_monotone,
)
from .evacuation import (
    AlgoParams,
    Branch,
    CostPiece,
    CriticalParams,
    EvacOutcome,
    aux_root_equation,
    evac_cost_curve,
    evac_time,
    robot_positions,
    separation,
    simulate_exit,
    worst_case_cost,
    worst_case_grid_oracle,
    worst_case_params,
)
from .lower_bound import (
    OptimalityReport,
    generic_lower_bound,
    optimality_report,
    weak_lower_bound,
)
from .lp_geometry import (
    INF,
    ArcSpec,
    CirclePoint,
    DomainError,
    Point2,
    arc_distance,
    arc_length,
    chart_point,
    chart_speed,
    chord_length,
    half_perimeter,
    lp_norm,
    point_at_arc_length,
    unit_circle_point,
    validate_p,
)
from .numerics import (
    BracketedRoot,
    BracketError,
    DEFAULT_TOL,
    IntegrationError,
    Tolerance,
    find_root_bracketed,
    integrate_adaptive,
    maximize_1d,
)
from .tables import CurveTable, quantize

__all__ = [
    "__version__",
    # numerics
    "Tolerance",
    "BracketedRoot",
    "BracketError",
    "IntegrationError",
    "DEFAULT_TOL",
    "integrate_adaptive",
    "find_root_bracketed",
    "maximize_1d",
    # geometry
    "INF",
    "DomainError",
    "Point2",
    "CirclePoint",
    "ArcSpec",
    "validate_p",
    "lp_norm",
    "unit_circle_point",
    "chart_point",
    "chart_speed",
    "half_perimeter",
    "arc_length",
    "point_at_arc_length",
    "arc_distance",
    "chord_length",
    # evacuation
    "Branch",
    "CostPiece",
    "AlgoParams",
    "EvacOutcome",
    "CriticalParams",
    "robot_positions",
    "separation",
    "evac_time",
    "simulate_exit",
    "aux_root_equation",
    "worst_case_params",
    "worst_case_cost",
    "worst_case_grid_oracle",
    "evac_cost_curve",
    # chord / arc
    "Direction",
    "ChordArcSample",
    "MonotonicityReport",
    "chord_of_arc",
    "tangential_chord",
    "tangential_chord_profile",
    "min_chord",
    "verify_min_chord_monotone",
    "verify_tangential_chord_monotone",
    # lower bounds
    "OptimalityReport",
    "weak_lower_bound",
    "generic_lower_bound",
    "optimality_report",
    # tables
    "CurveTable",
    "quantize",
]
