"""Exact Bell polynomials, autonomous-ODE flows and majorant bounds over rings."""

from .autonomous import (
    FlowSeries,
    TrajectorySample,
    autonomous_operator,
    evaluate_flow_at,
    flow_eval,
    flow_series,
    flow_symbolic,
    trajectory,
)
from .bell import (
    Partition,
    complete_bell,
    compose_egf,
    enumerate_partitions,
    partial_bell,
)
from .closed_forms import (
    Family,
    corollary1_flow,
    image_of_family,
    jet_of_family,
    pochhammer_rising,
    rational_binomial,
)
from .majorant import (
    CertificationReport,
    HypothesisViolation,
    MajorantSpec,
    bound_flow_eval,
    bound_series,
    certify,
    check_domination,
    majorant_values,
    norm_jet,
)
from .rings import (
    GAUSSIAN,
    INTEGERS,
    RATIONALS,
    GaussianRational,
    NormedRing,
    Ring,
    gaussian_norm,
    rational_norm,
)
from .series import (
    HurwitzSeries,
    Jet,
    SeriesRing,
    delta,
    evaluate,
    hurwitz_expansion,
    series_add,
    series_mul,
    tail_norm_bound,
)

__all__ = [
    "CertificationReport",
    "Family",
    "FlowSeries",
    "GAUSSIAN",
    "GaussianRational",
    "HurwitzSeries",
    "HypothesisViolation",
    "INTEGERS",
    "Jet",
    "MajorantSpec",
    "NormedRing",
    "Partition",
    "RATIONALS",
    "Ring",
    "SeriesRing",
    "TrajectorySample",
    "autonomous_operator",
    "bound_flow_eval",
    "bound_series",
    "certify",
    "check_domination",
    "complete_bell",
    "compose_egf",
    "corollary1_flow",
    "delta",
    "enumerate_partitions",
    "evaluate",
    "evaluate_flow_at",
    "flow_eval",
    "flow_series",
    "flow_symbolic",
    "gaussian_norm",
    "hurwitz_expansion",
    "image_of_family",
    "jet_of_family",
    "majorant_values",
    "norm_jet",
    "partial_bell",
    "pochhammer_rising",
    "rational_binomial",
    "rational_norm",
    "series_add",
    "series_mul",
    "tail_norm_bound",
    "trajectory",
]

__version__ = "0.1.0"
