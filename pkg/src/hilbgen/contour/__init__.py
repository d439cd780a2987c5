"""Independent numerical oracle: product evaluations and contour quadrature."""

from .arcs import ArcSplitReport, approximation_residual, arc_split_probe, g_m1_numeric
from .modular import eval_eta, eval_f, eval_g, eval_qpoch_inverse, eval_theta
from .quadrature import ContourConfig, contour_a, contour_delta, contour_row

__all__ = [
    "ArcSplitReport", "ContourConfig", "approximation_residual", "arc_split_probe",
    "contour_a", "contour_delta", "contour_row", "eval_eta", "eval_f", "eval_g",
    "eval_qpoch_inverse", "eval_theta", "g_m1_numeric",
]
