"""Exact minimum distances of power-trace codes and point-count bounds for
Artin-Schreier curves y^p - y = f(x) over F_{p^m}."""

from .ascurve import CurveSpec, MaxPoints, count_points, max_points, zero_set_size
from .bounds import BoundRow, hasse_weil, new_bound, serre, weil_zf_bound
from .gf import FieldCtx, build_field
from .kernels import BACKEND
from .powcode import MinDistance, PowerTraceCode, generator_matrix, min_distance, weight
from .search import InfeasibleError

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BoundRow", "CurveSpec", "FieldCtx", "InfeasibleError", "MaxPoints",
    "MinDistance", "PowerTraceCode", "build_field", "count_points", "generator_matrix",
    "hasse_weil", "max_points", "min_distance", "new_bound", "serre", "weight",
    "weil_zf_bound", "zero_set_size",
]
