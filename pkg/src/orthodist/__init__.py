"""Generalised distance measures and their isometries on the rotation group SO(n)."""
from .distance import DistanceSpec, borel_apply, dist, geodesic_distance, norm_distance
from .isometry import IsometryForm, MapTable, apply_form, max_deviation
from .norms import NormSpec, parse_norm
from .rotation import assert_so, exp_skew, log_so, one_param, random_so
from .scalarfun import PRINCIPAL_LOG, Z_MINUS_1, ScalarSymbol
from .skewsym import YoulaForm, assert_skew, bch_numeric, bch_series3, random_skew, tilde, youla

__all__ = [
    "DistanceSpec",
    "borel_apply",
    "dist",
    "geodesic_distance",
    "norm_distance",
    "IsometryForm",
    "MapTable",
    "apply_form",
    "max_deviation",
    "NormSpec",
    "parse_norm",
    "assert_so",
    "exp_skew",
    "log_so",
    "one_param",
    "random_so",
    "PRINCIPAL_LOG",
    "Z_MINUS_1",
    "ScalarSymbol",
    "YoulaForm",
    "assert_skew",
    "bch_numeric",
    "bch_series3",
    "random_skew",
    "tilde",
    "youla",
]

__version__ = "0.1.0"
