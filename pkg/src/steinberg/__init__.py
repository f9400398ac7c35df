"""Exact point counts over F_q of generalized Springer and Steinberg varieties,
of triple spaces on principal bundles over P^1, and the symmetric-function
generating-function identity for GL_n that ties them together."""

from .bundles import Cocharacter, LeviData, c_mu, dim_aut, levi_of, trip_count
from .counts import (
    InternalMismatch,
    coproduct_eval,
    group_order,
    levi_order,
    nilcone_order,
    sp_count,
    st_count,
)
from .qalg import NotPolynomial, QPoly, QRat, TSeries, eval_at, format_poly
from .rootsys import DatumError, ReductiveDatum, build_root_system, gl, parse_datum, sl
from .symfun import (
    BiSymFunc,
    GradedBiSeries,
    SymFunc,
    delta_n,
    exp_side,
    h_in_m,
    omega_series,
    pleth_h_X_over_qm1,
    pleth_h_XY_over_qm1,
)
from .weyl import associate_classes, kilmoyer_intersection, min_coset_reps, min_double_coset_reps

__version__ = "0.1.0"

__all__ = [
    "BiSymFunc",
    "Cocharacter",
    "DatumError",
    "GradedBiSeries",
    "InternalMismatch",
    "LeviData",
    "NotPolynomial",
    "QPoly",
    "QRat",
    "ReductiveDatum",
    "SymFunc",
    "TSeries",
    "associate_classes",
    "build_root_system",
    "c_mu",
    "coproduct_eval",
    "delta_n",
    "dim_aut",
    "eval_at",
    "exp_side",
    "format_poly",
    "gl",
    "group_order",
    "h_in_m",
    "kilmoyer_intersection",
    "levi_of",
    "levi_order",
    "min_coset_reps",
    "min_double_coset_reps",
    "nilcone_order",
    "omega_series",
    "parse_datum",
    "pleth_h_XY_over_qm1",
    "pleth_h_X_over_qm1",
    "sl",
    "sp_count",
    "st_count",
    "trip_count",
]
