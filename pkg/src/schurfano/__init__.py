"""Exact invariants of Schur functors of the quotient bundle on the Fano
variety of lines of a very general cubic fourfold."""

from .weights import Weight2, Weight4, Weight6, WeightError, parse_partition, parse_weight2, parse_weight6
from .cohring import CohClass
from .schur import IrrepSum, end_decomposition, littlewood_richardson, pieri
from .bwb import BwbResult, bwb
from .chern import InternalInconsistency, ch_schur_closed, ch_schur_oracle, chi_end, lambda_polys
from .atomic import extended_mukai, is_atomic
from .koszul_ext import E1Page, ExtReport, e1_page, ext_report, k_set

__version__ = "0.1.0"

__all__ = [
    "Weight2", "Weight4", "Weight6", "WeightError",
    "parse_partition", "parse_weight2", "parse_weight6",
    "CohClass", "IrrepSum", "end_decomposition", "littlewood_richardson", "pieri",
    "BwbResult", "bwb",
    "InternalInconsistency", "ch_schur_closed", "ch_schur_oracle", "chi_end", "lambda_polys",
    "extended_mukai", "is_atomic",
    "E1Page", "ExtReport", "e1_page", "ext_report", "k_set",
]
