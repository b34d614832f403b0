from .univariate import UPoly, count_rational_roots, is_squarefree
from .bivariate import BivarPoly, HomogPoly, homogenize, dehomogenize, poly_divides as divides, lex_remainder
from .parser import parse_poly
from .series import PowerSeries, hensel_expand, hensel_lift, series_eval

__all__ = [
    "UPoly", "count_rational_roots", "is_squarefree",
    "BivarPoly", "HomogPoly", "homogenize", "dehomogenize", "divides", "lex_remainder",
    "parse_poly", "PowerSeries", "hensel_expand", "hensel_lift", "series_eval",
]
