"""Plane curves over finite fields: singularities, branch counts, Frobenius
order sequences and Stohr-Voloch type bounds on rational branches."""

from .errors import BudgetExceeded, PolySyntaxError, PrecisionExhausted, PreconditionError, UnsupportedError
from .gf import GF, Field, FieldElement, embed, enumerate_field, field_of_size, frobenius
from .poly import (BivarPoly, HomogPoly, PowerSeries, UPoly, count_rational_roots, dehomogenize, divides,
                   hensel_expand, hensel_lift, homogenize, is_squarefree, parse_poly)
from .curve import (Curve, CurveAnalysis, HStatus, ProjPoint, SingularPoint, analyze, carac_form_check,
                    check_hypothesis_H, cremona_transform, find_singular_points, frame_matrix, genus_bound, multiplicity,
                    projective_change, tangent_cone, transform_point)
from .branch import (Branch, LinearSystem, OrderSeq, am_osculating_conic, base_locus_degree, branches_at,
                     conic_system_through, count_branches, generic_order_sequence, intersection_multiplicity,
                     intersection_number, linear_system, order_sequence_at)
from .classicality import (DerivationContext, FrobeniusResult, FunctionField, am_divisibility_criterion,
                           am_polynomial, double_frobenius_order_sequence, frobenius_order_sequence,
                           hasse_derivative)
from .bounds import (BoundReport, abc_bound, ab_bound, bam_bound, bam_check, c_constants_from_orders,
                     comparison_conditions, hasse_weil, sv_bound, svc_bound, svf_svcl_bounds)
from .families import artin_mumford, hurwitz, product_sextic
from .report import am_verify, bounds_report

__version__ = "0.1.0"
