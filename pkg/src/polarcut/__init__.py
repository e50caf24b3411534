"""Exact rational polar duality, gauge evaluators, and corner-relaxation cuts."""

from .rationals import QScalar, Vec, dot, make_rational, parse_rational, format_rational
from .lp import LinearProgram, LPOutcome, solve, verify_certificate
from .polyhedra import (
    HPolyhedron,
    VPolytope,
    MembershipVerdict,
    normalize,
    polar,
    membership,
    hull_membership,
    exposed_witness,
)
from .sublinear import (
    SupportFunction,
    SandwichReport,
    gauge,
    minimal_sublinear,
    support,
    check_unit_ball,
    sandwich_check,
    reconstruct_check,
    off_recession_check,
)
from .cuts import (
    CornerInstance,
    SFreeBody,
    Cut,
    make_body,
    generate_cut,
    is_s_free,
    check_cut_validity,
    maximality_certificate,
)

__version__ = "0.1.0"
