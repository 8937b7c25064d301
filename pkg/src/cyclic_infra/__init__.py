"""Discrete cyclic infrastructures and the Pohlig-Hellman attack on their distances."""

from .errors import *  # noqa: F401,F403
from .ff_poly import FieldElem, FieldPoly, floor_sqrt, poly_divmod, poly_gcd
from .frep_group import FRep, FRepGroup, OpCostLedger, cost_of_last_op
from .infra_core import (
    BackendStats,
    InfraPoint,
    Infrastructure,
    TableInfra,
    ValidationReport,
    enumerate_cycle,
    full_cyclic_table,
    random_table,
    validate_axioms,
)
from .ph_solver import (
    DlogInstance,
    Factorization,
    SolveReport,
    bsgs_prime,
    crt_combine,
    ph_prime_power,
    solve_distance,
    trim_multiple,
)
from .rqff import (
    CurveParams,
    RealQuadraticCurve,
    ReducedIdeal,
    RegulatorInfo,
    count_points_zeta,
    l_polynomial,
    make_curve,
    random_curve,
    rq_baby_step,
    rq_giant_step,
    rq_inverse_baby_step,
)
from .smoothness import (
    SmoothExponent,
    SmoothnessQuery,
    SmoothVerdict,
    build_smooth_exponent,
    hasse_weil_bound,
    identity_test,
    is_smooth,
)

__version__ = "0.1.0"
