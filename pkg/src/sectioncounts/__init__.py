"""Exact q-series computations for section-curve counts on the Weierstrass
elliptic Calabi-Yau threefold over P^2."""

from .counts import (
    Conjecture,
    CountLedger,
    build_ledger,
    bl_correction,
    component_contribution,
    gw_series,
    h_series_correction,
    h_series_theorem1,
    phi_series,
)
from .geometry import (
    PlaneCurveInvariants,
    classify_line,
    discriminant_invariants,
    e3_surface_invariants,
    hodge_constants,
    pluecker_dual,
)
from .lattice import (
    GramLattice,
    LatticeVec,
    SurfaceClass,
    constrained_count,
    enumerate_by_norm,
    mw_power_class,
    projection_norm,
    pushforward_to_X,
    root_lattice_A,
    self_intersection,
    theta_series,
)
from .modforms import eisenstein, euler_product, mform_basis, mform_fit, sigma_pow
from .qseries import DEFAULT_PREC, QSeries, qs_add, qs_coeff, qs_mul, qs_pow

__version__ = "0.1.0"
