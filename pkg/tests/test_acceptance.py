"""Exit criteria. All arithmetic is exact, so every tolerance is equality.

Run ``pytest tests/test_acceptance.py``; a PASS/FAIL line per criterion is
printed in the terminal summary.
"""
import json
import subprocess
import sys
import time
from fractions import Fraction

from sectioncounts import cli, counts, geometry, modforms
from sectioncounts.counts import (
    bl_correction,
    build_ledger,
    component_contribution,
    h_series_correction,
    h_series_theorem1,
    phi_fit,
    phi_series,
)
from sectioncounts.geometry import PlaneCurveInvariants, pluecker_dual
from sectioncounts.lattice import (
    constrained_count,
    direct_sum,
    enumerate_by_norm,
    mw_power_class,
    projection_norm,
    projection_norm_direct,
    pushforward_to_X,
    root_lattice_A,
    self_intersection,
    theta_series,
)
from sectioncounts.modforms import eisenstein, euler_product, mform_basis
from sectioncounts.qseries import QSeries, qs_mul, qs_pow

import oracles

PREC = 64
THETA_RANGE = 50


def criterion(number: int, title: str):
    def wrap(fn):
        fn.acceptance_label = f"AC-{number}"
        fn.acceptance_title = title
        return fn

    return wrap


@criterion(1, "phi(q) = 3 - 1188q + 184032q^2 + ..., basis coefficients (31/48, 113/48)")
def test_ac01_phi_anchors_and_fit():
    phi = phi_series(PREC)
    assert phi.prec == PREC
    assert (phi.coeff(0), phi.coeff(1), phi.coeff(2)) == (3, -1188, 184032)
    fit = phi_fit(PREC)
    assert fit.monomials == ((4, 0), (1, 2))
    assert fit.coefficients == (Fraction(31, 48), Fraction(113, 48))


@criterion(2, "fit constraints come live from hodge_constants and pluecker_dual(36,0,216)")
def test_ac02_chained_provenance(monkeypatch):
    anch = counts.anchors()
    assert anch.phi0 == geometry.hodge_constants().euler_integral == 3
    assert anch.phi2 == pluecker_dual(PlaneCurveInvariants(36, 0, 216)).nodes == 184032
    assert "hodge_constants.euler_integral" in anch.provenance
    assert "pluecker_dual(discriminant_invariants).nodes" in anch.provenance

    with monkeypatch.context() as m:
        m.setattr(geometry, "hodge_constants", lambda: geometry.HodgeConstants(3, 3, 5))
        assert phi_series(4).coeff(0) == 5
    real = geometry.pluecker_dual
    with monkeypatch.context() as m:
        m.setattr(geometry, "pluecker_dual", lambda c: geometry.PlaneCurveInvariants(
            real(c).degree, real(c).nodes + 48, real(c).cusps))
        assert phi_series(4).coeff(2) == 184080
    assert phi_series(4).coeffs[:3] == (3, -1188, 184032)


@criterion(3, "closed-form and correction routes for h agree on 1..64; h(1) = h(2) = 0")
def test_ac03_h_equivalence():
    h1, h2 = h_series_theorem1(PREC), h_series_correction(PREC)
    assert h1.agrees_with(h2, start=1, stop=PREC)
    assert h1.coeff(1) == h1.coeff(2) == 0
    assert h2.coeff(1) == h2.coeff(2) == 0
    # the ledger performs the same check and raises otherwise
    assert build_ledger(PREC).h == h1


@criterion(4, "h(n) is an integer for 1 <= n <= 64")
def test_ac04_integrality():
    h = h_series_theorem1(PREC)
    assert all(h.coeff(n).denominator == 1 for n in range(1, PREC + 1))


@criterion(5, "Pluecker: (36,0,216) -> (612,184032,1944) -> (36,0,216)")
def test_ac05_pluecker_biduality():
    disc = PlaneCurveInvariants(36, 0, 216)
    dual = pluecker_dual(disc)
    assert dual.as_tuple() == (612, 184032, 1944)
    assert pluecker_dual(dual) == disc
    assert geometry.discriminant_invariants() == disc


@criterion(6, "theta identities on 1..50, each theta coefficient reproduced by enumeration")
def test_ac06_theta_oracles():
    a1, a2 = root_lattice_A(1), root_lattice_A(2)
    a1a1 = direct_sum(a1, a1)
    t1, t2, t11 = theta_series(a1, THETA_RANGE), theta_series(a2, THETA_RANGE), theta_series(a1a1, THETA_RANGE)
    assert t11.agrees_with(t1 * t1, start=1, stop=THETA_RANGE)
    sq = (t1 - 1) * (t1 - 1)
    cusp = t2 - t1.scale(3)
    for r in range(1, THETA_RANGE + 1):
        assert constrained_count("A1A1_both_nonzero", r) == sq.coeff(r)
        assert constrained_count("A2_distinct_nonzero", r) == cusp.coeff(r)
    for L, t in ((a1, t1), (a2, t2), (a1a1, t11)):
        for r in range(1, THETA_RANGE + 1):
            assert len(enumerate_by_norm(L, -2 * r)) == t.coeff(r)
        assert [int(c) for c in t.coeffs] == oracles.brute_theta(L.gram, THETA_RANGE, 12)


@criterion(7, "Mordell-Weil powers have self-intersection -3; projection norm -2(sz+3) matches Gram projection")
def test_ac07_mw_powers_and_projection():
    for sz in range(0, 11):
        for k in range(-5, 6):
            assert self_intersection(mw_power_class(k, sz)) == -3
        assert projection_norm(sz) == -2 * (sz + 3)
        assert projection_norm_direct(sz) == projection_norm(sz)


@criterion(8, "no section pushes forward to l+f or l+2f; W_{n,1}, W_{n,2} contribute 0")
def test_ac08_emptiness():
    fibers = {pushforward_to_X(sz)[1] for sz in range(0, 1001)}
    assert 1 not in fibers and 2 not in fibers
    assert min(fibers) == 3
    for n in range(1, PREC + 1):
        assert component_contribution(n, 1, PREC) == 0
        if n >= 2:
            assert component_contribution(n, 2, PREC) == 0


@criterion(9, "eta^-36 matches repeated convolution to q^50; times its inverse is 1")
def test_ac09_bryan_leung_kernel():
    bl = qs_pow(euler_product(THETA_RANGE), -36)
    assert [int(c) for c in bl.coeffs] == oracles.eta_power_neg_list(36, THETA_RANGE)
    assert bl == bl_correction(THETA_RANGE)
    assert qs_mul(bl, qs_pow(bl, -1)) == QSeries.constant(1, THETA_RANGE)


@criterion(10, "dim M16 = 2; full-rank bases for weights <= 24; E4^3 - E6^2 = 1728 q + ...")
def test_ac10_modular_sanity():
    from sectioncounts import linalg

    assert len(mform_basis(16, PREC)) == 2
    for w in range(0, 26, 2):
        basis = mform_basis(w, 24)
        if basis.monomials:
            assert linalg.rank(basis.coefficient_matrix()) == len(basis)
    d = eisenstein(4, 3) ** 3 - eisenstein(6, 3) ** 2
    assert d.coeff(0) == 0 and d.coeff(1) == 1728


def _cli(*argv):
    return subprocess.run(
        [sys.executable, "-m", "sectioncounts", *argv], capture_output=True, check=True
    ).stdout


@criterion(11, "CLI output byte-identical across runs and thread counts; JSON round-trips")
def test_ac11_cli_determinism():
    commands = [
        ("series", "h", "--format", "json"),
        ("series", "theta-a2", "--format", "json"),
        ("lattice", "enum", "a2", "--norm", "-98", "--format", "json"),
        ("lattice", "theta", "a1a1", "--prec", "50"),
    ]
    for argv in commands:
        first = _cli(*argv)
        assert _cli(*argv) == first
        assert _cli(*argv, "--threads", "4") == first
        if "json" in argv:
            doc = json.loads(first)
            env = cli.OutputEnvelope(doc["command"], doc["parameters"], doc["result"], doc["provenance"])
            assert env.to_json().encode() == first


@criterion(12, "full precision-64 build runs in under 10 seconds")
def test_ac12_runtime():
    modforms.mform_basis.cache_clear()
    modforms.eisenstein.cache_clear()
    modforms.euler_product.cache_clear()
    t0 = time.perf_counter()
    build_ledger(PREC)
    phi_series(PREC)
    assert time.perf_counter() - t0 < 10.0
