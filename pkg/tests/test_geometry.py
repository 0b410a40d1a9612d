import pytest
from hypothesis import given
from hypothesis import strategies as st

from sectioncounts.errors import NegativeInvariant
from sectioncounts.geometry import (
    EULER_CHARACTERISTIC_X,
    LinePosition,
    PlaneCurveInvariants,
    classify_line,
    discriminant_invariants,
    e3_surface_invariants,
    hodge_constants,
    pluecker_dual,
    pluecker_nodes_printed,
)
from sectioncounts.lattice import enumerate_by_norm

DISC = PlaneCurveInvariants(36, 0, 216)


def test_discriminant():
    assert discriminant_invariants() == DISC
    assert DISC.cusps == 12 * 18


def test_pluecker_discriminant():
    assert pluecker_dual(DISC).as_tuple() == (612, 184032, 1944)


@pytest.mark.parametrize(
    "curve,dual",
    [
        ((2, 0, 0), (2, 0, 0)),
        ((3, 0, 0), (6, 0, 9)),
        ((3, 1, 0), (4, 0, 3)),
        ((3, 0, 1), (3, 0, 1)),
        ((4, 0, 0), (12, 28, 24)),
    ],
)
def test_pluecker_classical(curve, dual):
    # smooth cubic, nodal/cuspidal cubic and smooth quartic from the classical tables
    assert pluecker_dual(PlaneCurveInvariants(*curve)).as_tuple() == dual


@pytest.mark.parametrize("curve", [(36, 0, 216), (3, 1, 0), (3, 0, 1), (4, 0, 0), (2, 0, 0)])
def test_biduality(curve):
    c = PlaneCurveInvariants(*curve)
    assert pluecker_dual(pluecker_dual(c)) == c


def test_printed_node_formula_has_opposite_sign():
    assert pluecker_nodes_printed(DISC) == -184032


def test_pluecker_errors():
    with pytest.raises(ValueError):
        pluecker_dual(PlaneCurveInvariants(1, 0, 0))
    with pytest.raises(NegativeInvariant):
        pluecker_dual(PlaneCurveInvariants(3, 3, 0))
    with pytest.raises(NegativeInvariant):
        PlaneCurveInvariants(3, -1, 0)


def test_dual_node_count_always_integral():
    # c* = d(d-2) mod 2 = d mod 2, so d*(d*-1) - 3c* - d is always even and
    # NonIntegralNodes can only guard against a broken formula
    for d in range(2, 30):
        for n in range(0, 6):
            for c in range(0, 6):
                try:
                    pluecker_dual(PlaneCurveInvariants(d, n, c))
                except NegativeInvariant:
                    pass


def test_hodge_constants():
    h = hodge_constants()
    assert (h.c1_multiple, h.c2_multiple, h.euler_integral) == (3, 3, 3)


def test_e3_invariants():
    e = e3_surface_invariants()
    assert e.nodal_fibers == 36
    assert (e.h01, e.h02, e.h11, e.canonical_degree) == (0, 2, 30, 1)
    # Noether: 12 chi(O) = K^2 + e, with K^2 = 0 and chi(O) = 1 - h01 + h02
    assert 12 * (1 - e.h01 + e.h02) == e.nodal_fibers
    assert EULER_CHARACTERISTIC_X == -540


def test_classification_examples():
    b = classify_line("bitangent")
    assert b.singularities == ("A1", "A1")
    assert [k.value for k in b.kodaira] == ["I2", "I2"]
    assert b.a0_lattice.gram == ((-2, 0), (0, -2))
    f = classify_line(LinePosition.TANGENT_AT_FLEX)
    assert f.singularities == ("A2",)
    assert [k.value for k in f.kodaira] == ["I3"]
    t = classify_line("transverse")
    assert t.smooth and t.a0_lattice is None
    assert [k.value for k in t.kodaira] == ["I1"]
    assert [k.value for k in classify_line("generic_tangent").kodaira] == ["I2"]
    assert [k.value for k in classify_line("flex_tangent").kodaira] == ["III"]
    assert [k.value for k in classify_line("cusp_generic_direction").kodaira] == ["II"]


@pytest.mark.parametrize("pos", list(LinePosition))
def test_classification_total_and_consistent(pos):
    fc = classify_line(pos)
    rank = {"A1": 1, "A2": 2}
    assert sum(rank[s] for s in fc.singularities) == (0 if fc.a0_lattice is None else fc.a0_lattice.rank)
    if fc.a0_lattice is not None:
        # roots of the vertical lattice = (-2)-classes: 2 per A1, 6 per A2
        roots = len(enumerate_by_norm(fc.a0_lattice, -2))
        assert roots == sum({"A1": 2, "A2": 6}[s] for s in fc.singularities)


def test_classify_unknown():
    with pytest.raises(ValueError):
        classify_line("tritangent")


@given(st.integers(2, 60), st.integers(0, 200), st.integers(0, 200))
def test_biduality_property(d, n, c):
    try:
        dual = pluecker_dual(PlaneCurveInvariants(d, n, c))
        back = pluecker_dual(dual)
    except NegativeInvariant:
        return
    assert back.as_tuple() == (d, n, c)
