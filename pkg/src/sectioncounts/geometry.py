"""
Plane-curve and fibration bookkeeping for the Weierstrass threefold over P^2.

The discriminant ``4a^3 + 27b^2`` of forms of degrees 12 and 18 is a plane
curve of degree 36 whose only singularities are cusps, one at each of the
``12 * 18`` points where ``a = b = 0``.  The Plücker formulas then give the
invariants of its dual curve, whose nodes are the bitangent lines and whose
cusps are the lines tangent at a flex.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NegativeInvariant, NonIntegralNodes
from .lattice import GramLattice, direct_sum, root_lattice_A

__all__ = [
    "PlaneCurveInvariants",
    "LinePosition",
    "Kodaira",
    "FiberClassification",
    "HodgeConstants",
    "E3SurfaceInvariants",
    "WEIERSTRASS_DEGREES",
    "discriminant_invariants",
    "pluecker_dual",
    "pluecker_nodes_printed",
    "hodge_constants",
    "classify_line",
    "e3_surface_invariants",
    "EULER_CHARACTERISTIC_X",
]

# degrees of the coefficient forms a, b in y^2 = x^3 + a x + b
WEIERSTRASS_DEGREES = (12, 18)

# topological Euler characteristic of the threefold; recorded, not derived
EULER_CHARACTERISTIC_X = -540


@dataclass(frozen=True)
class PlaneCurveInvariants:
    degree: int
    nodes: int
    cusps: int

    def __post_init__(self):
        if self.degree < 1 or self.nodes < 0 or self.cusps < 0:
            raise NegativeInvariant(f"invalid plane curve data {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.degree, self.nodes, self.cusps)


def discriminant_invariants() -> PlaneCurveInvariants:
    a_deg, b_deg = WEIERSTRASS_DEGREES
    degree = 3 * a_deg
    if degree != 2 * b_deg:
        raise ArithmeticError("4a^3 and 27b^2 must have equal degree")
    # a = b = 0 meet transversely in a_deg * b_deg points, each a cusp of the discriminant
    cusps = a_deg * b_deg
    return PlaneCurveInvariants(degree, 0, cusps)


def pluecker_dual(c: PlaneCurveInvariants) -> PlaneCurveInvariants:
    """Degree, nodes and cusps of the dual curve.

    ``d* = d(d-1) - 2n - 3c`` and ``c* = 3d(d-2) - 6n - 8c``; the node count
    comes from applying the degree formula to the dual curve,
    ``d = d*(d*-1) - 2n* - 3c*``, and solving for ``n*``.
    """
    d, n, k = c.degree, c.nodes, c.cusps
    if d < 2:
        raise ValueError(f"dual curve needs degree >= 2, got {d}")
    d_dual = d * (d - 1) - 2 * n - 3 * k
    c_dual = 3 * d * (d - 2) - 6 * n - 8 * k
    twice_n = d_dual * (d_dual - 1) - 3 * c_dual - d
    if twice_n % 2:
        raise NonIntegralNodes(f"dual node count {twice_n}/2 is not an integer for {c.as_tuple()}")
    n_dual = twice_n // 2
    if d_dual <= 0 or c_dual < 0 or n_dual < 0:
        raise NegativeInvariant(f"dual invariants ({d_dual}, {n_dual}, {c_dual}) are not realizable")
    return PlaneCurveInvariants(d_dual, n_dual, c_dual)


def pluecker_nodes_printed(c: PlaneCurveInvariants) -> int:
    """``(d - d*(d*-1) + 3c*) / 2``, the opposite-sign reading of the node formula.

    Kept for comparison only; it is the negative of ``pluecker_dual(c).nodes``.
    """
    d = c.degree
    d_dual = d * (d - 1) - 2 * c.nodes - 3 * c.cusps
    c_dual = 3 * d * (d - 2) - 6 * c.nodes - 8 * c.cusps
    return (d - d_dual * (d_dual - 1) + 3 * c_dual) // 2


@dataclass(frozen=True)
class HodgeConstants:
    c1_multiple: int
    c2_multiple: int
    euler_integral: int


def hodge_constants() -> HodgeConstants:
    """Chern classes of the Hodge bundle over the dual plane, as multiples of ``h``.

    The bundle is ``O(1)^3`` minus a trivial summand in K-theory, so
    ``c(H) = (1+h)^3 = 1 + 3h + 3h^2``; integrating ``c_2`` against
    ``h^2 = [pt]`` gives the Euler integral.
    """
    c1, c2 = math.comb(3, 1), math.comb(3, 2)
    return HodgeConstants(c1_multiple=c1, c2_multiple=c2, euler_integral=c2)


class LinePosition(str, enum.Enum):
    GENERIC_TANGENT = "generic_tangent"
    FLEX_TANGENT = "flex_tangent"
    BITANGENT = "bitangent"
    TANGENT_AT_FLEX = "tangent_at_flex"
    CUSP_SPECIAL_DIRECTION = "cusp_special_direction"
    CUSP_GENERIC_DIRECTION = "cusp_generic_direction"
    TRANSVERSE = "transverse"


class Kodaira(str, enum.Enum):
    I0 = "I0"
    I1 = "I1"
    I2 = "I2"
    II = "II"
    III = "III"
    I3 = "I3"
    NONE = "none"


@dataclass(frozen=True)
class FiberClassification:
    line_position: LinePosition
    singularities: tuple[str, ...]
    kodaira: tuple[Kodaira, ...]
    a0_lattice: GramLattice | None

    def __post_init__(self):
        expected = sum({"A1": 1, "A2": 2}[s] for s in self.singularities)
        got = 0 if self.a0_lattice is None else self.a0_lattice.rank
        if expected != got:
            raise ValueError(f"singularities {self.singularities} do not match lattice rank {got}")

    @property
    def smooth(self) -> bool:
        return not self.singularities


def _a1():
    return root_lattice_A(1)


def _table():
    P = LinePosition
    return {
        P.GENERIC_TANGENT: (("A1",), (Kodaira.I2,), _a1()),
        # line through a cusp of the discriminant along its tangent cone:
        # a flex of the dual curve
        P.FLEX_TANGENT: (("A1",), (Kodaira.III,), _a1()),
        P.CUSP_SPECIAL_DIRECTION: (("A1",), (Kodaira.III,), _a1()),
        P.BITANGENT: (("A1", "A1"), (Kodaira.I2, Kodaira.I2), direct_sum(_a1(), _a1())),
        P.TANGENT_AT_FLEX: (("A2",), (Kodaira.I3,), root_lattice_A(2)),
        P.CUSP_GENERIC_DIRECTION: ((), (Kodaira.II,), None),
        P.TRANSVERSE: ((), (Kodaira.I1,), None),
    }


def classify_line(position: LinePosition | str) -> FiberClassification:
    """Singularities, resolved Kodaira fiber types and vertical lattice for a line."""
    pos = LinePosition(position)
    sing, kod, lat = _table()[pos]
    return FiberClassification(pos, sing, kod, lat)


@dataclass(frozen=True)
class E3SurfaceInvariants:
    nodal_fibers: int
    h01: int
    h02: int
    h11: int
    canonical_degree: int


def e3_surface_invariants() -> E3SurfaceInvariants:
    """Invariants of the elliptic surface over a line transverse to the discriminant."""
    # a general line meets the discriminant once per unit of degree
    nodal = discriminant_invariants().degree
    return E3SurfaceInvariants(nodal_fibers=nodal, h01=0, h02=2, h11=30, canonical_degree=1)
