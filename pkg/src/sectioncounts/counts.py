"""
Section-curve counts ``h(n)`` and the genus-zero Gromov-Witten series.

``h(n)`` is computed two ways:

* directly, as the weight-16 Eisenstein/theta combination
  ``31/48 E4^4 + 113/48 E4 E6^2 + 93582 T1 - 46008 T1^2 - 324 T2``
  (``T1``, ``T2`` the A1 and A2 theta series), valid for ``n >= 1``;
* from the Noether-Lefschetz series ``phi`` by subtracting the contributions
  of singular surfaces,

      h = phi + (|phi_1|/2) T1 - (n*/4) (T1 - 1)^2 - (c*/6) (T2 - 3 T1),

  where every constant is pulled from the geometry and lattice modules.

The two must agree in every positive degree.  ``h(0) = -3`` is fixed
separately since neither formula applies there.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import geometry, lattice, modforms
from .errors import ConsistencyError, OutOfRange
from .qseries import DEFAULT_PREC, QSeries, as_integers

log = logging.getLogger(__name__)

__all__ = [
    "H0",
    "PHI_WEIGHT",
    "THEOREM1_COEFFS",
    "Anchors",
    "Conjecture",
    "CountLedger",
    "anchors",
    "phi_fit",
    "phi_series",
    "h_series_theorem1",
    "h_series_correction",
    "bl_correction",
    "component_contribution",
    "conjectural_c0",
    "gw_series",
    "build_ledger",
]

H0 = -3
PHI_WEIGHT = 16

# Closed form for n >= 1, exactly as stated: E4^4, E4 E6^2, T1, T1^2, T2
THEOREM1_COEFFS = (Fraction(31, 48), Fraction(113, 48), 93582, -46008, -324)


@dataclass(frozen=True)
class Anchors:
    """Geometric constants feeding ``phi`` and the correction terms."""

    phi0: int
    phi2: int
    dual_cusps: int
    mult_a1: int
    mult_a1a1: int
    mult_a2: int
    bl_exponent: int
    provenance: tuple[str, ...] = field(default=(), compare=False)

    def as_dict(self) -> dict:
        return {
            "phi0": self.phi0,
            "phi2": self.phi2,
            "dual_cusps": self.dual_cusps,
            "mult_a1": self.mult_a1,
            "mult_a1a1": self.mult_a1a1,
            "mult_a2": self.mult_a2,
            "bl_exponent": self.bl_exponent,
        }


def _root_count(position: geometry.LinePosition) -> int:
    lat = geometry.classify_line(position).a0_lattice
    return len(lattice.enumerate_by_norm(lat, -2))


def anchors() -> Anchors:
    dual = geometry.pluecker_dual(geometry.discriminant_invariants())
    P = geometry.LinePosition
    return Anchors(
        phi0=geometry.hodge_constants().euler_integral,
        phi2=dual.nodes,
        dual_cusps=dual.cusps,
        mult_a1=_root_count(P.GENERIC_TANGENT),
        mult_a1a1=_root_count(P.BITANGENT),
        mult_a2=_root_count(P.TANGENT_AT_FLEX),
        bl_exponent=-geometry.e3_surface_invariants().nodal_fibers,
        provenance=(
            "hodge_constants.euler_integral",
            "pluecker_dual(discriminant_invariants).nodes",
            "pluecker_dual(discriminant_invariants).cusps",
            "roots(classify_line(generic_tangent).a0_lattice)",
            "roots(classify_line(bitangent).a0_lattice)",
            "roots(classify_line(tangent_at_flex).a0_lattice)",
            "e3_surface_invariants.nodal_fibers",
        ),
    )


def phi_fit(prec: int = DEFAULT_PREC, anch: Anchors | None = None) -> modforms.FitResult:
    anch = anch or anchors()
    return modforms.mform_fit(PHI_WEIGHT, [(0, anch.phi0), (2, anch.phi2)], max(prec, 2))


def phi_series(prec: int = DEFAULT_PREC) -> QSeries:
    """The weight-16 form with ``[phi]_0`` = Euler integral and ``[phi]_2`` = dual nodes."""
    s = phi_fit(prec).series
    return s.truncate(prec) if prec < s.prec else s


def _thetas(prec: int) -> tuple[QSeries, QSeries]:
    return (
        lattice.theta_series(lattice.root_lattice_A(1), prec),
        lattice.theta_series(lattice.root_lattice_A(2), prec),
    )


def _with_constant(s: QSeries, c) -> QSeries:
    return QSeries((c,) + s.coeffs[1:], s.prec)


def _theorem1_raw(prec: int) -> QSeries:
    a, b, t1c, t11c, t2c = THEOREM1_COEFFS
    e4, e6 = modforms.eisenstein(4, prec), modforms.eisenstein(6, prec)
    t1, t2 = _thetas(prec)
    return (e4**4).scale(a) + (e4 * e6**2).scale(b) + t1.scale(t1c) + (t1 * t1).scale(t11c) + t2.scale(t2c)


def h_series_theorem1(prec: int = DEFAULT_PREC) -> QSeries:
    return _with_constant(_theorem1_raw(prec), H0)


def _correction_raw(prec: int, anch: Anchors | None = None) -> QSeries:
    anch = anch or anchors()
    fit = phi_fit(prec, anch)
    phi = fit.series.truncate(prec) if prec < fit.series.prec else fit.series
    phi1 = fit.series.coeff(1)
    t1, t2 = _thetas(prec)
    return (
        phi
        + t1.scale(-phi1 / anch.mult_a1)
        - ((t1 - 1) * (t1 - 1)).scale(Fraction(anch.phi2, anch.mult_a1a1))
        - (t2 - t1.scale(3)).scale(Fraction(anch.dual_cusps, anch.mult_a2))
    )


def h_series_correction(prec: int = DEFAULT_PREC) -> QSeries:
    return _with_constant(_correction_raw(prec), H0)


def bl_correction(prec: int = DEFAULT_PREC) -> QSeries:
    """Generating series of fiber-component contributions, ``prod (1 - q^m)^-36``."""
    return modforms.euler_product(prec) ** _bl_exponent()


def _bl_exponent() -> int:
    return -geometry.e3_surface_invariants().nodal_fibers


def _contribution(h: QSeries, bl: QSeries, n: int, i: int) -> Fraction:
    if i < 1 or i > n:
        raise OutOfRange(f"component index i={i} must satisfy 0 < i <= n={n}")
    return h.coeff(i) * bl.coeff(n - i)


def component_contribution(n: int, i: int, prec: int | None = None) -> Fraction:
    """Contribution ``h(i) [eta^-36]_{n-i}`` of maps with a section of class ``l + i f``."""
    if i < 1 or i > n:
        raise OutOfRange(f"component index i={i} must satisfy 0 < i <= n={n}")
    prec = max(n, prec or 0)
    return _contribution(h_series_theorem1(prec), bl_correction(prec), n, i)


@dataclass(frozen=True)
class Conjecture:
    """Reading of the conjectured ``c_{n,0}``; both choices are explicit.

    ``theta`` selects which lattice theta series fills the undefined
    ``Theta``; ``eta_power`` is the power of the Euler product in the second
    factor (``1`` as printed, ``-36`` for the Bryan-Leung reading).
    """

    theta: str
    eta_power: int

    def __post_init__(self):
        if self.theta not in ("a1", "a2"):
            raise ValueError(f"theta must be 'a1' or 'a2', got {self.theta!r}")
        if self.eta_power not in (1, -36):
            raise ValueError(f"eta_power must be 1 or -36, got {self.eta_power}")

    @property
    def label(self) -> str:
        return f"EXPERIMENTAL conjecture(theta={self.theta}, eta_power={self.eta_power})"


CMode = Union[str, Conjecture]


def conjectural_c0(prec: int, interp: Conjecture) -> QSeries:
    bl = bl_correction(prec)
    theta = lattice.theta_series(lattice.named_lattice(interp.theta), prec)
    eta = modforms.euler_product(prec) ** interp.eta_power
    out = []
    for n in range(prec + 1):
        s = 3 * bl.coeff(n)
        s += sum((theta.coeff(i) * eta.coeff(n - i) for i in range(1, n + 1)), Fraction(0))
        out.append(s)
    return QSeries(out, prec)


def _gw_from(h: QSeries, bl: QSeries, c0: QSeries | None) -> QSeries:
    prec = min(h.prec, bl.prec)
    out = []
    for n in range(prec + 1):
        s = sum((_contribution(h, bl, n, i) for i in range(1, n + 1)), Fraction(0))
        if c0 is not None:
            s += c0.coeff(n)
        out.append(s)
    return QSeries(out, prec)


def gw_series(prec: int = DEFAULT_PREC, c_mode: CMode = "zero") -> QSeries:
    """``N_n = c_{n,0} + sum_{i=1}^n h(i) [eta^-36]_{n-i}``.

    With ``c_mode="zero"`` the ``c_{n,0}`` term is dropped, leaving only the
    section-component part.  Pass a :class:`Conjecture` to include the
    conjectured value; such output is experimental.
    """
    c0 = _c0_for(prec, c_mode)
    return _gw_from(h_series_theorem1(prec), bl_correction(prec), c0)


def _c0_for(prec: int, c_mode: CMode) -> QSeries | None:
    if isinstance(c_mode, Conjecture):
        return conjectural_c0(prec, c_mode)
    if c_mode == "zero":
        return None
    raise ValueError(f"c_mode must be 'zero' or a Conjecture, got {c_mode!r}")


@dataclass(frozen=True)
class CountLedger:
    prec: int
    phi: QSeries
    phi_basis_coefficients: tuple[Fraction, ...]
    h_theorem1: QSeries
    h_correction: QSeries
    bl: QSeries
    gw: QSeries
    anchors: Anchors
    raw_constant_terms: dict
    c_mode_label: str

    @property
    def h(self) -> QSeries:
        return self.h_theorem1

    @property
    def experimental(self) -> bool:
        return self.c_mode_label != "zero"


def build_ledger(prec: int = DEFAULT_PREC, c_mode: CMode = "zero") -> CountLedger:
    """Assemble everything and cross-check the two ``h`` formulas.

    Raises :class:`ConsistencyError` if they disagree in some positive degree
    or if ``h`` fails to be integral.
    """
    anch = anchors()
    fit = phi_fit(prec, anch)
    raw1 = _theorem1_raw(prec)
    raw2 = _correction_raw(prec, anch)
    for n in range(1, prec + 1):
        if raw1.coeff(n) != raw2.coeff(n):
            raise ConsistencyError(f"h formulas disagree at q^{n}: {raw1.coeff(n)} != {raw2.coeff(n)}")
    h1, h2 = _with_constant(raw1, H0), _with_constant(raw2, H0)
    try:
        as_integers(h1.coeffs, "h")
    except ArithmeticError as exc:
        raise ConsistencyError(str(exc)) from exc
    bl = bl_correction(prec)
    gw = _gw_from(h1, bl, _c0_for(prec, c_mode))
    label = c_mode.label if isinstance(c_mode, Conjecture) else "zero"
    log.debug("ledger built at prec %d, c_mode %s", prec, label)
    phi = fit.series.truncate(prec) if prec < fit.series.prec else fit.series
    return CountLedger(
        prec=prec,
        phi=phi,
        phi_basis_coefficients=fit.coefficients,
        h_theorem1=h1,
        h_correction=h2,
        bl=bl,
        gw=gw,
        anchors=anch,
        raw_constant_terms={"theorem1": raw1.coeff(0), "correction": raw2.coeff(0)},
        c_mode_label=label,
    )
