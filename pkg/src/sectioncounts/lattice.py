"""
Integral lattices given by Gram matrices, exhaustive short-vector search,
theta series, and divisor-class arithmetic on elliptic surfaces.

Theta series are indexed by half the absolute norm, so for the root lattice
``A1 = [[-2]]`` the vector ``k`` lands at ``q^(k^2)``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Iterable, Sequence

from . import linalg
from .errors import IndefiniteLattice, OddLattice, UnsupportedRank
from .qseries import DEFAULT_PREC, QSeries

__all__ = [
    "GramLattice",
    "LatticeVec",
    "SurfaceClass",
    "root_lattice_A",
    "direct_sum",
    "named_lattice",
    "LATTICE_NAMES",
    "polarization_lattice",
    "exceptional_extension",
    "section_extension",
    "enumerate_by_norm",
    "theta_series",
    "constrained_count",
    "CONSTRAINED_KINDS",
    "mw_power_class",
    "self_intersection",
    "projection_norm",
    "projection_norm_direct",
    "pushforward_to_X",
]


class LatticeVec(tuple):
    """Integer coordinate vector; compares and sorts like a tuple."""

    def __new__(cls, coords: Iterable[int]):
        return super().__new__(cls, (int(c) for c in coords))

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self):
        return f"LatticeVec({list(self)})"


@dataclass(frozen=True)
class GramLattice:
    gram: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)
    negative_definite: bool = field(init=False, compare=False)

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        n = len(g)
        if n == 0 or any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"Gram matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "gram", g)
        # negative definite iff leading minors alternate: sign((-1)^k det_k) > 0
        minors = linalg.leading_minors(g)
        neg = all((-1) ** (k + 1) * m > 0 for k, m in enumerate(minors))
        object.__setattr__(self, "negative_definite", neg)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def pair(self, u: Sequence, v: Sequence):
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def norm(self, v: Sequence):
        return self.pair(v, v)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def coordinate_bounds(self, max_abs_norm: int) -> list[int]:
        """Per-coordinate bound ``B_i`` with ``|x_i| <= B_i`` whenever ``|norm(x)| <= max_abs_norm``.

        For a definite form ``Q = -gram`` the extreme of ``x_i`` on the
        ellipsoid ``x^T Q x <= N`` is ``sqrt(N * (Q^-1)_ii)``.
        """
        self._require_definite()
        qinv = linalg.inverse([[-x for x in row] for row in self.gram])
        out = []
        for i in range(self.rank):
            t = Fraction(max_abs_norm) * qinv[i][i]
            out.append(isqrt(t.numerator // t.denominator))
        return out

    def _require_definite(self):
        if not self.negative_definite:
            raise IndefiniteLattice(f"lattice {self.name or self.gram} is not negative definite")


def root_lattice_A(n: int) -> GramLattice:
    if n == 1:
        return GramLattice(((-2,),), name="A1")
    if n == 2:
        return GramLattice(((-2, 1), (1, -2)), name="A2")
    raise UnsupportedRank(f"only A1 and A2 are supported, got A{n}")


def direct_sum(*lattices: GramLattice) -> GramLattice:
    n = sum(L.rank for L in lattices)
    g = [[0] * n for _ in range(n)]
    off = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                g[off + i][off + j] = L.gram[i][j]
        off += L.rank
    name = "+".join(L.name for L in lattices) if all(L.name for L in lattices) else ""
    return GramLattice(tuple(map(tuple, g)), name=name)


LATTICE_NAMES = ("a1", "a2", "a1a1")


def named_lattice(name: str) -> GramLattice:
    """Look up ``a1``, ``a2`` or ``a1a1`` (the orthogonal sum of two A1)."""
    key = name.lower().replace("+", "").replace("_", "")
    if key == "a1":
        return root_lattice_A(1)
    if key == "a2":
        return root_lattice_A(2)
    if key == "a1a1":
        return direct_sum(root_lattice_A(1), root_lattice_A(1))
    raise UnsupportedRank(f"unknown lattice {name!r}; expected one of {', '.join(LATTICE_NAMES)}")


def polarization_lattice() -> GramLattice:
    """The sublattice spanned by fiber ``f`` and zero section ``z``."""
    return GramLattice(((0, 1), (1, -3)), name="<f,z>")


def exceptional_extension() -> GramLattice:
    """``<f, z, e>`` with ``e`` an exceptional (-2)-curve."""
    return GramLattice(((0, 1, 0), (1, -3, 0), (0, 0, -2)), name="<f,z,e>")


def section_extension(sz: int) -> GramLattice:
    """``<f, z, sigma>`` for a section with ``sigma . z = sz``."""
    return GramLattice(((0, 1, 1), (1, -3, sz), (1, sz, -3)), name=f"<f,z,s|sz={sz}>")


def _slab(L: GramLattice, first: int, ranges: list[range], max_abs: int) -> list[tuple[LatticeVec, int]]:
    out = []
    for rest in product(*ranges):
        v = (first, *rest)
        nv = L.norm(v)
        if -nv <= max_abs:
            out.append((LatticeVec(v), nv))
    return out


def _vectors_within(L: GramLattice, max_abs_norm: int, workers: int = 1) -> list[tuple[LatticeVec, int]]:
    """All ``(v, norm(v))`` with ``|norm(v)| <= max_abs_norm``, lexicographically sorted."""
    bounds = L.coordinate_bounds(max_abs_norm)
    ranges = [range(-b, b + 1) for b in bounds]
    firsts, rest = ranges[0], ranges[1:]
    if workers <= 1:
        slabs = [_slab(L, a, rest, max_abs_norm) for a in firsts]
    else:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            slabs = list(ex.map(lambda a: _slab(L, a, rest, max_abs_norm), firsts))
    return [item for slab in slabs for item in slab]


def enumerate_by_norm(L: GramLattice, norm_value: int, workers: int = 1) -> list[LatticeVec]:
    """Every vector of norm exactly ``norm_value``, in lexicographic order.

    ``workers > 1`` splits the search into slabs on the first coordinate; the
    result is identical to the serial one.
    """
    L._require_definite()
    if norm_value >= 0:
        raise ValueError(f"norm_value must be negative, got {norm_value}")
    return [v for v, nv in _vectors_within(L, -norm_value, workers) if nv == norm_value]


def theta_series(L: GramLattice, prec: int = DEFAULT_PREC, workers: int = 1) -> QSeries:
    """``sum_v q^(|norm(v)|/2)`` over all lattice vectors, to ``q^prec``."""
    L._require_definite()
    counts = [0] * (prec + 1)
    for v, nv in _vectors_within(L, 2 * prec, workers):
        if nv % 2:
            raise OddLattice(f"vector {list(v)} has odd norm {nv}")
        counts[-nv // 2] += 1
    return QSeries(counts, prec)


CONSTRAINED_KINDS = ("A1A1_both_nonzero", "A2_distinct_nonzero")


def constrained_count(kind: str, r: int) -> int:
    """Count the vectors entering the isolated node/cusp corrections.

    ``A1A1_both_nonzero``: pairs with ``a != 0, b != 0`` and ``a^2 + b^2 = r``.
    ``A2_distinct_nonzero``: pairs with ``a != 0, b != 0, a != b`` and
    ``a^2 - ab + b^2 = r``.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if kind == "A1A1_both_nonzero":
        m = isqrt(r)
        return sum(
            1
            for a in range(-m, m + 1)
            for b in range(-m, m + 1)
            if a and b and a * a + b * b == r
        )
    if kind == "A2_distinct_nonzero":
        # a^2 - ab + b^2 >= 3/4 max(a,b)^2
        m = isqrt(4 * r // 3) + 1
        return sum(
            1
            for a in range(-m, m + 1)
            for b in range(-m, m + 1)
            if a and b and a != b and a * a - a * b + b * b == r
        )
    raise ValueError(f"unknown kind {kind!r}; expected one of {CONSTRAINED_KINDS}")


@dataclass(frozen=True)
class SurfaceClass:
    """Divisor class ``s*sigma + z*zero_section + f*fiber`` with ``sigma . z = sz``.

    Intersection numbers: ``sigma^2 = z^2 = -3``, ``f^2 = 0``,
    ``f.sigma = f.z = 1``.
    """

    s_coef: int
    z_coef: int
    f_coef: int
    sz: int = 0

    def __post_init__(self):
        if self.sz < 0:
            raise ValueError(f"sigma.z must be nonnegative, got {self.sz}")

    @property
    def gram(self) -> GramLattice:
        # basis order (sigma, z, f)
        return GramLattice(((-3, self.sz, 1), (self.sz, -3, 1), (1, 1, 0)))

    def pair(self, other: "SurfaceClass") -> int:
        if other.sz != self.sz:
            raise ValueError("classes live on surfaces with different sigma.z")
        return self.gram.pair(self.coords, other.coords)

    @property
    def coords(self) -> tuple[int, int, int]:
        return (self.s_coef, self.z_coef, self.f_coef)

    def __str__(self):
        parts = []
        for c, sym in zip(self.coords, ("sigma", "z", "f")):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {mag}{sym}")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def mw_power_class(k: int, sz: int = 0) -> SurfaceClass:
    """Class of the ``k``-th Mordell-Weil multiple of a section ``sigma``."""
    return SurfaceClass(k, -(k - 1), (sz + 3) * k * (k - 1), sz)


def self_intersection(c: SurfaceClass) -> int:
    return c.pair(c)


def projection_norm(sz: int) -> int:
    """Norm of a section class projected orthogonally away from ``<f, z>``."""
    return -2 * (sz + 3)


def projection_norm_direct(sz: int) -> Fraction:
    """Same quantity as :func:`projection_norm`, by solving the projection system.

    Writes ``sigma = p + (alpha f + beta z)`` with ``p`` orthogonal to ``f``
    and ``z``, and returns ``p . p`` computed in ``<f, z, sigma>``.
    """
    pol = polarization_lattice().gram
    L = section_extension(sz)
    sigma = (0, 0, 1)
    rhs = [L.pair((1, 0, 0), sigma), L.pair((0, 1, 0), sigma)]
    alpha, beta = linalg.solve(pol, rhs)
    p = (-alpha, -beta, Fraction(1))
    for basis_vec in ((1, 0, 0), (0, 1, 0)):
        if L.pair(p, basis_vec) != 0:
            raise ArithmeticError("projection is not orthogonal to the polarization")
    return L.norm(p)


def pushforward_to_X(sz: int) -> tuple[int, int]:
    """``(line, fiber)`` coefficients of a section class pushed into the threefold."""
    if sz < 0:
        raise ValueError(f"sigma.z must be nonnegative, got {sz}")
    return (1, sz + 3)
