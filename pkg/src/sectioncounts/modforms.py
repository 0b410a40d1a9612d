"""Level-one modular forms as q-expansions.

Eisenstein series use the normalization with constant term 1,

    E4 = 1 + 240 sum sigma_3(n) q^n,    E6 = 1 - 504 sum sigma_5(n) q^n,

and ``euler_product`` is ``prod_{m>=1} (1 - q^m)`` with no ``q^(1/24)``
prefactor.  Weight-``k`` forms are spanned by the monomials ``E4^a E6^b``
with ``4a + 6b = k``, listed by decreasing ``a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, UnsupportedWeight
from .qseries import DEFAULT_PREC, QSeries

__all__ = [
    "MFormBasis",
    "FitResult",
    "sigma_pow",
    "eisenstein",
    "euler_product",
    "euler_product_direct",
    "mform_basis",
    "mform_fit",
]

_EISENSTEIN_FACTOR = {4: 240, 6: -504}


def sigma_pow(n: int, k: int) -> int:
    """Sum of ``d**k`` over the positive divisors ``d`` of ``n``."""
    if n < 1:
        raise ValueError(f"sigma_pow needs n >= 1, got {n}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


@lru_cache(maxsize=None)
def eisenstein(weight: int, prec: int = DEFAULT_PREC) -> QSeries:
    if weight not in _EISENSTEIN_FACTOR:
        raise UnsupportedWeight(f"only weights 4 and 6 are supported, got {weight}")
    factor = _EISENSTEIN_FACTOR[weight]
    k = weight - 1
    return QSeries([1] + [factor * sigma_pow(n, k) for n in range(1, prec + 1)], prec)


def _pentagonal_terms(prec: int):
    # Euler's theorem: prod(1-q^m) = sum_j (-1)^j q^{j(3j-1)/2}, j over all integers
    yield 0, 1
    j = 1
    while True:
        e1 = j * (3 * j - 1) // 2
        if e1 > prec:
            break
        sign = -1 if j % 2 else 1
        yield e1, sign
        e2 = j * (3 * j + 1) // 2
        if e2 <= prec:
            yield e2, sign
        j += 1


@lru_cache(maxsize=None)
def euler_product(prec: int = DEFAULT_PREC) -> QSeries:
    """``prod_{m>=1} (1 - q^m)`` via the pentagonal number expansion."""
    return QSeries.from_sparse(dict(_pentagonal_terms(prec)), prec)


def euler_product_direct(prec: int = DEFAULT_PREC) -> QSeries:
    """Same series as :func:`euler_product`, by multiplying out the factors."""
    cs = [0] * (prec + 1)
    cs[0] = 1
    for m in range(1, prec + 1):
        for n in range(prec, m - 1, -1):
            cs[n] -= cs[n - m]
    return QSeries(cs, prec)


@dataclass(frozen=True)
class MFormBasis:
    weight: int
    monomials: tuple[tuple[int, int], ...]
    expansions: tuple[QSeries, ...]

    def __len__(self):
        return len(self.monomials)

    def coefficient_matrix(self, exponents: Sequence[int] | None = None) -> list[list[Fraction]]:
        """Rows indexed by exponent, columns by monomial."""
        if exponents is None:
            exponents = range(self.expansions[0].prec + 1) if self.expansions else ()
        return [[s.coeff(n) for s in self.expansions] for n in exponents]


@dataclass(frozen=True)
class FitResult:
    weight: int
    monomials: tuple[tuple[int, int], ...]
    coefficients: tuple[Fraction, ...]
    series: QSeries


def _monomials(weight: int) -> list[tuple[int, int]]:
    # descending power of E4, so weight 16 gives (E4^4, E4 E6^2)
    return [(a, (weight - 4 * a) // 6) for a in range(weight // 4, -1, -1) if (weight - 4 * a) % 6 == 0]


@lru_cache(maxsize=None)
def mform_basis(weight: int, prec: int = DEFAULT_PREC) -> MFormBasis:
    if weight < 0 or weight % 2:
        raise UnsupportedWeight(f"weight must be even and nonnegative, got {weight}")
    mons = _monomials(weight)
    e4, e6 = eisenstein(4, prec), eisenstein(6, prec)
    expansions = tuple((e4**a) * (e6**b) for a, b in mons)
    return MFormBasis(weight, tuple(mons), expansions)


def mform_fit(weight: int, constraints: Sequence[tuple[int, object]], prec: int = DEFAULT_PREC) -> FitResult:
    """Find the weight-``weight`` form with prescribed coefficients.

    ``constraints`` is a sequence of ``(exponent, value)`` pairs, one per basis
    monomial.  The linear system is solved exactly; a singular system raises
    :class:`SingularSystem`.
    """
    basis = mform_basis(weight, prec)
    if len(constraints) != len(basis):
        raise DimensionMismatch(
            f"weight {weight} has {len(basis)} basis monomials but {len(constraints)} constraints were given"
        )
    exps = [n for n, _ in constraints]
    rhs = [Fraction(v) for _, v in constraints]
    coeffs = linalg.solve(basis.coefficient_matrix(exps), rhs)
    series = QSeries.constant(0, prec)
    for c, s in zip(coeffs, basis.expansions):
        series = series + s.scale(c)
    return FitResult(weight, basis.monomials, tuple(coeffs), series)
