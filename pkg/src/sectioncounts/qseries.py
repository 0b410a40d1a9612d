"""
Truncated formal power series in ``q`` with exact rational coefficients.

A :class:`QSeries` of precision ``prec`` stores the coefficients of
``q**0 .. q**prec``; everything above ``prec`` is unknown, not zero.  Binary
operations between series of different precisions truncate to the smaller
one, so a result never claims more than its inputs know.

    >>> x = QSeries([0, 1], prec=4)
    >>> (1 - x).inverse().coeffs
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))

The module-level functions ``qs_add``, ``qs_mul``, ``qs_pow`` and
``qs_coeff`` are thin aliases for the operators.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import NonInvertible, OutOfRange

__all__ = [
    "DEFAULT_PREC",
    "QSeries",
    "qs_add",
    "qs_mul",
    "qs_pow",
    "qs_coeff",
    "as_integers",
]

DEFAULT_PREC = 64


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational coefficient required, got {type(x).__name__}")


class QSeries:
    """Immutable truncated power series ``sum_{n<=prec} c_n q^n``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = (), prec: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if prec is None:
            if not cs:
                raise ValueError("prec is required for an empty coefficient list")
            prec = len(cs) - 1
        if prec < 0:
            raise ValueError(f"precision must be nonnegative, got {prec}")
        if len(cs) > prec + 1:
            cs = cs[: prec + 1]
        else:
            cs.extend([Fraction(0)] * (prec + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "QSeries":
        obj = object.__new__(cls)
        obj._coeffs = coeffs
        return obj

    @classmethod
    def constant(cls, c, prec: int) -> "QSeries":
        return cls([c], prec)

    @classmethod
    def from_sparse(cls, terms: dict, prec: int) -> "QSeries":
        """Build from ``{exponent: coefficient}``; exponents above ``prec`` are dropped."""
        cs = [Fraction(0)] * (prec + 1)
        for n, c in terms.items():
            if 0 <= n <= prec:
                cs[n] += _frac(c)
        return cls._raw(tuple(cs))

    @property
    def prec(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeff(n)

    def __iter__(self):
        return iter(self._coeffs)

    def coeff(self, n: int) -> Fraction:
        if n < 0 or n > self.prec:
            raise OutOfRange(f"exponent {n} outside 0..{self.prec}")
        return self._coeffs[n]

    def truncate(self, prec: int) -> "QSeries":
        if prec > self.prec:
            raise OutOfRange(f"cannot raise precision {self.prec} to {prec}")
        return QSeries._raw(self._coeffs[: prec + 1])

    def _coerce(self, other) -> "QSeries | None":
        if isinstance(other, QSeries):
            return other
        try:
            return QSeries.constant(_frac(other), self.prec)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = min(self.prec, other.prec)
        return QSeries._raw(tuple(a + b for a, b in zip(self._coeffs[: p + 1], other._coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw(tuple(-a for a in self._coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QSeries":
        c = _frac(c)
        return QSeries._raw(tuple(c * a for a in self._coeffs))

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        p = min(self.prec, other.prec)
        a, b = self._coeffs, other._coeffs
        # skip zero entries: theta series and sparse products are mostly zeros
        a_nz = [(i, x) for i, x in enumerate(a[: p + 1]) if x]
        b_nz = [(j, y) for j, y in enumerate(b[: p + 1]) if y]
        out = [Fraction(0)] * (p + 1)
        for i, x in a_nz:
            lim = p - i
            for j, y in b_nz:
                if j > lim:
                    break
                out[i + j] += x * y
        return QSeries._raw(tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        a = self._coeffs
        if a[0] == 0:
            raise NonInvertible("series with zero constant term has no inverse")
        inv0 = 1 / a[0]
        b = [inv0]
        for n in range(1, len(a)):
            s = sum((a[k] * b[n - k] for k in range(1, n + 1) if a[k]), Fraction(0))
            b.append(-s * inv0)
        return QSeries._raw(tuple(b))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QSeries.constant(1, self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._coeffs[:6])
        more = ", ..." if self.prec > 5 else ""
        return f"QSeries([{shown}{more}], prec={self.prec})"

    def agrees_with(self, other: "QSeries", start: int = 0, stop: int | None = None) -> bool:
        """Coefficientwise equality on exponents ``start..stop`` (inclusive)."""
        if stop is None:
            stop = min(self.prec, other.prec)
        return all(self.coeff(n) == other.coeff(n) for n in range(start, stop + 1))


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_pow(a: QSeries, k: int) -> QSeries:
    """``a**k``; negative ``k`` requires an invertible constant term."""
    return a**k


def qs_coeff(a: QSeries, n: int) -> Fraction:
    return a.coeff(n)


def as_integers(coeffs: Sequence[Fraction], what: str = "coefficient") -> list[int]:
    """Return the coefficients as ints, raising if any is non-integral."""
    out = []
    for n, c in enumerate(coeffs):
        if c.denominator != 1:
            raise ArithmeticError(f"{what} at q^{n} is not an integer: {c}")
        out.append(c.numerator)
    return out
