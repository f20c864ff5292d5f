"""Truncated formal power series in q with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Iterator

from . import kernels


class SeriesOrderError(ValueError):
    """Binary operation on series truncated at different orders."""


class IntegralityError(ArithmeticError):
    """A quantity required to be a (nonnegative) integer is not one."""


class Series:
    """Coefficients c_0..c_N of a power series, stored as integers over one denominator.

    Values are immutable.  ``Series([1, 2, Fraction(1, 3)])`` has order 2.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, coeffs: Iterable[int | Fraction | str]):
        fr = [Fraction(c) for c in coeffs]
        if not fr:
            raise ValueError("a series needs at least the constant coefficient")
        den = lcm(*(c.denominator for c in fr))
        self._set([c.numerator * (den // c.denominator) for c in fr], den)

    @classmethod
    def _scaled(cls, num: list[int], den: int) -> Series:
        s = cls.__new__(cls)
        s._set(num, den)
        return s

    def _set(self, num: list[int], den: int) -> None:
        if den < 0:
            num, den = [-x for x in num], -den
        g = gcd(den, *num)
        if g > 1:
            num = [x // g for x in num]
            den //= g
        self._num = tuple(num)
        self._den = den

    @classmethod
    def one(cls, order: int) -> Series:
        return cls._scaled([1] + [0] * order, 1)

    @classmethod
    def from_integers(cls, coeffs: Iterable[int]) -> Series:
        return cls._scaled(list(coeffs), 1)

    @property
    def order(self) -> int:
        return len(self._num) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._num)

    @property
    def denominator(self) -> int:
        """Least common denominator of all coefficients."""
        return self._den

    def is_integral(self) -> bool:
        return self._den == 1

    def integers(self) -> list[int]:
        """Coefficients as ints; raises IntegralityError if any is fractional."""
        if self._den != 1:
            raise IntegralityError(f"series has denominator {self._den}")
        return list(self._num)

    def __getitem__(self, i: int) -> Fraction:
        return Fraction(self._num[i], self._den)

    def __len__(self) -> int:
        return len(self._num)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Series):
            return self._num == other._num and self._den == other._den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __repr__(self) -> str:
        return f"Series([{', '.join(str(c) for c in self.coeffs)}])"

    def __add__(self, other: Series) -> Series:
        return series_add(self, other)

    def __sub__(self, other: Series) -> Series:
        return series_add(self, other, 1, -1)

    def __mul__(self, other: Series) -> Series:
        return series_mul(self, other)

    def __pow__(self, m: int) -> Series:
        return series_pow(self, m)


@dataclass(frozen=True)
class EulerProduct:
    """Product over ``factors`` (a, e) of prod_{n>=1} (1 - q^(a*n))^e."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        facs = tuple((int(a), int(e)) for a, e in self.factors)
        for a, _ in facs:
            if a < 1:
                raise ValueError(f"period must be positive, got {a}")
        object.__setattr__(self, "factors", facs)


def _check_orders(s: Series, t: Series) -> None:
    if s.order != t.order:
        raise SeriesOrderError(f"order mismatch: {s.order} vs {t.order}")


def series_add(s: Series, t: Series, w1: Rational | int = 1, w2: Rational | int = 1) -> Series:
    """Coefficientwise w1*s + w2*t."""
    _check_orders(s, t)
    w1, w2 = Fraction(w1), Fraction(w2)
    # w1*S/D1 + w2*T/D2 over the denominator b1*b2*D1*D2
    a = w1.numerator * w2.denominator * t._den
    b = w2.numerator * w1.denominator * s._den
    num = [a * x + b * y for x, y in zip(s._num, t._num)]
    return Series._scaled(num, w1.denominator * w2.denominator * s._den * t._den)


def series_mul(s: Series, t: Series) -> Series:
    """Truncated Cauchy product."""
    _check_orders(s, t)
    num = kernels.mul_trunc(list(s._num), list(t._num), s.order)
    return Series._scaled(num, s._den * t._den)


def series_inv(s: Series) -> Series:
    """Multiplicative inverse; requires a nonzero constant term."""
    S, D, n = list(s._num), s._den, s.order
    if S[0] == 0:
        raise ZeroDivisionError("cannot invert a series with zero constant term")
    u = kernels.inverse_scaled(S, n)
    s0 = S[0]
    # [q^k](1/s) = D*u[k]/s0^(k+1); bring everything over s0^(n+1)
    num = [0] * (n + 1)
    p = D
    for k in range(n, -1, -1):
        num[k] = u[k] * p
        p *= s0
    return Series._scaled(num, s0 ** (n + 1))


def series_pow(s: Series, m: int) -> Series:
    """s**m by binary exponentiation; negative m inverts first."""
    if m < 0:
        s, m = series_inv(s), -m
    result = Series.one(s.order)
    base = s
    while m:
        if m & 1:
            result = series_mul(result, base)
        m >>= 1
        if m:
            base = series_mul(base, base)
    return result


def expand_product(p: EulerProduct | Iterable[tuple[int, int]], order: int) -> Series:
    """Truncated expansion of an Euler product up to q^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not isinstance(p, EulerProduct):
        p = EulerProduct(tuple(p))
    return Series.from_integers(kernels.expand_euler(list(p.factors), order))
