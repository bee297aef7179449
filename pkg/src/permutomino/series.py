"""Truncated exact power series in t, and in (s, t), over the rationals.

Everything is carried with arbitrary-precision rational coefficients even
though the series of interest all have integer coefficients; intermediate
divisions then stay total and integrality becomes a checkable fact instead
of an assumption.  Ring operations truncate in t only; the s-degree of the
bivariate series arising here is bounded by the t-degree, so polynomials in
s are kept exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .census import census as _level_census

Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact scalar, got {type(value).__name__}")


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t truncated at a fixed order (inclusive).

    ``coeffs[k]`` is the coefficient of ``t**k``; binary operations require
    both operands to share the same order, so no precision is lost silently.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")

    @classmethod
    def from_coeffs(cls, values: Iterable[Scalar], order: int) -> "TruncatedSeries":
        """Series from leading coefficients, zero-padded up to ``order``."""
        coeffs = [_as_fraction(v) for v in values]
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _coerce(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError("series orders differ")
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        rhs = self._coerce(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, rhs.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "TruncatedSeries":
        return self._coerce(other) - self

    def __mul__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            f = _as_fraction(other)
            return TruncatedSeries(tuple(a * f for a in self.coeffs))
        rhs = self._coerce(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = rhs.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series has no inverse: zero constant term")
        n = self.order
        inv = [Fraction(1) / self.coeffs[0]] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self.coeffs[i] * inv[k - i]
            inv[k] = -acc / self.coeffs[0]
        return TruncatedSeries(tuple(inv))

    def __truediv__(self, other: "TruncatedSeries | Scalar") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        f = _as_fraction(other)
        return TruncatedSeries(tuple(a / f for a in self.coeffs))

    def __rtruediv__(self, other: Scalar) -> "TruncatedSeries":
        return self._coerce(other) * self.inverse()

    def sqrt(self) -> "TruncatedSeries":
        """Square root of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("square root needs constant term 1")
        n = self.order
        root = [Fraction(1)] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc -= root[i] * root[k - i]
            root[k] = acc / 2
        return TruncatedSeries(tuple(root))

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by t^k (the top k coefficients fall off the truncation)."""
        if k < 0:
            raise ValueError("shift must be >= 0")
        zeros = (Fraction(0),) * min(k, self.order + 1)
        return TruncatedSeries((zeros + self.coeffs)[: self.order + 1])

    def divide_by_t(self, k: int = 1) -> "TruncatedSeries":
        """Divide by t^k; the k lowest coefficients must vanish.  The order
        drops by k."""
        if any(self.coeffs[i] != 0 for i in range(k)):
            raise ValueError("low-order coefficients are not zero")
        return TruncatedSeries(self.coeffs[k:])

    def integer_coeffs(self) -> list[int]:
        """Coefficients as integers; raises if any is fractional."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ArithmeticError(f"non-integer coefficient {c}")
            out.append(int(c))
        return out


def polynomial(values: Sequence[Scalar], order: int) -> TruncatedSeries:
    return TruncatedSeries.from_coeffs(values, order)


def sqrt_1m4t(order: int) -> TruncatedSeries:
    """The series S with S^2 = 1 - 4t; starts 1, -2, -2, -4, -10, ..."""
    return polynomial([1, -4], order).sqrt()


def series_b1(order: int) -> TruncatedSeries:
    """t / (1 - 2t): class-B totals by size (the stack counts 2^(n-1))."""
    return polynomial([0, 1], order) / polynomial([1, -2], order)


def series_r1(order: int) -> TruncatedSeries:
    """1/sqrt(1-4t) - 1/(1-2t): class-R totals by size."""
    return sqrt_1m4t(order).inverse() - polynomial([1, -2], order).inverse()


def series_n1(order: int) -> TruncatedSeries:
    """Class-G totals by size:
    (1-7t+14t^2-4t^3) / ((1-2t)(1-4t)^2) - (1-3t) / (1-4t)^(3/2)."""
    one_m4t = polynomial([1, -4], order)
    rational = polynomial([1, -7, 14, -4], order) / (polynomial([1, -2], order) * one_m4t * one_m4t)
    algebraic = polynomial([1, -3], order) / (one_m4t * sqrt_1m4t(order))
    return rational - algebraic


def series_f1(order: int) -> TruncatedSeries:
    """Convex permutominoes by size:
    2t(1-3t)/(1-4t)^2 - t/(1-4t)^(3/2); starts t + 4t^2 + 18t^3 + ..."""
    one_m4t = polynomial([1, -4], order)
    rational = polynomial([0, 2, -6], order) / (one_m4t * one_m4t)
    algebraic = polynomial([0, 1], order) / (one_m4t * sqrt_1m4t(order))
    return rational - algebraic


def series_directed(order: int) -> TruncatedSeries:
    """(1 - sqrt(1-4t)) / (2 sqrt(1-4t)): half central binomials."""
    s = sqrt_1m4t(order)
    return (1 - s) / (2 * s)


def kernel_root(order: int) -> TruncatedSeries:
    """The power-series root s0 = (1 - sqrt(1-4t)) / (2t) of 1 - s + t s^2.

    This is the Catalan series 1 + t + 2t^2 + 5t^3 + ...; it is the unique
    root with nonnegative (in fact positive) coefficients.
    """
    # computed at order+1 so that the division by t keeps full precision
    s = sqrt_1m4t(order + 1)
    return ((1 - s) / 2).divide_by_t(1)


def kernel_residual(order: int) -> TruncatedSeries:
    """1 - s0 + t s0^2, identically zero when s0 is a true kernel root."""
    s0 = kernel_root(order)
    return 1 - s0 + (s0 * s0).shift(1)


# ---------------------------------------------------------------------------
# bivariate series: coefficient of t^n is a polynomial in s
# ---------------------------------------------------------------------------


def _trim(poly: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    last = 0
    for i, c in enumerate(poly):
        if c != 0:
            last = i + 1
    return poly[:last] if last else ()


def _poly_add(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(tuple(out))


def _poly_mul(a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c == 0:
            continue
        for j, d in enumerate(b):
            if d:
                out[i + j] += c * d
    return _trim(tuple(out))


@dataclass(frozen=True)
class BivariateSeries:
    """Series in t truncated at a fixed order whose t^n coefficient is an
    exact polynomial in s (stored dense, constant term first)."""

    coeffs: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_terms(cls, terms: dict[tuple[int, int], Scalar], order: int) -> "BivariateSeries":
        """Series from a sparse {(t_power, s_power): value} map."""
        rows: list[list[Fraction]] = [[] for _ in range(order + 1)]
        for (tn, sk), value in terms.items():
            if tn > order:
                continue
            row = rows[tn]
            while len(row) <= sk:
                row.append(Fraction(0))
            row[sk] += _as_fraction(value)
        return cls(tuple(_trim(tuple(row)) for row in rows))

    @classmethod
    def zero(cls, order: int) -> "BivariateSeries":
        return cls(((),) * (order + 1))

    @classmethod
    def from_univariate(cls, series: TruncatedSeries) -> "BivariateSeries":
        return cls(tuple(() if c == 0 else (c,) for c in series.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def at(self, t_power: int, s_power: int) -> Fraction:
        row = self.coeffs[t_power]
        return row[s_power] if s_power < len(row) else Fraction(0)

    def is_zero(self) -> bool:
        return all(not row for row in self.coeffs)

    def _check(self, other: "BivariateSeries") -> None:
        if other.order != self.order:
            raise ValueError("series orders differ")

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        self._check(other)
        return BivariateSeries(tuple(_poly_add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries(tuple(tuple(-c for c in row) for row in self.coeffs))

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def __mul__(self, other: "BivariateSeries | Scalar") -> "BivariateSeries":
        if not isinstance(other, BivariateSeries):
            f = _as_fraction(other)
            return BivariateSeries(tuple(_trim(tuple(c * f for c in row)) for row in self.coeffs))
        self._check(other)
        n = self.order
        out: list[tuple[Fraction, ...]] = [()] * (n + 1)
        for i, row_a in enumerate(self.coeffs):
            if not row_a:
                continue
            for j in range(n + 1 - i):
                row_b = other.coeffs[j]
                if row_b:
                    out[i + j] = _poly_add(out[i + j], _poly_mul(row_a, row_b))
        return BivariateSeries(tuple(out))

    __rmul__ = __mul__

    def shift(self, t_power: int = 0, s_power: int = 0) -> "BivariateSeries":
        """Multiply by t^a s^b."""
        rows = [((Fraction(0),) * s_power + row if row else ()) for row in self.coeffs]
        pad: list[tuple[Fraction, ...]] = [()] * min(t_power, self.order + 1)
        return BivariateSeries(tuple((pad + rows)[: self.order + 1]))

    def specialize_s1(self) -> TruncatedSeries:
        """Set s = 1, collapsing each polynomial row to its coefficient sum."""
        return TruncatedSeries(tuple(sum(row, Fraction(0)) for row in self.coeffs))

    def max_abs_coeff(self) -> Fraction:
        worst = Fraction(0)
        for row in self.coeffs:
            for c in row:
                if abs(c) > worst:
                    worst = abs(c)
        return worst


def census_bivariate(order: int) -> tuple[BivariateSeries, BivariateSeries, BivariateSeries]:
    """Census-derived truncations of the class series B(s,t), R(s,t), G(s,t):
    the coefficient of s^k t^n is the level-n multiplicity of label (k, class)."""
    terms: dict[str, dict[tuple[int, int], Scalar]] = {"B": {}, "R": {}, "G": {}}
    for n in range(1, order + 1):
        for (k, group), c in _level_census(n).counts.items():
            terms[group][(n, k)] = c
    return tuple(BivariateSeries.from_terms(terms[g], order) for g in ("B", "R", "G"))  # type: ignore[return-value]


def census_full_bivariate(order: int) -> BivariateSeries:
    b, r, g = census_bivariate(order)
    return b + r + g


def functional_equation_residuals(order: int) -> dict[str, BivariateSeries]:
    """Residuals of the two class functional equations, denominators cleared
    by (1 - s), evaluated on the census truncations:

    * ``R``:  R(s,t) ((1-s) + s^2 t) - 2st (B(1,t) - B(s,t)) - st R(1,t)
    * ``G``:  G(s,t) ((1-s) + 2st)  -  st (R(1,t) - R(s,t)) - 2st G(1,t)

    Both must vanish identically through the truncation order.
    """
    b, r, g = census_bivariate(order)
    b1 = BivariateSeries.from_univariate(b.specialize_s1())
    r1 = BivariateSeries.from_univariate(r.specialize_s1())
    g1 = BivariateSeries.from_univariate(g.specialize_s1())

    kernel_r = BivariateSeries.from_terms({(0, 0): 1, (0, 1): -1, (1, 2): 1}, order)
    residual_r = r * kernel_r - 2 * (b1 - b).shift(1, 1) - r1.shift(1, 1)

    kernel_g = BivariateSeries.from_terms({(0, 0): 1, (0, 1): -1, (1, 1): 2}, order)
    residual_g = g * kernel_g - (r1 - r).shift(1, 1) - 2 * g1.shift(1, 1)

    return {"R": residual_r, "G": residual_g}
