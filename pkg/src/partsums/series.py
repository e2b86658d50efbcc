"""Truncated formal power series with exact rational coefficients.

Used as an oracle independent of the partition sums: the central binomial
generating functions, their products, inverses and logarithmic derivatives
are computed coefficient by coefficient.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .exact import binomial

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """c0 + c1 z + ... + cM z^M, standing for a power series modulo z^(M+1).

    Binary operations truncate to the smaller order of the two operands.
    Equality compares coefficients up to the shared order.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs = coeffs

    @classmethod
    def constant(cls, c: Scalar, order: int) -> "TruncatedSeries":
        return cls([c] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if len(self.coeffs) > 8 else ""
        return f"TruncatedSeries([{shown}{more}], order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return self.coeffs[: m + 1] == other.coeffs[: m + 1]

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self.coeffs)

    def __add__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries((self.coeffs[0] + other, *self.coeffs[1:]))
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __pow__(self, j: int) -> "TruncatedSeries":
        if j < 0:
            raise ValueError("negative powers: use series_inverse")
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(j):
            result = series_mul(result, self)
        return result


def gf_central(order: int) -> TruncatedSeries:
    """sum C(2n, n) z^n, i.e. 1/sqrt(1 - 4z)."""
    return TruncatedSeries(binomial(2 * n, n) for n in range(order + 1))


def gf_n_central(order: int) -> TruncatedSeries:
    """sum n C(2n, n) z^n."""
    return TruncatedSeries(n * binomial(2 * n, n) for n in range(order + 1))


def gf_invodd_central(order: int) -> TruncatedSeries:
    """sum C(2n, n)/(2n - 1) z^n, i.e. -sqrt(1 - 4z); the constant term is -1."""
    return TruncatedSeries(Fraction(binomial(2 * n, n), 2 * n - 1) for n in range(order + 1))


def gf_alternating_invodd(order: int) -> TruncatedSeries:
    """1 + sum_{n>=1} (-1)^(n-1) C(2n, n)/(2n - 1) z^n."""
    return TruncatedSeries(
        Fraction(1) if n == 0 else Fraction((-1) ** (n - 1) * binomial(2 * n, n), 2 * n - 1)
        for n in range(order + 1)
    )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to min(a.order, b.order)."""
    m = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    return TruncatedSeries(sum((ac[k] * bc[i - k] for k in range(i + 1)), Fraction(0)) for i in range(m + 1))


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """1/a, solved term by term from a * inv = 1."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("series with zero constant term has no inverse")
    inv = [1 / a0]
    for i in range(1, a.order + 1):
        s = sum((a.coeffs[k] * inv[i - k] for k in range(1, i + 1)), Fraction(0))
        inv.append(-s / a0)
    return TruncatedSeries(inv)


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    if a.order < 1:
        raise ValueError("differentiating an order-0 series leaves nothing")
    return TruncatedSeries((i + 1) * a.coeffs[i + 1] for i in range(a.order))


def series_integral(a: TruncatedSeries, constant: Scalar = 0) -> TruncatedSeries:
    return TruncatedSeries((Fraction(constant), *(c / (i + 1) for i, c in enumerate(a.coeffs))))


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) for a with constant term 1, as the antiderivative of a'/a."""
    if a.coeffs[0] != 1:
        raise ValueError(f"log needs constant term 1, got {a.coeffs[0]}")
    if a.order == 0:
        return TruncatedSeries([0])
    return series_integral(series_mul(series_derivative(a), series_inverse(a)))


def series_log_composed(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) as sum_{j>=1} (-1)^(j-1)/j (a - 1)^j; slow, kept as a cross-check."""
    if a.coeffs[0] != 1:
        raise ValueError(f"log needs constant term 1, got {a.coeffs[0]}")
    u = a - 1
    total = TruncatedSeries.constant(0, a.order)
    power = TruncatedSeries.constant(1, a.order)
    for j in range(1, a.order + 1):
        power = series_mul(power, u)
        total = total + power * Fraction((-1) ** (j - 1), j)
    return total


@dataclass(frozen=True)
class SeriesCheck:
    name: str
    ok: bool
    coefficients: tuple[Fraction, ...]
    expected: tuple[Fraction, ...]
    first_mismatch: Optional[int] = None


def _compare(name: str, got: Sequence[Fraction], expected: Sequence[Fraction]) -> SeriesCheck:
    mismatch = next((i for i, (g, e) in enumerate(zip(got, expected)) if g != e), None)
    if mismatch is None and len(got) != len(expected):
        mismatch = min(len(got), len(expected))
    return SeriesCheck(name, mismatch is None, tuple(got), tuple(expected), mismatch)


def check_logderiv_plain(order: int) -> SeriesCheck:
    """d/dz log(sum C(2n,n) z^n) should be 2/(1 - 4z), i.e. coefficients 2 * 4^m."""
    if order < 1:
        raise ValueError("order must be at least 1")
    got = series_derivative(series_log(gf_central(order)))
    return _compare("logderiv_plain", got.coeffs, [Fraction(2 * 4**m) for m in range(order)])


def check_logderiv_alternating(order: int) -> SeriesCheck:
    """d/dz log(1 + sum (-1)^(n-1) C(2n,n)/(2n-1) z^n) should be 2/(1 + 4z)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    got = series_derivative(series_log(gf_alternating_invodd(order)))
    return _compare("logderiv_alternating", got.coeffs, [Fraction((-1) ** m * 2 * 4**m) for m in range(order)])


def check_delta_product(order: int) -> SeriesCheck:
    """gf_central * (-gf_invodd_central) should be exactly 1."""
    got = series_mul(gf_central(order), -gf_invodd_central(order))
    return _compare("delta_product", got.coeffs, [Fraction(int(m == 0)) for m in range(order + 1)])


def check_gf_tables(order: int) -> list[SeriesCheck]:
    """Spot-check the three generating functions against their closed-form coefficients.

    The n C(2n,n) series is compared with z * d/dz of the central series,
    which is an independent route to the same coefficients.
    """
    central = gf_central(order)
    shifted = [Fraction(0), *series_derivative(central).coeffs] if order else [Fraction(0)]
    return [
        _compare("gf_central", central.coeffs, [Fraction(binomial(2 * m, m)) for m in range(order + 1)]),
        _compare("gf_n_central", gf_n_central(order).coeffs, [Fraction(m * binomial(2 * m, m)) for m in range(order + 1)]),
        _compare("gf_n_central_as_z_derivative", gf_n_central(order).coeffs, shifted),
        _compare(
            "gf_invodd_central",
            gf_invodd_central(order).coeffs,
            [Fraction(binomial(2 * m, m), 2 * m - 1) for m in range(order + 1)],
        ),
    ]


def run_all_checks(order: int) -> list[SeriesCheck]:
    return [
        *check_gf_tables(order),
        check_logderiv_plain(order),
        check_logderiv_alternating(order),
        check_delta_product(order),
    ]
