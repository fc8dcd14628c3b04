"""Exact truncated formal power series in one variable q.

Every series carries integer coefficients for the exponents 0..order
inclusive and nothing beyond; all constructors and products truncate
eagerly at that order.  Coefficients are Python ints, so arithmetic is
exact at any size.  Binary operations insist on equal orders -- use
``truncate`` to drop precision explicitly.

Infinite products and sums are truncated by a minimal-degree cutoff: a
factor or term is included iff its lowest-degree monomial has exponent
<= order, which keeps every retained coefficient exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional, Sequence


@dataclass(frozen=True)
class Discrepancy:
    """First point at which two quantities that should agree do not."""

    where: Any
    expected: Any
    actual: Any


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one identity check.

    ``passed`` is True exactly when ``first_discrepancy`` is None;
    ``context`` labels the identity that was checked.
    """

    context: str
    passed: bool
    first_discrepancy: Optional[Discrepancy] = None

    def __post_init__(self) -> None:
        if self.passed != (self.first_discrepancy is None):
            raise ValueError("passed must mirror the absence of a discrepancy")

    @classmethod
    def success(cls, context: str) -> "VerifyReport":
        return cls(context=context, passed=True)

    @classmethod
    def failure(cls, context: str, where: Any, expected: Any, actual: Any) -> "VerifyReport":
        return cls(
            context=context,
            passed=False,
            first_discrepancy=Discrepancy(where=where, expected=expected, actual=actual),
        )


class QSeries:
    """A formal power series in q, exact up to and including q^order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        if len(coeffs) == 0:
            raise ValueError("a series carries at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("QSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, e: int) -> int:
        """Coefficient of q^e; e must not exceed the order."""
        if e < 0 or e > self.order:
            raise IndexError(f"exponent {e} outside retained range 0..{self.order}")
        return self.coeffs[e]

    def truncate(self, order: int) -> "QSeries":
        """Drop to a lower order (the only sanctioned way to mix orders)."""
        if order < 0 or order > self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QSeries") -> "QSeries":
        _check_orders(self, other)
        return QSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "QSeries") -> "QSeries":
        _check_orders(self, other)
        return QSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "QSeries":
        return QSeries([-a for a in self.coeffs])

    def __mul__(self, other: "QSeries") -> "QSeries":
        _check_orders(self, other)
        a, b = self.coeffs, other.coeffs
        top = len(a)
        out = [0] * top
        for i, ai in enumerate(a):
            if ai:
                for j in range(top - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        return QSeries(out)

    def invert(self) -> "QSeries":
        """Multiplicative inverse; requires constant term 1.

        Solves for the inverse coefficients one exponent at a time, so the
        result is exact through the shared order.
        """
        a = self.coeffs
        if a[0] != 1:
            raise ValueError(f"can only invert a series with constant term 1, got {a[0]}")
        top = len(a)
        b = [0] * top
        b[0] = 1
        for e in range(1, top):
            acc = 0
            for i in range(1, e + 1):
                ai = a[i]
                if ai:
                    acc += ai * b[e - i]
            b[e] = -acc
        return QSeries(b)

    def __repr__(self) -> str:
        return f"QSeries({list(self.coeffs)!r})"

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"


def _check_orders(a: QSeries, b: QSeries) -> None:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")


def zero(order: int) -> QSeries:
    return QSeries([0] * (order + 1))


def one(order: int) -> QSeries:
    return QSeries([1] + [0] * order)


def make_monomial(e: int, order: int) -> QSeries:
    """q^e at the given order; exponents beyond the order truncate to 0."""
    if e < 0:
        raise ValueError(f"exponent must be nonnegative, got {e}")
    coeffs = [0] * (order + 1)
    if e <= order:
        coeffs[e] = 1
    return QSeries(coeffs)


def q_pochhammer(k: int, count: Optional[int], order: int) -> QSeries:
    """The product (1 - q^k)(1 - q^(k+1)) ... with ``count`` factors.

    ``count=None`` means the infinite product, truncated by keeping the
    factors (1 - q^e) with e <= order; the rest are 1 to this precision.
    ``count=0`` is the empty product.  k must be >= 1 -- the k=0
    specialization has no constant-term-1 expansion to work in.
    """
    if k < 1:
        raise ValueError("q_pochhammer requires k >= 1")
    if count is not None and count < 0:
        raise ValueError(f"factor count must be nonnegative, got {count}")
    if count is None:
        exponents = range(k, order + 1)
    else:
        exponents = range(k, k + count)
    result = one(order)
    for e in exponents:
        if e > order:
            break
        result = result * (one(order) - make_monomial(e, order))
    return result


@lru_cache(maxsize=None)
def euler_inv(order: int) -> QSeries:
    """1 / ((1-q)(1-q^2)...): the partition-count generating function."""
    return q_pochhammer(1, None, order).invert()


@lru_cache(maxsize=None)
def _gauss_poly(m: int, n: int) -> tuple[int, ...]:
    """Exact coefficients of the m-by-n box enumerator, degree m*n.

    Built from the cell-at-the-corner recurrence
    F(m,n) = q^n * F(m-1,n) + F(m,n-1), F(0,n) = F(m,0) = 1,
    which stays in integers throughout (no division).
    """
    if m == 0 or n == 0:
        return (1,)
    out = [0] * (m * n + 1)
    for e, c in enumerate(_gauss_poly(m - 1, n)):
        out[e + n] += c
    for e, c in enumerate(_gauss_poly(m, n - 1)):
        out[e] += c
    return tuple(out)


def gauss_binomial(m: int, n: int, order: int) -> QSeries:
    """Gaussian binomial for the m-by-n box, truncated to the given order.

    A polynomial of degree min(m*n, order); equal as a series to
    (q)_{m+n} / ((q)_m (q)_n), but computed by the box recurrence.
    """
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be nonnegative")
    poly = _gauss_poly(m, n)
    coeffs = list(poly[: order + 1])
    coeffs.extend([0] * (order + 1 - len(coeffs)))
    return QSeries(coeffs)


def lemma_rhs(c: int, d: int, order: int) -> QSeries:
    """q^(c+d+1) / ((1 - q^(c+d+1)) (q)_inf), truncated.

    This is the closed-form generating function, in n, for the number of
    times the pair (c, d) occurs among either kind of cell filling over
    all partitions of n.  It depends on c and d only through c+d.  When
    c+d+1 exceeds the order, the result is the zero series.
    """
    if c < 0 or d < 0:
        raise ValueError("pair entries must be nonnegative")
    step = c + d + 1
    marked_row = make_monomial(step, order)
    repeat = (one(order) - make_monomial(step, order)).invert()
    return marked_row * repeat * euler_inv(order)


def compare_series(context: str, expected: QSeries, actual: QSeries) -> VerifyReport:
    """Coefficient-wise comparison, reporting the smallest failing exponent."""
    _check_orders(expected, actual)
    for e in range(expected.order + 1):
        if expected.coeffs[e] != actual.coeffs[e]:
            return VerifyReport.failure(
                context, where=e, expected=expected.coeffs[e], actual=actual.coeffs[e]
            )
    return VerifyReport.success(context)


def verify_fact1(a: int, k: int, order: int) -> VerifyReport:
    """Check the q-binomial expansion of 1/(z)_{a+1} at z = q^k.

    Left side: the inverted finite product (1-q^k)...(1-q^(k+a)).
    Right side: sum over j of gauss_binomial(a, j) * q^(k*j), keeping the
    terms whose lowest degree k*j fits under the order.  The two sides are
    computed by unrelated code paths (inversion vs. box recurrence).
    """
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    if k < 1:
        raise ValueError("specialization exponent k must be >= 1")
    lhs = q_pochhammer(k, a + 1, order).invert()
    rhs = zero(order)
    j = 0
    while k * j <= order:
        rhs = rhs + gauss_binomial(a, j, order) * make_monomial(k * j, order)
        j += 1
    return compare_series(f"fact1(a={a}, k={k}, order={order})", lhs, rhs)


def verify_fact2(k: int, order: int) -> VerifyReport:
    """Check 1/(z)_inf = sum_j z^j/(q)_j at z = q^k."""
    if k < 1:
        raise ValueError("specialization exponent k must be >= 1")
    lhs = q_pochhammer(k, None, order).invert()
    rhs = zero(order)
    j = 0
    while k * j <= order:
        rhs = rhs + make_monomial(k * j, order) * q_pochhammer(1, j, order).invert()
        j += 1
    return compare_series(f"fact2(k={k}, order={order})", lhs, rhs)
