"""Exact truncated power series in t and rational functions with series expansion.

All coefficients are `fractions.Fraction`; nothing here ever rounds.  A
``TruncatedSeries`` carries an explicit truncation order, and binary
operations truncate to the smaller of the two orders.  A
``RationalFunction`` is a quotient of integer-coefficient polynomials in t
whose denominator has nonzero constant term, so its expansion at t = 0 is
well defined and computed by exact long division.

Values are immutable after construction; every operation returns a fresh
object, so they are safe to share between concurrent callers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


# ---------------------------------------------------------------------------
# dense integer polynomials in t, as plain lists of coefficients
# ---------------------------------------------------------------------------

def zpoly_trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros; the zero polynomial becomes (0,)."""
    n = len(coeffs)
    while n > 1 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def zpoly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return zpoly_trim(out)


def zpoly_scale(c: int, a: Sequence[int]) -> tuple[int, ...]:
    return zpoly_trim([c * x for x in a])


def zpoly_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return zpoly_add(a, zpoly_scale(-1, b))


def zpoly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return zpoly_trim(out)


def zpoly_pow(a: Sequence[int], n: int) -> tuple[int, ...]:
    if n < 0:
        raise ValueError("negative power of a polynomial")
    result: tuple[int, ...] = (1,)
    base = zpoly_trim(a)
    while n:
        if n & 1:
            result = zpoly_mul(result, base)
        n >>= 1
        if n:
            base = zpoly_mul(base, base)
    return result


def zpoly_shift(a: Sequence[int], k: int) -> tuple[int, ...]:
    """Multiply by t^k."""
    if k < 0:
        raise ValueError("negative shift")
    return zpoly_trim([0] * k + list(a))


def zpoly_str(a: Sequence[int], var: str = "t") -> str:
    """Canonical human-readable form, ascending powers."""
    a = zpoly_trim(a)
    if a == (0,):
        return "0"
    parts: list[str] = []
    for d, c in enumerate(a):
        if c == 0:
            continue
        if d == 0:
            body = str(abs(c))
        else:
            power = var if d == 1 else f"{var}^{d}"
            body = power if abs(c) == 1 else f"{abs(c)}*{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

class TruncatedSeries:
    """Power series in t modulo t^(order+1), with exact rational coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(cs) < order + 1:
            cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs[: order + 1]))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1], order)

    def coefficient(self, d: int) -> Fraction:
        if d < 0 or d > self.order:
            raise IndexError(f"degree {d} outside truncation order {self.order}")
        return self.coeffs[d]

    def truncated(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[d] + other.coeffs[d] for d in range(n + 1)], n
        )

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(
            [self.coeffs[d] - other.coeffs[d] for d in range(n + 1)], n
        )

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(self.coeffs[: n + 1]):
            if x == 0:
                continue
            for j in range(n + 1 - i):
                y = other.coeffs[j]
                if y:
                    out[i + j] += x * y
        return TruncatedSeries(out, n)

    def scaled(self, c) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries([c * x for x in self.coeffs], self.order)

    def __rmul__(self, c) -> TruncatedSeries:
        if isinstance(c, TruncatedSeries):
            return NotImplemented
        return self.scaled(c)

    def __neg__(self) -> TruncatedSeries:
        return self.scaled(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"

    def __str__(self) -> str:
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                power = "t" if d == 1 else f"t^{d}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        head = " ".join(parts) if parts else "0"
        return f"{head} + O(t^{self.order + 1})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    return a * b


def series_linear_combination(
    terms: Iterable[tuple[Fraction, TruncatedSeries]],
) -> TruncatedSeries:
    """Exact coefficient-wise linear combination, truncated to the common order."""
    terms = list(terms)
    if not terms:
        raise ValueError("need at least one term")
    n = min(s.order for _, s in terms)
    out = [Fraction(0)] * (n + 1)
    for c, s in terms:
        c = Fraction(c)
        for d in range(n + 1):
            out[d] += c * s.coeffs[d]
    return TruncatedSeries(out, n)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Formal quotient a/b where b has nonzero constant term."""
    if b.coeffs[0] == 0:
        raise ValueError("division by a series with zero constant term")
    n = min(a.order, b.order)
    out = [Fraction(0)] * (n + 1)
    for d in range(n + 1):
        acc = a.coeffs[d]
        for m in range(1, d + 1):
            if b.coeffs[m]:
                acc -= b.coeffs[m] * out[d - m]
        out[d] = acc / b.coeffs[0]
    return TruncatedSeries(out, n)


# ---------------------------------------------------------------------------
# rational functions in t
# ---------------------------------------------------------------------------

class RationalFunction:
    """Quotient of integer polynomials in t, expandable as a series at t = 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence[int], den: Sequence[int] = (1,)):
        num = zpoly_trim([int(c) for c in num])
        den = zpoly_trim([int(c) for c in den])
        if den[0] == 0:
            raise ValueError("denominator must have nonzero constant term")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    def expand(self, order: int) -> TruncatedSeries:
        """Power-series expansion at t = 0 to the given order, by long division."""
        if order < 0:
            raise ValueError("expansion order must be nonnegative")
        num, den = self.num, self.den
        d0 = Fraction(den[0])
        out = [Fraction(0)] * (order + 1)
        for d in range(order + 1):
            acc = Fraction(num[d]) if d < len(num) else Fraction(0)
            for m in range(1, min(d, len(den) - 1) + 1):
                acc -= den[m] * out[d - m]
            out[d] = acc / d0
        return TruncatedSeries(out, order)

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(
            zpoly_mul(self.num, other.num), zpoly_mul(self.den, other.den)
        )

    def __add__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(
            zpoly_add(
                zpoly_mul(self.num, other.den), zpoly_mul(other.num, self.den)
            ),
            zpoly_mul(self.den, other.den),
        )

    def __sub__(self, other: RationalFunction) -> RationalFunction:
        return self + RationalFunction(zpoly_scale(-1, other.num), other.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return zpoly_mul(self.num, other.den) == zpoly_mul(other.num, self.den)

    def __hash__(self):
        return hash(self.reduced_pair())

    def reduced_pair(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Numerator and denominator with common polynomial and integer factors removed.

        Normalized so the joint coefficient content is 1 and the denominator's
        constant term is positive.  Scaling both parts by the same rational
        leaves the quotient unchanged, which is all this relies on.
        """
        from math import gcd, lcm

        num = [Fraction(c) for c in self.num]
        den = [Fraction(c) for c in self.den]
        g = _qpoly_gcd(num, den)
        if len(g) > 1:
            num = _qpoly_divexact(num, g)
            den = _qpoly_divexact(den, g)
        m = 1
        for c in num + den:
            m = lcm(m, c.denominator)
        num_r = [int(c * m) for c in num]
        den_r = [int(c * m) for c in den]
        content = 0
        for c in num_r + den_r:
            content = gcd(content, abs(c))
        if content > 1:
            num_r = [c // content for c in num_r]
            den_r = [c // content for c in den_r]
        if den_r[0] < 0:
            num_r = [-c for c in num_r]
            den_r = [-c for c in den_r]
        return zpoly_trim(num_r), zpoly_trim(den_r)

    def reduced(self) -> RationalFunction:
        num, den = self.reduced_pair()
        return RationalFunction(num, den)

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num)!r}, {list(self.den)!r})"

    def __str__(self) -> str:
        if self.den == (1,):
            return zpoly_str(self.num)
        return f"({zpoly_str(self.num)})/({zpoly_str(self.den)})"


def series_expand(f: RationalFunction, order: int) -> TruncatedSeries:
    return f.expand(order)


# -- helpers for exact univariate gcd over the rationals --------------------

def _qpoly_trim(a: list[Fraction]) -> list[Fraction]:
    n = len(a)
    while n > 1 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def _qpoly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(c != 0 for c in a):
        a = _qpoly_trim(a)
        if len(a) - 1 < db:
            break
        q = a[-1] / lb
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        a = _qpoly_trim(a)
        if len(a) == 1 and a[0] == 0:
            break
    return _qpoly_trim(a)


def _qpoly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = _qpoly_trim(list(a))
    b = _qpoly_trim(list(b))
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _qpoly_mod(a, b)
    if a[-1] != 0:
        a = [c / a[-1] for c in a]
    return a


def _qpoly_divexact(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    out = [Fraction(0)] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    for k in range(len(out) - 1, -1, -1):
        q = a[k + db] / lb
        out[k] = q
        for i, c in enumerate(b):
            a[k + i] -= q * c
    if any(c != 0 for c in a):
        raise ArithmeticError("inexact polynomial division")
    return _qpoly_trim(out)


