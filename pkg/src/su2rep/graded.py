"""Weighted-graded polynomial ring Q[alpha, beta, gamma] with deg = (2, 4, 6).

Monomials are exponent triples (i, j, k) meaning alpha^i beta^j gamma^k.
The monomial order used everywhere downstream is weighted degree first,
ties broken lexicographically with alpha > beta > gamma; `monomial_key`
is the sort key realizing it.

The `mumford_c` sequence is the family of relation classes
    c_0 = 1,  c_1 = alpha,  c_2 = alpha^2 / 2,
    n c_n = alpha c_{n-1} + (n-2) beta c_{n-2} + 2 gamma c_{n-3}   (n >= 3),
each homogeneous of weighted degree 2n.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

Monomial = tuple[int, int, int]

WEIGHTS = (2, 4, 6)
VARIABLE_NAMES = ("alpha", "beta", "gamma")


def monomial_degree(m: Monomial) -> int:
    return 2 * m[0] + 4 * m[1] + 6 * m[2]


def monomial_key(m: Monomial) -> tuple[int, int, int, int]:
    """Sort key: weighted degree, then lex with alpha > beta > gamma."""
    return (monomial_degree(m), m[0], m[1], m[2])


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return (max(a[0], b[0]), max(a[1], b[1]), max(a[2], b[2]))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return a[0] <= b[0] and a[1] <= b[1] and a[2] <= b[2]


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    """b / a, assuming a divides b."""
    return (b[0] - a[0], b[1] - a[1], b[2] - a[2])


def monomial_str(m: Monomial) -> str:
    if m == (0, 0, 0):
        return "1"
    parts = []
    for name, e in zip(VARIABLE_NAMES, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class Poly:
    """Sparse polynomial in alpha, beta, gamma over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for m, c in items:
            c = Fraction(c)
            if c:
                m = (int(m[0]), int(m[1]), int(m[2]))
                if min(m) < 0:
                    raise ValueError(f"negative exponent in monomial {m}")
                clean[m] = clean.get(m, Fraction(0)) + c
                if not clean[m]:
                    del clean[m]
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c) -> Poly:
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def variable(cls, index: int) -> Poly:
        m = [0, 0, 0]
        m[index] = 1
        return cls({tuple(m): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=monomial_key)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def degree(self) -> int | float:
        """Weighted degree; -inf for the zero polynomial."""
        if not self.terms:
            return float("-inf")
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> Poly:
        return Poly({m: c for m, c in self.terms.items() if monomial_degree(m) == d})

    def monic(self) -> Poly:
        if not self.terms:
            return self
        lc = self.leading_coefficient()
        return Poly({m: c / lc for m, c in self.terms.items()})

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(out)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other: Poly) -> Poly:
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(out)

    def __rmul__(self, c) -> Poly:
        if isinstance(c, Poly):
            return NotImplemented
        c = Fraction(c)
        return Poly({m: c * x for m, x in self.terms.items()})

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def term_scaled(self, m: Monomial, c: Fraction) -> Poly:
        """self * c * (monomial m), without building an intermediate Poly."""
        return Poly({monomial_mul(m0, m): c0 * c for m0, c0 in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: monomial_key(mc[0]), reverse=True)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"Poly({dict(self.sorted_terms())!r})"


ALPHA = Poly.variable(0)
BETA = Poly.variable(1)
GAMMA = Poly.variable(2)

ZERO = Poly()
ONE = Poly.constant(1)


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_scale(c: Fraction | int, a: Poly) -> Poly:
    return c * a


def render_poly(p: Poly) -> str:
    """Canonical text form, terms in descending monomial order.

    Examples: "alpha^3 + 2*alpha*beta + 4*gamma", "1/2*alpha^2", "-beta + 1", "0".
    `parse_poly` inverts this exactly.
    """
    if p.is_zero():
        return "0"
    chunks: list[str] = []
    for m, c in p.sorted_terms():
        mono = monomial_str(m)
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


_TERM_FACTOR = re.compile(
    r"^(?:(?P<coeff>\d+(?:/\d+)?)|(?P<name>alpha|beta|gamma)(?:\^(?P<exp>\d+))?)$"
)


def parse_poly(text: str) -> Poly:
    """Inverse of `render_poly`; also accepts unnormalized whitespace."""
    s = text.strip()
    if s == "0":
        return ZERO
    s = s.replace("-", "+-")
    terms: list[tuple[Monomial, Fraction]] = []
    for raw in s.split("+"):
        raw = raw.strip()
        if not raw:
            continue
        sign = 1
        if raw.startswith("-"):
            sign = -1
            raw = raw[1:].strip()
        coeff = Fraction(1)
        expo = [0, 0, 0]
        for factor in raw.split("*"):
            factor = factor.strip()
            m = _TERM_FACTOR.match(factor)
            if not m:
                raise ValueError(f"cannot parse term factor {factor!r} in {text!r}")
            if m.group("coeff"):
                coeff *= Fraction(m.group("coeff"))
            else:
                idx = VARIABLE_NAMES.index(m.group("name"))
                expo[idx] += int(m.group("exp") or 1)
        terms.append(((expo[0], expo[1], expo[2]), sign * coeff))
    return Poly(terms)


@lru_cache(maxsize=None)
def mumford_c(n: int) -> Poly:
    """n-th relation class; homogeneous of weighted degree 2n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ONE
    if n == 1:
        return ALPHA
    if n == 2:
        return Fraction(1, 2) * (ALPHA * ALPHA)
    p = (
        ALPHA * mumford_c(n - 1)
        + Fraction(n - 2) * (BETA * mumford_c(n - 2))
        + Fraction(2) * (GAMMA * mumford_c(n - 3))
    )
    p = Fraction(1, n) * p
    assert p.is_homogeneous() and p.degree() == 2 * n
    return p


def xi() -> Poly:
    """alpha*beta + 2*gamma, the distinguished degree-6 class."""
    return ALPHA * BETA + Fraction(2) * GAMMA


def expand_abxi_monomial(i: int, j: int, k: int) -> Poly:
    """alpha^i * beta^j * xi^k expanded in the monomial basis."""
    if min(i, j, k) < 0:
        raise ValueError("exponents must be nonnegative")
    return (ALPHA ** i) * (BETA ** j) * (xi() ** k)
