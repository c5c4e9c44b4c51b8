"""Brute-force oracles in finite-dimensional anticommutative algebras.

Two models, both over the rationals with exact arithmetic:

* `ExtElement`: the exterior algebra on anticommuting generators
  psi_1 .. psi_{2g} (each of cohomological degree 3 in the intended use).
  The distinguished class is gamma = -2 sum_{i=1..g} psi_i psi_{i+g}; the
  primitive part Prim_l is the kernel of multiplication by gamma^(g-l+1)
  on exterior degree l, and its dimension has the closed form
  C(2g, l) - C(2g, l-2).

* `JacElement`: the algebra on anticommuting degree-1 generators
  d_1 .. d_{2g} together with a central degree-2 variable u, truncated at
  u-exponent U.  The restriction images of the ring generators are
  w = -2 sum d_i d_{i+g}, 4 u^2, and -2 u d_i; intersecting the subalgebra
  they generate with the ideal u^{g-1} is compared degree by degree with
  the Z/2-invariant part (invariance: |subset| + u-exponent even).
  Ranks are only trusted in degrees <= 2(U - g), where the u-truncation
  cannot distort them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from .linalg import exact_rank

Subset = tuple[int, ...]


def _merge_sign(a: Subset, b: Subset) -> tuple[Subset, int]:
    """Concatenate two sorted index tuples; sign counts the transpositions.

    Returns (sorted merge, 0) when the tuples share an index.
    """
    if set(a) & set(b):
        return (), 0
    merged = []
    inversions = 0
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        else:
            merged.append(b[j])
            inversions += len(a) - i
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return tuple(merged), (-1) ** inversions


class ExtElement:
    """Element of the exterior algebra on integer-indexed odd generators."""

    __slots__ = ("terms", "generator_degree")

    def __init__(self, terms: Mapping[Subset, Fraction] | Iterable = (), generator_degree: int = 3):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Subset, Fraction] = {}
        for s, c in items:
            c = Fraction(c)
            if not c:
                continue
            s = tuple(s)
            if list(s) != sorted(set(s)):
                raise ValueError(f"index set {s} must be strictly increasing")
            clean[s] = clean.get(s, Fraction(0)) + c
            if not clean[s]:
                del clean[s]
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "generator_degree", generator_degree)

    def __setattr__(self, name, value):
        raise AttributeError("ExtElement is immutable")

    @classmethod
    def generator(cls, i: int, generator_degree: int = 3) -> ExtElement:
        return cls({(i,): Fraction(1)}, generator_degree)

    @classmethod
    def scalar(cls, c, generator_degree: int = 3) -> ExtElement:
        return cls({(): Fraction(c)}, generator_degree)

    def is_zero(self) -> bool:
        return not self.terms

    def degree_parts(self) -> dict[int, ExtElement]:
        by_deg: dict[int, dict[Subset, Fraction]] = {}
        for s, c in self.terms.items():
            by_deg.setdefault(len(s) * self.generator_degree, {})[s] = c
        return {
            d: ExtElement(ts, self.generator_degree) for d, ts in by_deg.items()
        }

    def __add__(self, other: ExtElement) -> ExtElement:
        out = dict(self.terms)
        for s, c in other.terms.items():
            v = out.get(s, Fraction(0)) + c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        return ExtElement(out, self.generator_degree)

    def __neg__(self) -> ExtElement:
        return ExtElement(
            {s: -c for s, c in self.terms.items()}, self.generator_degree
        )

    def __sub__(self, other: ExtElement) -> ExtElement:
        return self + (-other)

    def __rmul__(self, c) -> ExtElement:
        if isinstance(c, ExtElement):
            return NotImplemented
        c = Fraction(c)
        return ExtElement(
            {s: c * x for s, x in self.terms.items()}, self.generator_degree
        )

    def __mul__(self, other: ExtElement) -> ExtElement:
        out: dict[Subset, Fraction] = {}
        for s1, c1 in self.terms.items():
            for s2, c2 in other.terms.items():
                merged, sign = _merge_sign(s1, s2)
                if sign == 0:
                    continue
                v = out.get(merged, Fraction(0)) + sign * c1 * c2
                if v:
                    out[merged] = v
                else:
                    del out[merged]
        return ExtElement(out, self.generator_degree)

    def __pow__(self, n: int) -> ExtElement:
        if n < 0:
            raise ValueError("negative power")
        result = ExtElement.scalar(1, self.generator_degree)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"ExtElement({self.terms!r})"


def gamma_element(g: int) -> ExtElement:
    """-2 sum_{i=1..g} psi_i psi_{i+g}, homogeneous of exterior degree 2."""
    if g < 2:
        raise ValueError("genus must be at least 2")
    return ExtElement(
        {(i, i + g): Fraction(-2) for i in range(1, g + 1)}
    )


def prim_dimension_formula(g: int, l: int) -> int:
    """C(2g, l) - C(2g, l-2); comb() is zero for negative lower index."""
    if g < 2 or l < 0 or l > g:
        raise ValueError("need g >= 2 and 0 <= l <= g")
    return comb(2 * g, l) - (comb(2 * g, l - 2) if l >= 2 else 0)


def prim_dimension_bruteforce(g: int, l: int) -> int:
    """dim ker(gamma^(g-l+1)) on exterior degree l, by exact elimination."""
    if not 2 <= g <= 5:
        raise ValueError("brute force restricted to 2 <= g <= 5")
    if not 0 <= l <= g:
        raise ValueError("need 0 <= l <= g")
    n = 2 * g
    power = g - l + 1
    gamma_pow = gamma_element(g) ** power
    domain = list(combinations(range(1, n + 1), l))
    target_size = l + 2 * power
    codomain = {
        s: idx for idx, s in enumerate(combinations(range(1, n + 1), target_size))
    }
    rows = []
    for s in domain:
        image = ExtElement({s: Fraction(1)}) * gamma_pow
        row = [Fraction(0)] * len(codomain)
        for t, c in image.terms.items():
            row[codomain[t]] = c
        rows.append(row)
    return len(domain) - exact_rank(rows)


# ---------------------------------------------------------------------------
# truncated Jacobian model
# ---------------------------------------------------------------------------

class JacElement:
    """Element of the algebra on odd d_1..d_{2g} and central u, u^e = 0 for e > U."""

    __slots__ = ("g", "truncation", "terms")

    def __init__(self, g: int, truncation: int, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[Subset, int], Fraction] = {}
        for (s, e), c in items:
            c = Fraction(c)
            if not c or e > truncation:
                continue
            if e < 0:
                raise ValueError("negative u-exponent")
            s = tuple(s)
            if list(s) != sorted(set(s)) or (s and (s[0] < 1 or s[-1] > 2 * g)):
                raise ValueError(f"bad index set {s}")
            key = (s, e)
            clean[key] = clean.get(key, Fraction(0)) + c
            if not clean[key]:
                del clean[key]
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("JacElement is immutable")

    def _check(self, other: JacElement) -> None:
        if (self.g, self.truncation) != (other.g, other.truncation):
            raise ValueError("mixing elements of different models")

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: JacElement) -> JacElement:
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, Fraction(0)) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return JacElement(self.g, self.truncation, out)

    def __rmul__(self, c) -> JacElement:
        if isinstance(c, JacElement):
            return NotImplemented
        c = Fraction(c)
        return JacElement(
            self.g, self.truncation, {k: c * x for k, x in self.terms.items()}
        )

    def __neg__(self) -> JacElement:
        return (-1) * self

    def __sub__(self, other: JacElement) -> JacElement:
        return self + (-other)

    def __mul__(self, other: JacElement) -> JacElement:
        self._check(other)
        out: dict[tuple[Subset, int], Fraction] = {}
        for (s1, e1), c1 in self.terms.items():
            for (s2, e2), c2 in other.terms.items():
                e = e1 + e2
                if e > self.truncation:
                    continue
                merged, sign = _merge_sign(s1, s2)
                if sign == 0:
                    continue
                key = (merged, e)
                v = out.get(key, Fraction(0)) + sign * c1 * c2
                if v:
                    out[key] = v
                else:
                    del out[key]
        return JacElement(self.g, self.truncation, out)

    def __pow__(self, n: int) -> JacElement:
        if n < 0:
            raise ValueError("negative power")
        result = JacElement(self.g, self.truncation, {((), 0): Fraction(1)})
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, JacElement):
            return NotImplemented
        return (self.g, self.truncation, self.terms) == (
            other.g,
            other.truncation,
            other.terms,
        )

    def __hash__(self):
        return hash((self.g, self.truncation, frozenset(self.terms.items())))

    def is_invariant(self) -> bool:
        """Fixed by the involution d_i -> -d_i, u -> -u."""
        return all((len(s) + e) % 2 == 0 for s, e in self.terms)

    def __repr__(self) -> str:
        return f"JacElement(g={self.g}, U={self.truncation}, {self.terms!r})"


def _jac_generators(g: int, U: int) -> tuple[JacElement, JacElement, list[JacElement]]:
    """Images of alpha, beta, psi_i: w = -2 sum d_i d_{i+g}, 4u^2, -2u d_i."""
    w = JacElement(
        g, U, {((i, i + g), 0): Fraction(-2) for i in range(1, g + 1)}
    )
    four_u2 = JacElement(g, U, {((), 2): Fraction(4)})
    psis = [
        JacElement(g, U, {((i,), 1): Fraction(-2)}) for i in range(1, 2 * g + 1)
    ]
    return w, four_u2, psis


def reliable_degree_window(g: int, U: int) -> int:
    """Largest degree at which u-truncated ranks are trusted."""
    return 2 * (U - g)


def _validate_model_range(g: int, U: int) -> int:
    if not 2 <= g <= 3:
        raise ValueError("Jacobian model restricted to 2 <= g <= 3")
    if U < g + 3:
        raise ValueError("u-truncation too small to give a useful window")
    return U


def restriction_image_dimensions(g: int, U: int | None = None) -> dict[int, int]:
    """Dimension, per degree, of (subalgebra generated by the images) ∩ u^{g-1}·(everything).

    Reported for degrees 0 .. 2(U - g) only.
    """
    U = _validate_model_range(g, U if U is not None else g + 4)
    w, four_u2, psis = _jac_generators(g, U)
    window = reliable_degree_window(g, U)
    result: dict[int, int] = {}
    for degree in range(window + 1):
        basis = {}
        for e in range(0, degree // 2 + 1):
            size = degree - 2 * e
            if size > 2 * g:
                continue
            for s in combinations(range(1, 2 * g + 1), size):
                basis[(s, e)] = len(basis)
        if not basis:
            result[degree] = 0
            continue
        rows = []
        for a in range(0, min(g, degree // 2) + 1):
            for b in range(0, (degree - 2 * a) // 4 + 1):
                rem = degree - 2 * a - 4 * b
                if rem % 3 != 0:
                    continue
                size = rem // 3
                if size > 2 * g:
                    continue
                for s in combinations(range(len(psis)), size):
                    v = (w ** a) * (four_u2 ** b)
                    for idx in s:
                        v = v * psis[idx]
                    if v.is_zero():
                        continue
                    row = [Fraction(0)] * len(basis)
                    for key, c in v.terms.items():
                        row[basis[key]] = c
                    rows.append(row)
        if not rows:
            result[degree] = 0
            continue
        full_rank = exact_rank(rows)
        low_u_columns = [i for (s, e), i in basis.items() if e < g - 1]
        projected = [[r[i] for i in low_u_columns] for r in rows]
        result[degree] = full_rank - exact_rank(projected)
    return result


def invariant_truncated_dimensions(g: int, U: int | None = None) -> dict[int, int]:
    """Dimension, per degree, of the invariant part of u^{g-1}·(Jacobian model).

    Direct parity count: subsets S with exponents e >= g-1, |S| + e even,
    contributing C(2g, |S|) in degree |S| + 2e.  Same degree window as
    `restriction_image_dimensions`.
    """
    U = _validate_model_range(g, U if U is not None else g + 4)
    window = reliable_degree_window(g, U)
    result = {d: 0 for d in range(window + 1)}
    for e in range(g - 1, U + 1):
        for size in range(0, 2 * g + 1):
            d = size + 2 * e
            if d > window:
                continue
            if (size + e) % 2 == 0:
                result[d] += comb(2 * g, size)
    return result
