from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su2rep.graded import (
    ALPHA,
    BETA,
    GAMMA,
    ONE,
    Poly,
    mumford_c,
    monomial_degree,
    monomial_divides,
)
from su2rep.groebner import (
    CACHE_ENV_VAR,
    GroebnerBasis,
    MonomialIdeal,
    RING_DENOMINATOR,
    _pivot_numerator,
    _subset_numerator,
    buchberger,
    hilbert_series_quotient,
    ideal_generators,
    leading_term_ideal,
    normal_form,
    parse_basis,
    relation_ideal_basis,
    render_basis,
    s_polynomial,
    standard_monomial_dimensions,
)
from su2rep.series import RationalFunction


def test_ideal_generators():
    assert ideal_generators(0) == [ALPHA, Fraction(1, 2) * ALPHA ** 2, mumford_c(3)]
    assert ideal_generators(1) == [mumford_c(2), mumford_c(3), mumford_c(4)]
    for k in range(6):
        assert [g.degree() for g in ideal_generators(k)] == [
            2 * (k + 1),
            2 * (k + 2),
            2 * (k + 3),
        ]
    with pytest.raises(ValueError):
        ideal_generators(-1)


def test_buchberger_monomial_input_is_fixed_point():
    b = buchberger([ALPHA, GAMMA])
    assert b.generators == (ALPHA, GAMMA)


def test_buchberger_smallest_relation_ideal():
    b = buchberger(ideal_generators(0))
    assert b.generators == (ALPHA, GAMMA)


def test_buchberger_two_generator_closure():
    b = buchberger([ALPHA ** 2 - BETA, ALPHA * GAMMA])
    assert b.generators == (ALPHA ** 2 - BETA, ALPHA * GAMMA, BETA * GAMMA)
    assert b.is_reduced()


def test_buchberger_first_nontrivial_ideal():
    b = buchberger(ideal_generators(1))
    xi = ALPHA * BETA + 2 * GAMMA
    assert b.generators == (ALPHA ** 2, xi, ALPHA * GAMMA, GAMMA ** 2)


@pytest.mark.parametrize("k", range(5))
def test_relation_bases_are_reduced_monic_sorted(k):
    b = buchberger(ideal_generators(k), source_k=k)
    assert b.is_reduced()
    assert all(g.leading_coefficient() == 1 for g in b.generators)
    lms = b.leading_monomials()
    keys = [monomial_degree(m) for m in lms]
    assert keys == sorted(keys)


@pytest.mark.parametrize("k", range(4))
def test_all_s_polynomials_reduce_to_zero(k):
    b = buchberger(ideal_generators(k))
    gens = b.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            assert normal_form(s_polynomial(gens[i], gens[j]), b).is_zero()


@pytest.mark.parametrize("k", range(5))
def test_original_generators_reduce_to_zero(k):
    b = buchberger(ideal_generators(k))
    for q in ideal_generators(k):
        assert normal_form(q, b).is_zero()


def test_normal_form_examples():
    b2 = buchberger(ideal_generators(2))
    assert normal_form(ALPHA ** 3 + 2 * (ALPHA * BETA) + 4 * GAMMA, b2).is_zero()
    assert normal_form(ONE, b2) == ONE
    # remainder monomials avoid every leading monomial
    p = (ALPHA + BETA) ** 3
    r = normal_form(p, b2)
    for m in r.terms:
        assert not any(monomial_divides(lm, m) for lm in b2.leading_monomials())
    assert (p - r) == (p - r)  # difference is well defined
    assert normal_form(p - r, b2).is_zero()


def _monomials_of_degree(d):
    out = []
    for i in range(d // 2 + 1):
        for j in range((d - 2 * i) // 4 + 1):
            rem = d - 2 * i - 4 * j
            if rem % 6 == 0:
                out.append((i, j, rem // 6))
    return out


@st.composite
def homogeneous_polys(draw, max_degree=12):
    d = draw(st.sampled_from(range(2, max_degree + 1, 2)))
    monos = _monomials_of_degree(d)
    coeffs = draw(
        st.lists(
            st.integers(-5, 5), min_size=len(monos), max_size=len(monos)
        )
    )
    return Poly(zip(monos, map(Fraction, coeffs)))


@given(homogeneous_polys(), homogeneous_polys())
@settings(max_examples=40, deadline=None)
def test_normal_form_is_multiplicative_modulo_ideal(p, q):
    b = buchberger(ideal_generators(2))
    lhs = normal_form(p * q, b)
    rhs = normal_form(normal_form(p, b) * normal_form(q, b), b)
    assert lhs == rhs


@given(homogeneous_polys(), homogeneous_polys(), st.integers(-7, 7))
@settings(max_examples=40, deadline=None)
def test_normal_form_is_linear(p, q, c):
    b = buchberger(ideal_generators(1))
    assert normal_form(p + Fraction(c) * q, b) == normal_form(p, b) + Fraction(
        c
    ) * normal_form(q, b)


def test_monomial_ideal_antichain_enforced():
    with pytest.raises(ValueError):
        MonomialIdeal(generators=((1, 0, 0), (2, 0, 0)))
    ideal = MonomialIdeal.from_monomials([(2, 0, 0), (1, 0, 0), (0, 0, 1)])
    assert ideal.generators == ((1, 0, 0), (0, 0, 1))
    assert ideal.contains((3, 1, 0))
    assert not ideal.contains((0, 5, 0))


def test_leading_term_ideal_examples():
    assert leading_term_ideal(buchberger([ALPHA, GAMMA])).generators == (
        (1, 0, 0),
        (0, 0, 1),
    )
    lt2 = leading_term_ideal(buchberger(ideal_generators(2)))
    assert (3, 0, 0) in lt2.generators


def test_hilbert_series_examples():
    one_ideal = MonomialIdeal.from_monomials([(1, 0, 0), (0, 0, 1)])
    h = hilbert_series_quotient(one_ideal)
    assert h.reduced_pair() == ((1,), (1, 0, 0, 0, -1))
    empty = hilbert_series_quotient(MonomialIdeal(generators=()))
    assert empty == RationalFunction((1,), RING_DENOMINATOR)
    lt2 = leading_term_ideal(buchberger(ideal_generators(2)))
    assert hilbert_series_quotient(lt2).expand(6).coefficient(6) == 2


@pytest.mark.parametrize("k", range(7))
def test_hilbert_expansion_nonnegative_integers(k):
    b = relation_ideal_basis(k)
    h = hilbert_series_quotient(leading_term_ideal(b)).expand(40)
    for c in h.coeffs:
        assert c.denominator == 1 and c >= 0


@pytest.mark.parametrize("k", range(5))
def test_standard_monomial_counts_match_series(k):
    lt = leading_term_ideal(relation_ideal_basis(k))
    counts = standard_monomial_dimensions(lt, 24)
    series = hilbert_series_quotient(lt).expand(24)
    assert counts == [int(c) for c in series.coeffs]


small_monomials = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))


@given(st.lists(small_monomials, min_size=0, max_size=8))
@settings(max_examples=60)
def test_pivot_numerator_equals_subset_sum(monos):
    ideal = MonomialIdeal.from_monomials(m for m in monos if m != (0, 0, 0))
    assert _pivot_numerator(ideal.generators) == _subset_numerator(ideal.generators)


def test_basis_serialization_roundtrip():
    for k in range(4):
        b = buchberger(ideal_generators(k), source_k=k)
        assert parse_basis(render_basis(b)) == b
    free = GroebnerBasis(generators=(ALPHA,), source_k=None)
    assert parse_basis(render_basis(free)) == free
    with pytest.raises(ValueError):
        parse_basis("not a basis\n")


def test_cache_reproduces_uncached_result(tmp_path, monkeypatch):
    monkeypatch.delenv(CACHE_ENV_VAR, raising=False)
    uncached = relation_ideal_basis(2)
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path))
    first = relation_ideal_basis(2)  # writes the file
    cache_file = tmp_path / "relation-ideal-2.txt"
    assert cache_file.exists()
    assert cache_file.read_text() == render_basis(uncached)
    second = relation_ideal_basis(2)  # reads it back
    assert first == uncached == second
