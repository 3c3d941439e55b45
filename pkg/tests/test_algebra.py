"""Core algebra: rings, polynomials, the interchange grammar, graded free
modules, and exact strand linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shfc.modules import GradedFreeModule, GradedMap, binom, matrix_rank
from shfc.rings import (
    AlgebraError,
    ParseError,
    Polynomial,
    Ring,
    RingMismatchError,
    grevlex_key,
    monomials_of_degree,
    parse_polynomial,
)

R2 = Ring(32003, 3)
Q1 = Ring(0, 2)


# --- ring construction -------------------------------------------------------

def test_ring_validation():
    Ring(0, 2)
    Ring(2, 3)
    Ring(32003, 4)
    with pytest.raises(AlgebraError):
        Ring(4, 3)  # composite characteristic
    with pytest.raises(AlgebraError):
        Ring(-3, 3)
    with pytest.raises(AlgebraError):
        Ring(2**31 + 11, 3)  # too large for the int64 elimination path
    with pytest.raises(AlgebraError):
        Ring(32003, 1)  # fewer than two variables means no projective line


def test_field_arithmetic():
    assert R2.coeff(32003) == 0
    assert R2.cinv(2) == (32003 + 1) // 2
    assert R2.cmul(R2.cinv(7), 7) == 1
    assert Q1.coeff(3) == Fraction(3)
    assert Q1.cinv(Fraction(2, 3)) == Fraction(3, 2)


# --- monomial orders ----------------------------------------------------------

def test_grevlex_degree_two_classic_order():
    monos = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    ordered = sorted(monos, key=grevlex_key, reverse=True)
    assert ordered == monos  # x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2


def test_monomials_of_degree_complete_and_sorted():
    for v, d in ((2, 3), (3, 2), (4, 3)):
        monos = monomials_of_degree(v, d)
        assert len(monos) == binom(v - 1 + d, d)
        assert len(set(monos)) == len(monos)
        assert all(sum(m) == d for m in monos)
        assert monos == sorted(monos, reverse=True)  # descending lex


# --- parsing and printing -------------------------------------------------------

def test_parse_basic():
    f = parse_polynomial(R2, "x0^2*x1 + 3*x2^3")
    assert f.terms == {(2, 1, 0): 1, (0, 0, 3): 3}
    assert parse_polynomial(R2, "  x0 *  x0  ") == parse_polynomial(R2, "x0^2")
    assert parse_polynomial(R2, "2*3*x1") == parse_polynomial(R2, "6*x1")
    assert parse_polynomial(R2, "x0 - x0").is_zero()
    assert parse_polynomial(R2, "0").is_zero()
    assert parse_polynomial(R2, "32003*x0").is_zero()  # reduced mod p
    assert parse_polynomial(Q1, "-x0 + 2*x1").terms == {(1, 0): -1, (0, 1): 2}


def test_parse_error_columns():
    with pytest.raises(ParseError) as err:
        parse_polynomial(R2, "x0 + ")
    assert err.value.column == 6
    with pytest.raises(ParseError) as err:
        parse_polynomial(R2, "x0 ^ y")  # '^' binds to the variable token
    assert "expected '+' or '-'" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_polynomial(R2, "x7")
    assert "out of range" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_polynomial(R2, "")
    assert "empty" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_polynomial(R2, "x0 & x1")
    assert err.value.column == 4


def coefficients(ring):
    if ring.characteristic:
        return st.integers(min_value=0, max_value=ring.characteristic - 1)
    return st.integers(min_value=-9, max_value=9)


def polynomials(ring, max_terms=5, max_exp=3):
    mono = st.tuples(*[st.integers(0, max_exp) for _ in range(ring.num_vars)])
    return st.dictionaries(mono, coefficients(ring), max_size=max_terms).map(
        lambda terms: Polynomial(ring, terms)
    )


@settings(max_examples=150)
@given(st.sampled_from([R2, Q1, Ring(5, 3)]).flatmap(lambda r: polynomials(r)))
def test_print_parse_round_trip(f):
    assert parse_polynomial(f.ring, f.to_string()) == f


@settings(max_examples=100)
@given(st.tuples(polynomials(R2), polynomials(R2), polynomials(R2)))
def test_ring_laws_mod_p(fgh):
    f, g, h = fgh
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + Polynomial.zero(R2) == f
    assert f * Polynomial.constant(R2, 1) == f
    assert f - f == Polynomial.zero(R2)


@settings(max_examples=60)
@given(st.tuples(polynomials(Q1), polynomials(Q1)))
def test_ring_laws_char_zero(fg):
    f, g = fg
    assert f * g == g * f
    assert (f + g) - g == f


def test_homogeneous_degree():
    assert parse_polynomial(R2, "x0^2 + x1*x2").homogeneous_degree() == 2
    with pytest.raises(AlgebraError):
        parse_polynomial(R2, "x0 + x1^2").homogeneous_degree()
    assert parse_polynomial(R2, "5").homogeneous_degree() == 0


def test_ring_mismatch_rejected():
    with pytest.raises(RingMismatchError):
        parse_polynomial(R2, "x0") + parse_polynomial(Q1, "x0")


def test_evaluate():
    f = parse_polynomial(R2, "x0^2*x1 + 2*x2")
    assert f.evaluate([1, 1, 1]) == 3
    assert f.evaluate([2, 3, 0]) == 12
    assert f.evaluate([0, 0, 0]) == 0
    g = parse_polynomial(Q1, "x0^3 - x1")
    assert g.evaluate([2, 5]) == 3
    assert g.evaluate([Fraction(1, 2), 0]) == Fraction(1, 8)
    with pytest.raises(AlgebraError):
        f.evaluate([1, 2])


def test_substitute_powers_is_frobenius_in_char_p():
    ring = Ring(5, 3)
    f = parse_polynomial(ring, "2*x0^2 + 3*x1*x2")
    power = Polynomial.constant(ring, 1)
    for _ in range(5):
        power = power * f
    assert f.substitute_powers(5) == power


# --- graded free modules and strands ------------------------------------------

def test_strand_dimension_and_basis():
    free = GradedFreeModule(R2, (0, 1))  # S + S(-1)
    assert free.strand_dimension(0) == 1
    assert free.strand_dimension(1) == 3 + 1
    assert free.strand_dimension(2) == 6 + 3
    basis = free.strand_basis(1)
    assert len(basis) == 4
    assert all(sum(m) + free.degrees[j] == 1 for j, m in basis)
    assert free.dual().degrees == (0, -1)
    assert free.shifted(2).degrees == (-2, -1)


def test_graded_map_validate():
    x0 = parse_polynomial(R2, "x0")
    target = GradedFreeModule(R2, (0,))
    good = GradedMap.from_columns(GradedFreeModule(R2, (1,)), target, [[x0]])
    good.validate()
    bad = GradedMap.from_columns(GradedFreeModule(R2, (2,)), target, [[x0]])
    with pytest.raises(AlgebraError):
        bad.validate()


def test_strand_matrix_multiplication_by_variable():
    x0 = parse_polynomial(Q1, "x0")
    phi = GradedMap.from_columns(
        GradedFreeModule(Q1, (1,)), GradedFreeModule(Q1, (0,)), [[x0]]
    )
    strand = phi.strand_matrix(2)  # degree-2 part of S(-1) -> S on P^1
    assert strand.shape == (3, 2)
    assert strand.rank() == 2


def test_matrix_rank_agrees_across_fields():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert matrix_rank(rows, R2) == 2
    assert matrix_rank([[Fraction(a) for a in r] for r in rows], Q1) == 2
    assert matrix_rank([], R2) == 0
    assert matrix_rank([[0, 0], [0, 0]], R2) == 0


@settings(max_examples=80)
@given(
    st.lists(
        st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=4
    )
)
def test_rank_transpose_invariant(rows):
    cols = [list(c) for c in zip(*rows)]
    assert matrix_rank(rows, R2) == matrix_rank(cols, R2)
    q_rows = [[Fraction(a) for a in r] for r in rows]
    q_cols = [[Fraction(a) for a in r] for r in cols]
    assert matrix_rank(q_rows, Q1) == matrix_rank(q_cols, Q1)
    # small integer matrices: rank over Q equals rank mod a large prime
    assert matrix_rank(q_rows, Q1) == matrix_rank(rows, R2)
