"""Multivariate polynomial arithmetic, parsing, and ring maps."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artinlocal.errors import ParseError
from artinlocal.polynomials import (
    Polynomial,
    RingMap,
    monomials_of_degree,
    parse_poly,
    poly_to_str,
    random_invertible_map,
)
from artinlocal.scalars import QQ


def poly_strategy(nvars=2, max_deg=3):
    monos = [m for d in range(max_deg + 1) for m in monomials_of_degree(nvars, d)]
    coeff = st.fractions(min_value=-9, max_value=9, max_denominator=6)
    return st.dictionaries(st.sampled_from(monos), coeff, max_size=5).map(
        lambda d: Polynomial(
            nvars, QQ, {m: QQ.rfrom(c) for m, c in d.items() if c != 0}
        )
    )


@given(poly_strategy(), poly_strategy(), poly_strategy())
@settings(max_examples=50)
def test_mul_distributes_over_add(p, r, w):
    left = p * (r + w)
    right = p * r + p * w
    assert (left - right).is_zero()


@given(poly_strategy(), poly_strategy())
@settings(max_examples=50)
def test_mul_commutes(p, r):
    assert (p * r - r * p).is_zero()


@given(poly_strategy(), poly_strategy())
@settings(max_examples=50)
def test_mul_trunc_agrees_with_truncated_mul(p, r):
    for D in (2, 4):
        assert (p.mul_trunc(r, D) - (p * r).truncate(D)).is_zero()


@given(poly_strategy())
@settings(max_examples=50)
def test_parser_round_trips_printer(p):
    text = poly_to_str(p)
    assert (parse_poly(text, 2, QQ) - p).is_zero()


def test_parse_basic_forms():
    p = parse_poly("x1^2 - 3/2*x2 + 1", 2, QQ)
    assert p.coeff((2, 0)) == QQ.rone
    assert p.coeff((0, 1)) == QQ.rfrom(Fraction(-3, 2))
    assert p.coeff((0, 0)) == QQ.rone


def test_parse_rejects_garbage():
    for bad in ("x1 +", "x3", "2 ** x1", "(x1", "x1^"):
        with pytest.raises(ParseError):
            parse_poly(bad, 2, QQ)


def test_order_and_degree():
    p = parse_poly("x1^2*x2 + x1^5", 2, QQ)
    assert p.order() == 3
    assert p.degree() == 5
    assert (p.lowest_form() - parse_poly("x1^2*x2", 2, QQ)).is_zero()


def test_substitute_composes():
    p = parse_poly("x1*x2 + x2^3", 2, QQ)
    x1 = parse_poly("x1 + x2", 2, QQ)
    x2 = parse_poly("x2", 2, QQ)
    out = p.substitute([x1, x2], 10)
    want = parse_poly("x1*x2 + x2^2 + x2^3", 2, QQ)
    assert (out - want).is_zero()


def test_ring_map_inverse_composes_to_identity():
    phi = random_invertible_map(3, QQ, 6, 11)
    inv = phi.inverse()
    both = phi.then(inv)
    for i in range(3):
        xi = Polynomial.variable(i, 3, QQ)
        assert (both.apply(xi).truncate(6) - xi).is_zero()


@given(st.integers(min_value=0, max_value=200))
def test_random_map_is_invertible(seed):
    phi = random_invertible_map(2, QQ, 5, seed)
    assert phi.is_invertible()


def test_monomials_of_degree_counts():
    assert len(list(monomials_of_degree(3, 4))) == 15
    assert list(monomials_of_degree(2, 0)) == [(0, 0)]
