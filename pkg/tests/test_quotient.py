"""Artinian quotients: Hilbert functions, socles, generator counts, roots."""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from artinlocal.errors import NotArtinian, ResidueNotPower
from artinlocal.polynomials import parse_poly
from artinlocal.quotient import (
    IdealPresentation,
    algebra_report,
    build_quotient,
    hilbert_function,
    ideals_equal,
    leading_forms,
    min_gens,
    nth_root,
    row_space_equal,
)
from artinlocal.scalars import QQ, Scalar


def pres(*texts, nvars=2):
    return IdealPresentation([parse_poly(t, nvars, QQ) for t in texts])


def test_monomial_complete_intersection():
    A = build_quotient(pres("x1^2", "x2^3"))
    assert A.hf == (1, 2, 2, 1)
    assert A.length == 6
    assert A.gorenstein


def test_node_with_tangency():
    p = pres("x1*x2", "x2^2 - x1^3")
    assert hilbert_function(p) == (1, 2, 1, 1)
    assert min_gens(p) == 2


def test_leading_forms_pick_up_hidden_generator():
    p = pres("x1*x2", "x2^2 - x1^3")
    data = leading_forms(p)
    assert data.v_star == 3
    assert {j: c for j, c in data.new_gens.items() if c} == {2: 2, 4: 1}


def test_non_artinian_raises():
    with pytest.raises(NotArtinian):
        build_quotient(pres("x1^2"))


def test_socle_of_gorenstein_is_one_dimensional():
    A = build_quotient(pres("x1^2 - x2^2", "x1*x2"))
    tau, elems = A.socle()
    assert tau == 1 == A.cm_type
    assert A.gorenstein


def test_min_gens_independent_of_generator_order():
    gens = ["x1*x2", "x2^2 - x1^3", "x1^4"]
    counts = {
        min_gens(pres(*perm)) for perm in permutations(gens)
    }
    assert counts == {2}


def test_min_gens_sees_redundant_generator():
    assert min_gens(pres("x1^2", "x2^2", "x1^2 + x2^2")) == 2


def test_min_gens_stable_under_deeper_truncation():
    p = pres("x1*x2", "x2^2 - x1^3")
    base = min_gens(p)
    assert min_gens(p, D=8) == base
    assert min_gens(p, check_stability=True) == base


def test_row_space_equal_detects_difference():
    p1 = pres("x1^2", "x2^2")
    p2 = pres("x1^2 + x2^2", "x2^2")
    p3 = pres("x1^2", "x2^3")
    assert row_space_equal(p1, p2, 6)
    assert not row_space_equal(p1, p3, 6)
    assert ideals_equal(p1, p2)


def test_element_inverse():
    A = build_quotient(pres("x1^3", "x2^2"))
    u = A.element(parse_poly("2 + x1 + x1*x2", 2, QQ))
    assert (u * u.inverse() - A.element(parse_poly("1", 2, QQ))).is_zero()


def test_square_root_of_unit_series():
    A = build_quotient(pres("x1^5", "x2^2", nvars=2))
    a = A.element(parse_poly("1 + x1", 2, QQ))
    r = nth_root(A, a, 2)
    assert (r * r - a).is_zero()


def test_cube_root():
    A = build_quotient(pres("x1^4", "x2^3"))
    a = A.element(parse_poly("8 + x1*x2", 2, QQ))
    r = nth_root(A, a, 3)
    assert (r * r * r - a).is_zero()


def test_root_needs_residue_root():
    A = build_quotient(pres("x1^3", "x2^2"))
    a = A.element(parse_poly("2 + x1", 2, QQ))
    with pytest.raises(ResidueNotPower):
        nth_root(A, a, 2)


def test_root_via_extension():
    A = build_quotient(pres("x1^3", "x2^2"))
    a = A.element(parse_poly("2 + x1", 2, QQ))
    r = nth_root(A, a, 2, allow_extension=True)
    B = r.algebra
    lifted = B.element(parse_poly("2 + x1", 2, B.field))
    assert (r * r - lifted).is_zero()


@given(st.integers(min_value=2, max_value=4), st.integers(min_value=2, max_value=4))
@settings(max_examples=20, deadline=None)
def test_hf_of_power_pair_sums_to_product(a, b):
    A = build_quotient(pres(f"x1^{a}", f"x2^{b}"))
    assert sum(A.hf) == a * b


def test_report_is_stable_json_material():
    rep = algebra_report(build_quotient(pres("x1*x2", "x2^2 - x1^3")))
    assert rep["schema"] == 1
    assert rep["hilbert_function"] == [1, 2, 1, 1]
    assert rep["min_gens"] == 2
