"""Binomial calculus, generator-count bounds, and lex-segment ideals."""

import math

import pytest
from hypothesis import given, strategies as st

from artinlocal.bounds import (
    binomial_expansion,
    bound_report,
    erv_upper,
    hf_admissible,
    lex_segment,
    lower_bound,
    macaulay_shift,
    t_and_r,
)
from artinlocal.quotient import hilbert_function, min_gens


@given(st.integers(min_value=1, max_value=400), st.integers(min_value=1, max_value=6))
def test_binomial_expansion_reconstructs(n, i):
    parts = binomial_expansion(n, i)
    ks = [k for k, j in parts]
    js = [j for k, j in parts]
    assert sum(math.comb(k, j) for k, j in parts) == n
    assert js == list(range(i, i - len(parts), -1))
    assert all(a > b for a, b in zip(ks, ks[1:]))
    assert all(k >= j for k, j in parts)


def test_shift_worked_values():
    assert macaulay_shift(5, 2) == 7
    assert macaulay_shift(3, 2) == 4
    assert macaulay_shift(0, 3) == 0


@given(st.integers(min_value=0, max_value=200), st.integers(min_value=1, max_value=5))
def test_shift_is_monotone(n, i):
    assert macaulay_shift(n + 1, i) >= macaulay_shift(n, i)


def test_t_and_r_worked_values():
    assert t_and_r(7, 3) == (2, 3)
    assert t_and_r(5, 3) == (2, 1)


def test_upper_bound_worked_values():
    assert erv_upper(5, 3) == 6
    assert erv_upper(7, 3) == 7
    # e = h + 2 for h >= 3 gives exactly C(h+1, 2)
    for h in (3, 4, 5):
        assert erv_upper(h + 2, h) == math.comb(h + 1, 2)
        assert erv_upper(h + 4, h) == math.comb(h + 1, 2) + 1


def test_lower_bound_value():
    assert lower_bound(7, 3) == math.comb(5, 2) - 7


def test_hf_admissible():
    assert hf_admissible((1, 3, 2, 1))
    assert hf_admissible((1, 2, 2, 2, 1, 1, 1))
    assert not hf_admissible((1, 2, 4))
    assert not hf_admissible((2, 1))


def test_lex_segment_worked_examples():
    p = lex_segment((1, 2, 1, 1))
    texts = sorted(repr(g) for g in p.gens)
    assert texts == ["x1*x2", "x1^2", "x2^4"]
    assert hilbert_function(p) == (1, 2, 1, 1)
    assert min_gens(p) == 3

    p = lex_segment((1, 2, 2, 1))
    texts = sorted(repr(g) for g in p.gens)
    assert texts == ["x1*x2^2", "x1^2", "x2^4"]
    assert min_gens(p) == 3


def test_lex_segment_rejects_inadmissible():
    with pytest.raises(ValueError):
        lex_segment((1, 2, 4))


def test_lex_segment_preserves_hf():
    for hf in [(1, 3, 2, 1), (1, 2, 2, 2, 1, 1, 1), (1, 4, 2, 1, 1)]:
        assert hilbert_function(lex_segment(hf)) == hf


def test_bound_report_dict():
    rep = bound_report(7, 3).as_dict()
    assert rep == {"schema": 1, "e": 7, "h": 3, "t": 2, "r": 3,
                   "lower": 3, "upper": 7}
