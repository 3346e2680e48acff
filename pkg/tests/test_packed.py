import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import partitions
from schurseq.errors import DegreeMismatch
from schurseq.hooks import direct_hook_product, hook_product_evaluator
from schurseq.packed import (
    DEFAULT_LAYOUT,
    Layout,
    PackedExpansion,
    combine,
    multiply_by_schur,
    three_row_h_product,
)
from schurseq.partitions import Partition
from schurseq.schur import SchurExpansion, h_product, restrict_length, schur, schur_multiply


def test_layout_round_trip():
    for lam in [(), (1,), (5, 3, 3, 1), (127, 127, 1, 1, 1, 1, 1, 1, 1)]:
        assert DEFAULT_LAYOUT.decode(DEFAULT_LAYOUT.encode(lam)) == lam


def test_layout_orders_like_reverse_lex():
    keys = [DEFAULT_LAYOUT.encode(p) for p in partitions(6)]
    assert keys == sorted(keys, reverse=True)


def test_layout_limits():
    with pytest.raises(OverflowError):
        DEFAULT_LAYOUT.encode((128,))
    with pytest.raises(OverflowError):
        DEFAULT_LAYOUT.encode((1,) * 10)
    with pytest.raises(ValueError):
        Layout(rows=10, bits=7)
    with pytest.raises(OverflowError):
        PackedExpansion.zero(128)


def test_round_trip_and_arithmetic():
    f = schur(4, 2).scale(3) - schur(3, 3) + schur(6)
    g = schur(4, 2) + schur(5, 1)
    pf, pg = PackedExpansion.from_expansion(f), PackedExpansion.from_expansion(g)
    assert pf.to_expansion() == f
    assert (pf + pg).to_expansion() == f + g
    assert (pf - pg).to_expansion() == f - g
    assert (-pf).to_expansion() == -f
    assert pf.scale(-2).to_expansion() == f.scale(-2)
    assert (pf - pf).is_zero() and len(pf - pf) == 0
    assert pf.coefficient((4, 2)) == 3 and pf.coefficient((2, 2, 2)) == 0
    assert pf.shift((2, 1)).to_expansion() == f.shift((2, 1))
    assert pf.restrict_length(1).to_expansion() == restrict_length(f, 1)[0]
    with pytest.raises(DegreeMismatch):
        pf + PackedExpansion.from_expansion(schur(5))


def test_combine_matches_dict():
    f, g = schur(3, 1) + schur(2, 2), schur(3, 1).scale(5)
    got = combine([(2, PackedExpansion.from_expansion(f)), (-1, PackedExpansion.from_expansion(g))], 4)
    assert got.to_expansion() == f.scale(2) - g


@given(st.integers(0, 20), st.integers(0, 20), st.integers(0, 20))
def test_three_row_h_product_matches_pieri(a, b, c):
    assert three_row_h_product(a, b, c).to_expansion() == h_product((a, b, c))


@given(
    st.integers(0, 9),
    st.integers(0, 9),
    st.integers(0, 9),
    st.sampled_from([p for w in range(1, 6) for p in partitions(w)]),
)
def test_multiply_by_schur_matches_lr(a, b, c, beta):
    f = h_product((a, b, c))
    got = multiply_by_schur(PackedExpansion.from_expansion(f), beta).to_expansion()
    assert got == schur_multiply(f, SchurExpansion.basis(beta))


def test_multiply_by_schur_on_zero_and_empty():
    z = PackedExpansion.zero(3)
    assert multiply_by_schur(z, (2,)).is_zero() and multiply_by_schur(z, (2,)).degree == 5
    f = PackedExpansion.from_expansion(schur(2, 1))
    assert multiply_by_schur(f, ()) == f


@pytest.mark.parametrize(
    "alpha,lambdas",
    [
        ((0, 0, 0), ((), (), ())),
        ((2, 1, 0), ((1,), (), (1, 1))),
        ((1, 1, 0), ((2,), (1, 1), (1,))),
        ((0, 0, 0), ((2,), (2,), (2,))),
    ],
)
def test_packed_hook_products_match_direct(alpha, lambdas):
    lambdas = tuple(Partition(l) for l in lambdas)
    packed = hook_product_evaluator(alpha, lambdas, engine="packed")
    floor = max(max(l[0] - a, 0) if l else 0 for a, l in zip(alpha, lambdas))
    for n in range(floor, floor + 6):
        assert packed(n).to_expansion() == direct_hook_product(n, alpha, lambdas), n


def test_packed_keys_are_sorted_and_unique():
    f = three_row_h_product(7, 5, 4)
    assert np.all(np.diff(f.keys) > 0)
    assert np.all(f.coefs != 0)
