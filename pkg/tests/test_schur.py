import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import h_product_oracle, partitions, schur_product_oracle
from schurseq.errors import CoefficientOverflow, DegreeMismatch
from schurseq.partitions import prepend_row
from schurseq.schur import (
    SchurExpansion,
    add,
    h_product,
    jacobi_trudi_hook_terms,
    linear_combination,
    multiplicity,
    pieri_multiply,
    restrict_length,
    schur,
    schur_multiply,
    shift,
)

ONE = SchurExpansion.basis(())


@st.composite
def expansions(draw, max_degree=6, max_terms=4):
    d = draw(st.integers(0, max_degree))
    shapes = partitions(d)
    chosen = draw(st.lists(st.sampled_from(shapes), min_size=0, max_size=max_terms))
    coefs = draw(st.lists(st.integers(-5, 5), min_size=len(chosen), max_size=len(chosen)))
    terms = {}
    for lam, c in zip(chosen, coefs):
        terms[lam] = terms.get(lam, 0) + c
    return SchurExpansion(d, terms)


def test_add_examples():
    f = schur(2) + schur(1, 1)
    assert add(f, -schur(1, 1)) == schur(2)
    assert add(SchurExpansion.zero(3), schur(3)) == schur(3)
    with pytest.raises(DegreeMismatch):
        add(schur(2), schur(3))


def test_zero_keeps_degree_and_drops_coefficients():
    z = schur(2) - schur(2)
    assert z.is_zero() and z.degree == 2 and len(z) == 0
    assert z == 0
    assert SchurExpansion(2, {(2,): 0}).terms == {}


def test_shift_examples():
    assert shift(schur(2, 1), (1, 1)) == schur(3, 2)
    f = schur(3).scale(2) - schur(2, 1)
    assert shift(f, (2,)) == schur(5).scale(2) - schur(4, 1)
    assert shift(f, ()) == f


def test_restrict_length_examples():
    assert restrict_length(schur(2) + schur(1, 1), 1) == (schur(2), schur(1, 1))
    f = schur(4) + schur(3, 1) + schur(2, 1, 1)
    assert restrict_length(f, 2) == (schur(4) + schur(3, 1), schur(2, 1, 1))
    short, long_ = restrict_length(f, 0)
    assert short.is_zero() and long_ == f


def test_multiplicity_examples():
    assert multiplicity(schur(2) + schur(1, 1).scale(3), (1, 1)) == 3
    assert multiplicity(SchurExpansion.zero(5), (5,)) == 0
    assert multiplicity(pieri_multiply(schur(3), 2), (4, 1)) == 1


def test_pieri_examples():
    assert pieri_multiply(schur(2), 2) == schur(4) + schur(3, 1) + schur(2, 2)
    assert pieri_multiply(schur(3), 2) == schur(5) + schur(4, 1) + schur(3, 2)
    f = schur(2, 1) + schur(3)
    assert pieri_multiply(f, 0) == f


def test_schur_multiply_examples():
    assert schur_multiply(schur(1), schur(1)) == schur(2) + schur(1, 1)
    assert schur_multiply(schur(2, 1), ONE) == schur(2, 1)
    assert schur_multiply(schur(2), schur(1, 1)) == schur(3, 1) + schur(2, 1, 1)


def test_jacobi_trudi_examples():
    assert jacobi_trudi_hook_terms(()) == [(1, 0, ONE)]
    assert jacobi_trudi_hook_terms((1,)) == [(1, 0, schur(1)), (-1, 1, ONE)]
    total = linear_combination(
        [(s, schur_multiply(schur(4 + i), m)) for s, i, m in jacobi_trudi_hook_terms((2, 1))], 7
    )
    assert total == schur(4, 2, 1)


def test_overflow_is_an_error():
    with pytest.raises(CoefficientOverflow):
        SchurExpansion(1, {(1,): 2**63})
    big = SchurExpansion(1, {(1,): 2**62})
    with pytest.raises(CoefficientOverflow):
        big + big


def test_json_round_trip_is_canonical():
    f = schur(3, 1).scale(-2) + schur(4) + schur(2, 2)
    data = f.to_json()
    assert [t["partition"] for t in data] == ["4", "3,1", "2,2"]
    assert SchurExpansion.from_json(json.dumps(data)) == f


# --- oracles -------------------------------------------------------------------


@pytest.mark.slow
def test_schur_multiply_matches_lr_oracle():
    shapes = [p for w in range(0, 7) for p in partitions(w)]
    for mu in shapes:
        for nu in shapes:
            got = schur_multiply(SchurExpansion.basis(mu), SchurExpansion.basis(nu)).terms
            assert got == schur_product_oracle(mu, nu), (mu, nu)


def test_schur_multiply_exhaustive_small():
    shapes = [p for w in range(0, 5) for p in partitions(w)]
    for mu in shapes:
        for nu in shapes:
            got = schur_multiply(SchurExpansion.basis(mu), SchurExpansion.basis(nu)).terms
            assert got == schur_product_oracle(mu, nu), (mu, nu)


@pytest.mark.parametrize("weights", [(2, 2), (3, 1, 1), (2, 2, 2), (4, 0, 3), (1, 1, 1, 1), (3, 2, 1, 2)])
def test_h_product_matches_kostka_oracle(weights):
    assert h_product(weights).terms == h_product_oracle(weights)


@given(st.integers(0, 8), st.integers(0, 8))
def test_pieri_commutes(a, b):
    assert pieri_multiply(pieri_multiply(ONE, a), b) == pieri_multiply(pieri_multiply(ONE, b), a)


@given(expansions(max_degree=5), st.integers(0, 6))
def test_schur_multiply_by_row_is_pieri(f, r):
    assert schur_multiply(f, schur(r) if r else ONE) == pieri_multiply(f, r)


@given(expansions(max_degree=4), expansions(max_degree=4))
def test_schur_multiply_commutes(f, g):
    assert schur_multiply(f, g) == schur_multiply(g, f)


@given(expansions(), st.sampled_from([p for w in range(5) for p in partitions(w)]))
def test_shift_never_merges_terms(f, lam):
    g = shift(f, lam)
    assert len(g) == len(f)
    assert g.degree == f.degree + sum(lam)


@given(expansions(), st.integers(0, 6))
def test_restrict_length_splits(f, l):
    short, long_ = restrict_length(f, l)
    assert short + long_ == f
    assert not set(short.terms) & set(long_.terms)
    assert all(len(lam) <= l for lam in short.terms)
    assert all(len(lam) > l for lam in long_.terms)


@given(expansions(), expansions())
def test_homogeneity_preserved(f, g):
    for h in (schur_multiply(f, g), pieri_multiply(f, 3)):
        assert all(sum(lam) == h.degree for lam in h.terms)


def test_jacobi_trudi_reconstruction_range():
    for w in range(5):
        for mu in partitions(w):
            for n in range(mu[0] if mu else 0, 9):
                terms = jacobi_trudi_hook_terms(mu)
                assert all(m.degree == w - i for _, i, m in terms)
                total = linear_combination(
                    [(s, schur_multiply(schur(n + i) if n + i else ONE, m)) for s, i, m in terms], n + w
                )
                assert total == SchurExpansion.basis(prepend_row(n, mu)), (n, mu)
