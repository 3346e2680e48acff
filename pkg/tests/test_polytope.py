import itertools
from math import comb

import pytest

from oracles import all_staircase_arrays, h_product_oracle, partitions, schur_product_oracle
from schurseq.errors import FaceNotDefinedForK, NegativeWeight, ShapeMismatch, UnsortedAlpha
from schurseq.polytope import (
    PartialMatrix,
    affine_dimension,
    affine_witnesses,
    border_product,
    enumerate_centres,
    enumerate_points,
    face_filter,
    homogeneous_product,
    is_member,
    lattice_points,
    product_with_border,
)
from schurseq.schur import SchurExpansion, h_product, schur
from schurseq.verify import telescoping_counts


def pm(*rows):
    return PartialMatrix.from_nested(rows)


def sorted_alphas(k, top):
    return [a for a in itertools.product(range(top + 1), repeat=k) if list(a) == sorted(a, reverse=True)]


def test_membership_examples():
    assert is_member(pm([2, 0], [2]), 2, (0, 0))
    assert not is_member(pm([2, 0], [3]), 2, (0, 0))
    assert is_member(pm([3, 2], [0]), 2, (1, 0))
    with pytest.raises(ShapeMismatch):
        is_member(pm([2, 0], [2]), 2, (0, 0, 0))
    with pytest.raises(UnsortedAlpha):
        is_member(pm([2, 0], [2]), 2, (0, 1))


def test_staircase_shape_is_enforced():
    with pytest.raises(ShapeMismatch):
        pm([1, 2], [3, 4])


def test_enumeration_examples():
    assert enumerate_points(2, 2, (0, 0)) == [pm([2, 0], [2]), pm([2, 1], [1]), pm([2, 2], [0])]
    assert enumerate_points(1, 3, (0,)) == [pm([3])]
    assert enumerate_points(3, 0, (0, 0, 0)) == [pm([0, 0, 0], [0, 0], [0])]


def test_homogeneous_product_examples():
    assert homogeneous_product(2, 2, (0, 0)) == schur(4) + schur(3, 1) + schur(2, 2)
    assert homogeneous_product(2, 2, (1, 0)) == schur(5) + schur(4, 1) + schur(3, 2)
    assert homogeneous_product(1, 3, (0,)) == schur(3)


def test_face_examples():
    pts = enumerate_points(2, 2, (0, 0))
    d1 = face_filter(pts, "D1K")
    assert d1 == [pm([2, 2], [0])]
    assert face_filter(d1, "D21") == []
    assert face_filter(enumerate_points(1, 3, (0,)), "D1K") == []
    with pytest.raises(FaceNotDefinedForK):
        face_filter(enumerate_points(1, 1, (0,)), "D21")
    with pytest.raises(FaceNotDefinedForK):
        face_filter(pts, "D22")
    with pytest.raises(FaceNotDefinedForK):
        face_filter(pts, "nope")


def test_k4_faces_are_subsets():
    pts = enumerate_points(4, 2, (1, 0, 0, 0))
    for face in ("D1K", "D21", "D211_SECOND", "D22"):
        kept = face_filter(pts, face)
        assert set(kept) <= set(pts)


def test_lattice_points_match_full_box_scan():
    for k in (1, 2, 3):
        for n in range(0, 4):
            for alpha in sorted_alphas(k, 2):
                w = [n + a for a in alpha]
                got = [p.rows for p in enumerate_points(k, n, alpha)]
                assert got == all_staircase_arrays(w), (k, n, alpha)
                assert all(is_member(PartialMatrix(r), n, alpha) for r in got)


def test_point_count_equals_ssyt_count():
    for k in (1, 2, 3):
        for n in range(0, 6):
            for alpha in sorted_alphas(k, 2):
                w = tuple(n + a for a in alpha)
                assert len(enumerate_points(k, n, alpha)) == sum(h_product_oracle(w).values())


def test_unsorted_and_flagged_weights():
    assert _shape_sum(lattice_points([1, 3])) == h_product((1, 3))
    only_row_one = lattice_points([2, 1, 1], allowed=lambda i, j: i == 1)
    assert only_row_one == [pm([2, 1, 1], [0, 0], [0])]
    with pytest.raises(NegativeWeight):
        lattice_points([2, -1])


def _shape_sum(points):
    terms = {}
    for p in points:
        lam = tuple(x for x in p.row_sums() if x)
        terms[lam] = terms.get(lam, 0) + 1
    return SchurExpansion(sum(points[0].row_sums()), terms)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_telescoping_small(k):
    for n in range(2, 5):
        for alpha in sorted_alphas(k, 1):
            t = telescoping_counts(k, n, alpha)
            assert t["D1K"] == t["D1K_expected"]
            if k >= 2:
                assert t["D21"] == t["D21_expected"]


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_witnesses_are_members_with_full_dimension(k):
    for n in (1, 2):
        alpha = tuple(max(k - 1 - i, 0) for i in range(k))
        pts = affine_witnesses(k, n, alpha)
        assert len(pts) == comb(k, 2) + 1
        assert len(set(pts)) == len(pts)
        assert all(is_member(p, n, alpha) for p in pts)
        assert affine_dimension(pts) == comb(k, 2)


def test_literal_witnesses_degenerate_from_k4():
    assert affine_dimension(affine_witnesses(3, 2, (0, 0, 0), literal=True)) == 3
    assert affine_dimension(affine_witnesses(4, 2, (0, 0, 0, 0), literal=True)) < 6


def test_full_polytope_dimension_for_k3():
    assert affine_dimension(enumerate_points(3, 3, (0, 0, 0))) == 3


def test_centre_examples():
    assert len(enumerate_centres(3, ())) == 1
    centres = enumerate_centres(1, (1,))
    assert len(centres) == 2
    assert sorted(c.filling for c in centres) == [((),), ((), (1,))]
    two = enumerate_centres(2, (1,))
    assert len(two) == len(enumerate_centres(2, (1,))) == 4


def test_centre_entries():
    c = next(c for c in enumerate_centres(2, (1,)) if c.filling == ((), (1,), (2,)))
    assert c.entry(1, 1) is None and c.entry(2, 1) == 1 and c.entry(3, 1) == 2
    assert c.full_rows() == 3 and c.c(1) == 1 and c.c(2) == 1


def test_border_product_matches_lr_oracle():
    for k in (1, 2, 3):
        for beta in [p for w in range(1, 4) for p in partitions(w)]:
            for n in range(0, 4):
                for alpha in sorted_alphas(k, 1):
                    w = [n + a for a in alpha]
                    got = product_with_border(k, n, alpha, beta)
                    expected = {}
                    for shape, c in h_product_oracle(tuple(w)).items():
                        for lam, d in schur_product_oracle(shape, beta).items():
                            expected[lam] = expected.get(lam, 0) + c * d
                    assert got.terms == expected, (k, n, alpha, beta)


def test_border_with_empty_beta_is_homogeneous():
    assert product_with_border(3, 2, (1, 0, 0), ()) == homogeneous_product(3, 2, (1, 0, 0))


def test_literal_border_overcounts():
    assert border_product([1, 1, 1], (1,), literal=True) != border_product([1, 1, 1], (1,))
    assert border_product([2, 2], (1,), literal=True) == border_product([2, 2], (1,))


def test_strict_border_reports_negative_weights():
    with pytest.raises(NegativeWeight):
        border_product([0, 0], (1,), strict=True)
    assert border_product([0, 0], (1,)) == schur(1)
