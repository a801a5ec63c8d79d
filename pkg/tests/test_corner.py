import pytest

from cameronlab.algebra import linear_characters, normalized_dim, psi
from cameronlab.core import Category, automorphism_group
from cameronlab.corner import (
    automorphism_part,
    corner_algebra,
    match_character,
    primitive_idempotents,
    radical_basis,
)

CASES = [(cat, n) for cat in (Category.OA, Category.CA, Category.BA, Category.SA) for n in range(1, 5)]


@pytest.mark.parametrize("cat, n", CASES)
def test_idempotents_complete_and_orthogonal(cat, n):
    ids = primitive_idempotents(corner_algebra(cat, n))
    total = ids[0]
    for e in ids[1:]:
        total = total + e
    assert total == psi(cat, n)
    for i, e in enumerate(ids):
        assert e * e == e
        for f in ids[i + 1:]:
            assert (e * f).is_zero and (f * e).is_zero


@pytest.mark.parametrize("n", range(1, 6))
def test_oa_corner_is_a_line(n):
    E = corner_algebra(Category.OA, n)
    assert E.dim == 1
    assert primitive_idempotents(E) == [psi(Category.OA, n)]


def test_ca3_corner():
    E = corner_algebra(Category.CA, 3)
    assert E.dim == 5 == normalized_dim(Category.CA, 3, 3)
    assert E.dim <= automorphism_group(Category.CA, 3).order + automorphism_group(Category.CA, 2).order
    assert len(radical_basis(E)) == 1
    assert len(primitive_idempotents(E)) == 3


@pytest.mark.parametrize("cat, n", CASES)
def test_corner_dim_matches_normalized_hom(cat, n):
    assert corner_algebra(cat, n).dim == normalized_dim(cat, n, n)


@pytest.mark.parametrize("cat, n", CASES)
def test_unit_and_structure_constants(cat, n):
    E = corner_algebra(cat, n)
    for i in range(E.dim):
        basis_vec = [int(i == j) for j in range(E.dim)]
        assert E.mul(E.unit, basis_vec) == basis_vec
        assert E.mul(basis_vec, E.unit) == basis_vec
    for x in E.basis:
        assert E.element(E.coords(x)) == x


@pytest.mark.parametrize("cat, n", CASES)
def test_radical_is_nilpotent_ideal(cat, n):
    E = corner_algebra(cat, n)
    rad = radical_basis(E)
    for r in rad:
        power = r
        for _ in range(E.dim):
            power = E.mul(power, r)
        assert not any(power)


@pytest.mark.parametrize("cat, n", CASES)
def test_linear_characters_each_match_one_idempotent(cat, n):
    chars = linear_characters(cat, n)
    ids = primitive_idempotents(corner_algebra(cat, n))
    matched = [match_character(e, chars) for e in ids]
    hits = [c for c in matched if c is not None]
    assert len(hits) == len(set(hits)) == len(chars)


@pytest.mark.parametrize("cat, n", CASES)
def test_group_image_of_idempotents_is_complete(cat, n):
    # the images in kG_n add up to the identity of the group algebra
    total: dict = {}
    for e in primitive_idempotents(corner_algebra(cat, n)):
        for k, v in automorphism_part(e).items():
            total[k] = total.get(k, 0) + v
    assert {k: v for k, v in total.items() if v} == {tuple(range(1, n + 1)): 1}
