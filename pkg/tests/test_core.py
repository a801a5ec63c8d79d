from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from cameronlab.core import (
    ALL_CATEGORIES,
    Category,
    Morphism,
    automorphism_group,
    check_retraction_property,
    compose,
    compose_images,
    cyclic_degeneracy,
    degeneracy_map,
    face_map,
    factorize,
    hom_count,
    hom_images,
    identity,
    is_morphism,
    winding,
)

from . import oracles


# membership -----------------------------------------------------------------


@pytest.mark.parametrize(
    "cat, m, n, images, expected",
    [
        ("OA", 2, 3, (1, 3), True),
        ("CA", 4, 2, (1, 2, 1, 2), False),
        ("CA", 3, 3, (1, 1, 2), True),
        ("BA", 3, 3, (3, 2, 1), True),
    ],
)
def test_membership_examples(cat, m, n, images, expected):
    assert is_morphism(cat, m, n, images) is expected
    assert oracles.member(cat, images, n) is expected


def test_winding_of_examples():
    assert winding((1, 2, 1, 2), 2) == 2
    assert winding((1, 1, 2), 3) == 1


@pytest.mark.parametrize("cat", ALL_CATEGORIES)
@pytest.mark.parametrize("m, n", [(m, n) for m in range(1, 5) for n in range(1, 5)])
def test_membership_agrees_with_oracle(cat, m, n):
    for f in product(range(1, n + 1), repeat=m):
        assert is_morphism(cat, m, n, f) == oracles.member(cat.value, f, n), (cat, f)


def test_membership_rejects_malformed_input():
    with pytest.raises(ValueError):
        is_morphism("OA", 2, 3, (1, 4))
    with pytest.raises(ValueError):
        is_morphism("OA", 2, 3, (1,))
    with pytest.raises(ValueError):
        Category.parse("XA")


# enumeration ----------------------------------------------------------------


@pytest.mark.parametrize(
    "cat, m, n, kind, count",
    [("OA", 2, 3, "all", 6), ("CA", 3, 3, "all", 24), ("FA", 2, 2, "all", 4), ("SA", 2, 4, "injective", 12)],
)
def test_hom_count_examples(cat, m, n, kind, count):
    assert hom_count(cat, m, n, kind) == count
    assert len(oracles.brute_hom(cat, m, n, kind)) == count


@pytest.mark.parametrize("cat", ALL_CATEGORIES)
@pytest.mark.parametrize("kind", ["all", "injective", "surjective"])
def test_enumeration_matches_brute_force(cat, kind):
    for m in range(1, 5):
        for n in range(1, 5):
            assert list(hom_images(cat, m, n, kind)) == oracles.brute_hom(cat.value, m, n, kind)


# composition and generators ------------------------------------------------


def test_simplicial_identity_s_after_d():
    s1 = degeneracy_map(2, 1)
    d1 = face_map(2, 1)
    assert compose(s1, d1) == identity("OA", 1)


def test_compose_pointwise():
    g = Morphism("FA", 2, 3, (2, 3))
    f = Morphism("FA", 2, 2, (1, 1))
    assert compose(g, f).images == (2, 2)


def test_compose_rejects_mismatched_objects():
    with pytest.raises(ValueError):
        compose(Morphism("FA", 2, 3, (2, 3)), Morphism("FA", 2, 3, (1, 1)))


def test_generator_examples():
    assert face_map(2, 1).images == (2,)
    assert degeneracy_map(3, 2).images == (1, 2, 2)
    assert cyclic_degeneracy(3).images == (1, 2, 1)


@given(st.sampled_from(ALL_CATEGORIES), st.integers(1, 4), st.integers(1, 4), st.data())
def test_identity_law(cat, m, n, data):
    f = data.draw(st.sampled_from(hom_images(cat, m, n)))
    assert compose_images(tuple(range(1, n + 1)), f) == f
    assert compose_images(f, tuple(range(1, m + 1))) == f


@given(st.sampled_from(ALL_CATEGORIES), st.lists(st.integers(1, 4), min_size=3, max_size=3), st.data())
def test_composition_closed(cat, sizes, data):
    m, n, p = sizes
    f = data.draw(st.sampled_from(hom_images(cat, m, n)))
    g = data.draw(st.sampled_from(hom_images(cat, n, p)))
    assert oracles.member(cat.value, compose_images(g, f), p)


@given(st.sampled_from(ALL_CATEGORIES), st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_composition_associative(cat, a, b, c, data):
    f = data.draw(st.sampled_from(hom_images(cat, a, b)))
    g = data.draw(st.sampled_from(hom_images(cat, b, c)))
    h = data.draw(st.sampled_from(hom_images(cat, c, a)))
    assert compose_images(h, compose_images(g, f)) == compose_images(compose_images(h, g), f)


# factorisation ---------------------------------------------------------------


def test_factorize_example():
    fac = factorize(Morphism("FA", 3, 3, (2, 2, 3)))
    assert fac.surjective_part.images == (1, 1, 2)
    assert fac.injective_part.images == (2, 3)


def test_factorize_injective_and_surjective():
    f = Morphism("OA", 2, 4, (1, 3))
    fac = factorize(f)
    assert fac.surjective_part == identity("OA", 2) and fac.injective_part == f
    g = Morphism("OA", 3, 2, (1, 1, 2))
    fac = factorize(g)
    assert fac.surjective_part == g and fac.injective_part == identity("OA", 2)


@given(st.sampled_from(ALL_CATEGORIES), st.integers(1, 5), st.integers(1, 5), st.data())
def test_factorization_property(cat, m, n, data):
    f = Morphism(cat, m, n, data.draw(st.sampled_from(hom_images(cat, m, n))))
    fac = factorize(f)
    assert fac.recompose() == f
    assert fac.surjective_part.is_surjective
    assert fac.injective_part.is_injective
    assert fac.middle_size == len(set(f.images))


# automorphism groups ---------------------------------------------------------


@pytest.mark.parametrize("cat, n, order", [("CA", 4, 4), ("SA", 3, 6), ("OA", 5, 1)])
def test_group_order_examples(cat, n, order):
    assert automorphism_group(cat, n).order == order


@pytest.mark.parametrize("cat", ALL_CATEGORIES)
def test_group_matches_brute_force_bijections(cat):
    for n in range(1, 6):
        assert automorphism_group(cat, n).order == oracles.group_order(cat.value, n)


def test_fa_group_is_symmetric():
    for n in range(1, 6):
        assert automorphism_group("FA", n).order == factorial(n)


@given(st.sampled_from(ALL_CATEGORIES), st.integers(2, 5), st.data())
def test_group_acts_freely_on_injections(cat, n, data):
    m = data.draw(st.integers(1, n))
    group = automorphism_group(cat, m)
    f = data.draw(st.sampled_from(hom_images(cat, m, n, "injective")))
    orbit = {compose_images(f, s.images) for s in group.elements}
    assert len(orbit) == group.order


@given(st.sampled_from(ALL_CATEGORIES), st.integers(1, 5))
def test_generators_generate(cat, n):
    group = automorphism_group(cat, n)
    assert group.closure(group.generators) | {group.identity.images} == {s.images for s in group.elements}


# retractions -------------------------------------------------------------------


@pytest.mark.parametrize("cat, m, n", [("FA", 2, 4), ("OA", 2, 4), ("CA", 3, 5)])
def test_retraction_examples(cat, m, n):
    assert check_retraction_property(cat, m, n)


def test_retraction_by_exhaustive_search():
    for cat in ALL_CATEGORIES:
        for n in range(1, 5):
            for m in range(1, n + 1):
                surj = oracles.brute_hom(cat.value, n, m, "surjective")
                ok = all(
                    any(tuple(p[x - 1] for x in f) == tuple(range(1, m + 1)) for p in surj)
                    for f in oracles.brute_hom(cat.value, m, n, "injective")
                )
                assert check_retraction_property(cat, m, n) == ok


def test_morphism_parse_round_trip():
    f = Morphism.parse("FA 3->3 [2,2,3]")
    assert f == Morphism.parse("3->3:[2,2,3]", "FA")
    assert str(f) == "FA 3->3 [2,2,3]"
    with pytest.raises(ValueError):
        Morphism.parse("OA 2->3 [3,1]")
