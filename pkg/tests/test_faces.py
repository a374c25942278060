import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from facedescent.combinatorics import Permutation, meet
from facedescent.config import CapExceeded
from facedescent.faces import (
    Face,
    FaceAlgebraElement,
    act,
    act_linear,
    bidigare_image,
    enumerate_faces,
    face_monoid,
    faces_of_type,
    multiply,
    support,
    tits_product,
)

import oracles


def F(*blocks):
    return Face.from_blocks(blocks)


def test_tits_product_example():
    f = F([4], [1, 5], [7], [2, 3, 6])
    g = F([2, 4, 5], [3, 6, 7], [1])
    assert tits_product(f, g) == F([4], [5], [1], [7], [2], [3, 6])
    assert str(f) == "(4,15,7,236)"


def test_identity_and_idempotency():
    one = Face.identity(4)
    for f in enumerate_faces(4):
        assert one * f == f
        assert f * f == f


def test_degree_mismatch():
    with pytest.raises(ValueError):
        tits_product(Face.identity(3), Face.identity(4))
    with pytest.raises(ValueError):
        multiply(FaceAlgebraElement.one(2), FaceAlgebraElement.one(3))
    with pytest.raises(ValueError):
        act(Permutation.identity(3), Face.identity(4))


@pytest.mark.parametrize("n", range(1, 5))
def test_left_regular_band_identity(n):
    faces = enumerate_faces(n)
    for f in faces:
        for g in faces:
            assert f * g * f == f * g


@pytest.mark.parametrize("n", range(1, 5))
def test_support_is_a_semigroup_map(n):
    faces = enumerate_faces(n)
    for f in faces:
        for g in faces:
            assert support(f * g) == meet(support(f), support(g))


def test_support_examples():
    assert str(support(F([4], [1, 5], [7], [2, 3, 6]))) == "{15,236,4,7}"
    assert support(Face.identity(5)).num_blocks == 1


@settings(max_examples=60)
@given(st.permutations(range(1, 6)), st.integers(0, 540))
def test_support_equivariant(images, k):
    pi = Permutation(tuple(images))
    f = enumerate_faces(5)[k]
    assert support(act(pi, f)) == support(f).act(pi)


def test_action_is_a_monoid_automorphism_n3():
    faces = enumerate_faces(3)
    for images in itertools.permutations(range(1, 4)):
        pi = Permutation(images)
        for f in faces:
            for g in faces:
                assert act(pi, f * g) == act(pi, f) * act(pi, g)


def test_identity_permutation_fixes_faces():
    e = Permutation.identity(4)
    assert all(act(e, f) == f for f in enumerate_faces(4))


def test_orbit_of_rays_in_degree_three():
    rays = faces_of_type(3, (1, 2))
    assert len(rays) == 3
    orbit = {act(Permutation(p), rays[0]) for p in itertools.permutations(range(1, 4))}
    assert orbit == set(rays)


@pytest.mark.parametrize("n", range(1, 7))
def test_face_counts_are_ordered_bell(n):
    faces = enumerate_faces(n)
    assert len(faces) == oracles.ordered_bell(n)
    assert len(set(faces)) == len(faces)


def test_face_cap():
    with pytest.raises(CapExceeded):
        enumerate_faces(7)


def test_face_order_is_deterministic():
    faces = enumerate_faces(3)
    assert faces[0] == Face.identity(3)
    assert [len(f) for f in faces] == sorted(len(f) for f in faces)
    assert len(enumerate_faces(3)) == 13


def _random_element(rng, n, size=4):
    faces = enumerate_faces(n)
    return FaceAlgebraElement(n, {rng.choice(faces): Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(size)})


def test_algebra_identity_and_bilinearity():
    rng = random.Random(7)
    one = FaceAlgebraElement.one(4)
    for _ in range(20):
        x, y, z = (_random_element(rng, 4) for _ in range(3))
        assert multiply(one, x) == x
        assert multiply(x + y, z) == multiply(x, z) + multiply(y, z)
        assert multiply(z, x.scale(3)) == multiply(z, x).scale(3)


def test_associativity_random_triples():
    rng = random.Random(2024)
    for _ in range(100):
        x, y, z = (_random_element(rng, 4, 3) for _ in range(3))
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_zero_coefficients_are_dropped():
    f = Face.identity(2)
    x = FaceAlgebraElement(2, {f: 1}) - FaceAlgebraElement(2, {f: 1})
    assert x.terms == {}
    assert not x


def test_records_round_trip():
    rng = random.Random(3)
    x = _random_element(rng, 4, 6)
    assert FaceAlgebraElement.from_records(4, x.to_records()) == x


def test_bidigare_examples():
    rays = bidigare_image({1}, 3)
    assert set(rays.terms) == set(faces_of_type(3, (1, 2)))
    assert all(c == 1 for c in rays.terms.values())
    assert bidigare_image(set(), 4) == FaceAlgebraElement.one(4)
    chambers = bidigare_image({1, 2, 3}, 4)
    assert len(chambers.terms) == 24 and all(len(f) == 4 for f in chambers.terms)


@pytest.mark.parametrize("n", range(2, 6))
def test_bidigare_image_is_invariant(n):
    gens = []
    for i in range(1, n):
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        gens.append(Permutation(tuple(img)))
    for size in range(n):
        for J in itertools.combinations(range(1, n), size):
            x = bidigare_image(J, n)
            assert all(act_linear(g, x) == x for g in gens)


def test_products_of_invariants_are_invariant_n4():
    # products land in the invariant subalgebra: coefficients constant on S_4-orbits
    subsets = [J for k in range(4) for J in itertools.combinations(range(1, 4), k)]
    perms = [Permutation(p) for p in itertools.permutations(range(1, 5))]
    for J in subsets:
        for K in subsets:
            prod = multiply(bidigare_image(J, 4), bidigare_image(K, 4))
            for f, c in prod.terms.items():
                assert all(prod.coefficient(act(pi, f)) == c for pi in perms)


def test_product_table_agrees_with_direct_products():
    mon = face_monoid(3)
    for i, f in enumerate(mon.faces):
        for j, g in enumerate(mon.faces):
            assert mon.faces[mon.table[i, j]] == f * g
