from fractions import Fraction

import pytest

from facedescent.combinatorics import Partition, SetPartition, block_size_type, leq, partitions_of, refines, set_partitions_of
from facedescent.config import CapExceeded
from facedescent.faces import Face, FaceAlgebraElement, enumerate_faces, multiply, support
from facedescent.idempotents import (
    FamilyCheckError,
    IdempotentFamily,
    build_family,
    orbit_annihilation_check,
    orbit_representative,
    verify_family,
)
from facedescent.idempotents import cached_family

import oracles


def test_degree_one_is_the_identity():
    fam = build_family(1)
    assert list(fam.by_support.values()) == [FaceAlgebraElement.one(1)]


def test_degree_three_family():
    fam = build_family(3)
    assert len(fam.by_support) == 5
    total = sum(fam.by_support.values(), FaceAlgebraElement.zero(3))
    assert total == FaceAlgebraElement.one(3)
    for X, E in fam.by_support.items():
        assert sum((c for f, c in E.terms.items() if support(f) == X), Fraction(0)) == 1


def test_degree_two_by_hand():
    fam = build_family(2)
    split = SetPartition.from_blocks([[1], [2]])
    c12, c21 = Face.from_blocks([[1], [2]]), Face.from_blocks([[2], [1]])
    assert fam[split] == FaceAlgebraElement(2, {c12: Fraction(1, 2), c21: Fraction(1, 2)})
    assert fam[(2,)] == FaceAlgebraElement(2, {Face.identity(2): 1, c12: Fraction(-1, 2), c21: Fraction(-1, 2)})


@pytest.mark.parametrize("n", range(1, 4))
def test_orthogonality_by_sparse_products(n):
    E = build_family(n).by_support
    for X, EX in E.items():
        for Y, EY in E.items():
            assert multiply(EX, EY) == (EX if X == Y else FaceAlgebraElement.zero(n))


def test_orthogonality_by_sparse_products_degree4():
    E = build_family(4).by_support
    reps = [orbit_representative(lam) for lam in partitions_of(4)]
    for X in reps:
        for Y, EY in E.items():
            assert multiply(E[X], EY) == (E[X] if X == Y else FaceAlgebraElement.zero(4))


@pytest.mark.slow
def test_orthogonality_by_sparse_products_degree5():
    E = build_family(5).by_support
    for lam in partitions_of(5):
        X = orbit_representative(lam)
        for Y, EY in E.items():
            if Y.num_blocks >= X.num_blocks - 1:
                assert multiply(E[X], EY) == (E[X] if X == Y else FaceAlgebraElement.zero(5))


@pytest.mark.parametrize("n", range(1, 5))
def test_symmetric_and_direct_builds_agree(n):
    a = build_family(n)
    b = build_family(n, use_symmetry=False)
    assert a.by_support == b.by_support


@pytest.mark.parametrize("n", range(1, 5))
def test_annihilation_and_triangularity_by_sparse_products(n):
    E = build_family(n).by_support
    for f in enumerate_faces(n):
        sf = support(f)
        single = FaceAlgebraElement(n, {f: 1})
        for X, EX in E.items():
            prod = multiply(single, EX)
            if not leq(X, sf):
                assert not prod
            elif X == sf:
                rest = prod - single
                assert all(leq(support(g), X) and support(g) != X for g in rest.terms)


def test_basis_from_face_products_degree4():
    fam = build_family(4)
    faces = enumerate_faces(4)
    index = {f: i for i, f in enumerate(faces)}
    rows = []
    for f in faces:
        v = multiply(FaceAlgebraElement(4, {f: 1}), fam[support(f)])
        row = [Fraction(0)] * len(faces)
        for g, c in v.terms.items():
            row[index[g]] = c
        rows.append(row)
    assert len(rows) == 75
    assert oracles.gauss_rank(rows) == 75


@pytest.mark.parametrize("n", range(1, 6))
def test_orbit_annihilation_is_empty(n):
    assert orbit_annihilation_check(cached_family(n)) == []


def test_orbit_annihilation_small_case_directly():
    fam = build_family(3)
    f = Face.from_blocks([[1, 2], [3]])
    assert not refines((3,), block_size_type(support(f)))
    assert not multiply(FaceAlgebraElement(3, {f: 1}), fam[(3,)])
    assert multiply(FaceAlgebraElement(3, {f: 1}), fam[(2, 1)])


def test_orbit_sums():
    fam = build_family(4)
    for lam in partitions_of(4):
        members = [X for X in set_partitions_of(4) if block_size_type(X) == lam]
        assert fam[lam] == sum((fam[X] for X in members), FaceAlgebraElement.zero(4))
        assert multiply(fam[lam], fam[lam]) == fam[lam]


def test_orbit_representative_uses_consecutive_blocks():
    assert orbit_representative(Partition((2, 1, 1))) == SetPartition.from_blocks([[1, 2], [3], [4]])


def test_verify_reports_counts():
    counts = verify_family(build_family(3, verify=False))
    assert counts["completeness"] == 1 and counts["products"] == 25
    assert "face_products" not in verify_family(build_family(3, verify=False), exhaustive_products=False)


def test_broken_family_is_rejected():
    fam = build_family(3)
    E = dict(fam.by_support)
    a, b = [X for X in E if block_size_type(X) == (2, 1)][:2]
    E[a], E[b] = E[b], E[a]
    with pytest.raises(FamilyCheckError, match="support"):
        verify_family(IdempotentFamily(3, E))
    scaled = dict(fam.by_support)
    top = SetPartition.from_blocks([[1, 2, 3]])
    chambers = SetPartition.from_blocks([[1], [2], [3]])
    scaled[top] = scaled[top] + scaled[chambers]
    scaled[chambers] = FaceAlgebraElement.zero(3)
    with pytest.raises(FamilyCheckError):
        verify_family(IdempotentFamily(3, scaled))


def test_json_round_trip():
    fam = build_family(3)
    again = IdempotentFamily.from_json(fam.to_json())
    assert again.by_support == fam.by_support
    assert again.by_orbit == fam.by_orbit


def test_cap():
    with pytest.raises(CapExceeded):
        build_family(7)
