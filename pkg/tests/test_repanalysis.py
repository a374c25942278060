import math
from fractions import Fraction

import pytest

from facedescent.combinatorics import Partition, compositions_rearranging_to, dominates, partitions_of, refines
from facedescent.config import CapExceeded
from facedescent.faces import enumerate_faces
from facedescent.repanalysis import (
    analysis_report,
    ch_of_right_module,
    chamber_character,
    character_of,
    composition_multiplicity,
    face_module_character,
    full_descent_counts,
    isotypic_dimension,
    longest_element_type,
    multiplicity_table,
    projected_space,
    sign_isotypic_type,
)
from facedescent.symfunc import SymFunc, h, h_of, s

import oracles


@pytest.mark.parametrize("n", range(1, 5))
def test_vanishing_unless_refinement(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            space = projected_space(n, lam, mu)
            if not refines(mu, lam):
                assert space.dimension == 0
            assert space.trace == space.dimension


@pytest.mark.parametrize("n", range(1, 5))
def test_top_corner_is_one_dimensional(n):
    assert projected_space(n, (n,), (n,)).dimension == 1


@pytest.mark.parametrize("n", range(1, 5))
def test_dimensions_sum_to_face_count(n):
    total = sum(projected_space(n, lam, mu).dimension for lam in partitions_of(n) for mu in partitions_of(n))
    assert total == oracles.ordered_bell(n)


def test_rank_matches_independent_elimination():
    space = projected_space(3, (2, 1), (1, 1, 1))
    M = space.projector
    rows = [[Fraction(int(M.num[i, j]), M.den) for j in range(M.shape[1])] for i in range(M.shape[0])]
    assert oracles.gauss_rank(rows) == space.dimension


def test_degree_two_by_hand():
    ch = lambda lam, mu: character_of(projected_space(2, lam, mu))
    assert ch((2,), (2,)) == h(2)
    assert ch((1, 1), (1, 1)) == h(2)
    assert ch((2,), (1, 1)) == s((1, 1))
    assert ch((1, 1), (2,)) == SymFunc.zero()


def test_characters_at_degree_four():
    ch = lambda lam: character_of(projected_space(4, lam, (2, 1, 1)))
    assert ch((4,)) == s((4,)) + 2 * s((3, 1)) + s((2, 2)) + s((2, 1, 1))
    assert ch((3, 1)) == ch((4,))
    assert ch((2, 2)) == s((3, 1)) + s((2, 1, 1))
    assert ch((2, 1, 1)) == s((4,)) + s((3, 1)) + s((2, 2))
    assert ch((1, 1, 1, 1)) == SymFunc.zero()


@pytest.mark.parametrize("n", range(1, 6))
def test_right_modules(n):
    for mu in partitions_of(n):
        ch = ch_of_right_module(n, mu)
        assert ch == h_of(mu) * len(compositions_rearranging_to(mu))
    assert ch_of_right_module(n, (n,)) == h(n)
    assert ch_of_right_module(n, (1,) * n) == h_of((1,) * n)


def test_right_module_example():
    assert ch_of_right_module(4, (2, 1, 1)) == h_of((2, 1, 1)) * 3


@pytest.mark.parametrize("n", range(1, 6))
def test_right_modules_add_up_to_the_face_module(n):
    total = sum((ch_of_right_module(n, mu) for mu in partitions_of(n)), SymFunc.zero())
    assert total == face_module_character(n)
    assert sum(
        (character_of(projected_space(n, lam, (1,) * n)) for lam in partitions_of(n)), SymFunc.zero()
    ) == ch_of_right_module(n, (1,) * n)


def test_isotypic_dimensions():
    assert isotypic_dimension(4, (3, 1), (2, 1, 1)) == 18
    for n in range(1, 6):
        assert isotypic_dimension(n, (1,) * n, (1,) * n) == 1
        for nu in partitions_of(n):
            for mu in partitions_of(n):
                d = isotypic_dimension(n, nu, mu)
                if not dominates(nu, mu):
                    assert d == 0


def test_composition_multiplicities():
    assert composition_multiplicity(4, (3, 1), (2, 1, 1), (4,)) == 6
    assert composition_multiplicity(4, (1, 1, 1, 1), (1, 1, 1, 1), (2, 2)) == 1
    assert composition_multiplicity(4, (2, 2), (3, 1), (4,)) == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_multiplicities_fill_the_isotypic_dimensions(n):
    # each simple M_lam of the descent algebra is one-dimensional
    table = multiplicity_table(n)
    for (nu, mu), cell in table.items():
        assert all(v > 0 for v in cell.values())
        assert sum(cell.values()) == isotypic_dimension(n, nu, mu)


@pytest.mark.parametrize("n", range(1, 6))
def test_chamber_route_agrees(n):
    ones = (1,) * n
    for lam in partitions_of(n):
        assert chamber_character(n, lam) == character_of(projected_space(n, lam, ones))


@pytest.mark.parametrize("n", range(1, 7))
def test_sign_isotypic_type(n):
    expected = (2,) * (n // 2) + (1,) * (n % 2)
    got = sign_isotypic_type(n)
    assert got == expected == longest_element_type(n)
    assert full_descent_counts(n) == {Partition(expected): 1}


def test_report_records():
    recs = analysis_report(3, jobs=2)
    assert len(recs) == 9
    assert recs == analysis_report(3)
    first = recs[0]
    assert first["lambda"] == [3] and first["mu"] == [3]
    assert first["ch_schur"] == {"3": 1}
    assert SymFunc.from_json(first["ch"]) == h(3)


def test_caps():
    with pytest.raises(CapExceeded):
        projected_space(6, (6,), (6,))
    with pytest.raises(CapExceeded):
        ch_of_right_module(6, (6,))
