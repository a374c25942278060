import pytest

from facedescent.combinatorics import Partition, compositions_rearranging_to, partitions_of, refines
from facedescent.config import CapExceeded
from facedescent.genfunc import (
    BivariateSeries,
    cartan_table,
    cartan_via_count,
    cartan_via_series,
    coefficient,
    lie_sum_by_letters,
    lie_sum_by_lyndon_words,
    rhs_series,
    verify_main_theorem,
    word_factor,
)
from facedescent.symfunc import SymFunc, assert_schur_positive, h_of, higher_lie, lie, plethysm, s


def L_of_h(rho, w):
    return plethysm(higher_lie(rho), h_of(w))


def test_degree_one_series():
    series = rhs_series(1)
    assert set(series.terms) == {(Partition(()), Partition(())), (Partition((1,)), Partition((1,)))}
    assert series[(1,), (1,)] == s((1,))


@pytest.mark.parametrize("n", range(1, 9))
def test_chamber_column_is_higher_lie(n):
    series = rhs_series(8)
    for lam in partitions_of(n):
        assert coefficient(series, lam, (1,) * n) == higher_lie(lam)
    assert coefficient(series, (n,), (1,) * n) == lie(n)


def test_z211_coefficients():
    series = rhs_series(4)
    c = lambda lam: coefficient(series, lam, (2, 1, 1))
    assert c((2, 2)) == L_of_h((2,), (1,)) * L_of_h((1,), (2,))
    assert c((2, 1, 1)) == L_of_h((1, 1), (1,)) * L_of_h((1,), (2,))
    assert c((3, 1)) == L_of_h((1,), (1,)) * L_of_h((1,), (1, 2))
    assert c((4,)) == L_of_h((1,), (1, 1, 2))
    assert c((4,)) == s((4,)) + 2 * s((3, 1)) + s((2, 2)) + s((2, 1, 1))
    assert c((1, 1, 1, 1)) == SymFunc.zero()


@pytest.mark.parametrize("n", range(1, 9))
def test_only_refinements_appear(n):
    series = rhs_series(8)
    for (y, z), F in series.degree_part(n).items():
        assert refines(z, y)
        assert F
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            if not refines(mu, lam):
                assert coefficient(series, lam, mu) == SymFunc.zero()


@pytest.mark.parametrize("n", range(1, 9))
def test_coefficients_are_schur_positive(n):
    for (y, z), F in rhs_series(8).degree_part(n).items():
        assert_schur_positive(F, f"({y}, {z})")


def test_coefficient_validation():
    series = rhs_series(3)
    with pytest.raises(ValueError):
        coefficient(series, (2,), (1,))
    with pytest.raises(ValueError):
        coefficient(series, (4,), (4,))
    with pytest.raises(CapExceeded):
        rhs_series(9)


def test_word_factor():
    factor = word_factor((1, 2), 6)
    assert factor[(3,), (2, 1)] == h_of((1, 2))
    assert factor[(3, 3), (2, 2, 1, 1)] == L_of_h((1, 1), (1, 2))
    assert factor[(6,), (2, 2, 1, 1)] == L_of_h((2,), (1, 2))
    assert all(sum(z) <= 6 for _, z in factor.terms)


def test_truncation_is_consistent():
    small, big = rhs_series(5), rhs_series(7)
    for key, F in small.terms.items():
        assert big.terms[key] == F
    assert (small * big).N == 5


def test_cartan_examples():
    series = rhs_series(4)
    for lam, mu, want in [((4,), (2, 1, 1), 1), ((2, 1, 1), (2, 1, 1), 1), ((2, 2), (2, 1, 1), 0), ((3, 1), (2, 1, 1), 1)]:
        assert cartan_via_series(series, lam, mu) == want
        assert cartan_via_count(lam, mu) == want


@pytest.mark.parametrize("n", range(1, 9))
def test_cartan_methods_agree(n):
    rows = cartan_table(n)
    assert all(r["agree"] for r in rows)
    for mu in partitions_of(n):
        total = sum(r["series"] for r in rows if tuple(r["mu"]) == mu)
        assert total == len(compositions_rearranging_to(mu))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_main_theorem_small(n):
    report = verify_main_theorem(n)
    assert report["all_equal"], [r for r in report["pairs"] if not r["equal"]]
    assert len(report["pairs"]) == len(partitions_of(n)) ** 2


def test_main_theorem_threaded_report_is_identical():
    assert verify_main_theorem(3, jobs=3) == verify_main_theorem(3)


def test_lie_sum_identity():
    by_letters = lie_sum_by_letters(6)
    by_words = lie_sum_by_lyndon_words(6)
    assert by_letters == by_words
    assert by_letters[Partition((1, 1))] == lie(2)


def test_json_round_trip():
    series = rhs_series(4)
    rows = series.to_json()
    assert rows[0] == {"y": [1], "z": [1], "ch": s((1,)).to_json("s")}
    assert BivariateSeries.from_json(4, rows).terms == series.terms
