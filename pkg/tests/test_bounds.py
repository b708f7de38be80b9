import math
from fractions import Fraction

import pytest

from sumconn.bounds import (
    tree_max_bound,
    unicyclic_bound_profile,
    unicyclic_max_bound,
    unicyclic_top_two,
)
from sumconn.canon import canonical_code
from sumconn.construct import (
    DeltaRangeError,
    cycle_spider_family,
    spider_family,
    tree_extremal,
    unicyclic_extremal,
)
from sumconn.graphs import cycle_graph, path_graph
from sumconn.indices import sum_connectivity
from sumconn.radicals import RadicalValue


def _rs(s):
    return RadicalValue.reciprocal_sqrt(s)


def test_tree_bound_path_case():
    for n in range(3, 17):
        assert tree_max_bound(n, 2) == Fraction(n - 3, 2) + _rs(3) * 2
        assert tree_max_bound(n, 2) == sum_connectivity(path_graph(n))


def test_tree_bound_spot_values():
    assert tree_max_bound(7, 4) == _rs(5) * 2 + _rs(6) * 2 + _rs(3) * 2
    assert float(tree_max_bound(7, 4)) == pytest.approx(2.86562, abs=5e-6)
    assert tree_max_bound(9, 3) == 1 + RadicalValue.sqrt(3) + _rs(5) * 3
    assert float(tree_max_bound(9, 3)) == pytest.approx(4.07369, abs=5e-6)


def test_tree_bound_matches_constructions_exactly():
    for n in range(4, 13):
        for delta in range((n + 1) // 2, n):
            assert tree_max_bound(n, delta) == sum_connectivity(tree_extremal(n, delta))
        for delta in range(2, (n - 1) // 2 + 1):
            for g in spider_family(n, delta):
                assert tree_max_bound(n, delta) == sum_connectivity(g)


def test_tree_bound_range_errors():
    for bad in ((7, 1), (7, 7), (2, 1)):
        with pytest.raises(DeltaRangeError):
            tree_max_bound(*bad)


def test_unicyclic_bound_cycle_case():
    for n in range(3, 17):
        assert unicyclic_max_bound(n, 2) == Fraction(n, 2)
        if n >= 3:
            assert unicyclic_max_bound(n, 2) == sum_connectivity(cycle_graph(n))


def test_unicyclic_bound_spot_values():
    assert unicyclic_max_bound(7, 5) == _rs(3) + _rs(7) * 3 + _rs(6) * 2 + Fraction(1, 2)
    assert float(unicyclic_max_bound(7, 5)) == pytest.approx(3.02774, abs=5e-6)
    assert unicyclic_max_bound(7, 3) == _rs(3) + _rs(5) * 3 + Fraction(3, 2)
    assert float(unicyclic_max_bound(7, 3)) == pytest.approx(3.41899, abs=5e-6)


def test_unicyclic_bound_matches_constructions_exactly():
    for n in range(4, 12):
        for delta in range((n + 3) // 2, n):
            assert unicyclic_max_bound(n, delta) == sum_connectivity(unicyclic_extremal(n, delta))
        for delta in range(2, (n + 1) // 2 + 1):
            for g in cycle_spider_family(n, delta):
                assert unicyclic_max_bound(n, delta) == sum_connectivity(g)


def test_branches_partition_the_delta_range():
    # every delta in 2..n-1 falls in exactly one branch of each bound
    for n in range(4, 17):
        for bound_split in ((n + 1) // 2, (n + 3) // 2):
            lows = [d for d in range(2, n) if d < bound_split]
            highs = [d for d in range(2, n) if d >= bound_split]
            assert lows + highs == list(range(2, n))


def test_profile_matches_integer_bound():
    assert unicyclic_bound_profile(8, 2.0) == pytest.approx(4.0)
    for n in range(5, 14):
        for d in range(2, (n + 1) // 2 + 1):
            assert unicyclic_bound_profile(n, float(d)) == pytest.approx(
                float(unicyclic_max_bound(n, d)), abs=1e-12
            )


def test_profile_monotone_decreasing():
    assert unicyclic_bound_profile(10, 3.0) > unicyclic_bound_profile(10, 4.0)
    for n in (6, 10, 16):
        xs = [k / 10 for k in range(20, 10 * (n - 1) + 1)]
        values = [unicyclic_bound_profile(n, x) for x in xs]
        assert all(a > b for a, b in zip(values, values[1:]))


def test_profile_domain_error():
    with pytest.raises(ValueError):
        unicyclic_bound_profile(8, 1.9)


def test_top_two_closed_form():
    t4 = unicyclic_top_two(4)
    assert t4.first_value == Fraction(2)
    assert t4.second_value == 1 + _rs(5) * 2
    assert len(t4.second_graphs) == 1
    t5 = unicyclic_top_two(5)
    assert t5.second_value == Fraction(1, 2) + _rs(3) + _rs(5) * 3
    assert float(t5.second_value) == pytest.approx(2.41899, abs=5e-6)
    assert {canonical_code(g) for g in t5.second_graphs} == {
        canonical_code(g) for g in cycle_spider_family(5, 3)
    }
    t7 = unicyclic_top_two(7)
    assert len(t7.second_graphs) == 3
    assert float(t7.second_value) == pytest.approx(3.41899, abs=5e-6)
    with pytest.raises(ValueError):
        unicyclic_top_two(3)
