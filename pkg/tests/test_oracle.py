import os
from collections import Counter

import pytest

from unimap import oracle
from unimap.counting import catalan, cperm_count, double_factorial_odd


def test_totals():
    for n in range(1, 7):
        assert oracle.enumerate_unicellular(n).total == double_factorial_odd(n)


def test_small_buckets():
    assert oracle.enumerate_unicellular(1).buckets["genus"] == {0: 1}
    assert oracle.enumerate_unicellular(2).buckets["genus"] == {0: 2, 1: 1}
    assert oracle.enumerate_unicellular(4).buckets["genus"][2] == 21


def test_shards_merge_to_full():
    full = oracle.enumerate_unicellular(5)
    parts = [oracle.enumerate_unicellular(5, shard=k) for k in range(1, 10)]
    merged = parts[0]
    for p in parts[1:]:
        merged = merged.merge(p)
    assert merged.total == full.total
    assert merged.buckets == full.buckets


def test_deterministic_order():
    assert list(oracle.involutions(6)) == list(oracle.involutions(6))
    assert next(oracle.involutions(4)) == (1, 0, 3, 2)


def test_ctrees():
    assert oracle.enumerate_ctrees(2, 1).total == 8
    assert oracle.enumerate_ctrees(3, 1).total == 160
    for n in range(1, 4):
        assert oracle.enumerate_ctrees(n, 0).total == 2 ** (n + 1) * catalan(n)


def test_ctree_graph_histogram():
    for n, g in [(2, 1), (3, 0), (3, 1)]:
        hist = oracle.map_degree_histogram(n, g)
        rep = oracle.enumerate_ctrees(n, g)
        assert rep.buckets["graph_degrees"] == Counter({k: v * 2 ** (n + 1) for k, v in hist.items()})


def test_colored_spot():
    assert oracle.enumerate_colored(2, 2).total == 12
    assert oracle.enumerate_colored(3, 1).total == 15


def test_bipartite_counts_match_jackson_at_one_color():
    # B_{1,1}(n) counts all bipartite maps
    assert oracle.jackson_oracle(2, 1, 1) == 2
    assert oracle.enumerate_bipartite(3).total == sum(oracle.enumerate_unicellular(3).buckets["bipartite"].values())


def test_labelled_planar():
    assert oracle.enumerate_bipartite_labelled(3, (2, 1), (2, 1)) == 3


def test_factorization_total():
    assert oracle.enumerate_factorizations(1).total == 1
    assert oracle.enumerate_factorizations(3).total == 36


def test_cap(monkeypatch):
    monkeypatch.setenv("UNIMAP_MAX_STATES", "100")
    assert oracle.max_states() == 100
    with pytest.raises(oracle.CapExceeded):
        list(oracle.unicellular_maps(5))
    monkeypatch.delenv("UNIMAP_MAX_STATES")
    assert oracle.max_states() == oracle.DEFAULT_MAX_STATES == 34459425


def test_characters():
    assert oracle.character_mn((2, 1), (3,)) == -1
    assert oracle.character_mn((3,), (1, 1, 1)) == 1
    assert oracle.hook_dimension((3, 2, 1)) == 16
