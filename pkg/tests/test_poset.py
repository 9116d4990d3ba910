import math

import pytest

from cuntzlim import (
    Chain,
    cofinal_chain,
    divisibility_edges,
    embeddability_edges,
    embeddability_graph,
    join,
    leq,
    reversed_relabeled,
)
from cuntzlim.poset import TOP, check_order_hom


def test_leq_is_divisibility_with_top():
    assert leq(3, 12) and not leq(3, 10)
    assert leq(1, 7)
    assert leq(5, TOP) and not leq(TOP, 5)
    assert leq(TOP, TOP)


def test_join_is_lcm():
    assert join(4, 6) == 12
    assert join(1, 9) == 9
    assert join(7, 7) == 7


def test_poset_laws_on_a_grid():
    xs = range(1, 13)
    for a in xs:
        for b in xs:
            j = join(a, b)
            assert leq(a, j) and leq(b, j)
            # least upper bound
            for c in xs:
                if leq(a, c) and leq(b, c):
                    assert leq(j, c)
            assert (leq(a, b) and leq(b, a)) == (a == b)


def test_chain_requires_strict_divisibility():
    Chain((1, 2, 6, 12))
    with pytest.raises(ValueError):
        Chain((2, 3))
    with pytest.raises(ValueError):
        Chain((2, 2))


def test_cofinal_chain_dominates_enumeration():
    enum = list(range(1, 9))
    ch = cofinal_chain(enum, 8)
    for x in enum:
        assert any(leq(x, y) for y in ch)
    vals = list(ch)
    for a, b in zip(vals, vals[1:]):
        assert b % a == 0 and a < b


def test_factorial_chain_is_cofinal():
    facts = [math.factorial(k) for k in range(1, 9)]
    ch = Chain(tuple(facts))
    for x in range(1, 9):
        assert any(leq(x, y) for y in ch)


def test_check_order_hom():
    rel = {("a", "b"), ("b", "c"), ("a", "c"), ("a", "a"), ("b", "b"), ("c", "c")}
    order = lambda d, e: (d, e) in rel
    assert check_order_hom({"a": 1, "b": 2, "c": 4}, order)
    assert not check_order_hom({"a": 1, "b": 2, "c": 3}, order)


def test_embeddability_edges_match_hom_exists():
    edges = set(embeddability_edges(8))
    # O_m -> O_n iff (n-1) | (m-1), m != n
    expected = {
        (m, n)
        for m in range(2, 9)
        for n in range(2, 9)
        if m != n and (m - 1) % (n - 1) == 0
    }
    assert edges == expected


def test_reduced_graph_has_only_covering_arrows():
    reduced = set(embeddability_edges(8, reduce=True))
    assert reduced == {
        (3, 2), (4, 2), (6, 2), (8, 2),
        (5, 3), (7, 3), (7, 4),
    }


def test_reversal_relabel_gives_divisibility_graph():
    full = embeddability_edges(8)
    assert set(reversed_relabeled(full)) == set(divisibility_edges(7))
    reduced = embeddability_edges(8, reduce=True)
    assert set(reversed_relabeled(reduced)) == {
        (1, 2), (1, 3), (1, 5), (1, 7), (2, 4), (2, 6), (3, 6),
    }
    assert set(reversed_relabeled(reduced)) == set(divisibility_edges(7, reduce=True))


def test_dot_output():
    text = embeddability_graph(4, reduce=True).to_dot("g")
    assert text.startswith("digraph g {") and '"O3" -> "O2";' in text
