"""Growth polynomials of finite Coxeter groups against brute-force enumeration."""

import math
from fractions import Fraction

import pytest

from coxgrowth.graph import VinbergGraph
from coxgrowth.growth import euler_characteristic, growth_series
from coxgrowth.roots import PolynomialGrowth, growth_rate
from oracles import family, length_counts, orders_from_edges

SMALL = [("A", n) for n in range(1, 7)]
SMALL += [("B", n) for n in range(2, 7)]
SMALL += [("D", n) for n in range(4, 7)]
SMALL += [("E", 6), ("F", 4), ("H", 3), ("H", 4)]
SMALL += [("I", m) for m in (5, 7, 8, 12)]

PRODUCTS = [
    [("A", 2), ("B", 3)],
    [("I", 5), ("I", 5)],
    [("A", 1), ("A", 1), ("H", 3)],
    [("D", 4), ("A", 2)],
]


def graph_of(parts):
    edges, offset = [], 0
    order = 1
    for name, n in parts:
        rank, es, o = family(name, n)
        edges += [(i + offset, j + offset, w) for i, j, w in es]
        offset += rank
        order *= o
    return offset, edges, order


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_on_type_a(n):
    rank, edges, _ = family("A", n)
    assert sum(length_counts(orders_from_edges(rank, edges))) == math.factorial(n + 1)


@pytest.mark.parametrize("parts", [[p] for p in SMALL] + PRODUCTS, ids=lambda ps: "x".join(f"{a}{n}" for a, n in ps))
def test_solomon_polynomial_matches_enumeration(parts):
    rank, edges, order = graph_of(parts)
    if order > 51840:
        pytest.skip("outside the enumeration bound")
    counts = length_counts(orders_from_edges(rank, edges))
    f = growth_series(VinbergGraph.from_edges(rank, edges))
    assert f.is_polynomial()
    assert list(f.numerator.coeffs) == counts
    assert sum(counts) == order


TABLE = [("A", n) for n in range(1, 9)]
TABLE += [("B", n) for n in range(2, 9)]
TABLE += [("D", n) for n in range(4, 9)]
TABLE += [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("H", 3), ("H", 4)]
TABLE += [("I", m) for m in (5, 6, 7, 8, 10)]


@pytest.mark.parametrize("name, n", TABLE)
def test_value_at_one_is_group_order(name, n):
    rank, edges, order = family(name, n)
    f = growth_series(VinbergGraph.from_edges(rank, edges))
    assert f.numerator(1) == order
    chi = euler_characteristic(f)
    assert chi.value == Fraction(1, order) and chi.pole_order == 0
    with pytest.raises(PolynomialGrowth):
        growth_rate(f)
