from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from coxgrowth.poly import IntPolynomial, cyclotomic, squarefree_part
from coxgrowth.roots import (
    EXACT,
    PERRON,
    PISOT,
    SALEM,
    PolynomialGrowth,
    RootAtEndpoint,
    classify_number,
    count_roots_outside_circle,
    growth_rate,
    is_salem,
    isolate_real_roots,
    simplest_between,
    strip_cyclotomic,
    sturm_count,
    trace_polynomial,
)
from coxgrowth.growth import growth_series
from coxgrowth.graph import symbol_to_graph

P = lambda *c: IntPolynomial(list(reversed(c)))  # highest degree first
LEHMER = P(1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)


def numpy_roots(p):
    return np.roots([float(c) for c in reversed(p.coeffs)])


small = st.lists(st.integers(-6, 6), min_size=2, max_size=9).map(IntPolynomial).filter(lambda p: p.degree >= 1)


def well_separated(p, tol=1e-6):
    r = numpy_roots(p)
    if len(r) < 2:
        return True
    d = np.abs(r[:, None] - r[None, :]) + np.eye(len(r))
    return d.min() > tol


@given(small)
@settings(max_examples=200, deadline=None)
def test_sturm_count_matches_numpy(p):
    p = squarefree_part(p)
    assume(p.degree >= 1 and well_separated(p))
    r = numpy_roots(p)
    real = np.sort(r[np.abs(r.imag) < 1e-7].real)
    assert sturm_count(p) == len(real)
    iso = isolate_real_roots(p)
    assert len(iso) == len(real)
    for root, x in zip(iso, real):
        assert root.lo - Fraction(1, 10**6) <= Fraction(x) <= root.hi + Fraction(1, 10**6)


@given(small, st.fractions(Fraction(1, 4), Fraction(3)))
@settings(max_examples=200, deadline=None)
def test_circle_count_matches_numpy(p, r):
    p = squarefree_part(p)
    assume(p.degree >= 1)
    mods = np.abs(numpy_roots(p))
    assume(np.min(np.abs(mods - float(r))) > 1e-6)
    assert count_roots_outside_circle(p, r) == int(np.sum(mods > float(r)))


def test_root_on_circle_is_reported():
    assert count_roots_outside_circle(P(1, 0, -4), Fraction(2)) is None


def test_sturm_endpoint_root():
    with pytest.raises(RootAtEndpoint):
        sturm_count(P(1, -1), 1, 2)


def test_refinement_narrows():
    (root,) = [r for r in isolate_real_roots(P(1, 0, -2)) if r.hi > 0]
    fine = root.refine(Fraction(1, 10**30))
    assert fine.width <= Fraction(1, 10**30)
    assert fine.lo**2 < 2 < fine.hi**2


def test_simplest_between():
    assert simplest_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)
    assert simplest_between(Fraction(9, 10), Fraction(21, 10)) == 1
    with pytest.raises(ValueError):
        simplest_between(1, 1)


def test_strip_cyclotomic():
    core = P(1, 0, -1, -1)
    p = core * cyclotomic(1) * cyclotomic(6) * cyclotomic(6)
    idx, rem = strip_cyclotomic(p)
    assert idx == [1, 6, 6] or tuple(idx) == (1, 6, 6)
    assert rem == core


def test_trace_polynomial_of_lehmer():
    q = trace_polynomial(LEHMER)
    assert q.degree == 5
    # one root above 2, the rest inside (-2, 2)
    r = np.sort(numpy_roots(q).real)
    assert r[-1] > 2 and all(-2 < x < 2 for x in r[:-1])


def dominant(p):
    return isolate_real_roots(p)[-1].refine()


@pytest.mark.parametrize(
    "poly, flags",
    [
        (LEHMER, {SALEM, PERRON}),
        (P(1, 0, -1, -1), {PISOT, PERRON}),
        (P(1, -1, -1), {PISOT, PERRON}),
        (P(1, 0, -2), set()),  # -sqrt 2 has the same modulus
        (P(1, -1, -1, -1, 1), {SALEM, PERRON}),
        (P(1, 0, 0, 0, -3), set()),  # four roots of modulus 3^(1/4)
    ],
)
def test_classification(poly, flags):
    cls = classify_number(poly, dominant(poly))
    assert set(cls.flags) == flags
    assert all(v == EXACT for v in cls.certification.values())


def test_perron_but_not_pisot():
    # t^3 - 2: complex roots of the same modulus, so not Perron
    cls = classify_number(P(1, 0, 0, -2), dominant(P(1, 0, 0, -2)))
    assert PERRON not in cls
    # t^3 - 3t - 1 has three real roots; the largest beats the others in modulus
    p = P(1, 0, -3, -1)
    cls = classify_number(p, dominant(p))
    assert PERRON in cls and PISOT not in cls and SALEM not in cls


def test_is_salem_rejects_short_and_odd():
    assert not is_salem(P(1, -3, 1))
    assert not is_salem(P(1, 0, -1, -1))


def test_classify_rejects_cyclotomic_input():
    p = P(1, 0, -1, -1) * cyclotomic(1)
    with pytest.raises(ValueError):
        classify_number(p, dominant(P(1, 0, -1, -1)))


def test_growth_rate_of_finite_and_affine_groups():
    with pytest.raises(PolynomialGrowth):
        growth_rate(growth_series(symbol_to_graph("[5,3]")))
    with pytest.raises(PolynomialGrowth):
        growth_rate(growth_series(symbol_to_graph("[4,4]")))


def test_growth_rate_interval():
    tau = growth_rate(growth_series(symbol_to_graph("[7,3]")), Fraction(1, 10**20))
    assert tau.width <= Fraction(1, 10**20)
    assert tau.poly == LEHMER
    assert abs(float(tau.mid) - 1.17628081825991750654) < 1e-15
