"""Growth series of Coxeter systems via Steinberg's formula."""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .diagrams import DEFAULT_MAX_RANK, enumerate_elliptic_subsets, solomon_degrees
from .graph import CoxeterMatrix, VinbergGraph, coxeter_matrix
from .poly import ONE, IntPolynomial, RationalFunction, cyclotomic


class ZeroSteinbergSum(ArithmeticError):
    """The alternating sum vanished identically, so it cannot be inverted."""


def _as_matrix(g):
    if isinstance(g, CoxeterMatrix):
        return g
    if isinstance(g, VinbergGraph):
        return coxeter_matrix(g)
    raise TypeError(f"expected a VinbergGraph or CoxeterMatrix, got {type(g).__name__}")


def elliptic_census(g, max_rank=DEFAULT_MAX_RANK):
    """Map (|T|, degrees of W_T) -> number of elliptic subsets T of that type."""
    m = _as_matrix(g)
    census = Counter()
    for subset in enumerate_elliptic_subsets(m, max_rank):
        census[(len(subset), solomon_degrees(m, subset))] += 1
    return census


def census_hash(census):
    text = ";".join(f"{size}:{','.join(map(str, degs))}x{count}" for (size, degs), count in sorted(census.items()))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _cyclotomic_exponents(degrees):
    """[d1, d2, ...] factored as prod Phi_k^e_k; returns {k: e_k}."""
    exps = Counter()
    for d in degrees:
        for k in range(2, d + 1):
            if d % k == 0:
                exps[k] += 1
    return exps


def _cyclotomic_product(exps, cache):
    out = ONE
    for k in sorted(exps):
        e = exps[k]
        if e:
            key = (k, e)
            if key not in cache:
                cache[key] = cyclotomic(k) ** e
            out = out * cache[key]
    return out


def alternating_sum(terms):
    """Sum of sign / [d1, d2, ...] over ``terms`` = {(sign, degrees): count}.

    All denominators are products of cyclotomic polynomials, so the sum is
    brought over their least common multiple in a single pass and reduced
    once at the end.
    """
    factored = {key: _cyclotomic_exponents(key[1]) for key in terms}
    lcm = Counter()
    for exps in factored.values():
        for k, e in exps.items():
            lcm[k] = max(lcm[k], e)
    cache = {}
    num = IntPolynomial()
    for key, count in terms.items():
        sign, _ = key
        if not count:
            continue
        cofactor = Counter({k: lcm[k] - factored[key][k] for k in lcm})
        num = num + _cyclotomic_product(cofactor, cache).scale(sign * count)
    return RationalFunction(num, _cyclotomic_product(lcm, cache))


def steinberg_sum(g, max_rank=DEFAULT_MAX_RANK):
    """Sum over elliptic T of (-1)^|T| / f_T(t), which equals 1/f_S(1/t)."""
    census = elliptic_census(g, max_rank)
    terms = Counter()
    for (size, degs), count in census.items():
        terms[(-1 if size % 2 else 1, degs)] += count
    return alternating_sum(terms)


@dataclass(frozen=True)
class GrowthSeries:
    """f_S(t) = numerator / denominator, normalized to value 1 at t = 0."""

    function: RationalFunction
    rank: int
    census_hash: str

    @property
    def numerator(self):
        return self.function.num

    @property
    def denominator(self):
        return self.function.den

    def is_polynomial(self):
        return self.denominator.degree == 0


def growth_series(g, max_rank=DEFAULT_MAX_RANK):
    """Growth series of the Coxeter system of ``g`` (graph or Coxeter matrix)."""
    m = _as_matrix(g)
    census = elliptic_census(m, max_rank)
    terms = Counter()
    for (size, degs), count in census.items():
        terms[(-1 if size % 2 else 1, degs)] += count
    total = alternating_sum(terms)
    if total.is_zero():
        raise ZeroSteinbergSum("Steinberg sum vanishes identically")
    f = total.substitute_inverse().inverse()
    num, den = f.num, f.den
    if den[0] == 0 or num[0] != den[0]:
        raise ArithmeticError("growth series does not start with 1")
    if den[0] < 0:
        num, den = -num, -den
    return GrowthSeries(RationalFunction(num, den, reduce=False), m.rank, census_hash(census))


def series_coefficients(f, K):
    """a_0, ..., a_K from the recurrence q * f = p."""
    if K < 0:
        raise ValueError("K must be nonnegative")
    p, q = f.numerator, f.denominator
    q0 = q[0]
    a = []
    for k in range(K + 1):
        acc = p[k] - sum(q[j] * a[k - j] for j in range(1, min(k, q.degree) + 1))
        if acc % q0:
            raise ArithmeticError("non-integral growth coefficient")
        a.append(acc // q0)
    return a


RECIPROCAL = "reciprocal"
ANTI_RECIPROCAL = "anti-reciprocal"
NEITHER = "neither"


def reciprocity_type(f):
    """Compare f(1/t) with +-f(t) exactly."""
    p, q = f.numerator, f.denominator
    d = max(p.degree, q.degree)
    lhs = p.reverse(d) * q
    rhs = p * q.reverse(d)
    if lhs == rhs:
        return RECIPROCAL
    if lhs == -rhs:
        return ANTI_RECIPROCAL
    return NEITHER


@dataclass(frozen=True)
class EulerCharacteristic:
    value: Fraction
    pole_order: int  # multiplicity of t = 1 as a root of the denominator

    def __str__(self):
        if self.pole_order:
            return f"0 (pole of order {self.pole_order} at t=1)"
        return str(self.value)


def root_multiplicity(p, x):
    """Multiplicity of the integer root x of p."""
    k = 0
    lin = IntPolynomial([-x, 1])
    while not p.is_zero() and p(x) == 0:
        p = p // lin
        k += 1
    return k


def euler_characteristic(f):
    """chi = 1 / f(1), exactly; zero when the denominator vanishes at 1."""
    if isinstance(f, (VinbergGraph, CoxeterMatrix)):
        f = growth_series(f)
    p, q = f.numerator, f.denominator
    order = root_multiplicity(q, 1)
    if order:
        return EulerCharacteristic(Fraction(0), order)
    if p(1) == 0:
        raise ZeroDivisionError("growth series vanishes at t = 1")
    return EulerCharacteristic(Fraction(q(1), p(1)), 0)
