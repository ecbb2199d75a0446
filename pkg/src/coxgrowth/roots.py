"""Certified real-root isolation and Salem/Pisot/Perron recognition.

All decisions are made with exact integer and rational arithmetic.  Floating
point is used only to propose a separating radius for the Perron test; when
the exact count cannot confirm it the verdict is labelled ``heuristic``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy

from .poly import IntPolynomial, cyclotomic, euler_phi, poly_gcd, squarefree_part

DEFAULT_EPS = Fraction(1, 10**12)


class RootAtEndpoint(ValueError):
    pass


class PolynomialGrowth(ValueError):
    """The denominator has no root off the unit circle: growth rate is 1."""

    rate = 1


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def _neg_rem(a, b):
    """-(a mod b) up to a positive factor, content removed."""
    r = a.pseudo_rem(b)
    delta = a.degree - b.degree + 1
    if b.lc < 0 and delta % 2:
        r = -r
    r = -r
    if r.is_zero():
        return r
    c = r.content()
    return IntPolynomial([x // c for x in r])


def sturm_sequence(f0, f1=None):
    """Generalized Sturm chain f0, f1, -rem(f0, f1), ...

    With ``f1`` omitted it is the derivative, giving the classical chain.
    """
    if f1 is None:
        f1 = f0.derivative()
    seq = [f0, f1]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = _neg_rem(seq[-2], seq[-1])
        if r.is_zero():
            break
        seq.append(r)
    if seq[-1].is_zero():
        seq.pop()
    return seq


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_variations(seq, x):
    """Sign changes of the chain at rational x, or at +-infinity for x=+-inf."""
    if x == float("inf"):
        return _variations([p.sign_at_infinity(1) for p in seq])
    if x == float("-inf"):
        return _variations([p.sign_at_infinity(-1) for p in seq])
    x = Fraction(x)
    return _variations([p.sign_at(x) for p in seq])


def sturm_count(p, a=float("-inf"), b=float("inf"), seq=None):
    """Number of distinct real roots of p in the open interval (a, b)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    for x in (a, b):
        if x not in (float("inf"), float("-inf")) and p.sign_at(x) == 0:
            raise RootAtEndpoint(f"p vanishes at endpoint {x}")
    if seq is None:
        seq = sturm_sequence(p)
    return sign_variations(seq, a) - sign_variations(seq, b)


def cauchy_bound(p):
    """Integer B with every root of p strictly inside |z| < B."""
    lc = abs(p.lc)
    m = max(abs(c) for c in p.coeffs[:-1]) if p.degree > 0 else 0
    return 1 + -(-m // lc) + 1


# ---------------------------------------------------------------------------
# isolating intervals
# ---------------------------------------------------------------------------


def _format_decimal(x, digits):
    x = Fraction(x)
    scaled = round(x * 10**digits)
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}" if digits else f"{sign}{s}"


@dataclass(frozen=True)
class IsolatedRoot:
    """A real root of ``poly`` known to be the only one in (lo, hi)."""

    poly: IntPolynomial
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("empty isolating interval")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.mid)

    def contains(self, x):
        return self.lo < Fraction(x) < self.hi

    def refine(self, eps=DEFAULT_EPS):
        """Bisect until the width is at most eps."""
        lo, hi = self.lo, self.hi
        s_lo = self.poly.sign_at(lo)
        while hi - lo > eps:
            mid = (lo + hi) / 2
            s = self.poly.sign_at(mid)
            if s == 0:
                # exact rational root: shrink symmetrically around it
                half = (hi - lo) / 4
                lo, hi = mid - min(half, eps / 4), mid + min(half, eps / 4)
                break
            if s == s_lo:
                lo = mid
            else:
                hi = mid
        return IsolatedRoot(self.poly, lo, hi)

    def decimal(self, digits=5):
        return _format_decimal(self.mid, digits)

    def interval_strings(self, digits=15):
        return (_format_decimal(self.lo, digits), _format_decimal(self.hi, digits))

    def __lt__(self, other):
        """Certified comparison: True iff the intervals are disjoint and ordered."""
        return self.hi < other.lo


def _split_point(p, lo, hi):
    mid = (lo + hi) / 2
    k = 2
    while p.sign_at(mid) == 0:
        mid = lo + (hi - lo) * Fraction(2**k - 1, 2 ** (k + 1))
        k += 1
    return mid


def isolate_real_roots(p):
    """Disjoint isolating intervals for the distinct real roots of p, ascending."""
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = squarefree_part(p)
    if sf.degree < 1:
        return []
    seq = sturm_sequence(sf)
    B = Fraction(cauchy_bound(sf))
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = sign_variations(seq, lo) - sign_variations(seq, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatedRoot(sf, lo, hi))
            continue
        mid = _split_point(sf, lo, hi)
        stack.append((mid, hi))
        stack.append((lo, mid))
    out.sort(key=lambda r: r.lo)
    return out


# ---------------------------------------------------------------------------
# polynomial structure
# ---------------------------------------------------------------------------

PALINDROMIC = "palindromic"
ANTI_PALINDROMIC = "anti-palindromic"
NEITHER = "neither"


def is_self_reciprocal(p):
    r = p.reverse()
    if r == p:
        return PALINDROMIC
    if r == -p:
        return ANTI_PALINDROMIC
    return NEITHER


def _max_cyclotomic_index(degree):
    # phi(n) >= sqrt(n/2), so phi(n) <= d forces n <= 2 d^2
    return max(2, 2 * degree * degree)


def strip_cyclotomic(p):
    """Divide out every cyclotomic factor; returns (indices, remainder).

    Indices repeat with multiplicity, in increasing order.
    """
    if p.is_zero():
        raise ValueError("cannot strip the zero polynomial")
    factors = []
    rem = p
    n = 1
    while n <= _max_cyclotomic_index(rem.degree):
        if euler_phi(n) <= rem.degree:
            phi = cyclotomic(n)
            while rem.degree >= phi.degree and phi.divides(rem):
                rem = rem // phi
                factors.append(n)
        n += 1
    if rem.lc < 0:
        rem = -rem
    return factors, rem


# ---------------------------------------------------------------------------
# growth rate
# ---------------------------------------------------------------------------


def growth_rate(f, eps=DEFAULT_EPS):
    """tau = 1/R, isolated as the largest real root of the reversed denominator.

    The defining polynomial is the square-free, cyclotomic-free part of the
    reversed denominator; roots of unity never exceed 1 in modulus, so the
    stripping cannot lose tau.
    """
    q = f.denominator
    if q.degree < 1:
        raise PolynomialGrowth("finite group: growth polynomial, rate 1")
    rq = q.reverse()
    _, core = strip_cyclotomic(squarefree_part(rq))
    roots = isolate_real_roots(core) if core.degree >= 1 else []
    if not roots or roots[-1].hi <= 1:
        raise PolynomialGrowth("no real root above 1: growth rate is 1")
    tau = roots[-1]
    if tau.lo < 1:
        # core has no root at 1 after stripping, so 1 is a valid endpoint
        if sturm_count(core, 1, tau.hi) != 1:
            raise PolynomialGrowth("largest real root does not exceed 1")
        tau = IsolatedRoot(core, Fraction(1), tau.hi)
    return tau.refine(eps)


def radius_of_convergence(f, eps=DEFAULT_EPS):
    """Smallest positive root of the denominator, isolated independently."""
    _, core = strip_cyclotomic(squarefree_part(f.denominator))
    pos = [r for r in isolate_real_roots(core) if r.hi > 0]
    if not pos:
        raise PolynomialGrowth("no positive real root")
    r = pos[0]
    if r.lo < 0:
        r = IsolatedRoot(core, Fraction(0), r.hi)
    return r.refine(eps)


# ---------------------------------------------------------------------------
# roots versus circles
# ---------------------------------------------------------------------------


def _mobius_transform(p, r):
    """(1-w)^n p(r (1+w)/(1-w)) scaled to integers, r = u/v > 0."""
    r = Fraction(r)
    u, v = r.numerator, r.denominator
    n = p.degree
    plus = [IntPolynomial([1, 1]) ** k for k in range(n + 1)]
    minus = [IntPolynomial([1, -1]) ** k for k in range(n + 1)]
    out = IntPolynomial()
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + (plus[k] * minus[n - k]).scale(c * u**k * v ** (n - k))
    return out


def count_roots_outside_circle(p, r):
    """Number of roots of p (with multiplicity) in |z| > r.

    Returns None when some root lies exactly on |z| = r.  The circle is
    mapped to the imaginary axis and the right half-plane roots are counted
    through the Cauchy index of Re/Im along the axis.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    n = p.degree
    if n < 1:
        return 0
    if p.sign_at(-r) == 0:
        return None
    q = _mobius_transform(p, r)
    # q(iy) = A(y) + i B(y)
    a_coeffs = [0] * (n + 1)
    b_coeffs = [0] * (n + 1)
    for k, c in enumerate(q.coeffs):
        s = 1 if k % 4 in (0, 1) else -1
        if k % 2 == 0:
            a_coeffs[k] = s * c
        else:
            b_coeffs[k] = s * c
    A, B = IntPolynomial(a_coeffs), IntPolynomial(b_coeffs)
    g = poly_gcd(A, B) if not (A.is_zero() or B.is_zero()) else (A if B.is_zero() else B)
    if g.degree >= 1 and sturm_count(squarefree_part(g)) > 0:
        return None
    if n % 2 == 0:
        seq = sturm_sequence(A, B)
        index = sign_variations(seq, float("-inf")) - sign_variations(seq, float("inf"))
        turns = -index
    else:
        seq = sturm_sequence(B, A)
        index = sign_variations(seq, float("-inf")) - sign_variations(seq, float("inf"))
        turns = index
    # turns = (#left-half-plane roots) - (#right-half-plane roots)
    right = (n - turns) // 2
    return right


# ---------------------------------------------------------------------------
# Salem / Pisot / Perron
# ---------------------------------------------------------------------------

SALEM, PISOT, PERRON = "Salem", "Pisot", "Perron"
EXACT, HEURISTIC = "exact", "heuristic"


@dataclass(frozen=True)
class NumberClass:
    flags: frozenset
    certification: dict = field(hash=False)
    stripped_cyclotomic: tuple = ()

    def __contains__(self, flag):
        return flag in self.flags

    def as_dict(self):
        return {
            "flags": sorted(self.flags),
            "certification": dict(sorted(self.certification.items())),
            "stripped_cyclotomic": list(self.stripped_cyclotomic),
            "irreducibility": "not certified",
        }


def trace_polynomial(p):
    """q with p(t) = t^d q(t + 1/t) for palindromic p of degree 2d."""
    if p.degree % 2 or is_self_reciprocal(p) != PALINDROMIC:
        raise ValueError("trace polynomial needs a palindromic polynomial of even degree")
    d = p.degree // 2
    x = IntPolynomial([0, 1])
    cheb = [IntPolynomial([2]), x]
    for _ in range(2, d + 1):
        cheb.append(x * cheb[-1] - cheb[-2])
    q = IntPolynomial([p[d]])
    for j in range(1, d + 1):
        q = q + cheb[j].scale(p[d + j])
    return q


def is_salem(p):
    """Exact Salem test on a square-free, cyclotomic-free integer polynomial."""
    if p.degree < 4 or p.degree % 2 or is_self_reciprocal(p) != PALINDROMIC:
        return False
    q = trace_polynomial(p)
    d = q.degree
    if q.sign_at(2) == 0 or q.sign_at(-2) == 0:
        return False
    seq = sturm_sequence(q)
    above = sturm_count(q, 2, float("inf"), seq)
    inside = sturm_count(q, -2, 2, seq)
    below = sturm_count(q, float("-inf"), -2, seq)
    return above == 1 and below == 0 and inside == d - 1


def is_pisot(p):
    """Exactly one root outside the closed unit disk and none on the circle."""
    return count_roots_outside_circle(p, 1) == 1


def _negative_twin(p, dominant):
    """True iff -alpha is also a root of p."""
    g = poly_gcd(p, p.negate_variable())
    if g.degree < 1:
        return False
    try:
        return sturm_count(g, dominant.lo, dominant.hi) > 0
    except RootAtEndpoint:
        return True


def simplest_between(lo, hi):
    """Rational of least denominator in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("empty interval")
    q = 1
    while True:
        p = (lo * q).__floor__() + 1
        if Fraction(p, q) < hi:
            return Fraction(p, q)
        q += 1


def _numeric_moduli(p, dominant):
    """Moduli of the roots other than alpha, floating point, descending."""
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    alpha = float(dominant.mid)
    nearest = int(np.argmin(np.abs(roots - alpha)))
    return sorted((float(abs(z)) for i, z in enumerate(roots) if i != nearest), reverse=True)


# resultants beyond this degree get slow; such cases stay heuristic
EQUAL_MODULUS_MAX_DEGREE = 24


def _product_resultant(p):
    """Polynomial whose roots are the products z_i z_j of roots of p."""
    t, x = sympy.symbols("t x")
    d = p.degree
    P = sympy.Poly(list(reversed(p.coeffs)), t)
    Q = sympy.Poly(sum(c * x**k * t ** (d - k) for k, c in enumerate(p.coeffs)), t)
    R = sympy.Poly(sympy.resultant(P, Q, t), x)
    return IntPolynomial([int(c) for c in reversed(R.all_coeffs())])


def _equal_modulus_twin(p, dominant):
    """True iff some root z != alpha of p has |z| = alpha.

    Such z gives z * conj(z) = alpha^2, so alpha^2 becomes a repeated root of
    the product resultant; conversely a repeated alpha^2 forces a root other
    than alpha of modulus at least alpha.
    """
    R = _product_resultant(p)
    even = p * p.negate_variable()
    p2 = IntPolynomial(even.coeffs[::2])  # roots alpha_i^2
    h = poly_gcd(R.derivative(), p2)
    if h.degree < 1:
        return False
    root = dominant
    while True:
        lo, hi = root.lo**2, root.hi**2
        try:
            if sturm_count(p2, lo, hi) == 1:
                return sturm_count(h, lo, hi) > 0
        except RootAtEndpoint:
            pass
        root = root.refine(root.width / 3)


def _certify_circle(p, lo, hi, want):
    """Exact check of count_outside(r) == want for a small-height r in (lo, hi)."""
    if not lo < hi:
        return False
    c = count_roots_outside_circle(p, simplest_between(lo, hi))
    return c is not None and want(c)


def perron_test(p, dominant):
    """(verdict, certification) for 'all other roots have modulus < alpha'.

    A floating-point root finder proposes a separating radius of small
    height and the exact circle count confirms it.  Roots of the same
    modulus as alpha are detected exactly through a resultant.  What cannot
    be decided exactly is returned as the numerical answer, labelled
    heuristic.
    """
    if p.degree == 1:
        return True, EXACT
    root = dominant.refine(Fraction(1, 10**15))
    alpha = float(root.mid)
    second = _numeric_moduli(p, root)[0]
    gap = abs(alpha - second)
    if second < alpha:
        hi = min(Fraction(alpha - gap / 3), root.lo)
        if _certify_circle(p, Fraction(second + gap / 3), hi, lambda c: c == 1):
            return True, EXACT
    if _negative_twin(p, root):
        return False, EXACT
    if second > alpha:
        lo = max(Fraction(alpha + gap / 3), root.hi)
        if _certify_circle(p, lo, Fraction(second - gap / 3), lambda c: c >= 1):
            return False, EXACT
    if p.degree <= EQUAL_MODULUS_MAX_DEGREE and _equal_modulus_twin(p, root):
        return False, EXACT
    return second < alpha, HEURISTIC


def classify_number(p, dominant):
    """Flags for the dominant real root of p (square-free, cyclotomic-free).

    Irreducibility is not certified, so the verdicts are statements about the
    roots of ``p``; they coincide with statements about the algebraic number
    when ``p`` is its minimal polynomial.
    """
    if dominant.lo < 1:
        raise ValueError("dominant root must be isolated above 1")
    factors, core = strip_cyclotomic(p)
    if factors:
        raise ValueError("classify_number expects a cyclotomic-free polynomial")
    if squarefree_part(p).degree != p.degree:
        raise ValueError("classify_number expects a square-free polynomial")
    flags, cert = set(), {}
    if is_salem(p):
        flags.add(SALEM)
        cert[SALEM] = EXACT
    if is_pisot(p):
        flags.add(PISOT)
        cert[PISOT] = EXACT
    if flags:
        flags.add(PERRON)
        cert[PERRON] = EXACT
    else:
        verdict, how = perron_test(p, dominant)
        if verdict:
            flags.add(PERRON)
        cert[PERRON] = how
    return NumberClass(frozenset(flags), cert)
