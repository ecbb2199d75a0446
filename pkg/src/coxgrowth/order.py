"""The partial order on Coxeter systems and growth-rate comparisons."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import INF, CoxeterMatrix, VinbergGraph, coxeter_matrix
from .growth import growth_series
from .poly import poly_gcd
from .roots import IsolatedRoot, PolynomialGrowth, RootAtEndpoint, growth_rate, sturm_count

RATE_EPS = Fraction(1, 10**12)


class MonotonicityViolation(AssertionError):
    """tau_small > tau_large although small <= large."""


class NotComparable(ValueError):
    pass


@dataclass(frozen=True)
class PartialOrderWitness:
    """Injective map of node indices (0-based) with m_st <= m'_{map s, map t}."""

    map: tuple
    strict: bool

    def verify(self, small, large):
        n = small.rank
        if len(set(self.map)) != n:
            return False
        return all(
            small[s, t] <= large[self.map[s], self.map[t]] for s in range(n) for t in range(s + 1, n)
        )

    def compose(self, other):
        """self: A -> B, other: B -> C gives A -> C."""
        return PartialOrderWitness(tuple(other.map[i] for i in self.map), self.strict or other.strict)

    def as_dict(self):
        return {"map": [i + 1 for i in self.map], "strict": self.strict}


def _matrix(x):
    if isinstance(x, CoxeterMatrix):
        return x
    if isinstance(x, VinbergGraph):
        return coxeter_matrix(x)
    raise TypeError(f"expected a Coxeter matrix or Vinberg graph, got {type(x).__name__}")


def _profile(m, v):
    """Sorted non-2 weights at v: a target must dominate it entrywise."""
    return sorted((m[v, u] for u in range(m.rank) if u != v and m[v, u] != 2), reverse=True)


def _dominates(big, small):
    if len(big) < len(small):
        return False
    return all(b >= s for b, s in zip(big, small))


def find_embedding(small, large):
    """Lexicographically first witness of small <= large, or None.

    Backtracking over injective maps; a node can only go to a node whose
    sorted weight profile dominates its own.
    """
    a, b = _matrix(small), _matrix(large)
    n, N = a.rank, b.rank
    if n > N:
        return None
    prof_a = [_profile(a, v) for v in range(n)]
    prof_b = [_profile(b, v) for v in range(N)]
    allowed = [[w for w in range(N) if _dominates(prof_b[w], prof_a[v])] for v in range(n)]
    image = []
    used = [False] * N

    def extend():
        s = len(image)
        if s == n:
            return True
        for w in allowed[s]:
            if used[w]:
                continue
            if all(a[s, t] <= b[w, image[t]] for t in range(s)):
                image.append(w)
                used[w] = True
                if extend():
                    return True
                image.pop()
                used[w] = False
        return False

    if not extend():
        return None
    strict = n < N or any(a[s, t] != b[image[s], image[t]] for s in range(n) for t in range(s + 1, n))
    return PartialOrderWitness(tuple(image), strict)


# ---------------------------------------------------------------------------
# comparing growth rates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Rate:
    """A growth rate: either exactly 1 or an isolated real root above 1."""

    root: IsolatedRoot | None

    @property
    def lo(self):
        return Fraction(1) if self.root is None else self.root.lo

    @property
    def hi(self):
        return Fraction(1) if self.root is None else self.root.hi

    def refine(self, eps):
        return self if self.root is None else Rate(self.root.refine(eps))

    def decimal(self, digits=5):
        return "1." + "0" * digits if self.root is None else self.root.decimal(digits)

    def interval(self, digits=15):
        if self.root is None:
            return ("1", "1")
        return self.root.interval_strings(digits)

    def __float__(self):
        return 1.0 if self.root is None else float(self.root)


def rate_of(x, eps=RATE_EPS):
    m = _matrix(x)
    try:
        return Rate(growth_rate(growth_series(m), eps))
    except PolynomialGrowth:
        return Rate(None)


def _same_number(r1, r2):
    """True iff the two isolated roots are the same algebraic number."""
    if r1.root is None or r2.root is None:
        return r1.root is None and r2.root is None
    g = poly_gcd(r1.root.poly, r2.root.poly)
    if g.degree < 1:
        return False
    lo, hi = max(r1.lo, r2.lo), min(r1.hi, r2.hi)
    if lo >= hi:
        return False
    try:
        return sturm_count(g, lo, hi) == 1
    except RootAtEndpoint:
        return True


def compare_rates(r1, r2, max_bits=400):
    """-1, 0 or 1 for r1 <, =, > r2, decided exactly."""
    eps = Fraction(1, 2**40)
    while True:
        if r1.hi < r2.lo:
            return -1
        if r2.hi < r1.lo:
            return 1
        if _same_number(r1, r2):
            return 0
        if eps < Fraction(1, 2**max_bits):
            raise NotComparable("rates could not be separated")
        eps /= 2**20
        r1, r2 = r1.refine(eps), r2.refine(eps)


@dataclass(frozen=True)
class MonotoneVerdict:
    witness: PartialOrderWitness
    tau_small: Rate
    tau_large: Rate
    relation: str  # "<" or "="

    def as_dict(self):
        return {
            "witness": self.witness.as_dict(),
            "tau_small": list(self.tau_small.interval()),
            "tau_large": list(self.tau_large.interval()),
            "relation": self.relation,
        }


def assert_growth_monotone(small, large):
    """Check tau_small <= tau_large for an embeddable pair."""
    w = find_embedding(small, large)
    if w is None:
        raise NotComparable("no embedding of the smaller system into the larger")
    ts, tl = rate_of(small), rate_of(large)
    c = compare_rates(ts, tl)
    if c > 0:
        raise MonotonicityViolation(
            f"tau_small in {ts.interval()} exceeds tau_large in {tl.interval()}"
        )
    return MonotoneVerdict(w, ts, tl, "<" if c < 0 else "=")


# ---------------------------------------------------------------------------
# scripted comparisons
# ---------------------------------------------------------------------------


class ReproductionFailure(AssertionError):
    def __init__(self, step):
        super().__init__(f"{step.name}: {step.claim} failed ({step.computed})")
        self.step = step


@dataclass(frozen=True)
class Step:
    name: str
    claim: str
    computed: str
    passed: bool
    reference: str = ""

    def as_dict(self):
        return {
            "name": self.name,
            "claim": self.claim,
            "reference": self.reference,
            "computed": self.computed,
            "passed": self.passed,
        }


@dataclass
class Report:
    dimension: int
    steps: list = field(default_factory=list)
    minimal: str | None = None

    @property
    def passed(self):
        return all(s.passed for s in self.steps)

    def as_dict(self):
        return {
            "dimension": self.dimension,
            "minimal": self.minimal,
            "passed": self.passed,
            "steps": [s.as_dict() for s in self.steps],
        }


def _fmt(rate):
    lo, hi = rate.interval(8)
    return f"[{lo}, {hi}]"


def within(rate, value, tol=Fraction(5, 10**6)):
    value = Fraction(value)
    return value - tol <= rate.lo and rate.hi <= value + tol


def matches_printed(rate, text):
    """How a certified rate agrees with a printed decimal: "rounded",
    "truncated", or None.  Printed values are sometimes cut rather than
    rounded, so both readings are accepted and reported."""
    value = Fraction(text)
    ulp = Fraction(1, 10 ** len(text.split(".")[1]))
    if value - ulp / 2 <= rate.lo and rate.hi < value + ulp / 2:
        return "rounded"
    if value <= rate.lo and rate.hi < value + ulp:
        return "truncated"
    return None


def _close(rate, text):
    return matches_printed(rate, text) is not None


class _Recorder:
    def __init__(self, report, abort):
        self.report, self.abort = report, abort

    def add(self, name, claim, computed, passed, reference=""):
        step = Step(name, claim, computed, bool(passed), reference)
        self.report.steps.append(step)
        if self.abort and not step.passed:
            raise ReproductionFailure(step)
        return step


def _chain(rec, name, items, reference=""):
    """items: list of (label, Rate or Fraction); checks strict increase."""
    shown = []
    ok = True
    for (la, a), (lb, b) in zip(items, items[1:]):
        ra = a if isinstance(a, Rate) else None
        rb = b if isinstance(b, Rate) else None
        if ra and rb:
            ok &= compare_rates(ra, rb) < 0
        elif ra:
            ok &= ra.hi < Fraction(b)
        elif rb:
            ok &= Fraction(a) < rb.lo
        else:
            ok &= Fraction(a) < Fraction(b)
    for la, a in items:
        shown.append(f"{la}={_fmt(a) if isinstance(a, Rate) else a}")
    claim = " < ".join(la for la, _ in items)
    return rec.add(name, claim, "; ".join(shown), ok, reference)


def triangular_components(m):
    """3-node connected subdiagrams with finite weights and indefinite type,
    i.e. cocompact hyperbolic triangle groups."""
    from itertools import combinations

    from .diagrams import INDEFINITE, classify_connected
    from .graph import connected_components

    out = []
    for tri in combinations(range(m.rank), 3):
        sub = m.restrict(list(tri))
        if any(sub[i, j] == INF for i in range(3) for j in range(3)):
            continue
        if len(connected_components(sub)) == 1 and classify_connected(sub).kind == INDEFINITE:
            out.append(tri)
    return out


def find_sigma(g):
    """A connected 3-node subgraph containing a dotted (infinite) edge."""
    m = _matrix(g)
    n = m.rank
    for i in range(n):
        for j in range(i + 1, n):
            if m[i, j] != INF:
                continue
            for k in range(n):
                if k in (i, j):
                    continue
                if m[i, k] != 2 or m[j, k] != 2:
                    return tuple(sorted((i, j, k)))
    return None


def minimality_report(dimension, abort=True):
    """Re-run the comparison arguments for cocompact groups in H^4 or H^5."""
    from . import corpus

    if dimension not in (4, 5):
        raise ValueError(f"unsupported dimension {dimension}; expected 4 or 5")
    report = Report(dimension)
    rec = _Recorder(report, abort)
    if dimension == 4:
        _report_dim4(rec, corpus)
        report.minimal = "[5,3,3,3]"
    else:
        _report_dim5(rec, corpus)
        report.minimal = "makarov"
    return report


def _report_dim4(rec, corpus):
    rates = {}
    for name in corpus.LANNER:
        fx = corpus.get(name)
        r = rate_of(fx.graph)
        rates[name] = r
        how = matches_printed(r, fx.tau)
        rec.add(f"rate {name}", f"tau ~ {fx.tau}", f"{_fmt(r)} ({how or 'mismatch'})", how, fx.reference)
    r83 = rate_of(corpus.get("triangle-8-3").graph)
    rinf3 = rate_of(corpus.get("triangle-inf-3").graph)
    l1 = rates["lanner-5333"]
    _chain(rec, "L below 1.2 below [8,3]", [("tau[5,3,3,3]", l1), ("1.2", Fraction(6, 5)), ("tau[8,3]", r83)])
    for name in corpus.LANNER[1:]:
        _chain(rec, f"L below {name}", [("tau[5,3,3,3]", l1), (f"tau_{name}", rates[name])])
    for name in corpus.ESSELMANN:
        m = _matrix(corpus.get(name).graph)
        parts = []
        ok = True
        for tri in triangular_components(m):
            sub = m.restrict(list(tri))
            v = assert_growth_monotone(sub, m)
            ok &= compare_rates(r83, v.tau_small) <= 0
            parts.append(f"{[x + 1 for x in tri]}: {_fmt(r83)} <= {_fmt(v.tau_small)} {v.relation} {_fmt(v.tau_large)}")
        rec.add(
            f"[8,3] <= {name}",
            "tau[8,3] <= tau(triangular component) <= tau_E",
            "; ".join(parts),
            ok and bool(parts),
        )
    _chain(rec, "triangle chain", [("tau[5,3,3,3]", l1), ("tau[8,3]", r83), ("tau[inf,3]", rinf3)])
    for name in corpus.DOTTED:
        fx = corpus.get(name)
        tri = find_sigma(fx.graph)
        m = _matrix(fx.graph)
        sigma = m.restrict(list(tri))
        a = assert_growth_monotone(corpus.get("triangle-inf-3").graph, sigma)
        b = assert_growth_monotone(sigma, m)
        rec.add(
            f"sigma argument {name}",
            "tau[inf,3] <= tau_sigma <= tau_Sigma",
            f"sigma={[v + 1 for v in tri]} {_fmt(a.tau_small)} {a.relation} {_fmt(a.tau_large)} {b.relation} {_fmt(b.tau_large)}",
            True,
        )


def _report_dim5(rec, corpus):
    from .growth import steinberg_sum

    rm = rate_of(corpus.get("makarov").graph)
    rm4 = rate_of(corpus.get("makarov-m4").graph)
    rk = rate_of(corpus.get("kaplinskaja").graph)
    rec.add("rate makarov", "tau_M ~ 1.64759", _fmt(rm), _close(rm, "1.64759"))
    rec.add("rate kaplinskaja", "tau_K ~ 2.08379", _fmt(rk), _close(rk, "2.08379"))
    _chain(
        rec,
        "prism chain",
        [("tau_M", rm), ("tau_M4", rm4), ("1.84712", Fraction("1.84712")), ("tau_K", rk)],
    )
    ident = corpus.difference_identities()
    for label, key in (("(a)", "W1"), ("(b)", "W2"), ("(c)", "W3"), ("(d)", "W4")):
        got = steinberg_sum(corpus.get(key.lower()).graph)
        rec.add(f"identity {label}", f"1/f_{key}(1/t) = {ident[label + ' text']}", str(got), got == ident[label])
    for label in ("W1-W2", "W1-W3", "W1-W4"):
        lhs, rhs, text = ident[label]
        rec.add(f"difference {label}", text, str(lhs), lhs == rhs)
    rq = rate_of(corpus.get("w1").graph)
    rg = {k: rate_of(corpus.get(k).graph) for k in ("w2", "w3", "w4")}
    _chain(rec, "M below Q", [("tau_M", rm), ("tau_Q", rq)])
    for k in ("w2", "w3", "w4"):
        _chain(rec, f"Q below {k.upper()}", [("tau_Q", rq), (f"tau_{k.upper()}", rg[k])])
    t = corpus.get("tumarkin")
    v = assert_growth_monotone(corpus.get("w4").graph, t.graph)
    rec.add(
        "W4 subgraph of T",
        "tau_M < tau_W4 <= tau_T",
        f"map={v.witness.as_dict()['map']} {_fmt(rm)} < {_fmt(v.tau_small)} {v.relation} {_fmt(v.tau_large)}",
        compare_rates(rm, v.tau_small) < 0,
    )
    for name in ("makarov-m4", "kaplinskaja", "tumarkin"):
        r = rate_of(corpus.get(name).graph)
        _chain(rec, f"M below {name}", [("tau_M", rm), (f"tau_{name}", r)])
