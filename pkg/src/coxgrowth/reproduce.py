"""Comparison table between printed reference values and computed ones."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import sympy

from . import corpus
from .growth import euler_characteristic, growth_series, root_multiplicity
from .lorentz import solve_prism_length
from .order import matches_printed, minimality_report, rate_of
from .poly import IntPolynomial, bracket
from .roots import (
    PALINDROMIC,
    PERRON,
    PISOT,
    SALEM,
    classify_number,
    growth_rate,
    is_self_reciprocal,
    sturm_count,
)

SCOPES = ("dim4", "dim5", "examples", "all")

# degree-60 denominator of f_L for L = [5,3,3,3], as printed
LANNER_DENOMINATOR_TEXT = (
    "1 - t - t^7 + t^8 - t^9 + t^10 - t^11 + t^14 - t^15 + t^16 - 2t^17 + 2t^18 - t^19 + t^20"
    " - t^21 + t^22 - t^23 + 2t^24 - 2t^25 + 2t^26 - 2t^27 + 2t^28 - t^29 + t^30 - t^31 + 2t^32"
    " - 2t^33 + 2t^34 - 2t^35 + 2t^36 - t^37 + t^38 - t^39 + t^40 - t^41 + 2t^42 - 2t^43 + t^44"
    " - t^45 + t^46 - t^49 + t^50 - t^51 + t^52 - t^53 - t^59 + t^60"
)


def parse_poly_text(text):
    """Integer polynomial from text like '1 - t + 2t^3'."""
    t = sympy.Symbol("t")
    expr = sympy.sympify(re.sub(r"(\d)\s*t", r"\1*t", text.replace("^", "**")), locals={"t": t})
    coeffs = sympy.Poly(expr, t).all_coeffs()
    return IntPolynomial([int(c) for c in reversed(coeffs)])


@dataclass(frozen=True)
class Row:
    scope: str
    name: str
    reference: str
    computed: str
    passed: bool
    note: str = ""

    def as_dict(self):
        return {
            "scope": self.scope,
            "name": self.name,
            "reference": self.reference,
            "computed": self.computed,
            "verdict": "pass" if self.passed else "FAIL",
            "note": self.note,
        }


def _interval(rate, digits=8):
    lo, hi = rate.interval(digits)
    return f"[{lo}, {hi}]"


def _rate_row(scope, label, name, printed):
    r = rate_of(corpus.get(name).graph)
    how = matches_printed(r, printed)
    note = "" if how in (None, "rounded") else "printed digits are truncated"
    return Row(scope, f"tau {label}", printed, _interval(r), how is not None, note), r


def _flags_row(scope, label, name, expect, forbid=()):
    f = growth_series(corpus.get(name).graph)
    tau = growth_rate(f)
    cls = classify_number(tau.poly, tau)
    ok = all(x in cls for x in expect) and not any(x in cls for x in forbid)
    want = ", ".join(list(expect) + [f"not {x}" for x in forbid])
    got = ", ".join(f"{k} ({v})" for k, v in sorted(cls.certification.items()) if k in cls) or "none"
    return Row(scope, f"class {label}", want, got, ok)


def _poly_row(scope, label, name, printed, note=""):
    tau = growth_rate(growth_series(corpus.get(name).graph))
    want = parse_poly_text(printed)
    return Row(scope, f"defining polynomial {label}", printed, str(tau.poly), tau.poly == want, note)


def example_rows():
    s = "examples"
    rows = []
    r, _ = _rate_row(s, "[7,3]", "triangle-7-3", "1.176281")
    rows.append(r)
    rows.append(_poly_row(s, "[7,3]", "triangle-7-3", "t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1"))
    rows.append(_flags_row(s, "[7,3]", "triangle-7-3", (SALEM,)))
    r, _ = _rate_row(s, "[8,3]", "triangle-8-3", "1.23039")
    rows.append(r)
    rows.append(_poly_row(s, "[8,3]", "triangle-8-3", "t^10 - t^7 - t^5 - t^3 + 1"))
    rows.append(_flags_row(s, "[8,3]", "triangle-8-3", (SALEM,)))
    r, _ = _rate_row(s, "Q", "lambert-q", "1.72208")
    rows.append(r)
    rows.append(
        _poly_row(
            s, "Q", "lambert-q", "t^4 - t^3 - t^2 - t + 1",
            "printed with constant term -1, which has no root near 1.72208; sign corrected",
        )
    )
    rows.append(_flags_row(s, "Q", "lambert-q", (SALEM,)))
    r, _ = _rate_row(s, "[inf,3]", "triangle-inf-3", "1.32471")
    rows.append(r)
    rows.append(_poly_row(s, "[inf,3]", "triangle-inf-3", "t^3 - t - 1"))
    rows.append(_flags_row(s, "[inf,3]", "triangle-inf-3", (PISOT,)))
    r, _ = _rate_row(s, "[3,5,3]", "tetrahedral-353", "1.35098")
    rows.append(r)
    rows.append(_poly_row(s, "[3,5,3]", "tetrahedral-353", "t^10 - t^9 - t^6 + t^5 - t^4 - t + 1"))

    f = growth_series(corpus.get("lanner-5333").graph)
    rows.append(Row(s, "numerator [5,3,3,3]", "[2,12,20,30]", str(f.numerator), f.numerator == bracket(2, 12, 20, 30)))
    want = parse_poly_text(LANNER_DENOMINATOR_TEXT)
    rows.append(Row(s, "denominator [5,3,3,3]", "degree-60 display", f"degree {f.denominator.degree}", f.denominator == want))
    pal = is_self_reciprocal(f.denominator)
    rows.append(Row(s, "denominator [5,3,3,3] palindromic", PALINDROMIC, pal, pal == PALINDROMIC))
    n = sturm_count(f.denominator, 1, float("inf"))
    rows.append(Row(s, "real roots of q in (1,inf) [5,3,3,3]", "2", str(n), n == 2))
    r, _ = _rate_row(s, "[5,3,3,3]", "lanner-5333", "1.19988")
    rows.append(r)
    rows.append(_flags_row(s, "[5,3,3,3]", "lanner-5333", (PERRON,), (SALEM,)))

    sol = solve_prism_length(corpus.get("makarov").graph)
    target = sympy.sqrt((7 + sympy.sqrt(5)) / 2) / 2
    exact = sympy.simplify(sol.cosh - target) == 0
    close = abs(sympy.N(sol.cosh - target, 40)) < sympy.Float("1e-10")
    rows.append(Row(s, "cosh l for M", "1/2 sqrt((7+sqrt 5)/2) ~ 1.07448", f"{sol.cosh} in [{sol.interval[0]}, {sol.interval[1]}]", exact and close))
    rows.append(Row(s, "det Gr(M) after substitution", "0", f"[{sol.det_interval[0]}, {sol.det_interval[1]}]", _contains_zero(sol.det_interval)))
    for label, name, printed, deg in (("M", "makarov", "1.64759", None), ("K", "kaplinskaja", "2.08379", 32)):
        r, _ = _rate_row(s, label, name, printed)
        rows.append(r)
        rows.append(_flags_row(s, label, name, (PERRON,)))
        f = growth_series(corpus.get(name).graph)
        mult = root_multiplicity(f.denominator, 1)
        q = f.denominator // IntPolynomial([-1, 1])
        pal = is_self_reciprocal(q)
        desc = f"(t-1)^{mult} times {pal} degree {q.degree}"
        ok = mult == 1 and pal == PALINDROMIC and (deg is None or q.degree == deg)
        rows.append(Row(s, f"denominator {label}", "(t-1) q(t), q palindromic" + (f" of degree {deg}" if deg else ""), desc, ok))
        chi = euler_characteristic(f)
        rows.append(Row(s, f"Euler characteristic {label}", "0", str(chi), chi.value == 0 and chi.pole_order == 1))
    return rows


def _contains_zero(pair):
    lo, hi = (Fraction(sympy.Rational(x)) if x not in ("-inf", "inf") else None for x in pair)
    return lo is not None and hi is not None and lo <= 0 <= hi


def report_rows(dimension):
    scope = f"dim{dimension}"
    rep = minimality_report(dimension, abort=False)
    rows = [Row(scope, st.name, st.claim, st.computed, st.passed) for st in rep.steps]
    if dimension == 4:
        for name in corpus.LANNER:
            rows.append(_flags_row(scope, name, name, (PERRON,), (SALEM,)))
    rows.append(Row(scope, "minimal group", rep.minimal, rep.minimal, rep.passed))
    return rows


def run(scope):
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; expected one of {', '.join(SCOPES)}")
    rows = []
    if scope in ("dim4", "all"):
        rows += report_rows(4)
    if scope in ("dim5", "all"):
        rows += report_rows(5)
    if scope in ("examples", "all"):
        rows += example_rows()
    return rows


def format_table(rows):
    headers = ("name", "paper value", "computed", "verdict")
    data = [(r.name, r.reference, r.computed, "pass" if r.passed else "FAIL") for r in rows]
    clip = lambda s, n: s if len(s) <= n else s[: n - 3] + "..."
    widths = [min(max(len(headers[k]), *(len(d[k]) for d in data)), cap) for k, cap in enumerate((40, 48, 60, 7))]
    line = lambda cells: "  ".join(clip(c, w).ljust(w) for c, w in zip(cells, widths)).rstrip()
    out = [line(headers), line(["-" * w for w in widths])]
    out += [line(d) for d in data]
    failed = sum(not r.passed for r in rows)
    out.append(f"{len(rows) - failed} passed, {failed} failed")
    return "\n".join(out)
