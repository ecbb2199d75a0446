"""Command-line interface: growth, rate, check and reproduce.

Every command prints a short human-readable summary, or with ``--json`` a
record ``{command, input, result, warnings, timings}``.  Polynomials are
integer arrays, lowest degree first; intervals are pairs of decimal strings.
Timings are only filled in with ``--timings`` so that output is otherwise
byte-for-byte reproducible.

Exit codes: 0 success, 1 input error, 2 computation failure,
3 violated invariant or failed reproduction row.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import corpus
from .diagrams import AFFINE, SPHERICAL, classify_connected
from .graph import (
    connected_components,
    coxeter_matrix,
    induced_subgraph,
    parse_graph_file,
    symbol_to_graph,
    validate_graph,
)
from .growth import euler_characteristic, growth_series, reciprocity_type, series_coefficients
from .lorentz import NoTruncation, compactness_check, gram_matrix, signature, with_solved_length
from .poly import squarefree_part
from .reproduce import SCOPES, format_table, run
from .roots import DEFAULT_EPS, PolynomialGrowth, classify_number, growth_rate, is_self_reciprocal, strip_cyclotomic

EXIT_OK, EXIT_INPUT, EXIT_COMPUTE, EXIT_PROPERTY = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------


def load_graph(args, warnings):
    """Graph from --symbol, --file or --fixture, plus the input record."""
    try:
        if args.symbol is not None:
            return symbol_to_graph(args.symbol), {"symbol": args.symbol}
        if args.fixture is not None:
            return corpus.get(args.fixture).graph, {"fixture": args.fixture}
        path = args.file
        if os.path.exists(path):
            with open(path) as fh:
                return parse_graph_file(fh.read()), {"file": path}
        name = os.path.basename(path)
        name = name[:-4] if name.endswith(".cox") else name
        if name in corpus.NAMES:
            warnings.append(f"{path} not found; using packaged fixture {name}")
            return corpus.get(name).graph, {"file": path, "fixture": name}
        raise InputError(f"no such file: {path}")
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc).strip("'\"")) from exc


def _epsilon(text):
    try:
        eps = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad precision {text!r}") from exc
    if not 0 < eps < 1:
        raise InputError("precision must lie strictly between 0 and 1")
    return eps


def _digits(eps):
    return max(5, math.ceil(-math.log10(eps)))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_growth(g, args, warnings):
    f = growth_series(g)
    chi = euler_characteristic(f)
    out = {
        "rank": g.rank,
        "numerator": list(f.numerator.coeffs),
        "denominator": list(f.denominator.coeffs),
        "reciprocity": reciprocity_type(f),
        "euler_characteristic": {"value": str(chi.value), "pole_order_at_1": chi.pole_order},
        "census_hash": f.census_hash,
    }
    if args.coeffs is not None:
        if args.coeffs < 0:
            raise InputError("--coeffs must be nonnegative")
        out["coefficients"] = series_coefficients(f, args.coeffs)
    return out, EXIT_OK


def cmd_rate(g, args, warnings):
    eps = DEFAULT_EPS if args.precision is None else _epsilon(args.precision)
    f = growth_series(g)
    try:
        tau = growth_rate(f, eps)
    except PolynomialGrowth as exc:
        return {"finite": f.is_polynomial(), "rate": "1", "interval": ["1", "1"], "note": str(exc)}, EXIT_OK
    cyc, core = strip_cyclotomic(squarefree_part(f.denominator.reverse()))
    cls = classify_number(tau.poly, tau)
    digits = _digits(eps)
    return {
        "finite": False,
        "rate": tau.decimal(digits),
        "interval": list(tau.interval_strings(digits + 3)),
        "polynomial": list(tau.poly.coeffs),
        "degree": tau.poly.degree,
        "self_reciprocal": is_self_reciprocal(core),
        "stripped_cyclotomic": list(cyc),
        "number_class": cls.as_dict(),
    }, EXIT_OK


def _diagram_kind(g):
    kinds = []
    for comp in connected_components(g):
        kinds.append(classify_connected(coxeter_matrix(induced_subgraph(g, comp))).kind)
    if all(k == SPHERICAL for k in kinds):
        return "spherical"
    if all(k in (SPHERICAL, AFFINE) for k in kinds):
        return "affine"
    return "indefinite"


def cmd_check(g, args, warnings):
    dim = args.dim if args.dim is not None else g.dim
    if dim is not None and dim < 1:
        raise InputError("--dim must be positive")
    diag = validate_graph(g)
    out = {"rank": g.rank, "dim": dim, "diagnostics": diag.as_dict(), "diagram": _diagram_kind(g)}
    free = [(i, j) for i, j, w in g.dotted_edges() if w.cosh is None]
    if len(free) == 1:
        try:
            g, sol = with_solved_length(g, dim)
            out["prism_length"] = sol.as_dict()
        except NoTruncation:
            # parallel facets, as in [inf,3]: keep -1
            warnings.append("no distance with cosh l > 1 makes det Gr vanish; dotted edge taken as -1")
    elif len(free) > 1:
        warnings.append(f"{len(free)} dotted edges without distance; each taken as -1 in the Gram matrix")
    sig = signature(gram_matrix(g))
    out["signature"] = sig.as_dict()
    hyperbolic = sig.negatives == 1 and (dim is None or sig.positives == dim)
    out["hyperbolic"] = hyperbolic
    out["verdict"] = "hyperbolic" if hyperbolic else "not hyperbolic"
    if hyperbolic and dim is not None:
        if g.rank < dim:
            raise InputError(f"rank {g.rank} is smaller than the dimension {dim}")
        out["compactness"] = compactness_check(g, dim).as_dict()
    elif dim is None:
        warnings.append("no dimension given; compactness not checked")
    # a dotted edge across a cut node cannot occur in a polyhedron graph
    sound = diag.ok or not hyperbolic
    code = EXIT_OK if sig.certified and sound else EXIT_PROPERTY
    return out, code


def cmd_reproduce(args, warnings):
    rows = run(args.scope)
    failed = [r.name for r in rows if not r.passed]
    out = {
        "scope": args.scope,
        "rows": [r.as_dict() for r in rows],
        "passed": len(rows) - len(failed),
        "failed": len(failed),
    }
    return out, (EXIT_PROPERTY if failed else EXIT_OK), format_table(rows)


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _flatten(value, prefix=""):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _flatten(v, f"{prefix}{k}.")
        return
    yield prefix.rstrip("."), value


def render(result):
    lines = []
    for key, value in _flatten(result):
        if isinstance(value, list):
            value = "[" + ", ".join(str(x) for x in value) + "]"
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def build_parser():
    p = _Parser(prog="coxgrowth", description="Growth series and growth rates of Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_command(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--symbol", help='Coxeter symbol such as "[5,3,3,3]"')
        src.add_argument("--file", help="graph file (.cox); packaged fixtures are found by name")
        src.add_argument("--fixture", choices=corpus.NAMES, metavar="NAME", help="packaged fixture")
        sp.add_argument("--json", action="store_true", help="emit a JSON record")
        sp.add_argument("--timings", action="store_true", help="record wall-clock time")
        return sp

    graph_command("growth", "growth series as a rational function").add_argument(
        "--coeffs", type=int, metavar="K", help="also list the coefficients a_0..a_K"
    )
    graph_command("rate", "growth rate, defining polynomial and number class").add_argument(
        "--precision", metavar="EPS", help="width of the isolating interval (default 1e-12)"
    )
    graph_command("check", "diagnostics, Gram signature, compactness").add_argument(
        "--dim", type=int, metavar="N", help="dimension of the hyperbolic space"
    )
    rp = sub.add_parser("reproduce", help="compare reference values with computed ones")
    rp.add_argument("scope", choices=SCOPES)
    rp.add_argument("--json", action="store_true", help="emit a JSON record")
    rp.add_argument("--timings", action="store_true", help="record wall-clock time")
    return p


COMMANDS = {"growth": cmd_growth, "rate": cmd_rate, "check": cmd_check}


def main(argv=None):
    args = build_parser().parse_args(argv)
    warnings = []
    record = {"command": args.command, "input": {}, "result": None, "warnings": warnings, "timings": {}}
    start = time.perf_counter()
    table = None
    try:
        if args.command == "reproduce":
            record["input"] = {"scope": args.scope}
            result, code, table = cmd_reproduce(args, warnings)
        else:
            g, record["input"] = load_graph(args, warnings)
            result, code = COMMANDS[args.command](g, args, warnings)
    except InputError as exc:
        return _fail(args, record, EXIT_INPUT, f"input error: {exc}")
    except (ArithmeticError, ValueError, RecursionError) as exc:
        return _fail(args, record, EXIT_COMPUTE, f"computation failed: {exc}")
    record["result"] = result
    if args.timings:
        record["timings"] = {"total_seconds": round(time.perf_counter() - start, 6)}
    if args.json:
        print(json.dumps(record, indent=2))
    else:
        print(table if table is not None else render(result))
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
        if args.timings:
            print(f"time: {record['timings']['total_seconds']:.3f} s", file=sys.stderr)
    return code


def _fail(args, record, code, message):
    record["error"] = message
    if getattr(args, "json", False):
        print(json.dumps(record, indent=2))
    print(f"coxgrowth: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
