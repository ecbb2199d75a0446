"""Coxeter matrices, Vinberg graphs, Coxeter symbols and the graph file format.

Node indices are 0-based in Python objects and 1-based in files, symbols and
command-line output.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import sympy

INF = math.inf


class SymbolSyntaxError(ValueError):
    """Malformed Coxeter symbol; ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class GraphFormatError(ValueError):
    """Malformed graph file; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


# ---------------------------------------------------------------------------
# distances attached to dotted edges
# ---------------------------------------------------------------------------

_SURD_RE = re.compile(
    r"^\s*\(?\s*(?P<a>[+-]?\d+)\s*(?P<sign>[+-])\s*(?P<b>\d+)\s*\*\s*sqrt\(\s*(?P<c>\d+)\s*\)\s*\)?"
    r"\s*(?:/\s*(?P<d>\d+))?\s*$"
)


@dataclass(frozen=True)
class CoshValue:
    """Exact value of cosh(l) for a dotted edge.

    ``text`` is the canonical file spelling; ``value`` the sympy number.
    Accepted spellings: decimal (``1.07448``), rational (``9/8``) and
    quadratic surd ``a+b*sqrt(c)/d`` meaning (a + b*sqrt(c))/d.
    Values produced by the prism-length solver may be arbitrary algebraic
    sympy expressions; those serialize with ``sympy.srepr``-free ``str``.
    """

    text: str
    value: sympy.Expr = field(compare=False, hash=False)

    @classmethod
    def parse(cls, text):
        text = text.strip()
        m = _SURD_RE.match(text)
        if m:
            a, b, c = int(m["a"]), int(m["b"]), int(m["c"])
            if m["sign"] == "-":
                b = -b
            d = int(m["d"] or 1)
            if d == 0:
                raise ValueError("zero denominator in surd")
            value = (sympy.Integer(a) + sympy.Integer(b) * sympy.sqrt(c)) / d
        elif re.fullmatch(r"[+-]?\d+/\d+", text):
            value = sympy.Rational(Fraction(text))
        elif re.fullmatch(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?", text):
            value = sympy.Rational(Fraction(text))
        else:
            raise ValueError(f"malformed cosh value {text!r}")
        return cls(text, value)

    @classmethod
    def from_expr(cls, expr):
        expr = sympy.nsimplify(expr) if expr.is_Float else expr
        return cls(str(expr), expr)

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class Dotted:
    """Edge between disjoint facets, optionally carrying cosh of their distance."""

    cosh: CoshValue | None = None

    def __str__(self):
        return "inf"


def _check_weight(w):
    if isinstance(w, Dotted):
        if w.cosh is not None and not w.cosh.value > 1:
            raise ValueError(f"cosh distance must exceed 1, got {w.cosh.text}")
        return w
    if w == INF:
        return Dotted()
    if not isinstance(w, int) or w < 3:
        raise ValueError(f"edge weight must be an integer >= 3 or inf, got {w!r}")
    return w


# ---------------------------------------------------------------------------
# Coxeter matrix and Vinberg graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric table of orders m_ij; ``INF`` marks infinite order."""

    orders: tuple

    def __post_init__(self):
        n = len(self.orders)
        for i, row in enumerate(self.orders):
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
            if row[i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j, m in enumerate(row):
                if m != self.orders[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and not (m == INF or (isinstance(m, int) and m >= 2)):
                    raise ValueError(f"off-diagonal order must be >= 2 or inf, got {m!r}")

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(INF if m == INF else int(m) for m in row) for row in rows))

    @property
    def rank(self):
        return len(self.orders)

    def __getitem__(self, ij):
        i, j = ij
        return self.orders[i][j]

    def restrict(self, nodes):
        nodes = list(nodes)
        return CoxeterMatrix(tuple(tuple(self.orders[i][j] for j in nodes) for i in nodes))

    def neighbours(self, i):
        return [j for j in range(self.rank) if j != i and self.orders[i][j] != 2]

    def permute(self, perm):
        """Relabel: new node k is old node perm[k]."""
        return self.restrict(perm)


@dataclass(frozen=True)
class VinbergGraph:
    """Graph of a Coxeter polyhedron or abstract Coxeter system.

    ``edges`` holds sorted ``(i, j, label)`` triples with ``i < j`` and label
    an int weight >= 3 or a :class:`Dotted`.  Unlisted pairs have order 2.
    ``origin`` records, for induced subgraphs, the parent index of each node.
    """

    rank: int
    edges: tuple = ()
    dim: int | None = None
    origin: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("a graph needs at least one node")
        seen = set()
        canon = []
        for i, j, w in self.edges:
            if i == j:
                raise ValueError(f"self-loop at node {i + 1}")
            if i > j:
                i, j = j, i
            if not (0 <= i and j < self.rank):
                raise ValueError(f"edge ({i + 1}, {j + 1}) out of range for rank {self.rank}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i + 1}, {j + 1})")
            seen.add((i, j))
            canon.append((i, j, _check_weight(w)))
        canon.sort(key=lambda e: (e[0], e[1]))
        object.__setattr__(self, "edges", tuple(canon))

    @classmethod
    def from_edges(cls, rank, edges, dim=None):
        """Build from 1-based ``(i, j, w)`` triples; ``w`` may be ``INF``."""
        return cls(rank, tuple((i - 1, j - 1, w) for i, j, w in edges), dim)

    def label(self, i, j):
        """Edge label between i and j, or 2 when absent."""
        if i > j:
            i, j = j, i
        for a, b, w in self.edges:
            if (a, b) == (i, j):
                return w
        return 2

    def adjacency(self):
        adj = {i: set() for i in range(self.rank)}
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def dotted_edges(self):
        return [(i, j, w) for i, j, w in self.edges if isinstance(w, Dotted)]

    def with_cosh(self, i, j, value):
        """Copy with a distance attached to the dotted edge (i, j)."""
        if i > j:
            i, j = j, i
        if not isinstance(self.label(i, j), Dotted):
            raise ValueError(f"no dotted edge between nodes {i + 1} and {j + 1}")
        cosh = value if isinstance(value, CoshValue) else CoshValue.from_expr(value)
        edges = [(a, b, Dotted(cosh) if (a, b) == (i, j) else w) for a, b, w in self.edges]
        return VinbergGraph(self.rank, tuple(edges), self.dim)

    def with_dim(self, dim):
        return VinbergGraph(self.rank, self.edges, dim)


def coxeter_matrix(g):
    """Coxeter matrix of a Vinberg graph (dotted edges become infinite order)."""
    rows = [[1 if i == j else 2 for j in range(g.rank)] for i in range(g.rank)]
    for i, j, w in g.edges:
        m = INF if isinstance(w, Dotted) else w
        rows[i][j] = rows[j][i] = m
    return CoxeterMatrix(tuple(tuple(r) for r in rows))


def graph_from_matrix(m):
    edges = []
    for i, j in combinations(range(m.rank), 2):
        if m[i, j] != 2:
            edges.append((i, j, Dotted() if m[i, j] == INF else m[i, j]))
    return VinbergGraph(m.rank, tuple(edges))


def induced_subgraph(g, nodes):
    """Node-induced subgraph, relabeled 0..k-1 in increasing parent order."""
    nodes = sorted(set(nodes))
    if not nodes:
        raise ValueError("induced subgraph needs a nonempty node set")
    for v in nodes:
        if not 0 <= v < g.rank:
            raise ValueError(f"node {v + 1} out of range")
    index = {v: k for k, v in enumerate(nodes)}
    edges = tuple((index[i], index[j], w) for i, j, w in g.edges if i in index and j in index)
    return VinbergGraph(len(nodes), edges, None, origin=tuple(nodes))


# ---------------------------------------------------------------------------
# Coxeter symbols
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    weights: tuple  # len(weights) + 1 nodes


@dataclass(frozen=True)
class Cycle:
    weights: tuple  # one node per weight


@dataclass(frozen=True)
class BranchTail:
    weight: int


@dataclass(frozen=True)
class CoxeterSymbol:
    """Parsed bracket symbol.

    ``separators[k]`` is the weight joining component k to component k+1, or
    ``None`` when a :class:`BranchTail` hangs directly off the previous
    component.
    """

    components: tuple
    separators: tuple
    text: str = field(default="", compare=False)


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise SymbolSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self):
        self.skip()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            raise SymbolSyntaxError("expected an integer", self.pos)
        start = self.pos
        self.pos += m.end()
        return int(m.group()), start

    def weight(self):
        self.skip()
        rest = self.text[self.pos:]
        for token in ("inf", "∞"):
            if rest.startswith(token):
                start = self.pos
                self.pos += len(token)
                return INF, start
        value, start = self.integer()
        if value < 3:
            raise SymbolSyntaxError(f"weight {value} < 3", start)
        return value, start


def parse_coxeter_symbol(text):
    """Parse ``[5,3,3,3]``, ``[(3^4,4)]``, ``[5,3,3^{1,1}]``, ...

    >>> parse_coxeter_symbol("[(3^4,4)]").components
    (Cycle(weights=(3, 3, 3, 3, 4)),)
    """
    sc = _Scanner(text)
    sc.expect("[")
    parts = []  # ("w", weight) | ("cycle", weights) | ("branch", p)
    while True:
        if sc.peek() == "(":
            start = sc.pos
            sc.pos += 1
            weights = []
            while True:
                w, _ = sc.weight()
                if sc.peek() == "^":
                    sc.pos += 1
                    rep, at = sc.integer()
                    if rep < 1:
                        raise SymbolSyntaxError("repetition count must be positive", at)
                    weights.extend([w] * rep)
                else:
                    weights.append(w)
                if sc.peek() == ",":
                    sc.pos += 1
                    continue
                sc.expect(")")
                break
            if len(weights) < 3:
                raise SymbolSyntaxError("a cycle needs at least 3 weights", start)
            parts.append(("cycle", tuple(weights), start))
        else:
            w, start = sc.weight()
            if sc.peek() == "^":
                sc.pos += 1
                at = sc.pos
                m = re.match(r"\{\s*(\d+)\s*,\s*(\d+)\s*\}", sc.text[sc.pos:])
                if not m or (m.group(1), m.group(2)) != ("1", "1"):
                    raise SymbolSyntaxError("only the branch exponent ^{1,1} is supported", at)
                sc.pos += m.end()
                parts.append(("branch", w, start))
            else:
                parts.append(("w", w, start))
        if sc.peek() == ",":
            sc.pos += 1
            continue
        sc.expect("]")
        break
    sc.skip()
    if sc.pos != len(text):
        raise SymbolSyntaxError("trailing characters after symbol", sc.pos)
    for kind, _, start in parts[:-1]:
        if kind == "branch":
            raise SymbolSyntaxError("a ^{1,1} branch may only end a symbol", start)
    return _assemble(parts, text)


def _assemble(parts, text):
    components, separators = [], []
    run = []

    def close_run(anchor, start):
        # glue the pending weight run between the last component and `anchor`
        ws = list(run)
        run.clear()
        if components:
            if not ws:
                if anchor == "cycle":
                    raise SymbolSyntaxError("adjacent components need a joining weight", start)
                return
            separators.append(ws.pop(0))
            if anchor == "cycle":
                if ws:
                    components.append(Chain(tuple(ws[:-1])))
                    separators.append(ws[-1])
            else:
                components.append(Chain(tuple(ws)))
        elif anchor == "cycle":
            if ws:
                components.append(Chain(tuple(ws[:-1])))
                separators.append(ws[-1])
        else:
            components.append(Chain(tuple(ws)))

    for kind, value, start in parts:
        if kind == "w":
            run.append(value)
        elif kind == "cycle":
            close_run("cycle", start)
            components.append(Cycle(value))
        else:
            close_run("branch", start)
            separators.append(None)
            components.append(BranchTail(value))
    if run:
        close_run("end", len(text))
    return CoxeterSymbol(tuple(components), tuple(separators), text)


def symbol_to_graph(sym):
    """Expand a parsed symbol into its graph (nodes numbered in reading order)."""
    if isinstance(sym, str):
        sym = parse_coxeter_symbol(sym)
    edges = []
    n = 0
    entry = exit_ = None
    prev_exit = None
    for k, comp in enumerate(sym.components):
        if isinstance(comp, Chain):
            nodes = list(range(n, n + len(comp.weights) + 1))
            n += len(nodes)
            for a, w in enumerate(comp.weights):
                edges.append((nodes[a], nodes[a + 1], w))
            entry, exit_ = nodes[0], nodes[-1]
        elif isinstance(comp, Cycle):
            nodes = list(range(n, n + len(comp.weights)))
            n += len(nodes)
            L = len(nodes)
            for a, w in enumerate(comp.weights):
                edges.append((nodes[a], nodes[(a + 1) % L], w))
            # a cycle attaches through the node between its last and first weight
            entry = exit_ = nodes[0]
        else:
            a, b = n, n + 1
            n += 2
            edges.append((prev_exit, a, comp.weight))
            edges.append((prev_exit, b, comp.weight))
            entry = exit_ = prev_exit
        if k > 0 and not isinstance(comp, BranchTail):
            edges.append((prev_exit, entry, sym.separators[k - 1]))
        prev_exit = exit_
    return VinbergGraph(n, tuple(edges))


def symbol_matrix(text):
    return coxeter_matrix(symbol_to_graph(text))


# ---------------------------------------------------------------------------
# graph file format
# ---------------------------------------------------------------------------


def _parse_weight(token, lineno):
    if token in ("inf", "∞"):
        return Dotted()
    if not re.fullmatch(r"\d+", token):
        raise GraphFormatError(f"malformed weight {token!r}", lineno)
    w = int(token)
    if w < 3:
        raise GraphFormatError(f"weight {w} < 3 (order-2 pairs are simply not listed)", lineno)
    return w


def parse_graph_file(text):
    """Parse the line-oriented graph format (see README for the grammar)."""
    rank = dim = None
    edges = {}
    cosh_lines = []
    symbol = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        args = rest.split()
        if rank is None and key != "rank":
            raise GraphFormatError("the first statement must be 'rank N'", lineno)
        if key == "rank":
            if rank is not None:
                raise GraphFormatError("rank declared twice", lineno)
            if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                raise GraphFormatError("rank needs one positive integer", lineno)
            rank = int(args[0])
        elif key == "dim":
            if len(args) != 1 or not args[0].isdigit():
                raise GraphFormatError("dim needs one integer", lineno)
            dim = int(args[0])
        elif key == "edge":
            if len(args) != 3:
                raise GraphFormatError("edge needs 'edge i j w'", lineno)
            i, j = _node_pair(args, rank, lineno)
            if (i, j) in edges:
                raise GraphFormatError(f"duplicate edge {i + 1} {j + 1}", lineno)
            edges[(i, j)] = _parse_weight(args[2], lineno)
        elif key == "cosh":
            if len(args) < 3:
                raise GraphFormatError("cosh needs 'cosh i j value'", lineno)
            i, j = _node_pair(args[:2], rank, lineno)
            try:
                value = CoshValue.parse(" ".join(args[2:]))
            except ValueError as exc:
                raise GraphFormatError(str(exc), lineno) from None
            if not value.value > 1:
                raise GraphFormatError(f"cosh distance must exceed 1, got {value.text}", lineno)
            cosh_lines.append((i, j, value, lineno))
        elif key == "symbol":
            try:
                symbol = symbol_to_graph(parse_coxeter_symbol(rest.strip()))
            except SymbolSyntaxError as exc:
                raise GraphFormatError(str(exc), lineno) from None
            if symbol.rank != rank:
                raise GraphFormatError(f"symbol has {symbol.rank} nodes but rank is {rank}", lineno)
        else:
            raise GraphFormatError(f"unknown statement {key!r}", lineno)
    if rank is None:
        raise GraphFormatError("missing 'rank N'")
    if symbol is not None:
        if edges:
            raise GraphFormatError("'symbol' replaces edge lines; do not give both")
        edges = {(i, j): w for i, j, w in symbol.edges}
    for i, j, value, lineno in cosh_lines:
        if not isinstance(edges.get((i, j)), Dotted):
            raise GraphFormatError(f"cosh given for {i + 1} {j + 1}, which is not a dotted edge", lineno)
        if edges[(i, j)].cosh is not None:
            raise GraphFormatError(f"cosh given twice for {i + 1} {j + 1}", lineno)
        edges[(i, j)] = Dotted(value)
    return VinbergGraph(rank, tuple((i, j, w) for (i, j), w in edges.items()), dim)


def _node_pair(args, rank, lineno):
    try:
        i, j = int(args[0]), int(args[1])
    except ValueError:
        raise GraphFormatError("node indices must be integers", lineno) from None
    for v in (i, j):
        if not 1 <= v <= rank:
            raise GraphFormatError(f"node index {v} out of range 1..{rank}", lineno)
    if i >= j:
        raise GraphFormatError("node pairs must be written with i < j", lineno)
    return i - 1, j - 1


def serialize_graph(g):
    """Canonical text form; ``parse_graph_file`` inverts it exactly."""
    lines = [f"rank {g.rank}"]
    if g.dim is not None:
        lines.append(f"dim {g.dim}")
    for i, j, w in g.edges:
        lines.append(f"edge {i + 1} {j + 1} {'inf' if isinstance(w, Dotted) else w}")
    for i, j, w in g.edges:
        if isinstance(w, Dotted) and w.cosh is not None:
            lines.append(f"cosh {i + 1} {j + 1} {w.cosh.text}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _components(nodes, adj):
    nodes = set(nodes)
    out = []
    while nodes:
        start = min(nodes)
        comp, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u in nodes and u not in comp:
                    comp.add(u)
                    stack.append(u)
        nodes -= comp
        out.append(sorted(comp))
    return out


def connected_components(g_or_matrix, nodes=None):
    if isinstance(g_or_matrix, CoxeterMatrix):
        m = g_or_matrix
        adj = {i: set(m.neighbours(i)) for i in range(m.rank)}
        rank = m.rank
    else:
        adj = g_or_matrix.adjacency()
        rank = g_or_matrix.rank
    return _components(range(rank) if nodes is None else nodes, adj)


@dataclass(frozen=True)
class GraphDiagnostics:
    connected: bool
    component_count: int
    dotted_count: int
    cut_nodes: tuple
    dotted_cut_violations: tuple  # cut nodes separating two dotted edges
    facets_mutually_intersecting: bool

    @property
    def ok(self):
        return self.connected and not self.dotted_cut_violations

    def as_dict(self):
        return {
            "connected": self.connected,
            "component_count": self.component_count,
            "dotted_count": self.dotted_count,
            "cut_nodes": [v + 1 for v in self.cut_nodes],
            "dotted_cut_violations": [v + 1 for v in self.dotted_cut_violations],
            "facets_mutually_intersecting": self.facets_mutually_intersecting,
        }


def validate_graph(g):
    """Combinatorial sanity checks for a compact polyhedron graph."""
    adj = g.adjacency()
    comps = _components(range(g.rank), adj)
    dotted = g.dotted_edges()
    cut_nodes, violations = [], []
    for v in range(g.rank):
        rest = [u for u in range(g.rank) if u != v]
        pieces = _components(rest, adj)
        base = len(comps)
        if len(pieces) <= base:
            continue
        cut_nodes.append(v)
        with_dotted = 0
        for piece in pieces:
            s = set(piece)
            if any(i in s and j in s for i, j, _ in dotted):
                with_dotted += 1
        if with_dotted > 1:
            violations.append(v)
    return GraphDiagnostics(
        connected=len(comps) == 1,
        component_count=len(comps),
        dotted_count=len(dotted),
        cut_nodes=tuple(cut_nodes),
        dotted_cut_violations=tuple(violations),
        facets_mutually_intersecting=not dotted,
    )
