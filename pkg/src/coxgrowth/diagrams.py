"""Recognition of connected Coxeter diagrams and finite-type data.

Spherical (finite) and affine diagrams are identified by shape: a diagram is
a path, a cycle, or a tree with one or two branch nodes, and the edge weights
then pin down the family.  Everything else is reported as indefinite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import INF, CoxeterMatrix, connected_components
from .poly import ONE, IntPolynomial, bracket

SPHERICAL = "Spherical"
AFFINE = "Affine"
INDEFINITE = "Indefinite"

DEFAULT_MAX_RANK = 25


class NotElliptic(ValueError):
    pass


@dataclass(frozen=True)
class DiagramType:
    kind: str
    family: str | None
    rank: int
    parameter: int | None = None

    @property
    def name(self):
        if self.family is None:
            return "indefinite"
        if self.family == "I2":
            return f"I2({self.parameter})"
        if self.family in ("E6", "E7", "E8", "F4", "H3", "H4"):
            return self.family
        if self.family.startswith("~"):
            base = self.family[1:]
            if base in ("E6", "E7", "E8", "F4", "G2"):
                return "~" + base
            return f"~{base}{self.rank - 1}"
        return f"{self.family}{self.rank}"

    def __str__(self):
        return self.name


def _indefinite(n):
    return DiagramType(INDEFINITE, None, n)


def _path_order(n, adj):
    ends = [v for v in range(n) if len(adj[v]) == 1]
    start = min(ends)
    order, prev = [start], None
    while len(order) < n:
        nxt = [u for u in adj[order[-1]] if u != prev]
        prev = order[-1]
        order.append(nxt[0])
    return order


def classify_connected(m):
    """Family of a connected Coxeter diagram given by its Coxeter matrix."""
    n = m.rank
    if len(connected_components(m)) != 1:
        raise ValueError("classify_connected needs a connected diagram")
    return _classify_rows(m.orders)


@lru_cache(maxsize=None)
def _classify_rows(rows):
    n = len(rows)
    if n == 1:
        return DiagramType(SPHERICAL, "A", 1)
    if any(rows[i][j] == INF for i in range(n) for j in range(n)):
        if n == 2:
            return DiagramType(AFFINE, "~A", 2)
        return _indefinite(n)
    if n == 2:
        w = rows[0][1]
        if w == 3:
            return DiagramType(SPHERICAL, "A", 2)
        if w == 4:
            return DiagramType(SPHERICAL, "B", 2)
        return DiagramType(SPHERICAL, "I2", 2, w)

    adj = {i: [j for j in range(n) if j != i and rows[i][j] != 2] for i in range(n)}
    edges = {(i, j): rows[i][j] for i in range(n) for j in range(i + 1, n) if rows[i][j] != 2}
    heavy = {e: w for e, w in edges.items() if w != 3}
    degrees = sorted(len(adj[v]) for v in range(n))

    if len(edges) == n:
        # connected with n edges: a single cycle iff every degree is 2
        if all(d == 2 for d in degrees) and not heavy:
            return DiagramType(AFFINE, "~A", n)
        return _indefinite(n)
    if len(edges) != n - 1:
        return _indefinite(n)

    if degrees[-1] <= 2:
        order = _path_order(n, adj)
        ws = [rows[order[k]][order[k + 1]] for k in range(n - 1)]
        return _classify_path(ws)

    branch = [v for v in range(n) if len(adj[v]) >= 3]
    if len(branch) == 1 and len(adj[branch[0]]) == 3:
        return _classify_star(rows, adj, branch[0], heavy)
    if heavy:
        return _indefinite(n)
    if len(branch) == 1 and len(adj[branch[0]]) == 4 and n == 5:
        return DiagramType(AFFINE, "~D", 5)
    if len(branch) == 2 and all(len(adj[v]) == 3 for v in branch):
        leaves = [sum(1 for u in adj[v] if len(adj[u]) == 1) for v in branch]
        if leaves == [2, 2]:
            return DiagramType(AFFINE, "~D", n)
    return _indefinite(n)


def _classify_path(ws):
    n = len(ws) + 1
    heavy = [(k, w) for k, w in enumerate(ws) if w != 3]
    if not heavy:
        return DiagramType(SPHERICAL, "A", n)
    if len(heavy) == 1:
        k, w = heavy[0]
        at_end = k in (0, n - 2)
        if w == 4:
            if at_end:
                return DiagramType(SPHERICAL, "B", n)
            if n == 4:
                return DiagramType(SPHERICAL, "F4", 4)
            if n == 5 and k in (1, 2):
                return DiagramType(AFFINE, "~F4", 5)
        elif w == 5 and at_end:
            if n == 3:
                return DiagramType(SPHERICAL, "H3", 3)
            if n == 4:
                return DiagramType(SPHERICAL, "H4", 4)
        elif w == 6 and n == 3:
            return DiagramType(AFFINE, "~G2", 3)
        return _indefinite(n)
    if len(heavy) == 2 and [w for _, w in heavy] == [4, 4] and {k for k, _ in heavy} == {0, n - 2}:
        return DiagramType(AFFINE, "~C", n)
    return _indefinite(n)


def _classify_star(rows, adj, centre, heavy):
    n = len(rows)
    arms = []
    for first in adj[centre]:
        arm, prev, cur = [first], centre, first
        while True:
            nxt = [u for u in adj[cur] if u != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                return _indefinite(n)
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    lengths = sorted(len(a) for a in arms)
    if not heavy:
        shape = tuple(lengths)
        if shape[:2] == (1, 1):
            return DiagramType(SPHERICAL, "D", n)
        table = {
            (1, 2, 2): (SPHERICAL, "E6"),
            (1, 2, 3): (SPHERICAL, "E7"),
            (1, 2, 4): (SPHERICAL, "E8"),
            (2, 2, 2): (AFFINE, "~E6"),
            (1, 3, 3): (AFFINE, "~E7"),
            (1, 2, 5): (AFFINE, "~E8"),
        }
        if shape in table:
            kind, fam = table[shape]
            return DiagramType(kind, fam, n)
        return _indefinite(n)
    if len(heavy) == 1 and list(heavy.values()) == [4] and lengths[:2] == [1, 1]:
        (i, j), _ = next(iter(heavy.items()))
        longest = max(arms, key=len)
        candidates = [a for a in arms if len(a) == len(longest)]
        for arm in candidates:
            path = [centre] + arm
            if {i, j} == {path[-2], path[-1]}:
                return DiagramType(AFFINE, "~B", n)
    return _indefinite(n)


# ---------------------------------------------------------------------------
# exponents and growth polynomials
# ---------------------------------------------------------------------------

_EXCEPTIONAL_EXPONENTS = {
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    "F4": (1, 5, 7, 11),
    "H3": (1, 5, 9),
    "H4": (1, 11, 19, 29),
}


def exponents(d):
    """Exponents of an irreducible spherical diagram, nondecreasing."""
    if d.kind != SPHERICAL:
        raise ValueError(f"exponents are defined for spherical diagrams, got {d.kind}")
    n = d.rank
    if d.family == "A":
        return tuple(range(1, n + 1))
    if d.family == "B":
        return tuple(range(1, 2 * n, 2))
    if d.family == "D":
        return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
    if d.family == "I2":
        return (1, d.parameter - 1)
    return _EXCEPTIONAL_EXPONENTS[d.family]


def is_elliptic(m, subset):
    """True iff every component of the induced diagram is spherical."""
    subset = sorted(subset)
    if not subset:
        return True
    sub = m.restrict(subset)
    return all(
        _classify_rows(sub.restrict(comp).orders).kind == SPHERICAL
        for comp in connected_components(sub)
    )


def solomon_degrees(m, subset):
    """Degrees m_i + 1 of the finite parabolic subgroup on ``subset``."""
    subset = sorted(subset)
    if not subset:
        return ()
    sub = m.restrict(subset)
    degrees = []
    for comp in connected_components(sub):
        d = _classify_rows(sub.restrict(comp).orders)
        if d.kind != SPHERICAL:
            raise NotElliptic(f"subset {[v + 1 for v in subset]} generates an infinite group")
        degrees.extend(e + 1 for e in exponents(d))
    return tuple(sorted(degrees))


def solomon_polynomial(m, subset):
    """Growth polynomial of the finite standard subgroup W_T."""
    degs = solomon_degrees(m, subset)
    return bracket(*degs) if degs else ONE


def enumerate_elliptic_subsets(m, max_rank=DEFAULT_MAX_RANK):
    """Yield every elliptic subset (as a sorted tuple) in lexicographic order.

    Depth-first over increasing node indices; a subset that is not elliptic is
    never extended, since supersets of infinite parabolics are infinite.
    """
    if m.rank > max_rank:
        raise ValueError(f"rank {m.rank} exceeds the enumeration bound {max_rank}")
    n = m.rank
    # subsets stay elliptic only if every node pair is finite
    finite = [[m[i, j] != INF for j in range(n)] for i in range(n)]

    def extend(current):
        yield tuple(current)
        start = current[-1] + 1 if current else 0
        for v in range(start, n):
            if not all(finite[v][u] for u in current):
                continue
            candidate = current + [v]
            if is_elliptic(m, candidate):
                yield from extend(candidate)

    yield from extend([])


def cosine_matrix(m):
    """Entries -cos(pi/m_ij) (and -1 for infinite order) as floats."""
    import math

    n = m.rank
    return [
        [1.0 if i == j else (-1.0 if m[i, j] == INF else -math.cos(math.pi / m[i, j])) for j in range(n)]
        for i in range(n)
    ]
