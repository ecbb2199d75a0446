"""Named fixture graphs and the reference values attached to them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graph import parse_graph_file
from .poly import ONE, IntPolynomial, RationalFunction, bracket


@dataclass(frozen=True)
class Fixture:
    name: str
    dim: int | None
    compact: bool | None  # None: abstract group, no polyhedron attached
    tau: str | None  # printed growth rate, when there is one
    reference: str
    text: str

    @property
    def graph(self):
        return parse_graph_file(self.text)

    @property
    def cocompact(self):
        return bool(self.compact)

    def solved_graph(self):
        """Graph with every free dotted distance filled in from det Gr = 0."""
        return _solved(self.name)


# name: (compact, printed tau)
_META = {
    "lanner-5333": (True, "1.19988"),
    "lanner-5334": (True, "1.38868"),
    "lanner-5335": (True, "1.51662"),
    "lanner-533-11": (True, "1.44970"),
    "lanner-cycle": (True, "1.62282"),
    "esselmann-1": (True, None),
    "esselmann-2": (True, None),
    "esselmann-3": (True, None),
    "esselmann-4": (True, None),
    "esselmann-5": (True, None),
    "esselmann-6": (True, None),
    "esselmann-7": (True, None),
    "kaplinskaja": (True, "2.08379"),
    "tumarkin": (True, None),
    "makarov": (True, "1.64759"),
    "makarov-m4": (True, None),
    "simplex-53333": (False, None),
    "triangle-7-3": (True, "1.17628"),
    "triangle-8-3": (True, "1.23039"),
    "triangle-inf-3": (False, "1.32471"),
    "tetrahedral-353": (True, "1.35098"),
    "lambert-q": (True, "1.72208"),
    "sigma": (None, None),
    "w1": (None, "1.72208"),
    "w2": (False, None),
    "w3": (False, None),
    "w4": (False, None),
}

LANNER = ["lanner-5333", "lanner-5334", "lanner-5335", "lanner-533-11", "lanner-cycle"]
ESSELMANN = [f"esselmann-{i}" for i in range(1, 8)]
PRISMS = ["makarov", "makarov-m4", "kaplinskaja"]
DOTTED = ["lambert-q", "makarov", "makarov-m4", "kaplinskaja", "tumarkin"]
NAMES = sorted(_META)


@lru_cache(maxsize=None)
def get(name):
    if name not in _META:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")
    text = resources.files(__package__).joinpath("fixtures", f"{name}.cox").read_text()
    compact, tau = _META[name]
    return Fixture(name, parse_graph_file(text).dim, compact, tau, _first_comment(text), text)


def _first_comment(text):
    for line in text.splitlines():
        if line.startswith("#"):
            return line.lstrip("# ").strip()
    return ""


def all_fixtures():
    return [get(n) for n in NAMES]


def cocompact():
    return [f for f in all_fixtures() if f.compact]


@lru_cache(maxsize=None)
def _solved(name):
    from .lorentz import NoTruncation, with_solved_length

    g = get(name).graph
    free = [e for e in g.dotted_edges() if e[2].cosh is None]
    if len(free) == 1:
        try:
            return with_solved_length(g)[0]
        except NoTruncation:
            pass  # parallel facets: the -1 entry is already right
    return g


def _frac(n, *degs):
    return RationalFunction(IntPolynomial([n]), bracket(*degs))


def help_function():
    """h(t) = 1 - 4/[2] + 3/[2,2] + 1/[2,3]."""
    one = RationalFunction(ONE, ONE)
    return one - _frac(4, 2) + _frac(3, 2, 2) + _frac(1, 2, 3)


def difference_identities():
    """Right-hand sides of identities (a)-(d) and the differences built on them."""
    from .growth import steinberg_sum

    one = RationalFunction(ONE, ONE)
    h = help_function()
    d = one - _frac(4, 2) + _frac(3, 2, 2) + _frac(2, 2, 4) - _frac(2, 2, 2, 4)
    s = {k: steinberg_sum(get(k).graph) for k in ("w1", "w2", "w3", "w4")}
    d14 = RationalFunction(IntPolynomial([1, 0, 0, 0, 1]), bracket(2, 2, 3, 4))
    return {
        "(a)": h,
        "(a) text": "h(t)",
        "(b)": h - _frac(1, 2, 2, 3),
        "(b) text": "h(t) - 1/[2,2,3]",
        "(c)": h - _frac(1, 2, 2, 2),
        "(c) text": "h(t) - 1/[2,2,2]",
        "(d)": d,
        "(d) text": "1 - 4/[2] + 3/[2,2] + 2/[2,4] - 2/[2,2,4]",
        "W1-W2": (s["w1"] - s["w2"], _frac(1, 2, 2, 3), "1/f1(1/t) - 1/f2(1/t) = 1/[2,2,3]"),
        "W1-W3": (s["w1"] - s["w3"], _frac(1, 2, 2, 2), "1/f1(1/t) - 1/f3(1/t) = 1/[2,2,2]"),
        "W1-W4": (s["w1"] - s["w4"], d14, "1/f1(1/t) - 1/f4(1/t) = (t^4+1)/[2,2,3,4]"),
    }
