import pytest
from hypothesis import given, strategies as st

from coxgrowth import corpus
from coxgrowth.graph import (
    INF,
    Dotted,
    GraphFormatError,
    SymbolSyntaxError,
    VinbergGraph,
    coxeter_matrix,
    induced_subgraph,
    parse_graph_file,
    serialize_graph,
    symbol_to_graph,
    validate_graph,
)


def edges_of(g):
    return [(i + 1, j + 1, str(w)) for i, j, w in g.edges]


def test_linear_symbol():
    g = symbol_to_graph("[5,3,3,3]")
    assert g.rank == 5
    assert edges_of(g) == [(1, 2, "5"), (2, 3, "3"), (3, 4, "3"), (4, 5, "3")]


def test_cycle_symbol():
    g = symbol_to_graph("[(3^4,4)]")
    assert g.rank == 5
    assert sorted(edges_of(g)) == [(1, 2, "3"), (1, 5, "4"), (2, 3, "3"), (3, 4, "3"), (4, 5, "3")]


def test_branch_symbol():
    g = symbol_to_graph("[5,3,3^{1,1}]")
    assert edges_of(g) == [(1, 2, "5"), (2, 3, "3"), (3, 4, "3"), (3, 5, "3")]


def test_two_cycles_joined():
    g = symbol_to_graph("[(3,4,3),4,(3,4,3)]")
    assert g.rank == 6
    assert (1, 4, "4") in edges_of(g)


def test_infinite_weight_is_dotted():
    g = symbol_to_graph("[inf,3]")
    assert isinstance(g.label(0, 1), Dotted)
    assert coxeter_matrix(g)[0, 1] == INF


@pytest.mark.parametrize(
    "text, offset",
    [("[5,3", 4), ("5,3]", 0), ("[5,,3]", 3), ("[1,3]", 1), ("[5,x]", 3), ("", 0)],
)
def test_symbol_errors_carry_offsets(text, offset):
    with pytest.raises(SymbolSyntaxError) as info:
        symbol_to_graph(text)
    assert info.value.offset == offset


@pytest.mark.parametrize(
    "text, line",
    [
        ("edge 1 2 3", 1),
        ("rank 2\nedge 2 1 3", 2),
        ("rank 2\nedge 1 3 3", 2),
        ("rank 2\nedge 1 2 1", 2),
        ("rank 2\nedge 1 2 3\ncosh 1 2 2", 3),
        ("rank 2\nedge 1 2 inf\ncosh 1 2 1/2", 3),
        ("rank 2\nfoo", 2),
        ("rank 2\n# c\nedge 1 2 3\nedge 1 2 4", 4),
    ],
)
def test_file_errors_carry_lines(text, line):
    with pytest.raises(GraphFormatError) as info:
        parse_graph_file(text)
    assert info.value.line == line


def test_symbol_statement_matches_edges():
    a = parse_graph_file("rank 5\ndim 4\nsymbol [5,3,3,3]\n")
    b = parse_graph_file("rank 5\ndim 4\nedge 1 2 5\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\n")
    assert a == b


def test_cosh_values():
    g = parse_graph_file("rank 2\nedge 1 2 inf\ncosh 1 2 (7+1*sqrt(5))/2\n")
    assert abs(float(g.label(0, 1).cosh) - 4.618033988749895) < 1e-12
    g = parse_graph_file("rank 2\nedge 1 2 inf\ncosh 1 2 9/8\n")
    assert g.label(0, 1).cosh.text == "9/8"


@pytest.mark.parametrize("name", corpus.NAMES)
def test_fixture_round_trip(name):
    g = corpus.get(name).graph
    assert parse_graph_file(serialize_graph(g)) == g


@pytest.mark.parametrize("name", corpus.NAMES)
def test_fixture_has_provenance_comment(name):
    fx = corpus.get(name)
    assert fx.text.lstrip().startswith("#")
    assert fx.reference


weights = st.sampled_from([3, 4, 5, 6, INF])


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return VinbergGraph(n, tuple((i, j, draw(weights)) for i, j in chosen), draw(st.one_of(st.none(), st.integers(2, 6))))


@given(graphs())
def test_serialization_round_trip(g):
    text = serialize_graph(g)
    assert parse_graph_file(text) == g
    assert serialize_graph(parse_graph_file(text)) == text


def test_induced_subgraph_relabels():
    g = symbol_to_graph("[5,3,3,3]")
    h = induced_subgraph(g, [2, 3, 4])
    assert h.rank == 3 and h.origin == (2, 3, 4)
    assert edges_of(h) == [(1, 2, "3"), (2, 3, "3")]


def test_validate_flags_dotted_edges_across_cut_node():
    ok = validate_graph(symbol_to_graph("[inf,3,inf]"))
    assert ok.connected and ok.dotted_count == 2 and not ok.dotted_cut_violations
    bad = validate_graph(VinbergGraph.from_edges(5, [(1, 2, INF), (2, 3, 3), (3, 4, 3), (4, 5, INF)]))
    assert bad.dotted_cut_violations == (2,)
    assert not bad.ok


def test_disconnected_graph():
    d = validate_graph(VinbergGraph.from_edges(4, [(1, 2, 3), (3, 4, 5)]))
    assert not d.connected and d.component_count == 2
