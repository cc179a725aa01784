import pytest

import haarlab


def test_version_and_catalog():
    assert haarlab.__version__
    assert "H7" in haarlab.atlas_catalog()
    g = haarlab.atlas("D6xZ3")
    assert g.order == 18
    assert len(g.parse_set("abc,1,a")) == 3


def test_haar_graph_and_automorphisms():
    g = haarlab.atlas("D6xZ3")
    b = haarlab.haar_graph(g, "1,a,b,c,abc")
    assert b.graph.order == 36
    aut = haarlab.automorphism_group(b.graph)
    assert aut["order"] == 18
    assert len(aut["orbits"]) == 2
    assert haarlab.is_ghrr(g, "1,a,b,c,abc")
    assert haarlab.four_cycles_through_edge(b.graph, b.parse_vertex("1_0"), b.parse_vertex("b_1")) == 4


def test_cayley_verdicts():
    q = haarlab.atlas("Q8")
    v = haarlab.is_cayley_haar(haarlab.haar_graph(q, "1,a,b"))
    assert v["status"] == "CAYLEY"
    assert v["certificate"]
    f = haarlab.atlas("F20")
    v = haarlab.is_cayley_haar(haarlab.haar_graph(f, "1,a,g"))
    assert v["status"] == "NOT_CAYLEY"
    assert v["reason"] == "NO_REGULAR_SUBGROUP"
    z = haarlab.cyclic(5)
    assert haarlab.delta_shortcut(z, [0, 1, 2]) is not None
    assert haarlab.verify_normalizer(z, [0, 1, 2])["equal"]


def test_graph6_round_trip():
    g = haarlab.Graph(5)
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
    assert haarlab.Graph.from_graph6(g.to_graph6()) == g
    assert haarlab.is_vertex_transitive(g)
    assert haarlab.is_cayley(g)["status"] == "CAYLEY"


def test_targets_and_scan():
    r = haarlab.run_target("dihedral-cross-zp", n=[3], p=[3])
    assert r["schema"] == "haarlab.report/1"
    assert r["passed"]
    s = haarlab.scan("Z6", connected=True)
    assert s["summary"]["cayley"] == s["summary"]["connected"]


def test_errors():
    with pytest.raises(haarlab.UnknownName):
        haarlab.atlas("nonsense")
    with pytest.raises(haarlab.ParseError):
        haarlab.haar_graph(haarlab.atlas("Q8"), "1,z")
    with pytest.raises(haarlab.Error):
        haarlab.scan("Z40")
