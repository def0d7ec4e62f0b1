import math

import conex


def test_graph_basics():
    g = conex.Graph.complete(4)
    assert g.edge_count() == 6
    assert g.is_connected()
    star = conex.Graph.from_graph6("D?{")
    assert star.edge_count() == 4
    assert star.graph6() == "D?{"
    assert "0 -- 1" in conex.Graph.path(3).dot()


def test_constructions_and_formulas():
    assert conex.g_family(10, 6, 2).edge_count() == 18
    assert conex.s_family(50, 14, 17).edge_count() == 205
    assert conex.a_x(20, 14) == 17
    assert conex.kopylov_ex_c_path(10, 10) == 30
    assert conex.woodall_ex_long_cycle(7, 4) == 9
    edges, flagged = conex.broom_ex_c(100, 16, 7)
    assert edges == 450 and not flagged


def test_trees():
    b = conex.broom(8, 4)
    assert b.graph().degree_sequence() == [5, 2, 2, 1, 1, 1, 1, 1]
    assert conex.barycenter(b) == [3]
    assert conex.max_bare_path(conex.binary_tree(2)) == 2
    assert len(conex.enumerate_trees(7)) == 11


def test_embedding_and_cycles():
    host = conex.union_cliques(12, 5)
    p5 = conex.Tree(conex.Graph.path(5))
    assert conex.is_tree_free(host, p5)
    assert conex.find_tree_embedding(host, p5) is None
    k6 = conex.Graph.complete(6)
    emb = conex.find_tree_embedding(k6, p5)
    assert emb is not None and len(set(emb)) == 5
    assert conex.circumference(conex.f1(9, 5)) == 4


def test_oracle():
    rec = conex.extremal_number(6, "path:4", connected_only=True)
    assert rec["max_edges"] == 5
    assert conex.count_graphs(5, False) == 34
    lines = conex.enumerate_graphs(4, True)
    assert len(lines) == 6


def test_gamma_report():
    rows = conex.gamma_report([50])
    s = next(r for r in rows if r["construction"].startswith("s-family"))
    assert s["edges"] == 64465
    assert math.isclose(s["ratio_to_quarter"], 64465 / 62500.0)
