import pytest

import cpgraph as cg


def test_graph_roundtrip():
    g = cg.cycle_graph(5)
    assert g.n == 5 and g.m == 5
    assert g.to_graph6() == "Dhc"
    assert cg.Graph.from_graph6("Dhc") == g
    assert cg.Graph.from_edge_list(g.to_edge_list()) == g
    assert cg.Graph(3, [(0, 1), (1, 2)]) == cg.path_graph(3)
    assert g.neighbors(0) == [1, 4]


def test_contraction_labels():
    h = cg.contract_edge(cg.path_graph(4), 1, 2)
    assert h.n == 3
    assert h.label(1) == [1, 2]
    assert cg.contract_set(cg.cycle_graph(6), [(0, 1), (3, 4)]).same_structure(cg.cycle_graph(4))


def test_perfection_and_recognition():
    ok, cert = cg.is_perfect(cg.cycle_graph(6))
    assert ok and cert is None
    ok, cert = cg.is_perfect(cg.cycle_graph(7))
    assert not ok and cert["valid"]

    verdict = cg.recognize(cg.cycle_graph(6))
    assert verdict["contraction_perfect"] is False
    assert verdict["host"] == "G/e"
    assert verdict["certificate"]["valid"]
    assert cg.recognize(cg.cycle_graph(6), method="forbidden")["contraction_perfect"] is False
    assert cg.is_contraction_perfect(cg.complement(cg.cycle_graph(6)))
    assert cg.is_minimally_non_cp(cg.expanded_antihole(6))


def test_diagnose():
    report = cg.diagnose(cg.cycle_graph(6), 0, 1)
    assert report["status"] == "even-hole"
    with pytest.raises(cg.PreconditionError):
        cg.diagnose(cg.cycle_graph(5), 0, 1)
    with pytest.raises(cg.InputError):
        cg.diagnose(cg.cycle_graph(6), 0, 2)


def test_utter_and_co2plex():
    u, origin = cg.utter(cg.path_graph(3))
    assert (u.n, u.m) == (5, 9)
    assert origin[3] == {"edge": [0, 1]}
    best = cg.max_weight_co2plex(cg.path_graph(3), [1, 1, 1])
    assert best["weight"] == 2
    assert best == {"schema_version": 1, "W": [0, 2], "F": [], "weight": 2}
    g = cg.generate("random", 9, seed=4, p=0.4)
    weights = [3, 1, 4, 1, 5, 9, 2, 6, 5]
    assert cg.max_weight_co2plex(g, weights)["weight"] == cg.brute_force_co2plex_weight(g, weights)


def test_families_and_errors():
    assert cg.is_split(cg.generate("split", 10, seed=1))
    assert cg.is_chordal(cg.generate("chordal", 10, seed=1))
    assert cg.is_trivially_perfect(cg.generate("trivially-perfect", 10, seed=1))
    assert cg.check_parity([(1, 3), (3, 5)])
    with pytest.raises(cg.InputError):
        cg.generate("expanded-antihole", 7)
    with pytest.raises(cg.CapExceeded):
        cg.utter(cg.complete_graph(11))
    with pytest.raises(ValueError):
        cg.Graph.from_graph6("Dh")
    assert cg.selftest(5) == 1 + 1 + 2 + 6 + 21
