"""Smoke tests for the python bindings."""

import networkx as nx
import pytest

import linchrom as lc


def path_graph(k):
    return lc.Graph(k, [(i, i + 1) for i in range(k - 1)])


def test_graph_basics():
    g = lc.parse_graph6("Bw")
    assert g.n == 3
    assert g.edge_count() == 3
    assert g.has_edge(0, 2)
    assert lc.encode_graph6(g) == "Bw"


def test_graph6_matches_networkx():
    for i in range(50):
        n = 1 + (i * 7) % 20
        g = lc.sample_gnp(n, 0.4, lc.derive_stream_seed(4242, i))
        mine = lc.encode_graph6(g)
        ref = nx.from_graph6_bytes(mine.encode())
        assert ref.number_of_nodes() == g.n
        assert sorted(ref.edges()) == sorted(tuple(e) for e in g.edges())
        # and the reverse direction: networkx-encoded strings parse back
        ours = lc.parse_graph6(nx.to_graph6_bytes(ref, header=False).decode().strip())
        assert ours == g


def test_sampling_is_deterministic():
    a = lc.sample_gnp(100, 0.3, 7)
    b = lc.sample_gnp(100, 0.3, 7)
    assert a == b
    two = lc.sample_two_round(50, 0.4, 9)
    assert abs(two.p1 + two.p2 - two.p1 * two.p2 - 0.4) < 1e-12


def test_chromatic_values():
    p8 = path_graph(8)
    assert lc.chromatic_number(p8) == 2
    assert lc.linear_chromatic_number(p8) == 4
    assert lc.tree_depth(p8) == 4
    assert lc.path_centred_value(8) == 4
    assert lc.linear_lower_bound_from_diameter(path_graph(9)) == 4
    with pytest.raises(ValueError):
        lc.path_centred_value(0)


def test_verifiers():
    c4 = lc.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert lc.is_proper(c4, [1, 2, 1, 2])
    bad = lc.find_path_without_centre(c4, [1, 2, 1, 2])
    assert bad is not None and sorted(bad) == [0, 1, 2, 3]
    assert lc.has_centre([1, 2, 1], [0, 1, 2]) == 1
    assert lc.is_centred(c4, [0, 1, 2, 3]) is None


def test_certificate_pipeline():
    c4 = lc.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    phi = [1, 2, 1, 2]
    posa = lc.PosaParams()
    posa.seed = 42
    outcome = lc.certify_not_linear(c4, phi, 1, posa)
    assert outcome.success
    cert = outcome.certificate
    assert sorted(cert.path) == [0, 1, 2, 3]
    assert cert.sub_pairing.pairs == [(0, 2), (1, 3)]
    ok, tag = lc.verify_certificate(c4, phi, cert, lc.build_set_pairing(phi))
    assert ok and tag == "ok"
    line = lc.serialize_certificate(cert)
    assert lc.parse_certificate(line).path == cert.path

    failed = lc.certify_not_linear(c4, [0, 1, 2, 3], None, posa)
    assert not failed.success
    assert failed.reason == "EmptyPairing"


def test_pairing_and_peeling():
    sp = lc.build_set_pairing([7, 7, 7, 9, 9])
    assert sp.s == [1, 2, 3, 4]
    assert sp.pairs == [(1, 2), (3, 4)]
    g = lc.Graph(4, [(0, 1), (0, 2), (1, 2)])
    core, removed = lc.peel_core(g, lc.build_set_pairing([5, 5, 6, 6]), 1)
    assert removed >= 0


def test_experiment_rows():
    cfg = lc.ExperimentConfig()
    cfg.regime = lc.Regime.dense
    cfg.n = 40
    cfg.omega_or_c = 20
    cfg.classes = 20
    cfg.trials = 3
    cfg.seed = 11
    rows = lc.run_experiment(cfg, 2)
    assert len(rows) == 3
    assert lc.to_csv(rows) == lc.to_csv(lc.run_experiment(cfg, 1))
    for row in rows:
        if row.success == 1:
            assert row.verified == 1


def test_conjecture_sweep():
    summary, rows = lc.run_conjecture_sweep(lc.all_connected_graph6(4))
    assert summary["graphs"] == 6
    assert summary["conjecture_violations"] == 0
    assert all(r["chain_ok"] for r in rows)
