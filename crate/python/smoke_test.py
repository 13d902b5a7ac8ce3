"""Smoke test for the pynonham extension module.

Build it first, e.g. `maturin develop -m crates/python/Cargo.toml`, then run
`python python/smoke_test.py`.
"""

import json

import pynonham as nh


def main():
    g = nh.Graph.extremal(6)
    assert g.order == 6
    assert g.edge_count() == 11
    assert g.to_graph6() == nh.Graph.from_graph6(g.to_graph6()).to_graph6()
    assert [nh.count_paths(g, k) for k in range(1, 6)] == [11, 34, 72, 84, 24]
    assert nh.count_hamilton_paths(g) == 24
    assert not nh.is_hamiltonian(g)
    assert nh.is_maximally_nonhamiltonian(g)
    assert nh.check_lemma5(g) is None

    k5 = nh.Graph.complete(5)
    assert nh.count_hamilton_paths(k5) == 60
    assert nh.count_hamilton_cycles(k5) == 12

    assert nh.theorem2_bound(6, 2) == 34
    assert nh.ore_bondy_max_size(7) == 16
    assert nh.corollary3_value(7) == 120
    assert nh.permutation_number(30, 30) == 265252859812191058636308480000000

    dist = nh.xj_distribution(g)
    assert {j: x for j, x in dist.items() if x} == {1: 24, 2: 36}, dist
    ms = nh.moment_summary(g)
    assert (ms["m"], ms["s"], ms["q"], ms["beta"], ms["p"], ms["t"]) == (4, 6, 0, 36, 36, 36), ms

    closed, added, rounds = nh.bondy_chvatal_closure(nh.Graph.cycle(4))
    assert closed == nh.Graph.complete(4)
    assert len(added) == 2 and rounds >= 1

    (report,) = json.loads(nh.verify("theorem2", 6, k=2))
    assert report["verdict"] == "confirmed", report
    assert report["observed"] == "34"
    print("pynonham smoke test passed")


if __name__ == "__main__":
    main()
