import itertools
from fractions import Fraction

import pytest

import locind


def brute_opt(instance):
    m = instance.num_edges
    for size in range(m, -1, -1):
        for combo in itertools.combinations(range(m), size):
            if instance.is_independent(list(combo)):
                return size
    return 0


def test_algorithm_names():
    assert len(locind.algorithms()) == 7
    assert "ordered-approx" in locind.algorithms()


def test_tree_is_solved_exactly():
    inst = locind.generate("tree", seed=3, n=9, kinds=["card", "sign", "timed"])
    trace = locind.solve(inst, "ordered-approx")
    assert trace.residual == []
    assert len(trace.independent) == brute_opt(inst)
    report = locind.verify(trace, inst)
    assert report["passed"]
    assert report["ratio"] == 1


def test_star_fixture_ratio():
    fx = locind.fixture("star_fixedorder", alpha=1, n=6)
    trace = locind.solve(fx["instance"], fx["algorithm"], fx["order"])
    report = locind.verify(trace, fx["instance"])
    assert report["ratio"] == Fraction(5)
    assert fx["expected_ratio"] == 5


def test_rho():
    assert locind.rho(1, 9) == Fraction(9, 2)
    assert locind.rho(2, 7) == 6
    assert locind.rho(2, 4) == 4
    assert locind.rho_branch(2, 10) == 1


def test_instance_text_round_trip(tmp_path):
    inst = locind.generate("hyper", seed=5, kinds=["card", "sign"], oracles=["exhaustive", "greedy"])
    text = inst.to_text()
    assert locind.Instance.from_text(text).to_text() == text
    path = tmp_path / "h.inst"
    inst.save(str(path))
    assert locind.Instance.load(str(path)).to_text() == text


def test_maxsat():
    inst, decode = locind.maxsat("p cnf 2 2\n1 2 0\n-1 0\n")
    assert inst.num_edges == 3
    opt, witness = locind.max_independent(inst)
    assert opt == 2
    trace = locind.solve(inst, "bipartite-approx")
    assignment, satisfied = decode(trace.independent)
    assert satisfied * 2 >= opt
    assert len(assignment) == 2


def test_errors():
    with pytest.raises(ValueError):
        locind.Instance.from_text("garbage")
    inst = locind.generate("gnp", seed=1)
    with pytest.raises(ValueError):
        locind.solve(inst, "bipartite-approx")
    with pytest.raises(ValueError):
        locind.solve(inst, "nope")


def test_bench_is_deterministic():
    a = locind.bench("gnp", ["greedy", "ordered-approx"], seed=7, seeds=5)
    b = locind.bench("gnp", ["greedy", "ordered-approx"], seed=7, seeds=5, threads=3)
    assert a == b
    assert a.startswith("instance,seed,algorithm")
    assert ",fail," not in a


def test_degeneracy_and_ksystem():
    inst = locind.generate("degenerate", seed=2, n=8, k=2)
    order, width = locind.degeneracy_order(inst)
    assert sorted(order) == list(range(inst.num_vertices))
    assert width <= 2
    small = locind.generate("gnp", seed=4, n=5, p=0.5, kinds=["card", "partition"])
    assert locind.global_ksystem_param(small) <= 2
