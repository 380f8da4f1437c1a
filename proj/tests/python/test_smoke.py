import json
from fractions import Fraction

import pytest

import ultrafree as uf


def test_graph_basics():
    c5 = uf.cycle(5)
    assert len(c5) == 5
    assert c5.edge_count() == 5
    assert uf.chromatic_number(c5) == 3
    assert uf.clique_number(c5) == 2
    assert len(uf.enumerate_mis(uf.petersen())) == 15
    assert uf.count_cliques(uf.turan(9, 3), 3) == 27


def test_rationals_are_fractions():
    assert uf.ultra_parameter(uf.cycle(5), 3) == Fraction(1, 5)
    assert uf.ultra_parameter(uf.complete(3), 4) is None
    assert uf.pi_density(3, 5) == Fraction(3, 8)
    assert uf.clique_codensity(uf.turan(6, 3), 2, 2) == Fraction(2, 3)


def test_set_system_invariants():
    b = uf.mis_system(uf.cycle(5))
    assert uf.transversal_number(b)[0] == 3
    assert uf.matching_number(b)[0] == 2
    lp = uf.fractional_transversal(b)
    assert lp["tau_star"] == lp["nu_star"] == Fraction(5, 2)
    assert all(w == Fraction(1, 2) for w in lp["transversal"])
    assert uf.helly_number(b) == 2
    tri = uf.Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert uf.vc_dimension(uf.mis_system(tri))[0] == 2
    assert uf.nu_bi(tri)[0] == 1


def test_convexity():
    cube = uf.ConvexitySpace.subcubes(2)
    assert len(cube) == 4
    assert uf.space_helly_number(cube) == 2
    assert uf.radon_partition(cube, [0, 1, 2]) is not None
    c5 = uf.ConvexitySpace.from_graph(uf.cycle(5))
    assert uf.radon_number(c5, 6) == 3
    assert len(uf.weak_eps_net(c5, Fraction(1, 2))) == 1
    with pytest.raises(uf.PreconditionViolated):
        uf.weak_eps_net(c5, 0.5)


def test_half_graphs_and_decomposition():
    assert uf.find_half_graph(uf.half_min(4), 4) is not None
    assert uf.find_half_graph(uf.cycle(5), 6) is None
    lb = uf.hypercube_lb(3)
    assert len(lb["g"]) == 56
    d = uf.twin_quotient(lb["g"])
    assert len(d["quotient"]) == 14
    h = uf.haussler_partition(lb["g"], 3, "1/28")
    assert h["report"]["summary"]["fail"] == 0
    assert uf.verify_hom(lb["g"], h["quotient"], h["origin"])


def test_errors_map_to_exceptions():
    with pytest.raises(uf.SelfLoopRejected):
        uf.parse_graph("p edge 2 1\ne 1 1\n")
    with pytest.raises(uf.NotKrFree):
        uf.ultra_parameter(uf.complete(3), 3)
    with pytest.raises(uf.BudgetExceeded):
        uf.enumerate_mis(uf.petersen(), budget_nodes=2)
    assert issubclass(uf.BudgetExceeded, uf.Error)


def test_suite_and_cli():
    report = uf.run_suite("construction:d=2")
    assert report["summary"]["fail"] == 0
    code, out, _ = uf.run_cli(["verify", "--suite", "mindeg-ultra", "--json"])
    assert code == 0
    assert json.loads(out)["summary"]["fail"] == 0
