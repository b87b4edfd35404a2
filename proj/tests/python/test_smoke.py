"""End-to-end smoke tests for the Python bindings."""

import math

import pytest

import entrogeo as eg


def test_entropy_paths_agree_on_anchor():
    w = eg.DiscreteDistribution([0.5, 0.25, 0.25])
    s = eg.spectrum_of(w)
    p = eg.build_profile(s)
    target = 1.5 * math.log(2.0)
    assert eg.entropy_direct(s) == pytest.approx(target, abs=1e-12)
    assert eg.entropy_boundary(p) == pytest.approx(target, abs=1e-12)
    assert eg.entropy_quadrature(p, 100000) == pytest.approx(target, abs=1e-9)


def test_profile_geometry():
    s = eg.spectrum_of(eg.DiscreteDistribution([0.5, 0.25, 0.25]))
    p = eg.build_profile(s)
    assert [(b.r1, b.rinf) for b in p.breakpoints] == [
        (0.0, 0.5),
        (0.25, 0.25),
        (1.0, 0.0),
    ]
    assert p.multiplicities == [1, 3]
    assert eg.eval_F(s, 0.3) == pytest.approx(0.2, abs=1e-15)
    assert eg.in_region(s, 0.1, 0.3)
    assert not eg.in_region(s, 0.2, 0.3)
    back = eg.profile_from_csv(eg.profile_csv(p))
    assert back.multiplicities == [1, 3]
    assert back.value_at(0.3) == pytest.approx(p.value_at(0.3), abs=1e-15)


def test_density_and_norms():
    rho = eg.DensityOperator([[0.5, 0.5], [0.5, 0.5]], [[0.0, 0.0], [0.0, 0.0]])
    s = eg.spectrum_of(rho)
    assert s.values == pytest.approx([1.0, 0.0], abs=1e-12)
    assert eg.entropy_direct(s) == pytest.approx(0.0, abs=1e-12)
    assert eg.norm_one(rho.matrix) == pytest.approx(1.0, abs=1e-12)
    assert eg.norm_inf(rho.matrix) == pytest.approx(1.0, abs=1e-12)
    assert eg.pairing(rho.matrix, rho.matrix) == pytest.approx(1.0, abs=1e-12)


def test_monotonicity_and_maps():
    w = eg.DiscreteDistribution([0.7, 0.2, 0.1])
    t = eg.random_doubly_stochastic(3, 2, 11)
    assert eg.induced_norm_1(t) <= 1 + 1e-9
    assert eg.induced_norm_inf(t) <= 1 + 1e-9
    assert eg.apply_map(t, w).weights == pytest.approx(
        eg.apply_map(t, w).weights, abs=0.0
    )
    report = eg.monotonicity_report(t, w)
    assert report.verdict
    assert report.region_shrank
    assert report.entropy_after >= report.entropy_before - 1e-9

    rho = eg.DensityOperator([[0.5, 0.5], [0.5, 0.5]], [[0.0, 0.0], [0.0, 0.0]])
    pinched = eg.pinch(rho, eg.BlockStructure([1, 1]))
    assert pinched.matrix.re[0][1] == 0.0
    dense_report = eg.monotonicity_report(eg.BlockStructure([1, 1]), rho)
    assert dense_report.verdict
    assert dense_report.entropy_after == pytest.approx(math.log(2.0), abs=1e-12)


def test_conditional_expectation_and_jordan():
    w = eg.DiscreteDistribution([0.5, 0.25, 0.25])
    part = eg.Partition([[0, 1], [2]])
    wx = eg.cond_exp_partition(w, part)
    assert wx.weights == pytest.approx([0.375, 0.375, 0.25], abs=1e-15)
    projected = eg.project_partition(eg.RealSequence([1.0, 0.0, -1.0]), part)
    assert projected.entries == pytest.approx([0.5, 0.5, -1.0], abs=1e-15)

    parts = eg.jordan_decompose(eg.RealSequence([0.5, -0.5]))
    assert parts["alpha_plus"] == pytest.approx(0.5, abs=1e-15)
    assert parts["alpha_minus"] == pytest.approx(0.5, abs=1e-15)
    assert parts["omega_plus"].weights == pytest.approx([1.0, 0.0], abs=1e-15)
    assert parts["omega_minus"].weights == pytest.approx([0.0, 1.0], abs=1e-15)


def test_oracle_search_and_consistency():
    w = eg.DiscreteDistribution([0.5, 0.25, 0.25])
    split = eg.clip_decomposition(w, 0.3)
    assert eg.norm_one(split["u"]) == pytest.approx(0.2, abs=1e-15)
    assert eg.norm_inf(split["v"]) == pytest.approx(0.3, abs=1e-15)

    hit = eg.witness_search(w, 0.25, 0.3, 500, 7)
    assert hit["intersects"]
    assert eg.norm_one(hit["witness"]["u"]) < 0.25
    assert eg.norm_inf(hit["witness"]["v"]) < 0.3

    miss = eg.witness_search(w, 0.1, 0.3, 500, 7)
    assert not miss["intersects"]
    assert miss["best_found_norm1"] >= 0.2 - 1e-9

    report = eg.oracle_consistency(w, [(0.1, 0.3), (0.25, 0.3)], 400, 3)
    assert report["ok"]
    assert len(report["points"]) == 2


def test_io_round_trips_and_errors():
    w = eg.parse_state_json('{"kind":"distribution","weights":[0.5,0.5]}')
    assert isinstance(w, eg.DiscreteDistribution)
    assert eg.parse_state_json(eg.state_to_json(w)).weights == w.weights

    rho = eg.parse_state_json('{"kind":"density","re":[[0.5,0.5],[0.5,0.5]]}')
    assert isinstance(rho, eg.DensityOperator)

    with pytest.raises(eg.EntrogeoError):
        eg.DiscreteDistribution([0.5, 0.6])
    with pytest.raises(eg.EntrogeoError):
        eg.parse_state_json("{bad")
    with pytest.raises(eg.EntrogeoError):
        eg.apply_map(eg.SequenceMap([[2.0, 0.0], [0.0, 1.0]]), eg.DiscreteDistribution([0.5, 0.5]))
