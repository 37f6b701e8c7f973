"""Grid-search upper-bound oracle and the six-check certificate."""

from types import SimpleNamespace

import pytest

from discmotion import (
    Arc,
    GridSpec,
    Motion,
    Trajectory,
    certify,
    default_grid,
    min_separation,
    pivot_grid_search,
    plan,
)
from conftest import make_instance

CHECKS = ("feasibility", "convexity", "boundAgreement",
          "quadratureAgreement", "oracleUpperBound", "primitiveBudget")


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(step=0.0, margin=1.0)
    with pytest.raises(ValueError):
        GridSpec(step=-0.1, margin=1.0)
    with pytest.raises(ValueError):
        GridSpec(step=0.1, margin=-1.0)


def test_default_grid_formula(case1, symmetric_crossing):
    for inst in (case1, symmetric_crossing):
        g = default_grid(inst)
        assert g.step == max(0.05, inst.diameter / 400.0)
        assert g.margin == 2.0 * inst.s


def test_oracle_matches_straight_plan_exactly(case1):
    res = pivot_grid_search(case1)
    assert res.best_length == 11.0
    assert res.order in ("ABA", "BAB")
    assert res.orientation in ("ccw", "cw")


def test_oracle_identical_placements_zero():
    inst = make_instance(1.0, (0, 2), (0, 0), (0, 2), (0, 0))
    assert pivot_grid_search(inst).best_length == 0.0


def test_oracle_sandwich_tight_crossing(symmetric_crossing):
    planned = plan(symmetric_crossing).chosen.length
    res = pivot_grid_search(symmetric_crossing, GridSpec(step=0.02, margin=2.0))
    # documented grid-error constant C <= 4
    assert planned - 1e-9 <= res.best_length <= planned + 0.02 * 4


def test_oracle_monotone_under_step_halving(symmetric_crossing):
    coarse = pivot_grid_search(symmetric_crossing, GridSpec(step=0.05, margin=2.0))
    fine = pivot_grid_search(symmetric_crossing, GridSpec(step=0.025, margin=2.0))
    assert fine.best_length <= coarse.best_length + 1e-9


def test_oracle_motion_is_feasible_and_consistent(symmetric_crossing, blocked_ccw):
    for inst in (symmetric_crossing, blocked_ccw):
        res = pivot_grid_search(inst)
        assert min_separation(res.motion) >= inst.s - 1e-7
        assert abs(res.motion.length - res.best_length) \
            <= 1e-9 * max(1.0, res.best_length)


def test_oracle_deterministic(symmetric_crossing):
    a = pivot_grid_search(symmetric_crossing)
    b = pivot_grid_search(symmetric_crossing)
    assert a.best_length == b.best_length
    assert a.best_pivot == b.best_pivot
    assert a.order == b.order


def test_certificate_all_checks_pass(symmetric_crossing):
    report = plan(symmetric_crossing)
    cert = certify(symmetric_crossing, report)
    assert cert.passed
    assert tuple(name for name, _, _ in cert.checks) == CHECKS
    for name, ok, residual in cert.checks:
        assert ok, name
        assert isinstance(residual, float)


def test_certificate_vacuous_on_identical_placements():
    inst = make_instance(1.0, (0, 2), (0, 0), (0, 2), (0, 0))
    cert = certify(inst, plan(inst))
    assert cert.passed


def corrupt_one_arc(m: Motion) -> Motion:
    """Flip one arc of B's trace onto the complementary sweep: endpoints
    are unchanged, so the motion stays continuous but gets longer."""
    prims = list(m.traj_b.primitives)
    for i, p in enumerate(prims):
        if p.kind == "arc":
            flipped = "cw" if p.direction == "ccw" else "ccw"
            prims[i] = Arc(p.center, p.radius, p.start_angle, p.end_angle,
                           flipped)
            break
    return Motion(m.traj_a, Trajectory(tuple(prims)), m.schedule,
                  m.orientation, m.start, m.end)


def test_certificate_flags_corrupted_arc(symmetric_crossing):
    report = plan(symmetric_crossing)
    bad = SimpleNamespace(chosen=corrupt_one_arc(report.chosen),
                          bound=report.bound)
    cert = certify(symmetric_crossing, bad)
    verdicts = {name: ok for name, ok, _ in cert.checks}
    assert not cert.passed
    assert not verdicts["boundAgreement"]
    assert not verdicts["oracleUpperBound"]
    assert not verdicts["convexity"]
    assert verdicts["feasibility"]
    assert verdicts["quadratureAgreement"]
    assert verdicts["primitiveBudget"]
    assert cert.residual("boundAgreement") > 1e-3
