import json
import random

from hypothesis import given

from moritakit.algebra import QuiverPresentation, build_algebra, validate_algebra
from moritakit.fuzz import CHECKS, FuzzConfig, generate_case, run_checks, run_suite

from strategies import SMALL, presentations, seeds


def test_trivial_bounds_give_the_field():
    cfg = FuzzConfig(max_vertices=1, max_arrows=0)
    pres = generate_case(random.Random(3), cfg)
    assert build_algebra(pres).dim == 1


def test_generation_is_deterministic():
    cfg = FuzzConfig()
    a = generate_case(random.Random(42), cfg)
    b = generate_case(random.Random(42), cfg)
    assert a == b


@given(presentations)
def test_generated_cases_build(pres):
    a = build_algebra(pres)
    assert validate_algebra(a) == []


def test_empty_suite():
    rep = run_suite(FuzzConfig(case_count=0))
    assert rep.cases == [] and rep.violations == []
    assert rep.to_json()["summary"]["cases"] == 0


def test_small_suite_is_clean_and_deterministic():
    cfg = FuzzConfig(seed=11, case_count=12)
    first = run_suite(cfg).dumps()
    assert run_suite(cfg).dumps() == first
    data = json.loads(first)
    assert data["summary"]["violations"] == 0
    assert all(set(c["status"]) == set(CHECKS) for c in data["cases"])


def test_parallel_matches_serial():
    serial = run_suite(FuzzConfig(seed=5, case_count=8, jobs=1)).dumps()
    parallel = run_suite(FuzzConfig(seed=5, case_count=8, jobs=3)).dumps()
    assert serial == parallel


def test_corruption_is_reported_and_shrunk():
    cfg = FuzzConfig(seed=2, case_count=3, corrupt=True)
    rep = run_suite(cfg)
    assert rep.violations
    for v in rep.violations:
        assert v["check"] == "validation"
        shrunk = QuiverPresentation.from_json(v["shrunk"])
        original = QuiverPresentation.from_json(v["presentation"])
        assert len(shrunk.arrows) <= len(original.arrows)
        status, _ = run_checks(shrunk, cfg, 0, only="validation")
        assert status["validation"] != "ok"
    # everything after validation is skipped on a damaged algebra
    assert all(c["status"][k] == "skipped" for c in rep.cases for k in CHECKS[1:])


@given(seeds)
def test_checks_pass_on_generated(seed):
    pres = generate_case(random.Random(seed), SMALL)
    status, _ = run_checks(pres, SMALL, seed)
    assert all(v == "ok" for v in status.values()), status
