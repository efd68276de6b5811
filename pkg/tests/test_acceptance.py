"""Acceptance gate: every criterion is checked exactly and reported as PASS or FAIL."""

import io
import json
import time
from concurrent.futures import ThreadPoolExecutor

import pytest

from moritakit import cli
from moritakit.algebra import Idempotent, corner_algebra
from moritakit.fixtures import FIXTURE_NAMES, load
from moritakit.fuzz import CHECKS, FuzzConfig, run_suite
from moritakit.homological import AtLeast, dominant_dimension, minimal_injective_resolution, qf3_minimal_faithful
from moritakit.krullschmidt import end_algebra_lifted, is_isomorphic
from moritakit.modules import (
    injective_indecomposable,
    projective_indecomposable,
    regular_module,
    simple_module,
    sum_of,
)
from moritakit.morita import (
    CONDITION_KEYS,
    commutative_cover_check,
    corner_bimodule_left,
    corner_bimodule_right,
    cover_check,
    double_centralizer_check,
    inverse_nakayama,
    is_morita_algebra,
    is_self_injective,
    schur_algebra,
)


class Criterion:
    """Collects named sub-checks and reports one line per criterion."""

    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.failures = []

    def check(self, label, ok):
        if not ok:
            self.failures.append(label)

    def finish(self, capsys):
        status = "PASS" if not self.failures else "FAIL"
        line = f"ACCEPTANCE {self.number} {status}: {self.title}"
        if self.failures:
            line += " [failed: " + "; ".join(self.failures) + "]"
        with capsys.disabled():
            print("\n" + line)
        assert not self.failures, line


def P(a, *vs):
    mods = [projective_indecomposable(a, v - 1) for v in vs]
    return mods[0] if len(mods) == 1 else sum_of(mods, "+".join(f"P{v}" for v in vs))


def I(a, v):
    return injective_indecomposable(a, v - 1)


def test_criterion_1_first_example(capsys):
    c = Criterion(1, "three-vertex path algebra with one zero relation")
    a = load("ex14")
    c.check("dim A = 5", a.dim == 5)
    c.check("projective dims 2, 2, 1", [P(a, i).dim for i in (1, 2, 3)] == [2, 2, 1])
    c.check("P(1) = I(2)", is_isomorphic(P(a, 1), I(a, 2)))
    c.check("P(2) = I(3)", is_isomorphic(P(a, 2), I(a, 3)))
    res = minimal_injective_resolution(regular_module(a), 10)
    expected = [P(a, 1, 2, 2), P(a, 1), I(a, 1)]
    c.check("resolution P(1)+P(2)^2, P(1), I(1)",
            res.complete and len(res.terms) == 3
            and all(is_isomorphic(t, x) for t, x in zip(res.terms, expected)))
    c.check("domdim = 2", dominant_dimension(a).value == 2)
    q = qf3_minimal_faithful(a)
    c.check("qf3 = P(1)+P(2)", q is not None and q[1].subset == (0, 1) and is_isomorphic(q[0], P(a, 1, 2)))
    b = schur_algebra(P(a, 1, 2))
    c.check("dim B = 3", b.dim == 3)
    c.check("B not self-injective", is_self_injective(b) is False)
    c.check("cover(A, P(1)+P(2)) false", cover_check(a, P(a, 1, 2)).holds is False)
    c.check("cover(A, P(2)+P(3)) true", cover_check(a, P(a, 2, 3)).holds is True)
    c.check("inverse Nakayama of P(1)+P(2) = P(2)+P(3)", is_isomorphic(inverse_nakayama(P(a, 1, 2)), P(a, 2, 3)))
    v = is_morita_algebra(a)
    c.check("not Morita", v.verdict is False)
    c.check("all conditions false",
            set(v.conditions) == set(CONDITION_KEYS) and not any(v.conditions.values()))
    c.finish(capsys)


def test_criterion_2_second_example(capsys):
    c = Criterion(2, "four-arrow algebra with projective but non-injective P")
    a = load("ex15")
    c.check("dim A = 9", a.dim == 9)
    e = Idempotent((0, 1))
    c.check("dim eAe = 6", corner_algebra(a, e)[0].dim == 6)
    c.check("no minimal faithful projective-injective", qf3_minimal_faithful(a) is None)
    c.check("domdim = 0", dominant_dimension(a).value == 0)
    c.check("cover(A, P(1)+P(2)) true", cover_check(a, P(a, 1, 2)).holds is True)
    c.check("double centralizer on Ae", double_centralizer_check(corner_bimodule_right(a, e)))
    c.check("double centralizer on eA", double_centralizer_check(corner_bimodule_left(a, e)))
    c.check("not Morita", is_morita_algebra(a).verdict is False)
    c.finish(capsys)


def test_criterion_3_positive_controls(capsys):
    c = Criterion(3, "self-injective and Auslander-type positive controls")
    d = load("selfinj-x2")
    v = is_morita_algebra(d)
    c.check("k[x]/(x^2) Morita", v.verdict is True)
    c.check("k[x]/(x^2) domdim >= 10", dominant_dimension(d).value == AtLeast(10))
    c.check("k[x]/(x^2) self-injective", is_self_injective(d) is True)
    b, _ = end_algebra_lifted(sum_of([regular_module(d), simple_module(d, 0)]))
    vb = is_morita_algebra(b)
    c.check("Auslander algebra Morita", vb.verdict is True)
    c.check("Auslander algebra domdim = 2", dominant_dimension(b).value == 2)
    c.check("Auslander algebra conditions all true",
            set(vb.conditions) == set(CONDITION_KEYS) and all(vb.conditions.values()))
    c.finish(capsys)


def test_criterion_4_fuzz_suite(capsys):
    c = Criterion(4, "200 generated algebras, seed 7, zero violations")
    rep = run_suite(FuzzConfig(seed=7, case_count=200)).to_json()
    c.check("200 cases ran", rep["summary"]["cases"] == 200)
    for check in CHECKS + ("build",):
        c.check(f"{check} clean", rep["summary"]["by_check"][check] == 0)
    c.check("no violations", rep["violations"] == [])
    c.check("no skipped checks", all(s == "ok" for case in rep["cases"] for s in case["status"].values()))
    qf3 = sum(1 for case in rep["cases"] if case["qf3"])
    c.check("QF-3 cases exercised", qf3 > 0)
    with capsys.disabled():
        print(f"\n  fuzz: {len(rep['cases'])} cases, {qf3} QF-3, "
              f"{sum(1 for x in rep['cases'] if x['morita'])} Morita")
    c.finish(capsys)


def test_criterion_5_commutative_covers(capsys):
    c = Criterion(5, "commutative covers force A = eAe")
    proper_non_cover = False
    for name in ("kxk", "x3", "k-x-x2"):
        a = load(name)
        for e, cov, dims_equal in commutative_cover_check(a):
            c.check(f"{name} {e.subset}: cover implies equal dims", not cov or dims_equal)
            if name == "kxk" and len(e.subset) < len(a.idempotents) and not cov:
                proper_non_cover = True
    c.check("proper non-cover observed on k x k", proper_non_cover)
    c.finish(capsys)


def analyze_output(name):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(["analyze", name, "--json"], out, err)
    assert code == 0, err.getvalue()
    return out.getvalue()


def test_criterion_6_determinism(capsys):
    c = Criterion(6, "analyze output byte-identical across runs and thread counts")
    first = {name: analyze_output(name) for name in FIXTURE_NAMES}
    second = {name: analyze_output(name) for name in FIXTURE_NAMES}
    for name in FIXTURE_NAMES:
        c.check(f"{name} repeat", first[name] == second[name])
        json.loads(first[name])
    for threads in (2, 4):
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outs = dict(zip(FIXTURE_NAMES, pool.map(analyze_output, FIXTURE_NAMES)))
        for name in FIXTURE_NAMES:
            c.check(f"{name} with {threads} threads", outs[name] == first[name])
    serial = run_suite(FuzzConfig(seed=7, case_count=6, jobs=1)).dumps()
    parallel = run_suite(FuzzConfig(seed=7, case_count=6, jobs=2)).dumps()
    c.check("fuzz report independent of worker count", serial == parallel)
    c.finish(capsys)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_time_budget(name, capsys):
    c = Criterion(f"budget[{name}]", "analysis completes in under one second")
    start = time.perf_counter()
    analyze_output(name)
    elapsed = time.perf_counter() - start
    c.check(f"{elapsed:.3f}s", elapsed < 1.0)
    c.finish(capsys)
