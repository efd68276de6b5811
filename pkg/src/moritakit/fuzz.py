"""Random bound quiver algebras and a differential check suite.

Every generated algebra runs through the independent characterisations
implemented elsewhere in the package; any disagreement is reported as a
violation, and the offending presentation is shrunk by greedy deletion.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from typing import Callable

from .algebra import Algebra, Idempotent, QuiverPresentation, build_algebra, validate_algebra
from .errors import MoritakitError
from .exactlin import QQ, FieldDesc
from .homological import dominant_dimension, qf3_minimal_faithful
from .krullschmidt import decompose, is_isomorphic
from .modules import (
    dual_bimodule_of_algebra,
    hom_space,
    idempotent_projective,
    injective_indecomposable,
    projective_indecomposable,
    regular_module,
    sum_of,
    validate_bimodule,
    validate_module,
)
from .morita import cover_check, inverse_nakayama, is_morita_algebra, nakayama, reduce_cover_to_idempotent

MAX_DIM = 40

CHECKS = (
    "validation",
    "cover_agreement",
    "morita_agreement",
    "domdim_left_right",
    "nakayama_projectives",
    "cover_reduction",
    "cover_inverse_nakayama",
    "krull_schmidt",
)


@dataclass
class FuzzConfig:
    seed: int = 7
    case_count: int = 200
    max_vertices: int = 4
    max_arrows: int = 5
    max_relation_length: int = 3
    field: FieldDesc = QQ
    shrink: bool = True
    cap: int = 10
    corrupt: bool = False  # test hook: damage every structure tensor
    jobs: int = 1

    def __post_init__(self):
        if self.case_count < 0 or self.max_vertices < 1 or self.max_arrows < 0 or self.max_relation_length < 1:
            raise ValueError("fuzz bounds must be positive")

    def to_json(self) -> dict:
        d = asdict(self)
        d["field"] = self.field.to_json()
        del d["jobs"]
        return d


# ---------------------------------------------------------------------------
# generation


def generate_case(rng: random.Random, config: FuzzConfig) -> QuiverPresentation:
    """Random quiver; relations are monomials plus every path one past the bound."""
    while True:
        nv = rng.randint(1, config.max_vertices)
        na = rng.randint(0, config.max_arrows)
        verts = [str(i + 1) for i in range(nv)]
        arrows = []
        for k in range(na):
            s, t = rng.choice(verts), rng.choice(verts)
            arrows.append((f"a{k + 1}", s, t))
        L = rng.randint(1, config.max_relation_length)
        density = rng.random()
        rels = []
        for length in range(2, L + 1):
            for path in _paths_of_length_named(arrows, length):
                if rng.random() < density * 0.5:
                    rels.append(path)
        rels.extend(_paths_of_length_named(arrows, L + 1))
        pres = QuiverPresentation(
            config.field, verts, arrows, [[(config.field.one, p)] for p in rels], max(L + 2, 2))
        if _count_dim(pres) <= MAX_DIM:
            return pres


def _paths_of_length_named(arrows, length):
    """Composable arrow-name tuples of the given length, leftmost applied last."""
    out = [((n,), s, t) for n, s, t in arrows]
    for _ in range(length - 1):
        nxt = []
        for path, s, t in out:
            for n, s2, t2 in arrows:
                if s2 == t:
                    nxt.append(((n,) + path, s, t2))
        out = nxt
    return [p for p, _, _ in out]


def _count_dim(pres: QuiverPresentation) -> int:
    mono = {tuple(r[0][1]) for r in pres.relations if len(r) == 1}
    arrows = [(n, s, t) for n, s, t in pres.arrows]
    count = len(pres.vertices)
    level = [((n,), t) for n, s, t in arrows]
    while level:
        count += len(level)
        if count > MAX_DIM:
            return count
        nxt = []
        for path, t in level:
            for n, s2, t2 in arrows:
                if s2 != t:
                    continue
                cand = (n,) + path
                if any(cand[:k] in mono for k in range(2, len(cand) + 1)):
                    continue
                nxt.append((cand, t2))
        level = nxt
    return count


# ---------------------------------------------------------------------------
# checks


def _corrupt(a: Algebra) -> None:
    # e_1 * e_1 := 2 e_1
    a.mult[0][0] = {0: a.field(2)}


def _check_validation(a: Algebra, ctx: dict) -> None:
    errs = validate_algebra(a)
    if errs:
        raise AssertionError("algebra: " + errs[0])
    errs = validate_module(regular_module(a)) + validate_bimodule(dual_bimodule_of_algebra(a))
    if errs:
        raise AssertionError("module: " + errs[0])
    for i in range(len(a.idempotents)):
        p = projective_indecomposable(a, i)
        m = regular_module(a)
        # Hom(A e_i, M) has the dimension of e_i M
        if hom_space(p, m).dim != m.weight_dims()[i]:
            raise AssertionError(f"Hom(Ae_{i + 1}, A) has the wrong dimension")


def _check_covers(a: Algebra, ctx: dict) -> None:
    for p in ctx["subsets"]:
        ctx.setdefault("covers", []).append(cover_check(a, p).holds)


def _check_morita(a: Algebra, ctx: dict) -> None:
    v = is_morita_algebra(a, ctx["cap"])
    ctx["morita"] = v.verdict
    ctx["qf3"] = v.qf3


def _check_domdim(a: Algebra, ctx: dict) -> None:
    left = dominant_dimension(a, ctx["cap"])
    right = dominant_dimension(a, ctx["cap"], side="right")
    ctx["domdim"] = left.to_json()
    if left.to_json() != right.to_json():
        raise AssertionError(f"left domdim {left} differs from right domdim {right}")


def _check_nakayama(a: Algebra, ctx: dict) -> None:
    for i in range(len(a.idempotents)):
        if not is_isomorphic(nakayama(projective_indecomposable(a, i)), injective_indecomposable(a, i)):
            raise AssertionError(f"nu(Ae_{i + 1}) is not D(e_{i + 1}A)")


def _check_reduction(a: Algebra, ctx: dict) -> None:
    for p in ctx["subsets"]:
        e = reduce_cover_to_idempotent(a, p)
        ae = idempotent_projective(a, e)
        if cover_check(a, p).holds != cover_check(a, ae).holds:
            raise AssertionError(f"cover status changes under reduction to e = {e.subset}")


def _check_prop9(a: Algebra, ctx: dict) -> None:
    q = qf3_minimal_faithful(a)
    if q is None or not dominant_dimension(a, ctx["cap"]).at_least(2):
        return
    v = inverse_nakayama(q[0])
    if not cover_check(a, v).holds:
        raise AssertionError("Hom_A(DA, Ae) is not a cover")


def _check_ks(a: Algebra, ctx: dict) -> None:
    mods = [regular_module(a)] + ctx["subsets"]
    for m in mods:
        d = decompose(m)
        if not d.certificate_ok():
            raise AssertionError(f"decomposition certificate fails for {m.name}")
    reg = regular_module(a)
    doubled = sum_of([reg, reg])
    d1, d2 = decompose(reg), decompose(doubled)
    if sorted(2 * k for _, k in d1.summands) != sorted(k for _, k in d2.summands):
        raise AssertionError("multiplicities do not double on A + A")


CHECK_FUNCS: dict[str, Callable] = {
    "validation": _check_validation,
    "cover_agreement": _check_covers,
    "morita_agreement": _check_morita,
    "domdim_left_right": _check_domdim,
    "nakayama_projectives": _check_nakayama,
    "cover_reduction": _check_reduction,
    "cover_inverse_nakayama": _check_prop9,
    "krull_schmidt": _check_ks,
}


def _random_subsets(a: Algebra, rng: random.Random, count: int = 3):
    n = len(a.idempotents)
    out = []
    for _ in range(count):
        k = rng.randint(1, n)
        chosen = sorted(rng.sample(range(n), k))
        mods = []
        for i in chosen:
            mods.extend([projective_indecomposable(a, i)] * rng.randint(1, 2))
        out.append(sum_of(mods, "+".join(m.name for m in mods)))
    return out


def run_checks(pres: QuiverPresentation, config: FuzzConfig, subset_seed: int,
               only: str | None = None) -> tuple[dict, dict]:
    """Run the suite on one presentation; returns (per-check status, summary data)."""
    status: dict[str, str] = {}
    ctx: dict = {"cap": config.cap}
    try:
        a = build_algebra(pres)
    except MoritakitError as exc:
        return {"build": f"{type(exc).__name__}: {exc}"}, ctx
    if config.corrupt:
        _corrupt(a)
    ctx["dim"] = a.dim
    ctx["subsets"] = _random_subsets(a, random.Random(subset_seed))
    for name in CHECKS:
        if only is not None and name != only:
            continue
        if name != "validation" and status.get("validation", "ok") != "ok":
            status[name] = "skipped"
            continue
        try:
            CHECK_FUNCS[name](a, ctx)
            status[name] = "ok"
        except (AssertionError, MoritakitError, ArithmeticError) as exc:
            status[name] = f"{type(exc).__name__}: {exc}"
    return status, ctx


def _still_fails(pres: QuiverPresentation, config: FuzzConfig, seed: int, check: str) -> bool:
    try:
        status, _ = run_checks(pres, config, seed, only=check)
    except Exception:  # noqa: BLE001 - any crash counts as a different failure
        return False
    return status.get(check, "ok") not in ("ok", "skipped")


def shrink(pres: QuiverPresentation, config: FuzzConfig, seed: int, check: str) -> QuiverPresentation:
    """Greedy deletion of arrows, then relations, while the failure persists."""
    cur = pres
    progress = True
    while progress:
        progress = False
        for k in range(len(cur.arrows)):
            name = cur.arrows[k][0]
            arrows = cur.arrows[:k] + cur.arrows[k + 1:]
            rels = [r for r in cur.relations if all(name not in path for _, path in r)]
            cand = QuiverPresentation(cur.field, cur.vertices, arrows, rels, cur.nilpotency_cap)
            if _still_fails(cand, config, seed, check):
                cur, progress = cand, True
                break
        if progress:
            continue
        used = {s for _, s, _ in cur.arrows} | {t for _, _, t in cur.arrows}
        for v in list(cur.vertices):
            if v in used or len(cur.vertices) == 1:
                continue
            cand = QuiverPresentation(cur.field, [w for w in cur.vertices if w != v], cur.arrows,
                                      cur.relations, cur.nilpotency_cap)
            if _still_fails(cand, config, seed, check):
                cur, progress = cand, True
                break
        if progress:
            continue
        for k in range(len(cur.relations)):
            cand = QuiverPresentation(cur.field, cur.vertices, cur.arrows,
                                      cur.relations[:k] + cur.relations[k + 1:], cur.nilpotency_cap)
            if _still_fails(cand, config, seed, check):
                cur, progress = cand, True
                break
    return cur


@dataclass
class FuzzReport:
    config: dict
    cases: list = dc_field(default_factory=list)
    violations: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "cases": self.cases,
            "violations": self.violations,
            "summary": {
                "cases": len(self.cases),
                "violations": len(self.violations),
                "by_check": {c: sum(1 for v in self.violations if v["check"] == c)
                             for c in CHECKS + ("build",)},
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _case_seeds(config: FuzzConfig) -> list[tuple[int, int]]:
    rng = random.Random(config.seed)
    return [(rng.getrandbits(64), rng.getrandbits(64)) for _ in range(config.case_count)]


def _run_case(args) -> tuple[dict, list]:
    index, gen_seed, subset_seed, config = args
    pres = generate_case(random.Random(gen_seed), config)
    status, ctx = run_checks(pres, config, subset_seed)
    case = {
        "index": index,
        "vertices": len(pres.vertices),
        "arrows": len(pres.arrows),
        "relations": len(pres.relations),
        "dim": ctx.get("dim"),
        "domdim": ctx.get("domdim"),
        "qf3": ctx.get("qf3"),
        "morita": ctx.get("morita"),
        "status": {k: ("ok" if v == "ok" else "skipped" if v == "skipped" else "violation")
                   for k, v in status.items()},
    }
    violations = []
    for check, msg in status.items():
        if msg in ("ok", "skipped"):
            continue
        entry = {"case": index, "check": check, "message": msg, "presentation": pres.to_json()}
        if config.shrink and check != "build":
            entry["shrunk"] = shrink(pres, config, subset_seed, check).to_json()
        violations.append(entry)
    return case, violations


def run_suite(config: FuzzConfig) -> FuzzReport:
    report = FuzzReport(config.to_json())
    work = [(i, g, s, config) for i, (g, s) in enumerate(_case_seeds(config))]
    if config.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_case, work, chunksize=4))
    else:
        results = [_run_case(w) for w in work]
    for case, viol in results:
        report.cases.append(case)
        report.violations.extend(viol)
    return report
