"""Structured reports: assembly, JSON serialisation and plain-text rendering."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager

from .algebra import Algebra, QuiverPresentation
from .homological import (
    DomdimResult,
    dominant_dimension,
    is_injective,
    is_projective,
    qf3_minimal_faithful,
    socle_multiplicities,
    top_multiplicities,
)
from .krullschmidt import _iso_indecomposable, decompose, end_algebra_lifted
from .modules import (
    Module,
    injective_indecomposable,
    projective_indecomposable,
    simple_module,
)
from .morita import (
    CONDITION_KEYS,
    cover_check,
    inverse_nakayama,
    is_frobenius_left,
    is_morita_algebra,
    is_self_injective,
    nakayama,
    schur_algebra,
)

SCHEMA_VERSION = 1


class Timer:
    """Collects wall-clock sections; only reported when asked for."""

    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.sections: dict[str, float] = {}

    @contextmanager
    def section(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.enabled:
                self.sections[name] = round(time.perf_counter() - start, 6)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def domdim_json(d: DomdimResult | None):
    if d is None:
        return None
    return {
        "value": d.to_json(),
        "resolution": [t.name for t in d.witness.terms],
        "projective": list(d.projective_flags),
    }


def algebra_summary(a: Algebra) -> dict:
    return {
        "name": a.name,
        "dim": a.dim,
        "field": a.field.to_json(),
        "idempotents": list(a.idempotent_names),
        "basic": a.is_basic(),
        "radical_dim": a.radical().dim,
        "basis": list(a.labels),
    }


def vertex_table(a: Algebra) -> list[dict]:
    rows = []
    for t in a.class_representatives():
        p = projective_indecomposable(a, t)
        i = injective_indecomposable(a, t)
        rows.append({
            "vertex": a.idempotent_names[t],
            "P": {"dim": p.dim, "top": top_multiplicities(p), "socle": socle_multiplicities(p),
                  "injective": is_injective(p)},
            "I": {"dim": i.dim, "top": top_multiplicities(i), "socle": socle_multiplicities(i),
                  "projective": is_projective(i)},
        })
    return rows


def name_types(m: Module) -> list[tuple[str, Module, int]]:
    """Decomposition of ``m`` with each summand named by a matching P, I or S."""
    a = m.algebra
    reps = a.class_representatives()
    out = []
    unnamed = 0
    for s, mult in decompose(m).summands:
        name = None
        for prefix, ctor in (("P", projective_indecomposable), ("I", injective_indecomposable),
                             ("S", simple_module)):
            for t in reps:
                if _iso_indecomposable(s, ctor(a, t, m.side)):
                    name = f"{prefix}{a.idempotent_names[t]}"
                    break
            if name:
                break
        if name is None:
            unnamed += 1
            name = f"M{unnamed}"
        out.append((name, s, mult))
    return out


def decomposition_json(m: Module) -> dict:
    parts = name_types(m)
    return {
        "module": m.name,
        "dim": m.dim,
        "summands": [{"type": n, "dim": s.dim, "multiplicity": k} for n, s, k in parts],
        "description": " + ".join(n if k == 1 else f"{n}^{k}" for n, _, k in parts) or "0",
    }


def cover_json(a: Algebra, p: Module) -> dict:
    v = cover_check(a, p)
    out = v.to_json()
    out["module"] = p.name
    return out


def morita_json(a: Algebra, cap: int) -> dict:
    mv = is_morita_algebra(a, cap)
    out = {
        "verdict": mv.verdict,
        "qf3": mv.qf3,
        "conditions": {k: mv.conditions[k] for k in CONDITION_KEYS if k in mv.conditions},
    }
    if mv.chosen_P is not None:
        out["P"] = mv.chosen_P.name
        out["idempotent"] = mv.idempotent.names(a)
        out["B_dim"] = mv.details["B_dim"]
        out["B_self_injective"] = mv.details["B_self_injective"]
        out["B_frobenius"] = mv.details["B_frobenius"]
        out["cover"] = mv.details["cover"]
    else:
        out["reason"] = mv.details.get("reason")
    return out


def qf3_json(a: Algebra) -> dict | None:
    q = qf3_minimal_faithful(a)
    if q is None:
        return None
    p, e = q
    b = schur_algebra(p)
    return {"module": p.name, "idempotent": e.names(a), "dim": p.dim, "B_dim": b.dim}


def analyze(a: Algebra, pres: QuiverPresentation | None, source: str, cap: int,
            covers: list[Module] = (), timings: bool = False) -> dict:
    timer = Timer(timings)
    report: dict = {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "input": {"source": source, "cap": cap,
                  "presentation": pres.to_json() if pres is not None else None},
    }
    with timer.section("algebra"):
        report["algebra"] = algebra_summary(a)
    with timer.section("vertices"):
        report["vertices"] = vertex_table(a)
    with timer.section("domdim"):
        report["domdim"] = {"left": domdim_json(dominant_dimension(a, cap)),
                            "right": domdim_json(dominant_dimension(a, cap, "right"))}
    with timer.section("qf3"):
        report["qf3"] = qf3_json(a)
    with timer.section("morita"):
        report["morita"] = morita_json(a, cap)
    with timer.section("covers"):
        report["covers"] = [cover_json(a, p) for p in covers]
    if timings:
        report["timings"] = timer.sections
    return report


def nakayama_json(m: Module) -> dict:
    out = {"module": m.name}
    if is_projective(m):
        out["nu"] = decomposition_json(nakayama(m))
    else:
        out["nu"] = None
    if is_injective(m):
        out["nu_inverse"] = decomposition_json(inverse_nakayama(m))
    else:
        out["nu_inverse"] = None
    return out


def endalg_json(m: Module) -> dict:
    b, d = end_algebra_lifted(m)
    return {
        "module": m.name,
        "dim": b.dim,
        "idempotents": list(b.idempotent_names),
        "radical_dim": b.radical().dim,
        "self_injective": is_self_injective(b),
        "frobenius": is_frobenius_left(b),
        "summands": [{"dim": s.module.dim} for s in d.pieces],
        "multiplication": [[{b.labels[k]: str(c) for k, c in sorted(b.mult[i][j].items())}
                            for j in range(b.dim)] for i in range(b.dim)],
        "basis": list(b.labels),
    }


# ---------------------------------------------------------------------------
# text rendering


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, dict) and "at_least" in x:
        return f">={x['at_least']}"
    if x is None:
        return "-"
    return str(x)


def render_analyze(r: dict) -> str:
    a = r["algebra"]
    lines = [
        f"algebra: {a['name']}",
        f"dim: {a['dim']}",
        f"idempotents: {', '.join(a['idempotents'])}",
        f"radical dim: {a['radical_dim']}",
        "vertices:",
    ]
    for v in r["vertices"]:
        p, i = v["P"], v["I"]
        lines.append(f"  {v['vertex']}: P dim {p['dim']} top {p['top']} soc {p['socle']} "
                     f"injective {_fmt(p['injective'])}; I dim {i['dim']} top {i['top']} "
                     f"soc {i['socle']} projective {_fmt(i['projective'])}")
    dl, dr = r["domdim"]["left"], r["domdim"]["right"]
    lines.append(f"domdim: {_fmt(dl['value'])} (right {_fmt(dr['value'])})")
    lines.append(f"injective resolution: {', '.join(dl['resolution'])}")
    q = r["qf3"]
    lines.append("qf3: absent" if q is None else
                 f"qf3: {q['module']} (e = {'+'.join('e' + n for n in q['idempotent'])}), B dim {q['B_dim']}")
    mo = r["morita"]
    lines.append(f"morita: {_fmt(mo['verdict'])}")
    if mo["conditions"]:
        lines.append("conditions: " + " ".join(f"{k}={_fmt(v)}" for k, v in mo["conditions"].items()))
    if "B_self_injective" in mo:
        lines.append(f"B self-injective: {_fmt(mo['B_self_injective'])}")
    for c in r["covers"]:
        lines.append(f"cover {c['module']}: {_fmt(c['holds'])}")
    for k, v in sorted(r.get("timings", {}).items()):
        lines.append(f"time {k}: {v:.6f}s")
    return "\n".join(lines) + "\n"


def render_cover(c: dict) -> str:
    return (f"module: {c['module']}\n"
            f"cover: {_fmt(c['holds'])}\n"
            f"canonical map: {_fmt(c['canonical_map'])}\n"
            f"unit: {_fmt(c['unit'])}\n"
            f"full and faithful: {_fmt(c['full_faithful'])}\n")


def render_decomposition(d: dict) -> str:
    return f"{d['module']} = {d['description']}\n"
