"""Command-line front end."""

from __future__ import annotations

import argparse
import os
import sys
import traceback

from . import report as rep
from .errors import InputError, MoritakitError, SchemaError
from .fixtures import FIXTURE_NAMES, parse_input
from .algebra import build_algebra
from .fuzz import FuzzConfig, run_suite
from .homological import dominant_dimension
from .modules import module_from_spec

DEFAULT_CAP = 10


def default_cap() -> int:
    raw = os.environ.get("MORITAKIT_CAP")
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SchemaError(f"MORITAKIT_CAP must be an integer, got {raw!r}", "MORITAKIT_CAP") from None
    if cap < 1:
        raise SchemaError("MORITAKIT_CAP must be positive", "MORITAKIT_CAP")
    return cap


def _load(source: str):
    pres = parse_input(source)
    name = source if source in FIXTURE_NAMES else os.path.splitext(os.path.basename(source))[0]
    return pres, build_algebra(pres, name)


def _cap(args) -> int:
    if args.cap is not None:
        if args.cap < 1:
            raise SchemaError("--cap must be positive", "--cap")
        return args.cap
    return default_cap()


def _envelope(command: str, source: str, body: dict) -> dict:
    return {"schema_version": rep.SCHEMA_VERSION, "command": command, "input": {"source": source}, **body}


def cmd_analyze(args) -> tuple[dict, str]:
    pres, a = _load(args.input)
    covers = [module_from_spec(a, s) for s in args.module or []]
    r = rep.analyze(a, pres, args.input, _cap(args), covers, args.timings)
    return r, rep.render_analyze(r)


def cmd_cover(args) -> tuple[dict, str]:
    _, a = _load(args.input)
    if not args.module:
        raise SchemaError("cover needs --module", "--module")
    results = [rep.cover_json(a, module_from_spec(a, s)) for s in args.module]
    text = "".join(rep.render_cover(c) for c in results)
    return _envelope("cover", args.input, {"covers": results}), text


def cmd_domdim(args) -> tuple[dict, str]:
    _, a = _load(args.input)
    cap = _cap(args)
    left = rep.domdim_json(dominant_dimension(a, cap))
    right = rep.domdim_json(dominant_dimension(a, cap, "right"))
    body = {"cap": cap, "domdim": {"left": left, "right": right}}
    text = (f"{rep._fmt(left['value'])}\n"
            f"right: {rep._fmt(right['value'])}\n"
            f"injective resolution: {', '.join(left['resolution'])}\n")
    return _envelope("domdim", args.input, body), text


def _modules(args, a):
    return [module_from_spec(a, s) for s in (args.module or ["regular"])]


def cmd_nakayama(args) -> tuple[dict, str]:
    _, a = _load(args.input)
    results = [rep.nakayama_json(m) for m in _modules(args, a)]
    lines = []
    for r in results:
        nu = r["nu"]["description"] if r["nu"] else "- (not projective)"
        inv = r["nu_inverse"]["description"] if r["nu_inverse"] else "- (not injective)"
        lines.append(f"nu({r['module']}) = {nu}\nnu^-1({r['module']}) = {inv}\n")
    return _envelope("nakayama", args.input, {"results": results}), "".join(lines)


def cmd_decompose(args) -> tuple[dict, str]:
    _, a = _load(args.input)
    results = [rep.decomposition_json(m) for m in _modules(args, a)]
    return (_envelope("decompose", args.input, {"results": results}),
            "".join(rep.render_decomposition(d) for d in results))


def cmd_endalg(args) -> tuple[dict, str]:
    _, a = _load(args.input)
    results = [rep.endalg_json(m) for m in _modules(args, a)]
    lines = []
    for r in results:
        lines.append(f"End({r['module']})^op: dim {r['dim']}, {len(r['idempotents'])} idempotents, "
                     f"radical dim {r['radical_dim']}, self-injective {rep._fmt(r['self_injective'])}, "
                     f"frobenius {rep._fmt(r['frobenius'])}\n")
    return _envelope("endalg", args.input, {"results": results}), "".join(lines)


def cmd_fuzz(args) -> tuple[dict, str]:
    if args.count < 0:
        raise SchemaError("--count must be non-negative", "--count")
    config = FuzzConfig(seed=args.seed, case_count=args.count, cap=_cap(args), jobs=args.jobs)
    fr = run_suite(config).to_json()
    body = {"schema_version": rep.SCHEMA_VERSION, "command": "fuzz", **fr}
    s = fr["summary"]
    lines = [f"cases: {s['cases']}", f"violations: {s['violations']}"]
    lines += [f"  {k}: {v}" for k, v in sorted(s["by_check"].items())]
    for v in fr["violations"]:
        lines.append(f"case {v['case']} {v['check']}: {v['message']}")
    return body, "\n".join(lines) + "\n"


COMMANDS = {
    "analyze": cmd_analyze,
    "cover": cmd_cover,
    "domdim": cmd_domdim,
    "nakayama": cmd_nakayama,
    "decompose": cmd_decompose,
    "endalg": cmd_endalg,
    "fuzz": cmd_fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moritakit",
        description="Covers, Morita algebras and dominant dimension for bound quiver algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True, with_module=True):
        if with_input:
            p.add_argument("input", help=f"presentation file or fixture ({', '.join(FIXTURE_NAMES)})")
        if with_module:
            p.add_argument("--module", action="append", metavar="SPEC",
                           help="module spec such as P1+P2, I3, S2, regular, D(regular); repeatable")
        p.add_argument("--cap", type=int, default=None,
                       help=f"dominant dimension cap (default $MORITAKIT_CAP or {DEFAULT_CAP})")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--timings", action="store_true", help="include wall-clock timings")

    common(sub.add_parser("analyze", help="full report for an algebra"))
    common(sub.add_parser("cover", help="decide whether (A, P) is a cover"))
    common(sub.add_parser("domdim", help="dominant dimension on both sides"), with_module=False)
    common(sub.add_parser("nakayama", help="Nakayama functor and its inverse"))
    common(sub.add_parser("decompose", help="indecomposable summands"))
    common(sub.add_parser("endalg", help="endomorphism algebra End(M)^op"))
    fz = sub.add_parser("fuzz", help="cross-check characterisations on random algebras")
    common(fz, with_input=False, with_module=False)
    fz.add_argument("--seed", type=int, default=7)
    fz.add_argument("--count", type=int, default=200)
    fz.add_argument("--jobs", type=int, default=1, help="worker processes")
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        body, text = COMMANDS[args.command](args)
    except MoritakitError as exc:
        kind = type(exc).__name__
        print(f"error: {kind}: {exc}", file=stderr)
        return exc.exit_code
    except (ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return InputError.exit_code
    except Exception:  # noqa: BLE001 - any other failure is a bug
        print("error: internal failure", file=stderr)
        traceback.print_exc(file=stderr)
        return 4
    stdout.write(rep.dumps(body) if args.json else text)
    if args.command == "fuzz" and body["summary"]["violations"]:
        return 4
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
