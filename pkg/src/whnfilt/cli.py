"""Command-line front end: ``whnfilt {compute,model,classify,gen,verify}``.

Exit codes: 0 ok, 1 parse error, 2 invalid FDH input, 3 internal invariant or
oracle failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from .analysis import analyze
from .corpus import random_fdh, shrink
from .fdh import NotFdh, WindowTooNarrow, classify, is_filterable_at
from .serialize import InputError, model_json, parse_input_text, render_text, report_json, seq_json
from .verify import SUITES, check_instance, failed_suites

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_INTERNAL = 0, 1, 2, 3


def _emit(obj: Any, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, ensure_ascii=False) + "\n")
    else:
        out.write(render_text(obj) + "\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    """Parse the input spec and build the FDH function, or return an exit code."""
    try:
        spec = parse_input_text(_read_input(args.input))
    except OSError as exc:
        sys.stderr.write(f"error: input: {exc}\n")
        return None, None, EXIT_PARSE
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return None, None, EXIT_PARSE
    try:
        f = spec.to_fdh()
    except NotFdh as exc:
        sys.stderr.write(f"error: {exc}\n")
        return None, None, EXIT_INVALID
    except WindowTooNarrow as exc:
        sys.stderr.write(f"error: {exc}\n")
        return None, None, EXIT_INVALID
    except ValueError as exc:
        sys.stderr.write(f"error: input: {exc}\n")
        return None, None, EXIT_PARSE
    return spec, f, None


def cmd_compute(args) -> int:
    out = sys.stdout
    spec, f, code = _load(args)
    if code is not None:
        return code
    try:
        an = analyze(f, oracle=not args.skip_oracle)
    except AssertionError as exc:
        sys.stderr.write(f"internal invariant violated: {exc}\n")
        return EXIT_INTERNAL
    report = report_json(an, spec)
    _emit(model_json(an) if args.only_model else report, args.format, out)
    if an.oracle_agreement is False:
        sys.stderr.write("oracle disagreement: effective and reference WHN data differ\n")
        return EXIT_INTERNAL
    if not an.certificates_pass:
        sys.stderr.write("certificate failure\n")
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_classify(args) -> int:
    out = sys.stdout
    spec, f, code = _load(args)
    if code is not None:
        return code
    c = classify(f)
    desc = c.chang_description.value if c.chang_description is not None else (
        "zero" if f.is_zero() else "mixed: torsion plus torsion-free part")
    table = [] if f.lo is None else [[m, is_filterable_at(f, m)] for m in range(f.lo - 1, f.hi + 1)]
    obj = {
        "input": spec.to_json(),
        "classification": desc,
        "torsion": c.is_torsion, "torsion_free": c.is_torsion_free,
        "locally_free": c.is_locally_free, "unfilterable": c.is_unfilterable,
        "filterability": table,
    }
    if args.format == "json":
        _emit(obj, "json", out)
    else:
        out.write(desc + "\n")
        out.write("filterable at:\n")
        for m, ok in table:
            out.write(f"  m={m}: {'yes' if ok else 'no'}\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    f = random_fdh(args.seed, 0, args.window, args.max_mult)
    sys.stdout.write(json.dumps({"a": seq_json(f.a), "b": seq_json(f.b)}) + "\n")
    return EXIT_OK


def _check_index(job: tuple[int, int, int, int, bool]) -> tuple[int, dict[str, list[str]]]:
    seed, index, window, max_mult, flip = job
    return index, _check(random_fdh(seed, index, window, max_mult), flip)


def _check(f, flip: bool) -> dict[str, list[str]]:
    try:
        return check_instance(f, flip_threshold=flip)
    except AssertionError as exc:
        return {"internal": [str(exc) or "assertion failed"]}


def _fails(flip: bool):
    return lambda g: bool(failed_suites(_check(g, flip)))


def run_verify(count: int, seed: int, window: int, max_mult: int, workers: int = 1,
               flip_threshold: bool = False) -> dict[str, Any]:
    """Check ``count`` seeded instances; the result does not depend on ``workers``."""
    jobs = [(seed, i, window, max_mult, flip_threshold) for i in range(count)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_index, jobs, chunksize=max(1, count // (4 * workers))))
    else:
        results = [_check_index(j) for j in jobs]
    results.sort(key=lambda x: x[0])
    per_suite = {name: 0 for name in SUITES}
    first_bad = None
    n_bad = 0
    for index, res in results:
        bad = failed_suites(res)
        for name in bad:
            per_suite[name] = per_suite.get(name, 0) + 1
        if bad:
            n_bad += 1
            if first_bad is None:
                first_bad = (index, res)
    counterexample = None
    if first_bad is not None:
        index, res = first_bad
        f = random_fdh(seed, index, window, max_mult)
        small = shrink(f, _fails(flip_threshold))
        small_res = _check(small, flip_threshold)
        counterexample = {
            "index": index,
            "input": {"a": seq_json(f.a), "b": seq_json(f.b)},
            "suites": failed_suites(res),
            "details": [m for name in failed_suites(res) for m in res[name][:3]],
            "shrunk": {"a": seq_json(small.a), "b": seq_json(small.b)},
            "shrunk_details": [m for name in failed_suites(small_res) for m in small_res[name][:3]],
        }
    return {
        "count": count, "seed": seed, "window": window, "max_mult": max_mult,
        "instances_failed": n_bad,
        "suites": per_suite,
        "counterexample": counterexample,
        "pass": n_bad == 0,
    }


def cmd_verify(args) -> int:
    rep = run_verify(args.count, args.seed, args.window, args.max_mult, args.workers,
                     args.flip_threshold)
    _emit(rep, args.format, sys.stdout)
    return EXIT_OK if rep["pass"] else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="whnfilt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def io_flags(sp):
        sp.add_argument("--input", default="-", help="input JSON file, '-' for stdin (default)")
        sp.add_argument("--format", choices=("json", "text"), default="text")

    sp = sub.add_parser("compute", help="full WHN report")
    io_flags(sp)
    sp.add_argument("--skip-oracle", action="store_true", help="skip the brute-force cross-check")
    sp.add_argument("--only-model", action="store_true", help="print only the model sheaf")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("model", help="model sheaf only (compute --only-model)")
    io_flags(sp)
    sp.add_argument("--skip-oracle", action="store_true")
    sp.set_defaults(func=cmd_compute, only_model=True)

    sp = sub.add_parser("classify", help="Chang classification and filterability table")
    io_flags(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("gen", help="random valid input spec")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--window", type=int, default=12)
    sp.add_argument("--max-mult", type=int, default=9)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="randomised differential and invariant suite")
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--window", type=int, default=12)
    sp.add_argument("--max-mult", type=int, default=9)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--format", choices=("json", "text"), default="text")
    sp.add_argument("--flip-threshold", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for invalid FDH input here
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    if args.command in ("gen", "verify"):
        if args.window < 1 or args.max_mult < 0 or getattr(args, "count", 1) < 0:
            sys.stderr.write("error: --window must be >= 1, --max-mult and --count >= 0\n")
            return EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
