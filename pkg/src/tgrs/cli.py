"""Command-line front end.

Subcommands: build (matrices only), check (matrices plus classification),
construct1 / construct2 (the two LCD recipes), search (twist enumeration),
and paper-examples (rebuild the embedded reference codes and verify them).

Exit codes: 0 success, 1 verification or comparison failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .classify import classify, report_to_json
from .codes import generator_matrix, parity_check_matrix, tgrs_spec_from_json, tgrs_spec_to_json
from .errors import TgrsError, ValidationError
from .golden import GOLDEN_CODES
from .lcdgen import (build_class1, build_class2, class1_params_from_json,
                     class2_params_from_json, search_eta, template_from_json)

MAX_SAFE_DISTANCE_CAP = 24


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"{path}: JSON parse error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None


def _distance_cap(args) -> int:
    cap = args.distance_cap
    if cap > MAX_SAFE_DISTANCE_CAP and not args.unsafe_cap:
        raise ValidationError(
            f"--distance-cap {cap} exceeds {MAX_SAFE_DISTANCE_CAP}; pass --unsafe-cap to override")
    return cap


def _worker_count() -> int:
    raw = os.environ.get("TGRS_WORKERS", "1")
    try:
        workers = int(raw)
    except ValueError:
        raise ValidationError(f"TGRS_WORKERS must be an integer, got {raw!r}") from None
    if workers < 0:
        raise ValidationError("TGRS_WORKERS must be >= 0")
    if workers == 0:  # auto
        workers = min(os.cpu_count() or 1, 8)
    return workers


def cmd_build(args) -> int:
    spec = tgrs_spec_from_json(_load_json(args.input))
    G = generator_matrix(spec)
    H = parity_check_matrix(spec)
    if args.output == "json":
        _emit_json({"spec": tgrs_spec_to_json(spec),
                    "generator": G.to_lists(),
                    "parity_check": H.to_lists()})
    else:
        print(f"code length {spec.n}, dimension {spec.k}, hook {spec.h}, "
              f"twists 0..{spec.l} over GF({spec.field.q})")
        print("generator matrix:")
        print(G.pretty())
        print("parity-check matrix:")
        print(H.pretty())
    return 0


def cmd_check(args) -> int:
    spec = tgrs_spec_from_json(_load_json(args.input))
    cap = _distance_cap(args)
    G = generator_matrix(spec)
    H = parity_check_matrix(spec)
    report = classify(spec, want_distance=spec.n <= cap, distance_cap=cap)
    if args.output == "json":
        _emit_json({"spec": tgrs_spec_to_json(spec),
                    "generator": G.to_lists(),
                    "parity_check": H.to_lists(),
                    "report": report_to_json(report)})
    else:
        print("generator matrix:")
        print(G.pretty())
        print("parity-check matrix:")
        print(H.pretty())
        print(f"params {report.params_string()}")
        print(f"mds {report.is_mds}  amds {report.is_amds}  "
              f"lcd {report.is_lcd}  hull_dim {report.hull_dim}")
        if report.min_distance is not None:
            print(f"min_distance {report.min_distance}")
        for note in report.notes:
            print(f"note: {note}")
        if report.certificates:
            print(f"certificates: {json.dumps(report_to_json(report)['certificates'], sort_keys=True)}")
    return 0


def _cmd_construct(args, klass: int) -> int:
    obj = _load_json(args.input)
    if klass == 1:
        result = build_class1(class1_params_from_json(obj))
    else:
        result = build_class2(class2_params_from_json(obj))
    if args.output == "json":
        _emit_json(result.to_json())
    else:
        for chk in result.record:
            ev = chk.to_json()["evidence"]
            print(f"{'ok ' if chk.holds else 'FAIL'} {chk.condition}"
                  + (f"  [{ev}]" if ev is not None else ""))
        status = "applicable" if result.applicable else "inapplicable"
        print(f"recipe {klass} {status}; spec:")
        print(json.dumps(tgrs_spec_to_json(result.spec), sort_keys=True))
    return 0 if result.applicable else 1


def cmd_construct1(args) -> int:
    return _cmd_construct(args, 1)


def cmd_construct2(args) -> int:
    return _cmd_construct(args, 2)


def cmd_search(args) -> int:
    if args.budget <= 0:
        raise ValidationError("--budget must be positive")
    template = template_from_json(_load_json(args.input))
    hits = search_eta(template, budget=args.budget, seed=args.seed,
                      workers=_worker_count())
    if args.output == "json":
        _emit_json({"hits": [h.to_json() for h in hits], "count": len(hits)})
    else:
        print(f"{len(hits)} twist vector(s) pass all gates")
        for h in hits:
            eta = [e.rep if template.field.m == 1 else list(e.rep) for e in h.eta]
            print(f"eta {eta}  r {h.r_value.rep}  {h.report.params_string()}"
                  f"  mds {h.report.is_mds}  lcd {h.report.is_lcd}")
    return 0


def _parse_corrupt(raw: str) -> tuple[int, int, int]:
    try:
        idx, row, col = (int(x) for x in raw.split(","))
    except ValueError:
        raise ValidationError("--corrupt expects EXAMPLE,ROW,COL (1-based)") from None
    if not 1 <= idx <= len(GOLDEN_CODES):
        raise ValidationError(f"--corrupt example must be 1..{len(GOLDEN_CODES)}")
    gc = GOLDEN_CODES[idx - 1]
    if not (1 <= row <= gc.k and 1 <= col <= gc.n):
        raise ValidationError(
            f"--corrupt coordinates out of range for a {gc.k}x{gc.n} matrix")
    return idx, row, col


def cmd_paper_examples(args) -> int:
    corrupt = _parse_corrupt(args.corrupt) if args.corrupt else None
    results = []
    first_mismatch: Optional[str] = None
    for pos, gc in enumerate(GOLDEN_CODES, start=1):
        spec = gc.spec()
        G = generator_matrix(spec)
        got = [[x.rep for x in row] for row in (G.row(i) for i in range(G.rows))]
        want = gc.normalized_generator()
        if corrupt is not None and corrupt[0] == pos:
            _, r, c = corrupt
            want[r - 1][c - 1] = (want[r - 1][c - 1] + 1) % gc.q
        mismatch = None
        for i in range(gc.k):
            for j in range(gc.n):
                if got[i][j] != want[i][j]:
                    mismatch = (i + 1, j + 1, got[i][j], want[i][j])
                    break
            if mismatch:
                break
        build = build_class1(gc.params()) if gc.klass == 1 else build_class2(gc.params())
        r_got = next(c for c in build.record if c.condition == "r coefficient is nonzero").evidence
        r_ok = r_got.rep == gc.expected_r and build.applicable
        want_d = gc.expected_distance is not None
        report = classify(spec, want_distance=want_d)
        verdict_ok = report.is_lcd and report.is_mds == gc.expect_mds
        if want_d:
            verdict_ok = verdict_ok and report.min_distance == gc.expected_distance
        ok = mismatch is None and r_ok and verdict_ok
        results.append({
            "example": pos,
            "name": gc.name,
            "generator_ok": mismatch is None,
            "mismatch": ({"row": mismatch[0], "col": mismatch[1],
                          "got": mismatch[2], "want": mismatch[3]} if mismatch else None),
            "r": r_got.rep,
            "r_ok": r_ok,
            "verdict_ok": verdict_ok,
            "report": report_to_json(report),
            "pass": ok,
        })
        if not ok and first_mismatch is None:
            if mismatch:
                first_mismatch = (f"example {pos} generator mismatch at row {mismatch[0]} "
                                  f"col {mismatch[1]}: got {mismatch[2]}, want {mismatch[3]}")
            elif not r_ok:
                first_mismatch = (f"example {pos} r coefficient: got {r_got.rep}, "
                                  f"want {gc.expected_r}")
            else:
                first_mismatch = f"example {pos} classification verdict mismatch"
    all_pass = all(r["pass"] for r in results)
    if args.output == "json":
        _emit_json({"results": results, "all_pass": all_pass})
    else:
        for r in results:
            tag = "PASS" if r["pass"] else "FAIL"
            d = r["report"].get("min_distance")
            shape = r["report"]["params"]
            verdict = ("LCD MDS" if r["report"]["is_mds"] and r["report"]["is_lcd"]
                       else "LCD" if r["report"]["is_lcd"] else "not LCD")
            print(f"{tag}  {r['example']}. {r['name']:<36} {shape:>10}  r={r['r']:<3} {verdict}")
        if first_mismatch:
            print(f"first failure: {first_mismatch}", file=sys.stderr)
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tgrs",
        description="Construct and classify twisted generalized Reed-Solomon codes")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="input JSON file")
        p.add_argument("--output", choices=("json", "text"), default="text")

    p = sub.add_parser("build", help="emit generator and parity-check matrices")
    common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="build matrices and classify the code")
    common(p)
    p.add_argument("--distance-cap", type=int, default=12,
                   help="compute minimum distance when n is at most this")
    p.add_argument("--unsafe-cap", action="store_true",
                   help=f"allow --distance-cap beyond {MAX_SAFE_DISTANCE_CAP}")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct1", help="run the first LCD recipe from params JSON")
    common(p)
    p.set_defaults(func=cmd_construct1)

    p = sub.add_parser("construct2", help="run the second LCD recipe from params JSON")
    common(p)
    p.set_defaults(func=cmd_construct2)

    p = sub.add_parser("search", help="enumerate twist vectors for a recipe template")
    common(p)
    p.add_argument("--budget", type=int, required=True,
                   help="candidate cap: exhaustive when the space fits, else random draws")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized draws")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("paper-examples",
                       help="rebuild the embedded reference codes and verify them")
    common(p, needs_input=False)
    p.add_argument("--corrupt", default=None, metavar="EX,ROW,COL",
                   help="testing aid: perturb one expected generator entry (1-based)")
    p.set_defaults(func=cmd_paper_examples)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TgrsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
