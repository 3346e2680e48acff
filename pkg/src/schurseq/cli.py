"""Command-line front end.

Subcommands::

    product             expand one member of a sequence family
    apply-delta         apply difference operators pointwise at one index
    enumerate-polytope  list lattice points of P_{k,n,alpha}
    verify              run a claim checker (pair, triple, corollary, conjecture)
    explore-conjecture  shorthand for ``verify conjecture``

Exit status: 0 when every verdict is "pass" or "supporting evidence",
1 otherwise, 2 on usage errors.  JSON output is canonical (sorted keys,
canonical partition order), so identical arguments give identical bytes.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import SchurSeqError
from .partitions import Partition, format_partition, partitions_of
from .polytope import FACES, enumerate_points, face_filter
from .schur import SchurExpansion
from .sequences import SequenceFamily, compose, hook_family, parse_ops
from .verify import (
    ClaimReport,
    StableInput,
    border_family,
    check_corollary,
    check_pair_theorem,
    check_triple_theorem,
    explore_conjecture,
)


class UsageError(Exception):
    pass


# --- parsing helpers ---------------------------------------------------------


def _ints(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "-"):
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except SchurSeqError as exc:
        raise UsageError(str(exc)) from None


def parse_sequence(spec: str) -> SequenceFamily:
    """Build a family from ``hom{k}:alpha=..``, ``hook:alpha=..;lambdas=..|..`` or ``border:..;beta=..``."""
    head, _, body = spec.partition(":")
    kind = head.rstrip("0123456789")
    k_text = head[len(kind):]
    fields = {}
    for item in filter(None, (s.strip() for s in body.split(";"))):
        key, eq, value = item.partition("=")
        if not eq:
            raise UsageError(f"expected key=value in {spec!r}, got {item!r}")
        fields[key.strip()] = value.strip()
    alpha = _ints(fields.pop("alpha", ""))
    if k_text:
        k = int(k_text)
        if len(alpha) > k:
            raise UsageError(f"{spec!r}: more weights than factors")
        alpha = alpha + [0] * (k - len(alpha))
    if not alpha:
        raise UsageError(f"{spec!r}: need alpha=... or a factor count")
    if kind == "hom":
        family = hook_family(alpha, engine="dict")
    elif kind == "hook":
        lambdas = [_partition(t) for t in fields.pop("lambdas", "").split("|")] if "lambdas" in fields else None
        if lambdas is not None and len(lambdas) != len(alpha):
            raise UsageError(f"{spec!r}: need one partition per factor")
        family = hook_family(alpha, lambdas, engine="dict")
    elif kind == "border":
        family = border_family(alpha, _partition(fields.pop("beta", "-")))
    else:
        raise UsageError(f"unknown sequence kind {head!r}; use hom, hook or border")
    if fields:
        raise UsageError(f"{spec!r}: unused fields {sorted(fields)}")
    return family


def parse_stable(text: str) -> StableInput:
    """``N=1:1*0/1+1*1/-`` is the family s_(n,1) + s_(n+1) declared stable at 1."""
    head, colon, body = text.partition(":")
    if not colon or not head.startswith("N="):
        raise UsageError(f"expected N=<int>:<terms>, got {text!r}")
    terms = []
    for tok in body.split("+"):
        coef, star, rest = tok.partition("*")
        if not star:
            coef, rest = "1", tok
        shift, slash, lam = rest.partition("/")
        if not slash:
            raise UsageError(f"term {tok!r} must look like c*a/parts")
        terms.append((int(coef), int(shift), tuple(_partition(lam))))
    return StableInput(tuple(terms), int(head[2:]))


# --- output ------------------------------------------------------------------


def _expansion_json(f) -> dict:
    if not isinstance(f, SchurExpansion):
        f = f.to_expansion()
    return {"degree": f.degree, "terms": f.to_json()}


def _emit(payload: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write(_render_text(payload) + "\n")


def _render_text(payload: dict) -> str:
    lines = []
    reports = payload.get("reports")
    if reports is not None:
        lines.append(f"{'claim':<14}{'params':<48}{'bound':>6}{'onset':>7}  verdict")
        for r in reports:
            params = json.dumps(r["params"], sort_keys=True, separators=(",", ":"))
            bound = "" if r["paper_bound"] is None else str(r["paper_bound"])
            onset = "" if r["onset"] is None else str(r["onset"])
            lines.append(f"{r['claim_id']:<14}{params:<48}{bound:>6}{onset:>7}  {r['verdict']}")
            for m in r.get("minimality", []):
                lines.append(f"{'':<14}without {m['removed_op']:<14} window {m['window']} nonzero={m['window_nonzero']}")
        return "\n".join(lines)
    if "terms" in payload:
        for key in sorted(k for k in payload if k != "terms"):
            lines.append(f"{key}: {payload[key]}")
        width = max((len(t["partition"]) for t in payload["terms"]), default=9)
        for t in payload["terms"]:
            lines.append(f"  {t['partition']:<{width}}  {t['coefficient']:>6}")
        return "\n".join(lines)
    for key in sorted(payload):
        lines.append(f"{key}: {json.dumps(payload[key], sort_keys=True)}")
    return "\n".join(lines)


# --- subcommands ---------------------------------------------------------------


def cmd_product(args) -> tuple[dict, bool]:
    fam = parse_sequence(args.seq)
    value = fam(args.n)
    return {"seq": args.seq, "n": args.n, **_expansion_json(value)}, True


def cmd_apply(args) -> tuple[dict, bool]:
    try:
        ops = parse_ops(args.ops)
    except (ValueError, SchurSeqError) as exc:
        raise UsageError(str(exc)) from None
    fam = parse_sequence(args.seq)
    value = compose(ops, fam)(args.n)
    return {"ops": [str(o) for o in ops], "seq": args.seq, "n": args.n, **_expansion_json(value)}, True


def cmd_enumerate(args) -> tuple[dict, bool]:
    alpha = _ints(args.alpha)
    pts = enumerate_points(args.k, args.n, alpha)
    faces = [f.strip() for f in args.face.split(",")] if args.face else []
    for f in faces:
        if f not in FACES:
            raise UsageError(f"unknown face {f!r}; choose from {', '.join(FACES)}")
        pts = face_filter(pts, f)
    shapes: dict[str, int] = {}
    for p in pts:
        key = format_partition(tuple(x for x in p.row_sums() if x))
        shapes[key] = shapes.get(key, 0) + 1
    payload = {
        "k": args.k,
        "n": args.n,
        "alpha": alpha,
        "faces": faces,
        "count": len(pts),
        "row_sum_shapes": [{"partition": s, "count": c} for s, c in sorted(shapes.items())],
    }
    if args.points:
        payload["points"] = [p.to_json() for p in pts]
    return payload, True


def _pair_job(a1, a2, l1, l2, n_max, window):
    return check_pair_theorem((a1, a2), l1, l2, n_max, window).to_json()


def _triple_job(alpha, l1, l2, l3, n_max, window):
    return check_triple_theorem(alpha, l1, l2, l3, n_max, window).to_json()


def _small_partitions(weight: int) -> list[tuple[int, ...]]:
    return [p for w in range(weight + 1) for p in partitions_of(w)]


def _run_jobs(fn, jobs: list[tuple], workers: int) -> list[dict]:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*jobs)))


def cmd_verify(args) -> tuple[dict, bool]:
    claim = args.claim
    if claim == "pair":
        if args.grid:
            lams = _small_partitions(args.lambda_max)
            jobs = [
                (a1, a2, l1, l2, None, args.window)
                for a1 in range(args.alpha_max + 1)
                for a2 in range(a1 + 1)
                for l1 in lams
                for l2 in lams
            ]
        else:
            a = _ints(args.alpha or "0,0")
            if len(a) != 2:
                raise UsageError("pair needs --alpha a1,a2")
            jobs = [(a[0], a[1], _partition(args.lambda1), _partition(args.lambda2), args.n_max, args.window)]
        reports = _run_jobs(_pair_job, jobs, args.jobs)
    elif claim == "triple":
        if args.grid:
            lams = _small_partitions(args.lambda_max)
            alphas = [a for a in itertools.product(range(args.alpha_max + 1), repeat=3) if a[0] >= a[1] >= a[2]]
            jobs = [(a, *ls, None, args.window) for a in alphas for ls in itertools.product(lams, repeat=3)]
        else:
            a = _ints(args.alpha or "0,0,0")
            if len(a) != 3:
                raise UsageError("triple needs --alpha a1,a2,a3")
            jobs = [
                (tuple(a), _partition(args.lambda1), _partition(args.lambda2), _partition(args.lambda3), args.n_max, args.window)
            ]
        reports = _run_jobs(_triple_job, jobs, args.jobs)
    elif claim == "corollary":
        if not args.family or len(args.family) not in (2, 3):
            raise UsageError("corollary needs two or three --family N=<int>:<terms> arguments")
        inputs = [parse_stable(f) for f in args.family]
        reports = [check_corollary(inputs, args.n_max, args.window).to_json()]
    elif claim == "conjecture":
        reports = [_conjecture_report(args).to_json()]
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown claim {claim!r}")
    reports.sort(key=lambda r: json.dumps(r["params"], sort_keys=True))
    ok = all(r["verdict"] in ("pass", "supporting evidence") for r in reports)
    return {"reports": reports, "all_passed": ok}, ok


def _conjecture_report(args) -> ClaimReport:
    alpha = _ints(args.alpha or "0,0,0,0")
    if len(alpha) != 4:
        raise UsageError("the conjecture needs --alpha a1,a2,a3,a4")
    lambdas = [_partition(t) for t in args.lambdas.split("|")] if args.lambdas else None
    if lambdas is not None and len(lambdas) != 4:
        raise UsageError("--lambdas needs four partitions separated by |")
    return explore_conjecture(alpha, lambdas, args.n_max, args.window)


def cmd_explore(args) -> tuple[dict, bool]:
    report = _conjecture_report(args).to_json()
    ok = report["verdict"] == "supporting evidence"
    return {"reports": [report], "all_passed": ok}, ok


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurseq", description=__doc__.split("\n\n")[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", "-o", help="write the report to this file instead of stdout")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes for grids")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        # accept the global flags after the subcommand as well
        p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        p.add_argument("--output", "-o", default=argparse.SUPPRESS)
        p.add_argument("--jobs", type=int, default=argparse.SUPPRESS)

    p = sub.add_parser("product", help="expand one member of a sequence family")
    p.add_argument("--seq", required=True, help="e.g. hom:alpha=1,0 or hook:alpha=0,0;lambdas=1|-")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("apply-delta", help="apply difference operators pointwise")
    p.add_argument("--ops", required=True, help='operators m|(parts) separated by ";"')
    p.add_argument("--seq", required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("enumerate-polytope", help="lattice points of P_{k,n,alpha}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--face", help="comma-separated faces applied in turn: " + ",".join(FACES))
    p.add_argument("--points", action="store_true", help="include the points themselves")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    def claim_options(p):
        p.add_argument("--alpha")
        p.add_argument("--lambda1", default="-")
        p.add_argument("--lambda2", default="-")
        p.add_argument("--lambda3", default="-")
        p.add_argument("--lambdas", help="four partitions separated by | (conjecture)")
        p.add_argument("--family", action="append", help="stable family N=<int>:c*a/parts+... (corollary)")
        p.add_argument("--n-max", type=int)
        p.add_argument("--window", type=int, default=8)
        p.add_argument("--grid", action="store_true", help="run the whole parameter grid")
        p.add_argument("--alpha-max", type=int, default=3)
        p.add_argument("--lambda-max", type=int, default=3)
        common(p)

    p = sub.add_parser("verify", help="check a vanishing claim")
    p.add_argument("claim", choices=("pair", "triple", "corollary", "conjecture"))
    claim_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore-conjecture", help="evidence for the fourfold product statement")
    claim_options(p)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, ok = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (SchurSeqError, ValueError, OverflowError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc), "verdict": "fail"}
        ok = False
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            _emit(payload, args.format, fh)
    else:
        _emit(payload, args.format, sys.stdout)
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
