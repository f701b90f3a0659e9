"""Unified command-line front end.

Identical invocations produce byte-identical reports; values that can exceed
64 bits are serialized as decimal strings. Exit status is 0 only when every
requested check passes (audit violations, unmatched classifications, or
failed construction checks exit nonzero), 1 on a failed check, and 2 on usage
errors such as unreadable files or cap violations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import (
    ConstructionSpec,
    classify_fact_2_1,
    classify_pair_theorem_1_1,
    classify_theorem_1_2,
    construction_pair,
    covering_number,
    enumerate_maximal_t_intersecting,
    extremal_product_search,
    family_to_text,
    leading_constant_check,
    n_threshold,
    read_family,
    verify_construction,
)
from .constructions import PAIR_KINDS, default_grid as construction_grid
from .formulas import (
    ALL_LEMMAS,
    audit_lemma,
    default_grid as audit_grid,
    eval_a,
    eval_c1,
    eval_c2,
    eval_f,
    eval_g,
    eval_h,
    eval_tau_bound,
    eval_tilde,
)


def _jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int) and abs(value) >= 2**53:
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n"
    if out:
        with io.open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(command: str, params: dict, results, verdict: bool) -> dict:
    return {
        "command": command,
        "params": params,
        "results": results,
        "verdict": "pass" if verdict else "fail",
    }


def _parse_ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.replace(",", " ").split())


def _parse_grid(text: str | None, default):
    """Grid spec 't=1,2;k=2..4;l=2..5;n=8..12' -> sorted (t,k,l,n) points;
    k and l ranges may reference t (e.g. k=t+1..t+4) and n may reference l."""
    if text is None or text == "default":
        return default()

    def parse_range(expr: str, env: dict[str, int]) -> list[int]:
        vals: list[int] = []
        for part in expr.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                vals.extend(range(_eval(lo, env), _eval(hi, env) + 1))
            else:
                vals.append(_eval(part, env))
        return vals

    def _eval(expr: str, env: dict[str, int]) -> int:
        allowed = {"__builtins__": {}}
        allowed.update(env)
        return int(eval(expr, allowed))  # tiny arithmetic like t+1; no builtins

    dims: dict[str, str] = {}
    for chunk in text.split(";"):
        name, _, expr = chunk.partition("=")
        dims[name.strip()] = expr.strip()
    pts = []
    for t in parse_range(dims["t"], {}):
        for k in parse_range(dims["k"], {"t": t}):
            for l in parse_range(dims["l"], {"t": t, "k": k}):
                for n in parse_range(dims["n"], {"t": t, "k": k, "l": l}):
                    pts.append((t, k, l, n))
    return sorted(set(pts))


def _family_json(fam) -> dict:
    return {"n": fam.n, "k": fam.k, "members": [list(s) for s in fam.to_sets()]}


# ---------------------------------------------------------------------------
# subcommands


def _cmd_construct(args) -> int:
    spec = ConstructionSpec(
        kind=args.kind,
        n=args.n,
        k=args.k,
        t=args.t,
        l=args.l,
        quad=_parse_ints(args.quad) if args.quad else None,
        X=_parse_ints(args.x) if args.x else None,
        Y=_parse_ints(args.y) if args.y else None,
        T=_parse_ints(args.anchor) if args.anchor else (tuple(range(1, args.t)) if args.kind == "D" else None),
        xs=_parse_ints(args.quad) if (args.kind == "D" and args.quad) else ((args.t, args.t + 1, args.t + 2, args.t + 3) if args.kind == "D" else None),
    )
    fam = spec.build()
    text = family_to_text(fam)
    if args.out:
        with io.open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify_constructions(args) -> int:
    pts = _parse_grid(args.grid, construction_grid)
    kinds = args.kinds.split(",") if args.kinds else list(PAIR_KINDS)
    reports = []
    ok = True
    for kind in sorted(kinds):
        for t, k, l, n in pts:
            if kind == "BB" and t != 1:
                continue
            spec, partner = construction_pair(kind, n, k, l, t)
            rep = verify_construction(spec, partner, check_maximal=args.maximal)
            rep["pair_kind"] = kind
            rep["point"] = {"t": t, "k": k, "l": l, "n": n}
            ok = ok and rep["pass"]
            reports.append(rep)
    _emit(_report("verify-constructions", {"grid": args.grid or "default", "kinds": kinds}, reports, ok), args.out)
    return 0 if ok else 1


def _cmd_enumerate(args) -> int:
    fams = enumerate_maximal_t_intersecting(args.n, args.k, args.t, vertex_cap=args.vertex_cap)
    if args.json:
        payload = _report(
            "enumerate-maximal",
            {"n": args.n, "k": args.k, "t": args.t},
            {"count": len(fams), "families": [_family_json(f) for f in fams]},
            True,
        )
        _emit(payload, args.out)
        return 0
    blocks = [family_to_text(f) for f in fams]
    text = "\n".join(blocks)
    if args.out:
        with io.open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    sys.stderr.write(f"{len(fams)} maximal families\n")
    return 0


def _cmd_search(args) -> int:
    res = extremal_product_search(args.n, args.k1, args.k2, args.t, args.min_tau, subset_cap=args.subset_cap)
    payload = _report(
        "search",
        {"n": args.n, "k1": args.k1, "k2": args.k2, "t": args.t, "min_tau": args.min_tau},
        {
            "best_product": str(res.best_product),
            "pairs_examined": res.pairs_examined,
            "at_proved_threshold": res.at_proved_threshold,
            "threshold": str(n_threshold(args.k1, args.k2, args.t)),
            "witnesses": [
                {"first": _family_json(f), "second": _family_json(g)} for f, g in res.witnesses
            ],
        },
        True,
    )
    _emit(payload, args.out)
    return 0


def _cmd_classify(args) -> int:
    try:
        fam = read_family(args.infile)
    except OSError as exc:
        sys.stderr.write(f"cannot read family file: {exc}\n")
        return 2
    if args.theorem == "1.2":
        match = classify_theorem_1_2(fam, args.t)
    elif args.theorem == "fact2.1":
        match = classify_fact_2_1(fam, args.t)
    elif args.theorem == "1.1":
        if not args.infile2:
            sys.stderr.write("--theorem 1.1 needs --in2 with the partner family\n")
            return 2
        match = classify_pair_theorem_1_1(fam, read_family(args.infile2), args.t)
    else:
        raise AssertionError
    payload = _report(
        "classify",
        {"in": args.infile, "theorem": args.theorem, "t": args.t},
        {
            "template": match.template,
            "witnesses": match.witnesses,
            "all_matches": [{"template": m, "witnesses": w} for m, w in match.all_matches],
        },
        match.matched,
    )
    _emit(payload, args.out)
    return 0 if match.matched else 1


def _cmd_classify_all(args) -> int:
    fams = enumerate_maximal_t_intersecting(args.n, args.k, args.t, vertex_cap=args.vertex_cap)
    counts: dict[str, int] = {}
    unmatched = []
    examined = 0
    for fam in fams:
        if covering_number(fam, args.t).tau != args.t + 1:
            continue
        examined += 1
        match = classify_theorem_1_2(fam, args.t)
        if not match.matched:
            unmatched.append(_family_json(fam))
            continue
        for name, _ in match.all_matches:
            counts[name] = counts.get(name, 0) + 1
    ok = not unmatched
    payload = _report(
        "classify-all",
        {"n": args.n, "k": args.k, "t": args.t},
        {
            "maximal_families": len(fams),
            "with_min_cover_t_plus_1": examined,
            "matches_per_template": dict(sorted(counts.items())),
            "unmatched": unmatched,
        },
        ok,
    )
    _emit(payload, args.out)
    return 0 if ok else 1


def _cmd_audit(args) -> int:
    lemmas = list(ALL_LEMMAS) if args.lemma == "all" else [args.lemma]
    grid = _parse_grid(args.grid, audit_grid)
    reports = []
    ok = True
    for lemma in lemmas:
        rep = audit_lemma(lemma, grid)
        ok = ok and rep.violations == 0
        reports.append(rep)
    if args.format == "csv":
        rows = [["lemma", "verdict", "lhs", "rhs", "note", "params"]]
        for rep in reports:
            for p in rep.points:
                rows.append([rep.lemma, p.verdict, p.lhs, p.rhs, p.note, json.dumps(p.params, sort_keys=True)])
        buf = io.StringIO()
        csv.writer(buf).writerows(rows)
        if args.out:
            with io.open(args.out, "w", encoding="utf-8") as fh:
                fh.write(buf.getvalue())
        else:
            sys.stdout.write(buf.getvalue())
        return 0 if ok else 1
    payload = _report(
        "audit",
        {"lemma": args.lemma, "grid": args.grid or "default"},
        [
            {
                "lemma": rep.lemma,
                "checked": rep.checked,
                "violations": rep.violations,
                "points": [
                    {"params": p.params, "verdict": p.verdict, "lhs": p.lhs, "rhs": p.rhs, "note": p.note}
                    for p in rep.points
                ],
            }
            for rep in reports
        ],
        ok,
    )
    _emit(payload, args.out)
    return 0 if ok else 1


_FORMULAS = {
    "g": (eval_g, ("m", "x", "y", "t", "n")),
    "a": (eval_a, ("x", "t", "n")),
    "c1": (eval_c1, ("y", "t", "n")),
    "c2": (eval_c2, ("x", "y", "t", "n")),
    "h": (eval_h, ("x", "y", "t", "n")),
    "f": (eval_f, ("m", "k", "l", "n", "t")),
}


def _cmd_eval(args) -> int:
    kv = {}
    for item in args.args:
        name, _, val = item.partition("=")
        kv[name] = int(val)
    if args.formula in _FORMULAS:
        fn, names = _FORMULAS[args.formula]
        missing = [x for x in names if x not in kv]
        if missing:
            sys.stderr.write(f"missing arguments: {', '.join(missing)}\n")
            return 2
        value = fn(*(kv[x] for x in names))
    elif args.formula.startswith("tilde-"):
        kind = args.formula[len("tilde-") :]
        n = kv.pop("n")
        value = eval_tilde(kind, n, **kv)
    elif args.formula == "tau-bound":
        side = "F" if kv.pop("side", 0) == 0 else "G"
        value = eval_tau_bound(side, kv["tau_f"], kv["tau_g"], kv["k"], kv["l"], kv["n"], kv["t"])
    else:
        sys.stderr.write(f"unknown formula {args.formula!r}\n")
        return 2
    if isinstance(value, Fraction):
        sys.stdout.write(f"{value.numerator}/{value.denominator}\n")
    else:
        sys.stdout.write(f"{value}\n")
    return 0


def _cmd_threshold(args) -> int:
    sys.stdout.write(f"{n_threshold(args.k, args.l, args.t)}\n")
    return 0


def _cmd_leading_term(args) -> int:
    n_seq = _parse_ints(args.n_seq)
    tol = Fraction(args.tol).limit_denominator(10**9)
    rep = leading_constant_check(args.pair, args.k, args.l, args.t, n_seq, tol=tol)
    payload = _report(
        "leading-term",
        {"pair": args.pair, "k": args.k, "l": args.l, "t": args.t, "n_seq": list(n_seq)},
        {
            "constant": rep["constant"],
            "relative_gap": rep["relative_gap"],
            "rows": [{"n": r["n"], "product": r["product"], "ratio": r["ratio"]} for r in rep["rows"]],
        },
        rep["pass"],
    )
    _emit(payload, args.out)
    return 0 if rep["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xfam", description=__doc__)
    parser.add_argument(
        "--jobs",
        type=int,
        default=int(os.environ.get("XFAM_JOBS", "1")),
        help="worker bound for grid runs (grids here are small; kept for interface stability)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit one construction in the family text format")
    p.add_argument("--kind", required=True, choices=["A", "B", "C1", "C2", "H", "D"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--x", help="elements of X, e.g. '4 5'")
    p.add_argument("--y", help="elements of Y")
    p.add_argument("--quad", help="four anchor elements (B and D)")
    p.add_argument("--anchor", help="base anchor T for D (defaults to 1..t-1)")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify-constructions", help="size/pairing/covering checks over a grid")
    p.add_argument("--grid", help="e.g. 't=1,2;k=t+1..t+3;l=t+1..t+3;n=l+2..12' (default: the full verification grid)")
    p.add_argument("--kinds", help="comma list from AA,BB,CC,HH")
    p.add_argument("--maximal", action="store_true", help="also measure closure fixed-point status")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify_constructions)

    p = sub.add_parser("enumerate-maximal", help="all maximal t-intersecting families")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--vertex-cap", type=int, default=70)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("search", help="exhaustive maximal-pair product search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--min-tau", type=int, required=True)
    p.add_argument("--subset-cap", type=int, default=22)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_search)

    p = sub.add_parser("classify", help="match one family (or pair) against the templates")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--in2", dest="infile2")
    p.add_argument("--theorem", required=True, choices=["1.2", "1.1", "fact2.1"])
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("classify-all", help="enumerate + classify, summary table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--vertex-cap", type=int, default=70)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_classify_all)

    p = sub.add_parser("audit", help="exact inequality audit over a grid")
    p.add_argument("--lemma", required=True, help=f"one of {', '.join(ALL_LEMMAS)} or 'all'")
    p.add_argument("--grid")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_audit)

    p = sub.add_parser("eval", help="print one exact formula value")
    p.add_argument("--formula", required=True, help="g|a|c1|c2|h|f|tilde-a|tilde-h|tilde-g|tilde-c1c2|tau-bound")
    p.add_argument("--args", nargs="*", default=[], help="name=value pairs")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("threshold", help="ground-set size where the extremal classification is proved")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(fn=_cmd_threshold)

    p = sub.add_parser("leading-term", help="normalized product convergence check")
    p.add_argument("--pair", required=True, choices=["AA", "HH", "CC", "BB"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n-seq", required=True, help="comma list of ground-set sizes")
    p.add_argument("--tol", default="0.01")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_leading_term)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
