"""Command-line interface.

Subcommands:
- count         class (and number) of lines on a generic degree-d hypersurface
- split         classes of the two limiting families under degeneration to K ∪ L
- verify        symbolic sweep of one Chern-class identity over a parameter grid
- normal-types  admissible normal-bundle splitting types
- witness       exact linear-algebra checks on the explicit witness family

Exit codes:
- 0: every emitted row is ok
- 1: identity violation (a claimed identity failed symbolically)
- 2: argument error
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Any

from hyperlines import chern
from hyperlines.chow import integrate
from hyperlines.degeneration import normal_bundle_types, report, total_class
from hyperlines.witness import WitnessProblem, witness_report

OK = "ok"
VIOLATION = "identity-violation"
ARG_ERROR = "argument-error"
EXIT_CODES = {OK: 0, VIOLATION: 1, ARG_ERROR: 2}

VERIFY_KINDS = ("thm33", "prop311", "lemma34", "eq36", "lemma37")


def envelope(command: str, parameters: dict, results: list, status: str) -> dict[str, Any]:
    return {"command": command, "parameters": parameters, "results": results, "status": status}


def serialize(env: dict) -> str:
    return json.dumps(env, sort_keys=True, indent=2, ensure_ascii=False)


def cmd_count(n: int, d: int) -> tuple[dict, list[str]]:
    total = total_class(n, d)
    row: dict[str, Any] = {"class": total.to_json()}
    shown = str(total)
    if d == 2 * n - 3:
        count = integrate(total)
        row["count"] = str(count)
        shown = str(count)
    return envelope("count", {"n": n, "d": d}, [row], OK), [shown]


def cmd_split(n: int, d: int, k: int) -> tuple[dict, list[str]]:
    rep = report(n, d, k)
    status = OK if rep.sum_matches else VIOLATION
    if rep.counts is not None:
        cells = [str(c) for c in rep.counts]
    else:
        cells = [str(rep.class_K), str(rep.class_L), str(rep.total)]
    line = " | ".join(cells + [OK if rep.sum_matches else "MISMATCH"])
    return envelope("split", {"n": n, "d": d, "k": k}, [rep.to_json()], status), [line]


def _sweep_cells(kind: str, args) -> list[tuple[dict, Any]]:
    """Grid cells for a verify sweep in deterministic order: (parameters, thunk)."""
    cells = []
    if kind == "thm33":
        for s in range(2, args.max_sum + 1):
            for k in range(1, s):
                cells.append(({"k": k, "l": s - k}, lambda k=k, l=s - k: chern.verify_theorem_3_3(k, l)))
    elif kind == "prop311":
        for k in range(1, args.max_k + 1):
            for l in range(1, args.max_l + 1):  # noqa: E741
                cells.append(({"k": k, "l": l}, lambda k=k, l=l: chern.verify_prop_3_11(k, l)))
    elif kind == "lemma34":
        for l in range(1, args.max_l + 1):  # noqa: E741
            cells.append(({"l": l, "i_max": l + 4}, lambda l=l: chern.verify_lemma_3_4(l, l + 4)))
    elif kind == "eq36":
        for l in range(1, args.max_l + 1):  # noqa: E741
            cells.append(({"l": l}, lambda l=l: chern.verify_eq_3_6(l)))
    elif kind == "lemma37":
        for l in range(1, args.max_l + 1):  # noqa: E741
            cells.append(({"l": l}, lambda l=l: chern.verify_lemma_3_7(l)))
    return cells


def cmd_verify(kind: str, args) -> tuple[dict, list[str]]:
    params = {"kind": kind}
    if kind == "thm33":
        params["max_sum"] = args.max_sum
    elif kind == "prop311":
        params.update(max_k=args.max_k, max_l=args.max_l)
    else:
        params["max_l"] = args.max_l
    for name in ("max_sum", "max_k", "max_l"):
        if name in params and params[name] < 1:
            raise ValueError(f"--{name.replace('_', '-')} must be >= 1")

    results, lines = [], []
    first_failure = None
    for cell, thunk in _sweep_cells(kind, args):
        outcome = thunk()
        row = dict(cell)
        if kind == "prop311":
            passed, lam = outcome
            row["lambda"] = None if lam is None else str(lam)
            row["expected_lambda"] = str(chern.predicted_lambda(cell["k"], cell["l"]))
        else:
            passed = outcome
        row["pass"] = passed
        results.append(row)
        if not passed and first_failure is None:
            first_failure = cell
        label = " ".join(f"{k}={v}" for k, v in cell.items())
        extra = f"  lambda={row['lambda']}" if kind == "prop311" else ""
        lines.append(f"{label:<16}{extra}  {'pass' if passed else 'FAIL'}")
    status = OK if first_failure is None else VIOLATION
    n_pass = sum(r["pass"] for r in results)
    summary = f"{kind}: {n_pass}/{len(results)} pass"
    if first_failure is not None:
        summary += f"; first counterexample {first_failure}"
    lines.append(summary)
    return envelope("verify", params, results, status), lines


def cmd_normal_types(n: int, k: int) -> tuple[dict, list[str]]:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        types = normal_bundle_types(n, k)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    results = [{"entries": list(t.entries)} for t in types]
    lines = [str(t) for t in types] or ["(none)"]
    return envelope("normal-types", {"n": n, "k": k}, results, OK), lines


def cmd_witness(n: int, d: int, k: int) -> tuple[dict, list[str]]:
    rep = witness_report(WitnessProblem(n, d, k))
    row = {
        "phi_surjective": rep.phi_surjective,
        "kernel_dim": rep.kernel_dim,
        "expected_kernel_dim": rep.expected_kernel_dim,
        "restriction_surjective": rep.restriction_surjective,
        "nodes_distinct": rep.nodes_distinct,
        "kernel_vector_ok": rep.kernel_vector_ok,
    }
    lines = [f"{name:<24}{value}" for name, value in row.items()]
    lines.append("all checks pass" if rep.all_passed else "CHECK FAILED")
    status = OK if rep.all_passed else VIOLATION
    return envelope("witness", {"n": n, "d": d, "k": k}, [row], status), lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlines",
        description="Chern-class computations for lines on (degenerating) hypersurfaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON envelope on stdout")
    common.add_argument("--quiet", action="store_true", help="suppress the human-readable table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="lines on a generic hypersurface")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("split", parents=[common], help="degeneration into K ∪ L")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="identity sweep")
    p.add_argument("kind", choices=VERIFY_KINDS)
    p.add_argument("--max-sum", type=int, default=10)
    p.add_argument("--max-k", type=int, default=6)
    p.add_argument("--max-l", type=int, default=9)

    p = sub.add_parser("normal-types", parents=[common], help="normal-bundle splitting types")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("witness", parents=[common], help="checks on the witness family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def _dispatch(args) -> tuple[dict, list[str]]:
    if args.command == "count":
        return cmd_count(args.n, args.d)
    if args.command == "split":
        return cmd_split(args.n, args.d, args.k)
    if args.command == "verify":
        return cmd_verify(args.kind, args)
    if args.command == "normal-types":
        return cmd_normal_types(args.n, args.k)
    return cmd_witness(args.n, args.d, args.k)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        env, lines = _dispatch(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        params = {k: v for k, v in vars(args).items() if k not in ("command", "json", "quiet")}
        env, lines = envelope(args.command, params, [], ARG_ERROR), []
    if args.json:
        print(serialize(env))
    elif not args.quiet:
        for line in lines:
            print(line)
    return EXIT_CODES[env["status"]]


if __name__ == "__main__":
    sys.exit(main())
