"""Command-line front door.

Three commands: ``analyze`` runs the symbolic deciders on a group
expression, ``oracle`` runs the finite-group oracle, ``crosscheck``
replays the oracle's internal consistency suites on random instances.

Exit codes: 0 ok, 2 parse error, 3 bound exceeded, 4 invariant
violation.  JSON output is byte-identical for identical inputs and
seed; wall-clock timing therefore only appears in human-readable
output (the JSON envelope carries ``timing_ms: null``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from math import prod

from . import __version__, finite
from .deciders import is_poor, is_pure_split, pi_poor_necessary
from .errors import BoundExceeded, ParseError
from .finite import (
    DEFAULT_ORDER_BOUND,
    FiniteAbelianGroup,
    Subgroup,
    hom_space_size,
)
from .groups import canonicalize, structural_predicates
from .parser import parse, render
from .snf import diagonal, smith_normal_form

CROSSCHECK_HOM_CAP = 4096


def _envelope(command: str, raw_input: str, result: dict) -> dict:
    return {
        "version": __version__,
        "command": command,
        "input": raw_input,
        "result": result,
        "timing_ms": None,  # suppressed in JSON so identical inputs emit identical bytes
    }


def _emit(envelope: dict, as_json: bool, human_lines: list[str], started: float) -> None:
    if as_json:
        print(json.dumps(envelope, indent=2))
    else:
        for line in human_lines:
            print(line)
        print(f"timing: {(time.perf_counter() - started) * 1000:.1f} ms")


def _decision_lines(name: str, report) -> list[str]:
    lines = [f"{name}: {'true' if report.verdict else 'false'}"]
    for row in report.evidence:
        mark = "ok " if row.passed else "FAIL"
        detail = f" -- {row.detail}" if row.detail else ""
        lines.append(f"  [{mark}] {row.subject}: {row.condition}{detail}")
    return lines


# ---------------------------------------------------------------------------
# analyze


def cmd_analyze(args) -> int:
    started = time.perf_counter()
    text = args.expression
    if text == "-":
        text = sys.stdin.read().strip()
    try:
        group = canonicalize(parse(text))
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    preds = structural_predicates(group)
    poor = is_poor(group)
    pure_split = is_pure_split(group)
    necessary = pi_poor_necessary(group)
    result = {
        "expression": text,
        "canonical": render(group),
        "predicates": preds.to_dict(),
        "poor": poor.to_dict(),
        "pure_split": pure_split.to_dict(),
        "pi_poor_necessary": necessary.to_dict(),
    }
    lines = [
        f"expression: {text}",
        f"canonical : {render(group)}",
        "predicates: " + " ".join(f"{k.removeprefix('is_')}={str(v).lower()}" for k, v in preds.to_dict().items()),
    ]
    lines += _decision_lines("poor", poor)
    lines += _decision_lines("pure_split", pure_split)
    lines += _decision_lines("pi_poor_necessary", necessary)
    _emit(_envelope("analyze", text, result), args.json, lines, started)
    return 0


# ---------------------------------------------------------------------------
# oracle


def _subgroup_row(index: int, sub: Subgroup) -> dict:
    gens = sub.generating_set()
    return {
        "index": index,
        "order": sub.order,
        "generators": " ".join("(" + ",".join(map(str, g)) + ")" for g in gens) or "0",
    }


def _table_output(args, rows: list[dict], result: dict, started: float, raw_input: str) -> None:
    if args.csv:
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
        print(buf.getvalue(), end="")
        return
    lines = []
    for row in rows:
        lines.append("  ".join(f"{k}={v}" for k, v in row.items()))
    _emit(_envelope(f"oracle {args.oracle_command}", raw_input, result), args.json, lines, started)


def cmd_oracle(args) -> int:
    started = time.perf_counter()
    try:
        if args.oracle_command == "snf":
            matrix = _parse_matrix(args.args[0])
            u, s, v = smith_normal_form(matrix)
            result = {"matrix": matrix, "diagonal": diagonal(s), "u": u, "s": s, "v": v}
            lines = [f"diagonal: {diagonal(s)}"]
            _emit(_envelope("oracle snf", args.args[0], result), args.json, lines, started)
            return 0

        if args.oracle_command in ("rel-inj", "rel-pure-inj"):
            if len(args.args) != 2:
                raise ValueError(f"{args.oracle_command} needs exactly two groups")
            m = FiniteAbelianGroup.from_string(args.args[0])
            n = FiniteAbelianGroup.from_string(args.args[1])
            if args.oracle_command == "rel-inj":
                verdict = finite.is_relatively_injective(m, n, bound=args.bound)
            else:
                verdict = finite.is_relatively_pure_injective(m, n, bound=args.bound)
            key = args.oracle_command.replace("-", "_")
            result = {"m": str(m), "n": str(n), key: verdict}
            lines = [f"{args.oracle_command}({m}, {n}) = {str(verdict).lower()}"]
            _emit(_envelope(f"oracle {args.oracle_command}", " ".join(args.args), result),
                  args.json, lines, started)
            return 0

        group = FiniteAbelianGroup.from_string(args.args[0])
        subs = finite.enumerate_subgroups(group, bound=args.bound)
        rows = []
        for i, sub in enumerate(subs):
            row = _subgroup_row(i, sub)
            if args.oracle_command in ("pure", "summand"):
                row["pure"] = finite.is_pure_subgroup(sub, group)
            if args.oracle_command == "summand":
                row["summand"] = finite.is_direct_summand(sub, group)
            rows.append(row)
        result = {"group": str(group), "subgroup_count": len(subs), "rows": rows}
        _table_output(args, rows, result, started, args.args[0])
        return 0
    except (ParseError, ValueError) as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except BoundExceeded as err:
        print(f"bound exceeded: {err}", file=sys.stderr)
        return 3


def _parse_matrix(text: str) -> list[list[int]]:
    rows = []
    for chunk in text.split(";"):
        try:
            rows.append([int(x) for x in chunk.split(",")])
        except ValueError:
            raise ValueError(f"cannot parse matrix row {chunk!r}")
    if len({len(r) for r in rows}) > 1:
        raise ValueError("matrix rows have unequal lengths")
    return rows


# ---------------------------------------------------------------------------
# crosscheck


def _random_group(rng: random.Random, max_order: int, primes=(2, 3, 5), max_rank: int = 3) -> FiniteAbelianGroup:
    while True:
        rank = rng.randint(1, max_rank)
        factors = [rng.choice(primes) ** rng.randint(1, 3) for _ in range(rank)]
        if prod(factors) <= max_order:
            return FiniteAbelianGroup(factors)


def _random_subgroup(rng: random.Random, group: FiniteAbelianGroup) -> Subgroup:
    count = rng.randint(0, 2)
    gens = [group.decode(rng.randrange(group.order)) for _ in range(count)]
    return Subgroup.generated_by(group, gens)


def _shrink_hom_instance(g, m, h, f):
    """Drop generators while the two extension deciders still disagree."""
    current = dict(f)
    changed = True
    while changed and len(current) > 1:
        changed = False
        for key in sorted(current):
            trimmed = {k: v for k, v in current.items() if k != key}
            sub = Subgroup.generated_by(g, list(trimmed))
            try:
                snf_v = finite.hom_extends(trimmed, sub, g, m)
                brute_v = finite.hom_extends_bruteforce(trimmed, sub, g, m, cap=CROSSCHECK_HOM_CAP)
            except Exception:
                continue
            if snf_v != brute_v:
                current = trimmed
                h = sub
                changed = True
                break
    return h, current


def _hom_instance_dict(g, m, h, f, snf_v, brute_v) -> dict:
    return {
        "group": str(g),
        "target": str(m),
        "subgroup_generators": [list(k) for k in sorted(f)],
        "images": [list(f[k]) for k in sorted(f)],
        "snf_verdict": snf_v,
        "bruteforce_verdict": brute_v,
    }


def cmd_crosscheck(args) -> int:
    started = time.perf_counter()
    rng = random.Random(args.seed)
    bound = args.bound
    checks = []
    failures = []

    # 1. every sampled finite group is pure-split
    count_ps = 0
    fail_ps = []
    for _ in range(args.count):
        group = _random_group(rng, min(bound, 64))
        count_ps += 1
        if not finite.is_pure_split_finite(group, bound=bound):
            witness = None
            for sub in finite.enumerate_subgroups(group, bound=bound):
                if finite.is_pure_subgroup(sub, group) and not finite.is_direct_summand(sub, group):
                    witness = sub
                    break
            fail_ps.append({
                "group": str(group),
                "pure_non_summand_generators": [list(g) for g in witness.generating_set()] if witness else [],
            })
    checks.append({"name": "pure_split_finite", "instances": count_ps, "failures": len(fail_ps),
                   "counterexamples": fail_ps[:3]})
    failures.extend(fail_ps)

    # 2. relative injectivity between cyclic p-power groups follows m >= n
    count_tab = 0
    fail_tab = []
    table_primes = [p for p in (2, 3, 5) if p <= args.max_prime]
    for p in table_primes:
        for e_m in range(1, 4):
            for e_n in range(1, 4):
                if p ** max(e_m, e_n) > bound:
                    continue
                count_tab += 1
                got = finite.is_relatively_injective(
                    FiniteAbelianGroup([p**e_m]), FiniteAbelianGroup([p**e_n]), bound=bound)
                if got != (e_m >= e_n):
                    fail_tab.append({"p": p, "m_exponent": e_m, "n_exponent": e_n, "verdict": got})
    checks.append({"name": "relative_injectivity_table", "instances": count_tab,
                   "failures": len(fail_tab), "counterexamples": fail_tab[:3]})
    failures.extend(fail_tab)

    # 3. SNF-based extension decision agrees with exhaustive enumeration
    count_dual = 0
    fail_dual = []
    while count_dual < args.count:
        g = _random_group(rng, min(bound, 64))
        m = _random_group(rng, min(bound, 64))
        if hom_space_size(g, m) > CROSSCHECK_HOM_CAP:
            continue
        h = _random_subgroup(rng, g)
        f = finite.sample_homomorphism(h, m, rng)
        if set(f) != set(h.generating_set()):
            # generator keys must span h for hom_extends; resample
            continue
        count_dual += 1
        snf_v = finite.hom_extends(f, h, g, m)
        brute_v = finite.hom_extends_bruteforce(f, h, g, m, cap=CROSSCHECK_HOM_CAP)
        if snf_v != brute_v:
            h2, f2 = _shrink_hom_instance(g, m, h, f)
            fail_dual.append(_hom_instance_dict(g, m, h2, f2, snf_v, brute_v))
    checks.append({"name": "hom_extends_dual", "instances": count_dual,
                   "failures": len(fail_dual), "counterexamples": fail_dual[:3]})
    failures.extend(fail_dual)

    total_failures = sum(c["failures"] for c in checks)
    result = {
        "seed": args.seed,
        "count": args.count,
        "bound": bound,
        "max_prime": args.max_prime,
        "checks": checks,
        "total_failures": total_failures,
    }
    lines = [
        f"{c['name']}: {c['instances']} instances, {c['failures']} failures"
        for c in checks
    ]
    _emit(_envelope("crosscheck", f"seed={args.seed}", result), args.json, lines, started)
    if total_failures:
        print(json.dumps({"counterexamples": failures[:10]}, indent=2), file=sys.stderr)
        return 4
    return 0


# ---------------------------------------------------------------------------
# argument wiring


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="abelcheck",
                                 description="Classify direct sums of uniform abelian groups "
                                             "and cross-check against a finite-group oracle.")
    ap.add_argument("--version", action="version", version=f"abelcheck {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p_an = sub.add_parser("analyze", help="run the symbolic deciders on an expression")
    p_an.add_argument("expression", help="group expression, or '-' to read stdin")
    p_an.add_argument("--json", action="store_true")
    p_an.set_defaults(func=cmd_analyze)

    p_or = sub.add_parser("oracle", help="finite abelian group oracle")
    p_or.add_argument("oracle_command",
                      choices=["subgroups", "pure", "summand", "rel-inj", "rel-pure-inj", "snf"])
    p_or.add_argument("args", nargs="+")
    p_or.add_argument("--json", action="store_true")
    p_or.add_argument("--csv", action="store_true")
    p_or.add_argument("--bound", type=int, default=DEFAULT_ORDER_BOUND)
    p_or.set_defaults(func=cmd_oracle)

    p_cc = sub.add_parser("crosscheck", help="replay oracle consistency suites on random instances")
    p_cc.add_argument("--seed", type=int, default=0)
    p_cc.add_argument("--count", type=int, default=100)
    p_cc.add_argument("--bound", type=int, default=128)
    p_cc.add_argument("--max-prime", type=int, default=5)
    p_cc.add_argument("--json", action="store_true")
    p_cc.set_defaults(func=cmd_crosscheck)
    return ap


def main(argv=None) -> int:
    args = build_arg_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:  # console script
    sys.exit(main())


if __name__ == "__main__":
    entry()
