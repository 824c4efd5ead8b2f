"""Command-line interface.

    measure-lattice eval WORKSPACE MEASURE-EXPR SET-EXPR
    measure-lattice check WORKSPACE TABLE
    measure-lattice jordan WORKSPACE SIGNED-NAME
    measure-lattice verify WORKSPACE [--seed S] [--cap-atoms N] ...

Exit codes: 0 success, 1 check/verification failure, 2 parse error,
3 semantic error, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass, field

from .decomposition import hahn_decompose, jordan_decompose
from .errors import SpaceMismatch, TooLargeToEnumerate, UndefinedDifference
from .expressions import ParseError, SemanticError, eval_measure_expr, eval_set
from .extended_reals import format_ext
from .lattice import (
    MeasureFamily,
    index_partition_formula,
    join2,
    join_family,
    join_via_jordan,
    meet2,
    meet_family,
    meet_via_jordan,
)
from .measurable_space import (
    PARTITION_ENUMERATION_CAP,
    SET_ENUMERATION_CAP,
    check_set_cap,
    enumerate_sets,
)
from .measures import is_measure
from .oracle import (
    FAMILY_MAX_MEMBERS,
    oracle_family_bounds,
    oracle_is_glb,
    oracle_is_lub,
    oracle_join2,
    oracle_meet2,
)
from .workspace import Workspace, load_table, load_workspace

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_SEMANTIC = 3
EXIT_CAP = 4


class CapExceeded(Exception):
    pass


def _emit(out, args, text: str, payload: dict) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def cmd_eval(args, out) -> int:
    ws = load_workspace(args.workspace)
    m = eval_measure_expr(args.measure, ws.space, ws.measures, ws.signed, source="measure-expression")
    a = eval_set(args.set, ws.space, source="set-expression")
    value = format_ext(m(a))
    _emit(out, args, value, {"measure": args.measure, "set": a.to_expression(), "value": value})
    return EXIT_OK


def cmd_check(args, out) -> int:
    ws = load_workspace(args.workspace)
    table = load_table(args.table, ws.space)
    report = is_measure(table)
    if report.ok:
        _emit(out, args, "PASS", {"result": "PASS"})
        return EXIT_OK
    witness = report.witness.to_expression()
    mismatch = report.describe()
    _emit(
        out,
        args,
        f"FAIL: witness {witness}: {mismatch}",
        {
            "result": "FAIL",
            "witness": witness,
            "parts": [format_ext(p) for p in report.parts],
            "value": format_ext(report.total),
            "mismatch": mismatch,
        },
    )
    return EXIT_FAILED


def cmd_jordan(args, out) -> int:
    ws = load_workspace(args.workspace)
    if args.name not in ws.signed:
        kind = "a measure, not a signed measure" if args.name in ws.measures else "not defined"
        raise SemanticError(f"{args.name!r} is {kind}", 1, 1, "signed-measure-name")
    s = ws.signed[args.name]
    pair = jordan_decompose(s)
    hahn = hahn_decompose(s)
    names = ws.space.atom_names

    def row(m):
        return " ".join(f"{a}={w}" for a, w in zip(names, m.weights))

    def setstr(x):
        return "{" + ",".join(x.names) + "}"

    text = (
        f"positive: {row(pair.positive)}\n"
        f"negative: {row(pair.negative)}\n"
        f"hahn: P={setstr(hahn.positive_set)} N={setstr(hahn.negative_set)}"
    )
    payload = {
        "positive": pair.positive.as_mapping(),
        "negative": pair.negative.as_mapping(),
        "hahn": {"positive": list(hahn.positive_set.names), "negative": list(hahn.negative_set.names)},
    }
    _emit(out, args, text, payload)
    return EXIT_OK


@dataclass
class Check:
    name: str
    unit: str = "sets"
    passed: int = 0
    total: int = 0
    skipped: int = 0
    counterexample: str | None = None

    def line(self) -> str:
        status = "OK" if self.counterexample is None else "FAILED"
        text = f"{self.name}: {self.passed}/{self.total} {self.unit} {status}"
        if self.skipped:
            text += f" ({self.skipped} pairs undefined)"
        return text


@dataclass
class Verification:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.counterexample is None for c in self.checks)

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if c.counterexample is not None), None)


def verify_workspace(
    ws: Workspace,
    cap_atoms: int = SET_ENUMERATION_CAP,
    cap_partition_atoms: int = PARTITION_ENUMERATION_CAP,
    cap_family: int = FAMILY_MAX_MEMBERS,
    seed: int = 0,
    samples: int = 1000,
) -> Verification:
    """Compare every fast-path operation with its oracle on every measurable set.

    Stops each check at its first disagreement.  Raises ``TooLargeToEnumerate``
    before doing any work if the space or family is beyond the caps.
    """
    space = ws.space
    check_set_cap(space.n, cap_atoms)
    names = list(ws.measures)
    result = Verification()
    if not names:
        return result
    if space.n > cap_partition_atoms:
        raise TooLargeToEnumerate(
            f"{space.n} atoms exceed the partition cap of {cap_partition_atoms} needed by the family oracle"
        )
    if len(names) > cap_family:
        raise TooLargeToEnumerate(f"{len(names)} measures exceed the family-oracle cap of {cap_family}")

    sets = list(enumerate_sets(space, cap_atoms))
    pairs = list(itertools.combinations(names, 2)) or [(names[0], names[0])]

    def compare(check: Check, label: str, fast, oracle_result, a):
        check.total += 1
        if check.counterexample is not None:
            return
        if fast == oracle_result.value:
            check.passed += 1
        else:
            check.counterexample = (
                f"{label} at {a.to_expression()}: fast path {fast}, oracle {oracle_result.value} "
                f"(witness {oracle_result.witness!r})"
            )

    c_meet, c_join = Check("meet2"), Check("join2")
    c_mj, c_jj = Check("meet_jordan"), Check("join_jordan")
    for p, q in pairs:
        mu, nu = ws.measures[p], ws.measures[q]
        fast_meet, fast_join = meet2(mu, nu), join2(mu, nu)
        for a in sets:
            compare(c_meet, f"meet2({p}, {q})", fast_meet(a), oracle_meet2(mu, nu, a, cap_atoms), a)
            compare(c_join, f"join2({p}, {q})", fast_join(a), oracle_join2(mu, nu, a, cap_atoms), a)
        for check, via, fast, label in (
            (c_mj, meet_via_jordan, fast_meet, "meet_jordan"),
            (c_jj, join_via_jordan, fast_join, "join_jordan"),
        ):
            try:
                route = via(mu, nu)
            except UndefinedDifference:
                check.skipped += 1
                continue
            for a in sets:
                check.total += 1
                if check.counterexample is not None:
                    continue
                if route(a) == fast(a):
                    check.passed += 1
                else:
                    check.counterexample = (
                        f"{label}({p}, {q}) at {a.to_expression()}: {route(a)} but meet/join gives {fast(a)}"
                    )

    family = MeasureFamily({n: ws.measures[n] for n in names})
    c_fm, c_fj, c_ip = Check("meet_family"), Check("join_family"), Check("index_partition_formula")
    fam_meet, fam_join = meet_family(family), join_family(family)
    label = ", ".join(names)
    for a in sets:
        bounds = oracle_family_bounds(family, a, max_atoms=cap_partition_atoms, max_members=cap_family)
        compare(c_fm, f"meet({label})", fam_meet(a), bounds.meet, a)
        compare(c_fj, f"join({label})", fam_join(a), bounds.join, a)
        compare(c_ip, f"index_partition_formula({label})", index_partition_formula(family, a), bounds.meet, a)

    c_glb, c_lub = Check("glb", "samples"), Check("lub", "samples")
    for check, fn, cand in ((c_glb, oracle_is_glb, fam_meet), (c_lub, oracle_is_lub, fam_join)):
        res = fn(cand, family, samples, seed)
        check.total = samples
        if res.ok:
            check.passed = samples
        else:
            check.counterexample = f"{check.name}: {res.reason}" + (
                f" ({res.counterexample!r})" if res.counterexample is not None else ""
            )

    result.checks = [c_meet, c_join, c_mj, c_jj, c_fm, c_fj, c_ip, c_glb, c_lub]
    return result


def cmd_verify(args, out) -> int:
    ws = load_workspace(args.workspace)
    try:
        ver = verify_workspace(
            ws,
            cap_atoms=args.cap_atoms,
            cap_partition_atoms=args.cap_partition_atoms,
            cap_family=args.cap_family,
            seed=args.seed,
            samples=args.samples,
        )
    except TooLargeToEnumerate as exc:
        raise CapExceeded(str(exc)) from None
    lines = [f"atoms: {ws.space.n}; measures: {len(ws.measures)}; seed: {args.seed}"]
    if not ws.measures:
        lines.append("no measures to verify")
    lines += [c.line() for c in ver.checks]
    failure = ver.first_failure()
    if failure is None:
        lines.append("PASS")
    else:
        lines.append(f"FAIL: {failure.counterexample}")
    payload = {
        "atoms": ws.space.n,
        "measures": len(ws.measures),
        "seed": args.seed,
        "checks": [
            {"name": c.name, "passed": c.passed, "total": c.total, "unit": c.unit, "skipped": c.skipped}
            for c in ver.checks
        ],
        "result": "PASS" if failure is None else "FAIL",
        "counterexample": None if failure is None else failure.counterexample,
    }
    _emit(out, args, "\n".join(lines), payload)
    return EXIT_OK if failure is None else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(
        prog="measure-lattice", description="Exact meets, joins and decompositions of measures on finite spaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a measure expression on a set")
    p.add_argument("workspace")
    p.add_argument("measure", help="e.g. 'meet(mu, nu)'")
    p.add_argument("set", help="e.g. 'a|b'")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="test whether a set-function table is a measure")
    p.add_argument("workspace")
    p.add_argument("table")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("jordan", parents=[common], help="Jordan and Hahn decomposition of a signed measure")
    p.add_argument("workspace")
    p.add_argument("name")
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("verify", parents=[common], help="check fast paths against brute-force oracles")
    p.add_argument("workspace")
    p.add_argument("--cap-atoms", type=int, default=SET_ENUMERATION_CAP,
                   help="max atoms for set enumeration (default %(default)s)")
    p.add_argument("--cap-partition-atoms", type=int, default=PARTITION_ENUMERATION_CAP,
                   help="max atoms for partition enumeration (default %(default)s)")
    p.add_argument("--cap-family", type=int, default=FAMILY_MAX_MEMBERS,
                   help="max family size for the family oracle (default %(default)s)")
    p.add_argument("--seed", type=int, default=0, help="seed for bound sampling (default %(default)s)")
    p.add_argument("--samples", type=int, default=1000, help="sampled bounds per glb/lub check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except SemanticError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_SEMANTIC
    except SpaceMismatch as exc:
        err.write(f"error: {exc}\n")
        return EXIT_SEMANTIC
    except (CapExceeded, TooLargeToEnumerate) as exc:
        err.write(f"cap exceeded: {exc}\n")
        return EXIT_CAP
    except OSError as exc:
        err.write(f"error: {exc.filename or ''}: {exc.strerror or exc}\n")
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
