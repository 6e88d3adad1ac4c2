"""Command-line front end: ``fssp <verb> ...``.

Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import grid
from .cni import cni_verdict, hand_status
from .extensions import fg_table
from .grid import ConfigError, PathConfig, RegionConfig, parse_config, serialize
from .mft.formulas import Method, mft_formula
from .mft.localmap import DEFAULT_BUDGET, BudgetExceeded, is_safe, mft_localmap
from .solutions import (
    BoundKind,
    build_cc,
    build_lm,
    build_reflection,
    simulate_cc,
    simulate_lm,
    simulate_reflection,
    state_bounds,
)
from .solutions.counts import describe_big, mss_upper, wrapper_factor
from .variations import BY_NAME, G_TWO_PATH, TWO_REG, Kind

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _read_lines(path: str) -> list:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(str(exc)) from exc
    lines = [(n, line) for n, line in enumerate(text.splitlines(), start=1) if line.strip()]
    if not lines:
        raise UsageError(f"{path}: no configuration records")
    return lines


def _load(path: str) -> list:
    out = []
    for n, line in _read_lines(path):
        try:
            out.append(parse_config(line))
        except ConfigError as exc:
            raise UsageError(f"{path}:{n}: {exc}") from exc
    return out


def _variation(args, C):
    if args.variation is not None:
        v = BY_NAME[args.variation]
    else:
        v = TWO_REG if isinstance(C, RegionConfig) else G_TWO_PATH
    if not v.member(C):
        raise UsageError(f"{serialize(C)} is not a configuration of {v}")
    return v


def _need_path(C, verb: str) -> PathConfig:
    if not isinstance(C, PathConfig):
        raise UsageError(f"{verb} needs a PATH configuration")
    return C


# -- verbs -------------------------------------------------------------------

def cmd_validate(args, out) -> int:
    code = EXIT_OK
    for n, line in _read_lines(args.file):
        try:
            C = parse_config(line, check=False)
        except ConfigError as exc:
            raise UsageError(f"{args.file}:{n}: {exc}") from exc
        v = grid.validate(C)
        if v is None:
            print(f"OK {serialize(C)}", file=out)
        else:
            idx = ",".join(str(k) for k in v.indices)
            print(f"INVALID {v.kind} ({idx}) {serialize(C)}: {v.message}", file=out)
            code = EXIT_NEGATIVE
    return code


def cmd_render(args, out) -> int:
    for k, C in enumerate(_load(args.file)):
        if k:
            print(file=out)
        print(grid.render_ascii(C), file=out)
    return EXIT_OK


def _mft_one(args, C, out):
    variation = _variation(args, C)
    method = args.method
    formula_ok = isinstance(C, PathConfig) and variation.kind in (Kind.G_TWO_PATH, Kind.TWO_PATH)
    if method == "formula" and not formula_ok:
        raise UsageError("closed forms exist only for 2path and g2path")
    if method in ("formula", "auto") and formula_ok:
        res = mft_formula(C, fg_table(C, args.threads))
        if res.conclusive or method == "formula":
            if res.conclusive:
                print(f"MFT {res.value} METHOD {res.method.value}", file=out)
            else:
                print(f"MFT [{res.lower},{res.upper}] METHOD {Method.INCONCLUSIVE.value}", file=out)
            if args.trace:
                for w in res.witnesses:
                    print(f"ARGMIN {w.i} {w.j}", file=out)
                for m, v in res.cross_checks.items():
                    print(f"CHECK {m.value} {v}", file=out)
            return
    res = mft_localmap(C, variation, args.max_nodes)
    print(f"MFT {res.value} METHOD localmap", file=out)
    if args.trace:
        if res.chain is not None:
            print(f"SAFE {res.value - 1} CHAIN {len(res.chain.configs)}", file=out)
            for D, link in zip(res.chain.configs, (None,) + res.chain.links):
                via = "" if link is None else f"  # via {link.v}"
                print(serialize(D) + via, file=out)
        print(f"UNSAFE {res.value} CLASS {len(res.unsafe_class)}", file=out)
        for D in res.unsafe_class:
            print(serialize(D), file=out)


def cmd_mft(args, out) -> int:
    for C in _load(args.file):
        _mft_one(args, C, out)
    return EXIT_OK


def cmd_cni(args, out) -> int:
    code = EXIT_OK
    for C in _load(args.file):
        C = _need_path(C, "cni")
        rep = cni_verdict(C, fg_table(C, args.threads))
        print("CNI SATISFIED" if rep.verdict else "CNI VIOLATED", file=out)
        for name, group in (("K", rep.k_set), ("I", rep.i_set), ("J", rep.j_set)):
            print(" ".join([name] + [str(w) for w in group]), file=out)
        for f in rep.failures:
            x0, x1 = f.witness
            print(f"FAIL {f.clause} {f.window} left={_cells(x0)} right={_cells(x1)}", file=out)
        if not rep.verdict:
            code = EXIT_NEGATIVE
    return code


def _cells(seq) -> str:
    return ",".join(f"({x},{y})" for x, y in seq)


def cmd_classify(args, out) -> int:
    for C in _load(args.file):
        print(hand_status(_need_path(C, "classify")), file=out)
    return EXIT_OK


def cmd_fgtable(args, out) -> int:
    for C in _load(args.file):
        out.write(fg_table(_need_path(C, "fgtable"), args.threads).to_tsv())
    return EXIT_OK


def cmd_equivclass(args, out) -> int:
    if args.t is None:
        raise UsageError("equivclass needs --t")
    for C in _load(args.file):
        variation = _variation(args, C)
        verdict = is_safe(C, args.t, variation, args.max_nodes)
        if verdict.safe:
            print(f"T {args.t} SAFE CHAIN {len(verdict.chain.configs)}", file=out)
            for D in verdict.chain.configs:
                print(serialize(D), file=out)
        else:
            print(f"T {args.t} UNSAFE CLASS {verdict.class_size}", file=out)
            for D in verdict.members:
                print(serialize(D), file=out)
    return EXIT_OK


def cmd_solution(args, out) -> int:
    if args.kind not in ("ref", "cc", "lm"):
        raise UsageError("solution --kind must be ref, cc or lm")
    C = _load(args.file)[0]
    variation = _variation(args, C)
    emit = args.emit or "spec"
    if args.kind == "cc" and variation.kind is Kind.TWO_REG:
        print("UNSUPPORTED consistency checking for 2reg", file=out)
        return EXIT_USAGE
    if args.kind == "ref":
        spec = build_reflection(_need_path(C, "reflection"))
        simulate = simulate_reflection
    elif args.kind == "cc":
        spec = build_cc(_need_path(C, "consistency checking"), variation, args.max_nodes)
        simulate = simulate_cc
    else:
        spec = build_lm(C, variation, budget=args.max_nodes)
        simulate = simulate_lm
    if emit == "spec":
        _emit_spec(args.kind, spec, out)
    elif emit == "simulate":
        targets = _load(args.on) if args.on else [C]
        for D in targets:
            if args.kind == "lm":
                print(f"{serialize(D)} {simulate(spec, D, args.max_nodes)}", file=out)
            else:
                print(f"{serialize(D)} {simulate(spec, D)}", file=out)
    elif emit == "bounds":
        _emit_solution_bounds(args.kind, spec, C, variation, args, out)
    else:
        raise UsageError("--emit must be spec, simulate or bounds")
    return EXIT_OK


def _emit_spec(kind, spec, out):
    if kind == "ref":
        domain = "finite" if spec.domain_finite else "infinite"
        print(f"REFLECTION i0={spec.i0} j0={spec.j0} TTILDE {spec.t_tilde} DOMAIN {domain} "
              f"STATES<= {spec.state_count_bound}", file=out)
    elif kind == "cc":
        print(f"CC T {spec.t} CLASS {len(spec.members)} AUTOMATA {len(spec.entries)} "
              f"SELECTED {spec.n} STATES {describe_big(spec.state_count)}", file=out)
        chosen = {(c.member, c.automaton.a, c.automaton.b) for cover in spec.covers for c in cover}
        for e in spec.entries:
            star = "*" if (e.member, e.automaton.a, e.automaton.b) in chosen else ""
            lo, hi = e.interval
            print(f"A1({e.automaton.a},{e.automaton.b},C{e.member})\t[{lo},{hi}]\t{star}".rstrip("\t"), file=out)
        for k, D in enumerate(spec.members):
            print(f"C{k} {serialize(D)}", file=out)
    else:
        print(f"LM T {spec.t} VARIATION {spec.variation}", file=out)


def _emit_solution_bounds(kind, spec, C, variation, args, out):
    if kind == "ref":
        print(f"STATES<= {spec.state_count_bound}", file=out)
    elif kind == "cc":
        print(f"STATES {describe_big(spec.state_count)}", file=out)
    else:
        bk = {Kind.TWO_REG: BoundKind.REG_LM, Kind.TWO_PATH: BoundKind.PATH_LM}.get(
            variation.kind, BoundKind.GPATH_LM)
        b = state_bounds(spec.t, bk)
        if b.lower is not None:
            print(f"LOWER {describe_big(b.lower)}", file=out)
        print(f"UPPER {describe_big(b.upper)}", file=out)
    mss = mss_upper(C, variation, args.max_nodes)
    print(f"MSS<= {describe_big(mss.value)} VIA {mss.source} T {mss.t}", file=out)


def _parse_kind(text: str):
    name, _, n = text.partition(":")
    try:
        kind = BoundKind(name)
    except ValueError as exc:
        choices = ", ".join(k.value for k in BoundKind)
        raise UsageError(f"unknown bound kind {name!r}; choose from {choices} (cc:N)") from exc
    if kind is BoundKind.CC:
        if not n.isdigit():
            raise UsageError("cc bounds are written cc:N with N the automaton count")
        return kind, int(n)
    if n:
        raise UsageError(f"{name} takes no count")
    return kind, None


def cmd_bounds(args, out) -> int:
    if args.t is None or args.kind is None:
        raise UsageError("bounds needs --t and --kind")
    kind, n = _parse_kind(args.kind)
    b = state_bounds(args.t, kind, n)
    factor = wrapper_factor(kind)
    if b.lower is not None:
        print(f"LOWER {describe_big(b.lower)}", file=out)
    print(f"UPPER {describe_big(b.upper)}", file=out)
    if b.lower is not None:
        print(f"SOLUTION_LOWER x{factor} {describe_big(factor * b.lower)}", file=out)
    print(f"SOLUTION_UPPER x{factor} {describe_big(factor * b.upper)}", file=out)
    return EXIT_OK


VERBS = {
    "validate": cmd_validate,
    "render": cmd_render,
    "mft": cmd_mft,
    "cni": cmd_cni,
    "classify": cmd_classify,
    "fgtable": cmd_fgtable,
    "equivclass": cmd_equivclass,
    "solution": cmd_solution,
    "bounds": cmd_bounds,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fssp", description="Minimum firing times for grid path and region configurations.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb in VERBS:
        s = sub.add_parser(verb)
        if verb != "bounds":
            s.add_argument("file", help="configuration file, or - for stdin")
        if verb in ("mft", "equivclass", "solution"):
            s.add_argument("--variation", choices=sorted(BY_NAME))
            s.add_argument("--max-nodes", type=int, default=DEFAULT_BUDGET)
        if verb in ("mft", "cni", "fgtable"):
            s.add_argument("--threads", type=int, default=1)
        if verb == "mft":
            s.add_argument("--method", choices=("auto", "localmap", "formula"), default="auto")
            s.add_argument("--trace", action="store_true")
        if verb in ("equivclass", "bounds"):
            s.add_argument("--t", type=int)
        if verb in ("solution", "bounds"):
            s.add_argument("--kind")
        if verb == "solution":
            s.add_argument("--on")
            s.add_argument("--emit", choices=("spec", "simulate", "bounds"))
    return p


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "threads", 1) < 1:
            raise UsageError("--threads must be at least 1")
        if getattr(args, "t", 0) is not None and getattr(args, "t", 0) < 0:
            raise UsageError("--t must be nonnegative")
        return VERBS[args.verb](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=err)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
