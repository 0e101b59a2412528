"""Command-line front end: ``rvtlm {cosim,perf,sweep,fuzz,decode,trace-replay}``.

Exit status: 0 on success, 1 on any mismatch or abnormal halt, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from ..coverify import CompareConfig
from ..core.pipeline import MUTATIONS
from ..isa.encoding import IllegalInstruction, decode, disasm
from ..stats import emit_report
from .configfile import build_config, load_config_file, parse_override
from .generator import GenConstraints, WORKLOADS, program_image, workload_words
from .loaders import LoadedProgram, LoadError, load_program
from .runner import ProgramSource, RunSpec, run_fuzz_campaign, run_perf_sweep, simulate
from .trace import TraceFormatError, replay_trace, write_trace


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="FILE", help="TOML file with a [core] table (and optional [run])")
    p.add_argument("--set", "-s", action="append", default=[], metavar="FIELD=VALUE",
                   help="override one CoreConfig field (repeatable; e.g. issue_width=2, predictor.kind='not_taken')")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-cycles", type=int, default=None)
    p.add_argument("--report", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("text", "json"), default="text")


def _program_args(p: argparse.ArgumentParser, required: bool = False) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--program", metavar="PATH", help="program file (.elf, .hex or .s)")
    g.add_argument("--gen-len", type=int, metavar="N", help="generate a random N-instruction program from --seed")
    g.add_argument("--workload", choices=sorted(WORKLOADS), help="built-in synthetic workload")
    p.add_argument("--program-format", choices=("elf", "hex", "asm"), help="override format detection")
    p.add_argument("--size", type=int, default=1000, help="workload size (ops, or iterations for 'loop')")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rvtlm", description="Transaction-level RV64IM core model with co-simulation.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("cosim", help="run the core model in lock-step with the golden interpreter")
    _common(p)
    _program_args(p)
    p.add_argument("--trace", metavar="PATH", help="write the commit trace")
    p.add_argument("--mutation", action="append", default=[], choices=sorted(MUTATIONS),
                   help="enable a seeded core bug (for checking the checker)")
    p.add_argument("--keep-going", action="store_true", help="do not halt on the first mismatch")

    p = sub.add_parser("perf", help="timing-only run; report KPIs")
    _common(p)
    _program_args(p)
    p.add_argument("--trace", metavar="PATH")

    p = sub.add_parser("sweep", help="one perf run per value of a CoreConfig field")
    _common(p)
    _program_args(p)
    p.add_argument("--axis", required=True)
    p.add_argument("--values", required=True, help="comma-separated values")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("fuzz", help="random-program co-simulation campaign")
    _common(p)
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--len", type=int, default=1000, dest="length")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--fixed-config", action="store_true",
                   help="use --config/--set for every run instead of a random config per seed")
    p.add_argument("--mutation", action="append", default=[], choices=sorted(MUTATIONS))

    p = sub.add_parser("decode", help="disassemble instruction words or a program file")
    p.add_argument("words", nargs="*", help="hex words, e.g. 0x00500093")
    p.add_argument("--file", metavar="PATH", help="disassemble a .hex/.elf/.s program")
    p.add_argument("--count", type=int, default=64, help="words to show from --file")

    p = sub.add_parser("trace-replay", help="validate a commit trace against the golden interpreter")
    _program_args(p, required=True)
    p.add_argument("--trace", required=True, metavar="PATH")
    p.add_argument("--reset-pc", type=lambda s: int(s, 0), default=None)
    return ap


def _config(args):
    file_core, file_run = ({}, {})
    if args.config:
        file_core, file_run = load_config_file(args.config)
    overrides = [parse_override(s) for s in args.set]
    cfg = build_config(file_core, overrides)
    seed = args.seed if args.seed is not None else file_run.get("seed", 0)
    max_cycles = args.max_cycles if args.max_cycles is not None else file_run.get("max_cycles", 1_000_000)
    return cfg, seed, max_cycles, file_run


def _program(args, cfg, seed):
    if getattr(args, "program", None):
        return load_program(args.program, args.program_format)
    if getattr(args, "workload", None):
        words = workload_words(args.workload, args.size, cfg.reset_pc, cfg.tohost_addr)
        return LoadedProgram(program_image(words, cfg.reset_pc), cfg.reset_pc)
    if getattr(args, "gen_len", None):
        return ProgramSource(constraints=GenConstraints(length=args.gen_len))
    raise UsageError("one of --program, --gen-len or --workload is required")


def _emit(args, text: str) -> None:
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_run(args, mode: str) -> int:
    cfg, seed, max_cycles, _ = _config(args)
    prog = _program(args, cfg, seed)
    spec = RunSpec(program=prog, config=cfg, seed=seed, max_cycles=max_cycles, mode=mode,
                   compare=CompareConfig(halt_on_first=not getattr(args, "keep_going", False)),
                   mutations=tuple(getattr(args, "mutation", ())), trace=bool(args.trace))
    r = simulate(spec)
    if args.trace:
        write_trace(args.trace, r.trace)
    _emit(args, emit_report(r.report, args.format) + ("" if args.format == "json" else "\n"))
    if mode == "perf":
        return 0 if r.halt.passed else 1
    return r.exit_status


def _cmd_sweep(args) -> int:
    cfg, seed, max_cycles, _ = _config(args)
    prog = _program(args, cfg, seed)
    values = [parse_override(f"{args.axis}={v}")[1] for v in args.values.split(",") if v.strip()]
    base = RunSpec(program=prog, config=cfg, seed=seed, max_cycles=max_cycles, mode="perf")
    table = run_perf_sweep(base, args.axis, values, workers=args.workers)
    ok = all(r.halt_reason["kind"] == "TohostWrite" and r.halt_reason.get("value") == 1 for _, r in table)
    if args.format == "json":
        text = json.dumps({"axis": args.axis, "rows": [{"value": v, "report": r.to_json()} for v, r in table]},
                          sort_keys=True, indent=2) + "\n"
    else:
        lines = [f"{args.axis:>24}  {'cycles':>10}  {'retired':>10}  {'ipc':>8}  halt"]
        for v, r in table:
            lines.append(f"{v!s:>24}  {r.cycles:>10}  {r.retired:>10}  {float(r.ipc):>8.4f}  {r.halt_reason['kind']}")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0 if ok else 1


def _cmd_fuzz(args) -> int:
    cfg, seed, max_cycles, _ = _config(args)
    if args.runs < 1 or args.length < 7:
        raise UsageError("--runs must be >= 1 and --len >= 7")
    res = run_fuzz_campaign(range(seed, seed + args.runs), args.length,
                            config=cfg if args.fixed_config else None, mutations=args.mutation,
                            workers=args.workers, max_cycles=max_cycles)
    summary = res.summary()
    if args.format == "json":
        text = json.dumps(summary, sort_keys=True, indent=2) + "\n"
    else:
        lines = [f"runs        {summary['runs']}",
                 f"passed      {summary['passed']}",
                 f"failed      {summary['failed']}",
                 f"mismatches  {summary['mismatches']}",
                 f"watchdog    {summary['watchdog_halts']}",
                 f"coverage    {summary['coverage']['percent']:.1f}%"]
        lines += [f"  {k:<32} {v}" for k, v in summary["coverage"]["bins"].items()]
        for r in res.failed[:20]:
            first = r["mismatches"][0]["text"] if r["mismatches"] else json.dumps(r["halt"])
            lines.append(f"FAIL seed={r['seed']}: {first}")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0 if res.passed else 1


def _cmd_decode(args) -> int:
    if not args.words and not args.file:
        raise UsageError("give instruction words or --file")
    out = []
    status = 0
    items = []
    if args.file:
        prog = load_program(args.file)
        pc = prog.entry if prog.entry is not None else 0x8000_0000
        items = [(pc + 4 * i, prog.mem.read(pc + 4 * i, 4)) for i in range(args.count)]
    for w in args.words:
        try:
            items.append((0, int(w, 16)))
        except ValueError:
            raise UsageError(f"not a hex word: {w!r}") from None
    for pc, word in items:
        try:
            text = disasm(decode(word, pc))
        except IllegalInstruction:
            text = "<illegal>"
            status = 1 if not args.file else status
        out.append(f"{pc:016x}  {word:08x}  {text}" if args.file else f"{word:08x}  {text}")
    sys.stdout.write("\n".join(out) + "\n")
    return status


def _cmd_replay(args) -> int:
    prog = load_program(args.program, args.program_format)
    entry = args.reset_pc if args.reset_pc is not None else (prog.entry if prog.entry is not None else 0x8000_0000)
    with open(args.trace) as f:
        res = replay_trace(f.read().splitlines(), prog.mem, entry)
    for e in res.errors:
        print(e)
    print(f"replayed {res.steps} commits: {'OK' if res.ok else 'DIVERGED'}")
    return 0 if res.ok else 1


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.cmd == "cosim":
            return _cmd_run(args, "both")
        if args.cmd == "perf":
            return _cmd_run(args, "perf")
        if args.cmd == "sweep":
            return _cmd_sweep(args)
        if args.cmd == "fuzz":
            return _cmd_fuzz(args)
        if args.cmd == "decode":
            return _cmd_decode(args)
        return _cmd_replay(args)
    except (UsageError, LoadError, TraceFormatError, ValueError, OSError) as e:
        print(f"rvtlm {args.cmd}: error: {e}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
