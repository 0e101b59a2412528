"""Build and run simulation instances: single co-simulation runs, sweeps and fuzz campaigns.

Each run owns a fresh kernel, core, golden state and memory images, so runs
can be farmed out to worker processes and their results merged afterwards.
"""

from __future__ import annotations

import dataclasses
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..core.config import CoreConfig, random_config
from ..core.pipeline import Core
from ..coverify import Comparer, CompareConfig, MismatchKind, MismatchReport
from ..isa.golden import ArchState
from ..isa.memory import MemoryImage
from ..kernel import DEFAULT_WATCHDOG, HaltKind, HaltReason, Kernel
from ..stats import KpiReport, PerfCounters, merge_coverage
from .generator import GenConstraints, generate_program, program_image
from .loaders import LoadedProgram, load_program

MODES = ("cosim", "perf", "both")


@dataclass(frozen=True)
class ProgramSource:
    """Where a run's program comes from: a file (elf/hex/asm) or the random generator."""

    format: str = "inline-generated"
    path: str | None = None
    constraints: GenConstraints | None = None

    def __post_init__(self):
        if self.format not in ("elf", "hex", "asm", "inline-generated"):
            raise ValueError(f"unknown program format {self.format!r}")
        if self.format != "inline-generated" and self.path is None:
            raise ValueError(f"{self.format} program needs a path")


@dataclass(frozen=True)
class RunSpec:
    program: ProgramSource | LoadedProgram = field(default_factory=ProgramSource)
    config: CoreConfig = field(default_factory=CoreConfig)
    seed: int = 0
    max_cycles: int = 1_000_000
    mode: str = "both"
    compare: CompareConfig = field(default_factory=CompareConfig)
    watchdog: int = DEFAULT_WATCHDOG
    mutations: tuple = ()
    trace: bool = False

    def __post_init__(self):
        if self.max_cycles <= 0:
            raise ValueError("max_cycles must be > 0")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if not 0 <= self.seed < (1 << 64):
            raise ValueError("seed must be a 64-bit unsigned integer")

    def replace(self, **changes) -> "RunSpec":
        return dataclasses.replace(self, **changes)


@dataclass
class RunResult:
    report: KpiReport
    mismatches: list
    halt: HaltReason
    trace: list | None = None

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.halt.passed

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1


def resolve_program(spec: RunSpec) -> LoadedProgram:
    src = spec.program
    if isinstance(src, LoadedProgram):
        return src
    if src.format == "inline-generated":
        c = src.constraints or GenConstraints()
        c = dataclasses.replace(c, base_pc=spec.config.reset_pc, tohost_addr=spec.config.tohost_addr)
        return LoadedProgram(program_image(generate_program(c, spec.seed), c.base_pc), c.base_pc)
    return load_program(src.path, src.format)


def simulate(spec: RunSpec, program: LoadedProgram | None = None) -> RunResult:
    """One complete run; the program's ``tohost`` symbol and entry override the config when present."""
    prog = program or resolve_program(spec)
    cfg = spec.config
    overrides = {}
    if prog.tohost is not None and prog.tohost != cfg.tohost_addr:
        overrides["tohost_addr"] = prog.tohost
    if prog.entry is not None and prog.entry != cfg.reset_pc:
        overrides["reset_pc"] = prog.entry
    if overrides:
        cfg = cfg.replace(**overrides)

    vmem = prog.mem.copy()
    counters = PerfCounters()
    core = Core(cfg, vmem, counters, spec.mutations)
    kernel = Kernel()
    kernel.register(core)

    comparer = None
    gmem: MemoryImage | None = None
    if spec.mode != "perf":
        gmem = prog.mem.copy()
        comparer = Comparer(ArchState(pc=cfg.reset_pc), gmem, spec.compare, cfg.tohost_addr)
        halt_on_first = spec.compare.halt_on_first

        def check(records, core, kernel):
            if comparer.on_commit_group(records, core.arch_regs) and halt_on_first:
                kernel.halt(HaltReason(HaltKind.MISMATCH, detail=str(comparer.reports[0])))

        core.listeners.append(check)

    trace = None
    if spec.trace:
        trace = []

        def record(records, core, kernel):
            trace.extend(r.trace_line() for r in records)

        core.listeners.append(record)

    core.keep_records = False
    halt, cycles = kernel.run_until_halt(spec.max_cycles, spec.watchdog)

    mismatches: list[MismatchReport] = []
    if comparer is not None:
        if halt.kind is not HaltKind.MISMATCH:
            comparer.final_check(core.retired, halt, cycles)
            if not comparer.reports and not vmem.same_contents(gmem):
                addr, exp, act = gmem.diff(vmem, 1)[0]
                comparer._report(MismatchKind.MEMORY_IMAGE, exp, act, addr, cycles)
        mismatches = list(comparer.reports)

    report = counters.report(
        halt_reason=halt.to_json(),
        config_echo=cfg.to_dict(),
        seed=spec.seed,
        mismatches=[m.to_json() for m in mismatches],
    )
    return RunResult(report, mismatches, halt, trace)


def run_cosim(spec: RunSpec):
    """(KpiReport, mismatches, HaltReason) for one run."""
    r = simulate(spec)
    return r.report, r.mismatches, r.halt


def _run_one(spec: RunSpec) -> RunResult:
    return simulate(spec)


def _pool_map(fn, items, workers: int):
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def run_perf_sweep(base: RunSpec, axis: str, values, workers: int = 1) -> list[tuple]:
    """One run per axis value (same program and seed); returns [(value, KpiReport)] sorted by value."""
    fields = {f.name for f in dataclasses.fields(CoreConfig)}
    if axis not in fields or axis == "predictor":
        raise ValueError(f"sweep axis must name a scalar CoreConfig field, got {axis!r}")
    values = sorted(values)
    specs = [base.replace(config=base.config.replace(**{axis: v})) for v in values]  # validates each value
    if not isinstance(base.program, LoadedProgram):
        prog = resolve_program(base)
        specs = [s.replace(program=prog) for s in specs]
    results = _pool_map(_run_one, specs, workers)
    return [(v, r.report) for v, r in zip(values, results)]


@dataclass
class CampaignResult:
    runs: list          # one summary dict per seed, in seed order
    coverage: dict
    mismatches: int

    @property
    def failed(self) -> list:
        return [r for r in self.runs if r["status"] != "pass"]

    @property
    def passed(self) -> bool:
        return not self.failed

    def summary(self) -> dict:
        return {
            "runs": len(self.runs),
            "passed": len(self.runs) - len(self.failed),
            "failed": len(self.failed),
            "mismatches": self.mismatches,
            "watchdog_halts": sum(1 for r in self.runs if r["halt"]["kind"] == HaltKind.WATCHDOG.value),
            "coverage": {"bins": self.coverage,
                         "percent": round(100.0 * sum(1 for v in self.coverage.values() if v) / len(self.coverage), 3)},
            "per_seed": self.runs,
        }


def fuzz_spec(seed: int, length: int = 1000, config: CoreConfig | None = None, mutations=(),
              max_cycles: int = 1_000_000, constraints: GenConstraints | None = None) -> RunSpec:
    """Campaign run ``seed``: a generated program and (unless fixed) a random configuration drawn from the seed."""
    cfg = config or random_config(random.Random(seed ^ 0x5EED_C0F1))
    c = dataclasses.replace(constraints or GenConstraints(), length=length)
    return RunSpec(program=ProgramSource(constraints=c), config=cfg, seed=seed,
                   max_cycles=max_cycles, mutations=tuple(mutations))


def _fuzz_one(spec: RunSpec) -> dict:
    r = simulate(spec)
    return {
        "seed": spec.seed,
        "status": "pass" if r.passed else "fail",
        "halt": r.halt.to_json(),
        "retired": r.report.retired,
        "cycles": r.report.cycles,
        "ipc": round(float(r.report.ipc), 6),
        "mismatches": [m.to_json() for m in r.mismatches[:3]],
        "n_mismatches": len(r.mismatches),
        "coverage": r.report.coverage,
    }


def run_fuzz_campaign(seeds, length: int = 1000, config: CoreConfig | None = None, mutations=(),
                      workers: int = 1, max_cycles: int = 1_000_000,
                      constraints: GenConstraints | None = None) -> CampaignResult:
    specs = [fuzz_spec(s, length, config, mutations, max_cycles, constraints) for s in seeds]
    runs = _pool_map(_fuzz_one, specs, workers)
    cov = merge_coverage(r.pop("coverage") for r in runs)
    return CampaignResult(runs, dict(cov.bins), sum(r["n_mismatches"] for r in runs))
