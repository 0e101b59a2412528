"""Performance counters, IPC, stall attribution and functional-coverage bins."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

STALL_REASONS = ("FrontendCreditStall", "RobFull", "LsqFull", "LoadOrderingStall", "FuBusy", "FetchStarved")

CHANNELS = ("fe_be", "be_lsu")

COVERAGE_BINS = (
    "dual_issue_cycle",
    "full_width_issue_cycle",
    "rob_full_event",
    *(f"credit_exhausted[{ch}]" for ch in CHANNELS),
    "forwarding_used",
    "load_blocked_by_store",
    "mispredict_flush",
    "store_to_load_adjacent",
    "divide_in_flight_with_branch",
)


class UndefinedKpiError(ValueError):
    pass


class UnknownBinError(KeyError):
    pass


def compute_ipc(retired, cycles) -> Fraction:
    """Retired instructions per execution cycle, as an exact ratio."""
    if cycles <= 0:
        raise UndefinedKpiError("IPC is undefined for zero execution cycles")
    return Fraction(retired) / Fraction(cycles)


class CoverageBinRegistry:
    __slots__ = ("bins",)

    def __init__(self, names=COVERAGE_BINS):
        self.bins = dict.fromkeys(names, 0)

    def record(self, name: str, n: int = 1) -> None:
        if name not in self.bins:
            raise UnknownBinError(name)
        self.bins[name] += n

    def merge(self, other: "CoverageBinRegistry | dict") -> None:
        src = other.bins if isinstance(other, CoverageBinRegistry) else other
        for k, v in src.items():
            self.record(k, v)

    @property
    def percent(self) -> float:
        return 100.0 * sum(1 for v in self.bins.values() if v > 0) / len(self.bins)

    def unhit(self) -> list[str]:
        return [k for k, v in self.bins.items() if v == 0]


def record_event(reg: CoverageBinRegistry, name: str) -> None:
    reg.record(name)


class PerfCounters:
    """Mutable per-run counters written by the core model."""

    def __init__(self):
        self.cycles = 0
        self.retired = 0
        self.stalls = dict.fromkeys(STALL_REASONS, 0)
        self.branches = 0
        self.mispredicts = 0
        self.coverage = CoverageBinRegistry()

    def report(self, **meta) -> "KpiReport":
        return KpiReport(
            cycles=self.cycles,
            retired=self.retired,
            ipc=compute_ipc(self.retired, self.cycles) if self.cycles else Fraction(0),
            stalls=dict(self.stalls),
            branch={"predicted": self.branches, "mispredicted": self.mispredicts},
            coverage=dict(self.coverage.bins),
            **meta,
        )


@dataclass
class KpiReport:
    cycles: int
    retired: int
    ipc: Fraction
    stalls: dict
    branch: dict
    coverage: dict
    halt_reason: dict | None = None
    config_echo: dict | None = None
    seed: int | None = None
    mismatches: list = field(default_factory=list)

    @property
    def coverage_percent(self) -> float:
        return 100.0 * sum(1 for v in self.coverage.values() if v > 0) / len(self.coverage)

    def to_json(self) -> dict:
        return {
            "cycles": self.cycles,
            "retired": self.retired,
            "ipc": round(float(self.ipc), 6),
            "stalls": self.stalls,
            "branch": self.branch,
            "coverage": {"bins": self.coverage, "percent": round(self.coverage_percent, 3)},
            "halt_reason": self.halt_reason,
            "config_echo": self.config_echo,
            "seed": self.seed,
            "mismatches": self.mismatches,
        }


def emit_report(kpis: KpiReport, format: str = "text") -> str:
    if format == "json":
        return json.dumps(kpis.to_json(), sort_keys=True, indent=2)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = [
        f"cycles      {kpis.cycles}",
        f"retired     {kpis.retired}",
        f"ipc         {float(kpis.ipc):.4f}",
    ]
    if kpis.halt_reason is not None:
        lines.append(f"halt        {kpis.halt_reason['kind']}"
                     + (f"({kpis.halt_reason['value']})" if "value" in kpis.halt_reason else ""))
    b = kpis.branch
    lines.append(f"branches    {b['predicted']} ({b['mispredicted']} mispredicted)")
    lines.append("stalls:")
    for k in STALL_REASONS:
        lines.append(f"  {k:<20} {kpis.stalls.get(k, 0)}")
    lines.append(f"coverage    {kpis.coverage_percent:.1f}%")
    for k, v in kpis.coverage.items():
        lines.append(f"  {k:<32} {v}")
    if kpis.mismatches:
        lines.append(f"mismatches  {len(kpis.mismatches)}")
        for m in kpis.mismatches:
            lines.append("  " + m["text"])
    return "\n".join(lines) + "\n"


def merge_coverage(reports) -> CoverageBinRegistry:
    """Campaign-level fold: bin-wise sum of per-run hit counts."""
    reg = CoverageBinRegistry()
    for r in reports:
        reg.merge(r.coverage if isinstance(r, KpiReport) else r)
    return reg
