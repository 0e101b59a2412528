"""Lock-step comparison of the core model against the golden interpreter.

The golden model is stepped once per instruction the core commits, and the
architectural effects of both are compared immediately. Reads of the cycle
CSRs are timing-dependent, so the golden side adopts the core's value for
those (the usual treatment of non-deterministic CSRs in co-simulation).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .isa.encoding import CSR_NAMES, Kind, StepFault
from .isa.golden import ArchState, golden_step
from .isa.memory import MemoryImage
from .kernel import HaltKind, HaltReason

_CYCLE_CSRS = frozenset(k for k, v in CSR_NAMES.items() if v in ("mcycle", "cycle"))


class MismatchKind(str, Enum):
    PC = "PC"
    NEXT_PC = "NextPC"
    GPR = "Gpr"
    MEM_WRITE = "MemWrite"
    FAULT_DISAGREEMENT = "FaultDisagreement"
    INSTR_WORD = "InstrWord"
    RETIRED_COUNT = "RetiredCount"
    HALT = "Halt"
    MEMORY_IMAGE = "MemoryImage"


@dataclass(frozen=True)
class MismatchReport:
    kind: MismatchKind
    expected: object
    actual: object
    instr_index: int
    pc: int
    cycle: int
    index: int | None = None   # register number for Gpr mismatches

    def __str__(self) -> str:
        what = self.kind.value + (f"(x{self.index})" if self.index is not None else "")
        return (f"MISMATCH {what} at instr #{self.instr_index} pc=0x{self.pc:x} cycle={self.cycle}: "
                f"expected {_fmt(self.expected)}, got {_fmt(self.actual)}")

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "index": self.index,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "instr_index": self.instr_index,
            "pc": self.pc,
            "cycle": self.cycle,
            "text": str(self),
        }


def _fmt(v) -> str:
    if isinstance(v, int):
        return f"0x{v:x}"
    if isinstance(v, tuple):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    return str(v)


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


@dataclass(frozen=True)
class CompareConfig:
    halt_on_first: bool = True
    max_reports: int = 100

    def __post_init__(self):
        if self.max_reports < 1:
            raise ValueError("max_reports must be >= 1")


class Comparer:
    """Scoreboard holding the golden state; fed the core's commit records in order."""

    def __init__(self, golden: ArchState, mem: MemoryImage, config: CompareConfig = CompareConfig(),
                 tohost_addr: int | None = None):
        self.golden = golden
        self.mem = mem
        self.config = config
        self.tohost_addr = tohost_addr
        self.reports: list[MismatchReport] = []
        self.committed = 0
        self.golden_tohost: int | None = None
        self.dropped = 0
        # the core's register file as implied by its commit records so far
        self.shadow = list(golden.gpr)

    @property
    def failed(self) -> bool:
        return bool(self.reports) or self.dropped > 0

    def _report(self, kind, expected, actual, pc, cycle, index=None) -> MismatchReport:
        r = MismatchReport(kind, expected, actual, self.committed, pc, cycle, index)
        if len(self.reports) < self.config.max_reports:
            self.reports.append(r)
        else:
            self.dropped += 1
        return r

    def on_commit(self, rec) -> MismatchReport | None:
        """Step the golden model once and compare its effect with one commit record."""
        g = self.golden
        first = None
        try:
            gc = golden_step(g, self.mem)
        except StepFault as f:
            first = self._report(MismatchKind.FAULT_DISAGREEMENT, f"fault: {f.reason}", "commit", rec.pc, rec.cycle)
            self._resync(rec)
            self.committed += 1
            return first

        if rec.instr.kind is Kind.SYSTEM and rec.instr.imm in _CYCLE_CSRS and gc.rd is not None and rec.rd is not None:
            g.gpr[gc.rd[0]] = rec.rd[1]
            gc_rd = rec.rd
        else:
            gc_rd = gc.rd

        checks = []
        if gc.pc != rec.pc:
            checks.append((MismatchKind.PC, gc.pc, rec.pc, None))
        if gc.raw != rec.raw:
            checks.append((MismatchKind.INSTR_WORD, gc.raw, rec.raw, None))
        if gc_rd != rec.rd:
            if gc_rd is not None and rec.rd is not None and gc_rd[0] == rec.rd[0]:
                checks.append((MismatchKind.GPR, gc_rd[1], rec.rd[1], gc_rd[0]))
            else:
                checks.append((MismatchKind.GPR, gc_rd, rec.rd, (gc_rd or rec.rd)[0]))
        if gc.store != rec.store:
            checks.append((MismatchKind.MEM_WRITE, gc.store, rec.store, None))
        if gc.next_pc != rec.next_pc:
            checks.append((MismatchKind.NEXT_PC, gc.next_pc, rec.next_pc, None))
        for kind, exp, act, idx in checks:
            r = self._report(kind, exp, act, rec.pc, rec.cycle, idx)
            first = first or r
        if gc.store is not None and gc.store[0] == self.tohost_addr:
            self.golden_tohost = gc.store[2]
        if first is not None and not self.config.halt_on_first:
            self._resync(rec)
        self.committed += 1
        return first

    def compare_registers(self, regs, pc: int, cycle: int, resync_golden: bool = True) -> MismatchReport | None:
        """Full 32-register comparison of ``regs`` against the golden file."""
        gpr = self.golden.gpr
        if gpr == regs:
            return None
        first = None
        for i in range(32):
            if gpr[i] != regs[i]:
                r = self._report(MismatchKind.GPR, gpr[i], regs[i], pc, cycle, i)
                first = first or r
                if resync_golden and not self.config.halt_on_first:
                    gpr[i] = regs[i]
        return first

    def on_commit_group(self, records, regs) -> list[MismatchReport]:
        """Compare one cycle's commits in order, then the core's register file itself.

        After every instruction the full golden register file is compared with
        the core's register file as implied by the commit records; at the end of
        the group that implied file must equal ``regs``, the core's actual one.
        """
        found = []
        shadow = self.shadow
        gpr = self.golden.gpr
        for rec in records:
            r = self.on_commit(rec)
            if r is not None:
                found.append(r)
                if self.config.halt_on_first:
                    return found
            if rec.rd is not None:
                shadow[rec.rd[0]] = rec.rd[1]
            if shadow != gpr:
                r = self.compare_registers(shadow, rec.pc, rec.cycle)
                if r is not None:
                    found.append(r)
                    if self.config.halt_on_first:
                        return found
        if shadow != regs:
            last = records[-1]
            for i in range(32):
                if shadow[i] != regs[i]:
                    found.append(self._report(MismatchKind.GPR, shadow[i], regs[i], last.pc, last.cycle, i))
            self.shadow = list(regs)
        return found

    def _resync(self, rec) -> None:
        """Force the golden state onto the core's committed effect so later checks stay meaningful."""
        g = self.golden
        if rec.rd is not None:
            g.gpr[rec.rd[0]] = rec.rd[1]
        if rec.store is not None:
            self.mem.write(*rec.store)
        g.pc = rec.next_pc

    def final_check(self, total_committed: int, halt: HaltReason, cycle: int = 0) -> MismatchReport | None:
        """Retired-count consistency and agreement on how the run ended."""
        g = self.golden
        first = None
        if total_committed != g.csr_minstret:
            first = self._report(MismatchKind.RETIRED_COUNT, g.csr_minstret, total_committed, g.pc, cycle)
        kind = halt.kind
        if kind is HaltKind.TOHOST_WRITE:
            if self.golden_tohost != halt.value:
                r = self._report(MismatchKind.HALT, f"TohostWrite({self.golden_tohost})", str(halt), g.pc, cycle)
                first = first or r
        elif kind is HaltKind.ILLEGAL_AT_COMMIT:
            try:
                golden_step(g, self.mem)
            except StepFault as f:
                if f.pc != halt.value:
                    r = self._report(MismatchKind.FAULT_DISAGREEMENT, f.pc, halt.value, g.pc, cycle)
                    first = first or r
            else:
                r = self._report(MismatchKind.FAULT_DISAGREEMENT, "no fault", str(halt), halt.value or 0, cycle)
                first = first or r
        elif kind is not HaltKind.MISMATCH:
            r = self._report(MismatchKind.HALT, "TohostWrite", f"{halt} after {total_committed} commits",
                             g.pc, cycle)
            first = first or r
        return first


def final_check(comparer: Comparer, total_committed: int, halt: HaltReason):
    return comparer.final_check(total_committed, halt)
