"""Commit-trace parsing and replay against the golden interpreter.

A trace has one tab-separated line per retired instruction::

    cycle  pc  raw  disasm  rd-write|-  mem-write|-  next_pc

with ``rd-write`` as ``xN=0x<value>`` and ``mem-write`` as ``memW 0x<addr>=0x<value>``.
Replay re-executes the program on a fresh golden state and checks every line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..isa.encoding import CSR_NAMES, Kind, StepFault
from ..isa.golden import ArchState, decode_cached, golden_step
from ..isa.memory import MemoryImage

_RD = re.compile(r"^x(\d+)=0x([0-9a-f]+)$")
_ST = re.compile(r"^mem([1248]) 0x([0-9a-f]+)=0x([0-9a-f]+)$")
_CYCLE_CSRS = frozenset(k for k, v in CSR_NAMES.items() if v in ("mcycle", "cycle"))


class TraceFormatError(ValueError):
    pass


@dataclass(frozen=True)
class TraceEntry:
    cycle: int
    pc: int
    raw: int
    disasm: str
    rd: tuple | None
    store: tuple | None
    next_pc: int


def parse_trace_line(line: str, lineno: int = 0) -> TraceEntry:
    parts = line.rstrip("\n").split("\t")
    if len(parts) != 7:
        raise TraceFormatError(f"line {lineno}: expected 7 tab-separated fields, got {len(parts)}")
    try:
        cycle, pc, raw = int(parts[0]), int(parts[1], 16), int(parts[2], 16)
        next_pc = int(parts[6], 16)
    except ValueError:
        raise TraceFormatError(f"line {lineno}: bad numeric field") from None
    rd = st = None
    if parts[4] != "-":
        m = _RD.match(parts[4])
        if not m:
            raise TraceFormatError(f"line {lineno}: bad register field {parts[4]!r}")
        rd = (int(m.group(1)), int(m.group(2), 16))
    if parts[5] != "-":
        m = _ST.match(parts[5])
        if not m:
            raise TraceFormatError(f"line {lineno}: bad memory field {parts[5]!r}")
        st = (int(m.group(2), 16), int(m.group(1)), int(m.group(3), 16))
    return TraceEntry(cycle, pc, raw, parts[3], rd, st, next_pc)


@dataclass
class ReplayResult:
    state: ArchState
    mem: MemoryImage
    steps: int
    errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors


def replay_trace(lines, mem: MemoryImage, entry: int, max_errors: int = 20) -> ReplayResult:
    """Step a fresh golden model once per trace line and report every disagreement."""
    state = ArchState(pc=entry)
    mem = mem.copy()
    errors = []
    n = 0
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        e = parse_trace_line(line, lineno)
        n += 1
        try:
            g = golden_step(state, mem)
        except StepFault as f:
            errors.append(f"line {lineno}: golden faults ({f.reason}) at pc 0x{f.pc:x}")
            break
        g_rd = g.rd
        instr = decode_cached(g.raw, g.pc)
        if instr.kind is Kind.SYSTEM and instr.imm in _CYCLE_CSRS and g_rd is not None and e.rd is not None:
            state.gpr[g_rd[0]] = e.rd[1]
            g_rd = e.rd
        for what, exp, act in (("pc", g.pc, e.pc), ("raw", g.raw, e.raw), ("rd", g_rd, e.rd),
                               ("store", g.store, e.store), ("next_pc", g.next_pc, e.next_pc)):
            if exp != act:
                errors.append(f"line {lineno}: {what} expected {exp!r}, trace has {act!r}")
        if len(errors) >= max_errors:
            break
    return ReplayResult(state, mem, n, errors)


def write_trace(path, lines) -> None:
    with open(path, "w") as f:
        for line in lines:
            f.write(line + "\n")
