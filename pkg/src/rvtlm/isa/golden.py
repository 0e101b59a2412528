"""Golden reference interpreter: one architectural instruction per step."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .encoding import CSR_NAMES, DecodedInstr, Kind, StepFault, decode
from .memory import MemoryImage
from .semantics import BINARY, BRANCH, M64, extend_load

decode_cached = functools.lru_cache(maxsize=1 << 16)(decode)


@dataclass
class ArchState:
    pc: int = 0
    gpr: list = field(default_factory=lambda: [0] * 32)
    csr_mcycle: int = 0
    csr_minstret: int = 0

    def read_csr(self, csr: int) -> int:
        name = CSR_NAMES[csr]
        if name in ("mcycle", "cycle"):
            return self.csr_mcycle
        return self.csr_minstret


@dataclass(frozen=True, slots=True)
class GoldenCommit:
    pc: int
    raw: int
    next_pc: int
    rd: tuple | None = None      # (index, value)
    store: tuple | None = None   # (addr, width, value)


def execute(instr: DecodedInstr, a: int, b: int, state: ArchState | None = None) -> tuple[int | None, int]:
    """Result and next pc of a non-memory instruction given its operand values.

    Raises StepFault for a control transfer to a misaligned target.
    """
    pc = instr.pc
    kind = instr.kind
    op = instr.op
    if kind is Kind.BRANCH:
        if BRANCH[op](a, b):
            target = (pc + instr.imm) & M64
            if target & 3:
                raise StepFault(pc, "misaligned branch target", instr.raw)
            return None, target
        return None, (pc + 4) & M64
    if kind is Kind.JAL or kind is Kind.JALR:
        if kind is Kind.JAL:
            target = (pc + instr.imm) & M64
        else:
            target = (a + instr.imm) & M64 & ~1
        if target & 3:
            raise StepFault(pc, "misaligned jump target", instr.raw)
        return (pc + 4) & M64, target
    if kind is Kind.SYSTEM:
        return state.read_csr(instr.imm), (pc + 4) & M64
    if op == "lui":
        return instr.imm & M64, (pc + 4) & M64
    if op == "auipc":
        return (pc + instr.imm) & M64, (pc + 4) & M64
    if op == "fence":
        return None, (pc + 4) & M64
    return BINARY[op](a, b if instr.uses_rs2 else instr.imm & M64), (pc + 4) & M64


def golden_step(state: ArchState, mem: MemoryImage) -> GoldenCommit:
    """Apply exactly one instruction to ``state`` and ``mem``.

    Raises StepFault (state untouched) on an illegal word, misaligned pc,
    misaligned load/store or misaligned control-transfer target.
    """
    pc = state.pc
    if pc & 3:
        raise StepFault(pc, "misaligned pc")
    raw = mem.read(pc, 4)
    instr = decode_cached(raw, pc)
    gpr = state.gpr
    a = gpr[instr.rs1]
    b = gpr[instr.rs2]
    kind = instr.kind
    store = None
    if kind is Kind.LOAD:
        addr = (a + instr.imm) & M64
        width = instr.width
        if addr & (width - 1):
            raise StepFault(pc, "misaligned load", raw)
        result = extend_load(instr.op, mem.read(addr, width))
        next_pc = (pc + 4) & M64
    elif kind is Kind.STORE:
        addr = (a + instr.imm) & M64
        width = instr.width
        if addr & (width - 1):
            raise StepFault(pc, "misaligned store", raw)
        value = b & ((1 << (8 * width)) - 1)
        mem.write(addr, width, value)
        store = (addr, width, value)
        result = None
        next_pc = (pc + 4) & M64
    else:
        result, next_pc = execute(instr, a, b, state)
    rd = None
    if result is not None and instr.rd != 0:
        gpr[instr.rd] = result
        rd = (instr.rd, result)
    state.pc = next_pc
    state.csr_minstret += 1
    state.csr_mcycle += 1
    return GoldenCommit(pc, raw, next_pc, rd, store)


def run_golden(state: ArchState, mem: MemoryImage, tohost_addr: int, max_steps: int) -> tuple[str, int | None, int]:
    """Run until a store hits ``tohost_addr``, a fault, or ``max_steps``.

    Returns (outcome, value, steps) where outcome is "tohost", "fault" or "max_steps".
    """
    for n in range(max_steps):
        try:
            c = golden_step(state, mem)
        except StepFault:
            return "fault", None, n
        if c.store is not None and c.store[0] == tohost_addr:
            return "tohost", c.store[2], n + 1
    return "max_steps", None, max_steps
