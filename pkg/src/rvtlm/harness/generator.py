"""Constrained-random RV64IM program generator.

Layout of a generated program (``length`` words in total)::

    prologue   auipc x31 / addi x31 -> data base; addi x29, x31, 0
    body       random ops; memory ops address [x31 + off] or [x29 + 0]
    terminator auipc x30 / addi x30 -> tohost; addi x28, x0, 1; sd x28, 0(x30)

x28..x31 are reserved. Every value x29 ever holds is an 8-aligned address
inside the data region, so memory accesses stay in-region on every path.
Control flow is forward-only, so every program reaches the terminator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..core.config import DEFAULT_RESET_PC, DEFAULT_TOHOST
from ..isa.encoding import CSR_NUMBERS, encode, sext

DEFAULT_DATA_BASE = 0x8080_0000

R_ALU = ("add", "sub", "sll", "slt", "sltu", "xor", "srl", "sra", "or", "and",
         "addw", "subw", "sllw", "srlw", "sraw")
I_ALU = ("addi", "slti", "sltiu", "xori", "ori", "andi", "addiw")
SHIFT_I = ("slli", "srli", "srai")
SHIFT_IW = ("slliw", "srliw", "sraiw")
MUL_OPS = ("mul", "mulh", "mulhsu", "mulhu", "mulw")
DIV_OPS = ("div", "divu", "rem", "remu", "divw", "divuw", "remw", "remuw")
LOAD_OPS = {"lb": 1, "lh": 2, "lw": 4, "ld": 8, "lbu": 1, "lhu": 2, "lwu": 4}
STORE_OPS = {"sb": 1, "sh": 2, "sw": 4, "sd": 8}
BRANCH_OPS = ("beq", "bne", "blt", "bge", "bltu", "bgeu")

DEFAULT_MIX = {
    "alu": 30, "alu_imm": 20, "upper": 3, "mul": 5, "div": 3,
    "load": 14, "store": 12, "addr": 3, "branch": 8, "jal": 2, "csr": 1,
}

PROLOGUE_LEN = 3
TERMINATOR_LEN = 4
RESERVED = frozenset((28, 29, 30, 31))


@dataclass(frozen=True)
class GenConstraints:
    length: int = 1000
    reg_pool: tuple = tuple(range(1, 16))
    data_region: tuple = (DEFAULT_DATA_BASE, 256)
    max_branch_skip: int = 8
    op_mix: dict = field(default_factory=lambda: dict(DEFAULT_MIX))
    base_pc: int = DEFAULT_RESET_PC
    tohost_addr: int = DEFAULT_TOHOST
    allow_jalr: bool = False
    x0_dest_rate: float = 0.03
    recent_bias: float = 0.5     # chance a source register is a recently written one

    def validate(self) -> None:
        if self.length < PROLOGUE_LEN + TERMINATOR_LEN:
            raise ValueError(f"length must be >= {PROLOGUE_LEN + TERMINATOR_LEN}")
        if not self.reg_pool or any(not 1 <= r <= 31 or r in RESERVED for r in self.reg_pool):
            raise ValueError("reg_pool must be non-empty and avoid x0 and reserved x28..x31")
        base, size = self.data_region
        unknown = set(self.op_mix) - set(DEFAULT_MIX)
        if unknown:
            raise ValueError(f"unknown op_mix kind(s): {sorted(unknown)}")
        weights = {k: v for k, v in self.op_mix.items() if v > 0}
        if not weights:
            raise ValueError("op_mix has no positive weight")
        if any(k in weights for k in ("load", "store", "addr")):
            if size < 8:
                raise ValueError("memory ops requested but data region is smaller than 8 bytes")
            if size > 2048:
                raise ValueError("data region must fit a 12-bit offset (<= 2048 bytes)")
            if base & 7:
                raise ValueError("data region base must be 8-byte aligned")
        if self.max_branch_skip < 1:
            raise ValueError("max_branch_skip must be >= 1")
        if self.allow_jalr:
            raise ValueError("JALR generation is not supported; control flow is forward-only")
        for addr in (base, self.tohost_addr):
            off = addr - self.base_pc
            if not -(1 << 31) <= off < (1 << 31) - (1 << 20):
                raise ValueError(f"address 0x{addr:x} not reachable pc-relatively from the code")
        code_end = self.base_pc + 4 * self.length
        if self.base_pc <= self.tohost_addr < code_end or self.base_pc < base + size and base < code_end:
            raise ValueError("data region / tohost overlap the generated code")


def _pcrel(rd: int, target: int, pc: int) -> list[int]:
    off = target - pc
    lo = sext(off & 0xFFF, 12)
    hi = (off - lo) & 0xFFFFFFFF
    return [encode("auipc", rd, imm=hi & 0xFFFFF000), encode("addi", rd, rd, imm=lo)]


class _Gen:
    def __init__(self, c: GenConstraints, rng: random.Random):
        self.c = c
        self.rng = rng
        self.recent: list[int] = []
        self.kinds = [k for k, v in c.op_mix.items() if v > 0]
        self.weights = [c.op_mix[k] for k in self.kinds]

    def dest(self) -> int:
        rng = self.rng
        if rng.random() < self.c.x0_dest_rate:
            return 0
        r = rng.choice(self.c.reg_pool)
        self.recent.append(r)
        if len(self.recent) > 4:
            self.recent.pop(0)
        return r

    def src(self) -> int:
        rng = self.rng
        if self.recent and rng.random() < self.c.recent_bias:
            return rng.choice(self.recent)
        if rng.random() < 0.05:
            return 0
        return rng.choice(self.c.reg_pool)

    def one(self, i: int, body_end: int, pc: int) -> int:
        """Instruction at body index ``i``; branch targets stay <= body_end (terminator start)."""
        rng = self.rng
        kind = rng.choices(self.kinds, self.weights)[0]
        base, size = self.c.data_region
        if kind in ("branch", "jal"):
            room = body_end - i - 1
            if room < 1:
                kind = "alu"
            else:
                skip = rng.randint(1, min(self.c.max_branch_skip, room))
                off = 4 * (skip + 1)
                if kind == "branch":
                    return encode(rng.choice(BRANCH_OPS), 0, self.src(), self.src(), off)
                return encode("jal", self.dest(), imm=off)
        if kind == "alu":
            return encode(rng.choice(R_ALU), self.dest(), self.src(), self.src())
        if kind == "alu_imm":
            r = rng.random()
            if r < 0.6:
                return encode(rng.choice(I_ALU), self.dest(), self.src(), imm=rng.randint(-2048, 2047))
            if r < 0.85:
                return encode(rng.choice(SHIFT_I), self.dest(), self.src(), imm=rng.randint(0, 63))
            return encode(rng.choice(SHIFT_IW), self.dest(), self.src(), imm=rng.randint(0, 31))
        if kind == "upper":
            op = rng.choice(("lui", "auipc"))
            return encode(op, self.dest(), imm=sext(rng.getrandbits(20) << 12, 32) & 0xFFFFF000)
        if kind == "mul":
            return encode(rng.choice(MUL_OPS), self.dest(), self.src(), self.src())
        if kind == "div":
            return encode(rng.choice(DIV_OPS), self.dest(), self.src(), self.src())
        if kind == "csr":
            csr = CSR_NUMBERS[rng.choice(("minstret", "instret", "mcycle", "cycle"))]
            return encode(rng.choice(("csrrs", "csrrc")), self.dest(), 0, imm=csr)
        if kind == "addr":
            return encode("addi", 29, 31, imm=rng.randrange(0, size - 7, 8))
        if kind == "load":
            op = rng.choice(tuple(LOAD_OPS))
            if rng.random() < 0.3:
                return encode(op, self.dest(), 29, imm=0)
            w = LOAD_OPS[op]
            return encode(op, self.dest(), 31, imm=rng.randrange(0, size - w + 1, w))
        # store
        op = rng.choice(tuple(STORE_OPS))
        if rng.random() < 0.3:
            return encode(op, 0, 29, self.src(), 0)
        w = STORE_OPS[op]
        return encode(op, 0, 31, self.src(), rng.randrange(0, size - w + 1, w))


def generate_program(constraints: GenConstraints, seed: int) -> list[int]:
    """Deterministic in ``seed``; returns exactly ``constraints.length`` instruction words."""
    constraints.validate()
    rng = random.Random(seed)
    g = _Gen(constraints, rng)
    pc0 = constraints.base_pc
    base, _ = constraints.data_region
    words = _pcrel(31, base, pc0) + [encode("addi", 29, 31, imm=0)]
    body_len = constraints.length - PROLOGUE_LEN - TERMINATOR_LEN
    body_end = body_len  # index of the terminator, relative to body start
    for i in range(body_len):
        pc = pc0 + 4 * len(words)
        words.append(g.one(i, body_end, pc))
    pc = pc0 + 4 * len(words)
    words += _pcrel(30, constraints.tohost_addr, pc)
    words += [encode("addi", 28, 0, imm=1), encode("sd", 0, 30, 28, 0)]
    assert len(words) == constraints.length
    return words


def program_image(words: list[int], base_pc: int = DEFAULT_RESET_PC):
    from ..isa.memory import MemoryImage

    mem = MemoryImage()
    mem.write_bytes(base_pc, b"".join(w.to_bytes(4, "little") for w in words))
    return mem


def independent_alu_program(n: int, base_pc: int = DEFAULT_RESET_PC, tohost_addr: int = DEFAULT_TOHOST) -> list[int]:
    """n mutually independent ALU ops (each writes a register no later op reads), then the terminator."""
    words = []
    for i in range(n):
        rd = 1 + (i % 15)
        words.append(encode("addi", rd, 0, imm=i & 0x7FF))
    return words + _terminator(base_pc + 4 * len(words), tohost_addr)


def serial_chain_program(n: int, base_pc: int = DEFAULT_RESET_PC, tohost_addr: int = DEFAULT_TOHOST) -> list[int]:
    """n ALU ops where each reads the previous op's destination."""
    words = []
    prev = 0
    for i in range(n):
        rd = 1 + (i % 15)
        words.append(encode("addi", rd, prev, imm=1))
        prev = rd
    return words + _terminator(base_pc + 4 * len(words), tohost_addr)


def div_mixed_program(n: int, base_pc: int = DEFAULT_RESET_PC, tohost_addr: int = DEFAULT_TOHOST,
                      div_every: int = 16) -> list[int]:
    """Independent ALU stream with a long-latency divide every ``div_every`` ops."""
    words = [encode("addi", 20, 0, imm=1000), encode("addi", 21, 0, imm=7)]
    for i in range(n):
        if i % div_every == 0:
            words.append(encode("div", 22, 20, 21))
        else:
            words.append(encode("addi", 1 + (i % 15), 0, imm=i & 0x7FF))
    return words + _terminator(base_pc + 4 * len(words), tohost_addr)


def _terminator(pc: int, tohost_addr: int) -> list[int]:
    return _pcrel(30, tohost_addr, pc) + [encode("addi", 28, 0, imm=1), encode("sd", 0, 30, 28, 0)]


def loop_program(iterations: int, body: int = 8, base_pc: int = DEFAULT_RESET_PC,
                 tohost_addr: int = DEFAULT_TOHOST) -> list[int]:
    """Counted loop of independent ALU ops: about iterations * (body + 2) dynamic instructions."""
    if not 0 < iterations < (1 << 31):
        raise ValueError("iterations out of range")
    words = []
    lo = sext(iterations & 0xFFF, 12)
    hi = ((iterations - lo) >> 12) & 0xFFFFF
    words.append(encode("lui", 27, imm=hi << 12))
    words.append(encode("addiw", 27, 27, imm=lo))
    loop_start = len(words)
    for i in range(body):
        words.append(encode("addi", 1 + (i % 15), 0, imm=i))
    words.append(encode("addi", 27, 27, imm=-1))
    words.append(encode("bne", 0, 27, 0, -4 * (len(words) - loop_start)))
    return words + _terminator(base_pc + 4 * len(words), tohost_addr)


WORKLOADS = {
    "independent": independent_alu_program,
    "serial": serial_chain_program,
    "divmix": div_mixed_program,
    "loop": loop_program,
}


def workload_words(name: str, size: int, base_pc: int = DEFAULT_RESET_PC,
                   tohost_addr: int = DEFAULT_TOHOST) -> list[int]:
    """Synthetic analytic workload; ``size`` is the op count (iterations for ``loop``)."""
    if name not in WORKLOADS:
        raise ValueError(f"unknown workload {name!r}; choose from {sorted(WORKLOADS)}")
    return WORKLOADS[name](size, base_pc=base_pc, tohost_addr=tohost_addr)
