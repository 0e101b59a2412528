"""RV64IM instruction table, decoder, encoder and disassembler."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

MASK64 = (1 << 64) - 1


def sext(value: int, bits: int) -> int:
    """Sign-extend the low ``bits`` of ``value`` to a Python int."""
    value &= (1 << bits) - 1
    if value >> (bits - 1):
        value -= 1 << bits
    return value


class Kind(str, Enum):
    ALU = "ALU"
    MUL = "MUL"
    DIV = "DIV"
    LOAD = "LOAD"
    STORE = "STORE"
    BRANCH = "BRANCH"
    JAL = "JAL"
    JALR = "JALR"
    SYSTEM = "SYSTEM"


# CSRs readable through csrr*: the two KPI counters and their user aliases.
CSR_NAMES = {0xB00: "mcycle", 0xB02: "minstret", 0xC00: "cycle", 0xC02: "instret"}
CSR_NUMBERS = {v: k for k, v in CSR_NAMES.items()}

# op -> (format, opcode, funct3, funct7/funct6 or None, kind)
# formats: R, I, IS (64-bit shamt), ISW (32-bit shamt), L, S, B, U, J, JR, CSR, CSRI, FENCE
_TABLE = {
    "lui":    ("U", 0x37, None, None, Kind.ALU),
    "auipc":  ("U", 0x17, None, None, Kind.ALU),
    "jal":    ("J", 0x6F, None, None, Kind.JAL),
    "jalr":   ("JR", 0x67, 0, None, Kind.JALR),
    "beq":    ("B", 0x63, 0, None, Kind.BRANCH),
    "bne":    ("B", 0x63, 1, None, Kind.BRANCH),
    "blt":    ("B", 0x63, 4, None, Kind.BRANCH),
    "bge":    ("B", 0x63, 5, None, Kind.BRANCH),
    "bltu":   ("B", 0x63, 6, None, Kind.BRANCH),
    "bgeu":   ("B", 0x63, 7, None, Kind.BRANCH),
    "lb":     ("L", 0x03, 0, None, Kind.LOAD),
    "lh":     ("L", 0x03, 1, None, Kind.LOAD),
    "lw":     ("L", 0x03, 2, None, Kind.LOAD),
    "ld":     ("L", 0x03, 3, None, Kind.LOAD),
    "lbu":    ("L", 0x03, 4, None, Kind.LOAD),
    "lhu":    ("L", 0x03, 5, None, Kind.LOAD),
    "lwu":    ("L", 0x03, 6, None, Kind.LOAD),
    "sb":     ("S", 0x23, 0, None, Kind.STORE),
    "sh":     ("S", 0x23, 1, None, Kind.STORE),
    "sw":     ("S", 0x23, 2, None, Kind.STORE),
    "sd":     ("S", 0x23, 3, None, Kind.STORE),
    "addi":   ("I", 0x13, 0, None, Kind.ALU),
    "slti":   ("I", 0x13, 2, None, Kind.ALU),
    "sltiu":  ("I", 0x13, 3, None, Kind.ALU),
    "xori":   ("I", 0x13, 4, None, Kind.ALU),
    "ori":    ("I", 0x13, 6, None, Kind.ALU),
    "andi":   ("I", 0x13, 7, None, Kind.ALU),
    "slli":   ("IS", 0x13, 1, 0x00, Kind.ALU),
    "srli":   ("IS", 0x13, 5, 0x00, Kind.ALU),
    "srai":   ("IS", 0x13, 5, 0x10, Kind.ALU),
    "add":    ("R", 0x33, 0, 0x00, Kind.ALU),
    "sub":    ("R", 0x33, 0, 0x20, Kind.ALU),
    "sll":    ("R", 0x33, 1, 0x00, Kind.ALU),
    "slt":    ("R", 0x33, 2, 0x00, Kind.ALU),
    "sltu":   ("R", 0x33, 3, 0x00, Kind.ALU),
    "xor":    ("R", 0x33, 4, 0x00, Kind.ALU),
    "srl":    ("R", 0x33, 5, 0x00, Kind.ALU),
    "sra":    ("R", 0x33, 5, 0x20, Kind.ALU),
    "or":     ("R", 0x33, 6, 0x00, Kind.ALU),
    "and":    ("R", 0x33, 7, 0x00, Kind.ALU),
    "addiw":  ("I", 0x1B, 0, None, Kind.ALU),
    "slliw":  ("ISW", 0x1B, 1, 0x00, Kind.ALU),
    "srliw":  ("ISW", 0x1B, 5, 0x00, Kind.ALU),
    "sraiw":  ("ISW", 0x1B, 5, 0x20, Kind.ALU),
    "addw":   ("R", 0x3B, 0, 0x00, Kind.ALU),
    "subw":   ("R", 0x3B, 0, 0x20, Kind.ALU),
    "sllw":   ("R", 0x3B, 1, 0x00, Kind.ALU),
    "srlw":   ("R", 0x3B, 5, 0x00, Kind.ALU),
    "sraw":   ("R", 0x3B, 5, 0x20, Kind.ALU),
    "mul":    ("R", 0x33, 0, 0x01, Kind.MUL),
    "mulh":   ("R", 0x33, 1, 0x01, Kind.MUL),
    "mulhsu": ("R", 0x33, 2, 0x01, Kind.MUL),
    "mulhu":  ("R", 0x33, 3, 0x01, Kind.MUL),
    "div":    ("R", 0x33, 4, 0x01, Kind.DIV),
    "divu":   ("R", 0x33, 5, 0x01, Kind.DIV),
    "rem":    ("R", 0x33, 6, 0x01, Kind.DIV),
    "remu":   ("R", 0x33, 7, 0x01, Kind.DIV),
    "mulw":   ("R", 0x3B, 0, 0x01, Kind.MUL),
    "divw":   ("R", 0x3B, 4, 0x01, Kind.DIV),
    "divuw":  ("R", 0x3B, 5, 0x01, Kind.DIV),
    "remw":   ("R", 0x3B, 6, 0x01, Kind.DIV),
    "remuw":  ("R", 0x3B, 7, 0x01, Kind.DIV),
    "fence":  ("FENCE", 0x0F, 0, None, Kind.ALU),
    "csrrs":  ("CSR", 0x73, 2, None, Kind.SYSTEM),
    "csrrc":  ("CSR", 0x73, 3, None, Kind.SYSTEM),
    "csrrsi": ("CSRI", 0x73, 6, None, Kind.SYSTEM),
    "csrrci": ("CSRI", 0x73, 7, None, Kind.SYSTEM),
}

OPS = tuple(_TABLE)
MEM_WIDTH = {"lb": 1, "lh": 2, "lw": 4, "ld": 8, "lbu": 1, "lhu": 2, "lwu": 4,
             "sb": 1, "sh": 2, "sw": 4, "sd": 8}

# (opcode, funct3, funct7-or-None) -> op, used by the decoder
_LOOKUP: dict[tuple, str] = {}
for _op, (_fmt, _opc, _f3, _f7, _k) in _TABLE.items():
    if _fmt in ("R", "IS", "ISW"):
        _LOOKUP[(_opc, _f3, _f7)] = _op
    elif _fmt in ("U", "J"):
        _LOOKUP[(_opc, None, None)] = _op
    else:
        _LOOKUP[(_opc, _f3, None)] = _op


class StepFault(Exception):
    """An instruction could not complete architecturally (illegal, misaligned)."""

    def __init__(self, pc: int, reason: str, raw: int | None = None):
        self.pc = pc
        self.reason = reason
        self.raw = raw
        msg = f"{reason} at pc=0x{pc:x}"
        if raw is not None:
            msg += f" (raw=0x{raw:08x})"
        super().__init__(msg)


class IllegalInstruction(StepFault):
    def __init__(self, raw: int, pc: int):
        super().__init__(pc, "illegal instruction", raw)


@dataclass(frozen=True, slots=True)
class DecodedInstr:
    pc: int
    raw: int
    kind: Kind
    op: str
    rd: int = 0
    rs1: int = 0
    rs2: int = 0
    imm: int = 0
    # derived, filled by decode()
    uses_rs1: bool = False
    uses_rs2: bool = False
    writes_rd: bool = False

    @property
    def width(self) -> int:
        return MEM_WIDTH[self.op]

    def __str__(self) -> str:
        return disasm(self)


def decode(raw: int, pc: int = 0) -> DecodedInstr:
    """Decode one 32-bit word. Raises IllegalInstruction for anything outside RV64IM."""
    raw &= 0xFFFFFFFF
    if raw & 3 != 3:
        raise IllegalInstruction(raw, pc)
    opcode = raw & 0x7F
    rd = (raw >> 7) & 0x1F
    f3 = (raw >> 12) & 7
    rs1 = (raw >> 15) & 0x1F
    rs2 = (raw >> 20) & 0x1F
    f7 = raw >> 25

    op = None
    if opcode in (0x33, 0x3B):
        op = _LOOKUP.get((opcode, f3, f7))
    elif opcode == 0x13 and f3 in (1, 5):
        op = _LOOKUP.get((opcode, f3, f7 >> 1))
    elif opcode == 0x1B and f3 in (1, 5):
        op = _LOOKUP.get((opcode, f3, f7))
    elif opcode in (0x37, 0x17, 0x6F):
        op = _LOOKUP.get((opcode, None, None))
    else:
        op = _LOOKUP.get((opcode, f3, None))
    if op is None:
        raise IllegalInstruction(raw, pc)

    fmt, _, _, _, kind = _TABLE[op]
    i_imm = sext(raw >> 20, 12)
    u1 = u2 = w = False
    imm = 0
    if fmt == "R":
        u1 = u2 = w = True
    elif fmt == "I":
        u1 = w = True
        imm = i_imm
    elif fmt == "IS":
        u1 = w = True
        imm = (raw >> 20) & 0x3F
        rs2 = 0
    elif fmt == "ISW":
        u1 = w = True
        imm = (raw >> 20) & 0x1F
        rs2 = 0
    elif fmt in ("L", "JR"):
        u1 = w = True
        imm = i_imm
        rs2 = 0
    elif fmt == "S":
        u1 = u2 = True
        imm = sext(((raw >> 25) << 5) | rd, 12)
        rd = 0
    elif fmt == "B":
        u1 = u2 = True
        imm = sext(((raw >> 31) << 12) | (((raw >> 7) & 1) << 11)
                   | (((raw >> 25) & 0x3F) << 5) | (((raw >> 8) & 0xF) << 1), 13)
        rd = 0
    elif fmt == "U":
        w = True
        imm = sext(raw & 0xFFFFF000, 32)
        rs1 = rs2 = 0
    elif fmt == "J":
        w = True
        imm = sext(((raw >> 31) << 20) | (((raw >> 12) & 0xFF) << 12)
                   | (((raw >> 20) & 1) << 11) | (((raw >> 21) & 0x3FF) << 1), 21)
        rs1 = rs2 = 0
    elif fmt == "FENCE":
        # fm and the rd/rs1 fields are reserved; only plain fences are accepted
        if rd or rs1 or raw >> 28:
            raise IllegalInstruction(raw, pc)
        imm = (raw >> 20) & 0xFF
        rs2 = 0
    else:  # CSR / CSRI: read-only access to the counter CSRs
        csr = raw >> 20
        if csr not in CSR_NAMES or rs1 != 0:
            raise IllegalInstruction(raw, pc)
        w = True
        imm = csr
        rs2 = 0
    return DecodedInstr(pc, raw, kind, op, rd, rs1, rs2, imm, u1, u2, w)


def encode(op: str, rd: int = 0, rs1: int = 0, rs2: int = 0, imm: int = 0) -> int:
    """Assemble one instruction from its fields. For CSR ops ``imm`` is the CSR number."""
    try:
        fmt, opc, f3, f7, _ = _TABLE[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    for r in (rd, rs1, rs2):
        if not 0 <= r < 32:
            raise ValueError(f"register index {r} out of range")
    if fmt == "R":
        return (f7 << 25) | (rs2 << 20) | (rs1 << 15) | (f3 << 12) | (rd << 7) | opc
    if fmt in ("I", "L", "JR"):
        _check_range(imm, -2048, 2047, op)
        return ((imm & 0xFFF) << 20) | (rs1 << 15) | (f3 << 12) | (rd << 7) | opc
    if fmt == "IS":
        _check_range(imm, 0, 63, op)
        return (f7 << 26) | (imm << 20) | (rs1 << 15) | (f3 << 12) | (rd << 7) | opc
    if fmt == "ISW":
        _check_range(imm, 0, 31, op)
        return (f7 << 25) | (imm << 20) | (rs1 << 15) | (f3 << 12) | (rd << 7) | opc
    if fmt == "S":
        _check_range(imm, -2048, 2047, op)
        imm &= 0xFFF
        return ((imm >> 5) << 25) | (rs2 << 20) | (rs1 << 15) | (f3 << 12) | ((imm & 0x1F) << 7) | opc
    if fmt == "B":
        _check_range(imm, -4096, 4094, op)
        if imm & 1:
            raise ValueError(f"{op}: odd branch offset {imm}")
        imm &= 0x1FFF
        return (((imm >> 12) & 1) << 31) | (((imm >> 5) & 0x3F) << 25) | (rs2 << 20) | (rs1 << 15) \
            | (f3 << 12) | (((imm >> 1) & 0xF) << 8) | (((imm >> 11) & 1) << 7) | opc
    if fmt == "U":
        # imm is the full (already shifted) value; low 12 bits must be zero
        if imm & 0xFFF:
            raise ValueError(f"{op}: immediate 0x{imm:x} has nonzero low 12 bits")
        _check_range(sext(imm, 32), -(1 << 31), (1 << 31) - 1, op)
        return (imm & 0xFFFFF000) | (rd << 7) | opc
    if fmt == "J":
        _check_range(imm, -(1 << 20), (1 << 20) - 2, op)
        if imm & 1:
            raise ValueError(f"{op}: odd jump offset {imm}")
        imm &= 0x1FFFFF
        return (((imm >> 20) & 1) << 31) | (((imm >> 1) & 0x3FF) << 21) | (((imm >> 11) & 1) << 20) \
            | (((imm >> 12) & 0xFF) << 12) | (rd << 7) | opc
    if fmt == "FENCE":
        _check_range(imm, 0, 0xFF, op)
        return (imm << 20) | opc
    # CSR / CSRI
    _check_range(imm, 0, 0xFFF, op)
    return (imm << 20) | (rs1 << 15) | (f3 << 12) | (rd << 7) | opc


def _check_range(v: int, lo: int, hi: int, op: str) -> None:
    if not lo <= v <= hi:
        raise ValueError(f"{op}: immediate {v} outside [{lo}, {hi}]")


def disasm(d: DecodedInstr) -> str:
    if d.op not in _TABLE:
        return f"{d.op} 0x{d.raw:08x}"
    fmt = _TABLE[d.op][0]
    op = d.op
    if fmt == "R":
        return f"{op} x{d.rd}, x{d.rs1}, x{d.rs2}"
    if fmt in ("I", "IS", "ISW"):
        return f"{op} x{d.rd}, x{d.rs1}, {d.imm}"
    if fmt in ("L", "JR"):
        return f"{op} x{d.rd}, {d.imm}(x{d.rs1})"
    if fmt == "S":
        return f"{op} x{d.rs2}, {d.imm}(x{d.rs1})"
    if fmt == "B":
        return f"{op} x{d.rs1}, x{d.rs2}, {d.imm}"
    if fmt == "U":
        return f"{op} x{d.rd}, 0x{(d.imm >> 12) & 0xFFFFF:x}"
    if fmt == "J":
        return f"{op} x{d.rd}, {d.imm}"
    if fmt == "FENCE":
        sets = ["".join(c for c, bit in zip("iorw", (8, 4, 2, 1)) if v & bit) or "0"
                for v in (d.imm >> 4, d.imm & 0xF)]
        return f"fence {sets[0]}, {sets[1]}"
    return f"{op} x{d.rd}, {CSR_NAMES[d.imm]}, {'x' if fmt == 'CSR' else ''}{d.rs1}"


def is_control(kind: Kind) -> bool:
    return kind in (Kind.BRANCH, Kind.JAL, Kind.JALR)
