"""Value semantics of RV64IM operations on unsigned 64-bit register values.

Shared by the golden interpreter and the core model's functional units.
"""

from __future__ import annotations

M64 = (1 << 64) - 1
M32 = (1 << 32) - 1
SIGN64 = 1 << 63
INT64_MIN = -(1 << 63)


def s64(x: int) -> int:
    return x - (1 << 64) if x & SIGN64 else x


def s32(x: int) -> int:
    x &= M32
    return x - (1 << 32) if x & 0x80000000 else x


def w(x: int) -> int:
    """Sign-extend the low word into a 64-bit register value."""
    return s32(x) & M64


def _div(a: int, b: int) -> int:
    if b == 0:
        return M64
    sa, sb = s64(a), s64(b)
    if sa == INT64_MIN and sb == -1:
        return a
    q = abs(sa) // abs(sb)
    return (-q if (sa < 0) != (sb < 0) else q) & M64


def _rem(a: int, b: int) -> int:
    if b == 0:
        return a
    sa, sb = s64(a), s64(b)
    if sa == INT64_MIN and sb == -1:
        return 0
    r = abs(sa) % abs(sb)
    return (-r if sa < 0 else r) & M64


def _divw(a: int, b: int) -> int:
    sa, sb = s32(a), s32(b)
    if sb == 0:
        return M64
    if sa == -(1 << 31) and sb == -1:
        return w(sa)
    q = abs(sa) // abs(sb)
    return w(-q if (sa < 0) != (sb < 0) else q)


def _remw(a: int, b: int) -> int:
    sa, sb = s32(a), s32(b)
    if sb == 0:
        return w(sa)
    if sa == -(1 << 31) and sb == -1:
        return 0
    r = abs(sa) % abs(sb)
    return w(-r if sa < 0 else r)


def _divuw(a: int, b: int) -> int:
    a &= M32
    b &= M32
    return M64 if b == 0 else w(a // b)


def _remuw(a: int, b: int) -> int:
    a &= M32
    b &= M32
    return w(a) if b == 0 else w(a % b)


# op -> f(a, b) where b is rs2's value or the immediate (as unsigned 64-bit)
BINARY = {
    "add": lambda a, b: (a + b) & M64,
    "addi": lambda a, b: (a + b) & M64,
    "sub": lambda a, b: (a - b) & M64,
    "sll": lambda a, b: (a << (b & 63)) & M64,
    "slli": lambda a, b: (a << (b & 63)) & M64,
    "srl": lambda a, b: a >> (b & 63),
    "srli": lambda a, b: a >> (b & 63),
    "sra": lambda a, b: (s64(a) >> (b & 63)) & M64,
    "srai": lambda a, b: (s64(a) >> (b & 63)) & M64,
    "slt": lambda a, b: int(s64(a) < s64(b)),
    "slti": lambda a, b: int(s64(a) < s64(b)),
    "sltu": lambda a, b: int(a < b),
    "sltiu": lambda a, b: int(a < b),
    "xor": lambda a, b: a ^ b,
    "xori": lambda a, b: a ^ b,
    "or": lambda a, b: a | b,
    "ori": lambda a, b: a | b,
    "and": lambda a, b: a & b,
    "andi": lambda a, b: a & b,
    "addw": lambda a, b: w(a + b),
    "addiw": lambda a, b: w(a + b),
    "subw": lambda a, b: w(a - b),
    "sllw": lambda a, b: w(a << (b & 31)),
    "slliw": lambda a, b: w(a << (b & 31)),
    "srlw": lambda a, b: w((a & M32) >> (b & 31)),
    "srliw": lambda a, b: w((a & M32) >> (b & 31)),
    "sraw": lambda a, b: w(s32(a) >> (b & 31)),
    "sraiw": lambda a, b: w(s32(a) >> (b & 31)),
    "mul": lambda a, b: (a * b) & M64,
    "mulh": lambda a, b: ((s64(a) * s64(b)) >> 64) & M64,
    "mulhsu": lambda a, b: ((s64(a) * b) >> 64) & M64,
    "mulhu": lambda a, b: (a * b) >> 64,
    "mulw": lambda a, b: w(a * b),
    "div": _div,
    "divu": lambda a, b: M64 if b == 0 else a // b,
    "rem": _rem,
    "remu": lambda a, b: a if b == 0 else a % b,
    "divw": _divw,
    "divuw": _divuw,
    "remw": _remw,
    "remuw": _remuw,
}

BRANCH = {
    "beq": lambda a, b: a == b,
    "bne": lambda a, b: a != b,
    "blt": lambda a, b: s64(a) < s64(b),
    "bge": lambda a, b: s64(a) >= s64(b),
    "bltu": lambda a, b: a < b,
    "bgeu": lambda a, b: a >= b,
}

# load op -> (width, signed)
LOADS = {
    "lb": (1, True), "lh": (2, True), "lw": (4, True), "ld": (8, False),
    "lbu": (1, False), "lhu": (2, False), "lwu": (4, False),
}


def extend_load(op: str, raw: int) -> int:
    width, signed = LOADS[op]
    if signed:
        bits = 8 * width
        if raw >> (bits - 1):
            return (raw - (1 << bits)) & M64
    return raw

