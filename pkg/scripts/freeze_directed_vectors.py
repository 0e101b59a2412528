"""Regenerate src/rvtlm/harness/directed_vectors.py.

Every expected value is computed by the independent naive interpreter in
tests/oracle.py (not by the package's own semantics), then written out as
literals. Run from the repository root:

    python3 scripts/freeze_directed_vectors.py
"""

from __future__ import annotations

import pprint
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from oracle import oracle_from_image  # noqa: E402

from rvtlm.harness.asm import assemble  # noqa: E402

M = (1 << 64) - 1
MIN = 1 << 63
INTERESTING = [
    (5, 3), (3, 5), (M, 1), (MIN, M), (MIN, 1), (0x7FFFFFFFFFFFFFFF, 0x7FFFFFFFFFFFFFFF),
    (0x123456789ABCDEF0, 0x0FEDCBA987654321), (0xFFFFFFFF, 0x80000000), (0x80000000, 0xFFFFFFFF),
    (12345, 0), (M - 99, 7), (0xDEADBEEF, 0xFFFFFFFFFFFFFF9C),
]
SHIFT_AMOUNTS = [(0x8000000000000001, 0), (0x8000000000000001, 1), (0xF0F0F0F00F0F0F0F, 31),
                 (0xF0F0F0F00F0F0F0F, 32), (0x8000000000000001, 63), (0x00000000C0000000, 65),
                 (0x1234567880000000, 33)]
R_OPS = ["add", "sub", "slt", "sltu", "xor", "or", "and", "addw", "subw",
         "mul", "mulh", "mulhsu", "mulhu", "mulw", "div", "divu", "rem", "remu",
         "divw", "divuw", "remw", "remuw"]
R_SHIFT = ["sll", "srl", "sra", "sllw", "srlw", "sraw"]
IMMS = [0, 1, -1, 2047, -2048, 0x555, -0x2AB]
I_OPS = ["addi", "slti", "sltiu", "xori", "ori", "andi", "addiw"]
I_SRC = [0, 5, M, MIN, 0x7FFFFFFF, 0xFFFFFFFF80000000, 0x123456789ABCDEF0]
SHIFT_I = {"slli": 64, "srli": 64, "srai": 64, "slliw": 32, "srliw": 32, "sraiw": 32}
DATA = [0x8877665544332211, 0xF0E0D0C0B0A09080, 0x7FFFFFFF80000000, 0x00000000FFFF8001]
LOADS = {"lb": 1, "lh": 2, "lw": 4, "ld": 8, "lbu": 1, "lhu": 2, "lwu": 4}
STORES = {"sb": 1, "sh": 2, "sw": 4, "sd": 8}
STORE_VALUES = [0xA1B2C3D4E5F60718, 0xFFFFFFFFFFFFFFFF, 0x0000000000000080]
LUI = [0, 1, 0x7FFFF, 0x80000, 0xFFFFF, 0x12345]
BRANCH_OPS = ["beq", "bne", "blt", "bge", "bltu", "bgeu"]
BRANCH_PAIRS = [(0, 0), (1, 2), (2, 1), (M, 1), (1, M), (MIN, 0x7FFFFFFFFFFFFFFF), (M, M)]
DATA_BASE = 0x8080_0000


def _signed(v):
    v &= M
    return v - (1 << 64) if v >> 63 else v


def run_snippet(asm: str, reg: int = 3) -> int:
    prog = assemble(asm + "\n.org 0x80800000\n" + "".join(f".dword {d}\n" for d in DATA))
    o = oracle_from_image(prog.image(), prog.entry)
    code_addr, code = prog.chunks[0]
    while code_addr <= o.pc < code_addr + len(code):
        o.step()
    return o.x[reg]


def r_vector(op, a, b):
    return run_snippet(f"li x1, {_signed(a)}\nli x2, {_signed(b)}\n{op} x3, x1, x2")


def i_vector(op, a, imm):
    return run_snippet(f"li x1, {_signed(a)}\n{op} x3, x1, {imm}")


def load_vector(op, off):
    return run_snippet(f"li x31, {DATA_BASE}\n{op} x3, {off}(x31)")


def store_vector(op, value, off):
    aligned = off & ~7
    return run_snippet(f"li x31, {DATA_BASE}\nli x2, {_signed(value)}\n{op} x2, {off}(x31)\nld x3, {aligned}(x31)")


def lui_vector(imm):
    return run_snippet(f"lui x3, {imm}")


def branch_vector(op, a, b):
    # x3 = 1 if taken else 0
    return run_snippet(f"li x1, {_signed(a)}\nli x2, {_signed(b)}\naddi x3, x0, 1\n{op} x1, x2, t\naddi x3, x0, 0\nt:\nnop")


def build() -> dict:
    vec = {}
    for op in R_OPS:
        vec[op] = [(a, b, r_vector(op, a, b)) for a, b in INTERESTING]
    for op in R_SHIFT:
        vec[op] = [(a, b, r_vector(op, a, b)) for a, b in SHIFT_AMOUNTS]
    for op in I_OPS:
        vec[op] = [(a, imm, i_vector(op, a, imm)) for a in I_SRC for imm in IMMS[:3]] + \
                  [(I_SRC[i % len(I_SRC)], imm, i_vector(op, I_SRC[i % len(I_SRC)], imm))
                   for i, imm in enumerate(IMMS[3:])]
    for op, width in SHIFT_I.items():
        amounts = [0, 1, width // 2, width - 1]
        vec[op] = [(a, s, i_vector(op, a, s)) for a in (0x8000000000000001, 0xF0F0F0F08F0F0F0F) for s in amounts]
    for op, w in LOADS.items():
        offs = sorted({0, w, 8, 16 - w, 24 + (8 - w)} - {32})
        vec[op] = [(off, 0, load_vector(op, off)) for off in offs]
    for op, w in STORES.items():
        offs = [0, w if w < 8 else 8, 16 - w]
        vec[op] = [(v, off, store_vector(op, v, off)) for v in STORE_VALUES for off in offs]
    vec["lui"] = [(imm, 0, lui_vector(imm)) for imm in LUI]
    for op in BRANCH_OPS:
        vec[op] = [(a, b, branch_vector(op, a, b)) for a, b in BRANCH_PAIRS]
    return vec


def main():
    vec = build()
    out = ROOT / "src/rvtlm/harness/directed_vectors.py"
    body = pprint.pformat(vec, width=110, compact=True)
    out.write_text(
        '"""Frozen operand/result vectors for the directed suite.\n\n'
        "Generated by scripts/freeze_directed_vectors.py from an independent reference\n"
        "interpreter; do not edit by hand. Tuples are (a, b_or_imm_or_offset, expected).\n"
        '"""\n\n'
        f"DATA = {DATA!r}\n\n"
        f"VECTORS = {body}\n"
    )
    print(f"wrote {sum(len(v) for v in vec.values())} vectors for {len(vec)} ops to {out}")


if __name__ == "__main__":
    main()
