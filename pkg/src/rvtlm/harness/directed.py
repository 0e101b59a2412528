"""Self-checking directed tests, one or more per RV64IM instruction.

Each test is an assembly program that computes results, compares them with
expected constants and stores to ``tohost``: 1 on success, ``2k+1`` when
check ``k`` fails. Operand/result vectors come from ``directed_vectors``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core.config import DEFAULT_TOHOST
from .asm import Program, assemble
from .directed_vectors import DATA, VECTORS

DATA_BASE = 0x8080_0000

_PRELUDE = f"""\
.equ tohost, {DEFAULT_TOHOST}
.equ data, {DATA_BASE}
_start:
    li x31, data
"""

_EPILOGUE = """\
    j pass
fail:
    slli x28, x29, 1
    addi x28, x28, 1
    j report
pass:
    li x28, 1
report:
    li x30, tohost
    sd x28, 0(x30)
halt_loop:
    j halt_loop
"""


def _data_section() -> str:
    return f".org {DATA_BASE}\n" + "".join(f".dword {d}\n" for d in DATA)


@dataclass(frozen=True)
class DirectedTest:
    name: str
    ops: tuple          # instructions this test is meant to exercise
    source: str

    def assemble(self) -> Program:
        return assemble(self.source)


def _s(v: int) -> int:
    v &= (1 << 64) - 1
    return v - (1 << 64) if v >> 63 else v


def _wrap(body: str) -> str:
    return _PRELUDE + body + _EPILOGUE + _data_section()


def _check(k: int, reg: str, expected: int) -> str:
    return f"    li x29, {k}\n    li x4, {_s(expected)}\n    bne {reg}, x4, fail\n"


_R_OPS = ("add sub sll slt sltu xor srl sra or and addw subw sllw srlw sraw "
          "mul mulh mulhsu mulhu mulw div divu rem remu divw divuw remw remuw").split()
_I_OPS = "addi slti sltiu xori ori andi addiw slli srli srai slliw srliw sraiw".split()
_LOADS = "lb lh lw ld lbu lhu lwu".split()
_STORES = "sb sh sw sd".split()
_BRANCHES = "beq bne blt bge bltu bgeu".split()


def _vector_test(op: str) -> DirectedTest:
    body = []
    for k, (a, b, exp) in enumerate(VECTORS[op], 1):
        if op in _R_OPS:
            body.append(f"    li x1, {_s(a)}\n    li x2, {_s(b)}\n    {op} x3, x1, x2\n")
        elif op in _I_OPS:
            body.append(f"    li x1, {_s(a)}\n    {op} x3, x1, {b}\n")
        elif op in _LOADS:
            body.append(f"    {op} x3, {a}(x31)\n")
        elif op in _STORES:
            body.append(f"    li x5, {_s(DATA[0])}\n    sd x5, 0(x31)\n    li x5, {_s(DATA[1])}\n    sd x5, 8(x31)\n"
                        f"    li x2, {_s(a)}\n    {op} x2, {b}(x31)\n    ld x3, {b & ~7}(x31)\n")
        elif op == "lui":
            body.append(f"    lui x3, {a}\n")
        elif op in _BRANCHES:
            body.append(f"    li x1, {_s(a)}\n    li x2, {_s(b)}\n    addi x3, x0, 1\n"
                        f"    {op} x1, x2, taken_{k}\n    addi x3, x0, 0\ntaken_{k}:\n")
        else:
            raise KeyError(op)
        body.append(_check(k, "x3", exp))
    return DirectedTest(f"op_{op}", (op,), _wrap("".join(body)))


def _custom_tests() -> list[DirectedTest]:
    t = []
    t.append(DirectedTest("op_auipc", ("auipc",), _wrap("""\
here1:
    auipc x3, 0x12
    li x4, here1
    li x5, 0x12000
    add x4, x4, x5
    li x29, 1
    bne x3, x4, fail
here2:
    auipc x3, 0xfffff
    li x4, here2
    addi x4, x4, -2047
    addi x4, x4, -2047
    addi x4, x4, -2
    li x29, 2
    bne x3, x4, fail
""")))
    t.append(DirectedTest("op_jal", ("jal",), _wrap("""\
    li x29, 1
    jal x1, fwd
link1:
    j fail
back:
    li x29, 3
    jal x0, done
    j fail
fwd:
    li x4, link1
    bne x1, x4, fail
    li x29, 2
    jal x7, back
    j fail
done:
""")))
    t.append(DirectedTest("op_jalr", ("jalr",), _wrap("""\
    li x29, 1
    li x5, tgt1
    jalr x1, 0(x5)
link1:
    j fail
tgt1:
    li x4, link1
    bne x1, x4, fail
    li x29, 2
    li x5, tgt2
    addi x5, x5, -3
    jalr x6, 4(x5)
    j fail
tgt2:
    li x29, 3
    li x5, tgt3
    jalr x5, 0(x5)
link3:
    j fail
tgt3:
    li x4, link3
    bne x5, x4, fail
""")))
    t.append(DirectedTest("op_fence", ("fence",), _wrap("""\
    li x1, 77
    sd x1, 32(x31)
    fence
    ld x3, 32(x31)
""" + _check(1, "x3", 77))))
    t.append(DirectedTest("op_csrrs_minstret", ("csrrs",), """\
.equ tohost, %d
_start:
    csrrs x3, minstret, x0
    csrrs x4, instret, x0
    addi x5, x0, 1
    li x29, 1
    bne x3, x0, fail
    li x29, 2
    bne x4, x5, fail
    j pass
""" % DEFAULT_TOHOST + _EPILOGUE.split("    j pass\n", 1)[1]))
    for op, imm in (("csrrc", "x0"), ("csrrsi", "0"), ("csrrci", "0")):
        t.append(DirectedTest(f"op_{op}", (op,), _wrap(f"""\
    {op} x3, minstret, {imm}
    {op} x4, minstret, {imm}
    sub x5, x4, x3
    addi x6, x0, 1
    li x29, 1
    bne x5, x6, fail
    {op} x7, mcycle, {imm}
    addi x8, x0, 5
    {op} x9, cycle, {imm}
    li x29, 2
    bgeu x7, x9, fail
""")))
    t.append(DirectedTest("csr_cycle_monotonic", ("csrrs",), _wrap("""\
    csrr x3, cycle
    li x1, 1000
    li x2, 7
    div x1, x1, x2
    csrr x4, mcycle
    li x29, 1
    bgeu x3, x4, fail
    csrr x5, instret
    csrr x6, minstret
    addi x5, x5, 1
    li x29, 2
    bne x5, x6, fail
""")))
    t.append(DirectedTest("dep_chain", ("addi", "add"), _wrap(
        "    li x1, 0\n" + "    addi x1, x1, 3\n" * 40 + "    add x1, x1, x1\n" + _check(1, "x1", 240))))
    t.append(DirectedTest("x0_writes", ("addi", "lui", "ld", "mul", "jal"), _wrap("""\
    addi x0, x0, 5
    lui x0, 0x12345
    ld x0, 0(x31)
    li x1, 9
    mul x0, x1, x1
    jal x0, next
next:
    add x3, x0, x0
""" + _check(1, "x3", 0) + _check(2, "x0", 0))))
    t.append(DirectedTest("store_load_overlap", ("sd", "sw", "sb", "ld", "lw", "lbu"), _wrap("""\
    li x1, 0x1122334455667788
    sd x1, 64(x31)
    ld x3, 64(x31)
""" + _check(1, "x3", 0x1122334455667788) + """\
    li x2, -1
    sw x2, 68(x31)
    ld x3, 64(x31)
""" + _check(2, "x3", 0xFFFFFFFF55667788) + """\
    sb x0, 71(x31)
    lbu x3, 71(x31)
""" + _check(3, "x3", 0) + """\
    lw x3, 68(x31)
""" + _check(4, "x3", 0x00FFFFFF))))
    t.append(DirectedTest("loop_sum", ("addi", "add", "bne", "blt"), _wrap("""\
    li x1, 0
    li x2, 1
    li x5, 101
loop:
    add x1, x1, x2
    addi x2, x2, 1
    bne x2, x5, loop
""" + _check(1, "x1", 5050))))
    t.append(DirectedTest("fibonacci", ("add", "mv", "bltu"), _wrap("""\
    li x1, 0
    li x2, 1
    li x6, 20
    li x7, 0
fib:
    add x3, x1, x2
    mv x1, x2
    mv x2, x3
    addi x7, x7, 1
    bltu x7, x6, fib
""" + _check(1, "x1", 6765))))
    t.append(DirectedTest("factorial_muldiv", ("mul", "div", "rem"), _wrap("""\
    li x1, 1
    li x2, 1
    li x5, 11
fact:
    mul x1, x1, x2
    addi x2, x2, 1
    blt x2, x5, fact
""" + _check(1, "x1", 3628800) + """\
    li x6, 720
    div x3, x1, x6
""" + _check(2, "x3", 5040) + """\
    li x6, 7
    rem x3, x1, x6
""" + _check(3, "x3", 0))))
    t.append(DirectedTest("memcpy_checksum", ("ld", "sd", "add", "bne"), _wrap("""\
    li x1, 0
    li x2, 16
    addi x5, x31, 256
init:
    slli x6, x1, 3
    add x7, x5, x6
    mul x8, x1, x1
    sd x8, 0(x7)
    addi x1, x1, 1
    bne x1, x2, init
    li x1, 0
    li x9, 0
    addi x10, x31, 512
copy:
    slli x6, x1, 3
    add x7, x5, x6
    ld x8, 0(x7)
    add x11, x10, x6
    sd x8, 0(x11)
    ld x12, 0(x11)
    add x9, x9, x12
    addi x1, x1, 1
    bne x1, x2, copy
""" + _check(1, "x9", sum(i * i for i in range(16))))))
    t.append(DirectedTest("call_return", ("jal", "jalr"), _wrap("""\
    li x10, 5
    jal ra, square
    mv x11, x10
    jal ra, square
""" + _check(1, "x10", 625) + _check(2, "x11", 25) + """\
    j pass
square:
    mul x10, x10, x10
    jr ra
""")))
    t.append(DirectedTest("bubble_sort", ("ld", "sd", "bge", "blt"), _wrap("""\
    addi x5, x31, 128
    li x6, 93
    sd x6, 0(x5)
    li x6, -4
    sd x6, 8(x5)
    li x6, 17
    sd x6, 16(x5)
    li x6, 0
    sd x6, 24(x5)
    li x6, 1000
    sd x6, 32(x5)
    li x6, -70
    sd x6, 40(x5)
    li x6, 17
    sd x6, 48(x5)
    li x6, 5
    sd x6, 56(x5)
    li x7, 7
outer:
    li x8, 0
    mv x9, x5
inner:
    ld x10, 0(x9)
    ld x11, 8(x9)
    bge x11, x10, noswap
    sd x11, 0(x9)
    sd x10, 8(x9)
noswap:
    addi x9, x9, 8
    addi x8, x8, 1
    blt x8, x7, inner
    addi x7, x7, -1
    bnez x7, outer
    li x29, 1
    li x8, 0
    mv x9, x5
    li x7, 7
check:
    ld x10, 0(x9)
    ld x11, 8(x9)
    blt x11, x10, fail
    addi x9, x9, 8
    addi x8, x8, 1
    blt x8, x7, check
    ld x3, 0(x5)
""" + _check(2, "x3", -70 & ((1 << 64) - 1)))))
    t.append(DirectedTest("div_edge_cases", ("div", "divu", "rem", "remu", "divw", "remw"), _wrap("""\
    li x1, 0x8000000000000000
    li x2, -1
    div x3, x1, x2
""" + _check(1, "x3", 1 << 63) + """\
    rem x3, x1, x2
""" + _check(2, "x3", 0) + """\
    divu x3, x1, x0
""" + _check(3, "x3", (1 << 64) - 1) + """\
    remu x3, x1, x0
""" + _check(4, "x3", 1 << 63) + """\
    li x1, -2147483648
    divw x3, x1, x2
""" + _check(5, "x3", 0xFFFFFFFF80000000) + """\
    remw x3, x1, x2
""" + _check(6, "x3", 0))))
    return t


def directed_suite() -> list[DirectedTest]:
    tests = [_vector_test(op) for op in VECTORS]
    tests += _custom_tests()
    return tests


def covered_ops(tests=None) -> set:
    """Mnemonics that appear as real instructions in the assembled suite."""
    from ..isa.encoding import decode

    ops = set()
    for t in tests or directed_suite():
        prog = t.assemble()
        addr, code = prog.chunks[0]
        for i in range(0, len(code), 4):
            try:
                ops.add(decode(int.from_bytes(code[i:i + 4], "little"), addr + i).op)
            except ValueError:
                pass
    return ops


def run_directed(config=None, tests=None, max_cycles: int = 200_000) -> list:
    """Co-simulate every directed test; returns [(DirectedTest, RunResult)] in suite order."""
    from ..core.config import CoreConfig
    from .loaders import LoadedProgram
    from .runner import RunSpec, simulate

    config = config or CoreConfig()
    out = []
    for t in tests or directed_suite():
        p = t.assemble()
        spec = RunSpec(program=LoadedProgram(p.image(), p.entry, p.symbols), config=config, max_cycles=max_cycles)
        out.append((t, simulate(spec)))
    return out
