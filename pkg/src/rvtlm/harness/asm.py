"""A small two-pass RV64IM assembler for directed tests and examples.

Supported: every op in the instruction table, labels, ``#`` comments,
pseudo-ops ``nop li la mv j jr beqz bnez csrr``, and directives
``.org ADDR``, ``.equ NAME, VALUE``, ``.byte/.half/.word/.dword V[, V...]``, ``.align N``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..isa.encoding import CSR_NUMBERS, MEM_WIDTH, OPS, _TABLE, encode, sext
from ..isa.memory import MemoryImage

ABI = "zero ra sp gp tp t0 t1 t2 s0 s1 a0 a1 a2 a3 a4 a5 a6 a7 s2 s3 s4 s5 s6 s7 s8 s9 s10 s11 t3 t4 t5 t6".split()
REGS = {f"x{i}": i for i in range(32)} | {n: i for i, n in enumerate(ABI)} | {"fp": 8}

_MEMOP = re.compile(r"^(.*)\((\w+)\)$")


class AsmError(ValueError):
    def __init__(self, msg, lineno=None):
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno


@dataclass
class Program:
    chunks: list = field(default_factory=list)    # (addr, bytes)
    symbols: dict = field(default_factory=dict)
    entry: int = 0

    def image(self, mem: MemoryImage | None = None) -> MemoryImage:
        mem = mem or MemoryImage()
        for addr, data in self.chunks:
            mem.write_bytes(addr, data)
        return mem

    def words(self) -> list[int]:
        out = []
        for _, data in self.chunks:
            out += [int.from_bytes(data[i:i + 4], "little") for i in range(0, len(data) - 3, 4)]
        return out


def _fence_set(tok, lineno):
    tok = tok.strip()
    if not tok or any(c not in "iorw" for c in tok):
        raise AsmError(f"bad fence set {tok!r}", lineno)
    return sum(bit for c, bit in zip("iorw", (8, 4, 2, 1)) if c in tok)


def _li_seq(rd: int, v: int) -> list[tuple]:
    v = sext(v, 64)
    if -2048 <= v < 2048:
        return [("addi", rd, 0, 0, v)]
    if -(1 << 31) <= v < (1 << 31):
        lo = sext(v & 0xFFF, 12)
        hi = ((v - lo) >> 12) & 0xFFFFF     # addiw wraps, so 0x7FFFFxxx works too
        seq = [("lui", rd, 0, 0, hi << 12)]
        if lo:
            seq.append(("addiw", rd, rd, 0, lo))
        return seq
    lo = sext(v & 0xFFF, 12)
    hi = (v - lo) >> 12
    seq = _li_seq(rd, hi) + [("slli", rd, rd, 0, 12)]
    if lo:
        seq.append(("addi", rd, rd, 0, lo))
    return seq


def _u_imm(v: int) -> int:
    """lui/auipc operand as written (20-bit field) -> encoder value."""
    return sext((v & 0xFFFFF) << 12, 32) & 0xFFFFF000


class _Assembler:
    def __init__(self, origin: int):
        self.origin = origin
        self.symbols: dict[str, int] = {}   # layout from the previous pass
        self.cur: dict[str, int] = {}       # symbols defined so far in this pass

    def reg(self, tok, lineno):
        tok = tok.strip()
        if tok not in REGS:
            raise AsmError(f"bad register {tok!r}", lineno)
        return REGS[tok]

    def value(self, tok, lineno, pc=None, final=True):
        tok = tok.strip()
        if tok in self.cur:
            return self.cur[tok]
        if tok in self.symbols:
            return self.symbols[tok]
        try:
            return int(tok, 0)
        except ValueError:
            pass
        m = re.fullmatch(r"(%hi|%lo)\((\w+)\)", tok)
        if m:
            v = self.value(m.group(2), lineno, pc, final)
            lo = sext(v & 0xFFF, 12)
            return ((v - lo) >> 12) & 0xFFFFF if m.group(1) == "%hi" else lo
        if not final:
            return 0
        raise AsmError(f"undefined symbol or bad number {tok!r}", lineno)

    def expand(self, op, args, pc, lineno, final):
        """Return a list of (op, rd, rs1, rs2, imm) for one source statement."""
        R = lambda i: self.reg(args[i], lineno)  # noqa: E731
        V = lambda i: self.value(args[i], lineno, pc, final)  # noqa: E731

        def target(i):
            # a bare number is already a pc-relative offset; symbols are absolute addresses
            if re.fullmatch(r"[+-]?(0x[0-9a-fA-F]+|\d+)", args[i].strip()):
                return int(args[i].strip(), 0)
            return V(i) - pc if final else 0

        def need(n):
            if len(args) != n:
                raise AsmError(f"{op} expects {n} operands, got {len(args)}", lineno)

        if op == "nop":
            return [("addi", 0, 0, 0, 0)]
        if op == "li":
            need(2)
            return _li_seq(R(0), V(1)) if final else _li_seq(R(0), self.value(args[1], lineno, pc, False) or 0)
        if op == "la":
            need(2)
            off = (V(1) - pc) if final else 0
            lo = sext(off & 0xFFF, 12)
            hi = (off - lo) & 0xFFFFF000
            return [("auipc", R(0), 0, 0, sext(hi, 32) & 0xFFFFF000), ("addi", R(0), R(0), 0, lo)]
        if op == "mv":
            need(2)
            return [("addi", R(0), R(1), 0, 0)]
        if op == "j":
            need(1)
            return [("jal", 0, 0, 0, target(0))]
        if op == "jr":
            need(1)
            return [("jalr", 0, R(0), 0, 0)]
        if op in ("beqz", "bnez"):
            need(2)
            return [("beq" if op == "beqz" else "bne", 0, R(0), 0, target(1))]
        if op == "csrr":
            need(2)
            return [("csrrs", R(0), 0, 0, self._csr(args[1], lineno))]
        if op not in _TABLE:
            raise AsmError(f"unknown instruction {op!r}", lineno)
        fmt = _TABLE[op][0]
        if fmt == "R":
            need(3)
            return [(op, R(0), R(1), R(2), 0)]
        if fmt in ("I", "IS", "ISW"):
            need(3)
            return [(op, R(0), R(1), 0, V(2))]
        if fmt in ("L", "S") or (fmt == "JR" and len(args) == 2):
            need(2)
            m = _MEMOP.match(args[1].strip())
            if not m:
                raise AsmError(f"{op}: expected offset(reg)", lineno)
            off = self.value(m.group(1) or "0", lineno, pc, final)
            base = self.reg(m.group(2), lineno)
            if fmt == "S":
                return [(op, 0, base, R(0), off)]
            return [(op, R(0), base, 0, off)]
        if fmt == "JR":
            need(3)
            return [(op, R(0), R(1), 0, V(2))]
        if fmt == "B":
            need(3)
            return [(op, 0, R(0), R(1), target(2))]
        if fmt == "U":
            need(2)
            return [(op, R(0), 0, 0, _u_imm(V(1)))]
        if fmt == "J":
            if len(args) == 1:
                return [(op, 1, 0, 0, target(0))]
            need(2)
            return [(op, R(0), 0, 0, target(1))]
        if fmt == "FENCE":
            if not args:
                return [("fence", 0, 0, 0, 0xFF)]
            need(2)
            return [("fence", 0, 0, 0, (_fence_set(args[0], lineno) << 4) | _fence_set(args[1], lineno))]
        # CSR / CSRI
        need(3)
        src = R(2) if fmt == "CSR" else V(2)
        return [(op, R(0), src, 0, self._csr(args[1], lineno))]

    def _csr(self, tok, lineno):
        tok = tok.strip()
        if tok in CSR_NUMBERS:
            return CSR_NUMBERS[tok]
        try:
            return int(tok, 0)
        except ValueError:
            raise AsmError(f"unknown CSR {tok!r}", lineno) from None

    def run(self, text: str, final: bool) -> Program:
        prog = Program(entry=self.origin)
        pc = self.origin
        cur_addr = pc
        cur = bytearray()

        def flush():
            nonlocal cur, cur_addr
            if cur:
                prog.chunks.append((cur_addr, bytes(cur)))
            cur = bytearray()
            cur_addr = pc

        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            while True:
                m = re.match(r"^([A-Za-z_.$][\w.$]*):\s*(.*)$", line)
                if not m:
                    break
                if m.group(1) in self.cur:
                    raise AsmError(f"duplicate label {m.group(1)!r}", lineno)
                self.cur[m.group(1)] = pc
                line = m.group(2)
            if not line:
                continue
            parts = line.split(None, 1)
            op = parts[0].lower()
            args = [a.strip() for a in parts[1].split(",")] if len(parts) > 1 else []
            if op == ".org":
                flush()
                pc = cur_addr = self.value(args[0], lineno)
                continue
            if op == ".equ":
                self.cur[args[0]] = self.value(args[1], lineno, pc, final)
                continue
            if op == ".align":
                n = 1 << self.value(args[0], lineno)
                while pc % n:
                    cur.append(0)
                    pc += 1
                continue
            if op in (".byte", ".half", ".word", ".dword"):
                width = {".byte": 1, ".half": 2, ".word": 4, ".dword": 8}[op]
                for a in args:
                    v = self.value(a, lineno, pc, final)
                    cur += (v & ((1 << (8 * width)) - 1)).to_bytes(width, "little")
                    pc += width
                continue
            if op.startswith("."):
                raise AsmError(f"unknown directive {op}", lineno)
            try:
                for fields in self.expand(op, args, pc, lineno, final):
                    word = encode(*fields) if final else 0
                    cur += word.to_bytes(4, "little")
                    pc += 4
            except AsmError:
                raise
            except ValueError as e:
                raise AsmError(str(e), lineno) from None
        flush()
        prog.symbols = dict(self.cur)
        prog.entry = self.cur.get("_start", self.origin)
        return prog

    def layout_pass(self, text: str) -> dict:
        self.cur = {}
        self.run(text, final=False)
        return self.cur


def assemble(text: str, origin: int = 0x8000_0000) -> Program:
    """Iterate layout passes until symbol addresses settle, then emit."""
    a = _Assembler(origin)
    for _ in range(16):
        layout = a.layout_pass(text)
        if layout == a.symbols:
            break
        a.symbols = layout
    else:
        raise AsmError("symbol layout did not converge")
    a.cur = {}
    prog = a.run(text, final=True)
    if prog.symbols != a.symbols:
        raise AsmError("symbol layout changed in the final pass")
    return prog


__all__ = ["assemble", "Program", "AsmError", "OPS", "MEM_WIDTH"]
