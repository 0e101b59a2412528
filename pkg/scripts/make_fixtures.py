"""Regenerate frozen test fixtures with an external RISC-V toolchain (clang + ld.lld).

Writes
  tests/data/clang_encodings.txt   "<asm>\t<hex word>" per line
  tests/data/minimal.elf           linked executable with one segment at 0x80000000
  tests/data/minimal.text.hex      the .text bytes of that executable (for byte comparison)

Only needed when the fixture set changes; the test suite reads the frozen files.
"""

import pathlib
import struct
import subprocess
import tempfile

DATA = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data"

ASM = """\
lui x1, 0x12345
lui x31, 0xfffff
auipc x2, 0x80000
auipc x5, 0x1
jal x1, 16
jal x0, -8
jal x5, 2048
jalr x1, 0(x2)
jalr x0, -4(x31)
beq x0, x0, 8
bne x1, x2, -16
blt x3, x4, 4094
bge x5, x6, -4096
bltu x7, x8, 12
bgeu x9, x10, -2
lb x1, 0(x2)
lh x3, -2(x4)
lw x2, 0(x1)
ld x5, 2040(x6)
lbu x7, -1(x8)
lhu x9, 2(x10)
lwu x11, -2048(x12)
sb x1, 0(x2)
sh x3, -2(x4)
sw x5, 2047(x6)
sd x7, -8(x8)
addi x1, x0, 5
addi x0, x0, 0
addi x31, x30, -2048
slti x1, x2, -1
sltiu x3, x4, 2047
xori x5, x6, -1
ori x7, x8, 0x7ff
andi x9, x10, 0x0f0
slli x1, x2, 63
srli x3, x4, 32
srai x5, x6, 1
add x3, x1, x2
sub x4, x5, x6
sll x7, x8, x9
slt x10, x11, x12
sltu x13, x14, x15
xor x16, x17, x18
srl x19, x20, x21
sra x22, x23, x24
or x25, x26, x27
and x28, x29, x30
addiw x1, x2, -1
slliw x3, x4, 31
srliw x5, x6, 7
sraiw x7, x8, 0
addw x1, x2, x3
subw x4, x5, x6
sllw x7, x8, x9
srlw x10, x11, x12
sraw x13, x14, x15
mul x1, x2, x3
mulh x4, x5, x6
mulhsu x7, x8, x9
mulhu x10, x11, x12
div x13, x14, x15
divu x16, x17, x18
rem x19, x20, x21
remu x22, x23, x24
mulw x25, x26, x27
divw x28, x29, x30
divuw x31, x1, x2
remw x3, x4, x5
remuw x6, x7, x8
fence iorw, iorw
csrrs x5, mcycle, x0
csrrs x6, minstret, x0
csrrc x7, cycle, x0
csrrsi x8, instret, 0
csrrci x9, mcycle, 0
"""

ELF_SRC = """\
.section .text
.globl _start
_start:
  addi x1, x0, 5
  addi x2, x1, 1
  la x30, tohost
  addi x28, x0, 1
  sd x28, 0(x30)
1: j 1b
.section .tohost, "aw"
.align 3
.globl tohost
tohost: .dword 0
"""


def assemble_words(lines):
    with tempfile.TemporaryDirectory() as tmp:
        src = pathlib.Path(tmp) / "a.s"
        obj = pathlib.Path(tmp) / "a.o"
        src.write_text(".option norvc\n" + "\n".join(lines) + "\n")
        subprocess.run(["clang", "--target=riscv64", "-march=rv64im", "-c", str(src), "-o", str(obj)],
                       check=True)
        blob = _text_section(obj.read_bytes())
    return [int.from_bytes(blob[i:i + 4], "little") for i in range(0, len(blob), 4)]


def _text_section(elf: bytes) -> bytes:
    shoff, = struct.unpack_from("<Q", elf, 0x28)
    shentsize, shnum, shstrndx = struct.unpack_from("<HHH", elf, 0x3A)
    sections = [struct.unpack_from("<IIQQQQIIQQ", elf, shoff + i * shentsize) for i in range(shnum)]
    strtab = sections[shstrndx]
    for s in sections:
        name_off = strtab[4] + s[0]
        name = elf[name_off:elf.index(b"\0", name_off)]
        if name == b".text":
            return elf[s[4]:s[4] + s[5]]
    raise RuntimeError("no .text")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    lines = [line for line in ASM.splitlines() if line.strip()]
    words = assemble_words(lines)
    assert len(words) == len(lines), (len(words), len(lines))
    with open(DATA / "clang_encodings.txt", "w") as f:
        for line, word in zip(lines, words):
            f.write(f"{line}\t{word:08x}\n")

    with tempfile.TemporaryDirectory() as tmp:
        src = pathlib.Path(tmp) / "m.s"
        obj = pathlib.Path(tmp) / "m.o"
        elf = pathlib.Path(tmp) / "m.elf"
        src.write_text(".option norvc\n" + ELF_SRC)
        subprocess.run(["clang", "--target=riscv64", "-march=rv64im", "-c", str(src), "-o", str(obj)], check=True)
        subprocess.run(["ld.lld", "-Ttext=0x80000000", "--section-start=.tohost=0x80001000", "-e", "_start",
                        str(obj), "-o", str(elf)], check=True)
        data = elf.read_bytes()
        (DATA / "minimal.elf").write_bytes(data)
        (DATA / "minimal.text.hex").write_text(_text_section(data).hex() + "\n")
    print(f"wrote {len(lines)} encodings and minimal.elf")


if __name__ == "__main__":
    main()
