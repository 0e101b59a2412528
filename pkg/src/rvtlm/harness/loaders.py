"""Program loaders: minimal ELF64 executables and ``.hex`` memory images.

``.hex`` grammar: one ``<hex-address>: <hex-bytes>`` record per line, bytes
placed little-endian from the address upward. Whitespace between byte pairs
is optional. ``#`` starts a comment.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field
from pathlib import Path

from ..isa.memory import MemoryImage

EM_RISCV = 243
PT_LOAD = 1
SHT_SYMTAB = 2


class LoadError(ValueError):
    pass


@dataclass
class LoadedProgram:
    mem: MemoryImage
    entry: int | None
    symbols: dict = field(default_factory=dict)

    @property
    def tohost(self) -> int | None:
        return self.symbols.get("tohost")


def _elf_symbols(data: bytes, shoff: int, shentsize: int, shnum: int) -> dict:
    syms = {}
    if not shoff or shentsize < 64:
        return syms
    sections = []
    for i in range(shnum):
        off = shoff + i * shentsize
        if off + 64 > len(data):
            return syms
        sections.append(struct.unpack_from("<IIQQQQIIQQ", data, off))
    for sh in sections:
        _, sh_type, _, _, offset, size, link, _, _, entsize = sh
        if sh_type != SHT_SYMTAB or entsize < 24 or link >= len(sections):
            continue
        str_off, str_size = sections[link][4], sections[link][5]
        strtab = data[str_off:str_off + str_size]
        for j in range(size // entsize):
            name_off, _, _, _, value, _ = struct.unpack_from("<IBBHQQ", data, offset + j * entsize)
            if name_off:
                end = strtab.find(b"\0", name_off)
                name = strtab[name_off:end if end >= 0 else None].decode("ascii", "replace")
                syms.setdefault(name, value)
    return syms


def load_elf(path) -> LoadedProgram:
    """Backdoor-load every PT_LOAD segment at its physical address; also read the symbol table."""
    data = Path(path).read_bytes()
    if len(data) < 64 or data[:4] != b"\x7fELF":
        raise LoadError(f"{path}: not an ELF file (bad magic)")
    if data[4] != 2:
        raise LoadError(f"{path}: not a 64-bit ELF (EI_CLASS={data[4]})")
    if data[5] != 1:
        raise LoadError(f"{path}: not little-endian (EI_DATA={data[5]})")
    (e_type, e_machine, _, e_entry, e_phoff, e_shoff, _, _, e_phentsize, e_phnum,
     e_shentsize, e_shnum, _) = struct.unpack_from("<HHIQQQIHHHHHH", data, 16)
    if e_machine != EM_RISCV:
        raise LoadError(f"{path}: machine type {e_machine} is not RISC-V ({EM_RISCV})")
    if e_type != 2:
        raise LoadError(f"{path}: not an executable (e_type={e_type})")
    mem = MemoryImage()
    loaded = 0
    for i in range(e_phnum):
        off = e_phoff + i * e_phentsize
        if off + 56 > len(data):
            raise LoadError(f"{path}: truncated program header table")
        p_type, _, p_offset, _, p_paddr, p_filesz, p_memsz, _ = struct.unpack_from("<IIQQQQQQ", data, off)
        if p_type != PT_LOAD:
            continue
        if p_offset + p_filesz > len(data) or p_filesz > p_memsz:
            raise LoadError(f"{path}: segment {i} extends past end of file")
        mem.write_bytes(p_paddr, data[p_offset:p_offset + p_filesz])
        if p_memsz > p_filesz:
            mem.write_bytes(p_paddr + p_filesz, bytes(p_memsz - p_filesz))
        loaded += 1
    if loaded == 0:
        raise LoadError(f"{path}: no loadable segments (empty program)")
    return LoadedProgram(mem, e_entry, _elf_symbols(data, e_shoff, e_shentsize, e_shnum))


def load_elf_minimal(path) -> tuple[MemoryImage, int]:
    prog = load_elf(path)
    return prog.mem, prog.entry


def parse_hex(text: str, name: str = "<hex>") -> MemoryImage:
    mem = MemoryImage()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        addr_s, sep, rest = line.partition(":")
        if not sep:
            raise LoadError(f"{name}:{lineno}: expected '<address>: <bytes>'")
        try:
            addr = int(addr_s.strip(), 16)
        except ValueError:
            raise LoadError(f"{name}:{lineno}: bad address {addr_s.strip()!r}") from None
        digits = "".join(rest.split())
        if len(digits) % 2:
            raise LoadError(f"{name}:{lineno}: odd number of hex digits")
        try:
            payload = bytes.fromhex(digits)
        except ValueError:
            raise LoadError(f"{name}:{lineno}: invalid hex byte data") from None
        mem.write_bytes(addr, payload)
    return mem


def load_hex(path) -> MemoryImage:
    return parse_hex(Path(path).read_text(), str(path))


def dump_hex(mem: MemoryImage, bytes_per_line: int = 16) -> str:
    """Serialise all non-zero 16-byte rows of an image in ``.hex`` format."""
    out = []
    for base in sorted(mem.pages):
        buf = mem.pages[base]
        for off in range(0, len(buf), bytes_per_line):
            row = buf[off:off + bytes_per_line]
            if any(row):
                out.append(f"{base + off:08x}: " + " ".join(f"{b:02x}" for b in row))
    return "\n".join(out) + ("\n" if out else "")


def words_to_hex(words, base: int) -> str:
    lines = [f"{base + 4 * i:08x}: " + " ".join(f"{b:02x}" for b in w.to_bytes(4, "little"))
             for i, w in enumerate(words)]
    return "\n".join(lines) + "\n"


def load_program(path, fmt: str | None = None) -> LoadedProgram:
    """Load ``path`` as elf, hex or asm (by ``fmt`` or, failing that, by content/extension)."""
    p = Path(path)
    if fmt is None:
        head = p.read_bytes()[:4]
        if head == b"\x7fELF":
            fmt = "elf"
        elif p.suffix in (".s", ".S", ".asm"):
            fmt = "asm"
        else:
            fmt = "hex"
    if fmt == "elf":
        return load_elf(p)
    if fmt == "hex":
        mem = load_hex(p)
        if not mem.pages:
            raise LoadError(f"{p}: empty memory image")
        return LoadedProgram(mem, None)   # entry comes from CoreConfig.reset_pc
    if fmt == "asm":
        from .asm import assemble

        prog = assemble(p.read_text())
        return LoadedProgram(prog.image(), prog.entry, dict(prog.symbols))
    raise LoadError(f"unknown program format {fmt!r}")
