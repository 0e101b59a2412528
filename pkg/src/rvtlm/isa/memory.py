"""Sparse little-endian memory image with 4 KiB pages."""

from __future__ import annotations

PAGE_BITS = 12
PAGE_SIZE = 1 << PAGE_BITS
PAGE_MASK = PAGE_SIZE - 1
_ADDR_MASK = (1 << 64) - 1


class MemoryImage:
    """Byte-addressable 64-bit address space.

    Unmapped bytes read as zero; writes allocate pages on demand. Accesses that
    straddle a page boundary are split byte-wise.
    """

    __slots__ = ("pages",)

    def __init__(self):
        self.pages: dict[int, bytearray] = {}

    def read(self, addr: int, width: int) -> int:
        addr &= _ADDR_MASK
        off = addr & PAGE_MASK
        if off + width <= PAGE_SIZE:
            page = self.pages.get(addr - off)
            if page is None:
                return 0
            return int.from_bytes(page[off:off + width], "little")
        return int.from_bytes(self.read_bytes(addr, width), "little")

    def write(self, addr: int, width: int, value: int) -> None:
        addr &= _ADDR_MASK
        data = (value & ((1 << (8 * width)) - 1)).to_bytes(width, "little")
        off = addr & PAGE_MASK
        if off + width <= PAGE_SIZE:
            base = addr - off
            page = self.pages.get(base)
            if page is None:
                page = self.pages[base] = bytearray(PAGE_SIZE)
            page[off:off + width] = data
        else:
            self.write_bytes(addr, data)

    def read_bytes(self, addr: int, n: int) -> bytes:
        out = bytearray(n)
        for i in range(n):
            a = (addr + i) & _ADDR_MASK
            page = self.pages.get(a & ~PAGE_MASK)
            if page is not None:
                out[i] = page[a & PAGE_MASK]
        return bytes(out)

    def write_bytes(self, addr: int, data: bytes) -> None:
        i = 0
        n = len(data)
        while i < n:
            a = (addr + i) & _ADDR_MASK
            off = a & PAGE_MASK
            chunk = min(n - i, PAGE_SIZE - off)
            base = a - off
            page = self.pages.get(base)
            if page is None:
                page = self.pages[base] = bytearray(PAGE_SIZE)
            page[off:off + chunk] = data[i:i + chunk]
            i += chunk

    def copy(self) -> "MemoryImage":
        m = MemoryImage()
        m.pages = {k: bytearray(v) for k, v in self.pages.items()}
        return m

    def same_contents(self, other: "MemoryImage") -> bool:
        """Compare contents, treating absent pages as all-zero."""
        zero = bytes(PAGE_SIZE)
        for base in set(self.pages) | set(other.pages):
            if bytes(self.pages.get(base, zero)) != bytes(other.pages.get(base, zero)):
                return False
        return True

    def diff(self, other: "MemoryImage", limit: int = 8) -> list[tuple[int, int, int]]:
        """First ``limit`` differing bytes as (addr, self_byte, other_byte)."""
        zero = bytes(PAGE_SIZE)
        out = []
        for base in sorted(set(self.pages) | set(other.pages)):
            a = self.pages.get(base, zero)
            b = other.pages.get(base, zero)
            if a == b:
                continue
            for i in range(PAGE_SIZE):
                if a[i] != b[i]:
                    out.append((base + i, a[i], b[i]))
                    if len(out) >= limit:
                        return out
        return out


def mem_read(mem: MemoryImage, addr: int, width: int) -> int:
    return mem.read(addr, width)


def mem_write(mem: MemoryImage, addr: int, width: int, value: int) -> None:
    mem.write(addr, width, value)
