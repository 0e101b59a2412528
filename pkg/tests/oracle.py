"""Naive single-function RV64IM interpreter used only as a test oracle.

Written from the instruction-set manual, sharing no code with the package:
decoding is done by bit slicing in one if/elif chain per opcode.
"""

MASK = 0xFFFFFFFFFFFFFFFF


def to_signed(x, bits=64):
    x &= (1 << bits) - 1
    return x - (1 << bits) if x >> (bits - 1) else x


def sx32(x):
    return to_signed(x, 32) & MASK


def trunc_div(a, b):
    """Integer division rounding toward zero."""
    q = abs(a) // abs(b)
    return q if (a < 0) == (b < 0) else -q


def m_op(f3, a, b, word):
    bits = 32 if word else 64
    ua, ub = a & ((1 << bits) - 1), b & ((1 << bits) - 1)
    sa, sb = to_signed(ua, bits), to_signed(ub, bits)
    if f3 == 0:
        r = sa * sb
    elif f3 == 1:
        r = (sa * sb) >> 64
    elif f3 == 2:
        r = (sa * ub) >> 64
    elif f3 == 3:
        r = (ua * ub) >> 64
    elif f3 == 4:
        if sb == 0:
            r = -1
        elif sa == -(1 << (bits - 1)) and sb == -1:
            r = sa
        else:
            r = trunc_div(sa, sb)
    elif f3 == 5:
        r = (1 << bits) - 1 if ub == 0 else ua // ub
        if word:
            r = to_signed(r, 32)
    elif f3 == 6:
        if sb == 0:
            r = sa
        elif sa == -(1 << (bits - 1)) and sb == -1:
            r = 0
        else:
            r = sa - sb * trunc_div(sa, sb)
    else:
        r = ua if ub == 0 else ua % ub
        if word:
            r = to_signed(r, 32)
    return sx32(r) if word else r & MASK


class Oracle:
    def __init__(self, mem: dict, pc: int):
        self.mem = mem          # byte address -> byte
        self.x = [0] * 32
        self.pc = pc
        self.instret = 0

    def ld(self, addr, n):
        return sum(self.mem.get((addr + i) & MASK, 0) << (8 * i) for i in range(n))

    def st(self, addr, n, v):
        for i in range(n):
            self.mem[(addr + i) & MASK] = (v >> (8 * i)) & 0xFF

    def step(self):
        """Execute one instruction. Returns (store or None). Raises RuntimeError on illegal."""
        pc = self.pc
        ins = self.ld(pc, 4)
        opc = ins & 0x7F
        rd = (ins >> 7) & 31
        f3 = (ins >> 12) & 7
        r1 = (ins >> 15) & 31
        r2 = (ins >> 20) & 31
        f7 = ins >> 25
        a = self.x[r1]
        b = self.x[r2]
        imm_i = to_signed(ins >> 20, 12)
        imm_s = to_signed(((ins >> 25) << 5) | ((ins >> 7) & 31), 12)
        imm_b = to_signed(((ins >> 31) << 12) | (((ins >> 7) & 1) << 11) | (((ins >> 25) & 63) << 5)
                          | (((ins >> 8) & 15) << 1), 13)
        imm_u = to_signed(ins & 0xFFFFF000, 32)
        imm_j = to_signed(((ins >> 31) << 20) | (((ins >> 12) & 255) << 12) | (((ins >> 20) & 1) << 11)
                          | (((ins >> 21) & 1023) << 1), 21)
        nxt = pc + 4
        val = None
        store = None
        if opc == 0x37:
            val = imm_u
        elif opc == 0x17:
            val = pc + imm_u
        elif opc == 0x6F:
            val = pc + 4
            nxt = pc + imm_j
        elif opc == 0x67 and f3 == 0:
            val = pc + 4
            nxt = (a + imm_i) & ~1
        elif opc == 0x63:
            sa, sb = to_signed(a), to_signed(b)
            cond = {0: a == b, 1: a != b, 4: sa < sb, 5: sa >= sb, 6: a < b, 7: a >= b}.get(f3)
            if cond is None:
                raise RuntimeError("illegal branch")
            if cond:
                nxt = pc + imm_b
        elif opc == 0x03:
            addr = (a + imm_i) & MASK
            n = {0: 1, 1: 2, 2: 4, 3: 8, 4: 1, 5: 2, 6: 4}.get(f3)
            if n is None:
                raise RuntimeError("illegal load")
            if addr % n:
                raise RuntimeError("misaligned load")
            v = self.ld(addr, n)
            val = v if f3 >= 4 or n == 8 else to_signed(v, 8 * n)
        elif opc == 0x23:
            addr = (a + imm_s) & MASK
            if f3 > 3:
                raise RuntimeError("illegal store")
            n = 1 << f3
            if addr % n:
                raise RuntimeError("misaligned store")
            store = (addr, n, b & ((1 << (8 * n)) - 1))
            self.st(addr, n, b)
        elif opc == 0x13:
            sh = (ins >> 20) & 63
            top = ins >> 26
            if f3 == 0:
                val = a + imm_i
            elif f3 == 2:
                val = int(to_signed(a) < imm_i)
            elif f3 == 3:
                val = int(a < (imm_i & MASK))
            elif f3 == 4:
                val = a ^ (imm_i & MASK)
            elif f3 == 6:
                val = a | (imm_i & MASK)
            elif f3 == 7:
                val = a & (imm_i & MASK)
            elif f3 == 1 and top == 0:
                val = a << sh
            elif f3 == 5 and top == 0:
                val = a >> sh
            elif f3 == 5 and top == 0x10:
                val = to_signed(a) >> sh
            else:
                raise RuntimeError("illegal op-imm")
        elif opc == 0x1B:
            sh = (ins >> 20) & 31
            if f3 == 0:
                val = sx32(a + imm_i)
            elif f3 == 1 and f7 == 0:
                val = sx32(a << sh)
            elif f3 == 5 and f7 == 0:
                val = sx32((a & 0xFFFFFFFF) >> sh)
            elif f3 == 5 and f7 == 0x20:
                val = sx32(to_signed(a, 32) >> sh)
            else:
                raise RuntimeError("illegal op-imm-32")
        elif opc == 0x33:
            if f7 == 1:
                val = m_op(f3, a, b, False)
            elif f7 == 0:
                val = [a + b, a << (b & 63), int(to_signed(a) < to_signed(b)), int(a < b),
                       a ^ b, a >> (b & 63), a | b, a & b][f3]
            elif f7 == 0x20 and f3 == 0:
                val = a - b
            elif f7 == 0x20 and f3 == 5:
                val = to_signed(a) >> (b & 63)
            else:
                raise RuntimeError("illegal op")
        elif opc == 0x3B:
            s = b & 31
            if f7 == 1 and f3 in (0, 4, 5, 6, 7):
                val = m_op(f3, a, b, True)
            elif f7 == 0 and f3 == 0:
                val = sx32(a + b)
            elif f7 == 0x20 and f3 == 0:
                val = sx32(a - b)
            elif f7 == 0 and f3 == 1:
                val = sx32(a << s)
            elif f7 == 0 and f3 == 5:
                val = sx32((a & 0xFFFFFFFF) >> s)
            elif f7 == 0x20 and f3 == 5:
                val = sx32(to_signed(a, 32) >> s)
            else:
                raise RuntimeError("illegal op-32")
        elif opc == 0x0F and f3 == 0:
            pass
        elif opc == 0x73 and f3 in (2, 3, 6, 7) and r1 == 0:
            csr = ins >> 20
            if csr in (0xB02, 0xC02):
                val = self.instret
            elif csr in (0xB00, 0xC00):
                val = self.instret   # timing CSR: any value; callers must not depend on it
            else:
                raise RuntimeError("illegal csr")
        else:
            raise RuntimeError(f"illegal instruction 0x{ins:08x}")
        if nxt % 4:
            raise RuntimeError("misaligned target")
        if val is not None and rd:
            self.x[rd] = val & MASK
        self.pc = nxt & MASK
        self.instret += 1
        return store

    def run(self, tohost, max_steps=100_000):
        for _ in range(max_steps):
            st = self.step()
            if st is not None and st[0] == tohost:
                return st[2]
        raise RuntimeError("no tohost write")


def oracle_from_image(mem_image, pc):
    """Flatten a package MemoryImage into the oracle's byte dict."""
    flat = {}
    for base, page in mem_image.pages.items():
        for i, byte in enumerate(page):
            if byte:
                flat[base + i] = byte
    return Oracle(flat, pc)
