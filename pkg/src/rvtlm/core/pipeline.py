"""Transaction-level model of a superscalar out-of-order RV64IM core.

Stages and the phase they run in (see ``Core.propose``/``Core.update``)::

    Propose:  execute -> issue -> rename/dispatch -> fetch     (downstream first)
    Update:   commit (retire, drain stores, redirect/flush) -> LSU accept -> credit ticks

Fetch talks to rename/dispatch through the ``fe_be`` credit channel and
dispatch hands memory ops to the load/store unit through ``be_lsu``. Renaming
is ROB-based: results live in the micro-op and ``rename_map`` points at the
youngest in-flight writer of each architectural register.

Memory ordering is conservative: stores write memory only at commit, and a
load executes only when every older uncommitted store has a known,
non-overlapping address. Mispredictions are recovered when the branch
commits.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..credit import STALLED, CreditChannel
from ..isa.encoding import CSR_NAMES, DecodedInstr, IllegalInstruction, Kind, StepFault, decode, disasm
from ..isa.golden import execute
from ..isa.memory import MemoryImage
from ..isa.semantics import M64, extend_load
from ..kernel import HaltKind, HaltReason
from ..stats import PerfCounters
from .config import CoreConfig
from .predictor import make_predictor

WAITING, READY, EXECUTING, DONE = 0, 1, 2, 3
STATUS_NAMES = ("Waiting", "Ready", "Executing", "Done")

# Seeded bugs used to check that co-verification catches microarchitectural errors.
MUTATIONS = {
    "drop_forwarding": "woken consumers read the architectural register file instead of the broadcast result",
    "skip_rename": "rename map is not updated for the second and later ops of a dispatch group",
    "ooo_commit": "commit may retire a completed op past a not-yet-completed head",
    "early_store_drain": "stores write memory when their address/data are computed instead of at commit",
}

_ALU, _MUL, _DIV, _LOAD, _STORE = Kind.ALU, Kind.MUL, Kind.DIV, Kind.LOAD, Kind.STORE
_BRANCH, _JAL, _JALR, _SYSTEM = Kind.BRANCH, Kind.JAL, Kind.JALR, Kind.SYSTEM
_CONTROL = frozenset((_BRANCH, _JAL, _JALR))
_MEM = frozenset((_LOAD, _STORE))
_CYCLE_CSRS = frozenset(k for k, v in CSR_NAMES.items() if v in ("mcycle", "cycle"))


class MicroOp:
    """One instruction in flight: the transaction passed from stage to stage."""

    __slots__ = ("instr", "seq", "src1", "src2", "src1_tag", "src2_tag", "pending", "status",
                 "result", "predicted_next_pc", "actual_next_pc", "fault", "waiters", "done_cycle",
                 "dispatch_cycle", "sq", "prev_store", "blocked_cycle", "addr")

    def __init__(self, instr: DecodedInstr, predicted_next_pc: int, fault=None):
        self.instr = instr
        self.seq = -1
        self.src1 = 0
        self.src2 = 0
        self.src1_tag = None
        self.src2_tag = None
        self.pending = 0
        self.status = WAITING
        self.result = None
        self.predicted_next_pc = predicted_next_pc
        self.actual_next_pc = None
        self.fault = fault
        self.waiters = None
        self.done_cycle = -1
        self.dispatch_cycle = -1
        self.sq = None
        self.prev_store = None
        self.blocked_cycle = -1
        self.addr = None

    @property
    def rob_idx(self) -> int:
        return self.seq

    def __repr__(self) -> str:
        return f"<uop #{self.seq} {self.instr} {STATUS_NAMES[self.status]}>"


class StoreQueueEntry:
    __slots__ = ("rob_idx", "addr", "width", "value", "committed")

    def __init__(self, rob_idx: int):
        self.rob_idx = rob_idx
        self.addr = None
        self.width = 0
        self.value = 0
        self.committed = False


@dataclass(slots=True)
class CommitRecord:
    cycle: int
    pc: int
    raw: int
    instr: DecodedInstr
    rd: tuple | None          # (index, value) for writes to x1..x31
    store: tuple | None       # (addr, width, value)
    next_pc: int

    def trace_line(self) -> str:
        """Tab-separated: cycle, pc, raw, disasm, rd write, memory write, next pc ('-' if absent)."""
        rd = f"x{self.rd[0]}=0x{self.rd[1]:016x}" if self.rd else "-"
        st = f"mem{self.store[1]} 0x{self.store[0]:016x}=0x{self.store[2]:x}" if self.store else "-"
        return f"{self.cycle}\t0x{self.pc:016x}\t0x{self.raw:08x}\t{disasm(self.instr)}\t{rd}\t{st}\t0x{self.next_pc:016x}"


def _illegal_placeholder(raw: int, pc: int) -> DecodedInstr:
    return DecodedInstr(pc, raw, Kind.SYSTEM, "illegal")


class Core:
    """Kernel component modelling the whole core. Register one per kernel."""

    def __init__(self, config: CoreConfig, mem: MemoryImage, counters: PerfCounters | None = None,
                 mutations=()):
        unknown = set(mutations) - set(MUTATIONS)
        if unknown:
            raise ValueError(f"unknown mutation(s): {sorted(unknown)}")
        self.cfg = config
        self.mem = mem
        self.counters = counters or PerfCounters()
        self.bins = self.counters.coverage.bins
        self.mutations = frozenset(mutations)
        self._drop_fwd = "drop_forwarding" in self.mutations
        self._skip_rename = "skip_rename" in self.mutations
        self._ooo_commit = "ooo_commit" in self.mutations
        self._early_drain = "early_store_drain" in self.mutations

        self.arch_regs = [0] * 32
        self.rename_map: list[MicroOp | None] = [None] * 32
        self.rob: list[MicroOp] = []
        self.rob_head = 0   # index of the oldest entry in self.rob (entries before it are retired)
        self.fe_be = CreditChannel(config.frontend_backend_credits, config.credit_return_latency, "fe_be")
        self.be_lsu = CreditChannel(config.backend_lsu_credits, config.credit_return_latency, "be_lsu")
        self.lsq_count = 0
        self.lsu_queue: list[MicroOp] = []
        self.store_queue: list[StoreQueueEntry] = []
        self.ready: list[MicroOp] = []
        self.completions: dict[int, list[MicroOp]] = {}
        self.mul_busy_until = [0] * config.num_mul_units
        self.divs_in_flight = 0
        self.predictor = make_predictor(config.predictor)
        self.fetch_pc = config.reset_pc
        self.fetch_halted = False
        self.next_seq = 0
        self.retired = 0
        self.cycle = 0
        self.listeners = []
        self.keep_records = True   # build CommitRecords even with no listener (perf runs turn this off)
        self.last_records: list[CommitRecord] = []
        self._decode_cache: dict = {}
        self._prev_sq = None
        self._fetch_stall = False
        self._dispatch_block = None
        self._pending_halt: HaltReason | None = None
        self._emit = True

    # -- kernel component interface ------------------------------------------------

    def propose(self, kernel) -> None:
        now = kernel.cycle
        self.cycle = now
        self.execute_stage(now)
        self.issue_stage(now)
        self.rename_dispatch_stage(now)
        self.fetch_stage(now)

    def update(self, kernel) -> None:
        now = kernel.cycle
        records = self.commit_stage(now)
        be_lsu = self.be_lsu
        if be_lsu.fifo:
            lq = self.lsu_queue
            while be_lsu.fifo:
                lq.append(be_lsu.pop())
        self.fe_be.tick()
        be_lsu.tick()
        c = self.counters
        c.cycles = now + 1
        c.retired = self.retired
        self.last_records = records
        if records:
            kernel.note_commit(len(records))
            if len(records) >= 2:
                self.bins["dual_issue_cycle"] += 1
            for cb in self.listeners:
                cb(records, self, kernel)
        else:
            c.stalls[self._stall_reason(now)] += 1
        if self._pending_halt is not None:
            kernel.halt(self._pending_halt)

    # -- stages ------------------------------------------------------------------------

    def fetch_stage(self, now: int) -> None:
        if self.fetch_halted:
            self._fetch_stall = False
            return
        ch = self.fe_be
        mem = self.mem
        pages = mem.pages
        cache = self._decode_cache
        pred = self.predictor
        pc = self.fetch_pc
        stalled = False
        for _ in range(self.cfg.fetch_width):
            off = pc & 0xFFF
            if off <= 0xFFC:
                page = pages.get(pc - off)
                raw = int.from_bytes(page[off:off + 4], "little") if page is not None else 0
            else:
                raw = mem.read(pc, 4)
            key = (raw, pc)
            instr = cache.get(key)
            if instr is None:
                try:
                    instr = decode(raw, pc)
                except IllegalInstruction as e:
                    instr = e
                cache[key] = instr
            seq_pc = (pc + 4) & M64
            if isinstance(instr, StepFault):
                u = MicroOp(_illegal_placeholder(raw, pc), seq_pc, instr)
                npc = seq_pc
            else:
                npc = pred.predict(pc, instr) if instr.kind in _CONTROL else seq_pc
                u = MicroOp(instr, npc)
            if ch.try_send(u) is STALLED:
                stalled = True
                self.bins["credit_exhausted[fe_be]"] += 1
                break
            pc = npc
            if npc != seq_pc:
                break
        self.fetch_pc = pc
        self._fetch_stall = stalled

    def rename_dispatch_stage(self, now: int) -> None:
        fifo = self.fe_be.fifo
        block = None
        if fifo:
            cfg = self.cfg
            rob = self.rob
            rob_cap = cfg.rob_entries
            rename_map = self.rename_map
            arch = self.arch_regs
            ready = self.ready
            skip_rename = self._skip_rename
            n = 0
            while n < cfg.issue_width and fifo:
                u = fifo[0]
                if len(rob) - self.rob_head >= rob_cap:
                    block = "rob"
                    self.bins["rob_full_event"] += 1
                    break
                instr = u.instr
                kind = instr.kind
                is_mem = kind is _LOAD or kind is _STORE
                if is_mem and u.fault is None:
                    if self.lsq_count >= cfg.lsq_entries:
                        block = "lsq"
                        break
                    if self.be_lsu.try_send(u) is STALLED:
                        block = "lsq"
                        self.bins["credit_exhausted[be_lsu]"] += 1
                        break
                    self.lsq_count += 1
                self.fe_be.pop()
                seq = self.next_seq
                self.next_seq = seq + 1
                u.seq = seq
                u.dispatch_cycle = now
                rob.append(u)
                n += 1
                if u.fault is not None:
                    u.status = DONE
                    self._prev_sq = None
                    continue
                pending = 0
                if instr.uses_rs1:
                    r = instr.rs1
                    if r:
                        p = rename_map[r]
                        if p is None:
                            u.src1 = arch[r]
                        elif p.status == DONE:
                            u.src1 = p.result
                        else:
                            if p.waiters is None:
                                p.waiters = [(u, 1)]
                            else:
                                p.waiters.append((u, 1))
                            u.src1_tag = p.seq
                            pending = 1
                if instr.uses_rs2:
                    r = instr.rs2
                    if r:
                        p = rename_map[r]
                        if p is None:
                            u.src2 = arch[r]
                        elif p.status == DONE:
                            u.src2 = p.result
                        else:
                            if p.waiters is None:
                                p.waiters = [(u, 2)]
                            else:
                                p.waiters.append((u, 2))
                            u.src2_tag = p.seq
                            pending += 1
                u.pending = pending
                if instr.writes_rd and instr.rd and not (skip_rename and n > 1):
                    rename_map[instr.rd] = u
                if is_mem:
                    u.prev_store = self._prev_sq
                    if kind is _STORE:
                        sq = StoreQueueEntry(seq)
                        u.sq = sq
                        self.store_queue.append(sq)
                        self._prev_sq = sq
                    else:
                        self._prev_sq = None
                else:
                    self._prev_sq = None
                if pending:
                    u.status = WAITING
                else:
                    u.status = READY
                    if not is_mem:
                        ready.append(u)
        self._dispatch_block = block

    def issue_stage(self, now: int) -> None:
        cfg = self.cfg
        limit = cfg.issue_width
        issued = 0
        completions = self.completions
        ready = self.ready
        if ready:
            if len(ready) > 1:
                ready.sort(key=_seq)
            alu_free = cfg.num_alu
            mul_busy = self.mul_busy_until
            head = self.rob[self.rob_head] if len(self.rob) > self.rob_head else None
            remaining = []
            for u in ready:
                if issued >= limit:
                    remaining.append(u)
                    continue
                instr = u.instr
                kind = instr.kind
                if kind is _MUL or kind is _DIV:
                    for i, t in enumerate(mul_busy):
                        if t <= now:
                            break
                    else:
                        remaining.append(u)
                        continue
                    if kind is _DIV:
                        lat = cfg.div_latency
                        mul_busy[i] = now + lat
                        self.divs_in_flight += 1
                    else:
                        lat = cfg.mul_latency
                        mul_busy[i] = now + 1
                else:
                    if kind is _SYSTEM and u is not head:
                        remaining.append(u)
                        continue
                    if alu_free == 0:
                        remaining.append(u)
                        continue
                    alu_free -= 1
                    lat = cfg.alu_latency
                if kind is _SYSTEM:
                    u.result = now if instr.imm in _CYCLE_CSRS else self.retired
                    u.actual_next_pc = (instr.pc + 4) & M64
                else:
                    try:
                        u.result, u.actual_next_pc = execute(instr, u.src1, u.src2)
                    except StepFault as f:
                        u.fault = f
                        u.result = 0
                u.status = EXECUTING
                dc = now + lat
                u.done_cycle = dc
                bucket = completions.get(dc)
                if bucket is None:
                    completions[dc] = [u]
                else:
                    bucket.append(u)
                issued += 1
            self.ready = remaining

        lq = self.lsu_queue
        if lq and issued < limit:
            ports = cfg.lsu_ports
            keep = []
            mem = self.mem
            sq_list = self.store_queue
            bins = self.bins
            for idx, u in enumerate(lq):
                if issued >= limit or ports == 0:
                    keep.extend(lq[idx:])
                    break
                if u.pending:
                    keep.append(u)
                    continue
                instr = u.instr
                width = instr.width
                addr = (u.src1 + instr.imm) & M64
                u.addr = addr
                u.actual_next_pc = (instr.pc + 4) & M64
                dc = now + 1
                if addr & (width - 1):
                    u.fault = StepFault(instr.pc, "misaligned " + ("store" if instr.kind is _STORE else "load"),
                                        instr.raw)
                    u.result = 0
                elif instr.kind is _STORE:
                    sq = u.sq
                    sq.addr = addr
                    sq.width = width
                    sq.value = u.src2 & ((1 << (8 * width)) - 1)
                    if self._early_drain:
                        mem.write(addr, width, sq.value)
                else:
                    end = addr + width
                    seq = u.seq
                    blocked = False
                    for s in sq_list:
                        if s.rob_idx > seq:
                            break
                        sa = s.addr
                        if sa is None or (sa < end and addr < sa + s.width):
                            blocked = True
                            break
                    if blocked:
                        u.blocked_cycle = now
                        bins["load_blocked_by_store"] += 1
                        keep.append(u)
                        continue
                    ps = u.prev_store
                    if ps is not None and ps.addr is not None and ps.addr < end and addr < ps.addr + ps.width:
                        bins["store_to_load_adjacent"] += 1
                    u.result = extend_load(instr.op, mem.read(addr, width))
                    dc = now + cfg.l1d_latency
                u.status = EXECUTING
                u.done_cycle = dc
                bucket = completions.get(dc)
                if bucket is None:
                    completions[dc] = [u]
                else:
                    bucket.append(u)
                ports -= 1
                issued += 1
            self.lsu_queue = keep

        if issued == limit:
            self.bins["full_width_issue_cycle"] += 1

    def execute_stage(self, now: int) -> None:
        done = self.completions.pop(now, None)
        if not done:
            return
        bins = self.bins
        arch = self.arch_regs
        drop_fwd = self._drop_fwd
        ready = self.ready
        for u in done:
            u.status = DONE
            kind = u.instr.kind
            if kind is _DIV:
                self.divs_in_flight -= 1
            elif kind in _CONTROL and self.divs_in_flight:
                bins["divide_in_flight_with_branch"] += 1
            w = u.waiters
            if w:
                val = arch[u.instr.rd] if drop_fwd else u.result
                for c, slot in w:
                    if slot == 1:
                        c.src1 = val
                        c.src1_tag = None
                    else:
                        c.src2 = val
                        c.src2_tag = None
                    c.pending -= 1
                    if c.pending == 0:
                        c.status = READY
                        k = c.instr.kind
                        if k is not _LOAD and k is not _STORE:
                            ready.append(c)
                bins["forwarding_used"] += len(w)
                u.waiters = None

    def commit_stage(self, now: int) -> list[CommitRecord]:
        rob = self.rob
        records: list = []
        width = self.cfg.commit_width
        self._emit = self.keep_records or bool(self.listeners)
        while len(records) < width and len(rob) > self.rob_head:
            u = rob[self.rob_head]
            if u.status != DONE:
                if self._ooo_commit:
                    self._commit_out_of_order(now, records)
                break
            if u.fault is not None:
                self._pending_halt = HaltReason(HaltKind.ILLEGAL_AT_COMMIT, u.instr.pc, str(u.fault))
                self.fetch_halted = True
                break
            self.rob_head += 1
            rec, redirect = self._retire(u, now)
            records.append(rec)
            if self._pending_halt is not None:
                break
            if redirect:
                self.flush(u.actual_next_pc)
                break
        if self.rob_head > 256:
            del rob[:self.rob_head]
            self.rob_head = 0
        return records

    def _commit_out_of_order(self, now, records) -> None:
        rob = self.rob
        i = self.rob_head + 1
        if i < len(rob):
            u = rob[i]
            k = u.instr.kind
            if u.status == DONE and u.fault is None and k not in _CONTROL and k is not _STORE:
                del rob[i]
                rec, _ = self._retire(u, now)
                records.append(rec)

    def _retire(self, u: MicroOp, now: int) -> tuple[CommitRecord, bool]:
        instr = u.instr
        kind = instr.kind
        rd = None
        if instr.writes_rd and instr.rd:
            r = instr.rd
            self.arch_regs[r] = u.result
            rd = (r, u.result)
            if self.rename_map[r] is u:
                self.rename_map[r] = None
        store = None
        redirect = False
        if kind is _STORE:
            sq = self.store_queue.pop(0)
            sq.committed = True
            if not self._early_drain:
                self.mem.write(sq.addr, sq.width, sq.value)
            store = (sq.addr, sq.width, sq.value)
            self.lsq_count -= 1
            if sq.addr == self.cfg.tohost_addr:
                self._pending_halt = HaltReason(HaltKind.TOHOST_WRITE, sq.value)
                self.fetch_halted = True
        elif kind is _LOAD:
            self.lsq_count -= 1
        elif kind in _CONTROL:
            self.counters.branches += 1
            actual = u.actual_next_pc
            self.predictor.update(instr.pc, instr, actual != ((instr.pc + 4) & M64), actual)
            if actual != u.predicted_next_pc:
                redirect = True
        self.retired += 1
        if not self._emit:
            return u, redirect
        return CommitRecord(now, instr.pc, instr.raw, instr, rd, store, u.actual_next_pc), redirect

    def flush(self, target: int) -> None:
        """Squash everything younger than the redirecting instruction and refetch from ``target``."""
        del self.rob[:]
        self.rob_head = 0
        self.rename_map = [None] * 32
        self.store_queue.clear()
        self.lsu_queue = []
        self.ready = []
        self.completions.clear()
        self.lsq_count = 0
        self.fe_be.flush()
        self.be_lsu.flush()
        self.mul_busy_until = [0] * self.cfg.num_mul_units
        self.divs_in_flight = 0
        self._prev_sq = None
        self.fetch_pc = target
        self.counters.mispredicts += 1
        self.bins["mispredict_flush"] += 1

    # -- bookkeeping ---------------------------------------------------------------------

    def _stall_reason(self, now: int) -> str:
        """Why the oldest instruction did not retire this cycle (one reason, fixed priority)."""
        rob = self.rob
        block = self._dispatch_block
        if len(rob) == self.rob_head:
            if self._fetch_stall:
                return "FrontendCreditStall"
            return "LsqFull" if block == "lsq" else "FetchStarved"
        head = rob[self.rob_head]
        if head.blocked_cycle == now:
            return "LoadOrderingStall"
        if block == "rob":
            return "RobFull"
        if block == "lsq":
            return "LsqFull"
        if head.dispatch_cycle != now and head.status in (READY, EXECUTING):
            return "FuBusy"
        if self._fetch_stall:
            return "FrontendCreditStall"
        return "FetchStarved"

    @property
    def rob_occupancy(self) -> int:
        return len(self.rob) - self.rob_head

    def in_flight(self) -> list[MicroOp]:
        return self.rob[self.rob_head:]

    def inflight_mem_ops(self) -> int:
        return self.lsq_count


def _seq(u: MicroOp) -> int:
    return u.seq


def fetch_stage(core: Core, now: int) -> None:
    core.fetch_stage(now)


def core_tick(core: Core, kernel) -> list[CommitRecord]:
    """Advance ``kernel`` (which must have ``core`` registered) by one cycle; return its commits."""
    kernel.advance_cycle()
    return core.last_records
