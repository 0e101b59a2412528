import pytest

from rvtlm.kernel import HaltKind, HaltReason, Kernel, TickPhase, advance_cycle, run_until_halt


class Recorder:
    def __init__(self, name, log):
        self.name, self.log = name, log

    def propose(self, k):
        self.log.append((k.cycle, "propose", self.name))

    def update(self, k):
        self.log.append((k.cycle, "update", self.name))


class Committer:
    """Commits one instruction per cycle and writes tohost at a fixed cycle."""

    def __init__(self, halt_at=None, value=1):
        self.halt_at, self.value = halt_at, value

    def propose(self, k):
        pass

    def update(self, k):
        k.note_commit()
        if self.halt_at is not None and k.cycle + 1 >= self.halt_at:
            k.halt(HaltReason(HaltKind.TOHOST_WRITE, self.value))


def test_single_tick_increments():
    k = Kernel()
    assert advance_cycle(k) == 1 and k.cycle == 1


def test_empty_system_ticks():
    k = Kernel()
    for _ in range(10):
        k.advance_cycle()
    assert k.cycle == 10 and k.halt_reason is None and k.last_commit_cycle == 0


def test_phase_order_all_propose_then_all_update():
    log = []
    k = Kernel()
    for n in ("commit", "execute", "fetch"):
        k.register(Recorder(n, log))
    k.advance_cycle()
    assert log == [(0, "propose", "commit"), (0, "propose", "execute"), (0, "propose", "fetch"),
                   (0, "update", "commit"), (0, "update", "execute"), (0, "update", "fetch")]


def test_evaluation_sequence_is_deterministic():
    def trace():
        seen = []
        k = Kernel()
        k.trace_hook = lambda c, p, comp: seen.append((c, p, comp.name))
        for n in "abc":
            k.register(Recorder(n, []))
        for _ in range(5):
            k.advance_cycle()
        return seen

    first = trace()
    assert first == trace()
    assert first[3][1] is TickPhase.UPDATE


def test_watchdog_fires_when_nothing_commits():
    halt, cycles = run_until_halt(Kernel(), max_cycles=100, watchdog_window=50)
    assert halt.kind is HaltKind.WATCHDOG and cycles == 50


def test_max_cycles_cap():
    k = Kernel()
    k.register(Committer())
    halt, cycles = k.run_until_halt(10)
    assert halt.kind is HaltKind.MAX_CYCLES and cycles == 10


def test_tohost_halt():
    k = Kernel()
    k.register(Committer(halt_at=50))
    halt, cycles = k.run_until_halt(1000)
    assert halt == HaltReason(HaltKind.TOHOST_WRITE, 1) and cycles == 50
    assert halt.passed


def test_first_halt_wins():
    k = Kernel()
    k.halt(HaltReason(HaltKind.MISMATCH))
    k.halt(HaltReason(HaltKind.TOHOST_WRITE, 1))
    assert k.halt_reason.kind is HaltKind.MISMATCH


def test_halt_reason_rendering():
    assert str(HaltReason(HaltKind.TOHOST_WRITE, 3)) == "TohostWrite(3)"
    assert str(HaltReason(HaltKind.ILLEGAL_AT_COMMIT, 0x80000010)) == "IllegalAtCommit(pc=0x80000010)"
    assert HaltReason(HaltKind.WATCHDOG).to_json() == {"kind": "Watchdog"}
    assert not HaltReason(HaltKind.TOHOST_WRITE, 3).passed


@pytest.mark.parametrize("mc,wd", [(0, 10), (10, 0)])
def test_rejects_nonpositive_bounds(mc, wd):
    with pytest.raises(ValueError):
        Kernel().run_until_halt(mc, wd)
