"""Cycle-driven two-phase simulation kernel.

Each cycle every registered component runs ``propose(kernel)`` (in
registration order), then every component runs ``update(kernel)``. Register
components downstream-first so that a resource freed during a cycle's Update
phase is only observable upstream in the next cycle's Propose phase.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

DEFAULT_WATCHDOG = 10_000


class TickPhase(Enum):
    PROPOSE = "Propose"
    UPDATE = "Update"


class HaltKind(str, Enum):
    TOHOST_WRITE = "TohostWrite"
    MAX_CYCLES = "MaxCycles"
    MISMATCH = "Mismatch"
    ILLEGAL_AT_COMMIT = "IllegalAtCommit"
    WATCHDOG = "Watchdog"


@dataclass(frozen=True)
class HaltReason:
    kind: HaltKind
    value: int | None = None   # tohost value, or faulting pc for IllegalAtCommit
    detail: str = ""

    def __str__(self) -> str:
        if self.kind is HaltKind.TOHOST_WRITE:
            return f"TohostWrite({self.value})"
        if self.kind is HaltKind.ILLEGAL_AT_COMMIT and self.value is not None:
            return f"IllegalAtCommit(pc=0x{self.value:x})"
        return self.kind.value

    def to_json(self) -> dict:
        out = {"kind": self.kind.value}
        if self.value is not None:
            out["value"] = self.value
        if self.detail:
            out["detail"] = self.detail
        return out

    @property
    def passed(self) -> bool:
        return self.kind is HaltKind.TOHOST_WRITE and self.value == 1


class Kernel:
    """Owns the clock and the halt/watchdog bookkeeping for one simulation instance."""

    def __init__(self):
        self.cycle = 0
        self.components: list = []
        self.halt_reason: HaltReason | None = None
        self.last_commit_cycle = 0
        self.phase: TickPhase | None = None
        self.trace_hook = None  # optional callable(cycle, phase, component), for tests

    def register(self, component) -> None:
        self.components.append(component)

    def halt(self, reason: HaltReason) -> None:
        if self.halt_reason is None:
            self.halt_reason = reason

    def note_commit(self, n: int = 1) -> None:
        if n:
            self.last_commit_cycle = self.cycle + 1

    def advance_cycle(self) -> int:
        hook = self.trace_hook
        self.phase = TickPhase.PROPOSE
        for c in self.components:
            if hook:
                hook(self.cycle, TickPhase.PROPOSE, c)
            c.propose(self)
        self.phase = TickPhase.UPDATE
        for c in self.components:
            if hook:
                hook(self.cycle, TickPhase.UPDATE, c)
            c.update(self)
        self.phase = None
        self.cycle += 1
        return self.cycle

    def run_until_halt(self, max_cycles: int, watchdog_window: int = DEFAULT_WATCHDOG) -> tuple[HaltReason, int]:
        if max_cycles <= 0 or watchdog_window <= 0:
            raise ValueError("max_cycles and watchdog_window must be positive")
        while True:
            self.advance_cycle()
            if self.halt_reason is not None:
                break
            if self.cycle - self.last_commit_cycle >= watchdog_window:
                self.halt(HaltReason(HaltKind.WATCHDOG,
                                     detail=f"no commit for {watchdog_window} cycles"))
                break
            if self.cycle >= max_cycles:
                self.halt(HaltReason(HaltKind.MAX_CYCLES))
                break
        return self.halt_reason, self.cycle


def advance_cycle(kernel: Kernel) -> int:
    return kernel.advance_cycle()


def run_until_halt(kernel: Kernel, max_cycles: int, watchdog_window: int = DEFAULT_WATCHDOG):
    return kernel.run_until_halt(max_cycles, watchdog_window)
