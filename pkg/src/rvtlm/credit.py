"""Credit-based backpressure channel between two adjacent pipeline stages.

The downstream side owns ``capacity`` buffer slots and starts by granting all
of them to the upstream side as credits. Each send spends one credit; each pop
by the downstream side frees a slot whose credit travels back upstream.

Credit return timing is set by ``return_latency``:

* ``1`` (default): a credit freed by a pop sits in ``pending_returns`` and is
  granted at the next :meth:`tick`, so the sender sees it the following cycle.
* ``0``: idealised; the credit is granted the moment the slot is popped.

At every cycle boundary ``credits + len(fifo) + pending_returns == capacity``.
"""

from __future__ import annotations

from collections import deque
from enum import Enum


class SendResult(Enum):
    ACCEPTED = "Accepted"
    STALLED = "Stalled"


ACCEPTED = SendResult.ACCEPTED
STALLED = SendResult.STALLED


class CreditChannel:
    __slots__ = ("name", "capacity", "credits", "fifo", "pending_returns", "return_latency",
                 "sends", "stalls")

    def __init__(self, capacity: int, return_latency: int = 1, name: str = "channel"):
        if capacity < 1:
            raise ValueError("channel capacity must be >= 1")
        if return_latency not in (0, 1):
            raise ValueError("return_latency must be 0 or 1")
        self.name = name
        self.capacity = capacity
        self.credits = capacity
        self.fifo: deque = deque()
        self.pending_returns = 0
        self.return_latency = return_latency
        self.sends = 0
        self.stalls = 0

    def try_send(self, payload) -> SendResult:
        if self.credits == 0:
            self.stalls += 1
            return STALLED
        self.credits -= 1
        self.fifo.append(payload)
        self.sends += 1
        return ACCEPTED

    def peek(self):
        return self.fifo[0] if self.fifo else None

    def pop(self):
        if not self.fifo:
            return None
        item = self.fifo.popleft()
        if self.return_latency:
            self.pending_returns += 1
        else:
            self.credits += 1
        return item

    def tick(self) -> None:
        if self.pending_returns:
            self.credits += self.pending_returns
            self.pending_returns = 0

    def flush(self) -> int:
        """Discard all in-flight payloads and restore every credit. Returns the number discarded."""
        n = len(self.fifo)
        self.fifo.clear()
        self.credits = self.capacity
        self.pending_returns = 0
        return n

    @property
    def occupancy(self) -> int:
        return len(self.fifo)

    def conserved(self) -> bool:
        return (self.credits + len(self.fifo) + self.pending_returns == self.capacity
                and 0 <= self.credits <= self.capacity)

    def __len__(self) -> int:
        return len(self.fifo)

    def __repr__(self) -> str:
        return (f"CreditChannel({self.name!r}, credits={self.credits}/{self.capacity}, "
                f"occ={len(self.fifo)}, pending={self.pending_returns})")
