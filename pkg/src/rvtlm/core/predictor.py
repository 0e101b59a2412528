"""Static not-taken and bimodal+BTB branch predictors."""

from __future__ import annotations

from collections import OrderedDict

from ..isa.encoding import Kind
from .config import PredictorConfig

M64 = (1 << 64) - 1


class NotTakenPredictor:
    def predict(self, pc: int, instr) -> int:
        if instr.kind is Kind.JAL:
            return (pc + instr.imm) & M64
        return (pc + 4) & M64

    def update(self, pc: int, instr, taken: bool, target: int) -> None:
        pass


class BimodalPredictor:
    """2-bit saturating counters indexed by pc, plus an LRU branch target buffer."""

    def __init__(self, table_entries: int = 1024, btb_entries: int = 64):
        self.table_entries = table_entries
        self.btb_entries = btb_entries
        self.counters = bytearray([1]) * table_entries   # weakly not-taken
        self.btb: OrderedDict[int, int] = OrderedDict()

    def _index(self, pc: int) -> int:
        return (pc >> 2) % self.table_entries

    def btb_lookup(self, pc: int):
        target = self.btb.get(pc)
        if target is not None:
            self.btb.move_to_end(pc)
        return target

    def btb_insert(self, pc: int, target: int) -> None:
        btb = self.btb
        if pc in btb:
            btb.move_to_end(pc)
        elif len(btb) >= self.btb_entries:
            btb.popitem(last=False)
        btb[pc] = target

    def predict(self, pc: int, instr) -> int:
        kind = instr.kind
        if kind is Kind.JAL:
            return (pc + instr.imm) & M64
        if kind is Kind.BRANCH:
            if self.counters[self._index(pc)] >= 2:
                target = self.btb_lookup(pc)
                if target is not None:
                    return target
            return (pc + 4) & M64
        # JALR
        target = self.btb_lookup(pc)
        return (pc + 4) & M64 if target is None else target

    def update(self, pc: int, instr, taken: bool, target: int) -> None:
        kind = instr.kind
        if kind is Kind.BRANCH:
            i = self._index(pc)
            c = self.counters[i]
            if taken:
                if c < 3:
                    self.counters[i] = c + 1
                self.btb_insert(pc, target)
            elif c > 0:
                self.counters[i] = c - 1
        elif kind is Kind.JALR:
            self.btb_insert(pc, target)


def make_predictor(cfg: PredictorConfig):
    if cfg.kind == "not_taken":
        return NotTakenPredictor()
    return BimodalPredictor(cfg.table_entries, cfg.btb_entries)


def predict_branch(pred, pc: int, instr) -> int:
    return pred.predict(pc, instr)
