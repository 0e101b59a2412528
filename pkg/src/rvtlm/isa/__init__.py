"""RV64IM decoder, sparse memory and golden reference interpreter."""

from .encoding import (CSR_NAMES, CSR_NUMBERS, OPS, DecodedInstr, IllegalInstruction, Kind,
                       StepFault, decode, disasm, encode)
from .golden import ArchState, GoldenCommit, golden_step, run_golden
from .memory import MemoryImage, mem_read, mem_write

__all__ = [
    "CSR_NAMES", "CSR_NUMBERS", "OPS", "DecodedInstr", "IllegalInstruction", "Kind", "StepFault",
    "decode", "disasm", "encode", "ArchState", "GoldenCommit", "golden_step", "run_golden",
    "MemoryImage", "mem_read", "mem_write",
]
