"""Simulation speed in perf mode (no golden model, no commit records).

    python3 scripts/throughput.py --instructions 10000000
"""

import time
from dataclasses import dataclass

from _cfg import dump, parse_config

from rvtlm.core import Core, CoreConfig
from rvtlm.harness.generator import loop_program, program_image
from rvtlm.kernel import Kernel


@dataclass
class ThroughputConfig:
    instructions: int = 10_000_000
    body: int = 8              # loop body length; each iteration retires body + 2 instructions
    out: str = ""


def main(cfg: ThroughputConfig):
    core_cfg = CoreConfig()
    words = loop_program(max(1, cfg.instructions // (cfg.body + 2)), body=cfg.body)
    core = Core(core_cfg, program_image(words, core_cfg.reset_pc))
    core.keep_records = False
    k = Kernel()
    k.register(core)
    t0 = time.perf_counter()
    halt, cycles = k.run_until_halt(10 * cfg.instructions + 1000)
    secs = time.perf_counter() - t0
    rate = core.retired / secs
    print(f"{core.retired} instructions, {cycles} cycles in {secs:.1f}s: {rate:,.0f} instr/s, "
          f"{cycles / secs:,.0f} cycles/s ({halt})")
    dump({"config": vars(cfg), "retired": core.retired, "cycles": cycles, "seconds": round(secs, 2),
          "instr_per_s": round(rate), "halt": str(halt)}, cfg.out)


if __name__ == "__main__":
    main(parse_config(ThroughputConfig))
