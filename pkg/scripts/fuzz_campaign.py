"""Random-program co-simulation campaign (one random core configuration per seed).

    python3 scripts/fuzz_campaign.py --seeds 1000 --length 1000 --out fuzz.json
"""

import time
from dataclasses import dataclass, field

from _cfg import dump, parse_config

from rvtlm.harness.runner import run_fuzz_campaign


@dataclass
class FuzzConfig:
    """Seeds first_seed .. first_seed+seeds-1, each a generated program of `length` instructions."""
    seeds: int = 1000
    first_seed: int = 0
    length: int = 1000
    workers: int = 1
    mutations: list = field(default_factory=list)
    out: str = ""


def main(cfg: FuzzConfig):
    t0 = time.perf_counter()
    res = run_fuzz_campaign(range(cfg.first_seed, cfg.first_seed + cfg.seeds), cfg.length,
                            mutations=tuple(cfg.mutations), workers=cfg.workers)
    secs = time.perf_counter() - t0
    s = res.summary()
    print(f"{s['runs']} runs, {s['failed']} failed, {s['mismatches']} mismatches, "
          f"{s['watchdog_halts']} watchdog halts, coverage {s['coverage']['percent']:.1f}% in {secs:.1f}s")
    s["seconds"] = round(secs, 2)
    dump({"config": vars(cfg), "summary": s}, cfg.out)
    return 0 if res.passed else 1


if __name__ == "__main__":
    raise SystemExit(main(parse_config(FuzzConfig)))
