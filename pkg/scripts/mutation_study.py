"""How many fuzz seeds catch each seeded core bug, and at which instruction the first mismatch lands.

    python3 scripts/mutation_study.py --seeds 50
"""

from dataclasses import dataclass, field

from _cfg import dump, parse_config

from rvtlm.core import MUTATIONS
from rvtlm.harness.runner import run_fuzz_campaign


@dataclass
class MutationConfig:
    seeds: int = 50
    length: int = 1000
    mutations: list = field(default_factory=lambda: sorted(MUTATIONS))
    workers: int = 1
    out: str = ""


def main(cfg: MutationConfig):
    table = {}
    for m in cfg.mutations:
        res = run_fuzz_campaign(range(cfg.seeds), cfg.length, mutations=(m,), workers=cfg.workers)
        firsts = [r["mismatches"][0]["instr_index"] for r in res.failed if r["mismatches"]]
        kinds = sorted({r["mismatches"][0]["kind"] for r in res.failed if r["mismatches"]})
        table[m] = {"caught": len(res.failed), "seeds": cfg.seeds, "first_mismatch_kinds": kinds,
                    "median_first_instr": sorted(firsts)[len(firsts) // 2] if firsts else None}
        print(f"{m:<20} caught {len(res.failed):>3}/{cfg.seeds}  kinds={kinds}")
    dump({"config": vars(cfg), "mutations": table}, cfg.out)


if __name__ == "__main__":
    main(parse_config(MutationConfig))
