"""IPC versus one core parameter on a synthetic workload.

    python3 scripts/ipc_sweep.py --workload independent --axis issue_width --values '[1,2,4]'
    python3 scripts/ipc_sweep.py --workload divmix --axis rob_entries --values '[8,16,32,64,128]'
"""

from dataclasses import dataclass, field

from _cfg import dump, parse_config

from rvtlm.core import CoreConfig
from rvtlm.harness.generator import program_image, workload_words
from rvtlm.harness.loaders import LoadedProgram
from rvtlm.harness.runner import RunSpec, run_perf_sweep


@dataclass
class SweepConfig:
    """Sweep one CoreConfig field over a list of values with a fixed program."""
    workload: str = "independent"
    size: int = 4000
    axis: str = "issue_width"
    values: list = field(default_factory=lambda: [1, 2, 4])
    base: dict = field(default_factory=dict)     # CoreConfig overrides shared by every point
    workers: int = 1
    out: str = ""


def main(cfg: SweepConfig):
    core = CoreConfig(**cfg.base)
    words = workload_words(cfg.workload, cfg.size, core.reset_pc, core.tohost_addr)
    spec = RunSpec(program=LoadedProgram(program_image(words, core.reset_pc), core.reset_pc), config=core,
                   mode="perf")
    rows = []
    for value, rep in run_perf_sweep(spec, cfg.axis, cfg.values, cfg.workers):
        rows.append({"value": value, "ipc": round(float(rep.ipc), 4), "cycles": rep.cycles,
                     "retired": rep.retired, "stalls": rep.stalls, "halt": rep.halt_reason["kind"]})
        print(f"{cfg.axis}={value!s:<6} ipc={float(rep.ipc):.4f} cycles={rep.cycles}")
    dump({"config": vars(cfg), "rows": rows}, cfg.out)


if __name__ == "__main__":
    main(parse_config(SweepConfig))
