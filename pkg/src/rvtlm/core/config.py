from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass, field

DEFAULT_RESET_PC = 0x8000_0000
DEFAULT_TOHOST = 0x80FF_F000


@dataclass(frozen=True)
class PredictorConfig:
    kind: str = "bimodal"          # "bimodal" or "not_taken"
    table_entries: int = 1024
    btb_entries: int = 64

    def __post_init__(self):
        if self.kind not in ("bimodal", "not_taken"):
            raise ValueError(f"unknown predictor kind {self.kind!r}")
        if self.table_entries < 1 or self.btb_entries < 1:
            raise ValueError("predictor tables need at least one entry")


@dataclass(frozen=True)
class CoreConfig:
    """Every tunable parameter of the core model.

    Defaults follow the baseline of a 4-wide core with a 128-entry ROB.
    """

    fetch_width: int = 4
    issue_width: int = 4
    commit_width: int = 4
    rob_entries: int = 128
    lsq_entries: int = 32
    num_alu: int = 4
    num_mul_units: int = 1
    lsu_ports: int = 2
    alu_latency: int = 1
    mul_latency: int = 3
    div_latency: int = 20
    l1d_latency: int = 2
    frontend_backend_credits: int = 16
    backend_lsu_credits: int = 8
    credit_return_latency: int = 1
    predictor: PredictorConfig = field(default_factory=PredictorConfig)
    reset_pc: int = DEFAULT_RESET_PC
    tohost_addr: int = DEFAULT_TOHOST

    def __post_init__(self):
        if isinstance(self.predictor, dict):
            object.__setattr__(self, "predictor", PredictorConfig(**self.predictor))
        for name in ("fetch_width", "issue_width", "commit_width", "rob_entries", "lsq_entries",
                     "num_alu", "num_mul_units", "lsu_ports", "alu_latency", "mul_latency",
                     "div_latency", "l1d_latency", "frontend_backend_credits", "backend_lsu_credits"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.rob_entries < self.commit_width:
            raise ValueError("rob_entries must be >= commit_width")
        if self.credit_return_latency not in (0, 1):
            raise ValueError("credit_return_latency must be 0 or 1")
        if self.reset_pc & 3:
            raise ValueError("reset_pc must be 4-byte aligned")

    def replace(self, **changes) -> "CoreConfig":
        return dataclasses.replace(self, **changes)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "CoreConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown CoreConfig field(s): {', '.join(sorted(unknown))}")
        return cls(**d)

    @property
    def pipeline_depth(self) -> int:
        """Cycles from fetch to the earliest possible commit of a 1-cycle op."""
        return 3 + self.alu_latency


def random_config(rng: random.Random, **fixed) -> CoreConfig:
    """A small, randomly shaped but valid configuration (for fuzzing)."""
    commit = rng.randint(1, 4)
    params = dict(
        fetch_width=rng.randint(1, 4),
        issue_width=rng.randint(1, 4),
        commit_width=commit,
        rob_entries=rng.choice([max(commit, 4), 8, 16, 32, 64]),
        lsq_entries=rng.choice([2, 4, 8, 16]),
        num_alu=rng.randint(1, 4),
        num_mul_units=rng.randint(1, 2),
        lsu_ports=rng.randint(1, 2),
        alu_latency=rng.choice([1, 1, 1, 2]),
        mul_latency=rng.randint(2, 5),
        div_latency=rng.randint(4, 24),
        l1d_latency=rng.randint(1, 4),
        frontend_backend_credits=rng.randint(1, 16),
        backend_lsu_credits=rng.randint(1, 8),
        credit_return_latency=rng.randint(0, 1),
        predictor=rng.choice([
            PredictorConfig("not_taken"),
            PredictorConfig("bimodal", rng.choice([16, 64, 1024]), rng.choice([4, 16, 64])),
        ]),
    )
    params.update(fixed)
    return CoreConfig(**params)
