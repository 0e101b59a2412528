"""Out-of-order core model: configuration, branch predictors and the pipeline."""

from .config import CoreConfig, PredictorConfig, random_config
from .pipeline import MUTATIONS, CommitRecord, Core, MicroOp, core_tick
from .predictor import BimodalPredictor, NotTakenPredictor, make_predictor, predict_branch

__all__ = [
    "CoreConfig", "PredictorConfig", "random_config", "MUTATIONS", "CommitRecord", "Core",
    "MicroOp", "core_tick", "BimodalPredictor", "NotTakenPredictor", "make_predictor",
    "predict_branch",
]
