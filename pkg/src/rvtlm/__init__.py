"""Transaction-level out-of-order RV64IM core model with lock-step golden co-verification."""

__version__ = "0.1.0"
