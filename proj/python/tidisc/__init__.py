"""Quantum and classical correlations of two qubits in dephasing, dissipative and
correlated environments."""

from ._core import *  # noqa: F401,F403
from ._core import (
    InvalidInput,
    NumericalFailure,
    TidiscError,
    run_cli,
)

__all__ = [name for name in dir() if not name.startswith("_")]
