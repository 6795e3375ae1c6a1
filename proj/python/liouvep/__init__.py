"""Exact spectral structure of damped-oscillator Liouvillians at their
exceptional points: eigenvalues, Jordan chains, and closed-form relaxation."""

from ._core import (
    __version__,
    chain_polynomial,
    chain_table,
    eigenvalue,
    evolve_dataset,
    scenario_value,
    spectrum,
    verify,
)

__all__ = [
    "__version__",
    "chain_polynomial",
    "chain_table",
    "eigenvalue",
    "evolve_dataset",
    "scenario_value",
    "spectrum",
    "verify",
]
