"""Contextuality toolkit: Bell/CHSH quantities, correlation-polytope
membership, seeded entity simulators and liar-paradox dynamics."""

from ._contextsim import (
    CollapseError,
    DimensionError,
    ParseError,
    ValidationError,
    __version__,
    bell_quantity,
    bell_verdict,
    born_probability,
    chsh_facets,
    collapse,
    correlation_membership,
    deterministic_vertices,
    evolve,
    expectation,
    kolmogorov_feasibility,
    liar_initial_state,
    liar_measure,
    liar_trace,
    simulate,
    simulate_json,
    tensor_operator,
    tensor_state,
)

__all__ = [
    "CollapseError",
    "DimensionError",
    "ParseError",
    "ValidationError",
    "__version__",
    "bell_quantity",
    "bell_verdict",
    "born_probability",
    "chsh_facets",
    "collapse",
    "correlation_membership",
    "deterministic_vertices",
    "evolve",
    "expectation",
    "kolmogorov_feasibility",
    "liar_initial_state",
    "liar_measure",
    "liar_trace",
    "simulate",
    "simulate_json",
    "tensor_operator",
    "tensor_state",
]
