"""Hidden shift simulation on finite abelian groups."""

import json as _json

from ._core import (
    AbelshiftError,
    InputError,
    QUANTIZATION_C,
    algorithms,
    dirichlet_character,
    dirichlet_count,
    enumerate_b1_z3,
    ffield_character,
    forrelation,
    fourier,
    inverse_fourier,
    is_bent,
    predicted_prob_dirichlet,
    predicted_prob_ffield,
    quantize_value,
)
from ._core import run_json as _run_json


def run(instance, algorithms=("approx-subset",), backend="auto", threshold=0.5):
    """Run algorithms on an instance (dict or JSON text); returns the report dict."""
    text = instance if isinstance(instance, str) else _json.dumps(instance)
    return _json.loads(_run_json(text, list(algorithms), backend, threshold))


__all__ = [
    "AbelshiftError",
    "InputError",
    "QUANTIZATION_C",
    "algorithms",
    "dirichlet_character",
    "dirichlet_count",
    "enumerate_b1_z3",
    "ffield_character",
    "forrelation",
    "fourier",
    "inverse_fourier",
    "is_bent",
    "predicted_prob_dirichlet",
    "predicted_prob_ffield",
    "quantize_value",
    "run",
]
