"""Exact toolkit for multistage stochastic integer programs.

Thin wrapper over the compiled ``_core`` module. The core exchanges JSON
text so every exact value survives as a decimal string; this layer turns
the payloads into dictionaries.
"""

import json as _json

from ._core import (  # noqa: F401
    BudgetError,
    InputError,
    StructureError,
    bound_table as _bound_table,
    generate_instance as _generate_instance,
    graver_basis as _graver_basis,
    graver_experiment as _graver_experiment,
    lemma42 as _lemma42,
    proximity as _proximity,
    solve as _solve,
    sweep_csv,
    validate_instance as _validate_instance,
)

__all__ = [
    "BudgetError",
    "InputError",
    "StructureError",
    "bound_table",
    "generate_instance",
    "graver_basis",
    "graver_experiment",
    "lemma42",
    "proximity",
    "solve",
    "sweep_csv",
    "validate_instance",
]


def _as_text(instance):
    if isinstance(instance, str):
        return instance
    return _json.dumps(instance)


def validate_instance(instance):
    """Validate an instance (dict or JSON text); returns the tree summary."""
    return _json.loads(_validate_instance(_as_text(instance)))


def graver_basis(instance, submatrix=0):
    return _json.loads(_graver_basis(_as_text(instance), submatrix))


def solve(instance, method="augment", box_lo=0, box_hi=3, budget=50_000_000):
    return _json.loads(_solve(_as_text(instance), method, box_lo, box_hi, budget))


def proximity(instance, box_lo=0, box_hi=3, budget=50_000_000):
    return _json.loads(_proximity(_as_text(instance), box_lo, box_hi, budget))


def graver_experiment(instance):
    return _json.loads(_graver_experiment(_as_text(instance)))


def lemma42(multisets, max_card, budget=50_000_000):
    return _json.loads(_lemma42(_as_text(multisets), max_card, budget))


def bound_table(d, delta, t, k1=1, rho="1"):
    return _json.loads(_bound_table(d, delta, t, k1, rho))


def generate_instance(t, s, branching=2, r=1, delta=1, seed=0,
                      b_lo=-3, b_hi=3, c_lo=-3, c_hi=3):
    """Seeded deterministic instance, returned as canonical JSON text."""
    return _generate_instance(t, list(s), branching, r, delta, seed,
                              b_lo, b_hi, c_lo, c_hi)
