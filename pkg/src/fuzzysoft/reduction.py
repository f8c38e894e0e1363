"""Normal parameter reduction of fuzzy soft sets.

An object's choice value is its row sum of degrees; the optimal-object set
collects the objects attaining the maximum choice value (a set-valued argmax
with a tiny tie guard). A parameter subset is dispensable if removing it
leaves the optimal-object set unchanged, and a reduction is a minimal subset
that preserves it on its own.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .softset import FuzzySoftSet, restrict

__all__ = [
    "TIE_EPSILON",
    "ReductionResult",
    "choice_values",
    "optimal_objects",
    "is_dispensable",
    "find_reductions",
]

# Degrees are sums of at most dozens of doubles from exact piecewise-linear
# arithmetic, so true ties are common; the guard only absorbs rounding noise.
TIE_EPSILON = 1e-9

DEFAULT_PARAMETER_CAP = 20


@dataclass(frozen=True)
class ReductionResult:
    """A minimal optimal-set-preserving parameter subset and what it removed."""

    reduct: tuple[str, ...]
    optimal_objects: frozenset[str]
    dispensable: tuple[str, ...]


def choice_values(s: FuzzySoftSet) -> np.ndarray:
    """Per-object sum of degrees across all parameters, in universe order."""
    return s.degrees.sum(axis=1)


def optimal_objects(s: FuzzySoftSet, tie_epsilon: float = TIE_EPSILON) -> frozenset[str]:
    """Objects whose choice value is within ``tie_epsilon`` of the maximum."""
    if not s.universe:
        raise ValueError("optimal_objects needs a non-empty universe")
    f = choice_values(s)
    best = f.max()
    return frozenset(s.universe[i] for i in np.flatnonzero(f >= best - tie_epsilon))


def is_dispensable(s: FuzzySoftSet, subset: Iterable[str]) -> bool:
    """True iff removing ``subset`` leaves the optimal-object set unchanged.

    ``subset`` must be a strict subset of the parameters; the empty subset is
    vacuously dispensable.
    """
    drop = set(subset)
    unknown = drop - set(s.parameters)
    if unknown:
        raise ValueError(f"unknown parameter labels: {sorted(unknown)}")
    keep = [p for p in s.parameters if p not in drop]
    if not keep:
        raise ValueError("subset must be a strict subset of the parameters")
    if not drop:
        return True
    return optimal_objects(restrict(s, keep)) == optimal_objects(s)


def find_reductions(s: FuzzySoftSet, cap: int = DEFAULT_PARAMETER_CAP) -> list[ReductionResult]:
    """All minimal parameter subsets that preserve the optimal-object set.

    Every returned subset B satisfies optimal(restrict(s, B)) == optimal(s) and
    no proper non-empty subset of B does. Subsets are searched by ascending
    size, pruning supersets of subsets already found, so the result is exactly
    the minimal family, ordered by size and then by parameter position.

    The search is exponential in the parameter count; ``cap`` refuses inputs
    that are too wide.
    """
    m = len(s.parameters)
    if m > cap:
        raise ValueError(
            f"refusing to enumerate reductions over {m} parameters (cap is {cap})"
        )
    target = optimal_objects(s)
    universe_index = {oid: i for i, oid in enumerate(s.universe)}
    target_rows = sorted(universe_index[oid] for oid in target)
    degrees = s.degrees
    found_index_sets: list[frozenset[int]] = []
    results: list[ReductionResult] = []
    for size in range(1, m + 1):
        for combo in itertools.combinations(range(m), size):
            combo_set = frozenset(combo)
            if any(prior <= combo_set for prior in found_index_sets):
                continue
            f = degrees[:, combo].sum(axis=1)
            best = f.max()
            rows = np.flatnonzero(f >= best - TIE_EPSILON)
            if rows.tolist() == target_rows:
                found_index_sets.append(combo_set)
                kept = tuple(s.parameters[j] for j in combo)
                results.append(
                    ReductionResult(
                        reduct=kept,
                        optimal_objects=target,
                        dispensable=tuple(p for p in s.parameters if p not in kept),
                    )
                )
    return results
