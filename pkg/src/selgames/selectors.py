"""Extremum selection-function constructors for the four outcome encodings.

Each constructor closes over a finite, nonempty candidate list and returns
a selection function picking an extremal candidate under the supplied
valuation.  Tie-breaking is lowest index everywhere, so sequential and
parallel variants always agree.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Callable, List, NamedTuple, Sequence, TypeVar

from .selection import SelectionFunction

X = TypeVar("X")


class Direction(Enum):
    MINIMIZE = "min"
    MAXIMIZE = "max"

    def flipped(self) -> "Direction":
        return Direction.MINIMIZE if self is Direction.MAXIMIZE else Direction.MAXIMIZE


class ScoredOutcome(NamedTuple):
    """Game value plus the number of moves until it is reached.

    Positive value: first player wins; negative: second player wins;
    zero: draw.  Winners prefer fewer moves, losers prefer more.
    """

    value: int
    moves: int


def _checked(candidates: Sequence[X]) -> List[X]:
    out = list(candidates)
    if not out:
        raise ValueError("selection over an empty candidate list")
    return out


def extremum_generic(direction: Direction, candidates: Sequence[X]) -> SelectionFunction:
    """Argmin/argmax over any totally ordered outcome type."""
    xs = _checked(candidates)
    maximize = direction is Direction.MAXIMIZE

    def select(p):
        best, best_v = xs[0], p(xs[0])
        for x in xs[1:]:
            v = p(x)
            if (v > best_v) if maximize else (v < best_v):
                best, best_v = x, v
        return best

    return select


def extremum_three(direction: Direction, candidates: Sequence[X]) -> SelectionFunction:
    """Extremum over the {-1, 0, +1} outcome encoding.

    Stops evaluating as soon as the absolute extremum is observed.
    """
    xs = _checked(candidates)
    target = 1 if direction is Direction.MAXIMIZE else -1

    def select(p):
        best, best_v = None, None
        for x in xs:
            v = p(x)
            if v == target:
                return x
            if best is None or (v > best_v if target == 1 else v < best_v):
                best, best_v = x, v
        return best

    return select


def extremum_bool(direction: Direction, candidates: Sequence[X]) -> SelectionFunction:
    """Boolean extremum: first candidate hitting the target truth value,
    else the first candidate (every miss ties)."""
    xs = _checked(candidates)
    target = direction is Direction.MAXIMIZE

    def select(p):
        for x in xs:
            if bool(p(x)) == target:
                return x
        return xs[0]

    return select


def _best_scored_index(direction: Direction, scores: List[ScoredOutcome]) -> int:
    maximize = direction is Direction.MAXIMIZE
    values = [s[0] for s in scores]
    best_value = max(values) if maximize else min(values)
    losing = best_value < 0 if maximize else best_value > 0
    best = None
    for i, (v, moves) in enumerate(scores):
        if v != best_value:
            continue
        if best is None:
            best = i
        elif losing:
            if moves > scores[best][1]:
                best = i
        elif moves < scores[best][1]:
            best = i
    return best


def extremum_scored(direction: Direction, candidates: Sequence[X]) -> SelectionFunction:
    """Extremum over (value, moves) outcomes.

    Picks the extremal value; among equals, a winning or drawing side takes
    the fewest moves while a losing side prolongs the game.
    """
    xs = _checked(candidates)

    def select(p):
        scores = [ScoredOutcome(*p(x)) for x in xs]
        return xs[_best_scored_index(direction, scores)]

    return select


_POOL_SIZE = os.cpu_count() or 1


def _parallel_map(p: Callable, xs: List[X]) -> List:
    with ThreadPoolExecutor(max_workers=_POOL_SIZE) as pool:
        return list(pool.map(p, xs))


def extremum_generic_parallel(
    direction: Direction, candidates: Sequence[X]
) -> SelectionFunction:
    """As extremum_generic, but the valuation runs concurrently over all
    candidates.  The chosen index is identical to the sequential variant."""
    xs = _checked(candidates)
    maximize = direction is Direction.MAXIMIZE

    def select(p):
        values = _parallel_map(p, xs)
        best = 0
        for i in range(1, len(xs)):
            if (values[i] > values[best]) if maximize else (values[i] < values[best]):
                best = i
        return xs[best]

    return select


def extremum_scored_parallel(
    direction: Direction, candidates: Sequence[X]
) -> SelectionFunction:
    """As extremum_scored, with concurrent valuation of all candidates."""
    xs = _checked(candidates)

    def select(p):
        scores = [ScoredOutcome(*s) for s in _parallel_map(p, xs)]
        return xs[_best_scored_index(direction, scores)]

    return select
