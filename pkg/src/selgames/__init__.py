"""Sequential-game solving with selection functions and their products."""

from .engine import (
    GameOverError,
    GameRules,
    IllegalMoveError,
    SelectorKind,
    build_selectors,
    optimal_outcome,
    optimal_play,
    optimal_strategy,
)
from .selection import (
    bind,
    map_selection,
    pair_product,
    quantify,
    sequence_product,
    unit,
)
from .selectors import Direction, ScoredOutcome

__all__ = [
    "Direction",
    "GameOverError",
    "GameRules",
    "IllegalMoveError",
    "ScoredOutcome",
    "SelectorKind",
    "bind",
    "build_selectors",
    "map_selection",
    "optimal_outcome",
    "optimal_play",
    "optimal_strategy",
    "pair_product",
    "quantify",
    "sequence_product",
    "unit",
]
