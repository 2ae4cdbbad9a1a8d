"""Game-facing layer: selector-list construction and optimal play/outcome/strategy.

A game plugs in as a :class:`GameRules` bundle (move generation + payoff on
move histories).  The engine builds an alternating, depth-limited list of
history-dependent selectors and runs the sequence product over the payoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, List, Optional, Sequence

from . import selectors as sel
from .selection import HistorySelector, sequence_product
from .selectors import Direction


class GameOverError(Exception):
    """Raised when a move is requested in a position with no legal moves."""


class IllegalMoveError(Exception):
    """Raised when a move cannot be applied to the current position."""


@dataclass(frozen=True)
class GameRules:
    """Move generation and payoff over move histories.

    ``second_player_direction`` defaults to the opposite of the first
    player's; a one-player game (Sudoku) sets both to the same direction.
    """

    possible_moves: Callable[[List[Any]], List[Any]]
    payoff: Callable[[List[Any]], Any]
    first_player_direction: Direction
    max_game_length: int
    second_player_direction: Optional[Direction] = None

    def direction_at(self, ply: int) -> Direction:
        if ply % 2 == 0:
            return self.first_player_direction
        if self.second_player_direction is not None:
            return self.second_player_direction
        return self.first_player_direction.flipped()


class SelectorKind(Enum):
    GENERIC = "generic"
    THREE_VALUED = "three"
    BOOLEAN = "bool"
    SCORED = "scored"
    GENERIC_PARALLEL = "generic-parallel"
    SCORED_PARALLEL = "scored-parallel"


_CONSTRUCTORS = {
    SelectorKind.GENERIC: sel.extremum_generic,
    SelectorKind.THREE_VALUED: sel.extremum_three,
    SelectorKind.BOOLEAN: sel.extremum_bool,
    SelectorKind.SCORED: sel.extremum_scored,
    SelectorKind.GENERIC_PARALLEL: sel.extremum_generic_parallel,
    SelectorKind.SCORED_PARALLEL: sel.extremum_scored_parallel,
}


def build_selectors(
    rules: GameRules,
    kind: SelectorKind,
    lookahead: int,
    prior_history: Sequence[Any] = (),
) -> List[HistorySelector]:
    """Alternating selectors over legal continuations of ``prior_history``.

    The list length is clamped to the moves remaining in the game; entry k
    selects for the side to move k plies after the prior history.
    """
    if lookahead < 0:
        raise ValueError("lookahead must be >= 0")
    prior = list(prior_history)
    construct = _CONSTRUCTORS[kind]
    depth = min(lookahead, rules.max_game_length - len(prior))

    def make(k: int) -> HistorySelector:
        direction = rules.direction_at(len(prior) + k)
        return lambda history: construct(
            direction, rules.possible_moves(prior + history)
        )

    return [make(k) for k in range(max(depth, 0))]


def optimal_play(rules: GameRules, selector_list: Sequence[HistorySelector]) -> List[Any]:
    """The move sequence the selector product picks against the game payoff."""
    return sequence_product(selector_list)(rules.payoff)


def optimal_outcome(rules: GameRules, selector_list: Sequence[HistorySelector]) -> Any:
    return rules.payoff(optimal_play(rules, selector_list))


def optimal_strategy(
    rules: GameRules,
    kind: SelectorKind,
    lookahead: int,
    prior_history: Sequence[Any] = (),
) -> Any:
    """The best next move after ``prior_history``.

    Solves the remaining game with the payoff shifted by the prior moves and
    returns the first move of the resulting play.
    """
    prior = list(prior_history)
    if not rules.possible_moves(prior):
        raise GameOverError("no legal moves: the game is over")
    selector_list = build_selectors(rules, kind, lookahead, prior)
    shifted = lambda history: rules.payoff(prior + history)
    play = sequence_product(selector_list)(shifted)
    return play[0]
