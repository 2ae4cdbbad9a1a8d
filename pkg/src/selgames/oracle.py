"""Brute-force minimax reference, independent of the selection-function engine.

Used to verify the engine: both consume the same :class:`GameRules`, but
this module never touches the selection combinators, so agreement between
the two solvers is meaningful evidence.
"""

from __future__ import annotations

from typing import Any, List, Sequence

from .engine import GameRules
from .selectors import Direction


def compare_scored(direction: Direction, o1, o2) -> int:
    """Total preference order on (value, moves) outcomes for one side.

    Returns 1 if o1 is strictly preferred by ``direction``, -1 if o2 is,
    0 if equal.  Value decides first; among equal values a winning side
    prefers fewer moves, a losing side more, and draws fewer.
    """
    v1, m1 = o1
    v2, m2 = o2
    maximize = direction is Direction.MAXIMIZE
    if v1 != v2:
        if maximize:
            return 1 if v1 > v2 else -1
        return 1 if v1 < v2 else -1
    losing = v1 < 0 if maximize else v1 > 0
    if m1 == m2:
        return 0
    if losing:
        return 1 if m1 > m2 else -1
    return 1 if m1 < m2 else -1


def _prefers(direction: Direction, a, b) -> bool:
    """True if outcome ``a`` is strictly better than ``b`` for ``direction``."""
    if isinstance(a, tuple):
        return compare_scored(direction, a, b) > 0
    return a > b if direction is Direction.MAXIMIZE else a < b


def _decided(outcome) -> bool:
    # Scored games are over once someone has won; other outcome types are
    # never cut short (expanding them further cannot change the payoff).
    return isinstance(outcome, tuple) and outcome[0] != 0


def minimax_value(rules: GameRules, history: Sequence[Any], depth: int) -> Any:
    """Exhaustive minimax value of ``history`` looking ``depth`` plies ahead."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    base = rules.payoff(list(history))
    if depth == 0 or _decided(base):
        return base
    moves = rules.possible_moves(list(history))
    if not moves:
        return base
    direction = rules.direction_at(len(history))
    best = None
    for move in moves:
        value = minimax_value(rules, list(history) + [move], depth - 1)
        if best is None or _prefers(direction, value, best):
            best = value
    return best


def best_line(rules: GameRules, history: Sequence[Any], depth: int) -> List[Any]:
    """One line attaining :func:`minimax_value`, ties broken by move order."""
    if depth == 0 or _decided(rules.payoff(list(history))):
        return []
    moves = rules.possible_moves(list(history))
    if not moves:
        return []
    direction = rules.direction_at(len(history))
    best_move, best_value = None, None
    for move in moves:
        value = minimax_value(rules, list(history) + [move], depth - 1)
        if best_value is None or _prefers(direction, value, best_value):
            best_move, best_value = move, value
    return [best_move] + best_line(rules, list(history) + [best_move], depth - 1)
