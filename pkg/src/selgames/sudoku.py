"""Sudoku as a one-player sequential game.

Gaps are filled one per ply in row-major order; the payoff is a boolean
validity check over the replayed board.  Validity means duplicate-freedom
in every row, column, and 3x3 box (gaps allowed); completeness is the
solver's job, guaranteed by one selector per gap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .engine import GameRules, IllegalMoveError
from .selectors import Direction

Board = Tuple[Tuple[int, ...], ...]  # 9x9, 0 = gap
Move = Tuple[int, int, int]  # (row, column, value), all 1-based


@dataclass(frozen=True)
class Puzzle:
    board: Board
    gaps: Tuple[Tuple[int, int], ...]  # row-major (row, column) cells to fill
    starting_moves: Tuple[Move, ...]  # the clues, in move form


def parse_puzzle(text: str) -> Puzzle:
    """81 characters row-major; '.' or '0' marks a gap, whitespace ignored."""
    chars = [ch for ch in text if not ch.isspace()]
    if len(chars) != 81:
        raise ValueError(f"expected 81 puzzle characters, got {len(chars)}")
    cells = []
    for ch in chars:
        if ch == ".":
            cells.append(0)
        elif ch.isdigit():
            cells.append(int(ch))
        else:
            raise ValueError(f"bad puzzle character {ch!r}")
    board = tuple(tuple(cells[r * 9 : r * 9 + 9]) for r in range(9))
    if not valid_board(board):
        raise ValueError("puzzle clues violate a row, column, or box constraint")
    gaps = tuple(
        (r + 1, c + 1) for r in range(9) for c in range(9) if board[r][c] == 0
    )
    clues = tuple(
        (r + 1, c + 1, board[r][c])
        for r in range(9)
        for c in range(9)
        if board[r][c] != 0
    )
    return Puzzle(board=board, gaps=gaps, starting_moves=clues)


def valid_board(board: Board) -> bool:
    """No duplicate non-zero value in any row, column, or 3x3 box."""
    for unit in _units(board):
        seen = set()
        for v in unit:
            if v == 0:
                continue
            if v in seen:
                return False
            seen.add(v)
    return True


def _units(board: Board):
    for r in range(9):
        yield board[r]
    for c in range(9):
        yield tuple(board[r][c] for r in range(9))
    for br in range(0, 9, 3):
        for bc in range(0, 9, 3):
            yield tuple(board[br + r][bc + c] for r in range(3) for c in range(3))


def insert(move: Move, board: Board) -> Board:
    row, col, value = move
    if board[row - 1][col - 1] != 0:
        raise IllegalMoveError(f"cell ({row},{col}) is already filled")
    new_row = board[row - 1][: col - 1] + (value,) + board[row - 1][col:]
    return board[: row - 1] + (new_row,) + board[row:]


def valid_move(move: Move, board: Board) -> bool:
    """Incremental validity: only the move's row, column, and box are
    checked.  Equivalent to valid_board after insertion when the prior
    board was valid."""
    row, col, value = move
    if board[row - 1][col - 1] != 0:
        raise IllegalMoveError(f"cell ({row},{col}) is already filled")
    r, c = row - 1, col - 1
    if value in board[r]:
        return False
    for rr in range(9):
        if board[rr][c] == value:
            return False
    br, bc = 3 * (r // 3), 3 * (c // 3)
    for rr in range(br, br + 3):
        for cc in range(bc, bc + 3):
            if board[rr][cc] == value:
                return False
    return True


def board_after(history: Sequence[Move], puzzle: Puzzle) -> Board:
    board = puzzle.board
    for move in history:
        board = insert(move, board)
    return board


def possible_moves(history: Sequence[Move], puzzle: Puzzle) -> List[Move]:
    """Candidate values for the next unfilled gap in row-major order,
    pre-filtered by incremental validity."""
    k = len(history)
    if k >= len(puzzle.gaps):
        return []
    board = board_after(history, puzzle)
    row, col = puzzle.gaps[k]
    moves = [(row, col, v) for v in range(1, 10) if valid_move((row, col, v), board)]
    if not moves:
        # Dead branch: no value fits this gap.  Keep the game playable with a
        # single (necessarily invalid) move so the branch scores false instead
        # of leaving a selector with nothing to choose from.
        return [(row, col, 1)]
    return moves


def payoff(history: Sequence[Move], puzzle: Puzzle) -> bool:
    """Replay onto the clue board; false at the first invalid insertion,
    else the validity of the final board."""
    board = puzzle.board
    for move in history:
        row, col, _ = move
        if board[row - 1][col - 1] != 0 or not valid_move(move, board):
            return False
        board = insert(move, board)
    return valid_board(board)


def rules(puzzle: Puzzle) -> GameRules:
    # One-player game: every ply maximizes the boolean payoff.
    return GameRules(
        possible_moves=lambda h: possible_moves(h, puzzle),
        payoff=lambda h: payoff(h, puzzle),
        first_player_direction=Direction.MAXIMIZE,
        second_player_direction=Direction.MAXIMIZE,
        max_game_length=len(puzzle.gaps),
    )


def render_board(board: Board) -> str:
    return "\n".join(
        "".join("." if v == 0 else str(v) for v in row) for row in board
    )
