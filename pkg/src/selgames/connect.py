"""Connect-N rules on a width x height board with gravity.

One module serves every variant: the 5x3 connect-three board, the 4x3
interactive board, and classic 7x6 connect-four.  Columns are 1-based;
row 1 is the bottom of each column.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

from .engine import GameRules, IllegalMoveError
from .selectors import Direction, ScoredOutcome


class Cell(Enum):
    FIRST = "X"
    SECOND = "O"
    EMPTY = "."


@dataclass(frozen=True)
class ConnectConfig:
    width: int = 7
    height: int = 6
    run_length: int = 4
    lookahead: int = 6

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("board must be at least 1x1")
        if self.run_length > max(self.width, self.height):
            raise ValueError("run length cannot exceed the board size")


CONNECT_THREE = ConnectConfig(width=5, height=3, run_length=3, lookahead=9)
CONNECT_THREE_INTERACTIVE = ConnectConfig(width=4, height=3, run_length=3, lookahead=6)
CONNECT_FOUR = ConnectConfig(width=7, height=6, run_length=4, lookahead=6)


@dataclass(frozen=True)
class ConnectBoard:
    """Immutable board; ``columns[c][r]`` is column c+1, row r+1 (bottom-up)."""

    width: int
    height: int
    columns: Tuple[Tuple[Cell, ...], ...]

    @staticmethod
    def empty(width: int, height: int) -> "ConnectBoard":
        col = (Cell.EMPTY,) * height
        return ConnectBoard(width, height, (col,) * width)

    def cell(self, column: int, row: int) -> Cell:
        return self.columns[column - 1][row - 1]


def insert_disc(move: int, player: Cell, board: ConnectBoard) -> ConnectBoard:
    """Drop a disc into a 1-based column; errors if the column is full."""
    if player is Cell.EMPTY:
        raise ValueError("cannot insert an empty cell")
    if not 1 <= move <= board.width:
        raise IllegalMoveError(f"column {move} is off the board")
    col = board.columns[move - 1]
    for r, cell in enumerate(col):
        if cell is Cell.EMPTY:
            new_col = col[:r] + (player,) + col[r + 1 :]
            columns = board.columns[: move - 1] + (new_col,) + board.columns[move:]
            return ConnectBoard(board.width, board.height, columns)
    raise IllegalMoveError(f"column {move} is full")


_DIRECTIONS = ((1, 0), (0, 1), (1, 1), (1, -1))


def wins(board: ConnectBoard, player: Cell, run_length: int) -> bool:
    """Full-board scan for a run of ``run_length`` discs of ``player``
    in any row, column, or diagonal."""
    for c in range(board.width):
        for r in range(board.height):
            if board.columns[c][r] is not player:
                continue
            for dx, dy in _DIRECTIONS:
                n = 1
                x, y = c + dx, r + dy
                while (
                    0 <= x < board.width
                    and 0 <= y < board.height
                    and board.columns[x][y] is player
                ):
                    n += 1
                    if n >= run_length:
                        return True
                    x, y = x + dx, y + dy
    return False


def possible_moves(history: Sequence[int], config: ConnectConfig) -> List[int]:
    """Columns that still have room, given the moves played so far."""
    counts = [0] * config.width
    for m in history:
        counts[m - 1] += 1
    return [c + 1 for c in range(config.width) if counts[c] < config.height]


def board_value(board: ConnectBoard, run_length: int) -> int:
    if wins(board, Cell.FIRST, run_length):
        return 1
    if wins(board, Cell.SECOND, run_length):
        return -1
    return 0


def board_from_history(history: Sequence[int], config: ConnectConfig) -> ConnectBoard:
    board = ConnectBoard.empty(config.width, config.height)
    player = Cell.FIRST
    for m in history:
        board = insert_disc(m, player, board)
        player = Cell.SECOND if player is Cell.FIRST else Cell.FIRST
    return board


def _win_at(grid, width, height, run_length, c, r, player) -> bool:
    # Incremental check: any winning run must pass through the last insertion.
    for dx, dy in _DIRECTIONS:
        n = 1
        x, y = c + dx, r + dy
        while 0 <= x < width and 0 <= y < height and grid[x][y] == player:
            n += 1
            x, y = x + dx, y + dy
        x, y = c - dx, r - dy
        while 0 <= x < width and 0 <= y < height and grid[x][y] == player:
            n += 1
            x, y = x - dx, y - dy
        if n >= run_length:
            return True
    return False


def payoff(history: Sequence[int], config: ConnectConfig) -> ScoredOutcome:
    """Replay the history from an empty board, first player first.

    Returns (value, move-count) at the first winning insertion, ignoring any
    moves after it; otherwise (0, length of history).
    """
    width, height, run_length = config.width, config.height, config.run_length
    grid = [[0] * height for _ in range(width)]
    heights = [0] * width
    player = 1
    for i, m in enumerate(history):
        c = m - 1
        if not 0 <= c < width:
            raise IllegalMoveError(f"column {m} is off the board")
        r = heights[c]
        if r >= height:
            raise IllegalMoveError(f"column {m} is full")
        grid[c][r] = player
        heights[c] = r + 1
        if _win_at(grid, width, height, run_length, c, r, player):
            return ScoredOutcome(1 if player == 1 else -1, i + 1)
        player = 3 - player
    return ScoredOutcome(0, len(history))


def render_board(board: ConnectBoard) -> str:
    """Text rendering: height lines of width characters, top row first."""
    lines = []
    for r in range(board.height, 0, -1):
        lines.append("".join(board.cell(c, r).value for c in range(1, board.width + 1)))
    return "\n".join(lines)


def parse_board(text: str) -> ConnectBoard:
    """Inverse of :func:`render_board`."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or len({len(line) for line in lines}) != 1:
        raise ValueError("board lines must be nonempty and equal length")
    height, width = len(lines), len(lines[0])
    by_char = {c.value: c for c in Cell}
    columns = []
    for c in range(width):
        col = []
        for r in range(height):
            ch = lines[height - 1 - r][c]
            if ch not in by_char:
                raise ValueError(f"unknown cell character {ch!r}")
            col.append(by_char[ch])
        columns.append(tuple(col))
    return ConnectBoard(width, height, tuple(columns))


def rules(config: ConnectConfig) -> GameRules:
    return GameRules(
        possible_moves=lambda h: possible_moves(h, config),
        payoff=lambda h: payoff(h, config),
        first_player_direction=Direction.MAXIMIZE,
        max_game_length=config.width * config.height,
    )
