"""Simplified chess endgames: King/Queen/Rook/Bishop, capture-the-king.

The game ends when a king is taken; there is no check, checkmate,
castling, promotion, or stalemate.  Squares are (x, y) with x the file
and y the rank, both 1..8.  White moves first and maximizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from .engine import GameRules, IllegalMoveError
from .selectors import Direction, ScoredOutcome

Square = Tuple[int, int]
ChessMove = Tuple[Square, Square]  # (from, to)

# Placeholder move for a side with no pieces left.  Only reachable after a
# king capture has decided the game, so it never influences the payoff; it
# keeps fixed-depth searches alive past the decisive capture.
PASS_MOVE: ChessMove = ((0, 0), (0, 0))


class Colour(Enum):
    WHITE = "white"
    BLACK = "black"

    def flipped(self) -> "Colour":
        return Colour.BLACK if self is Colour.WHITE else Colour.WHITE


class PieceKind(Enum):
    KING = "K"
    QUEEN = "Q"
    ROOK = "R"
    BISHOP = "B"


@dataclass(frozen=True)
class Piece:
    kind: PieceKind
    colour: Colour

    def symbol(self) -> str:
        ch = self.kind.value
        return ch if self.colour is Colour.WHITE else ch.lower()


# Sparse board: only occupied squares are present.
ChessBoard = Dict[Square, Piece]

_SYMBOLS = {
    piece.symbol(): piece
    for piece in (
        Piece(kind, colour) for kind in PieceKind for colour in Colour
    )
}


def parse_position(text: str) -> ChessBoard:
    """8 ranks of 8 symbols from {K,Q,R,B,k,q,r,b,.}, rank 8 first,
    separated by '/' or newlines.  Uppercase is White."""
    cleaned = text.strip().replace("/", "\n")
    ranks = [line.strip() for line in cleaned.splitlines() if line.strip()]
    if len(ranks) != 8 or any(len(rank) != 8 for rank in ranks):
        raise ValueError("position must be 8 ranks of 8 symbols")
    board: ChessBoard = {}
    kings = {Colour.WHITE: 0, Colour.BLACK: 0}
    for i, rank in enumerate(ranks):
        y = 8 - i
        for j, ch in enumerate(rank):
            if ch == ".":
                continue
            piece = _SYMBOLS.get(ch)
            if piece is None:
                raise ValueError(f"unknown piece symbol {ch!r}")
            if piece.kind is PieceKind.KING:
                kings[piece.colour] += 1
                if kings[piece.colour] > 1:
                    raise ValueError(f"duplicate {piece.colour.value} king")
            board[(j + 1, y)] = piece
    return board


def render_position(board: ChessBoard) -> str:
    lines = []
    for y in range(8, 0, -1):
        lines.append(
            "".join(
                board[(x, y)].symbol() if (x, y) in board else "."
                for x in range(1, 9)
            )
        )
    return "/".join(lines)


_KING_STEPS = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)]
_ROOK_RAYS = ((1, 0), (-1, 0), (0, 1), (0, -1))
_BISHOP_RAYS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def _on_board(sq: Square) -> bool:
    return 1 <= sq[0] <= 8 and 1 <= sq[1] <= 8


def _ray_moves(pos: Square, board: ChessBoard, rays, colour: Colour) -> List[ChessMove]:
    moves = []
    for dx, dy in rays:
        x, y = pos[0] + dx, pos[1] + dy
        while _on_board((x, y)):
            occupant = board.get((x, y))
            if occupant is None:
                moves.append((pos, (x, y)))
            else:
                if occupant.colour is not colour:
                    moves.append((pos, (x, y)))
                break
            x, y = x + dx, y + dy
    return moves


def piece_moves(pos: Square, board: ChessBoard) -> List[ChessMove]:
    """All moves of the piece on ``pos``: king steps, rook/bishop rays,
    queen as their union.  Own pieces block; enemy pieces are captured."""
    piece = board.get(pos)
    if piece is None:
        raise IllegalMoveError(f"no piece on {pos}")
    if piece.kind is PieceKind.KING:
        moves = []
        for dx, dy in _KING_STEPS:
            target = (pos[0] + dx, pos[1] + dy)
            if not _on_board(target):
                continue
            occupant = board.get(target)
            if occupant is None or occupant.colour is not piece.colour:
                moves.append((pos, target))
        return moves
    if piece.kind is PieceKind.ROOK:
        return _ray_moves(pos, board, _ROOK_RAYS, piece.colour)
    if piece.kind is PieceKind.BISHOP:
        return _ray_moves(pos, board, _BISHOP_RAYS, piece.colour)
    return _ray_moves(pos, board, _ROOK_RAYS + _BISHOP_RAYS, piece.colour)


def apply_move(board: ChessBoard, move: ChessMove) -> ChessBoard:
    if move == PASS_MOVE:
        return board
    src, dst = move
    piece = board.get(src)
    if piece is None:
        raise IllegalMoveError(f"no piece on {src}")
    new_board = dict(board)
    del new_board[src]
    new_board[dst] = piece
    return new_board


def wins(board: ChessBoard, colour: Colour) -> bool:
    """True iff the opposing king is no longer on the board."""
    enemy_king = Piece(PieceKind.KING, colour.flipped())
    return enemy_king not in board.values()


def side_to_move(history_length: int) -> Colour:
    return Colour.WHITE if history_length % 2 == 0 else Colour.BLACK


def board_after(history: Sequence[ChessMove], start_board: ChessBoard) -> ChessBoard:
    board = start_board
    for move in history:
        board = apply_move(board, move)
    return board


def possible_moves(
    history: Sequence[ChessMove], start_board: ChessBoard
) -> List[ChessMove]:
    """All moves of the side to move, scanning squares file-major.

    Moves are generated even if a king is already gone; ending the game is
    the payoff's job.
    """
    board = board_after(history, start_board)
    colour = side_to_move(len(history))
    moves: List[ChessMove] = []
    for x in range(1, 9):
        for y in range(1, 9):
            piece = board.get((x, y))
            if piece is not None and piece.colour is colour:
                moves.extend(piece_moves((x, y), board))
    if not moves:
        return [PASS_MOVE]
    return moves


def payoff(history: Sequence[ChessMove], start_board: ChessBoard) -> ScoredOutcome:
    """Replay from the start board, White first; (+-1, move count) at the
    first king capture, else (0, length of history)."""
    board = start_board
    colour = Colour.WHITE
    for i, move in enumerate(history):
        board = apply_move(board, move)
        if wins(board, colour):
            return ScoredOutcome(1 if colour is Colour.WHITE else -1, i + 1)
        colour = colour.flipped()
    return ScoredOutcome(0, len(history))


def rules(start_board: ChessBoard, max_game_length: int = 60) -> GameRules:
    def moves(history):
        if len(history) >= max_game_length:
            return []
        return possible_moves(history, start_board)

    return GameRules(
        possible_moves=moves,
        payoff=lambda h: payoff(h, start_board),
        first_player_direction=Direction.MAXIMIZE,
        max_game_length=max_game_length,
    )


# Shipped endgame test positions (verified against the brute-force oracle).
# White: Kb6, Qh2; Black: Ka8.  White forces the king capture on ply 3.
MATE_IN_TWO = "k......./......../.K....../......../......../......../.......Q/........"

# White: Kc6, Qh2; Black: Ka8, Bh8.  White forces the capture on ply 5.
MATE_IN_THREE = "k......b/......../..K...../......../......../......../.......Q/........"
