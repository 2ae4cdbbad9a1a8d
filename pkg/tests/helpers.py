"""Shared test utilities: independent oracles and small game corpora."""

from __future__ import annotations

import itertools
import random
from typing import Callable, List, Sequence

from selgames.selection import quantify


# --- Explicit (non-monadic) product, used as the oracle for sequence_product.

def otimes_explicit(e0, e1):
    """Two-stage product written out directly: the first choice values each
    candidate by what the second stage attains after it."""

    def selected(p):
        a0 = e0(lambda x0: quantify(e1(x0))(lambda rest: p([x0] + rest)))
        rest = e1(a0)(lambda rest: p([a0] + rest))
        return [a0] + rest

    return selected


def bigotimes_explicit(selectors):
    if not selectors:
        return lambda p: []
    head, tail = selectors[0], selectors[1:]

    def shifted(x):
        return bigotimes_explicit(
            [lambda xs, d=d, x=x: d([x] + xs) for d in tail]
        )

    return otimes_explicit(head([]), shifted)


# --- Exhaustive enumeration helpers.

def all_valuations(domain: Sequence, outcomes: Sequence) -> List[Callable]:
    """Every total function domain -> outcomes, as callables."""
    domain = list(domain)
    valuations = []
    for image in itertools.product(outcomes, repeat=len(domain)):
        table = dict(zip(domain, image))
        valuations.append(lambda x, table=table: table[x])
    return valuations


def legal_histories(rules, include_terminal=True):
    """All histories reachable by repeatedly playing legal moves, stopping
    at decided games (nonzero scored value) or exhausted moves."""
    out = []

    def walk(history):
        out.append(list(history))
        outcome = rules.payoff(history)
        if isinstance(outcome, tuple) and outcome[0] != 0:
            return
        for move in rules.possible_moves(history):
            walk(history + [move])

    walk([])
    if include_terminal:
        return out
    return [
        h
        for h in out
        if rules.possible_moves(h)
        and not (isinstance(rules.payoff(h), tuple) and rules.payoff(h)[0] != 0)
    ]


# --- Sudoku helpers.

SOLVED_GRID = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9],
    [4, 5, 6, 7, 8, 9, 1, 2, 3],
    [7, 8, 9, 1, 2, 3, 4, 5, 6],
    [2, 3, 4, 5, 6, 7, 8, 9, 1],
    [5, 6, 7, 8, 9, 1, 2, 3, 4],
    [8, 9, 1, 2, 3, 4, 5, 6, 7],
    [3, 4, 5, 6, 7, 8, 9, 1, 2],
    [6, 7, 8, 9, 1, 2, 3, 4, 5],
    [9, 1, 2, 3, 4, 5, 6, 7, 8],
]


def grid_text(grid) -> str:
    return "".join(str(v) for row in grid for v in row)


def blanked(grid, cells) -> str:
    out = [row[:] for row in grid]
    for r, c in cells:
        out[r][c] = 0
    return grid_text(out)


def random_puzzle_text(seed: int, gaps: int) -> str:
    rng = random.Random(seed)
    perm = list(range(1, 10))
    rng.shuffle(perm)
    grid = [[perm[v - 1] for v in row] for row in SOLVED_GRID]
    cells = rng.sample([(r, c) for r in range(9) for c in range(9)], gaps)
    return blanked(grid, cells)


# Benchmark corpus for the 6..10 gap-count sweep.  One puzzle per gap
# count, chosen so solve time grows by at least 2x per added gap: the
# 6-gap puzzle is fully forced while the larger ones carry progressively
# more dead-end branching.
GROWTH_PUZZLES = {
    6: "9654832..274961853138572.9461934752.457628.3938215974674381596"
       "2.26794381891236475",
    7: "29174385668721539453486972114539768232865147976948213587.9.4."
       "..41.5.8967953176248",
    8: "853..6.424..5816939162438757983524616.5198.373.176458913482975"
       "6569417328287635914",
    9: ".894.6215.1.235897527981643.3.817.56758364129.615927388456239"
       "7119374856227.159384",
    10: "8564972132916537.437428165.1378..9..62873914594516.3784893.65"
        ".15629148377135.8496",
}


def growth_puzzle_text(gaps: int) -> str:
    return GROWTH_PUZZLES[gaps]


def backtracking_solve(board):
    """Plain backtracking Sudoku oracle; returns a solved 9x9 list of lists
    or None."""
    grid = [list(row) for row in board]

    def fits(r, c, v):
        if v in grid[r]:
            return False
        if any(grid[i][c] == v for i in range(9)):
            return False
        br, bc = 3 * (r // 3), 3 * (c // 3)
        return all(
            grid[i][j] != v for i in range(br, br + 3) for j in range(bc, bc + 3)
        )

    def solve():
        for r in range(9):
            for c in range(9):
                if grid[r][c] == 0:
                    for v in range(1, 10):
                        if fits(r, c, v):
                            grid[r][c] = v
                            if solve():
                                return True
                            grid[r][c] = 0
                    return False
        return True

    return grid if solve() else None
