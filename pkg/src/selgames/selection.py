"""Selection functions, quantifiers, and their products.

A selection function is a plain callable ``(X -> R) -> X``: give it a
valuation of the candidates and it hands back a chosen candidate.  The
companion quantifier ``(X -> R) -> R`` returns the attained value instead.
Products compose per-move selection functions into one selection function
over whole move sequences, which is what drives the game solvers.
"""

from __future__ import annotations

from typing import Callable, List, Sequence, TypeVar

X = TypeVar("X")
Y = TypeVar("Y")
R = TypeVar("R")

# A selection function over candidates of type X with outcome values R.
SelectionFunction = Callable[[Callable[[X], R]], X]
# The companion quantifier: returns the attained value, not the candidate.
Quantifier = Callable[[Callable[[X], R]], R]
# History-dependent selector: moves played so far -> selector over legal continuations.
HistorySelector = Callable[[List[X]], SelectionFunction]


def quantify(e: SelectionFunction) -> Quantifier:
    """Turn a selection function into its quantifier: apply the valuation
    to whatever the selection function picks."""
    return lambda p: p(e(p))


def unit(x: X) -> SelectionFunction:
    """The constant selection function that ignores the valuation."""
    return lambda p: x


def map_selection(f: Callable[[X], Y], e: SelectionFunction) -> SelectionFunction:
    """Functorial map: select in X against the pulled-back valuation, then
    push the choice through f."""
    return lambda q: f(e(lambda x: q(f(x))))


def join(ee: SelectionFunction) -> SelectionFunction:
    """Flatten a selection function over selection functions."""

    def selected(p):
        inner = ee(lambda d: quantify(d)(p))
        return inner(p)

    return selected


def bind(e: SelectionFunction, f: Callable[[X], SelectionFunction]) -> SelectionFunction:
    """Monadic bind, defined as join after map."""
    return join(map_selection(f, e))


def pair_product(
    e0: SelectionFunction, e1: Callable[[X], SelectionFunction]
) -> SelectionFunction:
    """Product of two selection stages.

    The first stage chooses anticipating the second: each first-stage
    candidate is valued by what the second stage would attain after it.
    """

    def selected(p):
        a0 = e0(lambda x0: quantify(e1(x0))(lambda x1: p((x0, x1))))
        a1 = e1(a0)(lambda x1: p((a0, x1)))
        return (a0, a1)

    return selected


def sequence_product(selectors: Sequence[HistorySelector]) -> SelectionFunction:
    """Product of a list of history-dependent selectors.

    The result selects a whole move sequence: each selector picks its move
    given the moves chosen before it, anticipating the selectors after it.
    An empty list selects the empty sequence.
    """
    if not selectors:
        return unit([])
    head = selectors[0]
    tail = selectors[1:]

    def after_first(x):
        shifted = [_prefixed(sel, x) for sel in tail]
        return map_selection(lambda xs, x=x: [x] + xs, sequence_product(shifted))

    return bind(head([]), after_first)


def _prefixed(selector: HistorySelector, move) -> HistorySelector:
    return lambda history: selector([move] + history)
