import itertools

from selgames.selection import (
    bind,
    map_selection,
    pair_product,
    quantify,
    sequence_product,
    unit,
)
from selgames.selectors import Direction, extremum_bool, extremum_generic

from helpers import all_valuations, bigotimes_explicit


def argmax(xs):
    return extremum_generic(Direction.MAXIMIZE, xs)


def argmin(xs):
    return extremum_generic(Direction.MINIMIZE, xs)


class TestQuantify:
    def test_argmax_identity(self):
        assert quantify(argmax([1, 2, 3]))(lambda x: x) == 3

    def test_unit_squaring(self):
        assert quantify(unit(7))(lambda x: x * x) == 49

    def test_boolean_existence_over_strings(self):
        # The quantifier reports whether some string has length 3.
        e = extremum_bool(Direction.MAXIMIZE, ["ab", "abc", "a"])
        assert quantify(e)(lambda s: len(s) == 3) is True
        e2 = extremum_bool(Direction.MAXIMIZE, ["ab", "abcd"])
        assert quantify(e2)(lambda s: len(s) == 3) is False

    def test_agrees_with_direct_application_everywhere(self):
        xs = ["a", "b", "c"]
        for e in [unit("b"), argmax(xs), argmin(xs)]:
            for p in all_valuations(xs, [0, 1, 2]):
                assert quantify(e)(p) == p(e(p))


class TestUnit:
    def test_constant(self):
        assert unit(5)(lambda x: -x) == 5

    def test_quantified(self):
        assert quantify(unit(2))(lambda x: x * x) == 4

    def test_string(self):
        assert unit("a")(len) == "a"


class TestMapSelection:
    def test_identity_law(self):
        xs = [1, 2, 3]
        for p in all_valuations(xs, [0, 1, 2]):
            assert map_selection(lambda x: x, argmax(xs))(p) == argmax(xs)(p)

    def test_negate_argmax(self):
        # The inner argmax maximizes q(negate x) = -x, so it picks 1.
        e = map_selection(lambda x: -x, argmax([1, 2, 3]))
        assert e(lambda y: y) == -1

    def test_map_unit(self):
        f = lambda x: x + 10
        for p in all_valuations([12, 13], [0, 1]):
            assert map_selection(f, unit(2))(p) == unit(f(2))(p)


class TestBind:
    def test_left_identity(self):
        xs = ["c", "d"]
        f = lambda x: argmax([x + "c", x + "d"])
        domain = ["ac", "ad", "bc", "bd"]
        for p in all_valuations(domain, [0, 1, 2]):
            for x in ["a", "b"]:
                assert bind(unit(x), f)(p) == f(x)(p)

    def test_right_identity(self):
        xs = [1, 2, 3]
        for e in [argmax(xs), argmin(xs), unit(2)]:
            for p in all_valuations(xs, [0, 1, 2]):
                assert bind(e, unit)(p) == e(p)

    def test_two_stage_choice_matches_brute_force(self):
        # e chooses from {a,b}, f(x) from {c,d}; check against exhaustive max.
        table = {("a", "c"): 3, ("a", "d"): 1, ("b", "c"): 2, ("b", "d"): 5}
        e = argmax(["a", "b"])
        f = lambda x: map_selection(lambda y, x=x: (x, y), argmax(["c", "d"]))
        chosen = bind(e, f)(lambda pair: table[pair])
        assert chosen == max(table, key=table.get) == ("b", "d")

    def test_associativity(self):
        xs = [0, 1]
        es = [argmax(xs), argmin(xs), unit(1)]
        fs = [
            lambda x: argmax([x, x + 1]),
            lambda x: unit(x + 1),
        ]
        gs = [
            lambda y: argmin([y, y + 1]),
            lambda y: unit(y),
        ]
        domain = [0, 1, 2, 3]
        for e, f, g in itertools.product(es, fs, gs):
            for p in all_valuations(domain, [0, 1, 2]):
                lhs = bind(bind(e, f), g)(p)
                rhs = bind(e, lambda x: bind(f(x), g))(p)
                assert lhs == rhs


class TestPairProduct:
    def test_minimax_table(self):
        # Maximizer then minimizer; brute-force minimax gives (b, c) worth 2.
        table = {("a", "c"): 3, ("a", "d"): 1, ("b", "c"): 2, ("b", "d"): 2}
        e0 = argmax(["a", "b"])
        e1 = lambda x: argmin(["c", "d"])
        pair = pair_product(e0, e1)(lambda xy: table[xy])
        assert pair == ("b", "c")
        assert table[pair] == 2

    def test_units(self):
        assert pair_product(unit(4), lambda x: unit(9))(lambda xy: 0) == (4, 9)

    def test_both_maximize_sum(self):
        e0 = argmax([1, 2])
        e1 = lambda x: argmax([1, 2])
        assert pair_product(e0, e1)(lambda xy: xy[0] + xy[1]) == (2, 2)

    def test_postcondition_decomposition(self):
        table = {("a", "c"): 1, ("a", "d"): 0, ("b", "c"): 2, ("b", "d"): 1}
        p = lambda xy: table[xy]
        e0 = argmax(["a", "b"])
        e1 = lambda x: argmin(["c", "d"])
        a0, a1 = pair_product(e0, e1)(p)
        assert a0 == e0(lambda x0: quantify(e1(x0))(lambda x1: p((x0, x1))))
        assert a1 == e1(a0)(lambda x1: p((a0, x1)))


class TestSequenceProduct:
    def test_empty(self):
        assert sequence_product([])(lambda h: sum(h)) == []

    def test_single_argmax(self):
        selectors = [lambda h: argmax([1, 2, 3])]
        assert sequence_product(selectors)(sum) == [3]

    def test_length_matches_selector_count(self):
        for n in range(5):
            selectors = [lambda h: argmax([0, 1]) for _ in range(n)]
            assert len(sequence_product(selectors)(sum)) == n

    def test_matches_explicit_formulation(self):
        # Alternating min/max over history-dependent candidates.
        def moves(h):
            return [m for m in (1, 2, 3) if h.count(m) < 2]

        def make(k):
            direction = Direction.MAXIMIZE if k % 2 == 0 else Direction.MINIMIZE
            return lambda h: extremum_generic(direction, moves(h))

        selectors = [make(k) for k in range(4)]

        def payoff(h):
            return sum((i + 1) * m for i, m in enumerate(h)) % 7

        assert sequence_product(selectors)(payoff) == bigotimes_explicit(selectors)(payoff)

    def test_global_maximum_for_all_argmax(self):
        # n argmax selectors attain the global payoff maximum (exhaustive check).
        import itertools as it
        import random

        rng = random.Random(42)
        for n, branching in [(3, 3), (4, 2), (5, 2), (2, 4)]:
            moves = list(range(branching))
            table = {
                h: rng.random() for h in it.product(moves, repeat=n)
            }
            payoff = lambda h, table=table: table[tuple(h)]
            selectors = [
                (lambda h: argmax(moves)) for _ in range(n)
            ]
            chosen = tuple(sequence_product(selectors)(payoff))
            assert table[chosen] == max(table.values())
