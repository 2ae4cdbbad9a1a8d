import random

import pytest
from hypothesis import given, strategies as st

from selgames.connect import ConnectConfig, rules as connect_rules
from selgames.engine import GameRules, SelectorKind, build_selectors, optimal_play
from selgames.oracle import best_line, compare_scored, minimax_value
from selgames.selectors import Direction, ScoredOutcome

from helpers import legal_histories

scored = st.builds(ScoredOutcome, st.integers(-1, 1), st.integers(0, 9))
directions = st.sampled_from([Direction.MINIMIZE, Direction.MAXIMIZE])


class TestCompareScored:
    def test_value_dominates(self):
        assert compare_scored(Direction.MAXIMIZE, (1, 9), (0, 1)) == 1
        assert compare_scored(Direction.MINIMIZE, (1, 9), (0, 1)) == -1

    def test_winner_prefers_speed(self):
        assert compare_scored(Direction.MAXIMIZE, (1, 3), (1, 7)) == 1

    def test_loser_prefers_delay(self):
        assert compare_scored(Direction.MAXIMIZE, (-1, 8), (-1, 2)) == 1
        assert compare_scored(Direction.MINIMIZE, (1, 8), (1, 2)) == 1

    def test_draws_prefer_fewer_moves(self):
        assert compare_scored(Direction.MAXIMIZE, (0, 2), (0, 5)) == 1

    @given(scored, scored, directions)
    def test_antisymmetric(self, o1, o2, direction):
        assert compare_scored(direction, o1, o2) == -compare_scored(direction, o2, o1)

    @given(scored, scored, scored, directions)
    def test_transitive(self, o1, o2, o3, direction):
        if (
            compare_scored(direction, o1, o2) >= 0
            and compare_scored(direction, o2, o3) >= 0
        ):
            assert compare_scored(direction, o1, o3) >= 0

    @given(st.lists(scored, min_size=1, max_size=8), directions)
    def test_total_order_sorts_consistently(self, outcomes, direction):
        import functools

        ordered = sorted(
            outcomes,
            key=functools.cmp_to_key(
                lambda a, b: -compare_scored(direction, a, b)
            ),
        )
        for a, b in zip(ordered, ordered[1:]):
            assert compare_scored(direction, a, b) >= 0


def tiny_connect():
    return ConnectConfig(width=3, height=2, run_length=2)


class TestMinimaxValue:
    def test_depth_zero_is_payoff(self):
        game = connect_rules(tiny_connect())
        assert minimax_value(game, [1, 2], 0) == game.payoff([1, 2])

    def test_decided_history_returns_immediately(self):
        config = tiny_connect()
        game = connect_rules(config)
        history = [1, 3, 1]  # first player stacks column 1 for a vertical pair
        assert game.payoff(history).value == 1
        assert minimax_value(game, history, 4) == game.payoff(history)

    def test_known_tiny_game(self):
        # On 3x2 connect-2 the first player wins on move 3.
        game = connect_rules(tiny_connect())
        assert minimax_value(game, [], 6) == ScoredOutcome(1, 3)

    def test_move_permutation_leaves_value_unchanged(self):
        config = tiny_connect()
        game = connect_rules(config)
        rng = random.Random(13)
        for _ in range(20):
            order = list(range(1, config.width + 1))
            rng.shuffle(order)
            shuffled = GameRules(
                possible_moves=lambda h, order=order: [
                    m for m in order if m in game.possible_moves(h)
                ],
                payoff=game.payoff,
                first_player_direction=game.first_player_direction,
                max_game_length=game.max_game_length,
            )
            assert minimax_value(shuffled, [], 6) == minimax_value(game, [], 6)

    def test_negative_depth_rejected(self):
        game = connect_rules(tiny_connect())
        with pytest.raises(ValueError):
            minimax_value(game, [], -1)


class TestBestLine:
    def test_line_attains_the_minimax_value(self):
        game = connect_rules(tiny_connect())
        line = best_line(game, [], 6)
        assert game.payoff(line) == minimax_value(game, [], 6)

    def test_line_from_every_position_is_consistent(self):
        game = connect_rules(tiny_connect())
        for history in legal_histories(game, include_terminal=False):
            line = best_line(game, history, 6)
            value = minimax_value(game, history, 6)
            assert game.payoff(list(history) + line) == value

    def test_decided_position_has_empty_line(self):
        game = connect_rules(tiny_connect())
        assert best_line(game, [1, 3, 1], 4) == []


class TestEngineAgreement:
    def test_tiny_connect_full_tree(self):
        # The two solvers share GameRules but nothing else.
        game = connect_rules(tiny_connect())
        selectors = build_selectors(game, SelectorKind.SCORED, 6)
        play = optimal_play(game, selectors)
        assert game.payoff(play) == minimax_value(game, [], 6)

    def test_from_every_non_terminal_history(self):
        game = connect_rules(tiny_connect())
        for history in legal_histories(game, include_terminal=False):
            depth = game.max_game_length - len(history)
            selectors = build_selectors(
                game, SelectorKind.SCORED, depth, prior_history=history
            )
            shifted = lambda rest: game.payoff(list(history) + rest)
            from selgames.selection import sequence_product

            play = sequence_product(selectors)(shifted)
            assert game.payoff(list(history) + play) == minimax_value(
                game, history, depth
            )
