# This file is part of ts_scoring.
#
# Developed for the Vera C. Rubin Observatory Telescope and Site Systems.
# This product includes software developed by the LSST Project
# (https://www.lsst.org).
# See the COPYRIGHT file at the top-level directory of this distribution
# for details of code ownership.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

import random
import unittest

import hypothesis
import scoring_test_utils
from lsst.ts import scoring
from lsst.ts.scoring import (
    AND_COMBINER,
    OR_COMBINER,
    STAR_COMBINER,
    Combiner,
    GameRef,
    Parity,
)

# Domains of the random combiners.
DOMAINS = ((-1, 0, 1), (0, 1, 2))


class DisjunctiveTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.store = scoring.GameStore()

    def parse(self, text: str) -> GameRef:
        return scoring.parse_game(text, self.store)

    def random_games(
        self, rng: random.Random, domains=DOMAINS, depth: int = 2
    ) -> list[GameRef]:
        return [
            scoring_test_utils.random_game(rng, self.store, depth, values=domain)
            for domain in domains
        ]

    def test_combiner(self) -> None:
        self.assertEqual(OR_COMBINER(0, 1), 1)
        self.assertEqual(AND_COMBINER(0, 1), 0)
        self.assertEqual(STAR_COMBINER(1, 1), 1)
        self.assertEqual(STAR_COMBINER(-1, 0), -1)
        self.assertEqual(OR_COMBINER.arity, 2)
        self.assertEqual(OR_COMBINER, Combiner.from_function([(0, 1), (0, 1)], max))
        self.assertNotEqual(OR_COMBINER, AND_COMBINER)
        self.assertEqual(Combiner.from_json(OR_COMBINER.to_json()), OR_COMBINER)
        self.assertEqual(Combiner.constant([(0, 1)], 3)(1), 3)

        with self.assertRaises(scoring.NotOrderPreservingError):
            Combiner.from_function([(0, 1)], lambda x: -x)
        with self.assertRaises(ValueError):
            Combiner([(0, 1)], {(0,): 0})
        with self.assertRaises(ValueError):
            Combiner([()], {})
        with self.assertRaises(ValueError):
            Combiner([], {})

    def test_combiner_algebra(self) -> None:
        three_way = scoring.compose(OR_COMBINER, AND_COMBINER, 1)
        self.assertEqual(three_way.arity, 3)
        self.assertEqual(three_way(0, 1, 1), 1)
        self.assertEqual(three_way(0, 1, 0), 0)
        self.assertEqual(three_way(1, 0, 0), 1)
        conjugate = scoring.negation_conjugate(OR_COMBINER)
        self.assertEqual(conjugate.domains, ((-1, 0), (-1, 0)))
        self.assertEqual(conjugate(-1, 0), -1)
        self.assertEqual(conjugate(0, 0), 0)
        shifted = Combiner.from_function([(0, 1), (-1, 0, 1)], lambda x, y: 2 * x + y)
        swapped = scoring.permute(shifted, [1, 0])
        self.assertEqual(swapped.domains, ((-1, 0, 1), (0, 1)))
        self.assertEqual(swapped(-1, 1), 1)

        with self.assertRaises(scoring.ValueOutsideDomainError):
            scoring.compose(OR_COMBINER, STAR_COMBINER)
        with self.assertRaises(scoring.ArityMismatchError):
            scoring.permute(OR_COMBINER, [0, 0])

    def test_sum(self) -> None:
        self.assertIs(
            scoring.sum(self.parse("3"), self.parse("{0|2}")), self.parse("{3|5}")
        )
        self.assertIs(
            scoring.diff(self.parse("{0|2}"), self.parse("{0|2}")),
            self.parse("{{-2|0}|{0|2}}"),
        )
        difference = scoring.diff(self.parse("{0|2}"), self.parse("{0|2}"))
        self.assertEqual(
            scoring.outcome(difference), scoring.Outcome(-2, 0, Parity.EVEN)
        )

    def test_boolean_operations(self) -> None:
        switch = self.parse("{0|1}")
        zero = self.parse("0")
        one = self.parse("1")
        self.assertIs(scoring.or_op(switch, zero), switch)
        self.assertIs(scoring.or_op(switch, one), self.parse("{1|1}"))
        self.assertIs(scoring.and_op(switch, zero), self.parse("{0|0}"))
        self.assertIs(scoring.and_op(switch, one), switch)
        self.assertIs(scoring.star_op(self.parse("1"), self.parse("1")), one)

        with self.assertRaises(scoring.ValueOutsideDomainError):
            scoring.or_op(self.parse("2"), zero)
        with self.assertRaises(scoring.ArityMismatchError):
            scoring.extend(OR_COMBINER, [zero])

    def test_round_to_set(self) -> None:
        self.assertIs(
            scoring.round_to_set(self.parse("{-2|2}"), {0, 1}), self.parse("{0|1}")
        )
        # Ties go down.
        self.assertIs(scoring.round_to_set(self.parse("1"), {0, 2}), self.parse("0"))
        with self.assertRaises(ValueError):
            scoring.round_to_set(self.parse("1"), [])

    def test_ampersand(self) -> None:
        one = self.parse("1")
        zero = self.parse("0")
        gadget = scoring.ampersand(one, zero)
        self.assertIs(gadget, scoring.q_gadget(1, self.store))
        sides = scoring.sides(gadget)
        self.assertTrue(scoring.equivalent(sides.up, one))
        self.assertTrue(scoring.equivalent(sides.down, zero))
        self.assertIs(scoring.ampersand(one, one), one)
        self.assertEqual(
            scoring.value_set(scoring.ampersand(self.parse("2"), zero, {0, 1})),
            frozenset({0, 1}),
        )

        with self.assertRaises(scoring.NotInvertibleError):
            scoring.ampersand(gadget, zero)
        with self.assertRaises(scoring.ParityMismatchError):
            scoring.ampersand(zero, self.parse("{0|0}"))
        with self.assertRaises(scoring.NotComparableError):
            scoring.ampersand(zero, one)

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_unary_extension(self, seed: int) -> None:
        rng = random.Random(seed)
        domain = (-2, -1, 0, 1, 2)
        combiner = scoring_test_utils.random_monotone_combiner(rng, [domain])
        g = scoring_test_utils.random_game(rng, self.store, values=domain)
        result = scoring.outcome(g)
        extended = scoring.outcome(scoring.extend(combiner, [g]))
        self.assertEqual(extended.l, combiner(result.l))
        self.assertEqual(extended.r, combiner(result.r))
        self.assertEqual(extended.lf, combiner(result.lf))
        self.assertEqual(extended.rf, combiner(result.rf))

        constant = scoring.extend(Combiner.constant([domain], 0), [g])
        if g.parity == Parity.EVEN:
            self.assertTrue(scoring.equivalent(constant, self.parse("0")))
        else:
            self.assertTrue(scoring.equivalent(constant, self.parse("{0|0}")))

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_relabeling_between_equal_sized_sets(self, seed: int) -> None:
        rng = random.Random(seed)
        source = sorted(rng.sample(range(-3, 4), 3))
        target = sorted(rng.sample(range(-6, 7), 3))
        forward = Combiner.from_function(
            [source], lambda x: target[source.index(x)], "forward"
        )
        backward = Combiner.from_function(
            [target], lambda y: source[target.index(y)], "backward"
        )
        g, h = (
            scoring_test_utils.random_game(rng, self.store, 2, values=source)
            for _ in range(2)
        )
        image_g = scoring.extend(forward, [g])
        image_h = scoring.extend(forward, [h])
        self.assertLessEqual(scoring.value_set(image_g), set(target))
        self.assertIs(scoring.extend(backward, [image_g]), g)
        self.assertEqual(scoring.ge(g, h), scoring.ge(image_g, image_h))
        self.assertEqual(scoring.equivalent(g, h), scoring.equivalent(image_g, image_h))

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.SLOW_PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_extension_identities(self, seed: int) -> None:
        rng = random.Random(seed)
        combiner = scoring_test_utils.random_monotone_combiner(rng, DOMAINS)
        games = self.random_games(rng)
        extended = scoring.extend(combiner, games)

        swapped = scoring.permute(combiner, [1, 0])
        self.assertIs(scoring.extend(swapped, games[::-1]), extended)

        conjugate = scoring.negation_conjugate(combiner)
        negated = [scoring.negate(game) for game in games]
        self.assertIs(scoring.extend(conjugate, negated), scoring.negate(extended))

        inner = Combiner.from_function([(0, 1), (0, 1)], lambda x, y: x + y, "add")
        composed = scoring.compose(combiner, inner, 1)
        parts = self.random_games(rng, [(0, 1), (0, 1)])
        self.assertIs(
            scoring.extend(composed, [games[0]] + parts),
            scoring.extend(combiner, [games[0], scoring.extend(inner, parts)]),
        )

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.SLOW_PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_extension_order(self, seed: int) -> None:
        rng = random.Random(seed)
        combiner = scoring_test_utils.random_monotone_combiner(rng, DOMAINS)
        step = rng.randint(0, 2)
        larger = Combiner.from_function(
            DOMAINS, lambda *args: combiner(*args) + step, "larger"
        )
        games = self.random_games(rng)
        self.assertTrue(
            scoring.ge(scoring.extend(larger, games), scoring.extend(combiner, games))
        )

        other = scoring_test_utils.random_game(rng, self.store, 2, values=DOMAINS[0])
        if scoring.ge(other, games[0]):
            self.assertTrue(
                scoring.ge(
                    scoring.extend(combiner, [other, games[1]]),
                    scoring.extend(combiner, games),
                )
            )
        if all(scoring.in_I(game) for game in games):
            self.assertTrue(scoring.in_I(scoring.extend(combiner, games)))


if __name__ == "__main__":
    unittest.main()
