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

import json
import math
import random
import unittest

import hypothesis
import scoring_test_utils
from lsst.ts import scoring
from lsst.ts.scoring import Parity


def times(i: int, n: int | float) -> int | float:
    """Return n if i is 1 and 0 if i is 0, even if n is -inf."""
    return n if i == 1 else 0


def gap(g: scoring.GameRef, i: int) -> int | float:
    pair = scoring.gaps(g)
    return pair.gap1 if i == 1 else pair.gap0


class CoreTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.store = scoring.GameStore()

    def parse(self, text: str) -> scoring.GameRef:
        return scoring.parse_game(text, self.store)

    def random_pair(self, seed: int) -> tuple[scoring.GameRef, scoring.GameRef]:
        rng = random.Random(seed)
        return (
            scoring_test_utils.random_game(rng, self.store),
            scoring_test_utils.random_game(rng, self.store),
        )

    def test_make_leaf(self) -> None:
        zero = scoring.make_leaf(0, self.store)
        self.assertTrue(zero.is_leaf)
        self.assertEqual(zero.parity, Parity.EVEN)
        self.assertEqual(scoring.make_leaf(-7, self.store).score, -7)
        five = scoring.make_leaf(5, self.store)
        self.assertIs(scoring.make_leaf(5, self.store), five)

        with self.assertRaises(scoring.ScoreOverflowError):
            scoring.make_leaf(scoring.MAX_SCORE + 1, self.store)
        with self.assertRaises(scoring.ScoreOverflowError):
            scoring.make_leaf(scoring.MIN_SCORE - 1, self.store)

    def test_make_game(self) -> None:
        zero = self.store.leaf(0)
        one = self.store.leaf(1)
        g = scoring.make_game([zero], [one])
        self.assertEqual(g.parity, Parity.ODD)
        self.assertEqual(str(g), "{0|1}")
        self.assertIs(scoring.make_game([zero], [zero]), scoring.star(self.store))
        # Options are deduplicated.
        self.assertIs(scoring.make_game([zero, zero], [one]), g)

        with self.assertRaises(scoring.MixedParityError):
            scoring.make_game([zero], [g])
        with self.assertRaises(scoring.EmptyOptionSetError):
            scoring.make_game([zero], [], self.store)
        with self.assertRaises(ValueError):
            scoring.make_game([zero], [scoring.GameStore().leaf(0)])

    def test_outcome(self) -> None:
        for text, expected in (
            ("{0|1}", (0, 1)),
            (scoring_test_utils.WORKED_GAME, (3, 1)),
            ("{2|-2}", (2, -2)),
            ("4", (4, 4)),
        ):
            with self.subTest(text=text):
                result = scoring.outcome(self.parse(text))
                self.assertEqual((result.l, result.r), expected)

        result = scoring.outcome(scoring.q_gadget(1, self.store))
        self.assertEqual((result.l, result.r), (0, 1))
        self.assertEqual(result.parity, Parity.EVEN)

    def test_lf_rf(self) -> None:
        odd = self.parse("{0|1}")
        self.assertEqual((scoring.lf(odd), scoring.rf(odd)), (0, 1))
        even = scoring.q_gadget(1, self.store)
        self.assertEqual((scoring.lf(even), scoring.rf(even)), (1, 0))

    def test_parity(self) -> None:
        self.assertEqual(scoring.parity(self.parse("0")), Parity.EVEN)
        self.assertEqual(scoring.parity(self.parse("{0|0}")), Parity.ODD)
        self.assertEqual(scoring.parity(self.parse("{0|0||0|0}")), Parity.EVEN)
        self.assertEqual(
            scoring.parity(self.parse(scoring_test_utils.WORKED_GAME)), Parity.ODD
        )

    def test_gaps(self) -> None:
        self.assertEqual(scoring.gaps(self.parse("3")), scoring.GapPair(0, -math.inf))
        self.assertEqual(scoring.gaps(self.parse("{-2|2}")), scoring.GapPair(0, 4))
        for n in range(1, 6):
            g = self.parse(f"{{{-n}|{n}}}")
            self.assertEqual(scoring.gaps(g), scoring.GapPair(0, 2 * n))
        worked = scoring.gaps(self.parse(scoring_test_utils.WORKED_GAME))
        self.assertEqual(worked, scoring.GapPair(1, 0))

    def test_negate(self) -> None:
        self.assertIs(scoring.negate(self.parse("{0|1}")), self.parse("{-1|0}"))
        star = scoring.star(self.store)
        self.assertIs(scoring.negate(star), star)
        worked = self.parse(scoring_test_utils.WORKED_GAME)
        self.assertIs(scoring.negate(scoring.negate(worked)), worked)

    def test_heat(self) -> None:
        star = scoring.star(self.store)
        for t in (-2, 1, 3):
            self.assertIs(scoring.heat(star, t), self.parse(f"{{{t}|{-t}}}"))
        worked = self.parse(scoring_test_utils.WORKED_GAME)
        self.assertIs(scoring.heat(worked, 0), worked)
        self.assertIs(scoring.cool(scoring.heat(worked, 2), 2), worked)
        self.assertIs(scoring.heat(self.parse("7"), 5), self.parse("7"))

        with self.assertRaises(scoring.ScoreOverflowError):
            scoring.heat(self.parse("{1|1}"), scoring.MAX_SCORE)

    def test_shift_and_star_sum(self) -> None:
        g = self.parse("{0|1}")
        self.assertIs(scoring.shift(g, 2), self.parse("{2|3}"))
        self.assertIs(scoring.star_sum(g), scoring.sum(g, scoring.star(self.store)))
        self.assertIs(scoring.star_sum(self.parse("3")), self.parse("{3|3}"))

    def test_even_projection(self) -> None:
        zero = self.parse("0")
        self.assertIs(scoring.even_projection(zero), zero)
        star = scoring.star(self.store)
        projected = scoring.even_projection(star)
        self.assertIs(projected, self.store.node([star], [star]))
        self.assertIs(scoring.even_projection(projected), projected)

    def test_q_gadget(self) -> None:
        self.assertIs(scoring.star(self.store), self.parse("{0|0}"))
        self.assertIs(scoring.q_gadget(1, self.store), self.parse("{0|0||1|1}"))
        self.assertIs(scoring.q_gadget(3, self.store), self.parse("{{0|0}|{3|3}}"))

    def test_subgames_and_values(self) -> None:
        worked = self.parse(scoring_test_utils.WORKED_GAME)
        self.assertEqual(scoring.value_set(worked), frozenset({1, 2, 3}))
        self.assertEqual(len(scoring.subgames(worked)), 7)
        self.assertIn(worked, scoring.subgames(worked))
        self.assertEqual(scoring.depth(worked), 3)
        self.assertTrue(scoring.is_s_valued(self.parse("{0|1}"), {0, 1}))
        self.assertFalse(scoring.is_s_valued(self.parse("{2|-2}"), {0, 1}))
        self.assertTrue(scoring.is_integer(self.parse("-4")))
        self.assertFalse(scoring.is_integer(self.parse("{-4|-4}")))

    def test_json(self) -> None:
        worked = self.parse(scoring_test_utils.WORKED_GAME)
        data = scoring.game_to_json(worked)
        self.assertEqual(data["left"], [{"score": 2}, {"score": 3}])
        text = json.dumps(data)
        self.assertIs(scoring.game_from_json(json.loads(text), self.store), worked)

        with self.assertRaises(ValueError):
            scoring.game_from_json({"left": []}, self.store)

    def test_interning_shares_subgames(self) -> None:
        before = len(self.store)
        self.parse("{1|1||2|2}")
        after = len(self.store)
        self.parse("{1|1||2|2}")
        self.assertEqual(len(self.store), after)
        self.assertGreater(after, before)

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_negation_outcomes(self, seed: int) -> None:
        g, _ = self.random_pair(seed)
        result = scoring.outcome(g)
        negated = scoring.outcome(scoring.negate(g))
        self.assertEqual(negated.l, -result.r)
        self.assertEqual(negated.r, -result.l)
        self.assertIs(scoring.negate(scoring.negate(g)), g)
        if g.parity == Parity.ODD:
            self.assertEqual((result.lf, result.rf), (result.l, result.r))
        else:
            self.assertEqual((result.lf, result.rf), (result.r, result.l))

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_heating(self, seed: int) -> None:
        g, _ = self.random_pair(seed)
        rng = random.Random(seed)
        s = rng.randint(-3, 3)
        t = rng.randint(-3, 3)
        heated = scoring.heat(g, t)
        result = scoring.outcome(g)
        heated_result = scoring.outcome(heated)
        self.assertEqual(heated_result.l, result.l + t * int(g.parity))
        self.assertEqual(heated_result.r, result.r - t * int(g.parity))
        self.assertIs(scoring.heat(scoring.heat(g, s), t), scoring.heat(g, s + t))
        if not g.is_leaf:
            self.assertEqual(scoring.gaps(heated).gap1, scoring.gaps(g).gap1 - 2 * t)
            self.assertEqual(scoring.gaps(heated).gap0, scoring.gaps(g).gap0)

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_identities(self, seed: int) -> None:
        g, h = self.random_pair(seed)
        k = scoring_test_utils.random_game(random.Random(seed + 1), self.store, 2)
        t = random.Random(seed).randint(-2, 2)
        zero = self.store.leaf(0)
        self.assertIs(scoring.sum(g, zero), g)
        self.assertIs(scoring.sum(g, h), scoring.sum(h, g))
        self.assertIs(
            scoring.sum(scoring.sum(g, h), k), scoring.sum(g, scoring.sum(h, k))
        )
        self.assertIs(
            scoring.negate(scoring.sum(g, h)),
            scoring.sum(scoring.negate(g), scoring.negate(h)),
        )
        self.assertIs(
            scoring.heat(scoring.sum(g, h), t),
            scoring.sum(scoring.heat(g, t), scoring.heat(h, t)),
        )
        self.assertIs(
            scoring.heat(scoring.negate(g), t), scoring.negate(scoring.heat(g, t))
        )
        self.assertEqual(scoring.sum(g, h).parity, Parity.of_sum(g.parity, h.parity))

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_mirrors(self, seed: int) -> None:
        g, _ = self.random_pair(seed)
        result = scoring.outcome(scoring.diff(g, g))
        self.assertGreaterEqual(result.r, 0)
        self.assertLessEqual(result.l, 0)

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_combined_strategies(self, seed: int) -> None:
        g, h = self.random_pair(seed)
        pg = int(g.parity)
        ph = int(h.parity)
        total = scoring.outcome(scoring.sum(g, h))
        og = scoring.outcome(g)
        oh = scoring.outcome(h)
        first = max(times(ph, gap(g, pg)), times(pg, gap(h, ph)))
        second = max(times(ph, gap(g, 1 - pg)), times(1 - pg, gap(h, ph)))
        self.assertGreaterEqual(total.r, og.r + oh.r - first)
        self.assertGreaterEqual(total.l, og.l + oh.r - second)
        # The duals, obtained by negating both games.
        self.assertLessEqual(total.l, og.l + oh.l + first)
        self.assertLessEqual(total.r, og.r + oh.l + second)
        if pg == 0 and ph == 0:
            self.assertGreaterEqual(total.r, og.r + oh.r)

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_gap_sums(self, seed: int) -> None:
        g, h = self.random_pair(seed)
        total = scoring.gaps(scoring.sum(g, h))
        self.assertLessEqual(total.gap0, scoring.gaps(g).gap0 + scoring.gaps(h).gap0)
        self.assertLessEqual(
            total.gap1, max(scoring.gaps(g).gap1, scoring.gaps(h).gap1)
        )

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_even_projection_laws(self, seed: int) -> None:
        rng = random.Random(seed)
        g = scoring_test_utils.random_game(rng, self.store, depth=2)
        h = scoring_test_utils.random_game(rng, self.store, depth=2)
        even = scoring.even_projection
        even_g = even(g)

        self.assertTrue(scoring.is_s_valued(even_g, scoring.value_set(g)))
        if scoring.in_I(g):
            self.assertTrue(scoring.in_I(even_g))
        self.assertEqual(even_g.parity, Parity.EVEN)
        self.assertIs(even(even_g), even_g)
        self.assertTrue(
            scoring.equivalent(even(scoring.negate(g)), scoring.negate(even_g))
        )

        self.assertEqual(
            scoring.ge(g, h),
            scoring.ge(even_g, even(h)) and g.parity == h.parity,
        )
        self.assertTrue(
            scoring.equivalent(even(scoring.sum(g, h)), scoring.sum(even_g, even(h)))
        )
        up, down = scoring.sides(g)
        self.assertTrue(scoring.equivalent(even(up), scoring.upside(even_g)))
        self.assertTrue(scoring.equivalent(even(down), scoring.downside(even_g)))

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_json_round_trip(self, seed: int) -> None:
        g, _ = self.random_pair(seed)
        data = json.loads(json.dumps(scoring.game_to_json(g)))
        self.assertIs(scoring.game_from_json(data, self.store), g)


if __name__ == "__main__":
    unittest.main()
