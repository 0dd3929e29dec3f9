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
from lsst.ts.scoring import BarStyle, GameRef


class NotationTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self.store = scoring.GameStore()

    def parse(self, text: str) -> GameRef:
        return scoring.parse_game(text, self.store)

    def test_tokenize(self) -> None:
        tokens = scoring.tokenize("{0, -3||*}")
        self.assertEqual(
            [token.kind for token in tokens],
            ["open", "atom", "comma", "atom", "bar", "atom", "close"],
        )
        self.assertEqual(tokens[3].text, "-3")
        self.assertEqual(tokens[3].position, 4)
        self.assertEqual(tokens[4].bars, 2)
        self.assertEqual(tokens[0].bars, 0)

        with self.assertRaises(scoring.NotationSyntaxError) as context:
            scoring.tokenize("{0|x}")
        self.assertEqual(context.exception.position, 3)
        self.assertEqual(context.exception.text, "{0|x}")

    def test_parse(self) -> None:
        five = self.parse("5")
        self.assertTrue(five.is_leaf)
        self.assertEqual(five.score, 5)
        self.assertIs(self.parse(" -2 "), self.store.leaf(-2))
        self.assertIs(self.parse("{0|1||2|3}"), self.parse("{{0|1}|{2|3}}"))
        self.assertIs(self.parse("{1,0|0}"), self.parse("{0,1|0}"))
        self.assertIs(self.parse("{0,0|0}"), self.parse("{0|0}"))
        worked = self.parse(scoring_test_utils.WORKED_GAME)
        self.assertEqual(len(worked.left), 2)
        self.assertEqual(worked.parity, scoring.Parity.ODD)

    def test_syntax_errors(self) -> None:
        for text in ("{0|1", "{0,1}", "{0|1|2}", "abc", "", "{1/2|0}", "{0,|1}"):
            with self.subTest(text=text):
                with self.assertRaises(scoring.NotationSyntaxError):
                    self.parse(text)
        with self.assertRaises(scoring.EmptyOptionSetError):
            self.parse("{0|}")
        with self.assertRaises(scoring.MixedParityError):
            self.parse("{0|{0|0}}")

    def test_format(self) -> None:
        g = self.parse("{{0|1}|{2|3}}")
        self.assertEqual(scoring.format_game(g), "{{0|1}|{2|3}}")
        self.assertEqual(scoring.format_game(g, BarStyle.BARS), "{0|1||2|3}")
        self.assertEqual(scoring.format_game(self.parse("7"), BarStyle.BARS), "7")
        gadget = scoring.q_gadget(1, self.store)
        self.assertEqual(scoring.format_game(gadget, BarStyle.BARS), "{0|0||1|1}")
        self.assertEqual(scoring.format_game(self.parse("-3")), "-3")
        self.assertEqual(str(g), "{{0|1}|{2|3}}")

    def test_parse_partizan(self) -> None:
        partizan = self.store.partizan
        self.assertIs(scoring.parse_partizan("*", partizan), scoring.p_star(partizan))
        self.assertIs(
            scoring.parse_partizan("{0|}", partizan), scoring.p_int(1, partizan)
        )
        half_star = scoring.parse_partizan("1/2*", partizan)
        self.assertTrue(
            scoring.p_eq(
                half_star,
                scoring.p_sum(
                    scoring.p_number("1/2", partizan), scoring.p_star(partizan)
                ),
            )
        )
        self.assertIs(
            scoring.parse_partizan("3/8", partizan),
            scoring.p_number("3/8", partizan),
        )
        with self.assertRaises(scoring.NotationSyntaxError):
            scoring.parse_partizan("1/0", partizan)

    @hypothesis.settings(
        derandomize=True,
        max_examples=scoring_test_utils.PROPERTY_EXAMPLES,
        deadline=None,
    )
    @hypothesis.given(seed=scoring_test_utils.seeds)
    def test_round_trip(self, seed: int) -> None:
        rng = random.Random(seed)
        g = scoring_test_utils.random_game(rng, self.store, depth=4)
        for style in BarStyle:
            with self.subTest(style=style):
                self.assertIs(self.parse(scoring.format_game(g, style)), g)


if __name__ == "__main__":
    unittest.main()
