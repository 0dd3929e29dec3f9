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

__all__ = [
    "OCTET_NUMBERS",
    "OCTET_STARRED",
    "BarStyle",
    "Comparison",
    "Parity",
    "UValue",
]

from enum import Enum, IntEnum
from fractions import Fraction


class Parity(IntEnum):
    """Parity of a well-tempered game.

    Even-tempered games have value 0, so that parities add modulo 2.
    """

    EVEN = 0
    ODD = 1

    def flip(self) -> "Parity":
        return Parity(1 - self.value)

    @classmethod
    def of_sum(cls, *parities: int) -> "Parity":
        """Return the parity of a disjunctive compound of games with the
        given parities.
        """
        return cls(sum(parities) % 2)


class Comparison(Enum):
    """Four-way verdict of comparing two games."""

    LT = "lt"
    GT = "gt"
    EQ = "eq"
    INCOMPARABLE = "incomparable"


class BarStyle(Enum):
    """Printing style of the brace notation."""

    NESTED = "nested"
    BARS = "bars"


class UValue(Enum):
    """The eight u-values of Boolean games, in their conventional order."""

    ZERO = "0"
    QUARTER = "1/4"
    THREE_EIGHTHS = "3/8"
    HALF = "1/2"
    HALF_STAR = "1/2*"
    FIVE_EIGHTHS = "5/8"
    THREE_QUARTERS = "3/4"
    ONE = "1"

    @property
    def index(self) -> int:
        return list(UValue).index(self)


# The number part of each u-value.
OCTET_NUMBERS = {
    UValue.ZERO: Fraction(0),
    UValue.QUARTER: Fraction(1, 4),
    UValue.THREE_EIGHTHS: Fraction(3, 8),
    UValue.HALF: Fraction(1, 2),
    UValue.HALF_STAR: Fraction(1, 2),
    UValue.FIVE_EIGHTHS: Fraction(5, 8),
    UValue.THREE_QUARTERS: Fraction(3, 4),
    UValue.ONE: Fraction(1),
}

# The u-values that carry a star in addition to their number part.
OCTET_STARRED = frozenset({UValue.HALF_STAR})
