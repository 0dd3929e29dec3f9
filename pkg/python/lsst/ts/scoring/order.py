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
    "SidePair",
    "compare",
    "compare_invertible",
    "downside",
    "equivalent",
    "equivalent_minus",
    "equivalent_plus",
    "ge",
    "ge_minus",
    "ge_plus",
    "in_I",
    "in_J",
    "in_K",
    "invertible",
    "lf_equivalent_sample",
    "parity_incomparable",
    "relations",
    "rf_equivalent_sample",
    "sides",
    "upside",
]

import dataclasses
import typing

from .base_store import memoized
from .core import GameRef, gaps, lf, negate, outcome, rf, subgames
from .disjunctive import diff
from .disjunctive import sum as game_sum
from .enums import Comparison, Parity
from .errors import NotInIError

# Largest odd gap of a game in class J.
J_MAX_GAP1 = 2


@dataclasses.dataclass(frozen=True)
class SidePair:
    """The upside and downside of a game."""

    up: GameRef
    down: GameRef


def in_I(g: GameRef) -> bool:  # noqa: N802
    """Return True if every even subgame of g has R <= L."""
    return gaps(g).gap0 == 0


def in_J(g: GameRef) -> bool:  # noqa: N802
    return gaps(g).gap0 == 0 and gaps(g).gap1 <= J_MAX_GAP1


@memoized("upside")
def upside(g: GameRef) -> GameRef:
    """Return an invertible game equivalent to g when Left moves last.

    Options are replaced by their upsides; an even result with L < R is
    replaced by the integer R.
    """
    if g.is_leaf:
        return g
    candidate = g.store.node(
        [upside(option) for option in g.left], [upside(option) for option in g.right]
    )
    result = outcome(candidate)
    if candidate.parity == Parity.EVEN and result.l < result.r:
        return g.store.leaf(result.r)
    return candidate


def downside(g: GameRef) -> GameRef:
    """Return an invertible game equivalent to g when Right moves last."""
    return negate(upside(negate(g)))


def sides(g: GameRef) -> SidePair:
    return SidePair(upside(g), downside(g))


def compare_invertible(x: GameRef, y: GameRef) -> Comparison:
    """Compare two games of class I.

    Parameters
    ----------
    x: `GameRef`
        A game with gap0 = 0.
    y: `GameRef`
        A game with gap0 = 0.

    Returns
    -------
    Comparison
        x is at least y when the parities agree and R(x - y) >= 0.

    Raises
    ------
    NotInIError
        If either game has a nonzero even gap.
    """
    for game in (x, y):
        if not in_I(game):
            raise NotInIError(f"{game} has gap0 = {gaps(game).gap0}, not 0.")
    return _compare_invertible(x, y)


@memoized("compare_invertible")
def _compare_invertible(x: GameRef, y: GameRef) -> Comparison:
    if x is y:
        return Comparison.EQ
    if x.parity != y.parity:
        return Comparison.INCOMPARABLE
    x_ge_y = outcome(diff(x, y)).r >= 0
    y_ge_x = outcome(diff(y, x)).r >= 0
    if x_ge_y and y_ge_x:
        return Comparison.EQ
    if x_ge_y:
        return Comparison.GT
    if y_ge_x:
        return Comparison.LT
    return Comparison.INCOMPARABLE


def _at_least(x: GameRef, y: GameRef) -> bool:
    return compare_invertible(x, y) in (Comparison.GT, Comparison.EQ)


def parity_incomparable(g: GameRef, h: GameRef) -> bool:
    """Return True if g and h cannot be compared because their parities
    differ.
    """
    return g.parity != h.parity


def ge_plus(g: GameRef, h: GameRef) -> bool:
    """Return True if g is at least h whenever Left moves last."""
    return not parity_incomparable(g, h) and _at_least(upside(g), upside(h))


def ge_minus(g: GameRef, h: GameRef) -> bool:
    """Return True if g is at least h whenever Right moves last."""
    return not parity_incomparable(g, h) and _at_least(downside(g), downside(h))


def ge(g: GameRef, h: GameRef) -> bool:
    """Return True if g is at least h in every context.

    Parameters
    ----------
    g: `GameRef`
        The first game.
    h: `GameRef`
        The second game.

    Returns
    -------
    bool
        False if the parities differ, else whether both the upsides and the
        downsides compare.
    """
    return ge_plus(g, h) and ge_minus(g, h)


def equivalent(g: GameRef, h: GameRef) -> bool:
    return g is h or (ge(g, h) and ge(h, g))


def equivalent_plus(g: GameRef, h: GameRef) -> bool:
    return ge_plus(g, h) and ge_plus(h, g)


def equivalent_minus(g: GameRef, h: GameRef) -> bool:
    return ge_minus(g, h) and ge_minus(h, g)


def compare(g: GameRef, h: GameRef) -> Comparison:
    """Return the four-way verdict of the order on arbitrary games."""
    g_ge_h = ge(g, h)
    h_ge_g = ge(h, g)
    if g_ge_h and h_ge_g:
        return Comparison.EQ
    if g_ge_h:
        return Comparison.GT
    if h_ge_g:
        return Comparison.LT
    return Comparison.INCOMPARABLE


def relations(g: GameRef, h: GameRef) -> dict[str, bool]:
    """Return every order relation between g and h, by name."""
    return {
        "ge": ge(g, h),
        "le": ge(h, g),
        "equivalent": equivalent(g, h),
        "ge_plus": ge_plus(g, h),
        "le_plus": ge_plus(h, g),
        "equivalent_plus": equivalent_plus(g, h),
        "ge_minus": ge_minus(g, h),
        "le_minus": ge_minus(h, g),
        "equivalent_minus": equivalent_minus(g, h),
    }


def invertible(g: GameRef) -> bool:
    """Return True if g has an additive inverse up to equivalence, i.e. its
    upside and downside are equivalent.
    """
    return compare_invertible(downside(g), upside(g)) == Comparison.EQ


def in_K(g: GameRef) -> bool:  # noqa: N802
    """Return True if the sides of every subgame of g are equivalent to games
    of class J.

    A side outside J is accepted when its canonical form lies in J.
    """
    from .canonical import canonical_form

    for subgame in subgames(g):
        for side in (upside(subgame), downside(subgame)):
            if not in_J(side) and not in_J(canonical_form(side)):
                return False
    return True


def lf_equivalent_sample(
    g: GameRef, h: GameRef, tests: typing.Iterable[GameRef]
) -> bool:
    """Return True if g + X and h + X have the same score with Left moving
    last, for every X of a sample.
    """
    return all(lf(game_sum(g, test)) == lf(game_sum(h, test)) for test in tests)


def rf_equivalent_sample(
    g: GameRef, h: GameRef, tests: typing.Iterable[GameRef]
) -> bool:
    return all(rf(game_sum(g, test)) == rf(game_sum(h, test)) for test in tests)
