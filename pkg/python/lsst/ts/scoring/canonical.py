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
    "canonical_form",
    "canonical_sides",
    "canonical_via_psi",
    "heating_amount",
    "is_canonical",
]

import math

from .base_store import memoized
from .core import GameRef, gaps, heat, outcome, subgames
from .enums import Comparison, Parity
from .errors import NotInIError, NotInvertibleError
from .maps import phi, psi
from .order import (
    J_MAX_GAP1,
    SidePair,
    compare_invertible,
    downside,
    in_I,
    invertible,
    upside,
)
from .partizan import p_canonical

_AT_LEAST = (Comparison.GT, Comparison.EQ)
_AT_MOST = (Comparison.LT, Comparison.EQ)


def _check_invertible(g: GameRef) -> None:
    if not invertible(g):
        raise NotInvertibleError(
            f"{g} has no canonical form: its upside and downside differ."
        )


def canonical_form(g: GameRef) -> GameRef:
    """Return the canonical form of an invertible game.

    Parameters
    ----------
    g: `GameRef`
        An invertible game.

    Returns
    -------
    GameRef
        The equivalent game without dominated or reversible options in any
        subgame. Equivalent inputs give the same ref.

    Raises
    ------
    NotInvertibleError
        If g is not invertible.
    """
    _check_invertible(g)
    return _canonical(upside(g))


def canonical_sides(g: GameRef) -> SidePair:
    """Return the canonical forms of the upside and downside of any game."""
    return SidePair(_canonical(upside(g)), _canonical(downside(g)))


def _integer_collapse(g: GameRef) -> GameRef | None:
    # An even game equivalent to an integer n has L = R = n.
    if g.parity != Parity.EVEN:
        return None
    result = outcome(g)
    if result.l != result.r:
        return None
    integer = g.store.leaf(result.l)
    if compare_invertible(g, integer) == Comparison.EQ:
        return integer
    return None


def _undominated(options: set[GameRef], keep_high: bool) -> set[GameRef]:
    kept = set()
    for option in options:
        dominated = False
        for other in options:
            if other is option:
                continue
            verdict = compare_invertible(other, option)
            wanted = Comparison.GT if keep_high else Comparison.LT
            if verdict == wanted or (
                verdict == Comparison.EQ and other.uid < option.uid
            ):
                dominated = True
                break
        if not dominated:
            kept.add(option)
    return kept


def _bypass_left(options: set[GameRef], current: GameRef) -> set[GameRef]:
    result: set[GameRef] = set()
    for option in options:
        reversing = next(
            (
                reply
                for reply in option.right
                if compare_invertible(reply, current) in _AT_MOST
            ),
            None,
        )
        if reversing is None:
            result.add(option)
        elif not reversing.is_leaf:
            result.update(reversing.left)
    return result


def _bypass_right(options: set[GameRef], current: GameRef) -> set[GameRef]:
    result: set[GameRef] = set()
    for option in options:
        reversing = next(
            (
                reply
                for reply in option.left
                if compare_invertible(reply, current) in _AT_LEAST
            ),
            None,
        )
        if reversing is None:
            result.add(option)
        elif not reversing.is_leaf:
            result.update(reversing.right)
    return result


@memoized("canonical")
def _canonical(g: GameRef) -> GameRef:
    if g.is_leaf:
        return g
    store = g.store
    left = {_canonical(option) for option in g.left}
    right = {_canonical(option) for option in g.right}
    while True:
        if not left or not right:
            raise RuntimeError(f"Simplifying {g} removed every option of one player.")
        current = store.node(left, right)
        if not in_I(current):
            # Bypassing can leave class I; the upside restores it.
            current = upside(current)
            if current.is_leaf:
                return current
            left = {_canonical(option) for option in current.left}
            right = {_canonical(option) for option in current.right}
            current = store.node(left, right)
        collapsed = _integer_collapse(current)
        if collapsed is not None:
            return collapsed
        left = _undominated(left, keep_high=True)
        right = _undominated(right, keep_high=False)
        current = store.node(left, right)
        new_left = _bypass_left(left, current)
        new_right = _bypass_right(right, current)
        if new_left == left and new_right == right:
            return current
        left, right = new_left, new_right


def is_canonical(g: GameRef) -> bool:
    """Return True if no subgame of g has a dominated or reversible option
    and no even subgame is equivalent to an integer without being one.

    Raises
    ------
    NotInIError
        If g is not in class I.
    """
    if not in_I(g):
        raise NotInIError(f"{g} has gap0 = {gaps(g).gap0}, not 0.")
    for subgame in subgames(g):
        if subgame.is_leaf:
            continue
        if _integer_collapse(subgame) is not None:
            return False
        left = set(subgame.left)
        right = set(subgame.right)
        if _undominated(left, keep_high=True) != left:
            return False
        if _undominated(right, keep_high=False) != right:
            return False
        if _bypass_left(left, subgame) != left:
            return False
        if _bypass_right(right, subgame) != right:
            return False
    return True


def heating_amount(g: GameRef) -> int:
    """Return the smallest t >= 0 such that heating g by t brings its odd gap
    down to at most 2.
    """
    gap1 = gaps(g).gap1
    if gap1 <= J_MAX_GAP1:
        return 0
    return math.ceil((gap1 - J_MAX_GAP1) / 2)


def canonical_via_psi(g: GameRef) -> GameRef:
    """Compute the canonical form through the partizan canonical form.

    The upside of g is heated into class J, mapped to a partizan game,
    canonicalized there, mapped back with the parity of g and cooled again.

    Raises
    ------
    NotInvertibleError
        If g is not invertible.
    """
    _check_invertible(g)
    h = upside(g)
    if h.is_leaf:
        return h
    t = heating_amount(h)
    heated = heat(h, t)
    partizan = p_canonical(psi(heated))
    return heat(phi(partizan, h.parity), -t)
