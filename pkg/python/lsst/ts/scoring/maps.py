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

__all__ = ["phi", "phi0", "phi1", "psi", "psi_minus", "psi_plus"]

from .base_store import memoized
from .core import GameRef, GameStore, default_store
from .enums import Parity
from .partizan import (
    PartizanRef,
    bracket_minus,
    bracket_plus,
    default_partizan_store,
    p_as_integer,
    p_int,
)


@memoized("psi")
def psi(g: GameRef) -> PartizanRef:
    """Map a scoring game to the partizan form with the same shape.

    Integers map to the partizan integers; ``{GL|GR}`` maps to the plain
    form ``{psi(GL)|psi(GR)}``.
    """
    partizan = g.store.partizan
    if g.is_leaf:
        return p_int(g.score, partizan)
    return partizan.node(
        [psi(option) for option in g.left], [psi(option) for option in g.right]
    )


@memoized("psi_plus")
def psi_plus(g: GameRef) -> PartizanRef:
    """Like `psi`, but every inner node goes through `bracket_plus`."""
    if g.is_leaf:
        return p_int(g.score, g.store.partizan)
    return bracket_plus(
        [psi_plus(option) for option in g.left],
        [psi_plus(option) for option in g.right],
    )


@memoized("psi_minus")
def psi_minus(g: GameRef) -> PartizanRef:
    """Like `psi`, but every inner node goes through `bracket_minus`."""
    if g.is_leaf:
        return p_int(g.score, g.store.partizan)
    return bracket_minus(
        [psi_minus(option) for option in g.left],
        [psi_minus(option) for option in g.right],
    )


def _game_store(p: PartizanRef) -> GameStore:
    games = p.store.games
    if games is None:
        if p.store is default_partizan_store():
            return default_store()
        raise ValueError("This partizan store is not paired with a game store.")
    return games


@memoized("phi")
def _phi(p: PartizanRef, index: int) -> GameRef:
    games = _game_store(p)
    n = p_as_integer(p)
    if n is not None:
        if index == 0:
            return games.leaf(n)
        return games.node([games.leaf(n - 1)], [games.leaf(n + 1)])
    other = 1 - index
    return games.node(
        [_phi(option, other) for option in p.left],
        [_phi(option, other) for option in p.right],
    )


def phi0(p: PartizanRef) -> GameRef:
    """Map a partizan game to an even-tempered scoring game.

    Parameters
    ----------
    p: `PartizanRef`
        The partizan form. Its options are used as given.

    Returns
    -------
    GameRef
        The integer n if p equals n; otherwise ``{phi1(pL)|phi1(pR)}``.
    """
    return _phi(p, 0)


def phi1(p: PartizanRef) -> GameRef:
    """Map a partizan game to an odd-tempered scoring game.

    Returns
    -------
    GameRef
        ``{n-1|n+1}`` if p equals the integer n; otherwise
        ``{phi0(pL)|phi0(pR)}``.
    """
    return _phi(p, 1)


def phi(p: PartizanRef, parity: Parity) -> GameRef:
    return _phi(p, int(parity))
