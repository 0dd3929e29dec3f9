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
    "GameRef",
    "GameStore",
    "GapPair",
    "Outcome",
    "cool",
    "default_store",
    "depth",
    "even_projection",
    "game_from_json",
    "game_to_json",
    "gaps",
    "heat",
    "is_integer",
    "is_s_valued",
    "lf",
    "make_game",
    "make_leaf",
    "negate",
    "outcome",
    "parity",
    "q_gadget",
    "rf",
    "shift",
    "star",
    "star_sum",
    "subgames",
    "value_set",
]

import dataclasses
import logging
import math
import threading
import typing

from .base_store import BaseStore, memoized
from .enums import Parity
from .errors import EmptyOptionSetError, MixedParityError
from .partizan import PartizanStore, default_partizan_store
from .utils import check_score

_default_store: "GameStore | None" = None
_default_store_lock = threading.Lock()


class GameRef:
    """An interned well-tempered scoring game.

    A leaf has an integer ``score`` and no options. An inner node has
    non-empty ``left`` and ``right`` option tuples, sorted by uid. Refs are
    created by `GameStore` only, so structurally equal games are the same
    object.
    """

    __slots__ = ("uid", "store", "score", "left", "right", "parity")

    def __init__(
        self,
        uid: int,
        store: "GameStore",
        score: int | None,
        left: tuple["GameRef", ...],
        right: tuple["GameRef", ...],
        parity: Parity,
    ) -> None:
        self.uid = uid
        self.store = store
        self.score = score
        self.left = left
        self.right = right
        self.parity = parity

    @property
    def is_leaf(self) -> bool:
        return self.score is not None

    @property
    def options(self) -> tuple["GameRef", ...]:
        return self.left + self.right

    def __repr__(self) -> str:
        return f"GameRef({self.store.render(self)})"

    def __str__(self) -> str:
        return self.store.render(self)


@dataclasses.dataclass(frozen=True)
class Outcome:
    """Optimal scores of a game.

    Attributes
    ----------
    l: `int`
        The score when Left moves first.
    r: `int`
        The score when Right moves first.
    parity: `Parity`
        The parity of the game.
    """

    l: int  # noqa: E741
    r: int
    parity: Parity

    @property
    def lf(self) -> int:
        """The score when Left moves last."""
        return self.l if self.parity == Parity.ODD else self.r

    @property
    def rf(self) -> int:
        """The score when Right moves last."""
        return self.r if self.parity == Parity.ODD else self.l


@dataclasses.dataclass(frozen=True)
class GapPair:
    """Largest R - L over the even and the odd subgames of a game.

    ``gap1`` is ``-math.inf`` when the game has no odd subgame.
    """

    gap0: int
    gap1: int | float


class GameStore(BaseStore):
    """Hash-consing store of well-tempered scoring games.

    Parameters
    ----------
    log: `logging.Logger` or `None`
        Parent logger.
    partizan: `PartizanStore` or `None`
        The store holding the partizan images of these games. A new store is
        created if None.
    """

    def __init__(
        self,
        log: logging.Logger | None = None,
        partizan: PartizanStore | None = None,
    ) -> None:
        super().__init__(log)
        if partizan is None:
            partizan = PartizanStore(log=self.log)
        self.partizan = partizan
        self.partizan.games = self
        self.log.debug("GameStore constructed.")

    def leaf(self, score: int) -> GameRef:
        score = check_score(int(score))
        return self.intern(
            ("leaf", score),
            lambda uid: GameRef(uid, self, score, (), (), Parity.EVEN),
        )

    def node(
        self, left: typing.Iterable[GameRef], right: typing.Iterable[GameRef]
    ) -> GameRef:
        """Intern the inner node {left|right}.

        Raises
        ------
        EmptyOptionSetError
            If either side is empty.
        MixedParityError
            If the options do not all have the same parity.
        """
        left_options = _sorted_options(left)
        right_options = _sorted_options(right)
        if not left_options or not right_options:
            raise EmptyOptionSetError(
                f"A game needs left and right options; got {len(left_options)} "
                f"left and {len(right_options)} right."
            )
        options = left_options + right_options
        for option in options:
            if option.store is not self:
                raise ValueError("Cannot mix games of different stores.")
        parities = {option.parity for option in options}
        if len(parities) != 1:
            raise MixedParityError(
                "All options of a well-tempered game must have the same parity; "
                f"got {[str(option) for option in options]}."
            )
        node_parity = parities.pop().flip()
        key = (
            "node",
            tuple(option.uid for option in left_options),
            tuple(option.uid for option in right_options),
        )
        return self.intern(
            key,
            lambda uid: GameRef(
                uid, self, None, left_options, right_options, node_parity
            ),
        )

    def render(self, node: typing.Any) -> str:
        if node.is_leaf:
            return str(node.score)
        left = ",".join(self.render(option) for option in node.left)
        right = ",".join(self.render(option) for option in node.right)
        return f"{{{left}|{right}}}"


def _sorted_options(options: typing.Iterable[GameRef]) -> tuple[GameRef, ...]:
    unique = {option.uid: option for option in options}
    return tuple(unique[uid] for uid in sorted(unique))


def default_store() -> GameStore:
    """Return the process-wide game store.

    It is paired with `default_partizan_store`.
    """
    global _default_store
    with _default_store_lock:
        if _default_store is None:
            _default_store = GameStore(partizan=default_partizan_store())
        return _default_store


def make_leaf(n: int, store: GameStore | None = None) -> GameRef:
    """Return the integer game n.

    Raises
    ------
    ScoreOverflowError
        If n does not fit in 64 signed bits.
    """
    if store is None:
        store = default_store()
    return store.leaf(n)


def make_game(
    left: typing.Iterable[GameRef],
    right: typing.Iterable[GameRef],
    store: GameStore | None = None,
) -> GameRef:
    """Return the game {left|right}.

    Parameters
    ----------
    left: iterable of `GameRef`
        Left options, not empty.
    right: iterable of `GameRef`
        Right options, not empty.
    store: `GameStore` or `None`
        The store; if None the store of the options is used.

    Returns
    -------
    GameRef
        The interned game, with parity opposite to that of its options.

    Raises
    ------
    EmptyOptionSetError
        If either side is empty.
    MixedParityError
        If the options have different parities.
    """
    left = list(left)
    right = list(right)
    if store is None:
        options = left + right
        store = options[0].store if options else default_store()
    return store.node(left, right)


def star(store: GameStore | None = None) -> GameRef:
    zero = make_leaf(0, store)
    return make_game([zero], [zero], zero.store)


def q_gadget(n: int, store: GameStore | None = None) -> GameRef:
    """Return {{0|0}|{n|n}}, which has upside n and downside 0 for n > 0."""
    zero = make_leaf(0, store)
    target = make_leaf(n, zero.store)
    return make_game(
        [make_game([zero], [zero])], [make_game([target], [target])], zero.store
    )


@memoized("outcome")
def outcome(g: GameRef) -> Outcome:
    """Return the optimal scores of g with Left and with Right moving first."""
    if g.is_leaf:
        return Outcome(g.score, g.score, Parity.EVEN)
    left_first = max(outcome(option).r for option in g.left)
    right_first = min(outcome(option).l for option in g.right)
    return Outcome(left_first, right_first, g.parity)


def parity(g: GameRef) -> Parity:
    return g.parity


def lf(g: GameRef) -> int:
    return outcome(g).lf


def rf(g: GameRef) -> int:
    return outcome(g).rf


@memoized("gaps")
def gaps(g: GameRef) -> GapPair:
    """Return the even and odd gaps of g.

    The gap of a parity is the largest R - L over the subgames of g with
    that parity.
    """
    if g.is_leaf:
        return GapPair(0, -math.inf)
    result = outcome(g)
    own = result.r - result.l
    child_gaps = [gaps(option) for option in g.options]
    gap0 = max(child.gap0 for child in child_gaps)
    gap1 = max(child.gap1 for child in child_gaps)
    if g.parity == Parity.EVEN:
        gap0 = max(gap0, own)
    else:
        gap1 = max(gap1, own)
    return GapPair(gap0, gap1)


@memoized("negate")
def negate(g: GameRef) -> GameRef:
    if g.is_leaf:
        return g.store.leaf(-g.score)
    return g.store.node(
        [negate(option) for option in g.right], [negate(option) for option in g.left]
    )


@memoized("shift")
def shift(g: GameRef, k: int) -> GameRef:
    """Return g + k, which adds k to every leaf of g."""
    if k == 0:
        return g
    if g.is_leaf:
        return g.store.leaf(g.score + k)
    return g.store.node(
        [shift(option, k) for option in g.left],
        [shift(option, k) for option in g.right],
    )


@memoized("heat")
def heat(g: GameRef, t: int) -> GameRef:
    """Heat g by t, so that every move earns its mover t points.

    Parameters
    ----------
    g: `GameRef`
        The game.
    t: `int`
        The amount; negative values cool the game.

    Returns
    -------
    GameRef
        Integers are unchanged; {GL|GR} becomes
        {heat(GL, t) + t | heat(GR, t) - t}.
    """
    if g.is_leaf or t == 0:
        return g
    return g.store.node(
        [shift(heat(option, t), t) for option in g.left],
        [shift(heat(option, t), -t) for option in g.right],
    )


def cool(g: GameRef, t: int) -> GameRef:
    return heat(g, -t)


@memoized("star_sum")
def star_sum(g: GameRef) -> GameRef:
    """Return g + *, structurally equal to the disjunctive sum."""
    if g.is_leaf:
        return g.store.node([g], [g])
    return g.store.node(
        [star_sum(option) for option in g.left] + [g],
        [star_sum(option) for option in g.right] + [g],
    )


def even_projection(g: GameRef) -> GameRef:
    """Return g if g is even, else g + *."""
    return g if g.parity == Parity.EVEN else star_sum(g)


def subgames(g: GameRef) -> frozenset[GameRef]:
    """Return every game reachable from g, g included."""
    seen: dict[int, GameRef] = {}
    pending = [g]
    while pending:
        current = pending.pop()
        if current.uid in seen:
            continue
        seen[current.uid] = current
        pending.extend(current.options)
    return frozenset(seen.values())


@memoized("value_set")
def value_set(g: GameRef) -> frozenset[int]:
    if g.is_leaf:
        return frozenset((g.score,))
    return frozenset().union(*(value_set(option) for option in g.options))


def is_s_valued(g: GameRef, values: typing.Iterable[int]) -> bool:
    return value_set(g) <= frozenset(values)


@memoized("depth")
def depth(g: GameRef) -> int:
    """Return the length of the longest play of g."""
    if g.is_leaf:
        return 0
    return 1 + max(depth(option) for option in g.options)


def is_integer(g: GameRef) -> bool:
    """Return True if g is an integer leaf (structurally, not up to
    equivalence).
    """
    return g.is_leaf


def game_to_json(g: GameRef) -> dict[str, typing.Any]:
    """Serialize a game as ``{"score": n}`` or ``{"left": [...], "right":
    [...]}``.
    """
    if g.is_leaf:
        return {"score": g.score}
    return {
        "left": [game_to_json(option) for option in g.left],
        "right": [game_to_json(option) for option in g.right],
    }


def game_from_json(
    data: dict[str, typing.Any], store: GameStore | None = None
) -> GameRef:
    """Build a game from the output of `game_to_json`.

    Raises
    ------
    ValueError
        If the data is neither a leaf nor an inner node.
    """
    if store is None:
        store = default_store()
    if "score" in data:
        return store.leaf(data["score"])
    if "left" not in data or "right" not in data:
        raise ValueError(f"Cannot read a game from {data!r}.")
    return store.node(
        [game_from_json(item, store) for item in data["left"]],
        [game_from_json(item, store) for item in data["right"]],
    )
