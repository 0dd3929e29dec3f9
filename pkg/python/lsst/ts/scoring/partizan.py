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
    "PartizanRef",
    "PartizanStore",
    "bracket_minus",
    "bracket_plus",
    "default_partizan_store",
    "overheat",
    "p_as_integer",
    "p_as_number",
    "p_birthday",
    "p_canonical",
    "p_eq",
    "p_fuzzy",
    "p_game",
    "p_ge",
    "p_int",
    "p_is_all_small",
    "p_left_stop",
    "p_leq",
    "p_lhd",
    "p_lt",
    "p_neg",
    "p_number",
    "p_right_stop",
    "p_star",
    "p_sum",
]

import logging
import math
import threading
import typing
from fractions import Fraction

from .base_store import BaseStore, memoized
from .errors import EmptyOptionsError
from .utils import as_dyadic, format_dyadic

# Extra integers scanned on both sides of the stops when evaluating the
# {L|R}+ and {L|R}- brackets.
BRACKET_WINDOW_PADDING = 2

_default_store: "PartizanStore | None" = None
_default_store_lock = threading.Lock()


class PartizanRef:
    """An interned normal-play partizan game form.

    Instances are created by `PartizanStore` only. Two refs of the same store
    are the same object if and only if they are structurally equal forms.
    """

    __slots__ = ("uid", "store", "left", "right")

    def __init__(
        self,
        uid: int,
        store: "PartizanStore",
        left: tuple["PartizanRef", ...],
        right: tuple["PartizanRef", ...],
    ) -> None:
        self.uid = uid
        self.store = store
        self.left = left
        self.right = right

    def __repr__(self) -> str:
        return f"PartizanRef({self.store.render(self)})"

    def __str__(self) -> str:
        return self.store.render(self)


class PartizanStore(BaseStore):
    """Hash-consing store of partizan game forms.

    Parameters
    ----------
    log: `logging.Logger` or `None`
        Parent logger.
    """

    def __init__(self, log: logging.Logger | None = None) -> None:
        super().__init__(log)
        # The scoring game store this store is paired with, if any. It is
        # set by `GameStore` and used to map partizan games back.
        self.games: typing.Any = None
        self.log.debug("PartizanStore constructed.")

    def node(
        self,
        left: typing.Iterable[PartizanRef],
        right: typing.Iterable[PartizanRef],
    ) -> PartizanRef:
        """Intern the form {left|right}.

        Parameters
        ----------
        left: iterable of `PartizanRef`
            Left options, possibly empty.
        right: iterable of `PartizanRef`
            Right options, possibly empty.

        Returns
        -------
        PartizanRef
            The unique ref of the form.
        """
        left_options = _sorted_options(left)
        right_options = _sorted_options(right)
        for option in left_options + right_options:
            if option.store is not self:
                raise ValueError("Cannot mix partizan games of different stores.")
        key = (
            tuple(option.uid for option in left_options),
            tuple(option.uid for option in right_options),
        )
        return self.intern(
            key, lambda uid: PartizanRef(uid, self, left_options, right_options)
        )

    def render(self, node: typing.Any) -> str:
        number = _shape_number(node)
        if number is not None:
            return format_dyadic(number)
        if (
            len(node.left) == 1
            and node.left == node.right
            and _shape_number(node.left[0]) is not None
        ):
            base = _shape_number(node.left[0])
            return "*" if base == 0 else f"{format_dyadic(base)}*"
        left = ",".join(self.render(option) for option in node.left)
        right = ",".join(self.render(option) for option in node.right)
        return f"{{{left}|{right}}}"


def _sorted_options(options: typing.Iterable[PartizanRef]) -> tuple[PartizanRef, ...]:
    unique = {option.uid: option for option in options}
    return tuple(unique[uid] for uid in sorted(unique))


def default_partizan_store() -> PartizanStore:
    """Return the process-wide partizan store."""
    global _default_store
    with _default_store_lock:
        if _default_store is None:
            _default_store = PartizanStore()
        return _default_store


def p_game(
    left: typing.Iterable[PartizanRef],
    right: typing.Iterable[PartizanRef],
    store: PartizanStore | None = None,
) -> PartizanRef:
    left = list(left)
    right = list(right)
    if store is None:
        options = left + right
        store = options[0].store if options else default_partizan_store()
    return store.node(left, right)


def p_int(n: int, store: PartizanStore | None = None) -> PartizanRef:
    """Return the canonical form of an integer.

    Parameters
    ----------
    n: `int`
        The integer.
    store: `PartizanStore` or `None`
        The store; the default store if None.

    Returns
    -------
    PartizanRef
        ``{|}`` for 0, ``{n-1|}`` for positive and ``{|n+1}`` for negative n.
    """
    if store is None:
        store = default_partizan_store()
    game = store.node((), ())
    for _ in range(abs(n)):
        game = store.node((game,), ()) if n > 0 else store.node((), (game,))
    return game


def p_number(
    value: int | str | Fraction, store: PartizanStore | None = None
) -> PartizanRef:
    """Return the canonical form of a dyadic rational.

    Parameters
    ----------
    value: `int`, `str` or `fractions.Fraction`
        A dyadic rational such as ``Fraction(3, 8)`` or ``"3/8"``.
    store: `PartizanStore` or `None`
        The store; the default store if None.

    Returns
    -------
    PartizanRef
        ``{x - 2**-k | x + 2**-k}`` for x with denominator 2**k, k > 0.
    """
    number = as_dyadic(value)
    if store is None:
        store = default_partizan_store()
    if number.denominator == 1:
        return p_int(number.numerator, store)
    step = Fraction(1, number.denominator)
    return store.node(
        (p_number(number - step, store),), (p_number(number + step, store),)
    )


def p_star(store: PartizanStore | None = None) -> PartizanRef:
    zero = p_int(0, store)
    return zero.store.node((zero,), (zero,))


@memoized("p_leq")
def p_leq(g: PartizanRef, h: PartizanRef) -> bool:
    """Return True if g <= h.

    g <= h unless some left option of g is >= h or some right option of h
    is <= g.
    """
    if any(p_leq(h, option) for option in g.left):
        return False
    return not any(p_leq(option, g) for option in h.right)


def p_ge(g: PartizanRef, h: PartizanRef) -> bool:
    return p_leq(h, g)


def p_eq(g: PartizanRef, h: PartizanRef) -> bool:
    return g is h or (p_leq(g, h) and p_leq(h, g))


def p_lt(g: PartizanRef, h: PartizanRef) -> bool:
    return p_leq(g, h) and not p_leq(h, g)


def p_fuzzy(g: PartizanRef, h: PartizanRef) -> bool:
    return not p_leq(g, h) and not p_leq(h, g)


def p_lhd(g: PartizanRef, h: PartizanRef) -> bool:
    """Return True if g is less than or confused with h, i.e. not g >= h."""
    return not p_leq(h, g)


def p_sum(g: PartizanRef, h: PartizanRef) -> PartizanRef:
    """Return the disjunctive sum of two forms.

    The result is a plain form; use `p_canonical` to simplify it.
    """
    if h.uid < g.uid:
        g, h = h, g
    return _p_sum_ordered(g, h)


@memoized("p_sum")
def _p_sum_ordered(g: PartizanRef, h: PartizanRef) -> PartizanRef:
    left = [p_sum(option, h) for option in g.left]
    left += [p_sum(g, option) for option in h.left]
    right = [p_sum(option, h) for option in g.right]
    right += [p_sum(g, option) for option in h.right]
    return g.store.node(left, right)


@memoized("p_neg")
def p_neg(g: PartizanRef) -> PartizanRef:
    return g.store.node(
        [p_neg(option) for option in g.right], [p_neg(option) for option in g.left]
    )


@memoized("p_canonical")
def p_canonical(g: PartizanRef) -> PartizanRef:
    """Return the canonical form of a partizan game.

    Options are canonicalized first, then dominated options are removed and
    reversible options bypassed until neither applies. Two forms are equal
    in value if and only if their canonical forms are the same ref.
    """
    store = g.store
    left = {p_canonical(option) for option in g.left}
    right = {p_canonical(option) for option in g.right}
    while True:
        left = {a for a in left if not any(b is not a and p_leq(a, b) for b in left)}
        right = {a for a in right if not any(b is not a and p_leq(b, a) for b in right)}
        current = store.node(left, right)
        new_left = _bypass(left, current, reverse_left=True)
        new_right = _bypass(right, current, reverse_left=False)
        if new_left == left and new_right == right:
            return current
        left, right = new_left, new_right


def _bypass(
    options: set[PartizanRef], current: PartizanRef, reverse_left: bool
) -> set[PartizanRef]:
    result: set[PartizanRef] = set()
    for option in options:
        if reverse_left:
            reversing = next(
                (reply for reply in option.right if p_leq(reply, current)), None
            )
            replacement = reversing.left if reversing is not None else (option,)
        else:
            reversing = next(
                (reply for reply in option.left if p_leq(current, reply)), None
            )
            replacement = reversing.right if reversing is not None else (option,)
        result.update(replacement)
    return result


@memoized("p_shape_number")
def _shape_number(g: PartizanRef) -> Fraction | None:
    # Recognizes the shapes of canonical numbers. A recognized form equals
    # the returned number whether or not it is canonical.
    if not g.left and not g.right:
        return Fraction(0)
    if len(g.left) == 1 and not g.right:
        below = _shape_number(g.left[0])
        if below is not None and below.denominator == 1 and below >= 0:
            return below + 1
        return None
    if len(g.right) == 1 and not g.left:
        above = _shape_number(g.right[0])
        if above is not None and above.denominator == 1 and above <= 0:
            return above - 1
        return None
    if len(g.left) == 1 and len(g.right) == 1:
        low = _shape_number(g.left[0])
        high = _shape_number(g.right[0])
        if low is None or high is None or low >= high:
            return None
        middle = (low + high) / 2
        if middle.denominator > 1 and high - low == Fraction(2, middle.denominator):
            return middle
    return None


def p_as_number(g: PartizanRef) -> Fraction | None:
    """Return the dyadic rational g equals, or None if g is not a number."""
    return _shape_number(p_canonical(g))


def p_as_integer(g: PartizanRef) -> int | None:
    """Return the integer g equals, or None if g is not an integer."""
    number = p_as_number(g)
    if number is None or number.denominator != 1:
        return None
    return number.numerator


@memoized("p_stops")
def _canonical_stops(g: PartizanRef) -> tuple[Fraction, Fraction]:
    number = _shape_number(g)
    if number is not None:
        return number, number
    left_stop = max(_canonical_stops(option)[1] for option in g.left)
    right_stop = min(_canonical_stops(option)[0] for option in g.right)
    return left_stop, right_stop


def p_left_stop(g: PartizanRef) -> Fraction:
    return _canonical_stops(p_canonical(g))[0]


def p_right_stop(g: PartizanRef) -> Fraction:
    return _canonical_stops(p_canonical(g))[1]


@memoized("p_birthday")
def _canonical_birthday(g: PartizanRef) -> int:
    return 1 + max(
        (_canonical_birthday(option) for option in g.left + g.right), default=-1
    )


def p_birthday(g: PartizanRef) -> int:
    return _canonical_birthday(p_canonical(g))


@memoized("p_all_small")
def p_is_all_small(g: PartizanRef) -> bool:
    """Return True if every subposition of the form has options for both
    players or for neither.
    """
    if bool(g.left) != bool(g.right):
        return False
    return all(p_is_all_small(option) for option in g.left + g.right)


def _bracket_candidates(
    left: list[PartizanRef], right: list[PartizanRef]
) -> list[PartizanRef]:
    if not left or not right:
        raise EmptyOptionsError("Brackets need left and right options.")
    stops = [p_left_stop(option) for option in left + right]
    stops += [p_right_stop(option) for option in left + right]
    low = math.floor(min(stops)) - BRACKET_WINDOW_PADDING
    high = math.ceil(max(stops)) + BRACKET_WINDOW_PADDING
    store = left[0].store
    candidates = []
    for n in range(low, high + 1):
        integer = p_int(n, store)
        if all(p_lhd(option, integer) for option in left) and all(
            p_lhd(integer, option) for option in right
        ):
            candidates.append(integer)
    return candidates


def bracket_plus(
    left: typing.Iterable[PartizanRef], right: typing.Iterable[PartizanRef]
) -> PartizanRef:
    """Return {left|right}+.

    Parameters
    ----------
    left: iterable of `PartizanRef`
        Left options, not empty.
    right: iterable of `PartizanRef`
        Right options, not empty.

    Returns
    -------
    PartizanRef
        The largest integer n with every left option less than or confused
        with n and n less than or confused with every right option, if such
        an n exists; otherwise the plain form {left|right}.

    Raises
    ------
    EmptyOptionsError
        If either side is empty.
    """
    left = list(left)
    right = list(right)
    candidates = _bracket_candidates(left, right)
    if candidates:
        return candidates[-1]
    return left[0].store.node(left, right)


def bracket_minus(
    left: typing.Iterable[PartizanRef], right: typing.Iterable[PartizanRef]
) -> PartizanRef:
    """Return {left|right}-, which takes the smallest qualifying integer.

    See `bracket_plus`.
    """
    left = list(left)
    right = list(right)
    candidates = _bracket_candidates(left, right)
    if candidates:
        return candidates[0]
    return left[0].store.node(left, right)


def overheat(g: PartizanRef, t: PartizanRef) -> PartizanRef:
    """Overheat g by t, fixing integers.

    Integers map to themselves; any other g maps to
    ``{overheat(gL) + t | overheat(gR) - t}``, evaluated on the canonical form
    of g. The result is in canonical form.

    Parameters
    ----------
    g: `PartizanRef`
        The game to overheat.
    t: `PartizanRef`
        The amount, e.g. ``1*`` or ``1/2``.

    Returns
    -------
    PartizanRef
        The overheated game.
    """
    return _overheat_canonical(p_canonical(g), p_canonical(t))


@memoized("overheat")
def _overheat_canonical(g: PartizanRef, t: PartizanRef) -> PartizanRef:
    number = _shape_number(g)
    if number is not None and number.denominator == 1:
        return g
    minus_t = p_neg(t)
    left = [p_canonical(p_sum(_overheat_canonical(x, t), t)) for x in g.left]
    right = [p_canonical(p_sum(_overheat_canonical(x, t), minus_t)) for x in g.right]
    return p_canonical(g.store.node(left, right))
