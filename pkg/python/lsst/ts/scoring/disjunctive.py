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
    "AND_COMBINER",
    "OR_COMBINER",
    "STAR_COMBINER",
    "Combiner",
    "ampersand",
    "and_op",
    "compose",
    "diff",
    "extend",
    "negation_conjugate",
    "or_op",
    "permute",
    "round_to_set",
    "star_op",
    "sum",
]

import itertools
import typing

from .base_store import memoized
from .core import GameRef, gaps, negate, outcome, q_gadget, value_set
from .errors import (
    ArityMismatchError,
    NotComparableError,
    NotInvertibleError,
    NotOrderPreservingError,
    ParityMismatchError,
    ValueOutsideDomainError,
)
from .utils import nearest_in_set


class Combiner:
    """An order-preserving map from a finite product of integer sets to the
    integers.

    Parameters
    ----------
    domains: sequence of iterables of `int`
        The domain of each argument.
    table: `dict`
        Maps every tuple of the product of the domains to an integer.
    name: `str`
        Name used in log and error messages.

    Raises
    ------
    ValueError
        If a domain is empty or the table is not total on the product.
    NotOrderPreservingError
        If raising one argument lowers the result.
    """

    def __init__(
        self,
        domains: typing.Sequence[typing.Iterable[int]],
        table: dict[tuple[int, ...], int],
        name: str = "combiner",
    ) -> None:
        self.domains = tuple(tuple(sorted(set(domain))) for domain in domains)
        self.name = name
        if not self.domains:
            raise ValueError("A combiner needs at least one argument.")
        for i, domain in enumerate(self.domains):
            if not domain:
                raise ValueError(f"Domain {i} of {name} is empty.")
        self.table = {tuple(args): int(value) for args, value in table.items()}
        for args in itertools.product(*self.domains):
            if args not in self.table:
                raise ValueError(f"{name} is not defined on {args}.")
        self._check_order_preserving()
        self.key = (
            self.domains,
            tuple(sorted(self.table.items())),
        )

    def _check_order_preserving(self) -> None:
        # Comparing neighbors along each axis is enough, by transitivity.
        for args in itertools.product(*self.domains):
            for i, domain in enumerate(self.domains):
                position = domain.index(args[i])
                if position + 1 == len(domain):
                    continue
                raised = args[:i] + (domain[position + 1],) + args[i + 1 :]
                if self.table[raised] < self.table[args]:
                    raise NotOrderPreservingError(
                        f"{self.name}{raised} = {self.table[raised]} is less than "
                        f"{self.name}{args} = {self.table[args]}."
                    )

    @property
    def arity(self) -> int:
        return len(self.domains)

    def __call__(self, *args: int) -> int:
        return self.table[args]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Combiner) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Combiner({self.name}, domains={self.domains})"

    @classmethod
    def from_function(
        cls,
        domains: typing.Sequence[typing.Iterable[int]],
        func: typing.Callable[..., int],
        name: str | None = None,
    ) -> "Combiner":
        """Tabulate a function on the product of the domains."""
        domains = [tuple(sorted(set(domain))) for domain in domains]
        table = {args: func(*args) for args in itertools.product(*domains)}
        return cls(domains, table, name or getattr(func, "__name__", "combiner"))

    @classmethod
    def constant(
        cls, domains: typing.Sequence[typing.Iterable[int]], value: int
    ) -> "Combiner":
        return cls.from_function(domains, lambda *args: value, f"constant_{value}")

    @classmethod
    def from_json(cls, data: dict[str, typing.Any]) -> "Combiner":
        """Read ``{"domains": [[...], ...], "table": [{"in": [...], "out":
        n}, ...]}``.
        """
        table = {tuple(row["in"]): row["out"] for row in data["table"]}
        return cls(data["domains"], table, data.get("name", "combiner"))

    def to_json(self) -> dict[str, typing.Any]:
        return {
            "name": self.name,
            "domains": [list(domain) for domain in self.domains],
            "table": [
                {"in": list(args), "out": self.table[args]}
                for args in itertools.product(*self.domains)
            ],
        }


def _clamped_sum(x: int, y: int) -> int:
    return max(-1, min(1, x + y))


# Logical or and logical and of Boolean scores.
OR_COMBINER = Combiner.from_function([(0, 1), (0, 1)], max, "or")
AND_COMBINER = Combiner.from_function([(0, 1), (0, 1)], min, "and")

# Addition clamped to {-1, 0, 1}.
STAR_COMBINER = Combiner.from_function([(-1, 0, 1), (-1, 0, 1)], _clamped_sum, "star")


def compose(outer: Combiner, inner: Combiner, position: int = 0) -> Combiner:
    """Substitute ``inner`` for argument ``position`` of ``outer``.

    The arguments of the result are those of ``outer`` with the arguments of
    ``inner`` spliced in at ``position``.

    Raises
    ------
    ValueOutsideDomainError
        If a value of ``inner`` is outside that domain of ``outer``.
    """
    allowed = set(outer.domains[position])
    produced = set(inner.table.values())
    if not produced <= allowed:
        raise ValueOutsideDomainError(
            f"{inner.name} produces {sorted(produced - allowed)}, outside "
            f"argument {position} of {outer.name}."
        )
    domains = outer.domains[:position] + inner.domains + outer.domains[position + 1 :]
    width = inner.arity

    def composed(*args: int) -> int:
        inner_value = inner(*args[position : position + width])
        return outer(*args[:position], inner_value, *args[position + width :])

    return Combiner.from_function(domains, composed, f"{outer.name}.{inner.name}")


def negation_conjugate(combiner: Combiner) -> Combiner:
    """Return x -> -f(-x), which is order preserving when f is."""
    domains = [[-value for value in domain] for domain in combiner.domains]
    return Combiner.from_function(
        domains,
        lambda *args: -combiner(*(-value for value in args)),
        f"conjugate_{combiner.name}",
    )


def permute(combiner: Combiner, order: typing.Sequence[int]) -> Combiner:
    """Return the combiner whose argument i is argument ``order[i]`` of the
    original.
    """
    if sorted(order) != list(range(combiner.arity)):
        raise ArityMismatchError(f"{order} is not a permutation of the arguments.")
    domains = [combiner.domains[index] for index in order]

    def permuted(*args: int) -> int:
        original = [0] * combiner.arity
        for i, index in enumerate(order):
            original[index] = args[i]
        return combiner(*original)

    return Combiner.from_function(domains, permuted, f"permuted_{combiner.name}")


def extend(combiner: Combiner, games: typing.Sequence[GameRef]) -> GameRef:
    """Play several games in parallel and combine their final scores.

    Parameters
    ----------
    combiner: `Combiner`
        The score combiner.
    games: sequence of `GameRef`
        One game per argument, each valued in the domain of its argument.

    Returns
    -------
    GameRef
        The game whose moves are moves in any one component and whose
        final score is the combiner applied to the component scores.

    Raises
    ------
    ArityMismatchError
        If the number of games differs from the arity.
    ValueOutsideDomainError
        If a game has a leaf outside the domain of its argument.
    """
    games = tuple(games)
    if len(games) != combiner.arity:
        raise ArityMismatchError(
            f"{combiner.name} takes {combiner.arity} games; got {len(games)}."
        )
    for i, game in enumerate(games):
        outside = value_set(game) - set(combiner.domains[i])
        if outside:
            raise ValueOutsideDomainError(
                f"Game {i} has values {sorted(outside)} outside the domain "
                f"{list(combiner.domains[i])} of {combiner.name}."
            )
    return _extend(games[0], combiner, games[1:])


@memoized("extend")
def _extend(first: GameRef, combiner: Combiner, rest: tuple[GameRef, ...]) -> GameRef:
    games = (first,) + rest
    if all(game.is_leaf for game in games):
        return first.store.leaf(combiner(*(game.score for game in games)))
    left = []
    right = []
    for i, game in enumerate(games):
        for option in game.left:
            moved = games[:i] + (option,) + games[i + 1 :]
            left.append(_extend(moved[0], combiner, moved[1:]))
        for option in game.right:
            moved = games[:i] + (option,) + games[i + 1 :]
            right.append(_extend(moved[0], combiner, moved[1:]))
    return first.store.node(left, right)


def sum(g: GameRef, h: GameRef) -> GameRef:  # noqa: A001
    """Return the disjunctive sum g + h.

    This is the extension of addition on the value sets of g and h; the
    recursion is done directly so that the cache is shared by all sums of a
    store.
    """
    if h.uid < g.uid:
        g, h = h, g
    return _sum_ordered(g, h)


@memoized("sum")
def _sum_ordered(g: GameRef, h: GameRef) -> GameRef:
    if g.is_leaf and h.is_leaf:
        return g.store.leaf(g.score + h.score)
    left = [sum(option, h) for option in g.left]
    left += [sum(g, option) for option in h.left]
    right = [sum(option, h) for option in g.right]
    right += [sum(g, option) for option in h.right]
    return g.store.node(left, right)


def diff(g: GameRef, h: GameRef) -> GameRef:
    return sum(g, negate(h))


def or_op(g: GameRef, h: GameRef) -> GameRef:
    """Play two Boolean games in parallel; the result is 1 if either is 1."""
    return extend(OR_COMBINER, [g, h])


def and_op(g: GameRef, h: GameRef) -> GameRef:
    """Play two Boolean games in parallel; the result is 1 if both are 1."""
    return extend(AND_COMBINER, [g, h])


def star_op(g: GameRef, h: GameRef) -> GameRef:
    return extend(STAR_COMBINER, [g, h])


def round_to_set(g: GameRef, values: typing.Iterable[int]) -> GameRef:
    """Round every final score of g to the nearest element of a set.

    Ties go to the lesser element.

    Parameters
    ----------
    g: `GameRef`
        The game.
    values: iterable of `int`
        The target set, not empty.

    Returns
    -------
    GameRef
        A game valued in ``values``.
    """
    targets = sorted(set(values))
    if not targets:
        raise ValueError("Cannot round to an empty set.")
    rounding = Combiner.from_function(
        [value_set(g)],
        lambda value: nearest_in_set(value, targets),
        f"round_to_{targets}",
    )
    return extend(rounding, [g])


@memoized("gadgetize")
def _gadgetize(g: GameRef) -> GameRef:
    # Replace each positive leaf n by {{0|0}|{n|n}}.
    if g.is_leaf:
        return q_gadget(g.score, g.store) if g.score > 0 else g
    return g.store.node(
        [_gadgetize(option) for option in g.left],
        [_gadgetize(option) for option in g.right],
    )


def ampersand(
    up: GameRef, down: GameRef, values: typing.Iterable[int] | None = None
) -> GameRef:
    """Build a game with a given upside and downside.

    Parameters
    ----------
    up: `GameRef`
        The upside, an invertible game with gap0 = 0.
    down: `GameRef`
        The downside, an invertible game with the parity of ``up`` and not
        above it.
    values: iterable of `int` or `None`
        If given, the final scores are rounded into this set.

    Returns
    -------
    GameRef
        ``(up - down)`` with every positive leaf n replaced by
        ``{{0|0}|{n|n}}``, plus ``down``, optionally rounded.

    Raises
    ------
    NotInvertibleError
        If ``up`` or ``down`` has a nonzero even gap.
    ParityMismatchError
        If the parities differ.
    NotComparableError
        If ``up`` is not at least ``down``.
    """
    for name, game in (("upside", up), ("downside", down)):
        if gaps(game).gap0 != 0:
            raise NotInvertibleError(f"The {name} {game} is not invertible.")
    if up.parity != down.parity:
        raise ParityMismatchError(f"{up} and {down} have different parities.")
    difference = diff(up, down)
    if outcome(difference).r < 0:
        raise NotComparableError(f"{up} is not at least {down}.")
    result = sum(_gadgetize(difference), down)
    if values is not None:
        result = round_to_set(result, values)
    return result
