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
    "BOOLEAN_VALUES",
    "INFINITE",
    "BoolClass",
    "ClaimCase",
    "ClaimReport",
    "and_classes",
    "cap",
    "cap_table",
    "classes_frame",
    "count_classes",
    "cup",
    "cup_table",
    "enumerate_classes",
    "enumerate_s_valued",
    "is_legal",
    "legal_pairs",
    "octet",
    "or_classes",
    "outcome_from_class",
    "representative",
    "u_values",
    "verify_boolean_claim",
    "verify_distinct",
    "x_sets",
]

import dataclasses
import itertools
import math
import typing

import pandas

from .base_store import memoized
from .core import (
    GameRef,
    GameStore,
    Outcome,
    default_store,
    even_projection,
    is_s_valued,
    outcome,
    star_sum,
)
from .disjunctive import ampersand
from .enums import OCTET_NUMBERS, OCTET_STARRED, Parity, UValue
from .errors import (
    ClassificationFailureError,
    IllegalClassError,
    NoExtremumError,
    NotBooleanValuedError,
    TooLargeError,
)
from .maps import phi0, psi
from .order import downside, equivalent, upside
from .partizan import (
    PartizanRef,
    overheat,
    p_canonical,
    p_int,
    p_leq,
    p_neg,
    p_number,
    p_star,
    p_sum,
)

# Final scores of a Boolean game.
BOOLEAN_VALUES = frozenset({0, 1})

# Returned by `count_classes` when there are infinitely many classes.
INFINITE = math.inf

# Amount by which the octet is overheated to obtain the u-value images.
OVERHEAT_AMOUNT = "1/2"

# Most games `enumerate_s_valued` builds at one level.
MAX_ENUMERATED_GAMES = 20000


@dataclasses.dataclass(frozen=True)
class BoolClass:
    """Equivalence class of a Boolean-valued game.

    Attributes
    ----------
    u_plus: `UValue`
        The u-value of the upside.
    u_minus: `UValue`
        The u-value of the downside.
    parity: `Parity`
        The parity.
    """

    u_plus: UValue
    u_minus: UValue
    parity: Parity

    def label(self) -> str:
        parity = self.parity.name.lower()
        return f"({self.u_plus.value}, {self.u_minus.value}, {parity})"

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (int(self.parity), self.u_plus.index, self.u_minus.index)


@dataclasses.dataclass(frozen=True)
class ClaimCase:
    """One option pattern checked by `verify_boolean_claim`."""

    parity: Parity
    left: tuple[UValue, ...]
    right: tuple[UValue, ...]
    matched: UValue | None

    @property
    def passed(self) -> bool:
        return self.matched is not None


@dataclasses.dataclass(frozen=True)
class ClaimReport:
    cases: tuple[ClaimCase, ...]

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def passed(self) -> int:
        return sum(1 for case in self.cases if case.passed)

    @property
    def failures(self) -> list[ClaimCase]:
        return [case for case in self.cases if not case.passed]


def _store(store: GameStore | None) -> GameStore:
    return default_store() if store is None else store


@memoized("octet")
def _octet(zero: PartizanRef) -> dict[UValue, PartizanRef]:
    partizan = zero.store
    star = p_star(partizan)
    values = {}
    for u in UValue:
        value = p_number(OCTET_NUMBERS[u], partizan)
        if u in OCTET_STARRED:
            value = p_canonical(p_sum(value, star))
        values[u] = value
    return values


def octet(store: GameStore | None = None) -> dict[UValue, PartizanRef]:
    """Return the canonical partizan forms of the eight u-values."""
    return _octet(p_int(0, _store(store).partizan))


@memoized("x_sets")
def _x_sets(
    zero: PartizanRef,
) -> tuple[dict[UValue, PartizanRef], dict[UValue, PartizanRef]]:
    partizan = zero.store
    amount = p_number(OVERHEAT_AMOUNT, partizan)
    star = p_star(partizan)
    x0 = {u: overheat(value, amount) for u, value in _octet(zero).items()}
    x1 = {u: p_canonical(p_sum(star, value)) for u, value in x0.items()}
    return x0, x1


def x_sets(
    store: GameStore | None = None,
) -> tuple[dict[UValue, PartizanRef], dict[UValue, PartizanRef]]:
    """Return the images of the octet for even and for odd games.

    Returns
    -------
    x0: `dict` [`UValue`, `PartizanRef`]
        Each u-value overheated by 1/2, in canonical form.
    x1: `dict` [`UValue`, `PartizanRef`]
        The same plus star.
    """
    return _x_sets(p_int(0, _store(store).partizan))


def _match(value: PartizanRef, images: dict[UValue, PartizanRef]) -> UValue | None:
    canonical = p_canonical(value)
    return next((u for u, image in images.items() if image is canonical), None)


def u_values(g: GameRef) -> BoolClass:
    """Classify a Boolean-valued game.

    Parameters
    ----------
    g: `GameRef`
        A game with final scores in {0, 1}.

    Returns
    -------
    BoolClass
        The u-values of the sides of the even projection of g and the parity
        of g.

    Raises
    ------
    NotBooleanValuedError
        If g has a final score other than 0 or 1.
    ClassificationFailureError
        If a side does not match any u-value.
    """
    if not is_s_valued(g, BOOLEAN_VALUES):
        raise NotBooleanValuedError(f"{g} is not valued in {{0, 1}}.")
    even = even_projection(g)
    x0, _ = x_sets(g.store)
    found = []
    for name, side in (("upside", upside(even)), ("downside", downside(even))):
        u = _match(psi(side), x0)
        if u is None:
            raise ClassificationFailureError(
                f"The {name} {side} of {g} matches no u-value."
            )
        found.append(u)
    return BoolClass(found[0], found[1], g.parity)


def _extremum(
    candidates: list[UValue], values: dict[UValue, PartizanRef], greatest: bool
) -> UValue:
    for u in candidates:
        if greatest and all(p_leq(values[w], values[u]) for w in candidates):
            return u
        if not greatest and all(p_leq(values[u], values[w]) for w in candidates):
            return u
    raise NoExtremumError(
        f"No {'greatest' if greatest else 'least'} element among "
        f"{[u.value for u in candidates]}."
    )


def cup(x: UValue, y: UValue, store: GameStore | None = None) -> UValue:
    """Return the greatest u-value at most x + y.

    Raises
    ------
    NoExtremumError
        If the candidates have no greatest element.
    """
    values = octet(store)
    total = p_sum(values[x], values[y])
    candidates = [z for z in UValue if p_leq(values[z], total)]
    return _extremum(candidates, values, greatest=True)


def cap(x: UValue, y: UValue, store: GameStore | None = None) -> UValue:
    """Return the least u-value at least x + y - 1."""
    values = octet(store)
    partizan = values[x].store
    total = p_sum(p_sum(values[x], values[y]), p_neg(p_int(1, partizan)))
    candidates = [w for w in UValue if p_leq(total, values[w])]
    return _extremum(candidates, values, greatest=False)


def _table(
    operation: typing.Callable[[UValue, UValue, GameStore | None], UValue],
    store: GameStore | None,
) -> pandas.DataFrame:
    labels = [u.value for u in UValue]
    rows = [[operation(x, y, store).value for y in UValue] for x in UValue]
    return pandas.DataFrame(rows, index=labels, columns=labels)


def cup_table(store: GameStore | None = None) -> pandas.DataFrame:
    """Return the 8 x 8 table of `cup`, labelled by u-value."""
    return _table(cup, store)


def cap_table(store: GameStore | None = None) -> pandas.DataFrame:
    return _table(cap, store)


def is_legal(u_plus: UValue, u_minus: UValue, store: GameStore | None = None) -> bool:
    values = octet(store)
    return p_leq(values[u_minus], values[u_plus])


def legal_pairs(store: GameStore | None = None) -> list[tuple[UValue, UValue]]:
    """Return the (u+, u-) pairs with u+ at least u-, in octet order."""
    return [
        (u_plus, u_minus)
        for u_plus, u_minus in itertools.product(UValue, repeat=2)
        if is_legal(u_plus, u_minus, store)
    ]


def outcome_from_class(c: BoolClass, store: GameStore | None = None) -> Outcome:
    """Return the outcome every game of a class has.

    Even games: L is 0 exactly when u- is 0 and R is 1 exactly when u+ is
    1. Odd games: L is 0 exactly when u+ is at most 1/2 and R is 1 exactly
    when u- is at least 1/2.
    """
    if c.parity == Parity.EVEN:
        left_first = 0 if c.u_minus == UValue.ZERO else 1
        right_first = 1 if c.u_plus == UValue.ONE else 0
    else:
        values = octet(store)
        half = values[UValue.HALF]
        left_first = 0 if p_leq(values[c.u_plus], half) else 1
        right_first = 1 if p_leq(half, values[c.u_minus]) else 0
    return Outcome(left_first, right_first, c.parity)


def representative(c: BoolClass, store: GameStore | None = None) -> GameRef:
    """Build a Boolean-valued game of a class.

    Raises
    ------
    IllegalClassError
        If u+ is not at least u-.
    """
    games = _store(store)
    if not is_legal(c.u_plus, c.u_minus, games):
        raise IllegalClassError(f"{c.label()} has u+ below or beside u-.")
    x0, _ = x_sets(games)
    up = phi0(x0[c.u_plus])
    if c.u_plus == c.u_minus:
        result = up
    else:
        result = ampersand(up, phi0(x0[c.u_minus]), BOOLEAN_VALUES)
    if c.parity == Parity.ODD:
        result = star_sum(result)
    return result


def enumerate_classes(
    store: GameStore | None = None,
) -> list[tuple[BoolClass, GameRef]]:
    """Return every Boolean class with a representative.

    Classes are ordered by parity, then u+ and u- in octet order.
    """
    games = _store(store)
    classes = [
        BoolClass(u_plus, u_minus, parity)
        for parity in Parity
        for u_plus, u_minus in legal_pairs(games)
    ]
    result = [(c, representative(c, games)) for c in classes]
    games.log.info(f"Enumerated {len(result)} Boolean classes.")
    return result


def verify_distinct(
    entries: list[tuple[BoolClass, GameRef]],
) -> tuple[int, list[tuple[BoolClass, BoolClass]]]:
    """Compare every pair of representatives.

    Returns
    -------
    comparisons: `int`
        The number of pairs compared.
    equivalent_pairs: `list` [`tuple` [`BoolClass`, `BoolClass`]]
        The pairs found equivalent; empty when all classes are distinct.
    """
    comparisons = 0
    found = []
    for (first, first_game), (second, second_game) in itertools.combinations(
        entries, 2
    ):
        comparisons += 1
        if equivalent(first_game, second_game):
            found.append((first, second))
    return comparisons, found


def classes_frame(
    entries: list[tuple[BoolClass, GameRef]] | None = None,
    store: GameStore | None = None,
) -> pandas.DataFrame:
    """Tabulate the Boolean classes with their outcomes and representatives."""
    if entries is None:
        entries = enumerate_classes(store)
    rows = []
    for c, game in entries:
        result = outcome(game)
        rows.append(
            {
                "parity": c.parity.name.lower(),
                "u_plus": c.u_plus.value,
                "u_minus": c.u_minus.value,
                "l": result.l,
                "r": result.r,
                "representative": str(game),
            }
        )
    return pandas.DataFrame(rows)


def _antichains(values: dict[UValue, PartizanRef]) -> list[tuple[UValue, ...]]:
    singles = [(u,) for u in UValue]
    pairs = [
        (x, y)
        for x, y in itertools.combinations(UValue, 2)
        if not p_leq(values[x], values[y]) and not p_leq(values[y], values[x])
    ]
    return singles + pairs


def verify_boolean_claim(store: GameStore | None = None) -> ClaimReport:
    """Check that options drawn from the images of one parity give a game
    in the images of the other parity.

    For each parity and each pair of non-empty antichains A, B of its
    images, the value {A|B} is looked up among the images of the other
    parity. Failures are reported, not raised.
    """
    games = _store(store)
    images = dict(zip(Parity, x_sets(games)))
    partizan = games.partizan
    cases = []
    for parity in Parity:
        own = images[parity]
        other = images[parity.flip()]
        for left, right in itertools.product(_antichains(own), repeat=2):
            value = partizan.node([own[u] for u in left], [own[u] for u in right])
            cases.append(ClaimCase(parity, left, right, _match(value, other)))
    report = ClaimReport(tuple(cases))
    games.log.info(f"Boolean claim: {report.passed}/{report.total} cases hold.")
    return report


def count_classes(size: int) -> int | float:
    """Return the number of classes of games valued in a set of a given
    size, or `INFINITE`.
    """
    if size < 0:
        raise ValueError(f"size={size} must not be negative.")
    return {0: 0, 1: 2, 2: 70}.get(size, INFINITE)


def enumerate_s_valued(
    values: typing.Iterable[int], plies: int, store: GameStore | None = None
) -> list[GameRef]:
    """Return one game per equivalence class among the games valued in a
    set whose plays last at most ``plies`` moves.

    Raises
    ------
    TooLargeError
        If a level would hold more than ``MAX_ENUMERATED_GAMES`` games.
    """
    games = _store(store)
    by_parity: dict[Parity, list[GameRef]] = {
        Parity.EVEN: [games.leaf(value) for value in sorted(set(values))],
        Parity.ODD: [],
    }
    for _ in range(plies):
        new_games: dict[Parity, list[GameRef]] = {Parity.EVEN: [], Parity.ODD: []}
        for parity in Parity:
            options = by_parity[parity]
            subset_count = 2 ** len(options) - 1
            if subset_count**2 > MAX_ENUMERATED_GAMES:
                raise TooLargeError(
                    f"{subset_count**2} games at one level exceed "
                    f"{MAX_ENUMERATED_GAMES}."
                )
            subsets = [
                combination
                for size in range(1, len(options) + 1)
                for combination in itertools.combinations(options, size)
            ]
            for left, right in itertools.product(subsets, repeat=2):
                new_games[parity.flip()].append(games.node(left, right))
        for parity in Parity:
            merged = {game.uid: game for game in by_parity[parity]}
            merged.update((game.uid, game) for game in new_games[parity])
            by_parity[parity] = list(merged.values())
    classes: list[GameRef] = []
    for parity in Parity:
        for game in by_parity[parity]:
            if not any(equivalent(game, known) for known in classes):
                classes.append(game)
    games.log.debug(
        f"{sum(len(level) for level in by_parity.values())} games fall into "
        f"{len(classes)} classes."
    )
    return classes


def or_classes(c: BoolClass, d: BoolClass, store: GameStore | None = None) -> BoolClass:
    """Return the class of G or H for G in c and H in d."""
    return BoolClass(
        cup(c.u_plus, d.u_plus, store),
        cup(c.u_minus, d.u_minus, store),
        Parity.of_sum(c.parity, d.parity),
    )


def and_classes(
    c: BoolClass, d: BoolClass, store: GameStore | None = None
) -> BoolClass:
    return BoolClass(
        cap(c.u_plus, d.u_plus, store),
        cap(c.u_minus, d.u_minus, store),
        Parity.of_sum(c.parity, d.parity),
    )
