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
    "MAX_SHADOW_CROSSINGS",
    "MAX_TRUTH_TABLE_INPUTS",
    "TruthTable",
    "connected_sum_class",
    "cross_validate_shadows",
    "input_setting_game",
    "parse_twist_vector",
    "reduce_shadow",
    "shadow_game_brute",
    "shadow_value_by_rule",
    "tangle_numerator",
]

import dataclasses
import functools
import itertools
import typing

import pandas

from .boolean import BoolClass, or_classes, u_values
from .core import GameRef, GameStore, default_store
from .enums import Parity, UValue
from .errors import TooLargeError

# Largest number of crossings a shadow may have for the brute force game.
MAX_SHADOW_CROSSINGS = 12

# Largest number of inputs of a truth table.
MAX_TRUTH_TABLE_INPUTS = 20


@dataclasses.dataclass(frozen=True)
class TruthTable:
    """A Boolean function of n inputs.

    Attributes
    ----------
    n: `int`
        The number of inputs, 1 to ``MAX_TRUTH_TABLE_INPUTS``.
    bits: `str`
        ``2**n`` characters ``0`` or ``1``. Character i is the output for the
        assignment whose binary expansion is i, with input 1 as the least
        significant bit.
    """

    n: int
    bits: str

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n={self.n} must be at least 1.")
        if self.n > MAX_TRUTH_TABLE_INPUTS:
            raise TooLargeError(
                f"n={self.n} exceeds the limit of {MAX_TRUTH_TABLE_INPUTS} inputs."
            )
        if len(self.bits) != 2**self.n:
            raise ValueError(
                f"A table of {self.n} inputs needs {2**self.n} bits; "
                f"got {len(self.bits)}."
            )
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"bits={self.bits!r} may only contain 0 and 1.")

    @classmethod
    def from_bits(cls, n: int, bits: str) -> "TruthTable":
        return cls(int(n), bits.strip())

    @classmethod
    def from_function(
        cls, n: int, func: typing.Callable[..., int | bool]
    ) -> "TruthTable":
        """Tabulate ``func(x1, ..., xn)`` on every assignment."""
        bits = "".join(
            "1" if func(*_assignment(index, n)) else "0" for index in range(2**n)
        )
        return cls(n, bits)

    def __call__(self, *inputs: int) -> int:
        index = sum(bit << position for position, bit in enumerate(inputs))
        return int(self.bits[index])

    def xor_extend(self) -> "TruthTable":
        """Return g(x1, ..., xn, y) = f(x1, ..., xn) xor y."""
        return TruthTable.from_function(
            self.n + 1, lambda *inputs: self(*inputs[:-1]) ^ inputs[-1]
        )

    def disjoint_or(self, other: "TruthTable") -> "TruthTable":
        """Return the or of this function of the first inputs and ``other``
        of the remaining inputs.
        """
        return TruthTable.from_function(
            self.n + other.n,
            lambda *inputs: self(*inputs[: self.n]) | other(*inputs[self.n :]),
        )


def _assignment(index: int, n: int) -> tuple[int, ...]:
    return tuple((index >> position) & 1 for position in range(n))


def input_setting_game(table: TruthTable, store: GameStore | None = None) -> GameRef:
    """Build the game in which both players may set any unset input.

    Parameters
    ----------
    table: `TruthTable`
        The function whose output is the final score.
    store: `GameStore` or `None`
        The store; the default store if None.

    Returns
    -------
    GameRef
        A game of parity n mod 2 whose positions are partial assignments.
    """
    if store is None:
        store = default_store()

    @functools.cache
    def position(assigned: tuple[int | None, ...]) -> GameRef:
        if None not in assigned:
            return store.leaf(table(*assigned))
        moves = [
            position(assigned[:i] + (value,) + assigned[i + 1 :])
            for i, current in enumerate(assigned)
            if current is None
            for value in (0, 1)
        ]
        return store.node(moves, moves)

    game = position((None,) * table.n)
    store.log.debug(
        f"Input-setting game of {table.n} inputs has "
        f"{position.cache_info().currsize} positions."
    )
    return game


def parse_twist_vector(text: str) -> list[int]:
    """Read comma separated non-negative crossing counts, e.g. ``"2,1,3"``."""
    try:
        vector = [int(item) for item in text.split(",")]
    except ValueError:
        raise ValueError(f"Cannot read a twist vector from {text!r}.")
    _check_vector(vector)
    return vector


def _check_vector(vector: typing.Sequence[int]) -> None:
    if not vector:
        raise ValueError("A twist vector needs at least one region.")
    if any(count < 0 for count in vector):
        raise ValueError(f"Crossing counts must not be negative; got {vector}.")


def tangle_numerator(sums: typing.Sequence[int]) -> int:
    """Return the absolute numerator of the closure of a rational tangle.

    Parameters
    ----------
    sums: sequence of `int`
        The signed twist of each region, in order.

    Returns
    -------
    int
        0 for the unlink, 1 for the unknot, at least 2 for a non-trivial
        knot or link.
    """
    numerator, denominator = 0, 1
    for twist in sums:
        numerator, denominator = denominator, numerator + twist * denominator
    return abs(denominator)


def shadow_game_brute(
    vector: typing.Sequence[int], store: GameStore | None = None
) -> GameRef:
    """Build the game of a rational shadow by resolving every crossing.

    A move resolves one crossing of any region as a positive or negative
    twist. The final score is 1 (Knotter, Left) if the resolved diagram is
    knotted and 0 otherwise.

    Raises
    ------
    TooLargeError
        If the shadow has more than ``MAX_SHADOW_CROSSINGS`` crossings.
    """
    vector = tuple(vector)
    _check_vector(vector)
    if sum(vector) > MAX_SHADOW_CROSSINGS:
        raise TooLargeError(
            f"{sum(vector)} crossings exceed the limit of {MAX_SHADOW_CROSSINGS}."
        )
    if store is None:
        store = default_store()

    @functools.cache
    def position(resolved: tuple[tuple[int, int], ...]) -> GameRef:
        moves = []
        for i, (plus, minus) in enumerate(resolved):
            if plus + minus == vector[i]:
                continue
            for step in ((1, 0), (0, 1)):
                region = (plus + step[0], minus + step[1])
                moves.append(position(resolved[:i] + (region,) + resolved[i + 1 :]))
        if not moves:
            sums = [plus - minus for plus, minus in resolved]
            return store.leaf(1 if tangle_numerator(sums) >= 2 else 0)
        return store.node(moves, moves)

    return position(((0, 0),) * len(vector))


def reduce_shadow(vector: typing.Sequence[int]) -> tuple[list[int], int]:
    """Simplify a rational shadow to its minimal form.

    Returns
    -------
    minimal: `list` [`int`]
        The minimal form; empty when no crossing is left.
    stars: `int`
        The number of stars split off on the way.
    """
    current = list(vector)
    _check_vector(current)
    stars = 0
    while True:
        m = len(current)
        if m >= 2 and current[0] == 0 and current[1] > 0:
            current[1] -= 1
            stars += 1
        elif m >= 2 and current[-1] == 0 and current[-2] > 0:
            current[-2] -= 1
            stars += 1
        elif m >= 2 and current[0] == 0 and current[1] == 0:
            current = current[2:]
        elif m >= 2 and current[-1] == 0 and current[-2] == 0:
            current = current[:-2]
        elif any(current[k] == 0 for k in range(1, m - 1)):
            k = next(k for k in range(1, m - 1) if current[k] == 0)
            merged = current[k - 1] + current[k + 1]
            current = current[: k - 1] + [merged] + current[k + 2 :]
        elif m >= 2 and current[0] == 1:
            current = [1 + current[1]] + current[2:]
        elif m >= 2 and current[-1] == 1:
            current = current[:-2] + [current[-2] + 1]
        else:
            return current, stars


def shadow_value_by_rule(vector: typing.Sequence[int]) -> BoolClass:
    """Classify a rational shadow from its minimal form.

    A minimal form with no crossing is 0. If every interior count is even
    and the end counts add up to an odd number (a single count is counted
    once) the value is star. Otherwise the value is 1&0 when the total is
    even and (1+*)&* when it is odd. Every star split off while reducing
    flips the parity.
    """
    minimal, stars = reduce_shadow(vector)
    if not minimal or minimal == [0]:
        base = BoolClass(UValue.ZERO, UValue.ZERO, Parity.EVEN)
    else:
        ends = minimal[0] if len(minimal) == 1 else minimal[0] + minimal[-1]
        interior_even = all(count % 2 == 0 for count in minimal[1:-1])
        if interior_even and ends % 2 == 1:
            base = BoolClass(UValue.ZERO, UValue.ZERO, Parity.ODD)
        else:
            base = BoolClass(UValue.ONE, UValue.ZERO, Parity(sum(minimal) % 2))
    return BoolClass(base.u_plus, base.u_minus, Parity.of_sum(base.parity, stars))


def connected_sum_class(
    vectors: typing.Sequence[typing.Sequence[int]], store: GameStore | None = None
) -> BoolClass:
    """Return the class of a connected sum of rational shadows.

    The Knotter wins a connected sum by winning any summand, so the class is
    the or of the classes of the summands.
    """
    if not vectors:
        raise ValueError("A connected sum needs at least one shadow.")
    classes = [shadow_value_by_rule(vector) for vector in vectors]
    return functools.reduce(lambda c, d: or_classes(c, d, store), classes)


def cross_validate_shadows(
    max_regions: int = 3, max_crossings: int = 4, store: GameStore | None = None
) -> pandas.DataFrame:
    """Compare the rule with the brute force game on every small shadow.

    Parameters
    ----------
    max_regions: `int`
        Shadows with 1 to ``max_regions`` regions are checked.
    max_crossings: `int`
        Each region has 0 to ``max_crossings`` crossings.
    store: `GameStore` or `None`
        The store; the default store if None.

    Returns
    -------
    pandas.DataFrame
        One row per shadow with columns ``vector``, ``rule``, ``brute`` and
        ``agree``.
    """
    if store is None:
        store = default_store()
    rows = []
    for regions in range(1, max_regions + 1):
        for vector in itertools.product(range(max_crossings + 1), repeat=regions):
            rule = shadow_value_by_rule(vector)
            brute = u_values(shadow_game_brute(vector, store))
            rows.append(
                {
                    "vector": ",".join(str(count) for count in vector),
                    "rule": rule.label(),
                    "brute": brute.label(),
                    "agree": rule == brute,
                }
            )
    frame = pandas.DataFrame(rows)
    store.log.info(f"Checked {len(frame)} shadows; {int(frame['agree'].sum())} agree.")
    return frame
