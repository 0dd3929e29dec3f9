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
    "MAX_SCORE",
    "MEMO_LIMIT_ENV_VAR",
    "MIN_SCORE",
    "as_dyadic",
    "check_score",
    "format_dyadic",
    "get_memo_limit",
    "nearest_in_set",
]

import os
import typing
from fractions import Fraction

from .errors import ScoreOverflowError

# Scores are checked against the signed 64 bit range.
MAX_SCORE = 2**63 - 1
MIN_SCORE = -(2**63)

# Environment variable capping the number of entries of each memo table.
MEMO_LIMIT_ENV_VAR = "WTS_MEMO_LIMIT"


def get_memo_limit() -> int | None:
    """Read the memo table size limit from the environment.

    Returns
    -------
    limit: `int` or `None`
        The maximum number of entries per memo table, or None if unlimited.

    Raises
    ------
    ValueError
        If the environment variable is set but is not a non-negative integer.
    """
    raw = os.environ.get(MEMO_LIMIT_ENV_VAR, "").strip()
    if raw == "":
        return None
    try:
        limit = int(raw)
    except ValueError:
        raise ValueError(f"{MEMO_LIMIT_ENV_VAR}={raw!r} is not an integer.")
    if limit < 0:
        raise ValueError(f"{MEMO_LIMIT_ENV_VAR}={raw!r} must not be negative.")
    return limit


def check_score(value: int) -> int:
    """Check that an integer score fits in 64 signed bits.

    Parameters
    ----------
    value: `int`
        The score.

    Returns
    -------
    int
        The same score.

    Raises
    ------
    ScoreOverflowError
        If the score is out of range.
    """
    if not MIN_SCORE <= value <= MAX_SCORE:
        raise ScoreOverflowError(f"Score {value} does not fit in 64 bits.")
    return value


def as_dyadic(value: int | str | Fraction) -> Fraction:
    """Convert a value to an exact dyadic rational.

    Parameters
    ----------
    value: `int`, `str` or `fractions.Fraction`
        The value, e.g. ``3``, ``"3/8"`` or ``Fraction(-5, 4)``.

    Returns
    -------
    fractions.Fraction
        The value, reduced.

    Raises
    ------
    ValueError
        If the denominator is not a power of two.
    """
    fraction = Fraction(value)
    denominator = fraction.denominator
    if denominator & (denominator - 1) != 0:
        raise ValueError(f"{value!r} is not a dyadic rational.")
    return fraction


def format_dyadic(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def nearest_in_set(value: int, values: typing.Iterable[int]) -> int:
    """Return the element of a finite set closest to a value.

    Ties go to the lesser element.

    Parameters
    ----------
    value: `int`
        The value to round.
    values: iterable of `int`
        The target set, which must not be empty.

    Returns
    -------
    int
        The nearest element.
    """
    candidates = sorted(set(values))
    if not candidates:
        raise ValueError("Cannot round to an empty set.")
    return min(candidates, key=lambda candidate: (abs(candidate - value), candidate))
