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
    "ArityMismatchError",
    "ClassificationFailureError",
    "EmptyOptionSetError",
    "EmptyOptionsError",
    "IllegalClassError",
    "MixedParityError",
    "NoExtremumError",
    "NotBooleanValuedError",
    "NotComparableError",
    "NotInIError",
    "NotInvertibleError",
    "NotOrderPreservingError",
    "NotationSyntaxError",
    "ParityMismatchError",
    "ScoreOverflowError",
    "ScoringError",
    "TooLargeError",
    "ValueOutsideDomainError",
]


class ScoringError(ValueError):
    """Base class of all domain errors.

    The command line reports ``error_name`` and exits with code 2 for every
    subclass.
    """

    error_name = "ScoringError"


class EmptyOptionSetError(ScoringError):
    """A non-leaf scoring game was built with an empty option set."""

    error_name = "EmptyOptionSet"


class MixedParityError(ScoringError):
    """The options of a scoring game do not all have the same parity."""

    error_name = "MixedParity"


class ScoreOverflowError(ScoringError):
    """An integer score left the signed 64 bit range."""

    error_name = "ScoreOverflow"


class ArityMismatchError(ScoringError):
    error_name = "ArityMismatch"


class ValueOutsideDomainError(ScoringError):
    """A game has a leaf that is not in the domain of a combiner argument."""

    error_name = "ValueOutsideDomain"


class NotOrderPreservingError(ScoringError):
    error_name = "NotOrderPreserving"


class NotComparableError(ScoringError):
    error_name = "NotComparable"


class ParityMismatchError(ScoringError):
    error_name = "ParityMismatch"


class NotInvertibleError(ScoringError):
    error_name = "NotInvertible"


class NotInIError(ScoringError):
    """A game that should have gap0 = 0 does not."""

    error_name = "NotInI"


class EmptyOptionsError(ScoringError):
    error_name = "EmptyOptions"


class NotBooleanValuedError(ScoringError):
    error_name = "NotBooleanValued"


class ClassificationFailureError(ScoringError):
    """No octet value matches a Boolean game. This is an engine bug."""

    error_name = "ClassificationFailure"


class NoExtremumError(ScoringError):
    error_name = "NoExtremum"


class IllegalClassError(ScoringError):
    error_name = "IllegalClass"


class TooLargeError(ScoringError):
    error_name = "TooLarge"


class NotationSyntaxError(ScoringError):
    """The game notation could not be parsed.

    Parameters
    ----------
    message: `str`
        What went wrong.
    text: `str`
        The full text being parsed.
    position: `int`
        The character offset at which parsing failed.
    """

    error_name = "SyntaxError"

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
