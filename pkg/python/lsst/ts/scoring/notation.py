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
    "MAX_BAR_MULTIPLICITY",
    "Parser",
    "Token",
    "format_game",
    "parse_game",
    "parse_partizan",
    "tokenize",
]

import re
import typing

from .core import GameRef, GameStore, default_store
from .enums import BarStyle
from .errors import NotationSyntaxError
from .partizan import (
    PartizanRef,
    PartizanStore,
    default_partizan_store,
    p_canonical,
    p_number,
    p_star,
    p_sum,
)

# Highest bar multiplicity the printer uses; deeper games get braces.
MAX_BAR_MULTIPLICITY = 8

_TOKEN_RE = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<bar>\|+)"
    r"|(?P<open>\{)"
    r"|(?P<close>\})"
    r"|(?P<comma>,)"
    r"|(?P<atom>-?\d+(?:/\d+)?\*?|\*)"
)


class Token(typing.NamedTuple):
    kind: str
    text: str
    position: int

    @property
    def bars(self) -> int:
        return len(self.text) if self.kind == "bar" else 0


def tokenize(text: str) -> list[Token]:
    """Split game notation into tokens.

    Raises
    ------
    NotationSyntaxError
        If a character cannot start a token.
    """
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            raise NotationSyntaxError(
                f"Unexpected character {text[position]!r}", text, position
            )
        if match.lastgroup != "space":
            tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    return tokens


class Parser:
    """Recursive descent parser of the brace and bar notation.

    Within braces the unique bar token of highest multiplicity at brace
    depth zero separates the left options from the right options. A side
    that contains bars is one game written without its braces; otherwise it
    is a comma separated list of integers (or numbers and stars) and braced
    games.

    Parameters
    ----------
    text: `str`
        The notation to parse.
    make_atom: callable
        Builds a leaf from the text of an atom.
    make_node: callable
        Builds a game from lists of left and right options.
    """

    def __init__(
        self,
        text: str,
        make_atom: typing.Callable[[Token], typing.Any],
        make_node: typing.Callable[[list, list, Token], typing.Any],
    ) -> None:
        self.text = text
        self.tokens = tokenize(text)
        self.make_atom = make_atom
        self.make_node = make_node

    def error(self, message: str, position: int) -> NotationSyntaxError:
        return NotationSyntaxError(message, self.text, position)

    def parse(self) -> typing.Any:
        if not self.tokens:
            raise self.error("Empty game", 0)
        return self.game(0, len(self.tokens))

    def _matching_close(self, start: int, stop: int) -> int:
        depth = 0
        for index in range(start, stop):
            kind = self.tokens[index].kind
            if kind == "open":
                depth += 1
            elif kind == "close":
                depth -= 1
                if depth == 0:
                    return index
        raise self.error("Unclosed brace", self.tokens[start].position)

    def _top_level(self, start: int, stop: int, kind: str) -> list[int]:
        # Indices of tokens of one kind at brace depth zero.
        found = []
        depth = 0
        for index in range(start, stop):
            token = self.tokens[index]
            if token.kind == "open":
                depth += 1
            elif token.kind == "close":
                depth -= 1
                if depth < 0:
                    raise self.error("Unbalanced brace", token.position)
            elif token.kind == kind and depth == 0:
                found.append(index)
        return found

    def game(self, start: int, stop: int) -> typing.Any:
        """Parse the tokens ``[start, stop)`` as one game."""
        if self._top_level(start, stop, "bar"):
            return self.alternation(start, stop)
        if start == stop:
            position = self.tokens[start - 1].position if start else 0
            raise self.error("Expected a game", position)
        token = self.tokens[start]
        if token.kind == "atom":
            if stop - start != 1:
                raise self.error("Expected one game", self.tokens[start + 1].position)
            return self.make_atom(token)
        if token.kind != "open":
            raise self.error(f"Unexpected {token.text!r}", token.position)
        close = self._matching_close(start, stop)
        if close != stop - 1:
            raise self.error("Expected one game", self.tokens[close + 1].position)
        if not self._top_level(start + 1, close, "bar"):
            raise self.error("Expected a bar", token.position)
        return self.alternation(start + 1, close)

    def alternation(self, start: int, stop: int) -> typing.Any:
        bars = self._top_level(start, stop, "bar")
        multiplicity = max(self.tokens[index].bars for index in bars)
        splits = [index for index in bars if self.tokens[index].bars == multiplicity]
        if len(splits) != 1:
            token = self.tokens[splits[1]]
            raise self.error(f"Ambiguous {token.text!r}; use braces", token.position)
        split = splits[0]
        left = self.side(start, split)
        right = self.side(split + 1, stop)
        return self.make_node(left, right, self.tokens[split])

    def side(self, start: int, stop: int) -> list:
        if start == stop:
            return []
        if self._top_level(start, stop, "bar"):
            return [self.alternation(start, stop)]
        options = []
        item_start = start
        for comma in self._top_level(start, stop, "comma") + [stop]:
            if comma == item_start:
                position = self.tokens[min(comma, len(self.tokens) - 1)].position
                raise self.error("Missing option", position)
            options.append(self.game(item_start, comma))
            item_start = comma + 1
        return options


def parse_game(text: str, store: GameStore | None = None) -> GameRef:
    """Parse a scoring game such as ``"{2,3|{1|1||2|2}}"``.

    Raises
    ------
    NotationSyntaxError
        If the text is not valid notation or has a non-integer leaf.
    EmptyOptionSetError
        If a game has no options for one player.
    MixedParityError
        If a game is not well-tempered.
    """
    if store is None:
        store = default_store()

    def make_atom(token: Token) -> GameRef:
        if "/" in token.text or "*" in token.text:
            raise NotationSyntaxError(
                f"{token.text!r} is not an integer", text, token.position
            )
        return store.leaf(int(token.text))

    def make_node(left: list, right: list, token: Token) -> GameRef:
        return store.node(left, right)

    return Parser(text, make_atom, make_node).parse()


def parse_partizan(text: str, store: PartizanStore | None = None) -> PartizanRef:
    """Parse a partizan game; leaves may be ``*``, ``n*`` or dyadics like
    ``3/8``, and sides may be empty, as in ``"{0|}"``.
    """
    if store is None:
        store = default_partizan_store()

    def make_atom(token: Token) -> PartizanRef:
        literal = token.text
        starred = literal.endswith("*")
        number_text = literal.rstrip("*") or "0"
        try:
            value = p_number(number_text, store)
        except (ValueError, ZeroDivisionError):
            raise NotationSyntaxError(
                f"{literal!r} is not a dyadic rational", text, token.position
            )
        if starred:
            value = p_canonical(p_sum(value, p_star(store)))
        return value

    def make_node(left: list, right: list, token: Token) -> PartizanRef:
        return store.node(left, right)

    return Parser(text, make_atom, make_node).parse()


def _bare(g: GameRef) -> tuple[str, int]:
    # Text of an inner node without its braces, and its bar multiplicity.
    sides = []
    for options in (g.left, g.right):
        if len(options) == 1 and not options[0].is_leaf:
            sides.append(_bare(options[0]))
        else:
            sides.append((",".join(_braced(option) for option in options), 0))
    multiplicity = max(level for _, level in sides) + 1
    if multiplicity > MAX_BAR_MULTIPLICITY:
        sides = [
            (f"{{{side}}}", 0) if level > 0 else (side, level)
            for side, level in sides
        ]
        multiplicity = 1
    return sides[0][0] + "|" * multiplicity + sides[1][0], multiplicity


def _braced(g: GameRef) -> str:
    return str(g.score) if g.is_leaf else f"{{{_bare(g)[0]}}}"


def format_game(g: GameRef, style: BarStyle = BarStyle.NESTED) -> str:
    """Print a scoring game.

    Parameters
    ----------
    g: `GameRef`
        The game.
    style: `BarStyle`
        NESTED writes every game in braces, e.g. ``{{0|0}|{1|1}}``. BARS
        drops inner braces where bars of higher multiplicity suffice, e.g.
        ``{0|0||1|1}``.

    Returns
    -------
    str
        Text that `parse_game` reads back as the same ref.
    """
    if style == BarStyle.NESTED:
        return g.store.render(g)
    return _braced(g)
