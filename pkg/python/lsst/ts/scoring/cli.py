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
    "DOMAIN_ERROR_EXIT_CODE",
    "RELATION_SYMBOLS",
    "USAGE_ERROR_EXIT_CODE",
    "CliSettings",
    "TableName",
    "app",
    "bool_app",
    "classes_payload",
    "main",
    "run_scoring",
    "table_payload",
]

import dataclasses
import enum
import functools
import json
import logging
import math
import pathlib
import sys
import typing

import pandas
import typer

try:
    # Newer typer vendors click; its exceptions are not click's.
    from typer import _click as click
except ImportError:
    import click

from .boolean import (
    BoolClass,
    cap_table,
    classes_frame,
    cup_table,
    enumerate_classes,
    u_values,
    verify_boolean_claim,
    verify_distinct,
)
from .canonical import canonical_form, canonical_sides
from .core import GameRef, gaps, heat, negate, outcome
from .disjunctive import sum as game_sum
from .enums import BarStyle
from .errors import ScoringError
from .examples import (
    TruthTable,
    input_setting_game,
    parse_twist_vector,
    shadow_game_brute,
    shadow_value_by_rule,
)
from .maps import phi0, phi1, psi, psi_minus, psi_plus
from .notation import format_game, parse_game, parse_partizan
from .order import compare, in_I, in_J, in_K, invertible, relations, sides
from .partizan import PartizanRef, p_canonical

# Exit code for a malformed command line.
USAGE_ERROR_EXIT_CODE = 1

# Exit code for a well-formed command that failed with a domain error.
DOMAIN_ERROR_EXIT_CODE = 2

# Symbol printed for each relation of `relations`.
RELATION_SYMBOLS = {
    "ge": "≳",
    "le": "≲",
    "equivalent": "≈",
    "ge_plus": "≳+",
    "le_plus": "≲+",
    "equivalent_plus": "≈+",
    "ge_minus": "≳-",
    "le_minus": "≲-",
    "equivalent_minus": "≈-",
}


class TableName(str, enum.Enum):
    CUP = "cup"
    CAP = "cap"


@dataclasses.dataclass
class CliSettings:
    """Options shared by every subcommand."""

    json_output: bool = False
    style: BarStyle = BarStyle.NESTED


app = typer.Typer(
    name="run_scoring",
    help="Algebra of well-tempered scoring games.",
    add_completion=False,
    no_args_is_help=True,
)
bool_app = typer.Typer(
    help="Classification of games with final scores 0 and 1.",
    no_args_is_help=True,
)
app.add_typer(bool_app, name="bool")


def _settings(ctx: typer.Context) -> CliSettings:
    settings = ctx.find_root().obj
    return settings if isinstance(settings, CliSettings) else CliSettings()


def _emit(ctx: typer.Context, payload: dict[str, typing.Any], text: str) -> None:
    if _settings(ctx).json_output:
        typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        typer.echo(text)


def _show(ctx: typer.Context, g: GameRef) -> str:
    return format_game(g, _settings(ctx).style)


def _gap(value: int | float) -> int | None:
    return None if value == -math.inf else int(value)


def reports_errors(func: typing.Callable) -> typing.Callable:
    """Turn domain errors of a subcommand into exit code 2.

    The error name and message go to stderr as
    ``error: <name>: <message>``.
    """

    @functools.wraps(func)
    def wrapper(*args: typing.Any, **kwargs: typing.Any) -> typing.Any:
        try:
            return func(*args, **kwargs)
        except ScoringError as e:
            typer.echo(f"error: {e.error_name}: {e}", err=True)
            raise typer.Exit(DOMAIN_ERROR_EXIT_CODE)

    return wrapper


@app.callback()
def configure(
    ctx: typer.Context,
    json_output: typing.Annotated[
        bool, typer.Option("--json", help="Print machine readable JSON.")
    ] = False,
    style: typing.Annotated[
        BarStyle, typer.Option(help="Printing style of games.")
    ] = BarStyle.NESTED,
    verbose: typing.Annotated[
        int,
        typer.Option("--verbose", "-v", count=True, help="Log more; repeat for debug."),
    ] = 0,
) -> None:
    ctx.obj = CliSettings(json_output=json_output, style=style)
    level = max(logging.WARNING - 10 * verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s:%(name)s:%(message)s")
    logging.getLogger("lsst.ts.scoring").setLevel(level)


@app.command("eval")
@reports_errors
def eval_game(ctx: typer.Context, game: str) -> None:
    """Print the outcomes, gaps, classes and invertibility of a game."""
    g = parse_game(game)
    result = outcome(g)
    gap_pair = gaps(g)
    payload = {
        "game": _show(ctx, g),
        "l": result.l,
        "r": result.r,
        "lf": result.lf,
        "rf": result.rf,
        "parity": result.parity.name.lower(),
        "gap0": _gap(gap_pair.gap0),
        "gap1": _gap(gap_pair.gap1),
        "in_I": in_I(g),
        "in_J": in_J(g),
        "in_K": in_K(g),
        "invertible": invertible(g),
    }
    text = "\n".join(
        [
            f"l={result.l} r={result.r} parity={payload['parity']}",
            f"lf={result.lf} rf={result.rf}",
            f"gap0={payload['gap0']} gap1={payload['gap1']}",
            f"in_I={payload['in_I']} in_J={payload['in_J']} in_K={payload['in_K']}",
            f"invertible={payload['invertible']}",
        ]
    )
    _emit(ctx, payload, text)


@app.command("compare")
@reports_errors
def compare_games(ctx: typer.Context, first: str, second: str) -> None:
    """Print every order relation that holds between two games."""
    g = parse_game(first)
    h = parse_game(second)
    found = relations(g, h)
    holding = [RELATION_SYMBOLS[name] for name, holds in found.items() if holds]
    payload = {"comparison": compare(g, h).value, **found}
    _emit(ctx, payload, " ".join(holding) if holding else "incomparable")


@app.command("sum")
@reports_errors
def sum_games(ctx: typer.Context, first: str, second: str) -> None:
    """Print the disjunctive sum of two games."""
    total = game_sum(parse_game(first), parse_game(second))
    _emit(ctx, {"game": _show(ctx, total)}, _show(ctx, total))


@app.command("neg")
@reports_errors
def negate_game(ctx: typer.Context, game: str) -> None:
    """Print the conjugate of a game."""
    result = negate(parse_game(game))
    _emit(ctx, {"game": _show(ctx, result)}, _show(ctx, result))


@app.command("heat")
@reports_errors
def heat_game(
    ctx: typer.Context,
    game: str,
    t: typing.Annotated[
        int, typer.Option("-t", "--temperature", help="Amount to heat by.")
    ],
) -> None:
    """Heat a game by an integer; negative amounts cool it."""
    result = heat(parse_game(game), t)
    _emit(ctx, {"game": _show(ctx, result)}, _show(ctx, result))


@app.command("sides")
@reports_errors
def game_sides(ctx: typer.Context, game: str) -> None:
    """Print the upside and downside of a game."""
    pair = sides(parse_game(game))
    payload = {"upside": _show(ctx, pair.up), "downside": _show(ctx, pair.down)}
    text = f"upside: {payload['upside']}\ndownside: {payload['downside']}"
    _emit(ctx, payload, text)


@app.command("canonical")
@reports_errors
def canonical_game(ctx: typer.Context, game: str) -> None:
    """Print the canonical form, or ``U & D`` for a game without one."""
    g = parse_game(game)
    if invertible(g):
        result = _show(ctx, canonical_form(g))
        _emit(ctx, {"invertible": True, "canonical": result}, result)
        return
    pair = canonical_sides(g)
    up = _show(ctx, pair.up)
    down = _show(ctx, pair.down)
    payload = {"invertible": False, "upside": up, "downside": down}
    _emit(ctx, payload, f"{up} & {down}")


def _partizan_command(
    ctx: typer.Context, game: str, mapping: typing.Callable[[GameRef], PartizanRef]
) -> None:
    form = mapping(parse_game(game))
    value = p_canonical(form)
    _emit(ctx, {"form": str(form), "value": str(value)}, str(value))


@app.command("psi")
@reports_errors
def psi_game(ctx: typer.Context, game: str) -> None:
    """Print the partizan value of the plain image of a game."""
    _partizan_command(ctx, game, psi)


@app.command("psi+")
@reports_errors
def psi_plus_game(ctx: typer.Context, game: str) -> None:
    _partizan_command(ctx, game, psi_plus)


@app.command("psi-")
@reports_errors
def psi_minus_game(ctx: typer.Context, game: str) -> None:
    _partizan_command(ctx, game, psi_minus)


@app.command("phi0")
@reports_errors
def phi0_game(ctx: typer.Context, game: str) -> None:
    """Map a partizan game, e.g. ``{1|3*}``, to an even scoring game."""
    result = phi0(parse_partizan(game))
    _emit(ctx, {"game": _show(ctx, result)}, _show(ctx, result))


@app.command("phi1")
@reports_errors
def phi1_game(ctx: typer.Context, game: str) -> None:
    """Map a partizan game to an odd scoring game."""
    result = phi1(parse_partizan(game))
    _emit(ctx, {"game": _show(ctx, result)}, _show(ctx, result))


def _class_payload(c: BoolClass) -> dict[str, str]:
    return {
        "parity": c.parity.name.lower(),
        "u_plus": c.u_plus.value,
        "u_minus": c.u_minus.value,
    }


@app.command("shadow")
@reports_errors
def shadow(
    ctx: typer.Context,
    vector: typing.Annotated[str, typer.Argument(help="Twist vector, e.g. 2,1,3.")],
    brute: typing.Annotated[
        bool, typer.Option(help="Also solve the shadow game by brute force.")
    ] = False,
) -> None:
    """Print the class of the knotting game on a rational shadow."""
    try:
        counts = parse_twist_vector(vector)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="VECTOR")
    rule = shadow_value_by_rule(counts)
    payload: dict[str, typing.Any] = {"vector": counts, "rule": _class_payload(rule)}
    lines = [f"rule: {rule.label()}"]
    if brute:
        found = u_values(shadow_game_brute(counts))
        payload["brute"] = _class_payload(found)
        payload["agree"] = found == rule
        lines.append(f"brute: {found.label()}")
    _emit(ctx, payload, "\n".join(lines))


@app.command("inputgame")
@reports_errors
def input_game(
    ctx: typer.Context,
    n: typing.Annotated[int, typer.Argument(help="Number of inputs.")],
    bits: typing.Annotated[
        str, typer.Argument(help="2**n output bits; input 1 is the low bit.")
    ],
) -> None:
    """Print the outcome and class of the input-setting game of a function."""
    try:
        table = TruthTable.from_bits(n, bits)
    except ScoringError:
        # TooLargeError is a ValueError but reports as a domain error.
        raise
    except ValueError as e:
        raise typer.BadParameter(str(e))
    g = input_setting_game(table)
    result = outcome(g)
    c = u_values(g)
    payload = {"l": result.l, "r": result.r, "class": _class_payload(c)}
    text = f"l={result.l} r={result.r} parity={c.parity.name.lower()}\n{c.label()}"
    _emit(ctx, payload, text)


@bool_app.command("classify")
@reports_errors
def classify(ctx: typer.Context, game: str) -> None:
    """Print the class (u+, u-, parity) of a game with scores 0 and 1."""
    c = u_values(parse_game(game))
    _emit(ctx, _class_payload(c), c.label())


def classes_payload(frame: pandas.DataFrame) -> list[dict[str, typing.Any]]:
    """Return the golden-file rows of a `classes_frame`."""
    columns = ["parity", "u_plus", "u_minus", "l", "r"]
    return [
        {
            column: int(row[column]) if column in ("l", "r") else row[column]
            for column in columns
        }
        for _, row in frame.iterrows()
    ]


def table_payload(name: TableName, frame: pandas.DataFrame) -> dict[str, typing.Any]:
    """Return the golden-file form of a cup or cap table."""
    return {
        "operation": name.value,
        "values": [str(label) for label in frame.columns],
        "table": frame.values.tolist(),
    }


@bool_app.command("enumerate")
@reports_errors
def enumerate_bool(
    ctx: typer.Context,
    golden: typing.Annotated[
        pathlib.Path | None,
        typer.Option(
            exists=True, dir_okay=False, help="Check the classes against a file."
        ),
    ] = None,
    verify: typing.Annotated[
        bool, typer.Option(help="Check that no two representatives are equivalent.")
    ] = False,
) -> None:
    """Print the seventy Boolean classes with their outcomes."""
    entries = enumerate_classes()
    frame = classes_frame(entries)
    rows = classes_payload(frame)
    payload: dict[str, typing.Any] = {"classes": rows}
    if _settings(ctx).json_output:
        payload["representatives"] = frame["representative"].tolist()
    lines = [
        f"({row['u_plus']}, {row['u_minus']}, {row['parity']}) "
        f"l={row['l']} r={row['r']} {representative}"
        for row, representative in zip(rows, frame["representative"])
    ]
    if verify:
        comparisons, equivalent_pairs = verify_distinct(entries)
        distinct = comparisons - len(equivalent_pairs)
        payload["distinct"] = {"comparisons": comparisons, "distinct": distinct}
        lines.append(f"distinct: {distinct}/{comparisons}")
    if golden is not None:
        expected = json.loads(golden.read_text(encoding="utf-8"))
        if expected != rows:
            _emit(ctx, payload, "\n".join(lines))
            typer.echo(f"error: GoldenMismatch: classes differ from {golden}", err=True)
            raise typer.Exit(DOMAIN_ERROR_EXIT_CODE)
        lines.append(f"golden: {len(rows)} classes match {golden}")
    _emit(ctx, payload, "\n".join(lines))


@bool_app.command("table")
@reports_errors
def table(ctx: typer.Context, name: TableName) -> None:
    """Print the 8 x 8 table of cup or cap."""
    frame = cup_table() if name == TableName.CUP else cap_table()
    _emit(ctx, table_payload(name, frame), frame.to_string())


@bool_app.command("claim")
@reports_errors
def claim(ctx: typer.Context) -> None:
    """Check that antichains of images of one parity give images of the
    other.
    """
    report = verify_boolean_claim()
    failures = [
        {
            "parity": case.parity.name.lower(),
            "left": [u.value for u in case.left],
            "right": [u.value for u in case.right],
        }
        for case in report.failures
    ]
    payload = {"passed": report.passed, "total": report.total, "failures": failures}
    lines = [f"{report.passed}/{report.total} cases hold"]
    lines += [
        f"failed: {failure['parity']} "
        f"{{{','.join(failure['left'])}|{','.join(failure['right'])}}}"
        for failure in failures
    ]
    _emit(ctx, payload, "\n".join(lines))


def main(argv: list[str] | None = None) -> int:
    """Run the command line and return its exit code.

    Parameters
    ----------
    argv: `list` [`str`] or `None`
        The arguments, without the program name; ``sys.argv[1:]`` if None.

    Returns
    -------
    int
        0 on success, 1 for a usage error and 2 for a domain error.
    """
    if argv is None:
        argv = sys.argv[1:]
    try:
        result = app(args=argv, prog_name="run_scoring", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return USAGE_ERROR_EXIT_CODE
    except click.exceptions.Abort:
        return USAGE_ERROR_EXIT_CODE
    return result if isinstance(result, int) else 0


def run_scoring() -> None:
    sys.exit(main())

