"""``seqgame`` command line.

Exit codes: 0 ok, 1 usage, 2 parse/input, 3 cyclic preference, 4 failed
assertion, 5 enumeration too large.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

from . import oracle
from .errors import (
    CyclicPreference,
    GameMismatch,
    MissingPayoff,
    ParseError,
    TooLarge,
)
from .prefs_io import parse_prefs
from .relation import check_properties, find_cycle, intern_id
from .solver import backward_induction, no_equilibrium_game, solve_spe
from .strategy import happiness, induced_outcome, is_nash, is_spe, underlying_game
from .syntax import format_game, format_profile, parse_game, parse_profile

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CYCLIC = 3
EXIT_ASSERT = 4
EXIT_TOO_LARGE = 5


class _Group(click.Group):
    """Click group that maps errors onto the documented exit codes."""

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args, prog_name, complete_var, standalone_mode=False, **extra)
            code = rv if isinstance(rv, int) else EXIT_OK
        except click.UsageError as exc:
            exc.show()
            code = EXIT_USAGE
        except click.ClickException as exc:
            exc.show()
            code = EXIT_USAGE
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE
        if standalone_mode:
            sys.exit(code)
        return code


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc.strerror}") from None


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = fn(*args, **kwargs)
        except (ParseError, MissingPayoff) as exc:
            click.echo(f"error: {exc}", err=True)
            code = EXIT_PARSE
        except GameMismatch as exc:
            click.echo(f"error: {exc}", err=True)
            code = EXIT_USAGE
        except TooLarge as exc:
            click.echo(f"error: {exc}", err=True)
            code = EXIT_TOO_LARGE
        ctx.exit(code or EXIT_OK)

    return wrapper


def _outcomes_csv(value: str) -> list[str]:
    items = [intern_id(v.strip()) for v in value.split(",") if v.strip()]
    if not items:
        raise click.UsageError("--outcomes needs at least one outcome")
    return items


def _verdicts(pf, s) -> None:
    click.echo(f"nash: {_flag(is_nash(pf, s))}")
    click.echo(f"spe: {_flag(is_spe(pf, s))}")


@click.group(cls=_Group)
def cli():
    """Solve and check abstract sequential games."""


@cli.command()
@click.option("--game", "game_path", required=True, help="Game file (s-expression).")
@click.option("--prefs", "prefs_path", required=True, help="Preference document (JSON).")
@click.option("--mode", type=click.Choice(["bi", "spe"]), default="bi", show_default=True,
              help="bi: plain backward induction; spe: linear extension first.")
@_handle_errors
def solve(game_path, prefs_path, mode):
    """Compute a strategy profile and report its equilibrium status."""
    g = parse_game(_read(game_path))
    pf = parse_prefs(_read(prefs_path))
    if mode == "bi":
        s = backward_induction(g, pf)
    else:
        try:
            s = solve_spe(g, pf)
        except CyclicPreference as exc:
            click.echo("error: cyclic preference")
            click.echo(f"agent: {exc.agent}")
            click.echo(f"cycle: {exc.cycle}")
            return EXIT_CYCLIC
    click.echo(f"profile: {format_profile(s)}")
    click.echo(f"outcome: {induced_outcome(s)}")
    _verdicts(pf, s)
    return EXIT_OK


@cli.command()
@click.option("--game", "game_path", default=None, help="Optional game the profile must be over.")
@click.option("--profile", "profile_path", required=True, help="Profile file ('*' marks choices).")
@click.option("--prefs", "prefs_path", required=True, help="Preference document (JSON).")
@click.option("--assert", "assertion", type=click.Choice(["ne", "spe"]), default=None,
              help="Exit 4 unless the profile is a Nash (ne) or subgame perfect (spe) equilibrium.")
@_handle_errors
def check(game_path, profile_path, prefs_path, assertion):
    """Report per-agent happiness and equilibrium verdicts of a profile."""
    s = parse_profile(_read(profile_path))
    if game_path is not None:
        g = parse_game(_read(game_path))
        if underlying_game(s) != g:
            raise GameMismatch(
                f"profile is over {format_game(underlying_game(s))}, not {format_game(g)}"
            )
    pf = parse_prefs(_read(prefs_path))
    for agent, happy in happiness(pf, s).items():
        click.echo(f"happy {agent}: {_flag(happy)}")
    nash, spe = is_nash(pf, s), is_spe(pf, s)
    click.echo(f"nash: {_flag(nash)}")
    click.echo(f"spe: {_flag(spe)}")
    if assertion == "ne" and not nash or assertion == "spe" and not spe:
        return EXIT_ASSERT
    return EXIT_OK


@cli.command("enumerate")
@click.option("--game", "game_path", required=True, help="Game file (s-expression).")
@click.option("--prefs", "prefs_path", required=True, help="Preference document (JSON).")
@click.option("--filter", "filter_", type=click.Choice(["nash", "spe", "all"]), default="all",
              show_default=True)
@click.option("--max-profiles", type=click.IntRange(min=1), default=oracle.DEFAULT_MAX_PROFILES,
              show_default=True, help="Refuse games with more strategy profiles than this.")
@_handle_errors
def enumerate_cmd(game_path, prefs_path, filter_, max_profiles):
    """List every strategy profile of a game with its nash/spe flags."""
    g = parse_game(_read(game_path))
    pf = parse_prefs(_read(prefs_path))
    rows = oracle.find_equilibria(g, pf, filter_, max_profiles)
    click.echo(f"count: {len(rows)}")
    for row in rows:
        click.echo(f"{format_profile(row.profile)} nash={_flag(row.nash)} spe={_flag(row.spe)}")
    return EXIT_OK


@cli.command("prefs-analyze")
@click.option("--prefs", "prefs_path", required=True, help="Preference document (JSON).")
@click.option("--outcomes", required=True, help="Comma-separated outcome carrier.")
@_handle_errors
def prefs_analyze(prefs_path, outcomes):
    """Order-theoretic properties of every agent's preference on a carrier."""
    carrier = _outcomes_csv(outcomes)
    pf = parse_prefs(_read(prefs_path))
    for agent, rel in pf.items():
        report = check_properties(rel, carrier)
        cycle = find_cycle(rel, carrier)
        click.echo(f"agent {agent}")
        click.echo(f"  irreflexive: {_flag(report.irreflexive)}")
        click.echo(f"  transitive: {_flag(report.transitive)}")
        click.echo(f"  total: {_flag(report.total)}")
        click.echo(f"  acyclic: {_flag(cycle is None)}")
        if cycle is not None:
            click.echo(f"  cycle: {cycle}")
    return EXIT_OK


@cli.command()
@click.option("--prefs", "prefs_path", required=True, help="Preference document (JSON).")
@click.option("--agent", required=True, help="Agent whose preference should be cyclic.")
@click.option("--outcomes", required=True, help="Comma-separated outcome carrier.")
@_handle_errors
def counterexample(prefs_path, agent, outcomes):
    """Print a game with no Nash equilibrium, built from a preference cycle."""
    carrier = _outcomes_csv(outcomes)
    pf = parse_prefs(_read(prefs_path))
    cycle = find_cycle(pf.prefs(intern_id(agent)), carrier)
    if cycle is None:
        click.echo(f"no cycle: preference of {agent} is acyclic on the given outcomes", err=True)
        return EXIT_CYCLIC
    click.echo(format_game(no_equilibrium_game(agent, cycle)))
    return EXIT_OK


def main(argv=None):
    return cli.main(argv, prog_name="seqgame")


if __name__ == "__main__":  # pragma: no cover
    main()
