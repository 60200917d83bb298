import logging

import typer

from rigid_jets.commands.list_kinds import list_kinds
from rigid_jets.commands.run import run
from rigid_jets.commands.suite import suite
from rigid_jets.constants import ExitCode
from rigid_jets.exceptions import SettingsError
from rigid_jets.resolvers import get_settings
from rigid_jets.settings import validate_settings

app = typer.Typer(
    help="Exact jet computations behind the rigidity and degeneration checks.",
    no_args_is_help=True,
    add_completion=False,
)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level."),
) -> None:
    try:
        settings = validate_settings(get_settings())
    except SettingsError as exc:
        typer.echo(f"Error: {exc.message}", err=True)
        raise typer.Exit(ExitCode.USAGE)
    level = logging.DEBUG if verbose else settings.LOG_LEVEL
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


app.command("run")(run)
app.command("suite")(suite)
app.command("list")(list_kinds)


if __name__ == "__main__":
    app()
