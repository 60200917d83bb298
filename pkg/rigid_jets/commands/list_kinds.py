import typer

from rigid_jets.constants import CERTIFIES, ScenarioKind
from rigid_jets.jetcore.serialization import canonical_dumps
from rigid_jets.scenarios import schema_table


def list_kinds(
    as_json: bool = typer.Option(False, "--json", help="Print the schemas as json."),
) -> None:
    """
    Prints the scenario kinds and their parameter schemas.
    """
    table = schema_table()
    if as_json:
        typer.echo(canonical_dumps(table))
        return
    for kind in ScenarioKind:
        typer.echo(f"{kind.value}: {CERTIFIES[kind]}")
        for name, schema in table[kind.value].items():
            bounds = ""
            if "min" in schema or "max" in schema:
                bounds = f" [{schema.get('min', '')}..{schema.get('max', '')}]"
            if "choices" in schema:
                bounds = f" {{{', '.join(schema['choices'])}}}"
            required = "required" if schema["required"] else "optional"
            typer.echo(f"  {name} ({schema['type']}, {required}){bounds}: {schema['description']}")
