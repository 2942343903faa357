import logging

import click

from powerideals import config


def create_cli() -> click.Group:
    """CLI factory: builds the ``pil`` group and registers its commands."""

    @click.group(name="pil")
    @click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON documents.")
    @click.option("--verbose", is_flag=True, help="Log at DEBUG level on stderr.")
    @click.pass_context
    def cli(ctx, as_json, verbose):
        """Power ideals and inverse systems of hyperplane arrangements."""
        level = logging.DEBUG if verbose else getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING)
        logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s", force=True)
        ctx.obj = {"json": as_json}

    # Import commands inside the function to avoid circular imports
    from powerideals.compute.commands import COMMANDS
    from powerideals.verify.commands import verify

    # Register commands if not already registered
    for command in COMMANDS + [verify]:
        if command.name not in cli.commands:
            cli.add_command(command)

    return cli


def main():
    create_cli()()
