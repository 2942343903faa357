import json
import logging
from functools import wraps

import click

from powerideals.errors import PowerIdealError

logger = logging.getLogger(__name__)

INPUT_ERROR_EXIT = 2
VERIFICATION_FAILURE_EXIT = 1


def wants_json(ctx: click.Context) -> bool:
    """--json may be given on the root group or on the subcommand."""
    local = ctx.params.get("as_json", False)
    root = ctx.find_root().obj or {}
    return bool(local or root.get("json"))


def emit(ctx: click.Context, document: dict, text: str):
    if wants_json(ctx):
        click.echo(json.dumps(document, indent=2, sort_keys=True))
    else:
        click.echo(text)


def handles_errors(f):
    """Turn library errors into an error payload and exit code 2."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except PowerIdealError as e:
            ctx = click.get_current_context()
            logger.debug("command %s failed", ctx.info_name, exc_info=True)
            if wants_json(ctx):
                click.echo(json.dumps({"error": str(e)}), err=True)
            else:
                click.echo(f"error: {e}", err=True)
            ctx.exit(INPUT_ERROR_EXIT)

    return decorated_function
