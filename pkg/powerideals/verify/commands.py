import click

from powerideals import config
from powerideals.harness.scenarios import run_scenario
from powerideals.middlewares import VERIFICATION_FAILURE_EXIT, emit, handles_errors

SCENARIO_NAMES = ["prop1", "prop2", "prop3", "lemmas", "tutte", "all"]


@click.command()
@click.argument("scenario", type=click.Choice(SCENARIO_NAMES))
@click.option("-m", "m", type=int, default=lambda: config.DEFAULT_M, show_default="PIL_DEFAULT_M",
              help="Planes per pencil.")
@click.option("--seed", type=int, default=lambda: config.DEFAULT_SEED, show_default="PIL_DEFAULT_SEED")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@click.pass_context
@handles_errors
def verify(ctx, scenario, m, seed, as_json):
    """Run a scenario and exit 1 unless every expectation holds."""
    report = run_scenario(scenario, m, seed)
    emit(ctx, report.to_document(), report.render_text())
    if not report.passed:
        ctx.exit(VERIFICATION_FAILURE_EXIT)
