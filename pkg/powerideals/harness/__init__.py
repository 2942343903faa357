from powerideals.harness.fileformat import (
    builtin_text,
    format_arrangement,
    load_builtin,
    load_file,
    parse_arrangement,
    parse_rational,
)
from powerideals.harness.pencil import (
    PencilConfig,
    build_pencil_arrangement,
    extend_with_generic_plane,
    post_check_failures,
)
from powerideals.harness.report import Check, Provenance, ScenarioReport, combined_report
from powerideals.harness.scenarios import (
    SCENARIOS,
    run_all,
    run_scenario,
    scenario_lemmas,
    scenario_prop1,
    scenario_prop2,
    scenario_prop3,
    scenario_tutte,
)
