"""Run exact property checks on one representation."""

from typing import Annotated, Optional

import typer

from baxterise.commands.modules.inputs import (
    FamilyOption,
    MatrixOption,
    MOption,
    ParamsOption,
    SideOption,
    SpecOption,
    resolve_subject,
    subject_header,
)
from baxterise.commands.modules.reporting import echo_witnesses, emit_json, fail_usage
from baxterise.completion.completers import complete_checks
from baxterise.core.algebra import CheckReport
from baxterise.core.checks import run_check
from baxterise.core.errors import BaxteriseError
from baxterise.core.sampling import cell_rng
from baxterise.utils.config import ConfigManager
from baxterise.utils.validators import (
    SCAN_MAX_N,
    ValidationError,
    parse_checks,
    validate_positive,
)


def verify_command(
    family: FamilyOption = None,
    params: ParamsOption = None,
    m: MOption = 2,
    spec: SpecOption = None,
    matrix: MatrixOption = None,
    side: SideOption = "S",
    checks: Annotated[
        Optional[str],
        typer.Option(
            "--checks",
            "-c",
            help="Comma-separated checks (default: relation,ybe,unitarity,regularity,locality)",
            autocompletion=complete_checks,
        ),
    ] = None,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Random seed")] = None,
    trials: Annotated[
        Optional[int], typer.Option("--trials", "-t", help="Random points per check")
    ] = None,
    max_n: Annotated[
        Optional[int], typer.Option("--max-n", help="Longest chain for the integrability check")
    ] = None,
) -> None:
    """Verify a representation; exit 0 if every check passes, 1 on a failure."""
    # Fall back to configured defaults
    defaults = ConfigManager().get_defaults()
    seed = defaults.seed if seed is None else seed
    trials = defaults.trials if trials is None else trials
    max_n = defaults.max_n if max_n is None else max_n

    try:
        subject = resolve_subject(family, params, m, spec, matrix, side)
        selected = parse_checks(checks)
        validate_positive(trials, "--trials")
        if not 2 <= max_n <= SCAN_MAX_N:
            raise ValidationError(f"❌ --max-n must be between 2 and {SCAN_MAX_N}, got {max_n}")
    except ValidationError as e:
        fail_usage(e)

    reports: dict[str, CheckReport] = {}
    for check in selected:
        # keyed by seed, label, m and check
        rng = cell_rng(seed, subject.label, subject.m, check)
        try:
            reports[check] = run_check(subject, check, rng, trials=trials, max_n=max_n)
        except BaxteriseError as e:
            fail_usage(ValidationError(f"❌ Cannot run '{check}' on {subject.label}\n   {e}"))

    # Report on stdout, witnesses on stderr
    passed = all(r.passed for r in reports.values())
    emit_json(
        {
            **subject_header(subject),
            "seed": seed,
            "trials": trials,
            "checks": {check: report.to_dict() for check, report in reports.items()},
            "passed": passed,
        }
    )
    echo_witnesses(subject.label, reports)
    if not passed:
        raise typer.Exit(1)
