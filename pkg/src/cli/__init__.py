#!/usr/bin/env python3
"""CLI entry point for lefschetz-mci"""

import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, Tuple

import click

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from core import __version__
from core.algebra.domain import Status, normalize
from core.census.records import CensusRecord
from core.census.runner import METHODS, census_tasks, decide, run_census
from core.census.verify import MODES, run_verification
from core.census.writer import CensusWriter
from core.config.models import LefschetzConfig
from core.config.profiles import list_presets, resolve_jobs, resolve_preset
from core.docs.concordance import generate_concordance, missing_results, orphaned_tests
from core.exceptions import LefschetzError, PreconditionError
from core.lefschetz.detformula import nilp_determinant_bruteforce, proctor_determinant


logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)8s] %(name)s: %(message)s"
DEFAULT_CONFIG = "lefschetz.json"

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_ERROR = 2


def _parse_degrees(ctx, param, value: Optional[str]) -> Optional[Tuple[int, ...]]:
    if value is None:
        return None
    try:
        degrees = tuple(int(part) for part in value.replace(" ", "").split(",") if part)
    except ValueError:
        raise click.BadParameter(f"'{value}' is not a comma-separated list of integers")
    if len(degrees) < 2:
        raise click.BadParameter("give at least two degrees")
    if any(d < 1 for d in degrees):
        raise click.BadParameter("degrees must be positive")
    return degrees


def _fail(message: str) -> None:
    click.echo(f"❌ {message}", err=True)
    sys.exit(EXIT_ERROR)


def _report_error(error: LefschetzError) -> None:
    if isinstance(error, PreconditionError):
        _fail(f"{error} (hypothesis: {error.hypothesis})")
    _fail(str(error))


def _check_units(degrees: Tuple[int, ...], allow_unit: bool) -> None:
    if not allow_unit and any(d < 2 for d in degrees):
        _fail("degrees must be at least 2 (pass --allow-unit for determinant experiments) (hypothesis: d_i >= 2)")


@click.group()
@click.version_option(version=__version__, prog_name="lefschetz")
@click.option('--config', '-c', default=DEFAULT_CONFIG,
              help=f'Configuration file path, .json or .toml (default: {DEFAULT_CONFIG})')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'], case_sensitive=False),
              default=None, help='Log level (default from config: WARNING)')
@click.pass_context
def main(ctx, config: str, log_level: Optional[str]):
    """Decide weak and strong Lefschetz properties of monomial complete intersections"""
    try:
        settings = LefschetzConfig.from_file(config)
    except LefschetzError as e:
        _report_error(e)
    logging.basicConfig(
        level=(log_level or settings.log_level).upper(),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
    ctx.obj = settings


def _decide_command(prop: str, degrees, char: int, method: str, allow_unit: bool, trace: bool, settings: LefschetzConfig):
    _check_units(degrees, allow_unit)
    try:
        d = normalize(degrees)
        verdict, method_trace = decide(d, char, prop, method.lower(), settings.oracle_fallback)
    except LefschetzError as e:
        _report_error(e)

    if trace and method_trace is not None:
        click.echo(json.dumps(method_trace.to_dict()), err=True)
    record = CensusRecord.from_verdict(d, char, prop, verdict)
    click.echo(record.to_json_line())
    if verdict.status is Status.HOLDS:
        sys.exit(EXIT_HOLDS)
    if verdict.status is Status.FAILS:
        sys.exit(EXIT_FAILS)
    _fail(f"{prop.upper()} of {d} in characteristic {char} is undecided (oracle fallback is disabled)")


def _decision_options(func):
    func = click.option('--trace', is_flag=True, help='Print the method trace as JSON on stderr')(func)
    func = click.option('--allow-unit', is_flag=True, help='Accept degrees equal to 1')(func)
    func = click.option('--method', '-m', type=click.Choice(METHODS, case_sensitive=False), default='auto',
                        help='Decision route (default: auto)')(func)
    func = click.option('--char', '-p', type=int, required=True, help='Characteristic: 0 or a prime')(func)
    func = click.option('--degrees', '-d', required=True, callback=_parse_degrees,
                        help='Comma-separated generator degrees, e.g. 5,5,2')(func)
    return func


@main.command()
@_decision_options
@click.pass_obj
def wlp(settings: LefschetzConfig, degrees, char: int, method: str, allow_unit: bool, trace: bool):
    """Decide the weak Lefschetz property"""
    _decide_command("wlp", degrees, char, method, allow_unit, trace, settings)


@main.command()
@_decision_options
@click.pass_obj
def slp(settings: LefschetzConfig, degrees, char: int, method: str, allow_unit: bool, trace: bool):
    """Decide the strong Lefschetz property"""
    _decide_command("slp", degrees, char, method, allow_unit, trace, settings)


@main.command()
@click.option('--degrees', '-d', required=True, callback=_parse_degrees,
              help='Comma-separated generator degrees, e.g. 5,5,5,2')
@click.option('--allow-unit', is_flag=True, help='Accept degrees equal to 1')
@click.option('--bruteforce', is_flag=True, help='Also compute the signed integer determinant')
@click.pass_obj
def det(settings: LefschetzConfig, degrees, allow_unit: bool, bruteforce: bool):
    """Prime factorization of det M_d (odd socle degree, d_0 <= ceil(t/2))"""
    _check_units(degrees, allow_unit)
    try:
        report = proctor_determinant(normalize(degrees))
        if bruteforce:
            signed = nilp_determinant_bruteforce(report.degrees, settings.bruteforce_guard)
            if abs(signed) != report.magnitude.value():
                _fail(f"brute-force determinant {signed} disagrees with the formula {report.magnitude.value()}")
            report = replace(report, signed=signed)
    except LefschetzError as e:
        _report_error(e)
    click.echo(json.dumps(report.to_dict()))


def _census_range(settings, preset, n_values, dmax, pmax, prop):
    if preset:
        chosen = resolve_preset(preset, settings)
        n_values = n_values or tuple(chosen.n_values)
        dmax = chosen.dmax if dmax is None else dmax
        pmax = chosen.pmax if pmax is None else pmax
        prop = prop or chosen.property
    if not n_values or dmax is None or pmax is None or prop is None:
        raise click.UsageError("give --n, --dmax, --pmax and --property, or a --preset")
    return sorted(set(n_values)), dmax, pmax, prop.lower()


@main.command()
@click.option('--n', 'n_values', type=int, multiple=True, help='Number of extra variables (repeatable)')
@click.option('--dmax', type=int, help='Largest generator degree')
@click.option('--pmax', type=int, help='Largest characteristic')
@click.option('--property', 'prop', type=click.Choice(['wlp', 'slp'], case_sensitive=False), help='Property to decide')
@click.option('--preset', help="Census preset (see 'lefschetz presets')")
@click.option('--out', '-o', type=click.Path(dir_okay=False), help='Output file (default: stdout)')
@click.option('--format', 'output_format', type=click.Choice(['jsonl', 'csv']), default=None,
              help='Output format (default from config: jsonl)')
@click.option('--with-zero', is_flag=True, help='Add characteristic 0 rows')
@click.option('--jobs', '-j', type=int, help='Worker processes (default: $LEFSCHETZ_JOBS, config, or core count)')
@click.pass_obj
def census(settings: LefschetzConfig, n_values, dmax, pmax, prop, preset, out, output_format, with_zero, jobs):
    """Decide a property for every (tuple, characteristic) in a range"""
    try:
        n_values, dmax, pmax, prop = _census_range(settings, preset, n_values, dmax, pmax, prop)
        with_zero = with_zero or settings.with_zero_char
        tasks = census_tasks(n_values, dmax, pmax, prop, with_zero, oracle_fallback=settings.oracle_fallback)
        workers = resolve_jobs(jobs, settings)
        writer = CensusWriter(
            out,
            output_format or settings.output_format,
            property=prop,
            n=n_values,
            dmax=dmax,
            pmax=pmax,
            with_zero=str(with_zero).lower(),
        )
        with writer:
            count = writer.write_all(run_census(tasks, workers))
    except LefschetzError as e:
        _report_error(e)
    except OSError as e:
        _fail(f"cannot write census output: {e}")
    if out:
        click.echo(f"✅ Wrote {count} record(s) to {out}", err=True)


@main.command()
@click.option('--mode', required=True, type=click.Choice(MODES), help='Which route to check against the oracle')
@click.option('--n', 'n_values', type=int, multiple=True, required=True, help='Number of extra variables (repeatable)')
@click.option('--dmax', type=int, required=True, help='Largest generator degree')
@click.option('--pmax', type=int, help='Largest characteristic (mode-specific default)')
def verify(mode: str, n_values, dmax: int, pmax: Optional[int]):
    """Cross-check a decision route against the rank oracle; exit 0 iff nothing disagrees"""
    try:
        report = run_verification(mode, n_values, dmax, pmax)
    except LefschetzError as e:
        _report_error(e)
    click.echo(json.dumps(report.to_dict(), indent=2))
    if report.ok:
        click.echo(f"✅ {mode}: {report.checked} checked, 0 disagreements", err=True)
        sys.exit(0)
    click.echo(f"❌ {mode}: {len(report.disagreements)} disagreement(s) out of {report.checked}", err=True)
    sys.exit(1)


@main.command()
@click.option('--out', '-o', type=click.Path(dir_okay=False), help='Output markdown file (default: stdout)')
@click.option('--check', is_flag=True, help='Fail if a required result or a cited test is missing')
def concordance(out: Optional[str], check: bool):
    """Render the result-to-operation concordance"""
    document = generate_concordance()
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(document)
        click.echo(f"✅ Concordance written to {out}", err=True)
    else:
        click.echo(document, nl=False)
    if check:
        problems: List[str] = [f"missing result: {r}" for r in missing_results()]
        problems += [f"orphaned test: {t}" for t in orphaned_tests()]
        for problem in problems:
            click.echo(f"❌ {problem}", err=True)
        sys.exit(1 if problems else 0)


@main.command()
@click.option('--output', '-o', default=DEFAULT_CONFIG,
              help=f'Output configuration file (default: {DEFAULT_CONFIG})')
def init(output: str):
    """Initialize a new configuration file"""
    click.echo(f"🛠️  Initializing configuration file: {output}", err=True)

    if Path(output).exists():
        if not click.confirm(f"Configuration file '{output}' already exists. Overwrite?", err=True):
            click.echo("❌ Initialization cancelled.", err=True)
            return

    try:
        LefschetzConfig().to_file(output)
    except LefschetzError as e:
        _report_error(e)
    except OSError as e:
        _fail(f"Error creating configuration file: {e}")
    click.echo(f"✅ Configuration file '{output}' created successfully!", err=True)
    click.echo("\n📝 Next steps:", err=True)
    click.echo(f"   1. Edit '{output}' to add census presets or change defaults", err=True)
    click.echo("   2. Run 'lefschetz presets' to list census presets", err=True)
    click.echo("   3. Run 'lefschetz census --preset smoke' for a first sweep", err=True)


@main.command()
@click.pass_obj
def presets(settings: LefschetzConfig):
    """List census presets (config presets shadow built-ins)"""
    click.echo("📋 Census presets")
    click.echo("=" * 40)
    for name, preset in sorted(list_presets(settings).items()):
        n_values = ",".join(str(n) for n in preset.n_values)
        click.echo(f"  {name}: {preset.description}")
        click.echo(f"      {preset.property}  n={n_values}  dmax={preset.dmax}  pmax={preset.pmax}")


if __name__ == '__main__':
    main()
