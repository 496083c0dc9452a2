"""Main CLI entry point for keypieri."""

import functools
import json
import sys

import click

from . import config
from .config import ConfigurationError, validate_config
from .errors import CapExceeded, InvalidComposition, KeyPieriError

EXIT_SUITE_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4


def handle_errors(func):
    """Turn domain errors into exit codes."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CapExceeded as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_CAP)
        except (InvalidComposition, KeyPieriError, OverflowError, ValueError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_BAD_INPUT)
    return wrapper


def parse_composition(text: str, n=None):
    from .core.composition import WeakComposition

    return WeakComposition.parse(text, n)


def emit(ctx, data, text: str):
    if ctx.obj["format"] == "json":
        click.echo(json.dumps(data))
    else:
        click.echo(text)


@click.group()
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text",
              help="Output format")
@click.option("--max-diagrams", type=int, default=None, help="Cap on enumerated diagrams")
@click.option("--seed", type=int, default=None, help="Seed for sampled verification runs")
@click.pass_context
def cli(ctx, output_format, max_diagrams, seed):
    """Key polynomials, Kohnert diagrams and Pieri rules."""
    try:
        issues = validate_config(max_diagrams)
    except ConfigurationError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_BAD_INPUT)
    for issue in issues:
        config.logger.debug(issue)
    if max_diagrams is not None:
        config.MAX_DIAGRAMS = max_diagrams
    ctx.ensure_object(dict)
    ctx.obj["format"] = output_format
    ctx.obj["seed"] = config.DEFAULT_SEED if seed is None else seed


@cli.command()
def init():
    """Initialize the run history database."""
    from .database import init_db

    for issue in validate_config():
        click.echo(f"  Warning: {issue}", err=True)
    init_db()
    click.echo(f"Database initialized at {config.DATABASE_PATH}")


@cli.command()
@click.argument("composition")
@click.option("--n", type=int, default=None, help="Pad the composition to n parts")
@click.option("--target", "k", type=int, default=None, help="Enumerate the target space bounded by row K instead")
@click.option("--m", type=int, default=1, help="Strip size for --target")
@click.option("--show/--no-show", default=False, help="Draw every diagram")
@click.pass_context
@handle_errors
def kd(ctx, composition, n, k, m, show):
    """Enumerate KD(A), or a target space of A with --target."""
    from .space import enumerate_kd, enumerate_target_space

    a = parse_composition(composition, n)
    if k is None:
        space = enumerate_kd(a)
        lines = [f"KD{a}: {space.count} diagrams"]
    else:
        space = enumerate_target_space(a, k, m)
        generators = ", ".join(str(g) for g in space.generators)
        lines = [f"target space of {a} (k={k}, m={m}): {space.count} diagrams", f"generators: {generators}"]
    if show:
        for diagram in space.diagrams:
            lines += ["", diagram.render(len(a))]
    emit(ctx, space.to_json(), "\n".join(lines))


@cli.command()
@click.argument("composition")
@click.option("--n", type=int, default=None, help="Pad the composition to n parts")
@click.pass_context
@handle_errors
def keypoly(ctx, composition, n):
    """Print the key polynomial of COMPOSITION."""
    from .space import key_polynomial

    poly = key_polynomial(parse_composition(composition, n))
    emit(ctx, poly.to_json(), str(poly))


@cli.command()
@click.argument("composition")
@click.option("--k", type=int, required=True, help="Number of variables x1..xk")
@click.option("--m", type=int, default=1, help="Degree of the complete homogeneous factor")
@click.option("--mode", type=click.Choice(["auto", "formula", "oracle", "nonneg"]), default="auto")
@click.option("--maximal", is_flag=True, help="Only print terms maximal in the left swap order")
@click.pass_context
@handle_errors
def pieri(ctx, composition, k, m, mode, maximal):
    """Expand kappa_A * h_m(x1..xk) in the key basis."""
    from .pieri import horizontal_strip_expansion, lswap_maximal_terms, nonneg_pieri, pieri_signed_expansion

    a = parse_composition(composition)
    if m < 1:
        raise InvalidComposition(f"m must be positive, got {m}")
    if mode == "formula" and m != 1:
        raise InvalidComposition("the signed formula covers m = 1 only; use --mode oracle")

    if mode == "formula":
        expansion = pieri_signed_expansion(a, k)
    elif mode == "nonneg":
        expansion = nonneg_pieri(a, k, m)
    else:
        expansion = horizontal_strip_expansion(a, k, m)
        if mode == "auto" and m == 1:
            formula = pieri_signed_expansion(a, k)
            if formula != expansion:
                click.echo(f"Mismatch for {a}, k={k}:\n  formula: {formula}\n  oracle:  {expansion}", err=True)
                sys.exit(EXIT_MISMATCH)

    if maximal:
        expansion = lswap_maximal_terms(expansion)
    emit(ctx, expansion.to_json(), str(expansion))


@cli.command()
@click.argument("composition", required=False)
@click.option("--terms", type=str, default=None, help='Polynomial as JSON: [{"coeff": 1, "exp": [1, 0]}, ...]')
@click.option("--times-schur", "m", type=int, default=None, help="Multiply kappa_A by h_m(x1..xk)")
@click.option("--k", type=int, default=None, help="Variable bound for --times-schur")
@click.pass_context
@handle_errors
def expand(ctx, composition, terms, m, k):
    """Expand a polynomial in the key basis."""
    from .algebra import Polynomial, key_expand
    from .space import key_polynomial

    if terms is not None:
        poly = Polynomial.from_json(json.loads(terms))
    elif composition is not None:
        a = parse_composition(composition)
        if m is None:
            poly = key_polynomial(a)
        else:
            bound = len(a) if k is None else k
            a = a.padded(max(len(a), bound))
            poly = key_polynomial(a) * Polynomial.complete_homogeneous(m, bound, len(a))
    else:
        raise InvalidComposition("give a COMPOSITION or --terms")
    expansion = key_expand(poly)
    emit(ctx, expansion.to_json(), str(expansion))


@cli.command()
@click.option("--tableau", "rows", type=str, required=True, help="Tableau rows as JSON, top row first")
@click.option("--value", type=int, required=True, help="Entry to insert")
@click.option("--n", type=int, required=True, help="Largest allowed entry")
@click.pass_context
@handle_errors
def rsk(ctx, rows, value, n):
    """Row-insert VALUE and compare with rectification of the tableau diagram."""
    from .algebra import SSYT, diagram_of_tableau, insertion_cell, rsk_insert
    from .core.diagram import Cell
    from .insertion import rectify

    tableau = SSYT.from_rows(json.loads(rows), n)
    if not 1 <= value <= n:
        raise InvalidComposition(f"value must lie in 1..{n}, got {value}")
    result = rsk_insert(tableau, value)
    width = tableau.shape[0] if tableau.shape else 0
    rectified = rectify(diagram_of_tableau(tableau, n).add(Cell(width + 1, n + 1 - value))).result
    agrees = rectified == diagram_of_tableau(result, n)

    data = {
        "tableau": result.to_json(),
        "new_cell": list(insertion_cell(tableau, result)),
        "rectification_agrees": agrees,
    }
    emit(ctx, data, f"{result}\nrectification agrees: {agrees}")
    if not agrees:
        sys.exit(EXIT_MISMATCH)


@cli.command()
@click.option("--suite", type=str, default=None, help="Suite to run")
@click.option("--preset", type=str, default=None, help="Run every entry of data/suites/PRESET.yaml")
@click.option("--n-max", type=int, default=None)
@click.option("--size-max", type=int, default=None)
@click.option("--k-max", type=int, default=None)
@click.option("--m-max", type=int, default=None)
@click.option("--part-max", type=int, default=None)
@click.option("--sample", type=int, default=None, help="Check only this many instances, drawn with --seed")
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.option("--record", is_flag=True, help="Store the report in the run history")
@click.option("--list", "list_suites", is_flag=True, help="List suites and presets")
@click.pass_context
@handle_errors
def verify(ctx, suite, preset, n_max, size_max, k_max, m_max, part_max, sample, workers, record, list_suites):
    """Run verification suites and report failures."""
    from .verify import SUITES, list_presets, load_preset, run_suite

    if list_suites:
        for name, entry in SUITES.items():
            click.echo(f"{name}: {entry.description}")
        click.echo(f"presets: {', '.join(list_presets()) or '(none)'}")
        return

    overrides = {
        key: value
        for key, value in {
            "n_max": n_max, "size_max": size_max, "k_max": k_max,
            "m_max": m_max, "part_max": part_max, "sample": sample,
        }.items()
        if value is not None
    }
    if preset:
        runs = [{"suite": r["suite"], "params": {**r["params"], **overrides}} for r in load_preset(preset)]
    elif suite:
        if suite not in SUITES:
            raise InvalidComposition(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
        runs = [{"suite": suite, "params": overrides}]
    else:
        raise InvalidComposition("give --suite or --preset")

    reports = [run_suite(r["suite"], r["params"], seed=ctx.obj["seed"], workers=workers) for r in runs]

    if record:
        from .database import init_db, record_report

        init_db()
        for report in reports:
            record_report(report)

    data = [r.to_json() for r in reports]
    emit(ctx, data if preset else data[0], "\n".join(r.format() for r in reports))
    if not all(r.passed for r in reports):
        sys.exit(EXIT_SUITE_FAILURE)


@cli.command()
@click.option("--suite", type=str, default=None, help="Only runs of this suite")
@click.option("--limit", "-n", default=10, help="Number of results to show")
@click.pass_context
def history(ctx, suite, limit):
    """Show recent verification runs."""
    from .database import init_db, recent_runs

    init_db()
    runs = recent_runs(suite, limit)
    lines = [
        f"#{r['id']} {r['started_at']} {r['suite']}: {r['instances']} instances, "
        f"{r['failure_count']} failures ({'pass' if r['passed'] else 'FAIL'})"
        for r in runs
    ]
    emit(ctx, runs, "\n".join(lines) or "No runs recorded.")


if __name__ == "__main__":
    cli()
