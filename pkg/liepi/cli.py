"""CLI interface for liepi."""

import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Optional

import click

from .codim import DEFAULT_BUDGET
from .core import LiePI
from .exceptions import LiePIError, wrap_unexpected
from .exponent import NILPOTENT
from .formats import (
    dump_json,
    emit_algebra,
    parse_action_file,
    parse_algebra_file,
    parse_certificate_file,
)
from .linalg import Subspace
from .linalg.rational import format_vector

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """One parsed invocation: subcommand, input paths and flags."""

    subcommand: str
    algebra: str
    action: Optional[str] = None
    certificate: Optional[str] = None
    n: Optional[int] = None
    n_max: Optional[int] = None
    exact: bool = True
    json_output: bool = False
    budget: int = DEFAULT_BUDGET
    workers: int = 4
    emit: bool = False
    metrics: bool = False
    verbose: bool = False


def _basis_lines(u: Subspace, labels: List[str]) -> List[str]:
    lines = []
    for v in u.basis:
        terms = [f"{c}·{label}" for c, label in zip(format_vector(v), labels) if c != "0"]
        lines.append("   • " + " + ".join(terms))
    return lines


def run_command(cfg: RunConfig, server: Optional[LiePI] = None) -> str:
    """
    Load the inputs named by cfg, run the subcommand and render its report.

    Library errors propagate; the click layer turns them into exit codes.
    """
    server = server or LiePI(exact=cfg.exact, budget=cfg.budget, max_workers=cfg.workers)

    if cfg.subcommand == "check":
        algebra = parse_algebra_file(cfg.algebra, validate=False)
        report = server.validate(algebra)
        report.raise_if_invalid()
        if cfg.emit:
            return dump_json(emit_algebra(algebra))
        if cfg.json_output:
            return dump_json(report.to_dict())
        return f"✅ {algebra.name}: dim {algebra.dim}, antisymmetry and Jacobi identity hold"

    algebra = parse_algebra_file(cfg.algebra)
    action = parse_action_file(cfg.action, algebra) if cfg.action else None

    if cfg.subcommand == "radical":
        radical = server.radical(algebra)
        if cfg.json_output:
            return dump_json(radical.to_dict())
        status = f"nilpotent, p = {radical.p}" if radical.is_nilpotent else "not nilpotent"
        return "\n".join(
            [f"📐 Radical of {algebra.name}: dim {radical.R.dim} ({status})"]
            + _basis_lines(radical.R, algebra.labels)
        )

    if cfg.subcommand == "levi":
        levi = server.levi(algebra)
        if cfg.json_output:
            return dump_json(levi.to_dict())
        return "\n".join(
            [f"📐 Levi subalgebra of {algebra.name}: dim {levi.B.dim}"]
            + _basis_lines(levi.B, algebra.labels)
        )

    if cfg.subcommand == "simples":
        simples = server.simples(algebra, action)
        if cfg.json_output:
            return dump_json(simples.to_dict())
        components = simples.decomposition.components
        lines = [f"🧩 {len(components)} simple components of {algebra.name}/R"]
        for i, (c, centroid) in enumerate(zip(components, simples.decomposition.centroid_dims)):
            lines.append(f"   • B{i}: dim {c.dim}, centroid dim {centroid}")
        lines.append(f"🔗 H-simple groups: {simples.groups}")
        return "\n".join(lines)

    if cfg.subcommand == "piexp":
        result = server.piexp(algebra, action)
        if cfg.json_output:
            return dump_json(result.to_dict())
        if result.verdict == NILPOTENT:
            return f"nilpotent (d = 0, p = {result.p})"
        return "\n".join([
            f"d = {result.d}",
            f"witness components: {tuple(result.witness_components)}",
            f"witness q: {result.witness_q}",
            f"component dims: {result.component_dims}",
            f"split heuristic: {'passed' if result.split_action else 'failed'}",
        ])

    if cfg.subcommand == "certify":
        certificate = parse_certificate_file(cfg.certificate, algebra)
        value = server.certify(algebra, certificate, action)
        if cfg.json_output:
            return dump_json({"algebra": algebra.name, "certified_value": value})
        return f"certified lower-bound witness for d′: {value}"

    if cfg.subcommand == "codim":
        codim = server.codim(algebra, cfg.n, action)
        if cfg.json_output:
            return dump_json(codim.to_dict())
        suffix = " (two-prime disagreement, exact fallback)" if codim.fallback else ""
        return f"c_{codim.n} = {codim.value}{suffix}"

    if cfg.subcommand == "cochar":
        cochar = server.cochar(algebra, cfg.n, action)
        if cfg.json_output:
            return dump_json(cochar.to_dict())
        width = max(len(str(shape)) for shape in cochar.multiplicities)
        lines = [f"c_{cochar.n} = {cochar.codim}", f"{'λ'.ljust(width)}  m(λ)"]
        for shape, m in cochar.multiplicities.items():
            lines.append(f"{str(shape).ljust(width)}  {m}")
        return "\n".join(lines)

    if cfg.subcommand == "growth":
        growth = server.growth(algebra, cfg.n_max, action)
        if cfg.json_output:
            return dump_json(growth.to_dict())
        header = f"d = {growth.d}" if growth.d is not None else f"d unavailable: {growth.d_unavailable}"
        lines = [header, f"{'n':>3}  {'c_n':>12}  c_n^(1/n)"]
        for row in growth.rows:
            lines.append(f"{row.n:>3}  {row.codim:>12}  {row.root}")
        return "\n".join(lines)

    if cfg.subcommand == "compare":
        if action is None:
            raise click.UsageError("compare needs --action")
        report = server.compare(algebra, action, cfg.n)
        if cfg.json_output:
            return dump_json(report.to_dict())
        relation = "=" if report.exponents_equal else "≠"
        return "\n".join([
            f"d with action = {report.d_action.d} {relation} d without action = {report.d_trivial.d}",
            f"c_{cfg.n} = {report.codim_trivial.value} <= c_{cfg.n}^H = {report.codim_action.value}",
        ])

    raise click.UsageError(f"Unknown subcommand '{cfg.subcommand}'")


def _report_error(e: LiePIError, verbose: bool) -> None:
    click.echo(f"\n❌ {e.error_code}: {e.message}", err=True)
    if e.context:
        click.echo(f"📍 Context: {e.context}", err=True)
    if e.suggestions:
        click.echo("\n💡 Suggestions:", err=True)
        for suggestion in e.suggestions:
            click.echo(f"   • {suggestion}", err=True)
    if verbose:
        click.echo(f"\n🔍 Correlation ID: {e.correlation_id}", err=True)


def _execute(cfg: RunConfig) -> None:
    logging.basicConfig(
        level=logging.DEBUG if cfg.verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    ctx = click.get_current_context()
    logger.debug(f"Running {cfg.subcommand} on {cfg.algebra}")
    server = LiePI(exact=cfg.exact, budget=cfg.budget, max_workers=cfg.workers)

    try:
        click.echo(run_command(cfg, server))
    except click.UsageError:
        raise
    except LiePIError as e:
        _report_error(e, cfg.verbose)
        ctx.exit(e.exit_code)
    except Exception as e:
        error = wrap_unexpected(e, subcommand=cfg.subcommand)
        _report_error(error, cfg.verbose)
        if cfg.verbose:
            import traceback
            click.echo("\n🔍 Stack trace:", err=True)
            click.echo(traceback.format_exc(), err=True)
        ctx.exit(error.exit_code)
    finally:
        if cfg.metrics:
            click.echo(server.get_metrics_report(format='console'), err=True)


def _common_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Algebra argument plus the flags every analysis subcommand shares."""
    options = [
        click.argument('algebra', type=click.Path(exists=True, dir_okay=False)),
        click.option('--action', type=click.Path(exists=True, dir_okay=False), default=None,
                     help='Action file with derivation/automorphism generators'),
        click.option('--json', 'json_output', is_flag=True, help='Machine-readable JSON output'),
        click.option('--exact/--two-prime', default=True, help='Exact ranks or the two-prime modular mode'),
        click.option('--budget', default=DEFAULT_BUDGET, type=int, show_default=True,
                     help='Ceiling on n! * (dim A)^n * (dim L)^(n+1)'),
        click.option('--workers', default=4, type=click.IntRange(min=1), show_default=True,
                     help='Worker threads for evaluation matrices'),
        click.option('--metrics', is_flag=True, help='Print a metrics report to stderr afterwards'),
        click.option('--verbose', '-v', is_flag=True, help='Debug logging and verbose error output'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _config(subcommand: str, **kwargs: Any) -> RunConfig:
    return RunConfig(subcommand=subcommand, **kwargs)


@click.group()
def cli() -> None:
    """liepi - PI-exponents and codimensions of Lie algebras with an action."""
    pass


@cli.command()
@_common_options
@click.option('--emit', is_flag=True, help='Re-emit the algebra in canonical JSON form')
def check(**kwargs: Any) -> None:
    """Validate antisymmetry and the Jacobi identity."""
    _execute(_config("check", **kwargs))


@cli.command()
@_common_options
def radical(**kwargs: Any) -> None:
    """Solvable radical R, its nilpotency and p."""
    _execute(_config("radical", **kwargs))


@cli.command()
@_common_options
def levi(**kwargs: Any) -> None:
    """A Levi subalgebra B with L = B ⊕ R."""
    _execute(_config("levi", **kwargs))


@cli.command()
@_common_options
def simples(**kwargs: Any) -> None:
    """Simple components of L/R and their H-simple groups."""
    _execute(_config("simples", **kwargs))


@cli.command()
@_common_options
def piexp(**kwargs: Any) -> None:
    """The PI-exponent d for algebras whose radical is nilpotent."""
    _execute(_config("piexp", **kwargs))


@cli.command()
@_common_options
@click.argument('certificate', type=click.Path(exists=True, dir_okay=False))
def certify(**kwargs: Any) -> None:
    """
    Check a certificate and print its value.

    The value is a certified lower-bound witness for d′: one admissible
    value of the maximand, not the maximum itself.
    """
    _execute(_config("certify", **kwargs))


@cli.command()
@_common_options
@click.option('--n', 'n', required=True, type=int, help='Degree n')
def codim(**kwargs: Any) -> None:
    """The codimension c_n^H(L)."""
    _execute(_config("codim", **kwargs))


@cli.command()
@_common_options
@click.option('--n', 'n', required=True, type=int, help='Degree n')
def cochar(**kwargs: Any) -> None:
    """Multiplicities of the S_n-cocharacter."""
    _execute(_config("cochar", **kwargs))


@cli.command()
@_common_options
@click.option('--nmax', 'n_max', required=True, type=click.IntRange(min=1), help='Largest degree')
def growth(**kwargs: Any) -> None:
    """Observed c_n and c_n^(1/n) for n = 1..nmax next to d."""
    _execute(_config("growth", **kwargs))


@cli.command()
@_common_options
@click.option('--n', 'n', default=2, type=int, show_default=True, help='Degree n for c_n and c_n^H')
def compare(**kwargs: Any) -> None:
    """d with and without the action, and c_n <= c_n^H."""
    _execute(_config("compare", **kwargs))


if __name__ == '__main__':
    cli()
