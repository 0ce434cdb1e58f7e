"""Command-line front end.

Exit codes of ``analyze`` encode the verdict so shell pipelines can branch
on it: 0 requires a unique inertia, 1 does not, 2 inconclusive, 3 error.
All output is deterministic given input, flags, and seed; the environment
variable SIGNUM_SEED overrides the default seed.
"""

from __future__ import annotations

import os
import sys

import click
import numpy as np

from . import fixtures as fixture_catalog
from .errors import SignumError
from .graphs import build_digraph, build_graphs, digraph_to_dot, graph_to_dot
from .patterns import SignPattern, parse_pattern
from .spectra import (
    DEFAULT_SEED,
    SampleConfig,
    census,
    find_witness_pair,
    ladder_spec,
    matching_parts,
    sample,
    spectral_profile,
    stabilize_epsilon,
)
from .cycles import directed_cycle_from_vertices
from .verdict import Overall, analyze, explain, verdict_to_json

EXIT_REQUIRES = 0
EXIT_DOES_NOT = 1
EXIT_INCONCLUSIVE = 2
EXIT_ERROR = 3


def _default_seed() -> int:
    env = os.environ.get("SIGNUM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise click.ClickException(f"SIGNUM_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _load_pattern(path: str | None, fixture: str | None) -> SignPattern:
    if (path is None) == (fixture is None):
        raise click.ClickException("give exactly one of a pattern file or --fixture")
    if fixture is not None:
        try:
            return fixture_catalog.fixture(fixture).pattern
        except KeyError as exc:
            raise click.ClickException(str(exc.args[0]))
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse_pattern(handle.read())
    except OSError as exc:
        raise click.ClickException(f"cannot read {path}: {exc.strerror}")


@click.group()
def main() -> None:
    """Analyze sign patterns for the unique-inertia property."""


@main.command("analyze")
@click.argument("path", required=False)
@click.option("--fixture", help="name of a built-in pattern")
@click.option("--json", "as_json", is_flag=True, help="emit the JSON verdict")
@click.option("--trials", default=1000, show_default=True, help="census sample count")
@click.option("--seed", type=int, default=None, help="sampling seed")
@click.option(
    "--strict-distance",
    is_flag=True,
    help="use only the connecting-path edge count for the cycle-distance parity",
)
def cmd_analyze(path, fixture, as_json, trials, seed, strict_distance) -> None:
    """Run the rule battery on a pattern and print the verdict."""
    try:
        pattern = _load_pattern(path, fixture)
        cfg = SampleConfig(trials=trials, seed=seed if seed is not None else _default_seed())
        verdict = analyze(pattern, cfg=cfg, strict_distance=strict_distance)
    except (SignumError, click.ClickException, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_ERROR)
    if as_json:
        click.echo(verdict_to_json(verdict))
    else:
        click.echo(explain(verdict))
    sys.exit(
        {
            Overall.REQUIRES_UNIQUE: EXIT_REQUIRES,
            Overall.DOES_NOT_REQUIRE: EXIT_DOES_NOT,
            Overall.INCONCLUSIVE: EXIT_INCONCLUSIVE,
        }[verdict.overall]
    )


@main.command("fixtures")
def cmd_fixtures() -> None:
    """List the built-in benchmark patterns."""
    for name in fixture_catalog.fixture_names():
        fix = fixture_catalog.fixture(name)
        click.echo(f"{name} (order {fix.pattern.n}): {fix.description}")


@main.command("verify-paper")
@click.option("--filter", "name_filter", default=None, help="substring filter on fixture names")
def cmd_verify(name_filter) -> None:
    """Recompute every catalog expectation and print one line per check."""
    names = fixture_catalog.fixture_names()
    if name_filter is not None:
        names = [n for n in names if name_filter in n]
    if not names:
        click.echo("warning: no fixtures match the filter; nothing to verify")
        sys.exit(0)
    outcomes = fixture_catalog.verify(names)
    failed = 0
    for o in outcomes:
        mark = "pass" if o.passed else "FAIL"
        line = f"[{mark}] {o.fixture}.{o.check_id} ({o.tag}): {o.detail}"
        if not o.passed and o.source:
            line += f"  [expected from: {o.source}]"
        click.echo(line)
        failed += 0 if o.passed else 1
    click.echo(f"{len(outcomes) - failed}/{len(outcomes)} checks passed")
    sys.exit(0 if failed == 0 else 1)


@main.command("graph")
@click.argument("path", required=False)
@click.option("--fixture", help="name of a built-in pattern")
@click.option("--directed/--undirected", default=True, help="which graph to export")
@click.option("--dot", "as_dot", is_flag=True, default=True, help="emit DOT text")
def cmd_graph(path, fixture, directed, as_dot) -> None:
    """Export the signed digraph or undirected graph as DOT."""
    try:
        pattern = _load_pattern(path, fixture)
        if directed:
            text = digraph_to_dot(build_digraph(pattern))
        else:
            _, graph = build_graphs(pattern)
            text = graph_to_dot(graph)
    except (SignumError, click.ClickException) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_ERROR)
    click.echo(text, nl=False)


@main.command("census")
@click.argument("path", required=False)
@click.option("--fixture", help="name of a built-in pattern")
@click.option("--trials", default=1000, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--lo", default=1e-2, show_default=True, help="magnitude law lower bound")
@click.option("--hi", default=1e2, show_default=True, help="magnitude law upper bound")
def cmd_census(path, fixture, trials, seed, lo, hi) -> None:
    """Sample the qualitative class and tabulate observed inertias."""
    try:
        pattern = _load_pattern(path, fixture)
        cfg = SampleConfig(
            lo=lo, hi=hi, trials=trials, seed=seed if seed is not None else _default_seed()
        )
        cen = census(pattern, cfg)
    except (SignumError, click.ClickException, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_ERROR)
    click.echo(f"trials: {cen.trials}  failures: {cen.failures}")
    for key in cen.inertia_keys():
        solid = "solid" if key in cen.solid_representatives else "tolerance-limited"
        click.echo(f"inertia {key}: {cen.inertia_counts[key]}  [{solid}]")
    for key, count in sorted(cen.frequency_counts.items()):
        click.echo(f"frequency {key}: {count}")
    click.echo(f"consistent frequency observed: {cen.consistent_observed}")


def _parse_vertices(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) - 1 for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise click.ClickException(f"expected comma-separated vertex numbers, got {text!r}")


def _parse_matching(text: str) -> list[tuple[int, int]]:
    edges = []
    for part in text.replace(" ", "").split(","):
        try:
            u, v = part.split("-")
            edges.append((int(u) - 1, int(v) - 1))
        except ValueError:
            raise click.ClickException(f"expected edges like 1-2,3-4, got {text!r}")
    return edges


@main.command("witness")
@click.argument("path", required=False)
@click.option("--fixture", help="name of a built-in pattern")
@click.option("--cycle", help="directed cycle to emphasize, e.g. 1,2,3")
@click.option("--matching", help="undirected matching to emphasize, e.g. 1-2,3-4")
def cmd_witness(path, fixture, cycle, matching) -> None:
    """Emphasize cycles, stabilize the perturbation, and report the inertia."""
    try:
        pattern = _load_pattern(path, fixture)
        if (cycle is None) == (matching is None):
            raise click.ClickException("give exactly one of --cycle or --matching")
        if cycle is not None:
            digraph = build_digraph(pattern)
            parts = (directed_cycle_from_vertices(digraph, _parse_vertices(cycle)),)
        else:
            parts = matching_parts(pattern, _parse_matching(matching))
        spec = ladder_spec(pattern, parts)
        mat, eps, prof = stabilize_epsilon(pattern, spec)
    except (SignumError, click.ClickException, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_ERROR)
    click.echo(f"parts: {[tuple(v + 1 for v in p.vertices) for p in parts]}")
    click.echo(f"magnitudes: {[float(m) for m in spec.magnitudes]}")
    click.echo(f"stabilized epsilon: {eps}")
    click.echo(f"inertia: {prof.inertia}")
    click.echo(f"refined: {prof.refined}")
    click.echo("matrix:")
    for row in np.asarray(mat):
        click.echo("  " + " ".join(f"{v:.6g}" for v in row))


@main.command("fuzz")
@click.option("--order", default=6, show_default=True, help="pattern order")
@click.option("--trials", default=50, show_default=True, help="number of random patterns")
@click.option("--seed", type=int, default=None)
@click.option(
    "--target",
    type=click.Choice(["odd-run-interior", "repeated-imaginary"]),
    default="odd-run-interior",
    show_default=True,
)
def cmd_fuzz(order, trials, seed, target) -> None:
    """Hunt for interesting tridiagonal patterns.

    odd-run-interior: patterns whose only odd sign run avoids both ends of
    the path; reports whether a distinct-inertia pair was found for each.
    repeated-imaginary: reports the sampled minimum gap between imaginary
    eigenvalue levels, flagging patterns that may allow collisions.
    """
    rng = np.random.default_rng(seed if seed is not None else _default_seed())
    examined = hits = 0
    for t in range(trials):
        signs = rng.choice((-1, 1), size=order - 1)
        rows = [[0] * order for _ in range(order)]
        for i, s in enumerate(signs):
            rows[i][i + 1] = 1
            rows[i + 1][i] = int(s)
        pattern = SignPattern.from_rows(rows)
        edge_signs = [int(rows[i][i + 1] * rows[i + 1][i]) for i in range(order - 1)]
        from .graphs import maximal_signed_runs

        runs = maximal_signed_runs(edge_signs, cyclic=False)
        odd = [r for r in runs if r.length % 2 == 1]
        if target == "odd-run-interior":
            if len(odd) != 1:
                continue
            run = odd[0]
            if 0 in run.indices or (order - 2) in run.indices:
                continue
            examined += 1
            pair = find_witness_pair(pattern, budget=400)
            found = pair is not None
            hits += found
            verdictish = "pair found" if found else "no pair within budget"
            click.echo(f"pattern #{t} runs={[r.length for r in runs]}: {verdictish}")
        else:
            examined += 1
            cfg = SampleConfig(trials=40, seed=int(rng.integers(2**31)))
            min_gap = float("inf")
            for k in range(cfg.trials):
                prof = spectral_profile(sample(pattern, cfg, index=k))
                levels = sorted(
                    {round(v.imag, 9) for v in prof.eigenvalues if abs(v.real) <= prof.tol and v.imag > 0}
                )
                for a, b in zip(levels, levels[1:]):
                    min_gap = min(min_gap, b - a)
            if min_gap < 1e-2:
                hits += 1
                click.echo(f"pattern #{t} signs={list(map(int, signs))}: near-collision gap {min_gap:.2e}")
    click.echo(f"examined {examined} patterns, {hits} notable")


if __name__ == "__main__":
    main()
