"""Command-line interface.

Set arguments accept three forms: ``corpus:ID`` for an embedded entry, a
path to a file holding one hypergraph string, or the literal string itself
(recognized by its ``.`` terminator).  Exit codes: 0 ok, 1 I/O or lookup,
2 parse, 3 validation, 4 precondition, 5 budget exceeded.
"""

from __future__ import annotations

import os
import sys

import click

from .assignment import strip_degree_one, strip_vertices
from .corpus import UnknownEntryError, corpus as corpus_entries, get as corpus_get
from .encoding import (
    ParseError,
    ValidationError,
    parse_coordinates,
    parse_mmph,
    render_diagnostics,
    serialize_coordinates,
    serialize_mmph,
)
from .field import parse_q2
from .generation import distribution, distribution_csv, enumerate_criticals
from .geometry import ComponentPool, fill, find_coordinatization, verify_coordinatization
from .hypergraph import Hypergraph, MmphError, PreconditionError, validate
from .loops import largest_loop, loop_marking, shortest_loop
from .report import analyze, to_json

EXIT_IO = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_PRECONDITION = 4
EXIT_BUDGET = 5


def _fail(code: int, message: str) -> "SystemExit":
    click.echo(message, err=True)
    return SystemExit(code)


def _read_source(arg: str) -> tuple[str, str | None]:
    """Resolve a SET argument to (text, corpus id or None)."""
    if arg.startswith("corpus:"):
        entry = corpus_get(arg[len("corpus:") :])
        if entry.mmph is None:
            raise _fail(EXIT_IO, f"corpus entry {entry.id} has no hypergraph string")
        return entry.mmph, entry.id
    if arg == "-":
        return sys.stdin.read(), None
    if arg.rstrip().endswith("."):
        return arg, None
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read(), None
    raise _fail(EXIT_IO, f"no such file: {arg}")


def _parse_arg(arg: str, strict: bool = True) -> tuple[Hypergraph, str | None]:
    text, entry_id = _read_source(arg)
    try:
        return parse_mmph(text, strict=strict), entry_id
    except ParseError as exc:
        click.echo(render_diagnostics(exc.diagnostics), err=True)
        raise SystemExit(EXIT_PARSE) from None
    except ValidationError as exc:
        for v in exc.violations:
            click.echo(str(v), err=True)
        raise SystemExit(EXIT_VALIDATION) from None
    except UnknownEntryError as exc:
        raise _fail(EXIT_IO, str(exc)) from None


def _load_coords(spec: str, entry_id: str | None):
    if spec == "corpus":
        if entry_id is None:
            raise _fail(EXIT_IO, "--coords corpus requires a corpus: set argument")
        coords = corpus_get(entry_id).coordinatization()
        if coords is None:
            raise _fail(EXIT_IO, f"corpus entry {entry_id} carries no coordinates")
        return coords
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = spec
    try:
        return parse_coordinates(text)
    except ParseError as exc:
        click.echo(render_diagnostics(exc.diagnostics), err=True)
        raise SystemExit(EXIT_PARSE) from None


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("MMPH_JOBS", "1")))
    except ValueError:
        return 1


@click.group()
def main() -> None:
    """Exact analysis of orthogonality hypergraphs."""


@main.command("validate")
@click.argument("source")
def cmd_validate(source: str) -> None:
    """Parse and structurally validate a set; silent and exit 0 when clean."""
    h, _ = _parse_arg(source, strict=False)
    violations = validate(h)
    if violations:
        for v in violations:
            click.echo(str(v), err=True)
        raise SystemExit(EXIT_VALIDATION)
    click.echo(f"ok: {h.name}")


@main.command("analyze")
@click.argument("source")
@click.option("--critical", "with_critical", is_flag=True, help="decide edge-criticality")
@click.option("--loops", "with_loops", is_flag=True, help="shortest/largest loop orders")
@click.option("--operators", "with_operators", is_flag=True, help="aggregate-operator report")
@click.option("--coords", default=None, help="coordinates: 'corpus', a path, or literal text")
@click.option("--loop-budget", default=5_000_000, show_default=True)
@click.option("--compact", is_flag=True, help="single-line JSON")
def cmd_analyze(
    source: str,
    with_critical: bool,
    with_loops: bool,
    with_operators: bool,
    coords: str | None,
    loop_budget: int,
    compact: bool,
) -> None:
    """Emit a JSON analysis report for one set."""
    h, entry_id = _parse_arg(source)
    coordinatization = _load_coords(coords, entry_id) if coords else None
    if with_operators and coordinatization is None:
        raise _fail(EXIT_PRECONDITION, "--operators requires --coords")
    try:
        report = analyze(
            h,
            entry_id=entry_id,
            with_critical=with_critical,
            with_loops=with_loops,
            coords=coordinatization,
            with_operators=with_operators,
            loop_budget=loop_budget,
        )
    except PreconditionError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from None
    click.echo(to_json(report, indent=None if compact else 2))


@main.command("criticals")
@click.argument("master")
@click.option("--samples", required=True, type=int)
@click.option("--seed", required=True, type=int)
@click.option("--strip-vertices", is_flag=True, help="allow degree-one vertex strips")
@click.option("--jobs", default=None, type=int, help="worker processes (default: MMPH_JOBS or 1)")
@click.option("--out", "out_csv", default="-", help="distribution CSV path ('-' = stdout)")
@click.option("--sets", "out_sets", default=None, help="write distinct criticals, one per line")
def cmd_criticals(
    master: str,
    samples: int,
    seed: int,
    strip_vertices: bool,
    jobs: int | None,
    out_csv: str,
    out_sets: str | None,
) -> None:
    """Sample critical subsets of a non-binary master set."""
    h, _ = _parse_arg(master)
    try:
        results = enumerate_criticals(
            h,
            samples=samples,
            seed=seed,
            strip_vertices=strip_vertices,
            jobs=jobs if jobs is not None else _default_jobs(),
        )
    except PreconditionError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from None
    csv_text = distribution_csv(distribution(results))
    if out_csv == "-":
        click.echo(csv_text, nl=False)
    else:
        with open(out_csv, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    if out_sets is not None:
        lines = "".join(serialize_mmph(g) + "\n" for g, _ in results)
        if out_sets == "-":
            click.echo(lines, nl=False)
        else:
            with open(out_sets, "w", encoding="utf-8") as fh:
                fh.write(lines)


@main.group("coords")
def cmd_coords() -> None:
    """Coordinatization search and verification."""


@cmd_coords.command("find")
@click.argument("source")
@click.option("--components", required=True, help="comma list, e.g. 0,1,-1,2,-2,r2")
@click.option("--budget", default=10_000_000, show_default=True, type=int)
@click.option("--out", default="-", help="write the coordinate listing here")
def cmd_coords_find(source: str, components: str, budget: int, out: str) -> None:
    """Search for a coordinatization over a component pool."""
    h, _ = _parse_arg(source)
    try:
        pool = ComponentPool.parse(components)
    except (ValueError, PreconditionError) as exc:
        raise _fail(EXIT_PRECONDITION, f"bad component list: {exc}") from None
    result = find_coordinatization(h, pool, budget=budget)
    if result.status == "budget-exceeded":
        raise _fail(EXIT_BUDGET, f"budget exceeded after {result.nodes} nodes")
    if result.status == "exhausted":
        raise _fail(
            EXIT_PRECONDITION,
            f"exhausted: no coordinatization over this pool ({len(pool)} rays, "
            f"{result.nodes} nodes searched)",
        )
    assert result.coordinatization is not None
    text = serialize_coordinates(result.coordinatization)
    if out == "-":
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


@cmd_coords.command("verify")
@click.argument("source")
@click.option("--coords", "coords_spec", default="corpus", show_default=True)
@click.option("--partial", is_flag=True, help="check only pairs with assigned vectors")
def cmd_coords_verify(source: str, coords_spec: str, partial: bool) -> None:
    """Verify a coordinatization against a set."""
    h, entry_id = _parse_arg(source)
    coords = _load_coords(coords_spec, entry_id)
    issues = verify_coordinatization(h, coords, partial=partial)
    errors = [i for i in issues if i.severity == "error"]
    for issue in issues:
        click.echo(str(issue), err=bool(errors))
    if errors:
        raise SystemExit(EXIT_VALIDATION)
    click.echo("ok")


@main.group("corpus")
def cmd_corpus() -> None:
    """The embedded corpus."""


@cmd_corpus.command("list")
def cmd_corpus_list() -> None:
    for entry_id, entry in corpus_entries().items():
        if entry.mmph is not None:
            h = entry.hypergraph()
            size = h.name
        else:
            size = "rays-only"
        flags = []
        if entry.reconstructed:
            flags.append("reconstructed")
        if entry.coordinates:
            flags.append("coords")
        suffix = f" [{', '.join(flags)}]" if flags else ""
        click.echo(f"{entry_id:24s} {size:9s} {entry.provenance}{suffix}")


@cmd_corpus.command("show")
@click.argument("entry_id")
def cmd_corpus_show(entry_id: str) -> None:
    try:
        entry = corpus_get(entry_id)
    except UnknownEntryError as exc:
        raise _fail(EXIT_IO, str(exc)) from None
    if entry.mmph is not None:
        click.echo(entry.mmph)
    click.echo(f"# provenance: {entry.provenance}", err=True)
    if entry.transcription_notes:
        click.echo(f"# notes: {entry.transcription_notes}", err=True)
    if entry.coordinates:
        click.echo("# coordinates:", err=True)
        click.echo(entry.coordinates, err=True)


@main.command("fill")
@click.argument("source")
def cmd_fill(source: str) -> None:
    """Print the filled companion (every 2-edge gains a fresh vertex)."""
    h, _ = _parse_arg(source)
    try:
        click.echo(serialize_mmph(fill(h)))
    except PreconditionError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from None


@main.command("strip")
@click.argument("source")
@click.option("--vertices", default=None, help="comma list of labels to delete")
@click.option("--force", is_flag=True, help="allow deleting shared vertices")
def cmd_strip(source: str, vertices: str | None, force: bool) -> None:
    """Strip degree-one vertices (or the given ones) and print the result."""
    h, _ = _parse_arg(source)
    try:
        if vertices is None:
            result = strip_degree_one(h)
        else:
            victims = [v for v in vertices.split(",") if v]
            result = strip_vertices(h, victims, force=force)
    except PreconditionError as exc:
        raise _fail(EXIT_PRECONDITION, str(exc)) from None
    except ValidationError as exc:
        for v in exc.violations:
            click.echo(str(v), err=True)
        raise SystemExit(EXIT_VALIDATION) from None
    click.echo(serialize_mmph(result))


@main.command("loops")
@click.argument("source")
@click.option("--budget", default=5_000_000, show_default=True, type=int)
@click.option("--mark", is_flag=True, help="print the annotated string for a largest loop")
def cmd_loops(source: str, budget: int, mark: bool) -> None:
    """Shortest and largest loop orders."""
    h, _ = _parse_arg(source)
    short = shortest_loop(h)
    big = largest_loop(h, budget=budget)
    click.echo(f"shortest: {short}")
    click.echo(f"largest: {big.order}{'' if big.exact else ' (budget exceeded, lower bound)'}")
    if mark and big.loop:
        click.echo(loop_marking(h, list(big.loop)))
    if not big.exact:
        raise SystemExit(EXIT_BUDGET)


if __name__ == "__main__":
    main()
