"""Command-line interface.

Usage:
    shortlex encode CA            # -> 010
    shortlex decode 010           # -> CA
    shortlex sample --n 20 --seed 7
    shortlex table --n-max 50 --format csv --out gaps.csv
    shortlex verify all --depth deep
    shortlex series D --order 40
    shortlex mc --n 100 --samples 100000 --seed 1
    shortlex codebook --max-cost 10 --out book.tsv

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 I/O failure.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import analysis, codec
from . import combinatorics as cb
from .powerseries import SERIES_NAMES, series as expand_series
from .source import InadmissibleError, sample_block
from .verify import DEPTHS, SUITES, run

EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_IO = 3

U64 = click.IntRange(0, 2**64 - 1)


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        _fail(f"cannot write {out}: {exc.strerror or exc}", EXIT_IO)


def _inputs(value: str | None) -> list[str]:
    if value is not None:
        return [value]
    return [line.strip() for line in sys.stdin if line.strip()]


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli() -> None:
    """Shortlex injective code for the four-symbol constrained Markov source."""


@cli.command()
@click.argument("source", required=False)
def encode(source: str | None) -> None:
    """Print the codeword of SOURCE (or of each stdin line)."""
    items = _inputs(source)
    if not items:
        _fail("no input string", EXIT_INPUT)
    for u in items:
        try:
            click.echo(codec.encode(u))
        except InadmissibleError as exc:
            _fail(f"{u!r}: {exc}", EXIT_INPUT)


@cli.command()
@click.argument("word", required=False)
def decode(word: str | None) -> None:
    """Print the source string of binary WORD (or of each stdin line)."""
    items = _inputs(word)
    if not items:
        _fail("no input word", EXIT_INPUT)
    for b in items:
        try:
            click.echo(codec.decode(b))
        except ValueError as exc:
            _fail(f"{b!r}: {exc}", EXIT_INPUT)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Block length.")
@click.option("--seed", type=U64, default=0, show_default=True)
def sample(n: int, seed: int) -> None:
    """Draw one admissible block of length N."""
    click.echo(sample_block(n, seed))


def _pretty(reports: list[analysis.SavingReport]) -> str:
    header = ["n", "P(I_n=1)", "~", "E[L_n]", "~", "3n/2", "gap", "~", "gap*sqrt(n)"]
    rows = []
    for r in reports:
        rows.append([
            str(r.n),
            analysis.fmt_fraction(r.saving_prob), analysis.to_decimal(r.saving_prob),
            analysis.fmt_fraction(r.expected_length), analysis.to_decimal(r.expected_length),
            analysis.fmt_fraction(r.benchmark),
            analysis.fmt_fraction(r.gap), analysis.to_decimal(r.gap),
            r.gap_times_sqrt_n(),
        ])
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows]
    return "\n".join(lines) + "\n"


def render_table(reports: list[analysis.SavingReport], fmt: str) -> str:
    if fmt == "pretty":
        return _pretty(reports)
    records = [r.as_record() for r in reports]
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=analysis.TABLE_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(records)
    return buf.getvalue()


@cli.command()
@click.option("--n-max", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "pretty"]), default="pretty", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def table(n_max: int, fmt: str, out: str | None) -> None:
    """Exact saving probability, expected length and benchmark gap for n = 1..N_MAX."""
    _emit(render_table(analysis.gap_table(n_max), fmt), out)


@cli.command()
@click.argument("suite", type=click.Choice([*SUITES, "all"]), default="all")
@click.option("--depth", type=click.Choice(sorted(DEPTHS)), default="default", show_default=True)
def verify(suite: str, depth: str) -> None:
    """Run the invariant checks and report pass/fail per check."""
    failed = 0
    total = 0
    for check in run(suite, depth):
        total += 1
        failed += not check.passed
        click.echo(check.line())
    click.echo(f"{total - failed}/{total} checks passed")
    if failed:
        sys.exit(EXIT_VERIFY)


@cli.command()
@click.argument("which", type=click.Choice([*SERIES_NAMES, "S"]))
@click.option("--order", type=click.IntRange(min=1), default=40, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def series(which: str, order: int, out: str | None) -> None:
    """Coefficients of a generating function as index,value CSV.

    S lists the cost-class sizes S_k for k = 2..ORDER+1.
    """
    if which == "S":
        text = cb.to_csv((cb.class_size(k) for k in range(2, order + 2)), start=2)
    else:
        text = cb.to_csv(expand_series(which, order).integer_coefficients())
    _emit(text, out)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Block length.")
@click.option("--samples", type=click.IntRange(min=1), default=100_000, show_default=True)
@click.option("--seed", type=U64, default=0, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
def mc(n: int, samples: int, seed: int, workers: int) -> None:
    """Monte Carlo estimate of the expected codeword length."""
    est = analysis.monte_carlo_length(n, samples, seed, workers)
    exact = analysis.expected_length(n)
    z = (est.mean - float(exact)) / est.std_error if est.std_error else 0.0
    click.echo(f"n={n} samples={samples} seed={seed}")
    click.echo(f"mean={est.mean:.12g} std_error={est.std_error:.12g}")
    click.echo(f"exact={analysis.fmt_fraction(exact)} ({analysis.to_decimal(exact)}) z={z:.3f}")


@cli.command()
@click.option("--max-cost", type=click.IntRange(min=2), default=8, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def codebook(max_cost: int, out: str | None) -> None:
    """All admissible strings of cost <= MAX_COST with their codewords (TSV)."""
    _emit(codec.brute_force_codebook(max_cost).dumps(), out)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
