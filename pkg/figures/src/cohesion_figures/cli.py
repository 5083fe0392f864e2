"""figures: render boxplots/bars from cohesion report CSVs.

Exit codes: 0 success, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import sys

import click

from .data import MEASURES
from .plots import FigureSpec, plot_measure


@click.command("figures")
@click.argument("reports", nargs=-1, required=True, type=click.Path(exists=True))
@click.option("--measure", required=True, type=click.Choice(MEASURES))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--label", "labels", multiple=True,
              help="One label per input CSV (default: file stem).")
@click.option("--group-label", default="run", show_default=True,
              help="X-axis label for the input groups.")
@click.option("--title", default=None)
def cli(reports, measure, out_path, labels, group_label, title):
    """Render one figure for MEASURE from one or more report CSVs."""
    spec = FigureSpec(
        inputs=tuple(reports),
        measure=measure,
        out=out_path,
        labels=tuple(labels),
        group_label=group_label,
        title=title,
    )
    plot_measure(spec)
    click.echo(f"wrote {out_path}")


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except (OSError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
