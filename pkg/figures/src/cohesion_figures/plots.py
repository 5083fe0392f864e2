"""Boxplot / bar-chart rendering.

Output is a pure function of the input CSVs: fixed style, fixed figure
geometry, and no timestamp metadata, so re-rendering a figure produces
an identical file.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .data import BAR_MEASURES, MEASURES, ReportData, load_report  # noqa: E402

STYLE = {
    "figure.figsize": (6.0, 4.0),
    "figure.dpi": 100,
    "savefig.dpi": 150,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "cohesion-figures",
}

# Strip the writer's default Software tag so the bytes depend only on
# the rendered content.
_NO_PROVENANCE = {"Software": None, "CreationDate": None}

MEASURE_LABELS = {
    "ei": "emotional interaction",
    "sit": "social identity",
    "ced": "emotional distinctiveness",
    "gip": "interaction probability",
    "gid": "interaction density",
    "d": "diameter",
    "size": "community size",
    "deg_min": "minimum degree",
    "q_hit": "query hit rate (%)",
}


@dataclass(frozen=True)
class FigureSpec:
    inputs: tuple[str, ...]
    measure: str
    out: str
    labels: tuple[str, ...] = ()
    group_label: str = "run"
    title: str | None = None

    def __post_init__(self):
        if not self.inputs:
            raise ValueError("at least one input CSV is required")
        if self.measure not in MEASURES:
            raise ValueError(
                f"unknown measure {self.measure!r}; known: {', '.join(MEASURES)}"
            )
        if self.labels and len(self.labels) != len(self.inputs):
            raise ValueError("need exactly one label per input CSV")


def _bar_value(report: ReportData, measure: str) -> float:
    if measure == "q_hit":
        if report.q_hit is None:
            raise ValueError(f"report {report.label!r} has no q_hit trailer")
        return report.q_hit
    value = report.aggregates.get(measure)
    if value is None:
        raise ValueError(f"report {report.label!r} has no aggregate {measure!r}")
    return value


def plot_measure(spec: FigureSpec) -> str:
    """Render one figure for one measure and return the output path."""
    labels = spec.labels or tuple(Path(p).stem for p in spec.inputs)
    reports = [load_report(p, lab) for p, lab in zip(spec.inputs, labels)]
    ylabel = MEASURE_LABELS[spec.measure]

    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        if spec.measure in BAR_MEASURES:
            values = [_bar_value(r, spec.measure) for r in reports]
            ax.bar(range(len(reports)), values, color="tab:blue", width=0.6)
            ax.set_xticks(range(len(reports)), labels)
        else:
            groups = [r.values(spec.measure) for r in reports]
            if all(not g for g in groups):
                raise ValueError(f"no finite {spec.measure!r} values to plot")
            ax.boxplot(groups, tick_labels=list(labels))
        ax.set_xlabel(spec.group_label)
        ax.set_ylabel(ylabel)
        ax.set_title(spec.title or ylabel)
        fig.tight_layout()
        fig.savefig(spec.out, metadata=dict(_NO_PROVENANCE))
        plt.close(fig)
    return spec.out
