"""Figure rendering for cohesion evaluation reports.

Consumes the harness's CSV report schema only; per-query measures render
as boxplots (one box per input report), group-level measures as bars.
"""

from .data import BAR_MEASURES, BOX_MEASURES, MEASURES, ReportData, load_report
from .plots import FigureSpec, plot_measure

__all__ = [
    "BAR_MEASURES",
    "BOX_MEASURES",
    "MEASURES",
    "ReportData",
    "load_report",
    "FigureSpec",
    "plot_measure",
]

__version__ = "0.1.0"
