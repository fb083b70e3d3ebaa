"""Render evaluation reports: JSON, CSV, a plain-text table, and figures."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .evaluator import SetReport

_ROWS = (
    ("Total number of tuples", "total"),
    ("Number of extracted tuples", "extracted"),
    ("Number of pertinent tuples extracted", "pertinent"),
    ("Recall", "recall"),
    ("Precision", "precision"),
    ("Precision (pertinent/extracted)", "precision_standard"),
)


def _cell(report: SetReport, field: str) -> str:
    value = getattr(report, field)
    return f"{value:.3f}" if isinstance(value, float) else str(value)


def render_table(sets: Sequence[SetReport]) -> str:
    label_width = max(len(label) for label, _ in _ROWS)
    col_width = max(8, max(len(r.name) for r in sets) + 2)
    lines = [" " * label_width + "".join(r.name.rjust(col_width) for r in sets)]
    for label, field in _ROWS:
        lines.append(
            label.ljust(label_width)
            + "".join(_cell(r, field).rjust(col_width) for r in sets)
        )
    return "\n".join(lines) + "\n"


def _bar_figure(
    path: Path,
    sets: Sequence[SetReport],
    field: str,
    title: str,
    comparisons: dict[str, Sequence[SetReport]] | None,
) -> None:
    names = [r.name for r in sets]
    series = {"fuzzy": [getattr(r, field) for r in sets]}
    for label, reports in (comparisons or {}).items():
        series[label] = [getattr(r, field) for r in reports]
    fig, ax = plt.subplots(figsize=(max(4.0, 1.4 * len(names) + 1.5), 3.2))
    width = 0.8 / len(series)
    for i, (label, values) in enumerate(series.items()):
        xs = [k + i * width for k in range(len(names))]
        ax.bar(xs, values, width=width, label=label)
    ax.set_xticks([k + 0.4 - width / 2 for k in range(len(names))])
    ax.set_xticklabels(names)
    ax.set_ylabel(title)
    ax.set_title(title)
    if len(series) > 1:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(
    sets: Sequence[SetReport],
    out_dir: str | Path,
    figures: bool = True,
    comparisons: dict[str, Sequence[SetReport]] | None = None,
) -> dict[str, Path]:
    """Write report.json, report.csv, table.txt, and optional figures.

    ``comparisons`` maps a label (for example "baseline") to reports over
    the same sets; they appear in the JSON and the figures.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: dict[str, Path] = {}

    doc: dict = {"sets": [r.to_dict() for r in sets]}
    if comparisons:
        doc["comparisons"] = {
            label: [r.to_dict() for r in reports] for label, reports in comparisons.items()
        }
    json_path = out_dir / "report.json"
    json_path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    written["json"] = json_path

    csv_path = out_dir / "report.csv"
    with csv_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["name", "pages", "failures", "total", "extracted", "pertinent",
             "recall", "precision", "precision_standard"]
        )
        for r in sets:
            writer.writerow(
                [r.name, r.pages, r.failures, r.total, r.extracted, r.pertinent,
                 f"{r.recall:.6f}", f"{r.precision:.6f}", f"{r.precision_standard:.6f}"]
            )
    written["csv"] = csv_path

    table_path = out_dir / "table.txt"
    table_path.write_text(render_table(sets), encoding="utf-8")
    written["table"] = table_path

    if figures:
        fig_dir = out_dir / "figures"
        fig_dir.mkdir(exist_ok=True)
        _bar_figure(fig_dir / "recall.png", sets, "recall", "Recall", comparisons)
        _bar_figure(fig_dir / "precision.png", sets, "precision", "Precision", comparisons)
        written["recall_figure"] = fig_dir / "recall.png"
        written["precision_figure"] = fig_dir / "precision.png"
    return written
