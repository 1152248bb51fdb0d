"""Delimited sweep reports with a companion figure."""

from __future__ import annotations

import csv
import os

from .verify import SweepResult


def write_report(result: SweepResult, out_dir: str, figure_format: str = "png") -> list[str]:
    """Write ``<suite>.tsv`` and ``<suite>.<figure_format>`` into ``out_dir``.

    Returns the paths written.
    """
    from .plotting import save_sweep_figure

    os.makedirs(out_dir, exist_ok=True)
    stem = os.path.join(out_dir, result.suite)
    table = stem + ".tsv"
    with open(table, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
        writer.writerow(["case", "group", "status", "detail"])
        for case in sorted(result.cases, key=lambda c: (c.group, c.name)):
            writer.writerow([case.name, case.group, "ok" if case.ok else "MISMATCH", case.detail])
    figure = f"{stem}.{figure_format}"
    save_sweep_figure(result, figure, figure_format)
    return [table, figure]
