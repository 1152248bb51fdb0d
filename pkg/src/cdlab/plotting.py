"""Figures: labeled lattice path panels and verification sweep summaries."""

from __future__ import annotations

import io
import math
from collections import OrderedDict
from contextlib import contextmanager
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .latpaths import AxisLabeling, LatticePath, Step  # noqa: E402

FORMATS = ("svg", "png", "pdf", "tikz")

_RC = {
    "font.family": "serif",
    "font.size": 10,
    "axes.linewidth": 0.6,
    "savefig.bbox": "tight",
    "savefig.pad_inches": 0.05,
    # fixed element ids keep svg output byte-stable
    "svg.hashsalt": "cdlab",
    "svg.fonttype": "path",
}

PATH_COLOR = "#1f4e9c"
GRID_COLOR = "#b0b0b0"
FAIL_COLOR = "#c0392b"
OK_COLOR = "#7f8c8d"


@contextmanager
def figure_style():
    with plt.rc_context(_RC):
        yield


def step_mathtext(path: LatticePath) -> str:
    parts = []
    for s in path.steps:
        if s is Step.RR:
            parts.append(r"\overline{R}")
        elif s is Step.UU:
            parts.append(r"\overline{U}")
        else:
            parts.append(s.token)
    return "$" + "".join(parts) + "$" if parts else "(empty)"


def _axis_spans(word: str) -> list[tuple[str, int, int]]:
    """(letter, start, width) for each letter of an axis word."""
    spans = []
    pos = 0
    for ch in word:
        width = 2 if ch == "d" else 1
        spans.append((ch, pos, width))
        pos += width
    return spans


def draw_panel(ax, labels: AxisLabeling, path: LatticePath | None, caption: str = "") -> None:
    width, height = labels.width, labels.height
    for x in range(width + 1):
        ax.plot([x, x], [0, height], color=GRID_COLOR, lw=0.6, zorder=1)
    for y in range(height + 1):
        ax.plot([0, width], [y, y], color=GRID_COLOR, lw=0.6, zorder=1)

    for ch, start, span in _axis_spans(labels.horizontal):
        ax.text(start + span / 2, -0.45, ch, ha="center", va="center", fontweight="bold")
        if span == 2:
            # bracket marking a two-unit label
            ax.plot([start + 0.1, start + 0.1, start + 1.9, start + 1.9],
                    [-0.12, -0.2, -0.2, -0.12], color="black", lw=0.8)
    for ch, start, span in _axis_spans(labels.vertical):
        ax.text(-0.45, start + span / 2, ch, ha="center", va="center", fontweight="bold")
        if span == 2:
            ax.plot([-0.12, -0.2, -0.2, -0.12],
                    [start + 0.1, start + 0.1, start + 1.9, start + 1.9], color="black", lw=0.8)

    if path is not None and path.steps:
        xs, ys = zip(*path.coordinates)
        ax.plot(xs, ys, color=PATH_COLOR, lw=2.4, solid_capstyle="round", zorder=3)
        ax.plot(xs, ys, "o", color=PATH_COLOR, ms=3.5, zorder=4)
    elif path is not None:
        ax.plot([0], [0], "o", color=PATH_COLOR, ms=3.5, zorder=4)

    ax.set_xlim(-0.8, max(width, 1) + 0.3)
    ax.set_ylim(-0.8, max(height, 1) + 0.3)
    ax.set_aspect("equal")
    ax.axis("off")
    if caption:
        ax.set_title(caption, fontsize=9)


def path_figure(labels: AxisLabeling, paths: Sequence[LatticePath],
                weights: Mapping[LatticePath, str] | None = None, columns: int | None = None,
                title: str | None = None):
    """A figure with one panel per path (a bare grid when there are none)."""
    count = max(1, len(paths))
    ncols = columns or min(count, max(1, math.ceil(math.sqrt(count))))
    nrows = math.ceil(count / ncols)
    cell_w = 0.55 * (max(labels.width, 1) + 1.1)
    cell_h = 0.55 * (max(labels.height, 1) + 1.1) + 0.45
    fig, axes = plt.subplots(nrows, ncols, figsize=(ncols * cell_w, nrows * cell_h), squeeze=False)
    flat = [ax for row in axes for ax in row]
    if not paths:
        draw_panel(flat[0], labels, None)
    for ax, path in zip(flat, paths):
        caption = step_mathtext(path)
        if weights and path in weights:
            caption += "\n" + weights[path]
        draw_panel(ax, labels, path, caption)
    for ax in flat[len(paths) or 1:]:
        fig.delaxes(ax)
    if title:
        fig.suptitle(title)
    return fig


def figure_bytes(fig, fmt: str) -> bytes:
    buf = io.BytesIO()
    metadata = {"Date": None} if fmt == "svg" else {"CreationDate": None} if fmt == "pdf" else None
    fig.savefig(buf, format=fmt, metadata=metadata)
    plt.close(fig)
    return buf.getvalue()


def tikz_document(labels: AxisLabeling, paths: Sequence[LatticePath],
                  weights: Mapping[LatticePath, str] | None = None) -> str:
    """A standalone LaTeX document, one tikzpicture per path."""
    width, height = labels.width, labels.height

    def picture(path: LatticePath | None, caption: str) -> list[str]:
        out = [r"\begin{tikzpicture}[scale=0.6]"]
        out.append(rf"  \draw[gray!60, very thin] (0,0) grid ({width},{height});")
        for ch, start, span in _axis_spans(labels.horizontal):
            if span == 2:
                out.append(rf"  \draw ({start + 0.1},-0.12) -- ({start + 0.1},-0.2) -- "
                           rf"({start + 1.9},-0.2) -- ({start + 1.9},-0.12);")
            out.append(rf"  \node at ({start + span / 2},-0.5) {{$\mathbf{{{ch}}}$}};")
        for ch, start, span in _axis_spans(labels.vertical):
            if span == 2:
                out.append(rf"  \draw (-0.12,{start + 0.1}) -- (-0.2,{start + 0.1}) -- "
                           rf"(-0.2,{start + 1.9}) -- (-0.12,{start + 1.9});")
            out.append(rf"  \node at (-0.5,{start + span / 2}) {{$\mathbf{{{ch}}}$}};")
        if path is not None and path.steps:
            pts = " -- ".join(f"({x},{y})" for x, y in path.coordinates)
            out.append(rf"  \draw[very thick, blue!70!black] {pts};")
        if caption:
            out.append(rf"  \node[below] at ({width / 2},-0.8) {{{caption}}};")
        out.append(r"\end{tikzpicture}")
        return out

    lines = [r"\documentclass[tikz]{standalone}", r"\begin{document}"]
    if not paths:
        lines += picture(None, "")
    for path in paths:
        caption = step_mathtext(path)
        if weights and path in weights:
            caption += r"\quad " + weights[path]
        lines += picture(path, caption)
    lines.append(r"\end{document}")
    return "\n".join(lines) + "\n"


def render_path_panels(labels: AxisLabeling, paths: Sequence[LatticePath], format: str = "svg",
                       weights: Mapping[LatticePath, str] | None = None, columns: int | None = None,
                       title: str | None = None):
    fmt = format.lower()
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {format!r}; expected one of {', '.join(FORMATS)}")
    if fmt == "tikz":
        return tikz_document(labels, paths, weights)
    with figure_style():
        fig = path_figure(labels, paths, weights, columns, title)
        data = figure_bytes(fig, fmt)
    return data.decode("utf-8") if fmt == "svg" else data


def sweep_figure(result, title: str | None = None):
    """Bar chart of cases checked per group, failures stacked in red."""
    groups: "OrderedDict[str, list[int]]" = OrderedDict()
    for case in result.cases:
        ok, bad = groups.setdefault(case.group, [0, 0])
        groups[case.group] = [ok + case.ok, bad + (not case.ok)]
    names = list(groups)
    passed = [groups[g][0] for g in names]
    failed = [groups[g][1] for g in names]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.45 * len(names) + 1.5), 3.2))
    xs = range(len(names))
    ax.bar(xs, passed, color=OK_COLOR, label="agree")
    ax.bar(xs, failed, bottom=passed, color=FAIL_COLOR, label="mismatch")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(names, rotation=45, ha="right", fontsize=8)
    ax.set_ylabel("cases")
    ax.set_title(title or result.summary(), fontsize=9)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    if any(failed):
        ax.legend(frameon=False, fontsize=8)
    return fig


def save_sweep_figure(result, path: str, fmt: str = "png") -> None:
    with figure_style():
        data = figure_bytes(sweep_figure(result), fmt)
    with open(path, "wb") as fh:
        fh.write(data)
