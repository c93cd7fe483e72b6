"""File reports: delimited summaries plus rendered board/cycle figures.

The board figure mirrors the client layout: the q^2 affine points (1,y,z)
on a grid and the q+1 points with first coordinate zero on an arc above it
(the line at infinity).  Layout is a pure function of q.
"""

from __future__ import annotations

import csv
import math
import time
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from . import permgrp
from .analysis import AnalysisReport, analyze, cycle_table, plane_for
from .plane import Plane


def board_layout(q: int) -> list[tuple[float, float]]:
    """Screen coordinates per point id, following the canonical enumeration:
    (1,y,z) at grid (z, y), then the infinity points on an arc."""
    coords: list[tuple[float, float]] = []
    for y in range(q):
        for z in range(q):
            coords.append((float(z), float(y)))
    cx = (q - 1) / 2.0
    radius = q / 2.0 + 1.0
    for i in range(q + 1):
        angle = math.pi * (1.0 - i / q)
        coords.append((cx + radius * math.cos(angle),
                       q + 0.2 + 0.45 * radius * math.sin(angle)))
    return coords


def save_board_figure(pl: Plane, path: Path, alpha: int = 0,
                      highlight_line: int | None = None) -> None:
    q = pl.q
    layout = board_layout(q)
    if highlight_line is None:
        highlight_line = pl.lines_through[alpha][0]
    line_pts = set(pl.lines[highlight_line].point_ids)

    fig, ax = plt.subplots(figsize=(6, 6.8))
    ax.plot([layout[p][0] for p in sorted(line_pts)],
            [layout[p][1] for p in sorted(line_pts)],
            color="#8ecae6", lw=1.2, zorder=1, alpha=0.9)
    for p, (x, y) in enumerate(layout):
        on_line = p in line_pts
        if p == alpha:
            face, edge = "#ffffff", "#d62828"
        elif on_line:
            face, edge = "#8ecae6", "#1d3557"
        else:
            face, edge = "#f1faee", "#457b9d"
        ax.add_patch(plt.Circle((x, y), 0.32, facecolor=face,
                                edgecolor=edge, lw=1.4, zorder=2))
        label = "" if p == alpha else str(p)
        ax.text(x, y, label, ha="center", va="center",
                fontsize=7 if q > 5 else 9, zorder=3)
    ax.set_xlim(-1.2, q + 0.2)
    ax.set_ylim(-1.0, q + 0.5 + 0.5 * (q / 2 + 1))
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(f"PG(2,{q}): {q*q + q + 1} points, hole at point {alpha}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_cycle_figure(rows, path: Path) -> None:
    """Stacked bars of the collinear cycle structure per q."""
    fig, ax = plt.subplots(figsize=(7, 0.6 * len(rows) + 1.6))
    palette = plt.get_cmap("tab20")
    for i, (q, ct) in enumerate(rows):
        offset = 0.0
        segments = sorted(ct.items())
        for length, mult in segments:
            for _ in range(mult):
                ax.barh(i, length, left=offset, height=0.6,
                        color=palette(length % 20), edgecolor="white")
                offset += length
        ax.text(offset + 0.3, i, permgrp.format_cycle_type(ct),
                va="center", fontsize=8)
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels([f"q={q}" for q, _ in rows])
    ax.set_xlabel("points of the punctured line, grouped by cycle")
    ax.set_title("Collinear generator cycle types")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(qs, out_dir, alpha: int = 0) -> dict:
    """Analyze each q, render figures, and write delimited summaries.

    Returns {"files": [...], "reports": [AnalysisReport, ...]}.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files: list[Path] = []
    reports: list[AnalysisReport] = []

    for q in qs:
        t0 = time.perf_counter()
        rep = analyze(q, alpha=alpha)
        rep.timings["total"] = time.perf_counter() - t0
        reports.append(rep)
        fig_path = out / f"board_q{q}.png"
        save_board_figure(plane_for(q), fig_path, alpha=alpha)
        files.append(fig_path)

    summary = out / "analysis.csv"
    with summary.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "q", "degree", "raw_generators", "generators", "order", "tag",
            "parity_ok", "primitive", "checks_passed", "seconds",
        ])
        for rep in reports:
            writer.writerow([
                rep.q, rep.degree, rep.raw_generators, rep.generators,
                str(rep.order), rep.tag, rep.parity_ok, rep.primitive,
                all(c.passed for c in rep.checks),
                round(rep.timings.get("total", 0.0), 2),
            ])
    files.append(summary)

    table_qs = [q for q in qs if q > 3]
    if table_qs:
        rows = cycle_table(table_qs, alpha=alpha)
        table_path = out / "cycle_table.csv"
        with table_path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["q", "cycle_type"])
            for q, ct in rows:
                writer.writerow([q, permgrp.format_cycle_type(ct)])
        files.append(table_path)
        fig_path = out / "cycle_types.png"
        save_cycle_figure(rows, fig_path)
        files.append(fig_path)

    return {"files": [str(f) for f in files], "reports": reports}
