"""Verification report files: delimited summaries plus matplotlib figures.

write_report turns one VerificationReport per pair into a pair-level
report.csv, a path-level paths.csv, and two PNG figures: measured weak steps
against the step-count identity's prediction, and strong against weak step
counts per path.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

from .oracle import VerificationReport

REPORT_FIELDS = (
    "m",
    "n",
    "path_count",
    "bijection_ok",
    "max_weak_steps",
    "max_strong_steps",
    "total_weak_steps",
    "total_strong_steps",
    "step_ratio",
    "elapsed",
)

PATH_FIELDS = ("m", "n", "word", "preimage", "area", "weak_steps", "strong_steps")


def write_report(
    reports: list[VerificationReport],
    out_dir: str | Path,
    figures: bool = True,
) -> list[Path]:
    """Write report.csv, paths.csv, and (optionally) figures; returns the
    written paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    summary = out / "report.csv"
    with summary.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(REPORT_FIELDS)
        for report in reports:
            ratio = report.step_ratio
            writer.writerow(
                [
                    report.pair.m,
                    report.pair.n,
                    report.path_count,
                    report.bijection_ok,
                    report.max_weak_steps,
                    report.max_strong_steps,
                    report.total_weak_steps,
                    report.total_strong_steps,
                    "" if ratio is None else f"{ratio:.4f}",
                    f"{report.elapsed:.4f}",
                ]
            )
    written.append(summary)

    detail = out / "paths.csv"
    with detail.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(PATH_FIELDS)
        for report in reports:
            for record in report.records:
                writer.writerow(
                    [
                        report.pair.m,
                        report.pair.n,
                        record.word,
                        record.preimage,
                        record.area,
                        record.weak_steps,
                        record.strong_steps,
                    ]
                )
    written.append(detail)

    if figures:
        written.extend(_write_figures(reports, out))
    return written


def _write_figures(reports: list[VerificationReport], out: Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    predicted = []
    measured = []
    weak = []
    strong = []
    for report in reports:
        length = report.pair.length
        binom = math.comb(length, 2)
        for record in report.records:
            run = len(record.word) - len(record.word.lstrip("S"))
            canonical_sum = report.pair.n * (length - run)
            predicted.append(length * record.area + binom)
            measured.append(record.weak_steps + canonical_sum)
            weak.append(record.weak_steps)
            strong.append(record.strong_steps)

    written = []

    fig, ax = plt.subplots(figsize=(6, 5))
    ax.scatter(strong, weak, s=12, alpha=0.6, color="#2244cc")
    top = max(weak) if weak else 1
    ax.plot([0, top], [0, top], color="#999999", linewidth=1, label="equal step counts")
    ax.set_xlabel("strong steps per path")
    ax.set_ylabel("weak steps per path (from the canonical start)")
    ax.set_title("strong vs weak step counts")
    ax.legend()
    fig.tight_layout()
    target = out / "weak_vs_strong.png"
    fig.savefig(target, dpi=150)
    plt.close(fig)
    written.append(target)

    fig, ax = plt.subplots(figsize=(6, 5))
    ax.scatter(predicted, measured, s=12, alpha=0.6, color="#cc2222")
    top = max(predicted) if predicted else 1
    ax.plot([0, top], [0, top], color="#999999", linewidth=1, label="identity prediction")
    ax.set_xlabel("(m+n)*area + C(m+n,2)  (= balanced rank sum)")
    ax.set_ylabel("weak steps + canonical rank sum")
    ax.set_title("step-count identity across all verified paths")
    ax.legend()
    fig.tight_layout()
    target = out / "steps_vs_area.png"
    fig.savefig(target, dpi=150)
    plt.close(fig)
    written.append(target)
    return written
