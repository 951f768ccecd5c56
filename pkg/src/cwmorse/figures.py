"""Matplotlib figures for enumeration reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_family_partition_chart(report, path):
    """Bar chart of class counts per family signature."""
    families = sorted(report.family_partition.items())
    labels = [sig if sig else "(none)" for sig, _ in families]
    counts = [n for _, n in families]
    width = max(4.0, 0.35 * len(labels) + 1.5)
    fig, ax = plt.subplots(figsize=(width, 3.5))
    ax.bar(range(len(labels)), counts, color="#46627f")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_ylabel("classes")
    ax.set_title(
        f"{report.complex_name}: {report.class_count} classes "
        f"({report.raw_count} raw fields, "
        f"{report.critical_count} critical cells)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
