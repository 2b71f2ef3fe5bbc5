# -*- coding: utf-8 -*-
"""Figure rendering for the report-producing commands."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def learning_curve_figure(curves: dict, out_path: str):
    """curves: {label: [(size, accuracy), ...]} -> PNG file."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label, points in sorted(curves.items()):
        xs = [s for s, _ in points]
        ys = [a * 100 for _, a in points]
        ax.plot(xs, ys, marker="o", label=label)
    ax.set_xlabel("size of the training corpus (tokens)")
    ax.set_ylabel("accuracy (%)")
    ax.set_ylim(0, 100)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)
    return out_path


def ngram_growth_figure(table, out_path: str):
    """table: [(checkpoint, n, distinct count), ...] -> PNG file."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    by_n = {}
    for cp, n, count in table:
        by_n.setdefault(n, []).append((cp, count))
    for n, points in sorted(by_n.items()):
        xs = [cp for cp, _ in points]
        ys = [c for _, c in points]
        ax.plot(xs, ys, marker="o", label=f"n={n}")
    ax.set_xlabel("size of the corpus (tokens)")
    ax.set_ylabel("distinct n-grams")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=120)
    plt.close(fig)
    return out_path
