"""Matplotlib rendering for the report path (written to files, never shown)."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_verify_summary(reports, path):
    """Horizontal bar chart of per-claim wall time, colored by verdict."""
    names = [r.claim_id for r in reports]
    times = [r.elapsed for r in reports]
    colors = ["#2a9d4e" if r.verdict else "#c23b22" for r in reports]
    fig, ax = plt.subplots(figsize=(8, max(2.0, 0.35 * len(reports) + 1)))
    ax.barh(range(len(names)), times, color=colors)
    ax.set_yticks(range(len(names)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    npass = sum(r.verdict for r in reports)
    ax.set_title(f"claim verification: {npass}/{len(reports)} passed")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_f_vectors(fvecs, labels, path):
    """Line plot of one or more f-vectors (f_{-1}, f_0, ...)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for fv, label in zip(fvecs, labels):
        ax.plot(range(-1, len(fv) - 1), fv, marker="o", label=label)
    ax.set_xlabel("face dimension")
    ax.set_ylabel("face count")
    if len(fvecs) > 1 or any(labels):
        ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
