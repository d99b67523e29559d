"""Figures for bench runs."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .harness import summarize  # noqa: E402


def plot_costs(records, path, title=None):
    """Save a two-panel figure: cost distribution and success rate per recipe.

    Costs are shown as a fraction of each database's size so recipes of
    different lengths share an axis.
    """
    records = list(records)
    summary = summarize(records)
    names = [s.recipe for s in summary]
    fractions = [
        [r.cost / r.db_size if r.db_size else 0.0 for r in records if r.recipe == name]
        for name in names
    ]

    fig, (ax_cost, ax_rate) = plt.subplots(1, 2, figsize=(10, 4.2), constrained_layout=True)
    if names:
        ax_cost.boxplot(fractions, showmeans=True)
        ax_cost.set_xticks(range(1, len(names) + 1))
        ax_cost.set_xticklabels(names)
        ax_rate.bar(range(len(names)), [s.success_rate for s in summary], color="0.45")
        ax_rate.set_xticks(range(len(names)))
        ax_rate.set_xticklabels(names)
    ax_cost.set_ylabel("cost / database size")
    ax_cost.set_ylim(bottom=0)
    ax_rate.set_ylabel("success rate")
    ax_rate.set_ylim(0, 1.05)
    for ax in (ax_cost, ax_rate):
        ax.tick_params(axis="x", labelrotation=20)
    if title:
        fig.suptitle(title)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
