"""Figure rendering for CLI reports: torus-type tables and local rank
certificates, written to image files next to the delimited output."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

_STATUS_COLOR = {"split": "#4daf4a", "intermediate": "#ff7f00",
                 "anisotropic": "#377eb8"}


def plot_torus_sets(named_sets: Sequence[tuple[str, Sequence[tuple[int, int, int]]]],
                    path: str, title: str = "") -> None:
    """Occurrence matrix: one row per real form, one column per torus type
    (alpha, beta, gamma) appearing anywhere in the input."""
    all_types = sorted({t for _, types in named_sets for t in types})
    fig, ax = plt.subplots(
        figsize=(1.2 + 0.55 * max(len(all_types), 1),
                 1.0 + 0.45 * max(len(named_sets), 1)))
    for i, (_, types) in enumerate(named_sets):
        owned = set(types)
        for j, t in enumerate(all_types):
            color = "#333333" if t in owned else "#eeeeee"
            ax.add_patch(plt.Rectangle((j, i), 0.9, 0.9, color=color))
    ax.set_xlim(0, len(all_types))
    ax.set_ylim(0, len(named_sets))
    ax.set_xticks([j + 0.45 for j in range(len(all_types))])
    ax.set_xticklabels([str(t) for t in all_types], rotation=45,
                       ha="right", fontsize=8)
    ax.set_yticks([i + 0.45 for i in range(len(named_sets))])
    ax.set_yticklabels([name for name, _ in named_sets], fontsize=9)
    ax.invert_yaxis()
    ax.set_title(title or "maximal torus types")
    ax.set_aspect("equal")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_local_certificate(certificate: Sequence[dict], rank: int,
                           path: str, title: str = "") -> None:
    """Grouped bars of local ranks per place, colored by status, with the
    split rank marked."""
    places = [st["place"] for st in certificate]
    x = range(len(places))
    fig, ax = plt.subplots(figsize=(1.6 + 0.9 * max(len(places), 1), 3.2))
    for i, st in enumerate(certificate):
        ax.bar(i - 0.18, st["rank1"], width=0.32,
               color=_STATUS_COLOR[st["status"][0]], edgecolor="black")
        ax.bar(i + 0.18, st["rank2"], width=0.32,
               color=_STATUS_COLOR[st["status"][1]], edgecolor="black",
               hatch="//")
    ax.axhline(rank, color="gray", linestyle=":", linewidth=1)
    ax.set_xticks(list(x))
    ax.set_xticklabels(places)
    ax.set_ylabel("local rank")
    ax.set_ylim(0, rank + 0.6)
    ax.set_title(title or "local ranks (plain: type B, hatched: type C)")
    handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in
               _STATUS_COLOR.values()]
    ax.legend(handles, list(_STATUS_COLOR), fontsize=8, loc="lower right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_witt_table(places: Sequence[tuple[str, int, int]], path: str,
                    title: str = "") -> None:
    """Witt indices of two forms across places (rank-2 certificate)."""
    fig, ax = plt.subplots(figsize=(1.6 + 0.9 * max(len(places), 1), 3.0))
    for i, (_, w1, w2) in enumerate(places):
        ax.bar(i - 0.18, w1, width=0.32, color="#984ea3", edgecolor="black")
        ax.bar(i + 0.18, w2, width=0.32, color="#a65628", edgecolor="black",
               hatch="//")
    ax.axhline(2, color="gray", linestyle=":", linewidth=1)
    ax.set_xticks(range(len(places)))
    ax.set_xticklabels([p for p, _, _ in places])
    ax.set_ylabel("Witt index")
    ax.set_ylim(0, 2.6)
    ax.set_title(title or "local Witt indices (plain: q1, hatched: q2)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
