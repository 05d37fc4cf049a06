"""Report generation: delimited tables plus matplotlib renderings.

Every entry point writes a plain-text table and a PNG side by side and
returns the written paths.  ``render_all`` regenerates the standard
report set: chain statistics for the reference clique embedding, the
complement evolution of a minor set cover, and the two contrasting
contraction runs on a faulty graph (covering-first success, arbitrary
failure).
"""

import math
import random
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .chimera import ChimeraSpec
from .embedder import chain_stats, embed_clique
from .faulty import (
    COVERING,
    UNIFORM,
    IncompleteBipartite,
    run_trial,
)
from .files import write_table
from .graph import Graph, complement, isolated_vertices
from .msc import clique_number, msc_complete_bipartite

_STYLE = {
    "figure.dpi": 110,
    "font.size": 9,
    "axes.titlesize": 9,
    "savefig.bbox": "tight",
}


def _circular_positions(vertices):
    vs = sorted(vertices)
    n = len(vs)
    return {
        v: (math.cos(2 * math.pi * i / n - math.pi / 2), math.sin(2 * math.pi * i / n - math.pi / 2))
        for i, v in enumerate(vs)
    }


def _draw_graph(ax, g: Graph, bags=None, title=""):
    pos = _circular_positions(g.vertices)
    for u, v in sorted(g.edges):
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ax.plot([x1, x2], [y1, y2], color="0.55", linewidth=0.8, zorder=1)
    for v in sorted(g.vertices):
        x, y = pos[v]
        merged = bags is not None and len(bags.get(v, ())) >= 2
        ax.scatter(
            [x], [y],
            s=140 if merged else 70,
            color="#c23b22" if merged else "#2a6f97",
            zorder=2,
        )
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.axis("off")


def _sequence_figure(sequence, path, suptitle):
    cols = len(sequence)
    with plt.rc_context(_STYLE):
        fig, axes = plt.subplots(2, cols, figsize=(2.1 * cols, 4.4))
        if cols == 1:
            axes = axes.reshape(2, 1)
        for i, (minor, bags) in enumerate(sequence):
            _draw_graph(axes[0][i], minor, bags, title=f"minor {i}")
            _draw_graph(axes[1][i], complement(minor), bags, title=f"complement {i}")
        fig.suptitle(suptitle)
        fig.savefig(path)
        plt.close(fig)


def render_chain_stats(outdir, spec=ChimeraSpec(3, 3, 4), k=13, seed=0):
    """Chain-order histogram for the reference clique embedding."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    embedding = embed_clique(spec, k, seed)
    stats = chain_stats(embedding)
    table = outdir / "chain_stats.txt"
    rows = sorted(stats.histogram.items())
    write_table(table, ("chain_order", "count"), rows)
    fig_path = outdir / "chain_stats.png"
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(3.4, 2.6))
        orders = [r[0] for r in rows]
        counts = [r[1] for r in rows]
        ax.bar([str(o) for o in orders], counts, color="#2a6f97")
        ax.set_xlabel("chain order")
        ax.set_ylabel("chains")
        ax.set_title(
            f"K_{k} in C({spec.n},{spec.m},{spec.c}): "
            f"{stats.total_qubits} qubits"
        )
        fig.savefig(fig_path)
        plt.close(fig)
    return [table, fig_path]


def render_complement_evolution(outdir, n=5, seed=0):
    """Cover of K_{n,n}: per-minor counts and the minor/complement strip."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    seq = msc_complete_bipartite(n, n, seed)
    rows = []
    for i, (minor, _) in enumerate(seq.minors):
        comp = complement(minor)
        rows.append(
            (i, minor.order, minor.size, comp.size, len(isolated_vertices(comp)), clique_number(minor))
        )
    table = outdir / "complement_evolution.txt"
    write_table(
        table,
        ("minor", "order", "size", "complement_size", "complement_isolated", "clique_number"),
        rows,
    )
    fig_path = outdir / "complement_evolution.png"
    _sequence_figure(seq.minors, fig_path, f"cover of K_{{{n},{n}}}, seed {seed}")
    return [table, fig_path]


def _trial_rows(sequence):
    rows = []
    for i, (minor, bags) in enumerate(sequence):
        comp = complement(minor)
        merged = sum(1 for b in bags.values() if len(b) >= 2)
        rows.append((i, minor.order, minor.size, merged, len(isolated_vertices(comp))))
    return rows


def _default_faulty():
    # reference faulty instance: K_{5,5} with one missing edge
    return IncompleteBipartite.complete(5).without_edges([(0, 5)])


def render_covering_success(outdir, seed=0):
    """A covering-first contraction run on the faulty reference graph."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    b = _default_faulty()
    outcome = None
    sequence = []
    for t in range(1000):
        rng = random.Random(f"{seed}:{t}")
        outcome, _, sequence = run_trial(b, 5, COVERING, rng)
        if outcome == "success":
            break
    table = outdir / "covering_success.txt"
    write_table(table, ("minor", "order", "size", "merged_bags", "complement_isolated"), _trial_rows(sequence))
    fig_path = outdir / "covering_success.png"
    _sequence_figure(sequence, fig_path, "covering-first matching: success")
    return [table, fig_path]


def render_uniform_failure(outdir, seed=0):
    """An arbitrary-matching contraction run that fails to reach K_6."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    b = _default_faulty()
    sequence = []
    for t in range(10000):
        rng = random.Random(f"{seed}:{t}")
        outcome, _, sequence = run_trial(b, 5, UNIFORM, rng)
        if outcome != "success":
            break
    table = outdir / "uniform_failure.txt"
    write_table(table, ("minor", "order", "size", "merged_bags", "complement_isolated"), _trial_rows(sequence))
    fig_path = outdir / "uniform_failure.png"
    _sequence_figure(sequence, fig_path, "arbitrary matching: failure")
    return [table, fig_path]


def render_all(outdir, seed=0):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    paths += render_chain_stats(outdir, seed=seed)
    paths += render_complement_evolution(outdir, seed=seed)
    paths += render_covering_success(outdir, seed=seed)
    paths += render_uniform_failure(outdir, seed=seed)
    return paths
