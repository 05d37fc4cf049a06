"""No-clique criteria and randomized clique recovery for faulty bipartite graphs.

A bipartite graph with equal partition orders N that is missing edges can
be screened cheaply: if it retains too few edges for any K_{N+1} minor
model, or its incomplete vertices cannot all be absorbed into merged bags
by a single (N-1)-matching, no K_{N+1} minor exists.  The criteria are
necessary, not sufficient, so the remaining verdict is inconclusive.
"""

import concurrent.futures
import random
from dataclasses import dataclass

from .embedder import verify_embedding
from .graph import (
    BipartiteLabeling,
    Graph,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    contract_edge,
    is_bipartite,
)

NO_CLIQUE_POSSIBLE = "NoCliquePossible"
INCONCLUSIVE = "Inconclusive"

COVERING = "covering"
UNIFORM = "uniform"


@dataclass(frozen=True)
class IncompleteBipartite:
    """A bipartite graph together with its partition labeling."""

    graph: Graph
    labeling: BipartiteLabeling

    def __post_init__(self):
        left, right = self.labeling.left, self.labeling.right
        if left & right or (left | right) != self.graph.vertices:
            raise ValueError("labeling does not partition the vertex set")
        for u, v in self.graph.edges:
            if (u in left) == (v in left):
                raise ValueError(f"edge ({u},{v}) stays inside one part")

    @classmethod
    def from_graph(cls, g: Graph):
        lab = is_bipartite(g)
        if lab is None:
            raise ValueError("graph is not bipartite")
        return cls(g, lab)

    @classmethod
    def complete(cls, n, n2=None):
        if n2 is None:
            n2 = n
        g = complete_bipartite(n, n2)
        return cls(g, BipartiteLabeling(frozenset(range(n)), frozenset(range(n, n + n2))))

    def without_edges(self, edges):
        return IncompleteBipartite(self.graph.without_edges(edges), self.labeling)


@dataclass
class CriteriaReport:
    """Both criteria, their inputs, and the verdict they force.

    ``alt_threshold_missing`` and ``alt_threshold_quadratic`` record two
    alternative conventions for the edge criterion (the same count read
    as a missing-edge allowance, and a looser quadratic form); the
    implemented requirement is the minor-model edge count in
    ``required_edges``.
    """

    partition_order: int
    required_edges: int
    actual_edges: int
    edge_count_ok: bool
    incomplete_vertex_count: int
    covering_matching: list | None
    cover_ok: bool
    verdict: str
    alt_threshold_missing: int = 0
    alt_threshold_quadratic: int = 0


def crown_graph(n: int) -> IncompleteBipartite:
    """K_{n,n} minus a perfect matching: every vertex incomplete."""
    if n < 1:
        raise ValueError("crown graph needs n >= 1")
    base = IncompleteBipartite.complete(n)
    return base.without_edges([(i, n + i) for i in range(n)])


def incomplete_vertices(b: IncompleteBipartite) -> set:
    """Vertices not adjacent to the entire opposite part."""
    left, right = b.labeling.left, b.labeling.right
    out = {v for v in left if b.graph.degree(v) < len(right)}
    out |= {v for v in right if b.graph.degree(v) < len(left)}
    return out


def min_edges_required(n: int) -> int:
    """Edges any K_{N+1} minor model of a bipartite N+N graph must retain.

    N(N+1)/2 inter-bag edges plus N-1 intra-bag contraction edges.
    """
    if n < 1:
        raise ValueError("partition order must be positive")
    return n * (n + 1) // 2 + (n - 1)


def leaf_prune(g: Graph) -> Graph:
    """Drop edges incident to degree-1 vertices from the candidate set.

    Contracting such an edge never helps a cover: the merged bag gains no
    adjacency the interior endpoint lacked.  The input graph itself is
    untouched; the result is a filtered view for candidate selection.
    """
    leaves = {v for v in g.vertices if g.degree(v) == 1}
    edges = [e for e in g.edges if e[0] not in leaves and e[1] not in leaves]
    return Graph(g.vertices, edges, g.labels)


def find_covering_matching(b: IncompleteBipartite, budget: int):
    """Matching of at most ``budget`` leaf-pruned edges covering all incomplete vertices.

    Exhaustive branch and bound over the lowest uncovered vertex; returns
    the matching as an edge list, or None when no cover exists.  An empty
    list means there was nothing to cover.
    """
    targets = incomplete_vertices(b)
    if not targets:
        return []
    candidates = sorted(leaf_prune(b.graph).edges)

    def rec(uncovered, cands, acc, left):
        if not uncovered:
            return list(acc)
        if left == 0 or len(uncovered) > 2 * left:
            return None
        v = min(uncovered)
        for e in cands:
            if v not in e:
                continue
            u, w = e
            nxt = [f for f in cands if u not in f and w not in f]
            acc.append(e)
            res = rec(uncovered - {u, w}, nxt, acc, left - 1)
            acc.pop()
            if res is not None:
                return res
        return None

    return rec(frozenset(targets), candidates, [], budget)


def check_no_clique_criteria(b: IncompleteBipartite) -> CriteriaReport:
    """Apply both necessary criteria for a K_{N+1} minor; equal parts only."""
    n_left = len(b.labeling.left)
    n_right = len(b.labeling.right)
    if n_left != n_right:
        raise ValueError(
            f"criteria need equal partition orders, got {n_left} and {n_right}"
        )
    n = n_left
    required = min_edges_required(n)
    actual = b.graph.size
    edge_ok = actual >= required
    targets = incomplete_vertices(b)
    cover = find_covering_matching(b, n - 1)
    cover_ok = cover is not None
    verdict = INCONCLUSIVE if (edge_ok and cover_ok) else NO_CLIQUE_POSSIBLE
    return CriteriaReport(
        partition_order=n,
        required_edges=required,
        actual_edges=actual,
        edge_count_ok=edge_ok,
        incomplete_vertex_count=len(targets),
        covering_matching=cover,
        cover_ok=cover_ok,
        verdict=verdict,
        alt_threshold_missing=required,
        alt_threshold_quadratic=(n + 1) ** 2 + (n - 1),
    )


def _bags_to_embedding(bags):
    """Order surviving minor vertices to get logical ids 0..k-1."""
    return {i: bags[w] for i, w in enumerate(sorted(bags))}


def _has_blocked_dimer(minor: Graph, bags) -> bool:
    """A complement component of exactly two merged bags joined by one edge.

    Both bags already consumed their matching edge, so no later
    contraction can make them adjacent: the trial is unrecoverable.
    """
    comp = complement(minor)
    for vs in connected_components(comp):
        if len(vs) != 2:
            continue
        x, y = sorted(vs)
        if comp.has_edge(x, y) and len(bags[x]) >= 2 and len(bags[y]) >= 2:
            return True
    return False


def _draw_trial_matching(b, n, policy, rng):
    """One randomized (N-1)-matching; covering policy spends picks on
    uncovered incomplete vertices while any remain."""
    targets = incomplete_vertices(b)
    candidates = sorted(b.graph.edges)
    chosen = []
    covered = set()
    while len(chosen) < n - 1:
        if not candidates:
            return None
        pool = candidates
        if policy == COVERING:
            remaining = targets - covered
            preferred = [e for e in candidates if e[0] in remaining or e[1] in remaining]
            if preferred:
                pool = preferred
        u, v = pool[rng.randrange(len(pool))]
        chosen.append((u, v))
        covered.update((u, v))
        candidates = [f for f in candidates if u not in f and v not in f]
    return chosen


def run_trial(b: IncompleteBipartite, n: int, policy: str, rng):
    """Draw, contract step by step, watch for blocked dimers.

    Returns (outcome, bags, sequence): outcome is one of "success",
    "short-matching", "dimer", "not-complete"; bags is the final bag map
    on success; sequence lists every intermediate (minor, bags) pair for
    reporting.
    """
    matching = _draw_trial_matching(b, n, policy, rng)
    if matching is None:
        return "short-matching", None, []
    cur = b.graph
    bags = {v: frozenset([v]) for v in cur.vertices}
    sequence = [(cur, dict(bags))]
    for e in matching:
        u, v = e
        cur, _ = contract_edge(cur, e)
        merged = max(cur.vertices)
        bags[merged] = bags.pop(u) | bags.pop(v)
        sequence.append((cur, dict(bags)))
        if _has_blocked_dimer(cur, bags):
            return "dimer", None, sequence
    if cur.order == n + 1 and cur.size == (n + 1) * n // 2:
        return "success", dict(bags), sequence
    return "not-complete", None, sequence


def _trial_chunk(args):
    b, n, policy, seed, lo, hi = args
    outcomes = []
    for t in range(lo, hi):
        rng = random.Random(f"{seed}:{t}")
        outcome, bags, _ = run_trial(b, n, policy, rng)
        outcomes.append(outcome)
        if bags is not None:
            return outcomes, t, bags
    return outcomes, None, None


def attempt_clique_embedding(
    b: IncompleteBipartite,
    attempts: int = 100,
    seed=0,
    policy: str = COVERING,
    trial_log: list | None = None,
    jobs: int = 1,
):
    """Randomized search for a K_{N+1} minor witness in a faulty K_{N,N}.

    Runs up to ``attempts`` independent trials.  Each trial draws an
    (N-1)-matching (seeded from ``seed`` and the trial index, so results
    do not depend on ``jobs``), contracts it edge by edge, abandons early
    when the evolving minor's complement pins two merged bags into an
    isolated dimer, and accepts iff the final minor is complete of order
    N+1.  ``policy`` is "covering" (bias picks toward uncovered
    incomplete vertices, the recommended mode) or "uniform" (unbiased,
    reproduces how arbitrary matchings fail).  A successful bag map is
    re-verified before being returned; None means all trials failed.
    Trial outcomes are appended to ``trial_log`` when given.
    """
    n_left = len(b.labeling.left)
    n_right = len(b.labeling.right)
    if n_left != n_right:
        raise ValueError("equal partition orders required")
    if policy not in (COVERING, UNIFORM):
        raise ValueError(f"unknown policy {policy!r}")
    n = n_left

    witness = None
    if jobs > 1:
        chunk = -(attempts // -jobs)
        ranges = [(lo, min(lo + chunk, attempts)) for lo in range(0, attempts, chunk)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_trial_chunk, (b, n, policy, seed, lo, hi))
                for lo, hi in ranges
            ]
            for fut in futures:
                outcomes, hit, bags = fut.result()
                if trial_log is not None:
                    trial_log.extend(outcomes)
                if bags is not None:
                    witness = bags
                    for other in futures:
                        other.cancel()
                    break
    else:
        for t in range(attempts):
            rng = random.Random(f"{seed}:{t}")
            outcome, bags, _ = run_trial(b, n, policy, rng)
            if trial_log is not None:
                trial_log.append(outcome)
            if bags is not None:
                witness = bags
                break

    if witness is None:
        return None
    verdict = verify_embedding(
        complete_graph(n + 1), b.graph, _bags_to_embedding(witness)
    )
    if not verdict.ok:
        raise RuntimeError(f"trial witness failed verification: {verdict}")
    return witness
