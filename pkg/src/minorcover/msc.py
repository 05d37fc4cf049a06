"""Minor set covers of complete bipartite graphs, with exact certificates.

The cover of K_{N,N} is the contraction sequence produced by an
(N-1)-edge matching: N minors ending in the complete graph K_{N+1}.
Verification recomputes every claimed invariant (complement structure,
clique numbers, exact treewidth) from scratch and reports failures
instead of raising.
"""

from dataclasses import dataclass, field

from .graph import (
    Graph,
    MinorSequence,
    complement,
    complete_bipartite,
    contract_matching,
    greedy_random_matching,
    is_bipartite,
    isolated_vertices,
)

CLIQUE_BUDGET = 32
TREEWIDTH_BUDGET = 14


@dataclass
class MSCReport:
    """Outcome of verify_msc; ``failures`` is empty iff everything held."""

    cardinality: int
    final_is_complete: bool
    complement_isolated_counts: list
    clique_numbers: list
    treewidths: list | None
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def msc_complete_bipartite(n, n2, seed) -> MinorSequence:
    """Contraction sequence of K_{n,n2} along a random (min(n,n2)-1)-matching."""
    if n < 1 or n2 < 1:
        raise ValueError("partition orders must be at least 1")
    g = complete_bipartite(n, n2)
    matching = greedy_random_matching(g, seed, target_size=min(n, n2) - 1)
    return contract_matching(g, matching)


def clique_number(g: Graph, budget=CLIQUE_BUDGET) -> int:
    """Exact clique number by branch and bound over bitmask candidate sets."""
    n = g.order
    if n > budget:
        raise ValueError(f"clique_number budget exceeded: {n} > {budget} vertices")
    if n == 0:
        return 0
    # High-degree vertices first tightens the bound early.
    verts = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for u, v in g.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]

    best = 0

    def expand(count, cand):
        nonlocal best
        if count + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, count)
            return
        while cand:
            if count + cand.bit_count() <= best:
                return
            bit = cand & -cand
            cand ^= bit
            expand(count + 1, cand & adj[bit.bit_length() - 1])

    expand(0, (1 << n) - 1)
    return best


def _reach_count(adj, eliminated, vbit, v):
    """Vertices outside eliminated+{v} reachable from v through eliminated ones."""
    seen = adj[v]
    frontier = seen & eliminated
    while frontier:
        ubit = frontier & -frontier
        frontier ^= ubit
        new = adj[ubit.bit_length() - 1] & ~seen & ~vbit
        seen |= new
        frontier |= new & eliminated
    return (seen & ~eliminated & ~vbit).bit_count()


def treewidth_exact(g: Graph, budget=TREEWIDTH_BUDGET) -> int:
    """Exact treewidth via dynamic programming over elimination prefixes.

    dp[S] is the best width achievable when the vertices of S are
    eliminated first; eliminating v last among S costs the number of
    vertices reachable from v through S\\{v}.  O(2^n poly) — the budget
    keeps it to instances the table fits.
    """
    n = g.order
    if n == 0:
        raise ValueError("treewidth of the empty graph is undefined")
    if n > budget:
        raise ValueError(f"treewidth budget exceeded: {n} > {budget} vertices")
    verts = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    adj = [0] * n
    for u, v in g.edges:
        adj[idx[u]] |= 1 << idx[v]
        adj[idx[v]] |= 1 << idx[u]

    dp = [0] * (1 << n)
    dp[0] = -1
    for s in range(1, 1 << n):
        best = n
        rest = s
        while rest:
            vbit = rest & -rest
            rest ^= vbit
            prev = s ^ vbit
            cost = _reach_count(adj, prev, vbit, vbit.bit_length() - 1)
            if dp[prev] > cost:
                cost = dp[prev]
            if cost < best:
                best = cost
        dp[s] = best
    return dp[(1 << n) - 1]


def _is_complete(g: Graph) -> bool:
    return g.size == g.order * (g.order - 1) // 2


def verify_msc(
    seq: MinorSequence,
    treewidth_budget=TREEWIDTH_BUDGET,
    clique_budget=CLIQUE_BUDGET,
) -> MSCReport:
    """Recompute and check every cover invariant of a contraction sequence.

    The source must be a complete bipartite graph.  For equal partition
    orders N the checks are: N minors; the complement of minor i has
    exactly i isolated vertices, except the last minor whose complement
    is edgeless; clique numbers step from 2 to N+1; the final minor is
    K_{N+1}.  For unequal partitions only the clique corollary is
    asserted: the final minor's clique number is min+1.  Treewidths are
    checked to all equal min when every minor fits the budget, otherwise
    skipped and reported as None.  Failures are collected, not thrown.
    """
    lab = is_bipartite(seq.source)
    if lab is None:
        raise ValueError("source graph is not bipartite")
    n1, n2 = len(lab.left), len(lab.right)
    if seq.source.size != n1 * n2:
        raise ValueError("source graph is not complete bipartite")
    nmin = min(n1, n2)

    failures = []
    counts = [len(isolated_vertices(complement(m))) for m, _ in seq.minors]
    cliques = [clique_number(m, clique_budget) for m, _ in seq.minors]
    final = seq.minors[-1][0]
    final_complete = final.order == nmin + 1 and _is_complete(final)

    if n1 == n2:
        if len(seq.minors) != nmin:
            failures.append(f"cardinality {len(seq.minors)} != {nmin}")
        for i, cnt in enumerate(counts):
            if i < nmin - 1:
                if cnt != i:
                    failures.append(f"complement of minor {i} has {cnt} isolated vertices, expected {i}")
            elif complement(seq.minors[i][0]).size != 0:
                failures.append(f"complement of final minor {i} is not edgeless")
        for i, cq in enumerate(cliques):
            if cq != 2 + i:
                failures.append(f"clique number of minor {i} is {cq}, expected {2 + i}")
        if len(seq.minors) == nmin and not final_complete:
            failures.append(f"final minor is not K_{nmin + 1}")
    else:
        if cliques[-1] != nmin + 1:
            failures.append(
                f"final minor clique number {cliques[-1]} != {nmin + 1}"
            )

    treewidths = None
    if treewidth_budget and all(m.order <= treewidth_budget for m, _ in seq.minors):
        treewidths = [treewidth_exact(m, treewidth_budget) for m, _ in seq.minors]
        bad = [i for i, tw in enumerate(treewidths) if tw != nmin]
        if bad:
            failures.append(f"treewidth deviates from {nmin} at minors {bad}")

    return MSCReport(
        cardinality=len(seq.minors),
        final_is_complete=final_complete,
        complement_isolated_counts=counts,
        clique_numbers=cliques,
        treewidths=treewidths,
        failures=failures,
    )
