"""Brute-force minor containment, independent of the constructive machinery.

The search assigns each vertex of the candidate minor a bag: a connected
set of host vertices, disjoint from all other bags, such that every
candidate edge is realized by at least one host edge between its bags.
Exhaustive up to the host-size budget, so a negative answer is a proof.
"""

import concurrent.futures
from dataclasses import dataclass

from .graph import Graph, complete_graph

MINOR = "minor"
NO_MINOR = "no-minor"
BUDGET_EXCEEDED = "budget-exceeded"

DEFAULT_BUDGET = 10


@dataclass
class MinorResult:
    """Three-valued outcome; ``witness`` maps minor vertices to host bags."""

    status: str
    witness: dict | None = None


@dataclass
class CliqueMinorResult:
    status: str
    order: int | None = None
    witness: dict | None = None


def _lowest_bits(mask):
    while mask:
        bit = mask & -mask
        yield bit
        mask ^= bit


def _connected_subsets(adj, allowed, max_size):
    """All connected subsets of ``allowed`` (as bitmasks), each exactly once.

    Subsets are keyed by their minimum vertex: the enumeration for seed v
    only ever uses vertices >= v, and within one seed a standard
    banned-extension scheme prevents duplicates.
    """
    out = []
    n = len(adj)
    for v in range(n):
        vbit = 1 << v
        if not allowed & vbit:
            continue
        scope = allowed & ~(vbit - 1)

        def grow(s, frontier):
            out.append(s)
            if s.bit_count() >= max_size:
                return
            banned = 0
            for ubit in _lowest_bits(frontier):
                nxt = (frontier | (adj[ubit.bit_length() - 1] & scope)) & ~(s | ubit) & ~banned
                grow(s | ubit, nxt)
                banned |= ubit
        grow(vbit, adj[v] & scope)
    return out


def _prepare(h: Graph, g: Graph):
    """Index both graphs; returns None when cheap counts already refute."""
    hosts = sorted(g.vertices)
    hidx = {v: i for i, v in enumerate(hosts)}
    adj = [0] * len(hosts)
    for u, v in g.edges:
        adj[hidx[u]] |= 1 << hidx[v]
        adj[hidx[v]] |= 1 << hidx[u]
    pat_verts = sorted(h.vertices)
    pidx = {v: i for i, v in enumerate(pat_verts)}
    pat_adj = [set() for _ in pat_verts]
    for u, v in h.edges:
        pat_adj[pidx[u]].add(pidx[v])
        pat_adj[pidx[v]].add(pidx[u])
    return hosts, adj, pat_verts, pat_adj


def _search(adj, pat_adj, complete_pattern, free, bags, nbr_masks, first_bag=None):
    """Depth-first bag assignment; returns bag list or None."""
    k = len(pat_adj)
    n = len(adj)
    i = len(bags)
    if i == k:
        return list(bags)
    need_rest = k - i - 1
    max_size = free.bit_count() - need_rest
    if max_size < 1:
        return None
    if first_bag is not None:
        candidates = [first_bag]
    else:
        candidates = _connected_subsets(adj, free, max_size)
    for bag in candidates:
        if complete_pattern and bags:
            # bags of a complete pattern are interchangeable: force
            # increasing minimum vertex to kill the k! symmetry
            if (bag & -bag) < (bags[-1] & -bags[-1]):
                continue
        boundary = 0
        for ubit in _lowest_bits(bag):
            boundary |= adj[ubit.bit_length() - 1]
        boundary &= ~bag
        if boundary.bit_count() < len(pat_adj[i]):
            continue
        ok = True
        for j in pat_adj[i]:
            if j < i and not (bag & nbr_masks[j]):
                ok = False
                break
        if not ok:
            continue
        bags.append(bag)
        nbr_masks.append(boundary)
        res = _search(adj, pat_adj, complete_pattern, free & ~bag, bags, nbr_masks)
        nbr_masks.pop()
        bags.pop()
        if res is not None:
            return res
    return None


def _is_complete_pattern(pat_adj):
    k = len(pat_adj)
    return all(len(nb) == k - 1 for nb in pat_adj)


def _run_branch(args):
    adj, pat_adj, complete_pattern, full, first_bag = args
    return _search(adj, pat_adj, complete_pattern, full, [], [], first_bag=first_bag)


def is_minor(h: Graph, g: Graph, budget=DEFAULT_BUDGET, jobs=1) -> MinorResult:
    """Decide whether h is a minor of the host g by exhaustive search.

    Returns a witness bag map on success, a definite no when the search
    space is exhausted, and a budget-exceeded result (never a guess) when
    the host is larger than ``budget`` vertices.
    """
    if g.order > budget:
        return MinorResult(BUDGET_EXCEEDED)
    k = h.order
    if k == 0:
        return MinorResult(MINOR, {})
    if k > g.order or h.size > g.size:
        return MinorResult(NO_MINOR)

    hosts, adj, pat_verts, pat_adj = _prepare(h, g)
    complete_pattern = _is_complete_pattern(pat_adj)
    full = (1 << len(hosts)) - 1

    if jobs > 1 and k > 1:
        max_first = len(hosts) - (k - 1)
        firsts = _connected_subsets(adj, full, max_first)
        found = None
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_run_branch, (adj, pat_adj, complete_pattern, full, fb))
                for fb in firsts
            ]
            # resolve in submission order so the winning witness does not
            # depend on scheduling
            for fut in futures:
                res = fut.result()
                if res is not None:
                    found = res
                    for other in futures:
                        other.cancel()
                    break
        bag_masks = found
    else:
        bag_masks = _search(adj, pat_adj, complete_pattern, full, [], [])

    if bag_masks is None:
        return MinorResult(NO_MINOR)
    witness = {}
    for pi, mask in enumerate(bag_masks):
        witness[pat_verts[pi]] = frozenset(
            hosts[bit.bit_length() - 1] for bit in _lowest_bits(mask)
        )
    return MinorResult(MINOR, witness)


def largest_clique_minor(g: Graph, budget=DEFAULT_BUDGET, jobs=1) -> CliqueMinorResult:
    """Largest k with K_k a minor of g, found by ascending oracle calls."""
    if g.order > budget:
        return CliqueMinorResult(BUDGET_EXCEEDED)
    if g.order == 0:
        return CliqueMinorResult(MINOR, 0, {})
    best_k, best_witness = 1, {0: frozenset([min(g.vertices)])}
    for k in range(2, g.order + 1):
        res = is_minor(complete_graph(k), g, budget=budget, jobs=jobs)
        if res.status != MINOR:
            break
        best_k, best_witness = k, res.witness
    return CliqueMinorResult(MINOR, best_k, best_witness)


def is_subgraph_isomorphic(pattern: Graph, host: Graph) -> bool:
    """Injective vertex map of ``pattern`` into ``host`` carrying edges to edges.

    Plain backtracking with degree pruning; meant for small certificates,
    not bulk search.
    """
    if pattern.order > host.order or pattern.size > host.size:
        return False
    pat = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))
    hosts = sorted(host.vertices)
    assigned = {}
    used = set()

    def rec(i):
        if i == len(pat):
            return True
        p = pat[i]
        for hv in hosts:
            if hv in used or host.degree(hv) < pattern.degree(p):
                continue
            if any(
                q in assigned and not host.has_edge(hv, assigned[q])
                for q in pattern.neighbors(p)
            ):
                continue
            assigned[p] = hv
            used.add(hv)
            if rec(i + 1):
                return True
            used.discard(hv)
            del assigned[p]
        return False

    return rec(0)
