"""Clique embeddings into Chimera hardware via the two-step virtual route.

K_k goes into the virtual complete bipartite graph first (contract k-2
random non-adjacent virtual edges; the merged bags plus one untouched
vertex per side form the clique), then each virtual bag expands through
its chain map into physical qubits.  Every embedding this module returns
has been re-checked by the verifier, which is also usable standalone.
"""

from collections import Counter
from dataclasses import dataclass

from .chimera import ChimeraSpec, VirtualHardware, build_chimera, virtualize
from .graph import (
    Graph,
    complete_graph,
    contract_matching,
    greedy_random_matching,
    is_connected_subset,
)


class BoundViolation(ValueError):
    """Requested clique exceeds what the hardware can host."""


@dataclass
class EmbeddingVerdict:
    ok: bool
    violation: str | None = None
    detail: str = ""
    offenders: tuple = ()

    def __str__(self):
        if self.ok:
            return "valid"
        return f"invalid ({self.violation}): {self.detail}"


@dataclass
class ChainStats:
    """Histogram of chain orders for one embedding."""

    histogram: dict
    total_qubits: int
    max_chain: int

    def formatted(self) -> str:
        return " ".join(f"{k}:{v}" for k, v in sorted(self.histogram.items()))


def verify_embedding(logical: Graph, target: Graph, embedding: dict) -> EmbeddingVerdict:
    """Check an embedding of ``logical`` into ``target`` from first principles.

    Conditions, in the order they are reported: every logical vertex has
    a non-empty bag of target vertices, bags are pairwise disjoint, each
    bag induces a connected subgraph, and every logical edge is realized
    by at least one target edge between its bags.  The first violated
    condition wins.
    """
    for v in sorted(logical.vertices):
        bag = embedding.get(v)
        if not bag:
            return EmbeddingVerdict(False, "empty-bag", f"logical vertex {v} has no qubits", (v,))
        stray = set(bag) - target.vertices
        if stray:
            return EmbeddingVerdict(
                False, "unknown-vertex",
                f"bag of logical vertex {v} uses vertices outside the target: {sorted(stray)}",
                (v,),
            )
    seen = {}
    for v in sorted(logical.vertices):
        for q in sorted(embedding[v]):
            if q in seen:
                return EmbeddingVerdict(
                    False, "disjointness",
                    f"target vertex {q} appears in bags of {seen[q]} and {v}",
                    (seen[q], v, q),
                )
            seen[q] = v
    for v in sorted(logical.vertices):
        if not is_connected_subset(target, embedding[v]):
            return EmbeddingVerdict(
                False, "connectivity",
                f"bag of logical vertex {v} is disconnected",
                (v,),
            )
    for u, v in sorted(logical.edges):
        bag_u, bag_v = embedding[u], embedding[v]
        if not any(target.has_edge(a, b) for a in bag_u for b in bag_v):
            return EmbeddingVerdict(
                False, "coverage",
                f"logical edge ({u},{v}) has no target edge between its bags",
                (u, v),
            )
    return EmbeddingVerdict(True)


def chain_stats(embedding: dict) -> ChainStats:
    sizes = [len(bag) for bag in embedding.values()]
    hist = dict(sorted(Counter(sizes).items()))
    return ChainStats(histogram=hist, total_qubits=sum(sizes), max_chain=max(sizes, default=0))


def choi_lower_bound(k: int, c: int):
    """Known lower bounds for embedding K_k at cell size c, degree d = c+2.

    Returns (per_qubit, total): the per-logical-qubit chain bound
    ceil((k-3)/(d-2)) and the total-qubit bound floor(k^2/d).
    """
    if k < 4:
        raise ValueError("bound is defined for k >= 4")
    if c < 1:
        raise ValueError("cell size must be positive")
    d = c + 2
    per_qubit = -((k - 3) // -(d - 2))
    total = k * k // d
    return per_qubit, total


def embed_clique(spec: ChimeraSpec, k: int, seed) -> dict:
    """Embedding of K_k into ideal C(n, m, c); bags are linear qubit indices.

    k-2 merged virtual pairs give chains of n+m qubits; the two untouched
    virtual vertices give one chain of n and one of m.  The seed drives
    which virtual pairs merge.  The result is verified before returning.
    """
    if k < 1:
        raise ValueError("clique order must be positive")
    bound = min(spec.n, spec.m) * spec.c + 1
    if k > bound:
        raise BoundViolation(
            f"K_{k} exceeds K_{bound}, the largest clique embeddable in "
            f"C({spec.n},{spec.m},{spec.c})"
        )
    phys = build_chimera(spec)
    vh = virtualize(phys, spec)
    left = sorted(vh.labeling.left)
    right = sorted(vh.labeling.right)

    if k == 1:
        virtual_bags = [[left[0]]]
    else:
        matching = greedy_random_matching(vh.graph, seed, target_size=k - 2)
        if len(matching) != k - 2:
            raise RuntimeError("virtual matching came up short on ideal hardware")
        final_bags = contract_matching(vh.graph, matching).final[1]
        merged = sorted(w for w, bag in final_bags.items() if len(bag) >= 2)
        used = set()
        for w in merged:
            used |= final_bags[w]
        left_single = min(v for v in left if v not in used)
        right_single = min(v for v in right if v not in used)
        virtual_bags = [sorted(final_bags[w]) for w in merged]
        virtual_bags.append([left_single])
        virtual_bags.append([right_single])

    embedding = {}
    for logical, vids in enumerate(virtual_bags):
        qubits = set()
        for vid in vids:
            qubits.update(spec.coord_to_linear(q) for q in vh.chains[vid])
        embedding[logical] = frozenset(qubits)

    verdict = verify_embedding(complete_graph(k), phys, embedding)
    if not verdict.ok:
        raise RuntimeError(f"constructed embedding failed verification: {verdict}")
    return embedding
