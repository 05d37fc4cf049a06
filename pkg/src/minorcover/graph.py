"""Simple undirected graphs plus the contraction and matching primitives.

Vertices are integers. Graphs are immutable values: every operation
returns a new graph and leaves its inputs untouched, so nothing here
needs locking and results are safe to share between workers.
"""

import random
from collections import deque
from dataclasses import dataclass

# A bag map sends each vertex of a minor to the set of original vertices
# merged into it.  Untouched vertices map to singleton bags.
BagMap = dict


def _edge(u, v):
    if u == v:
        raise ValueError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Edges are stored as (u, v) tuples with u < v.  ``labels`` is optional
    annotation metadata and does not participate in equality.
    """

    __slots__ = ("vertices", "edges", "labels", "_adj")

    def __init__(self, vertices=(), edges=(), labels=None):
        self.vertices = frozenset(vertices)
        self.edges = frozenset(_edge(u, v) for u, v in edges)
        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u},{v}) has an endpoint outside the vertex set")
        self.labels = dict(labels) if labels else {}
        self._adj = None

    @property
    def adjacency(self):
        if self._adj is None:
            adj = {v: set() for v in self.vertices}
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        return self._adj

    @property
    def order(self):
        return len(self.vertices)

    @property
    def size(self):
        return len(self.edges)

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self.adjacency[v])

    def has_edge(self, u, v):
        return (u, v) in self.edges or (v, u) in self.edges

    def subgraph(self, vs):
        """Induced subgraph on the vertex subset ``vs``."""
        keep = frozenset(vs)
        if not keep <= self.vertices:
            raise ValueError("subgraph vertices must come from the graph")
        edges = [e for e in self.edges if e[0] in keep and e[1] in keep]
        labels = {v: s for v, s in self.labels.items() if v in keep}
        return Graph(keep, edges, labels)

    def without_edges(self, edges):
        drop = {_edge(u, v) for u, v in edges}
        missing = drop - self.edges
        if missing:
            raise ValueError(f"edges not present: {sorted(missing)}")
        return Graph(self.vertices, self.edges - drop, self.labels)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(order={self.order}, size={self.size})"


@dataclass(frozen=True)
class BipartiteLabeling:
    """A two-coloring of the vertex set; every edge crosses the parts."""

    left: frozenset
    right: frozenset


@dataclass
class MinorSequence:
    """Minors produced by successive edge contractions of ``source``.

    ``minors[0]`` is the source itself with identity bags; ``minors[i]``
    is the graph after the first i contractions together with the
    cumulative bag map over original vertices.
    """

    source: Graph
    minors: list

    def __len__(self):
        return len(self.minors)

    @property
    def final(self):
        return self.minors[-1]


def complete_graph(n):
    vs = range(n)
    return Graph(vs, [(i, j) for i in vs for j in range(i + 1, n)])


def complete_bipartite(n, n2):
    """K_{n,n2} with left part 0..n-1 and right part n..n+n2-1."""
    left = range(n)
    right = range(n, n + n2)
    return Graph(
        list(left) + list(right),
        [(u, v) for u in left for v in right],
    )


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    vs = sorted(g.vertices)
    edges = [
        (u, v)
        for i, u in enumerate(vs)
        for v in vs[i + 1 :]
        if (u, v) not in g.edges
    ]
    return Graph(g.vertices, edges, g.labels)


def isolated_vertices(g: Graph) -> set:
    """All vertices of degree zero."""
    return {v for v in g.vertices if not g.adjacency[v]}


def contract_edge(g: Graph, e):
    """Contract one edge, merging its endpoints into a fresh vertex.

    The merged vertex gets id max(V)+1 so it can never collide with a
    surviving vertex.  Parallel edges collapse into one and the loop at
    the merged vertex is dropped.  Returns (minor, bags) where bags maps
    every vertex of the minor to the set of vertices it absorbed.
    """
    u, v = e
    key = _edge(u, v)
    if key not in g.edges:
        raise ValueError(f"edge ({u},{v}) not in graph")
    merged = max(g.vertices) + 1
    merged_nb = (g.neighbors(u) | g.neighbors(v)) - {u, v}
    edges = [f for f in g.edges if u not in f and v not in f]
    edges.extend((w, merged) for w in merged_nb)
    vertices = (g.vertices - {u, v}) | {merged}
    labels = {w: s for w, s in g.labels.items() if w not in (u, v)}
    bags = {w: frozenset([w]) for w in g.vertices - {u, v}}
    bags[merged] = frozenset([u, v])
    return Graph(vertices, edges, labels), bags


def validate_matching(g: Graph, matching):
    """Raise ValueError unless ``matching`` is a pairwise non-adjacent edge set of g."""
    seen = set()
    for e in matching:
        u, v = e
        if _edge(u, v) not in g.edges:
            raise ValueError(f"matching edge ({u},{v}) not in graph")
        if u in seen or v in seen:
            raise ValueError(f"matching edges share vertex at ({u},{v})")
        seen.update((u, v))


def contract_matching(g: Graph, matching) -> MinorSequence:
    """Contract a matching edge by edge, recording every intermediate minor.

    Matching edges are pairwise non-adjacent, so each edge of the input
    still exists verbatim in the current minor when its turn comes.
    """
    validate_matching(g, matching)
    bags = {v: frozenset([v]) for v in g.vertices}
    minors = [(g, dict(bags))]
    cur = g
    for e in matching:
        u, v = e
        cur, _ = contract_edge(cur, e)
        merged = max(cur.vertices)
        bags[merged] = bags.pop(u) | bags.pop(v)
        minors.append((cur, dict(bags)))
    return MinorSequence(source=g, minors=minors)


def greedy_random_matching(g: Graph, seed, target_size=None):
    """Grow a matching by repeated uniform random edge picks.

    After each pick all edges adjacent to it leave the candidate set.
    Stops on reaching ``target_size``, or when the surviving candidate
    structure is a single edge (so it is never picked), or when no
    candidates remain.  May return fewer than ``target_size`` edges on
    sparse inputs.
    """
    rng = random.Random(seed)
    candidates = sorted(g.edges)
    chosen = []
    while True:
        if target_size is not None and len(chosen) >= target_size:
            break
        if len(candidates) <= 1:
            break
        u, v = candidates[rng.randrange(len(candidates))]
        chosen.append((u, v))
        candidates = [f for f in candidates if u not in f and v not in f]
    return chosen


def is_bipartite(g: Graph):
    """Two-color g if possible, returning a BipartiteLabeling, else None.

    Components are colored independently; the smallest vertex of each
    component lands in the left part, so the answer is deterministic.
    """
    color = {}
    for start in sorted(g.vertices):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in sorted(g.neighbors(v)):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    left = frozenset(v for v, c in color.items() if c == 0)
    return BipartiteLabeling(left, g.vertices - left)


def connected_components(g: Graph):
    """Vertex sets of the connected components, smallest member first."""
    seen = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected_subset(g: Graph, vs) -> bool:
    """True when the induced subgraph on ``vs`` is connected and non-empty."""
    vs = set(vs)
    if not vs:
        return False
    start = next(iter(vs))
    comp = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in vs and w not in comp:
                comp.add(w)
                queue.append(w)
    return comp == vs
