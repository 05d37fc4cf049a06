"""Chimera hardware graphs and their bipartite virtual hardware.

A C(n, m, c) graph is an n-by-m grid of complete bipartite K_{c,c}
cells.  Left-side qubits couple column-wise to the cell below, right-side
qubits couple row-wise to the cell at the right.  Contracting every
surviving intercell chain collapses the hardware onto a complete
bipartite virtual graph whose vertices carry physical chains.
"""

from dataclasses import dataclass, field

from .graph import BipartiteLabeling, Graph

LEFT = 0
RIGHT = 1

_SIDE_NAMES = {LEFT: "left", RIGHT: "right"}
_SIDE_VALUES = {"left": LEFT, "right": RIGHT}


@dataclass(frozen=True, order=True)
class QubitCoord:
    """Position of one qubit: grid cell, cell side, index within the side."""

    row: int
    col: int
    side: int
    index: int


@dataclass(frozen=True)
class ChimeraSpec:
    """Dimensions of a C(n, m, c) hardware graph."""

    n: int
    m: int
    c: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1 or self.c < 1:
            raise ValueError(f"invalid chimera dimensions ({self.n},{self.m},{self.c})")

    @property
    def num_qubits(self):
        return 2 * self.n * self.m * self.c

    def check(self, coord: QubitCoord):
        if not (
            0 <= coord.row < self.n
            and 0 <= coord.col < self.m
            and coord.side in (LEFT, RIGHT)
            and 0 <= coord.index < self.c
        ):
            raise ValueError(f"{coord} out of range for C({self.n},{self.m},{self.c})")

    def coord_to_linear(self, coord: QubitCoord) -> int:
        self.check(coord)
        return 2 * self.c * (self.m * coord.row + coord.col) + coord.side * self.c + coord.index

    def linear_to_coord(self, i: int) -> QubitCoord:
        if not 0 <= i < self.num_qubits:
            raise ValueError(f"linear index {i} out of range")
        i, index = divmod(i, self.c)
        i, side = divmod(i, 2)
        row, col = divmod(i, self.m)
        return QubitCoord(row, col, side, index)

    def coords(self):
        for i in range(self.num_qubits):
            yield self.linear_to_coord(i)


@dataclass(frozen=True)
class FaultSet:
    """Dead qubits and dead couplers to knock out of an ideal graph."""

    dead_qubits: frozenset = frozenset()
    dead_couplers: frozenset = frozenset()


@dataclass
class VirtualHardware:
    """Bipartite virtual graph plus the physical chain behind each vertex.

    ``chains`` maps a virtual vertex id to the ordered list of QubitCoords
    it was contracted from.  Chains are pairwise disjoint and cover every
    surviving qubit.
    """

    graph: Graph
    labeling: BipartiteLabeling
    chains: dict
    spec: ChimeraSpec


def side_name(side: int) -> str:
    return _SIDE_NAMES[side]


def side_value(name: str) -> int:
    if name not in _SIDE_VALUES:
        raise ValueError(f"unknown side {name!r}")
    return _SIDE_VALUES[name]


def build_chimera(spec: ChimeraSpec) -> Graph:
    """Ideal C(n, m, c) graph on linear indices 0 .. 2nmc-1.

    Edge count is nmc^2 intra-cell plus cm(n-1) vertical plus cn(m-1)
    horizontal couplers.
    """
    edges = []
    for row in range(spec.n):
        for col in range(spec.m):
            for a in range(spec.c):
                la = spec.coord_to_linear(QubitCoord(row, col, LEFT, a))
                for b in range(spec.c):
                    edges.append((la, spec.coord_to_linear(QubitCoord(row, col, RIGHT, b))))
                if row + 1 < spec.n:
                    edges.append((la, spec.coord_to_linear(QubitCoord(row + 1, col, LEFT, a))))
                rb = spec.coord_to_linear(QubitCoord(row, col, RIGHT, a))
                if col + 1 < spec.m:
                    edges.append((rb, spec.coord_to_linear(QubitCoord(row, col + 1, RIGHT, a))))
    labels = {
        i: f"({c.row},{c.col},{side_name(c.side)},{c.index})"
        for i, c in enumerate(spec.coords())
    }
    return Graph(range(spec.num_qubits), edges, labels)


def apply_faults(g: Graph, faults: FaultSet, spec: ChimeraSpec) -> Graph:
    """Remove dead qubits (with incident couplers) and dead couplers."""
    for coord in faults.dead_qubits:
        spec.check(coord)
    dead_vs = {spec.coord_to_linear(c) for c in faults.dead_qubits}
    dead_es = set()
    for a, b in faults.dead_couplers:
        spec.check(a)
        spec.check(b)
        la, lb = spec.coord_to_linear(a), spec.coord_to_linear(b)
        dead_es.add((la, lb) if la < lb else (lb, la))
    vertices = g.vertices - dead_vs
    edges = [
        e
        for e in g.edges
        if e not in dead_es and e[0] not in dead_vs and e[1] not in dead_vs
    ]
    labels = {v: s for v, s in g.labels.items() if v in vertices}
    return Graph(vertices, edges, labels)


def _runs(g: Graph, spec: ChimeraSpec, path):
    """Split a would-be chain into maximal alive, consecutively coupled segments."""
    runs, cur = [], []
    for coord in path:
        lin = spec.coord_to_linear(coord)
        if lin not in g.vertices:
            if cur:
                runs.append(cur)
            cur = []
            continue
        if cur and not g.has_edge(spec.coord_to_linear(cur[-1]), lin):
            runs.append(cur)
            cur = []
        cur.append(coord)
    if cur:
        runs.append(cur)
    return runs


def virtualize(g: Graph, spec: ChimeraSpec) -> VirtualHardware:
    """Contract all surviving intercell chains of a (possibly faulty) Chimera graph.

    Left virtual vertices come from vertical runs (fixed column and
    index), right ones from horizontal runs.  A dead qubit or dead
    intercell coupler splits its chain into several shorter virtual
    vertices.  Two virtual vertices are adjacent iff the intra-cell
    coupler in their unique crossing cell survived.  On ideal input the
    result is K_{nc,mc} with left chains of length n and right chains of
    length m.
    """
    if not g.vertices <= frozenset(range(spec.num_qubits)):
        raise ValueError("graph vertices out of range for the given spec")

    left_runs = []
    for col in range(spec.m):
        for index in range(spec.c):
            path = [QubitCoord(r, col, LEFT, index) for r in range(spec.n)]
            left_runs.extend(_runs(g, spec, path))
    right_runs = []
    for row in range(spec.n):
        for index in range(spec.c):
            path = [QubitCoord(row, c2, RIGHT, index) for c2 in range(spec.m)]
            right_runs.extend(_runs(g, spec, path))

    chains = {}
    for vid, run in enumerate(left_runs + right_runs):
        chains[vid] = list(run)
    n_left = len(left_runs)
    left_ids = frozenset(range(n_left))
    right_ids = frozenset(range(n_left, n_left + len(right_runs)))

    edges = []
    for li, lrun in enumerate(left_runs):
        col = lrun[0].col
        a = lrun[0].index
        rows = {q.row for q in lrun}
        for rj, rrun in enumerate(right_runs):
            row = rrun[0].row
            b = rrun[0].index
            if row not in rows or col not in {q.col for q in rrun}:
                continue
            coupler = (
                spec.coord_to_linear(QubitCoord(row, col, LEFT, a)),
                spec.coord_to_linear(QubitCoord(row, col, RIGHT, b)),
            )
            if g.has_edge(*coupler):
                edges.append((li, n_left + rj))

    vg = Graph(range(n_left + len(right_runs)), edges)
    return VirtualHardware(
        graph=vg,
        labeling=BipartiteLabeling(left_ids, right_ids),
        chains=chains,
        spec=spec,
    )
