import pytest

from minorcover.chimera import (
    LEFT,
    RIGHT,
    ChimeraSpec,
    FaultSet,
    QubitCoord,
    apply_faults,
    build_chimera,
    side_name,
    side_value,
    virtualize,
)
from minorcover.graph import is_bipartite


class TestChimeraSpec:
    def test_invalid_dimensions(self):
        for dims in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-1, 2, 2)]:
            with pytest.raises(ValueError):
                ChimeraSpec(*dims)

    def test_linear_index_layout(self):
        spec = ChimeraSpec(3, 3, 4)
        assert spec.coord_to_linear(QubitCoord(0, 0, LEFT, 0)) == 0
        assert spec.coord_to_linear(QubitCoord(0, 0, RIGHT, 0)) == 4
        assert spec.coord_to_linear(QubitCoord(0, 1, LEFT, 0)) == 8
        assert spec.coord_to_linear(QubitCoord(1, 0, LEFT, 0)) == 24
        assert spec.coord_to_linear(QubitCoord(2, 2, RIGHT, 3)) == 71

    def test_round_trip_all_coords(self):
        for spec in [ChimeraSpec(3, 3, 4), ChimeraSpec(2, 3, 2), ChimeraSpec(1, 1, 1)]:
            for i in range(spec.num_qubits):
                coord = spec.linear_to_coord(i)
                assert spec.coord_to_linear(coord) == i
            assert len(list(spec.coords())) == spec.num_qubits

    def test_range_checks(self):
        spec = ChimeraSpec(2, 2, 2)
        with pytest.raises(ValueError):
            spec.linear_to_coord(16)
        with pytest.raises(ValueError):
            spec.coord_to_linear(QubitCoord(2, 0, LEFT, 0))
        with pytest.raises(ValueError):
            spec.coord_to_linear(QubitCoord(0, 0, LEFT, 2))

    def test_side_names(self):
        assert side_name(LEFT) == "left" and side_value("right") == RIGHT
        with pytest.raises(ValueError):
            side_value("middle")


class TestBuildChimera:
    @pytest.mark.parametrize(
        "n,m,c",
        [(1, 1, 1), (1, 1, 4), (2, 2, 1), (2, 2, 2), (3, 3, 4), (2, 3, 2), (4, 2, 3)],
    )
    def test_counts(self, n, m, c):
        g = build_chimera(ChimeraSpec(n, m, c))
        assert g.order == 2 * n * m * c
        assert g.size == n * m * c * c + c * m * (n - 1) + c * n * (m - 1)

    def test_reference_sizes(self):
        g = build_chimera(ChimeraSpec(3, 3, 4))
        assert (g.order, g.size) == (72, 192)
        big = build_chimera(ChimeraSpec(12, 12, 4))
        assert (big.order, big.size) == (1152, 3360)

    def test_cell_is_complete_bipartite(self):
        spec = ChimeraSpec(2, 2, 3)
        g = build_chimera(spec)
        for a in range(3):
            for b in range(3):
                la = spec.coord_to_linear(QubitCoord(1, 1, LEFT, a))
                rb = spec.coord_to_linear(QubitCoord(1, 1, RIGHT, b))
                assert g.has_edge(la, rb)
        # no couplers inside one side of a cell
        l0 = spec.coord_to_linear(QubitCoord(0, 0, LEFT, 0))
        l1 = spec.coord_to_linear(QubitCoord(0, 0, LEFT, 1))
        assert not g.has_edge(l0, l1)

    def test_intercell_wiring(self):
        spec = ChimeraSpec(3, 3, 2)
        g = build_chimera(spec)
        # left qubits chain vertically at fixed (col, index)
        assert g.has_edge(
            spec.coord_to_linear(QubitCoord(0, 1, LEFT, 1)),
            spec.coord_to_linear(QubitCoord(1, 1, LEFT, 1)),
        )
        # right qubits chain horizontally at fixed (row, index)
        assert g.has_edge(
            spec.coord_to_linear(QubitCoord(2, 0, RIGHT, 0)),
            spec.coord_to_linear(QubitCoord(2, 1, RIGHT, 0)),
        )
        # no diagonal or cross-side intercell couplers
        assert not g.has_edge(
            spec.coord_to_linear(QubitCoord(0, 0, LEFT, 0)),
            spec.coord_to_linear(QubitCoord(0, 1, LEFT, 0)),
        )

    def test_coordinate_labels(self):
        spec = ChimeraSpec(2, 2, 2)
        g = build_chimera(spec)
        assert g.labels[0] == "(0,0,left,0)"
        assert g.labels[spec.num_qubits - 1] == "(1,1,right,1)"


class TestApplyFaults:
    def test_dead_qubit_removes_incident_couplers(self):
        spec = ChimeraSpec(2, 2, 2)
        g = build_chimera(spec)
        dead = QubitCoord(0, 0, LEFT, 0)
        faulty = apply_faults(g, FaultSet(dead_qubits=frozenset([dead])), spec)
        lin = spec.coord_to_linear(dead)
        assert lin not in faulty.vertices
        assert faulty.order == g.order - 1
        assert faulty.size == g.size - g.degree(lin)
        assert lin not in faulty.labels

    def test_dead_coupler_removes_one_edge(self):
        spec = ChimeraSpec(2, 2, 2)
        g = build_chimera(spec)
        a = QubitCoord(0, 0, LEFT, 1)
        b = QubitCoord(1, 0, LEFT, 1)
        faulty = apply_faults(g, FaultSet(dead_couplers=frozenset([(a, b)])), spec)
        assert faulty.order == g.order
        assert faulty.size == g.size - 1
        assert not faulty.has_edge(spec.coord_to_linear(a), spec.coord_to_linear(b))

    def test_out_of_range_fault_rejected(self):
        spec = ChimeraSpec(2, 2, 2)
        g = build_chimera(spec)
        with pytest.raises(ValueError):
            apply_faults(g, FaultSet(dead_qubits=frozenset([QubitCoord(5, 0, LEFT, 0)])), spec)


class TestVirtualizeIdeal:
    @pytest.mark.parametrize(
        "n,m,c",
        [(2, 2, 2), (2, 3, 2), (3, 3, 3), (3, 4, 2), (4, 4, 2), (3, 3, 4)],
    )
    def test_sweep_yields_complete_bipartite(self, n, m, c):
        spec = ChimeraSpec(n, m, c)
        vh = virtualize(build_chimera(spec), spec)
        left, right = vh.labeling.left, vh.labeling.right
        assert len(left) == m * c
        assert len(right) == n * c
        assert vh.graph.size == (m * c) * (n * c)
        # every left-right pair adjacent, nothing else
        for u in left:
            assert vh.graph.neighbors(u) == right
        lab = is_bipartite(vh.graph)
        assert lab is not None

    def test_chain_lengths(self):
        spec = ChimeraSpec(3, 4, 2)
        vh = virtualize(build_chimera(spec), spec)
        for vid in vh.labeling.left:
            assert len(vh.chains[vid]) == spec.n
        for vid in vh.labeling.right:
            assert len(vh.chains[vid]) == spec.m

    def test_chains_partition_the_qubits(self):
        spec = ChimeraSpec(3, 3, 4)
        g = build_chimera(spec)
        vh = virtualize(g, spec)
        seen = []
        for chain in vh.chains.values():
            seen.extend(spec.coord_to_linear(q) for q in chain)
        assert sorted(seen) == sorted(g.vertices)
        assert len(seen) == len(set(seen))

    def test_chains_are_coupled_paths(self):
        spec = ChimeraSpec(4, 3, 2)
        g = build_chimera(spec)
        vh = virtualize(g, spec)
        for chain in vh.chains.values():
            for a, b in zip(chain, chain[1:]):
                assert g.has_edge(spec.coord_to_linear(a), spec.coord_to_linear(b))

    def test_out_of_range_vertices_rejected(self):
        spec = ChimeraSpec(2, 2, 2)
        g = build_chimera(ChimeraSpec(2, 2, 3))
        with pytest.raises(ValueError):
            virtualize(g, spec)


class TestVirtualizeFaulty:
    def test_one_dead_qubit_splits_nothing_but_loses_adjacency(self):
        # killing (0,0,left,0) in C(2,2,2) shortens one vertical chain to a
        # single qubit that only sees the row-1 horizontal chains
        spec = ChimeraSpec(2, 2, 2)
        g = build_chimera(spec)
        dead = QubitCoord(0, 0, LEFT, 0)
        faulty = apply_faults(g, FaultSet(dead_qubits=frozenset([dead])), spec)
        vh = virtualize(faulty, spec)
        assert len(vh.labeling.left) == 4
        assert len(vh.labeling.right) == 4
        assert vh.graph.size == 14
        short = [vid for vid in vh.labeling.left if len(vh.chains[vid]) == 1]
        assert len(short) == 1
        assert vh.graph.degree(short[0]) == 2

    def test_dead_intercell_coupler_splits_chain(self):
        spec = ChimeraSpec(2, 2, 2)
        g = build_chimera(spec)
        cut = (QubitCoord(0, 0, LEFT, 1), QubitCoord(1, 0, LEFT, 1))
        faulty = apply_faults(g, FaultSet(dead_couplers=frozenset([cut])), spec)
        vh = virtualize(faulty, spec)
        # the severed vertical chain becomes two length-1 virtual vertices
        assert len(vh.labeling.left) == 5
        assert len(vh.labeling.right) == 4
        assert vh.graph.size == 16
        lengths = sorted(len(vh.chains[v]) for v in vh.labeling.left)
        assert lengths == [1, 1, 2, 2, 2]

    def test_faulty_chains_cover_survivors(self):
        spec = ChimeraSpec(3, 3, 2)
        g = build_chimera(spec)
        faults = FaultSet(
            dead_qubits=frozenset([QubitCoord(1, 1, LEFT, 0), QubitCoord(0, 2, RIGHT, 1)])
        )
        faulty = apply_faults(g, faults, spec)
        vh = virtualize(faulty, spec)
        seen = sorted(
            spec.coord_to_linear(q) for chain in vh.chains.values() for q in chain
        )
        assert seen == sorted(faulty.vertices)

    def test_virtual_edges_match_surviving_couplers(self):
        # an edge exists iff the crossing-cell coupler survived
        spec = ChimeraSpec(2, 2, 2)
        g = build_chimera(spec)
        a = QubitCoord(0, 0, LEFT, 0)
        b = QubitCoord(0, 0, RIGHT, 0)
        faulty = apply_faults(g, FaultSet(dead_couplers=frozenset([(a, b)])), spec)
        vh = virtualize(faulty, spec)
        assert len(vh.labeling.left) == 4 and len(vh.labeling.right) == 4
        assert vh.graph.size == 15
