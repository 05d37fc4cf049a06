"""Plain-text readers and writers for every artifact the toolkit produces.

Graphs use an edge-list format: a ``p <num_vertices> <num_edges>`` header
followed by ``e <u> <v>`` lines, vertices 0-indexed, ``#`` comments and
blank lines ignored.  Writers renumber vertices to 0..n-1 in sorted order
when ids are not already contiguous, so every file a writer produces is
accepted by the matching reader.  Nothing here emits timestamps: the same
value always serializes to the same bytes.
"""

import os
from pathlib import Path

from .chimera import ChimeraSpec, QubitCoord, VirtualHardware, side_name, side_value
from .embedder import EmbeddingVerdict
from .graph import BipartiteLabeling, Graph, MinorSequence
from .msc import MSCReport


class FormatError(ValueError):
    """Malformed input file."""


def _tokens(path):
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            yield lineno, line.split()


def _comments(path):
    out = []
    with open(path, "r", encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if line.startswith("#"):
                out.append(line[1:].strip())
    return out


def _canonical_order(g: Graph):
    verts = sorted(g.vertices)
    return verts, {v: i for i, v in enumerate(verts)}


def write_edge_list(g: Graph, path, comments=()):
    """Write a graph, renumbering vertices to 0..n-1 in sorted-id order."""
    verts, relabel = _canonical_order(g)
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {len(verts)} {g.size}")
    for u, v in sorted(sorted(g.edges), key=lambda e: (relabel[e[0]], relabel[e[1]])):
        a, b = relabel[u], relabel[v]
        if a > b:
            a, b = b, a
        lines.append(f"e {a} {b}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_edge_list(path) -> Graph:
    num_vertices = None
    num_edges = None
    edges = []
    for lineno, parts in _tokens(path):
        if parts[0] == "p":
            if num_vertices is not None:
                raise FormatError(f"{path}:{lineno}: duplicate p line")
            if len(parts) != 3:
                raise FormatError(f"{path}:{lineno}: p line needs two counts")
            num_vertices, num_edges = int(parts[1]), int(parts[2])
        elif parts[0] == "e":
            if num_vertices is None:
                raise FormatError(f"{path}:{lineno}: e line before p line")
            if len(parts) != 3:
                raise FormatError(f"{path}:{lineno}: e line needs two endpoints")
            u, v = int(parts[1]), int(parts[2])
            if u == v:
                raise FormatError(f"{path}:{lineno}: self-loop on {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise FormatError(f"{path}:{lineno}: endpoint out of range")
            edges.append((u, v) if u < v else (v, u))
        else:
            raise FormatError(f"{path}:{lineno}: unknown record {parts[0]!r}")
    if num_vertices is None:
        raise FormatError(f"{path}: missing p line")
    if len(set(edges)) != len(edges):
        raise FormatError(f"{path}: duplicate edges")
    if num_edges != len(edges):
        raise FormatError(f"{path}: p line promises {num_edges} edges, found {len(edges)}")
    return Graph(range(num_vertices), edges)


def write_chimera(g: Graph, spec: ChimeraSpec, path, dead=()):
    """Chimera edge list with a ``# chimera n m c`` header.

    Vertices are linear qubit indices.  ``dead`` lists removed qubits as
    extra ``# dead`` comment lines so faulty graphs survive a round trip;
    readers unaware of the convention still parse the surviving graph.
    """
    comments = [f"chimera {spec.n} {spec.m} {spec.c}"]
    padded = Graph(range(spec.num_qubits), g.edges)
    dead_ids = sorted({spec.coord_to_linear(c) if isinstance(c, QubitCoord) else c for c in dead})
    if dead_ids:
        comments.append("dead " + " ".join(str(i) for i in dead_ids))
    write_edge_list(padded, path, comments=comments)


def read_chimera(path):
    """Read a chimera edge list; returns (graph, spec)."""
    spec = None
    dead = set()
    for comment in _comments(path):
        parts = comment.split()
        if parts and parts[0] == "chimera":
            if len(parts) != 4:
                raise FormatError(f"{path}: malformed chimera header")
            spec = ChimeraSpec(int(parts[1]), int(parts[2]), int(parts[3]))
        elif parts and parts[0] == "dead":
            dead.update(int(x) for x in parts[1:])
    if spec is None:
        raise FormatError(f"{path}: missing '# chimera n m c' header")
    g = read_edge_list(path)
    if g.order != spec.num_qubits:
        raise FormatError(
            f"{path}: {g.order} vertices but C({spec.n},{spec.m},{spec.c}) has {spec.num_qubits}"
        )
    if dead:
        keep = g.vertices - dead
        g = g.subgraph(keep)
    return g, spec


def write_virtual_hardware(vh: VirtualHardware, path):
    """Virtual-hardware document: chain lines then the virtual edge list."""
    spec = vh.spec
    lines = [f"# chimera {spec.n} {spec.m} {spec.c}"]
    for vid in sorted(vh.chains):
        side = "left" if vid in vh.labeling.left else "right"
        qubits = " ".join(str(spec.coord_to_linear(q)) for q in vh.chains[vid])
        lines.append(f"v {vid} {side} : {qubits}")
    for u, v in sorted(vh.graph.edges):
        lines.append(f"e {u} {v}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_virtual_hardware(path) -> VirtualHardware:
    spec = None
    for comment in _comments(path):
        parts = comment.split()
        if parts and parts[0] == "chimera":
            spec = ChimeraSpec(int(parts[1]), int(parts[2]), int(parts[3]))
    if spec is None:
        raise FormatError(f"{path}: missing '# chimera n m c' header")
    chains = {}
    sides = {}
    edges = []
    for lineno, parts in _tokens(path):
        if parts[0] == "v":
            if len(parts) < 5 or parts[3] != ":":
                raise FormatError(f"{path}:{lineno}: malformed v line")
            vid = int(parts[1])
            sides[vid] = side_value(parts[2])
            chains[vid] = [spec.linear_to_coord(int(x)) for x in parts[4:]]
        elif parts[0] == "e":
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise FormatError(f"{path}:{lineno}: unknown record {parts[0]!r}")
    if not chains:
        raise FormatError(f"{path}: no virtual vertices")
    left = frozenset(v for v, s in sides.items() if s == 0)
    right = frozenset(sides) - left
    graph = Graph(chains.keys(), edges)
    return VirtualHardware(graph=graph, labeling=BipartiteLabeling(left, right), chains=chains, spec=spec)


def write_minor_sequence(seq: MinorSequence, outdir):
    """Directory archive: minor_<i>.edges plus bags_<i>.txt per step.

    Minor files are renumbered like any edge list; bag files use the same
    renumbered ids on the left of the colon and original source vertices
    on the right.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for i, (minor, bags) in enumerate(seq.minors):
        write_edge_list(minor, outdir / f"minor_{i}.edges", comments=[f"minor {i}"])
        _, relabel = _canonical_order(minor)
        lines = []
        for w in sorted(bags, key=lambda w: relabel[w]):
            members = " ".join(str(x) for x in sorted(bags[w]))
            lines.append(f"bag {relabel[w]} : {members}")
        (outdir / f"bags_{i}.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return outdir


def read_minor_sequence(outdir) -> MinorSequence:
    outdir = Path(outdir)
    minors = []
    i = 0
    while (outdir / f"minor_{i}.edges").exists():
        g = read_edge_list(outdir / f"minor_{i}.edges")
        bags = {}
        bag_path = outdir / f"bags_{i}.txt"
        if not bag_path.exists():
            raise FormatError(f"{bag_path}: missing bag map for minor {i}")
        for lineno, parts in _tokens(bag_path):
            if parts[0] != "bag" or len(parts) < 4 or parts[2] != ":":
                raise FormatError(f"{bag_path}:{lineno}: malformed bag line")
            bags[int(parts[1])] = frozenset(int(x) for x in parts[3:])
        if set(bags) != g.vertices:
            raise FormatError(f"{bag_path}: bag ids do not match minor vertices")
        minors.append((g, bags))
        i += 1
    if not minors:
        raise FormatError(f"{outdir}: no minor_0.edges found")
    return MinorSequence(source=minors[0][0], minors=minors)


def write_embedding(embedding: dict, path, comments=()):
    lines = [f"# {c}" for c in comments]
    for logical in sorted(embedding):
        qubits = " ".join(str(q) for q in sorted(embedding[logical]))
        lines.append(f"l {logical} : {qubits}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_embedding(path) -> dict:
    embedding = {}
    for lineno, parts in _tokens(path):
        if parts[0] != "l" or len(parts) < 4 or parts[2] != ":":
            raise FormatError(f"{path}:{lineno}: malformed l line")
        embedding[int(parts[1])] = frozenset(int(x) for x in parts[3:])
    if not embedding:
        raise FormatError(f"{path}: no embedding lines")
    return embedding


def _bool(x):
    return "true" if x else "false"


def format_criteria_report(report) -> str:
    cover = report.covering_matching
    cover_text = (
        "none" if cover is None else " ".join(f"({u},{v})" for u, v in cover) or "empty"
    )
    lines = [
        f"partition_order {report.partition_order}",
        f"required_edges {report.required_edges}",
        f"actual_edges {report.actual_edges}",
        f"edge_count_ok {_bool(report.edge_count_ok)}",
        f"incomplete_vertex_count {report.incomplete_vertex_count}",
        f"covering_matching {cover_text}",
        f"cover_ok {_bool(report.cover_ok)}",
        f"alt_threshold_missing {report.alt_threshold_missing}",
        f"alt_threshold_quadratic {report.alt_threshold_quadratic}",
        f"verdict {report.verdict}",
    ]
    return "\n".join(lines) + "\n"


def format_msc_report(report: MSCReport) -> str:
    tws = "skipped" if report.treewidths is None else " ".join(map(str, report.treewidths))
    lines = [
        f"cardinality {report.cardinality}",
        f"final_is_complete {_bool(report.final_is_complete)}",
        "complement_isolated_counts " + " ".join(map(str, report.complement_isolated_counts)),
        "clique_numbers " + " ".join(map(str, report.clique_numbers)),
        f"treewidths {tws}",
    ]
    if report.failures:
        lines.extend(f"failure {f}" for f in report.failures)
    else:
        lines.append("failures none")
    return "\n".join(lines) + "\n"


def format_verdict(verdict: EmbeddingVerdict) -> str:
    if verdict.ok:
        return "verdict valid\n"
    return (
        f"verdict invalid\nviolation {verdict.violation}\ndetail {verdict.detail}\n"
    )


def write_bag_map(bags: dict, path, comments=()):
    lines = [f"# {c}" for c in comments]
    for w in sorted(bags):
        members = " ".join(str(x) for x in sorted(bags[w]))
        lines.append(f"bag {w} : {members}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_table(path, header, rows):
    """Whitespace-delimited table with a commented header line."""
    lines = ["# " + "\t".join(header)]
    for row in rows:
        lines.append("\t".join(str(x) for x in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def resolve_outdir(explicit=None, default="."):
    """Output directory: explicit flag, then MINORCOVER_OUTDIR, then default."""
    if explicit:
        return Path(explicit)
    env = os.environ.get("MINORCOVER_OUTDIR")
    if env:
        return Path(env)
    return Path(default)
