"""Command-line front end.

Subcommands mirror the library: chimera gen/virtualize, msc build/verify,
embed clique, verify, faulty check/attempt, oracle minor/clique, report
figures.  Randomized commands require an explicit --seed; identical
invocations produce byte-identical files.  Exit codes: 2 bad input,
3 bound violation, 4 budget exceeded, 5 verification failure, 1 no
witness found.
"""

import argparse
import sys
from pathlib import Path

from . import files
from .chimera import ChimeraSpec, build_chimera, virtualize
from .embedder import (
    BoundViolation,
    chain_stats,
    choi_lower_bound,
    embed_clique,
    verify_embedding,
)
from .faulty import (
    COVERING,
    UNIFORM,
    IncompleteBipartite,
    attempt_clique_embedding,
    check_no_clique_criteria,
)
from .msc import msc_complete_bipartite, verify_msc
from .oracle import BUDGET_EXCEEDED, MINOR, is_minor, largest_clique_minor

EXIT_OK = 0
EXIT_NO_WITNESS = 1
EXIT_BAD_INPUT = 2
EXIT_BOUND = 3
EXIT_BUDGET = 4
EXIT_VERIFY = 5


def _out_path(args, default_name):
    # --out wins as-is; otherwise the default name lands in the resolved
    # output directory (MINORCOVER_OUTDIR or cwd).
    if args.out:
        return Path(args.out)
    return files.resolve_outdir() / default_name


def _cmd_chimera_gen(args):
    spec = ChimeraSpec(args.n, args.m, args.c)
    g = build_chimera(spec)
    path = _out_path(args, f"chimera_{args.n}x{args.m}x{args.c}.edges")
    files.write_chimera(g, spec, path)
    print(f"wrote {path} ({g.order} qubits, {g.size} couplers)")
    return EXIT_OK


def _cmd_chimera_virtualize(args):
    g, spec = files.read_chimera(args.graph)
    vh = virtualize(g, spec)
    path = _out_path(args, "virtual_hardware.txt")
    files.write_virtual_hardware(vh, path)
    print(
        f"wrote {path} ({len(vh.labeling.left)}+{len(vh.labeling.right)} virtual vertices, "
        f"{vh.graph.size} edges)"
    )
    return EXIT_OK


def _cmd_msc_build(args):
    seq = msc_complete_bipartite(args.left, args.right, args.seed)
    outdir = _out_path(args, f"msc_{args.left}x{args.right}_seed{args.seed}")
    files.write_minor_sequence(seq, outdir)
    print(f"wrote {outdir} ({len(seq)} minors)")
    return EXIT_OK


def _cmd_msc_verify(args):
    seq = files.read_minor_sequence(args.archive)
    report = verify_msc(seq)
    sys.stdout.write(files.format_msc_report(report))
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_embed_clique(args):
    spec = ChimeraSpec(args.n, args.m, args.c)
    embedding = embed_clique(spec, args.k, args.seed)
    stats = chain_stats(embedding)
    path = _out_path(args, f"embedding_k{args.k}.txt")
    files.write_embedding(
        embedding, path, comments=[f"chimera {args.n} {args.m} {args.c}", f"clique {args.k}"]
    )
    per_qubit, total = (choi_lower_bound(args.k, args.c) if args.k >= 4 else (1, args.k))
    print(f"wrote {path}")
    print(f"chain stats {stats.formatted()}")
    print(f"qubits used {stats.total_qubits} (lower bound {total}, per-chain bound {per_qubit})")
    return EXIT_OK


def _cmd_verify(args):
    logical = files.read_edge_list(args.logical)
    target = files.read_edge_list(args.target)
    embedding = files.read_embedding(args.embedding)
    verdict = verify_embedding(logical, target, embedding)
    sys.stdout.write(files.format_verdict(verdict))
    return EXIT_OK if verdict.ok else EXIT_VERIFY


def _cmd_faulty_check(args):
    b = IncompleteBipartite.from_graph(files.read_edge_list(args.graph))
    report = check_no_clique_criteria(b)
    sys.stdout.write(files.format_criteria_report(report))
    return EXIT_OK


def _cmd_faulty_attempt(args):
    b = IncompleteBipartite.from_graph(files.read_edge_list(args.graph))
    log = []
    witness = attempt_clique_embedding(
        b,
        attempts=args.attempts,
        seed=args.seed,
        policy=args.policy,
        trial_log=log,
        jobs=args.jobs,
    )
    if witness is None:
        print(f"no witness found after {len(log)} trials")
        return EXIT_NO_WITNESS
    n = len(b.labeling.left)
    path = _out_path(args, f"witness_k{n + 1}.txt")
    files.write_bag_map(witness, path, comments=[f"clique {n + 1}", f"trials {len(log)}"])
    print(f"wrote {path} (witness for K_{n + 1} after {len(log)} trials)")
    return EXIT_OK


def _cmd_oracle_minor(args):
    h = files.read_edge_list(args.h)
    g = files.read_edge_list(args.g)
    res = is_minor(h, g, budget=args.budget, jobs=args.jobs)
    print(f"status {res.status}")
    if res.status == MINOR:
        for v in sorted(res.witness):
            print(f"bag {v} : " + " ".join(str(x) for x in sorted(res.witness[v])))
    return {MINOR: EXIT_OK, BUDGET_EXCEEDED: EXIT_BUDGET}.get(res.status, EXIT_NO_WITNESS)


def _cmd_oracle_clique(args):
    g = files.read_edge_list(args.g)
    res = largest_clique_minor(g, budget=args.budget, jobs=args.jobs)
    print(f"status {res.status}")
    if res.status == MINOR:
        print(f"largest_clique_minor {res.order}")
        for v in sorted(res.witness):
            print(f"bag {v} : " + " ".join(str(x) for x in sorted(res.witness[v])))
        return EXIT_OK
    return EXIT_BUDGET


def _cmd_report_figures(args):
    from .figures import render_all

    outdir = Path(args.outdir) if args.outdir else files.resolve_outdir() / "report"
    paths = render_all(outdir, seed=args.seed)
    for p in paths:
        print(f"wrote {p}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="minorcover",
        description="Minor set covers, Chimera virtual hardware, and clique-minor embeddings.",
    )
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers for searches")
    sub = parser.add_subparsers(dest="command", required=True)

    chim = sub.add_parser("chimera", help="hardware graph construction").add_subparsers(
        dest="subcommand", required=True
    )
    gen = chim.add_parser("gen", help="generate an ideal C(n,m,c) edge list")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--c", type=int, required=True)
    gen.add_argument("--out")
    gen.set_defaults(func=_cmd_chimera_gen)
    virt = chim.add_parser("virtualize", help="contract intercell chains")
    virt.add_argument("--graph", required=True, help="chimera edge-list file")
    virt.add_argument("--out")
    virt.set_defaults(func=_cmd_chimera_virtualize)

    msc = sub.add_parser("msc", help="minor set covers").add_subparsers(
        dest="subcommand", required=True
    )
    build = msc.add_parser("build", help="cover of a complete bipartite graph")
    build.add_argument("--left", type=int, required=True)
    build.add_argument("--right", type=int, required=True)
    build.add_argument("--seed", type=int, required=True)
    build.add_argument("--out")
    build.set_defaults(func=_cmd_msc_build)
    mverify = msc.add_parser("verify", help="recheck a cover archive")
    mverify.add_argument("archive")
    mverify.set_defaults(func=_cmd_msc_verify)

    embed = sub.add_parser("embed", help="clique embeddings").add_subparsers(
        dest="subcommand", required=True
    )
    clique = embed.add_parser("clique", help="embed K_k into ideal C(n,m,c)")
    clique.add_argument("--n", type=int, required=True)
    clique.add_argument("--m", type=int, required=True)
    clique.add_argument("--c", type=int, required=True)
    clique.add_argument("--k", type=int, required=True)
    clique.add_argument("--seed", type=int, required=True)
    clique.add_argument("--out")
    clique.set_defaults(func=_cmd_embed_clique)

    verify = sub.add_parser("verify", help="check an embedding file")
    verify.add_argument("--logical", required=True)
    verify.add_argument("--target", required=True)
    verify.add_argument("--embedding", required=True)
    verify.set_defaults(func=_cmd_verify)

    faulty = sub.add_parser("faulty", help="faulty bipartite graphs").add_subparsers(
        dest="subcommand", required=True
    )
    check = faulty.add_parser("check", help="no-clique criteria")
    check.add_argument("--graph", required=True)
    check.set_defaults(func=_cmd_faulty_check)
    attempt = faulty.add_parser("attempt", help="randomized clique recovery")
    attempt.add_argument("--graph", required=True)
    attempt.add_argument("--attempts", type=int, default=100)
    attempt.add_argument("--seed", type=int, required=True)
    attempt.add_argument("--policy", choices=[COVERING, UNIFORM], default=COVERING)
    attempt.add_argument("--out")
    attempt.set_defaults(func=_cmd_faulty_attempt)

    oracle = sub.add_parser("oracle", help="brute-force minor containment").add_subparsers(
        dest="subcommand", required=True
    )
    minor = oracle.add_parser("minor", help="is --h a minor of --g")
    minor.add_argument("--h", required=True, help="candidate minor edge list")
    minor.add_argument("--g", required=True, help="host edge list")
    minor.add_argument("--budget", type=int, default=10)
    minor.set_defaults(func=_cmd_oracle_minor)
    oclique = oracle.add_parser("clique", help="largest clique minor of --g")
    oclique.add_argument("--g", required=True)
    oclique.add_argument("--budget", type=int, default=10)
    oclique.set_defaults(func=_cmd_oracle_clique)

    report = sub.add_parser("report", help="tables and figures").add_subparsers(
        dest="subcommand", required=True
    )
    figures = report.add_parser("figures", help="regenerate the report set")
    figures.add_argument("--outdir")
    figures.add_argument("--seed", type=int, default=0)
    figures.set_defaults(func=_cmd_report_figures)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except files.FormatError as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except BoundViolation as exc:
        print(f"bound violation: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except FileNotFoundError as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ValueError as exc:
        if "budget" in str(exc):
            print(f"budget exceeded: {exc}", file=sys.stderr)
            return EXIT_BUDGET
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
