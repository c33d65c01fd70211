"""Command-line entry points.

Exit codes: 0 for a decided "yes" (or a completed non-decision command),
1 for a decided "no" on decision subcommands, 2 for malformed input or
usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import corpus as corpus_mod
from . import formats
from .edp import edp_solve
from .formats import FormatError, from_json, parse_graph, serialize_graph, to_json
from .graphs import theorem1_classify
from .homs import MODES, PLAIN, hom_exists
from .quantified import (EXISTENTIAL, QbfInstance, QcspInstance, QnaeInstance,
                         UNIVERSAL, apply_move, game_value, initial_state,
                         legal_moves, non_losing_moves, qcsp_eval,
                         strict_alternation_roles)
from .reductions import (c5_chain_reduce, local_hom_subdivision_pair,
                         reduce_3col_by_subdivision, reduce_edp_to_long_edp,
                         reduce_pik_qnae_to_list_qcsp, reduce_qbf_to_qnae,
                         reduce_qnae_to_qcsp, verify_reduction)
from .widths import (lift_decomposition_phi2, min_vertex_separation, pathwidth,
                     primal_graph, treedepth, treewidth)


class CliError(Exception):
    pass


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}") from None


def _load_graph(path):
    try:
        return parse_graph(_read(path))
    except FormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_json(path, want):
    try:
        obj = from_json(_read(path))
    except FormatError as exc:
        raise CliError(f"{path}: {exc}") from None
    if not isinstance(obj, want):
        raise CliError(f"{path}: expected a {want.__name__} object")
    return obj


# ---------------------------------------------------------------------------
# subcommands


def _cmd_hom(args):
    g = _load_graph(args.g)
    h = _load_graph(args.h)
    w = hom_exists(g, h, args.mode)
    if w is None:
        print("no")
        return 1
    print("yes " + " ".join(map(str, w.mapping)))
    return 0


_MEASURES = {"pw": pathwidth, "tw": treewidth, "td": treedepth,
             "vsn": min_vertex_separation}


def _cmd_width(args):
    g = _load_graph(args.g)
    value, cert = _MEASURES[args.measure](g)
    print(value)
    if args.emit:
        _write(args.emit, to_json(cert))
    return 0


def _cmd_qcsp(args):
    inst = _load_json(args.infile, QcspInstance)
    result = qcsp_eval(inst)
    print("true" if result else "false")
    return 0 if result else 1


def _game_setup(args):
    g = _load_graph(args.g)
    order = (tuple(int(x) for x in args.order.split(","))
             if args.order else tuple(range(g.n)))
    roles = (tuple(EXISTENTIAL if r.upper().startswith("E") else UNIVERSAL
                   for r in args.roles.split(","))
             if args.roles else strict_alternation_roles(g.n, args.first))
    try:
        return initial_state(g, order, args.k, roles)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _cmd_game_solve(args):
    state = _game_setup(args)
    winner = game_value(state)
    print(winner)
    return 0 if winner == EXISTENTIAL else 1


def _cmd_game_play(args):
    """Play against the engine on stdin/stdout; the human enters one colour
    per line when prompted."""
    state = _game_setup(args)
    human = args.role
    while not state.finished:
        v = state.order[state.position]
        moves = sorted(legal_moves(state))
        if state.turn == human:
            print(f"vertex {v}: your colours {moves}", flush=True)
            line = sys.stdin.readline()
            if not line:
                raise CliError("input ended mid-game")
            try:
                c = int(line.strip())
                state = apply_move(state, c)
            except ValueError as exc:
                print(f"rejected: {exc}", flush=True)
                continue
        else:
            good = non_losing_moves(state)
            c = min(good or moves)
            state = apply_move(state, c)
            print(f"engine colours vertex {v} with {c}", flush=True)
    won = state.position == len(state.order)
    winner = EXISTENTIAL if won else UNIVERSAL
    print(f"{winner}Won")
    return 0 if winner == human else 1


def _cmd_reduce(args):
    kind = args.kind
    if kind == "qbf-to-qnae":
        f = _load_json(args.infile, QbfInstance)
        _write(args.out, to_json(reduce_qbf_to_qnae(f).instance))
        return 0
    if kind == "qnae-to-qcsp":
        q = _load_json(args.infile, QnaeInstance)
        img = reduce_qnae_to_qcsp(q)
        _write(args.out, to_json(img.instance))
        if args.emit_graph:
            _write(args.emit_graph, serialize_graph(img.graph))
        return 0
    if kind == "qbf-to-qcsp":
        f = _load_json(args.infile, QbfInstance)
        img = reduce_qnae_to_qcsp(reduce_qbf_to_qnae(f).instance)
        _write(args.out, to_json(img.instance))
        if args.emit_graph:
            _write(args.emit_graph, serialize_graph(img.graph))
        if args.emit_cert:
            _, d = pathwidth(primal_graph(f))
            lifted = lift_decomposition_phi2(f, d)
            _write(args.emit_cert, to_json(lifted))
            print(f"certificate width {lifted.width} (bound {9 * d.width + 2})")
        return 0
    if kind == "3col-subdivision":
        g = _load_graph(args.infile)
        src, tgt = reduce_3col_by_subdivision(g, args.r)
        _write(args.out, serialize_graph(src))
        if args.emit_target:
            _write(args.emit_target, serialize_graph(tgt))
        return 0
    if kind == "c5-chain":
        g = _load_graph(args.infile)
        _write(args.out, serialize_graph(c5_chain_reduce(g)))
        return 0
    if kind == "local-subdivision":
        g = _load_graph(args.infile)
        src, tgt = local_hom_subdivision_pair(g, args.r)
        _write(args.out, serialize_graph(src))
        if args.emit_target:
            _write(args.emit_target, serialize_graph(tgt))
        return 0
    if kind == "pik-list-qcsp":
        q = _load_json(args.infile, QnaeInstance)
        img = reduce_pik_qnae_to_list_qcsp(q, args.p)
        _write(args.out, to_json(img.instance))
        if args.emit_graph:
            _write(args.emit_graph, serialize_graph(img.graph))
        return 0
    if kind == "edp-to-long-edp":
        from .edp import EdpInstance

        inst = _load_json(args.infile, EdpInstance)
        _write(args.out, to_json(reduce_edp_to_long_edp(inst)))
        return 0
    raise CliError(f"unknown reduction kind {kind!r}")


_SUITE_ALIASES = {
    "reduction-chain": "qbf-to-qcsp",
    "reduction-3col": "3col-subdivision",
    "reduction-c5": "c5-chain",
    "reduction-local": "local-subdivision",
    "reduction-pik": "pik-list-qcsp",
    "reduction-edp": "edp-to-long-edp",
}


def _cmd_verify(args):
    kind = _SUITE_ALIASES.get(args.suite, args.suite)
    params = {}
    if args.n is not None:
        params["max_n"] = args.n
    if args.r is not None:
        params["r"] = args.r
    try:
        report = verify_reduction(kind, **params)
    except (TypeError, ValueError) as exc:
        raise CliError(str(exc)) from None
    print(f"suite={report.kind} agrees={str(report.agrees).lower()} "
          + " ".join(f"{k}={v}" for k, v in sorted(report.size_stats.items())))
    return 0 if report.agrees else 1


def _cmd_classify(args):
    hs = [_load_graph(p) for p in args.h]
    verdict = theorem1_classify(hs)
    print(verdict.verdict)
    return 0


def _cmd_edp(args):
    from .edp import EdpInstance

    inst = _load_json(args.infile, EdpInstance)
    sol = edp_solve(inst)
    if sol is None:
        print("no")
        return 1
    for path in sol:
        print(" ".join(map(str, path)))
    return 0


def _cmd_gen(args):
    if args.kind in ("graphs", "connected-graphs"):
        out = corpus_mod.all_graphs(args.n, connected=args.kind.startswith("c"))
        for g in out:
            sys.stdout.write(serialize_graph(g) + "\n")
        print(f"# {len(out)} graphs", file=sys.stderr)
        return 0
    if args.kind == "prefixes":
        out = corpus_mod.all_prefixes(args.n)
        for p in out:
            print(" ".join(f"{q}{v}" for q, v in p.entries))
        print(f"# {len(out)} prefixes", file=sys.stderr)
        return 0
    if args.kind == "random-qcsp":
        import random

        rng = random.Random(args.seed)
        for _ in range(args.count):
            sys.stdout.write(to_json(corpus_mod.random_qcsp(rng, args.n)))
        return 0
    raise CliError(f"unknown generator {args.kind!r}")


def _cmd_serve(args):
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser():
    p = argparse.ArgumentParser(prog="homgames")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("hom", help="decide homomorphism existence")
    sp.add_argument("--g", required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--mode", default=PLAIN, choices=MODES)
    sp.set_defaults(func=_cmd_hom)

    sp = sub.add_parser("width", help="exact width measures with certificates")
    sp.add_argument("measure", choices=sorted(_MEASURES))
    sp.add_argument("--g", required=True)
    sp.add_argument("--emit", help="write the certificate as JSON")
    sp.set_defaults(func=_cmd_width)

    qp = sub.add_parser("qcsp", help="quantified constraint evaluation")
    qsub = qp.add_subparsers(dest="qcsp_command", required=True)
    sp = qsub.add_parser("eval")
    sp.add_argument("--in", dest="infile", required=True)
    sp.set_defaults(func=_cmd_qcsp)

    gp = sub.add_parser("game", help="sequential colouring game")
    gsub = gp.add_subparsers(dest="game_command", required=True)
    for name in ("solve", "play"):
        sp = gsub.add_parser(name)
        sp.add_argument("--g", required=True)
        sp.add_argument("--k", type=int, default=3)
        sp.add_argument("--order", help="comma-separated vertex order")
        sp.add_argument("--roles", help="comma-separated roles per position")
        sp.add_argument("--first", default=EXISTENTIAL,
                        choices=(EXISTENTIAL, UNIVERSAL))
        if name == "play":
            sp.add_argument("--role", default=EXISTENTIAL,
                            choices=(EXISTENTIAL, UNIVERSAL))
            sp.set_defaults(func=_cmd_game_play)
        else:
            sp.set_defaults(func=_cmd_game_solve)

    sp = sub.add_parser("reduce", help="apply a reduction")
    sp.add_argument("kind")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--emit-graph")
    sp.add_argument("--emit-target")
    sp.add_argument("--emit-cert")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--p", type=int, default=1)
    sp.set_defaults(func=_cmd_reduce)

    sp = sub.add_parser("verify", help="run a reduction verification suite")
    sp.add_argument("suite")
    sp.add_argument("--n", type=int)
    sp.add_argument("--r", type=int)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("classify", help="dichotomy verdict for forbidden subgraphs")
    sp.add_argument("--h", action="append", required=True)
    sp.set_defaults(func=_cmd_classify)

    sp = sub.add_parser("edp", help="edge-disjoint paths")
    sp.add_argument("--in", dest="infile", required=True)
    sp.set_defaults(func=_cmd_edp)

    sp = sub.add_parser("gen", help="deterministic instance generators")
    sp.add_argument("kind")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("serve", help="run the HTTP session API")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int,
                    default=int(os.environ.get("HOMGAMES_PORT", "8000")))
    sp.set_defaults(func=_cmd_serve)

    return p


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already; normalise others
        return 2 if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
