"""Command-line interface: ``romanmyc <subcommand> ...``.

Exit status: 0 success, 1 usage or input error, 2 size refusal or timeout,
3 verification suite failure.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .constructions import CONSTRUCTIONS, ConstructionError, ConstructionOutput
from .graph import FAMILIES, Graph, GraphError, cartesian_product, format_edge_list, generate, mycielskian, parse_edge_list
from .rdf import RDFError, RomanFunction, parse_rdf, undefended
from .solver import DEFAULT_MAX_N, NAIVE_CAP, SizeLimitError, SolverConfig, SolverTimeout, classify, gamma, gamma_r
from .verify import VerifyConfig, build_corpus, run_suite

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def _seconds(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number of seconds, got {text!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"time limit must be positive, got {text!r}")
    return v


def _read_text(path: str, what: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {what} {path!r}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    text = _read_text(path, "graph file")
    try:
        return parse_edge_list(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_rdf(path: str, g: Graph) -> RomanFunction:
    text = _read_text(path, "RDF file")
    try:
        return parse_rdf(text, g)
    except RDFError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out!r}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def _structured(args) -> bool:
    return getattr(args, "format", "text") == "structured"


def _solver_config(args) -> SolverConfig:
    return SolverConfig(max_n=args.max_n, naive_cap=args.naive_cap, time_limit_s=args.time_limit_s)


def _int_params(tokens: Sequence[str]) -> list[int]:
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"expected an integer parameter, got {tok!r}") from None
    return out


# -- subcommands -----------------------------------------------------------

def cmd_gen(args) -> int:
    params = _int_params(args.params)
    try:
        g = generate(args.family, *params)
    except (GraphError, ValueError) as exc:
        raise UsageError(f"{args.family} {' '.join(args.params)}: {exc}") from None
    _emit(args, format_edge_list(g))
    return EXIT_OK


def cmd_product(args) -> int:
    g, h = _load_graph(args.g), _load_graph(args.h)
    try:
        p = cartesian_product(g, h)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, format_edge_list(p))
    return EXIT_OK


def cmd_mycielskian(args) -> int:
    g = _load_graph(args.graph)
    try:
        h, _ = mycielskian(g, args.m)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, format_edge_list(h))
    return EXIT_OK


def cmd_gamma(args) -> int:
    g = _load_graph(args.graph)
    r = gamma(g, _solver_config(args))
    if _structured(args):
        _emit(args, json.dumps({"gamma": r.value, "witness": sorted(r.witness)}) + "\n")
    else:
        _emit(args, f"{r.value}\n{' '.join(map(str, sorted(r.witness)))}\n")
    return EXIT_OK


def cmd_gamma_r(args) -> int:
    g = _load_graph(args.graph)
    r = gamma_r(g, _solver_config(args))
    if _structured(args):
        _emit(args, json.dumps({"gamma_r": r.value, "witness": str(r.witness),
                                "v1_independent": r.v1_independent}) + "\n")
    else:
        _emit(args, f"{r.value}\n{r.witness}\n")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    c = classify(g, _solver_config(args))
    sw = None if c.special_witness is None else str(c.special_witness)
    fields = {"gamma": c.gamma, "gamma_r": c.gamma_r, "is_roman": c.is_roman,
              "is_special_roman": c.is_special_roman, "special_witness": sw}
    if _structured(args):
        _emit(args, json.dumps(fields) + "\n")
    else:
        _emit(args, "".join(f"{k}: {'-' if v is None else str(v).lower() if isinstance(v, bool) else v}\n"
                            for k, v in fields.items()))
    return EXIT_OK


def cmd_check_rdf(args) -> int:
    g = _load_graph(args.graph)
    f = _load_rdf(args.rdf, g)
    bad = undefended(g, f)
    if _structured(args):
        _emit(args, json.dumps({"valid": not bad, "weight": f.weight, "undefended": bad}) + "\n")
    elif bad:
        _emit(args, f"invalid\nweight {f.weight}\nundefended {' '.join(map(str, bad))}\n")
    else:
        _emit(args, f"valid\nweight {f.weight}\n")
    return EXIT_OK


_LIFTED = {"mycielskian_plus2", "special_mycielskian", "mu_m"}


def _construction_args(args) -> tuple[list, dict]:
    name, toks = args.name, list(args.params)
    if name in _LIFTED:
        if args.graph is None:
            raise UsageError(f"construction {name!r} needs --graph")
        g = _load_graph(args.graph)
        if args.rdf is not None:
            f = _load_rdf(args.rdf, g)
        else:
            c = classify(g, _solver_config(args))
            f = c.gamma_r_result.witness if name == "mycielskian_plus2" else c.special_witness
            if f is None:
                raise UsageError(f"construction {name!r} needs a special Roman graph; the input is not one")
        extra = [args.m] if name == "mu_m" else []
        return [g, f, *extra], ({"as_printed": True} if args.as_printed else {})
    kinds = [t for t in toks if t in ("path", "cycle")]
    nums = _int_params([t for t in toks if t not in ("path", "cycle")])
    if name in ("multipartite", "path_multipartite"):
        if name == "multipartite":
            return [nums], {}
        if not nums:
            raise UsageError("path_multipartite needs t followed by part sizes")
        return [nums[0], nums[1:]], {}
    return [*nums, *kinds], {}


def _construction_text(out: ConstructionOutput) -> str:
    bad = undefended(out.graph, out.function)
    lines = [f"target: {out.target}", f"vertices: {out.graph.n}", f"function: {out.function}",
             f"claimed_weight: {out.claimed_weight}", f"valid: {str(not bad).lower()}"]
    if bad:
        lines.append(f"undefended: {' '.join(map(str, bad))}")
    return "\n".join(lines) + "\n"


def cmd_construct(args) -> int:
    build = CONSTRUCTIONS[args.name]
    pos, kw = _construction_args(args)
    try:
        out = build(*pos, **kw)
    except TypeError:
        raise UsageError(f"wrong parameters for construction {args.name!r}: {' '.join(args.params) or '(none)'}") from None
    except (ConstructionError, GraphError, ValueError) as exc:
        raise UsageError(f"{args.name}: {exc}") from None
    if _structured(args):
        bad = undefended(out.graph, out.function)
        _emit(args, json.dumps({"target": out.target, "vertices": out.graph.n, "function": str(out.function),
                                "claimed_weight": out.claimed_weight, "valid": not bad,
                                "undefended": bad}) + "\n")
    else:
        _emit(args, _construction_text(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = VerifyConfig(seed=args.seed, naive_cap=args.naive_cap, exact_cap=args.max_n, mu_order=args.m,
                       time_limit_s=args.time_limit_s, witness_budget=args.witness_budget, jobs=args.jobs,
                       random_count=args.random_count)
    report = run_suite(build_corpus(cfg), cfg)
    _emit(args, report.to_json() + "\n" if _structured(args) else report.to_text())
    c = report.counts()
    print(f"verify: {len(report.instances)} instances, {sum(c.values())} verdicts, "
          f"{len(report.violations)} universal violations", file=sys.stderr)
    return EXIT_FAILED if report.failed else EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="romanmyc", description="Roman domination on graphs and their generalized Mycielskians.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def out_opts(sp, fmt=True):
        sp.add_argument("--out", metavar="FILE", help="write the result here instead of stdout")
        if fmt:
            sp.add_argument("--format", choices=("text", "structured"), default="text",
                            help="structured emits JSON")

    def solver_opts(sp, max_n=DEFAULT_MAX_N, time_limit=None):
        sp.add_argument("--max-n", type=_positive, default=max_n, help=f"refuse larger graphs (default {max_n})")
        sp.add_argument("--time-limit-s", type=_seconds, default=time_limit, help="give up after this many seconds")
        sp.add_argument("--naive-cap", type=_nonneg, default=NAIVE_CAP, help=argparse.SUPPRESS)

    sp = sub.add_parser("gen", help="write a named graph as an edge list")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("params", nargs="*", help="integer parameters (part sizes for complete_multipartite)")
    out_opts(sp, fmt=False)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("product", help="Cartesian product G □ H of two edge-list files")
    sp.add_argument("g")
    sp.add_argument("h")
    out_opts(sp, fmt=False)
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("mycielskian", help="generalized Mycielskian mu_m of an edge-list file")
    sp.add_argument("graph", help="edge-list file, or - for stdin")
    sp.add_argument("--m", type=_positive, default=1, help="Mycielskian order (default 1)")
    out_opts(sp, fmt=False)
    sp.set_defaults(func=cmd_mycielskian)

    for name, func, what in (("gamma", cmd_gamma, "domination number and a minimum dominating set"),
                             ("gamma-r", cmd_gamma_r, "Roman domination number and an optimal RDF"),
                             ("classify", cmd_classify, "gamma, gamma_R, Roman and special-Roman flags")):
        sp = sub.add_parser(name, help=what)
        sp.add_argument("graph", help="edge-list file, or - for stdin")
        solver_opts(sp)
        out_opts(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("check-rdf", help="check a labelling file against a graph")
    sp.add_argument("graph")
    sp.add_argument("rdf", help="file holding one line of 0/1/2 digits")
    out_opts(sp)
    sp.set_defaults(func=cmd_check_rdf)

    sp = sub.add_parser("construct", help="build one of the explicit RDF constructions")
    sp.add_argument("name", choices=tuple(CONSTRUCTIONS))
    sp.add_argument("params", nargs="*", help="integers plus 'path' or 'cycle' where the family needs it")
    sp.add_argument("--graph", help="base graph for the Mycielskian constructions")
    sp.add_argument("--rdf", help="RDF of the base graph (default: computed)")
    sp.add_argument("--m", type=_positive, default=1, help="Mycielskian order for mu_m")
    sp.add_argument("--as-printed", action="store_true", help="use the literal layer set for mu_m")
    solver_opts(sp)
    out_opts(sp)
    sp.set_defaults(func=cmd_construct)

    d = VerifyConfig()
    sp = sub.add_parser("verify", help="run the verification suite and write its report")
    sp.add_argument("--seed", type=int, default=d.seed, help=f"random corpus seed (default {d.seed})")
    sp.add_argument("--max-n", type=_positive, default=d.exact_cap,
                    help=f"largest graph solved exactly (default {d.exact_cap})")
    sp.add_argument("--naive-cap", type=_nonneg, default=d.naive_cap,
                    help=f"largest graph cross-checked by the 3^n oracle (default {d.naive_cap})")
    sp.add_argument("--time-limit-s", type=_seconds, default=d.time_limit_s,
                    help=f"per-instance time limit (default {d.time_limit_s:g})")
    sp.add_argument("--witness-budget", type=_positive, default=d.witness_budget,
                    help=f"max optimal RDFs enumerated per graph (default {d.witness_budget})")
    sp.add_argument("--m", type=_positive, default=d.mu_order, help=f"largest Mycielskian order (default {d.mu_order})")
    sp.add_argument("--random-count", type=_nonneg, default=d.random_count,
                    help=f"number of random graphs (default {d.random_count})")
    sp.add_argument("--jobs", type=_positive, default=d.jobs, help="worker processes (default 1)")
    out_opts(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"romanmyc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"romanmyc {args.command}: refused: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except SolverTimeout as exc:
        print(f"romanmyc {args.command}: timeout: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
