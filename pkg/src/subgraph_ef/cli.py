"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 LP infeasible/unbounded,
3 enumeration cap exceeded, 4 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import constructions as ef
from .errors import EFError, InputError, ScaleError
from .graph import Graph, enumerate_forests, enumerate_spanning_forests, sorted_edges
from .lp import Solver
from .matroid import CountMatroidSpec, enumerate_independent_sets, load_spec, sparsity_spec
from .polyhedra import as_ef, from_json, to_json, to_lptext
from .rational import format_rational, parse_rational
from .verification import SUITES, enumerate_subgraph_vertices, run_suite

EXIT_OK, EXIT_CHECK, EXIT_LP, EXIT_SCALE, EXIT_USAGE = 0, 1, 2, 3, 4

FORMULATIONS = (
    "subgraph", "face", "nonempty-balas", "nonempty-outer", "nonempty-from-forest",
    "forest-martin", "forest-edmonds", "count-restricted", "count-general",
)
ENUMERATIONS = ("forests", "spanning-forests", "independent-sets", "subgraph-vertices", "nonempty-vertices")


class UsageError(EFError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- file formats -------------------------------------------------------------

def parse_graph(text: str, source: str = "<graph>") -> Graph:
    """``n m`` header, then m lines ``u v`` with 0 <= u, v < n."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise InputError(f"{source}: empty graph file")
    lineno, header = lines[0]
    try:
        n, m = map(int, header.split())
    except ValueError:
        raise InputError(f"{source}:{lineno}: expected header 'n m', got {header!r}") from None
    if n < 0 or m < 0:
        raise InputError(f"{source}:{lineno}: negative counts")
    pairs = []
    for lineno, line in lines[1:]:
        parts = line.split()
        try:
            u, v = map(int, parts)
        except ValueError:
            raise InputError(f"{source}:{lineno}: expected 'u v', got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"{source}:{lineno}: node out of range 0..{n - 1}")
        if u == v:
            raise InputError(f"{source}:{lineno}: loop at node {u}")
        pairs.append((u, v))
    if len(pairs) != m:
        raise InputError(f"{source}: header announces {m} edges, found {len(pairs)}")
    return Graph.from_edges(pairs, nodes=range(n))


def parse_objective(text: str, source: str = "<objective>") -> dict:
    """Lines ``var value`` with exact rationals; ``#`` starts a comment line."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"{source}:{lineno}: expected 'var value', got {line!r}")
        try:
            out[parts[0]] = parse_rational(parts[1])
        except InputError as exc:
            raise InputError(f"{source}:{lineno}: {exc}") from None
    return out


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path), path)


def _load_spec(G: Graph, path: str | None, required: bool) -> CountMatroidSpec | None:
    if path is None:
        if required:
            raise UsageError("this formulation needs a matroid spec file")
        return None
    return load_spec(G, _read(path))


def _parse_nodes(G: Graph, text: str | None) -> list:
    if not text:
        raise UsageError("face needs --nodes")
    by_name = {str(v): v for v in G.nodes}
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok not in by_name:
            raise InputError(f"unknown node {tok!r}")
        out.append(by_name[tok])
    return out


def build_formulation(name: str, G: Graph, spec: CountMatroidSpec | None = None, nodes=None):
    if name == "subgraph":
        return ef.subgraph_system(G)
    if name == "face":
        return ef.face_system(G, nodes)
    if name == "nonempty-balas":
        return ef.nonempty_balas_ef(G)
    if name == "nonempty-outer":
        return as_ef(ef.nonempty_outer_description(G))
    if name == "nonempty-from-forest":
        return ef.nonempty_ef_from_forest_ef(G, ef.martin_forest_ef(G))
    if name == "forest-martin":
        return ef.martin_forest_ef(G)
    if name == "forest-edmonds":
        return as_ef(ef.edmonds_forest_system(G))
    if name == "count-restricted":
        return ef.count_matroid_ef_restricted(spec)
    if name == "count-general":
        return ef.count_matroid_ef_general(spec)
    raise UsageError(f"unknown formulation {name!r}")


def _formulation_from_args(name, graph, spec_path, nodes_text):
    if name not in FORMULATIONS:
        raise UsageError(f"unknown formulation {name!r}; choose from {', '.join(FORMULATIONS)}")
    G = _load_graph(graph)
    spec = _load_spec(G, spec_path, name.startswith("count-"))
    nodes = _parse_nodes(G, nodes_text) if name == "face" else None
    return build_formulation(name, G, spec, nodes)


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands -------------------------------------------------------------------

def cmd_construct(args) -> int:
    f = _formulation_from_args(args.formulation, args.graph, args.spec, args.nodes)
    text = to_json(f) + "\n" if args.format == "json" else to_lptext(f)
    _emit(text, args.output)
    print(f"{args.formulation}: {f.summary()}", file=sys.stderr)
    return EXIT_OK


def cmd_optimize(args) -> int:
    target = args.target
    if len(target) == 1 and target[0].endswith(".json"):
        f = from_json(_read(target[0]))
    elif 2 <= len(target) <= 3:
        f = _formulation_from_args(target[0], target[1], target[2] if len(target) == 3 else None, args.nodes)
    else:
        raise UsageError("optimize takes SYSTEM.json or FORMULATION GRAPH [SPEC]")
    objective = parse_objective(_read(args.objective), args.objective)
    proj = set(f.projection)
    unknown = [v for v in objective if v not in proj]
    if unknown:
        raise InputError(f"objective names non-projection variables: {unknown}")
    sign = -1 if args.minimize else 1
    out = Solver(f.system).maximize({v: sign * c for v, c in objective.items()})
    if not out.optimal:
        status = out.status.value
        if args.minimize and status == "unbounded":
            status = "unbounded (below)"
        print(f"status {status}")
        return EXIT_LP
    lines = [f"status {out.status.value}", f"value {format_rational(sign * out.value)}"]
    point = dict(zip(f.system.variables, out.point))
    lines.extend(f"{v} {format_rational(point[v])}" for v in f.projection)
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    G = _load_graph(args.graph)
    spec = _load_spec(G, args.spec, False)
    report = run_suite(args.suite, G, spec, seed=args.seed, trials=args.trials, k=args.k)
    text = report.to_json() + "\n" if args.format == "json" else report.to_text() + "\n"
    _emit(text, args.output)
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_enumerate(args) -> int:
    G = _load_graph(args.graph)
    lines = []
    if args.what in ("forests", "spanning-forests", "independent-sets"):
        if args.what == "forests":
            sets = enumerate_forests(G)
        elif args.what == "spanning-forests":
            sets = enumerate_spanning_forests(G)
        else:
            spec = _load_spec(G, args.spec, False) or sparsity_spec(G, 1, 1)
            sets = enumerate_independent_sets(spec)
        keyed = sorted((tuple(G.edge_position(e) for e in sorted_edges(G, F)), F) for F in sets)
        for _, F in keyed:
            lines.append("{" + ", ".join(sorted_edges(G, F)) + "}")
        count = len(keyed)
    else:
        mode = "all" if args.what == "subgraph-vertices" else "nonempty"
        vs = enumerate_subgraph_vertices(G, mode)
        lines.append("# " + " ".join(vs.variables))
        lines.extend(" ".join(format_rational(x) for x in p) for p in vs)
        count = len(vs)
    lines.append(f"count {count}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subgraph-ef", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a formulation and write it out")
    c.add_argument("formulation", choices=FORMULATIONS)
    c.add_argument("graph")
    c.add_argument("spec", nargs="?", help="matroid spec JSON (count-* formulations)")
    c.add_argument("--nodes", help="comma separated node ids (face)")
    c.add_argument("--format", choices=("json", "lptext"), default="json")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    o = sub.add_parser("optimize", help="maximize an objective over a formulation")
    o.add_argument("target", nargs="+", help="SYSTEM.json, or FORMULATION GRAPH [SPEC]")
    o.add_argument("-c", "--objective", required=True, help="file of 'var value' lines")
    o.add_argument("--nodes")
    o.add_argument("--minimize", action="store_true")
    o.add_argument("-o", "--output")
    o.set_defaults(func=cmd_optimize)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("graph")
    v.add_argument("spec", nargs="?", help="matroid spec JSON; defaults to the graphic matroid")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--k", type=int, help="nash-williams: check only this k")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", help="list combinatorial objects")
    e.add_argument("what", choices=ENUMERATIONS)
    e.add_argument("graph")
    e.add_argument("spec", nargs="?")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScaleError as exc:
        print(f"scale error: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except EFError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
