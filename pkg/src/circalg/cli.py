"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algebra import hilbert_function
from .corpus import builtin_corpus, random_gain_graphs, random_gains, random_orientation
from .enumeration import (
    DEFAULT_MAX_EDGES,
    SizeLimitError,
    enumerate_cycles,
    enumerate_odd_circle_pseudoforests,
    enumerate_pseudoforests,
    enumerate_spanning_forests,
    even_activity_profile,
    forest_activity_profile,
)
from .graphs import (
    GainAssignment,
    Multigraph,
    Orientation,
    directed_incidence,
    gain_incidence,
    graph_from_json,
    loads_graph,
    named_graph,
    undirected_incidence,
)
from .linalg import ExactMatrix
from .matroid import (
    DEFAULT_ORIENTATION_CAP,
    distinct_prime_gains,
    orientation_independent_bruteforce,
    orientation_independent_criterion,
)
from .verify import MISMATCH, verify_1, verify_2, verify_A, verify_B, verify_main

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(ValueError):
    pass


@dataclass
class Instance:
    graph: Multigraph | None = None
    orientation: Orientation | None = None
    gains: GainAssignment | None = None
    matrix: ExactMatrix | None = None


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"bad integer list {text!r}") from exc


def _read_instance(args) -> Instance:
    sources = [s for s in (args.input, args.stdin or None, args.named) if s]
    if len(sources) > 1:
        raise InputError("give at most one of --input, --stdin, --named")
    if args.named:
        try:
            inst = Instance(graph=named_graph(args.named))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    elif args.input or args.stdin:
        try:
            text = sys.stdin.read() if args.stdin else Path(args.input).read_text()
        except OSError as exc:
            raise InputError(str(exc)) from exc
        try:
            stripped = text.lstrip()
            obj = json.loads(text) if stripped.startswith("{") else None
            if obj is not None and "entries" in obj:
                return _apply_overrides(Instance(matrix=ExactMatrix.from_json(obj)), args)
            G, sigma, gamma = graph_from_json(obj) if obj is not None else loads_graph(text)
        except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse input: {exc}") from exc
        inst = Instance(G, sigma, gamma)
    else:
        return Instance()
    return _apply_overrides(inst, args)


def _apply_overrides(inst: Instance, args) -> Instance:
    if inst.graph is None:
        return inst
    m = inst.graph.num_edges
    try:
        if getattr(args, "gains", None):
            inst.gains = GainAssignment(tuple(Fraction(x) for x in args.gains.split(",")))
        if getattr(args, "flips", None):
            inst.orientation = Orientation(tuple(x.strip() in ("1", "true", "t") for x in args.flips.split(",")))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc
    if inst.orientation is None:
        inst.orientation = Orientation.default(m)
    if len(inst.orientation) != m or (inst.gains is not None and len(inst.gains) != m):
        raise InputError("gain/flip count does not match the number of edges")
    return inst


def _require_graph(inst: Instance) -> Instance:
    if inst.graph is None:
        raise InputError("this command needs a graph (--input, --stdin or --named)")
    return inst


def _ordering(args, m: int):
    if not args.ordering:
        return None
    order = _parse_ints(args.ordering)
    if sorted(order) != list(range(m)):
        raise InputError(f"--ordering must be a permutation of 0..{m - 1}")
    return order


def _emit(args, payload: dict, table: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(table)


def _matrix_for(inst: Instance, kind: str) -> ExactMatrix:
    if inst.matrix is not None:
        return inst.matrix
    G = inst.graph
    if kind == "directed":
        return directed_incidence(G, inst.orientation)
    if kind == "undirected":
        return undirected_incidence(G)
    if inst.gains is None:
        raise InputError("--kind gain needs gains (in the input or via --gains)")
    return gain_incidence(G, inst.orientation, inst.gains)


def _check_cap(inst: Instance, cap: int):
    m = inst.matrix.cols if inst.matrix is not None else inst.graph.num_edges
    if m > cap:
        raise SizeLimitError(f"{m} edges exceeds --max-edges {cap}")


# -- commands -------------------------------------------------------------------


def cmd_hilbert(args) -> int:
    inst = _read_instance(args)
    if inst.graph is None and inst.matrix is None:
        raise InputError("hilbert needs a graph or matrix input")
    _check_cap(inst, args.max_edges)
    hf = hilbert_function(_matrix_for(inst, args.kind))
    _emit(args, {"kind": args.kind if inst.matrix is None else "matrix", **hf.to_json()}, str(hf))
    return EXIT_OK


def cmd_count(args) -> int:
    inst = _require_graph(_read_instance(args))
    G = inst.graph
    _check_cap(inst, args.max_edges)
    ordering = _ordering(args, G.num_edges)
    what = args.what
    profile = None
    if what == "forests":
        n = sum(1 for _ in enumerate_spanning_forests(G, args.max_edges))
        if args.profile:
            profile = forest_activity_profile(G, ordering, args.max_edges)
    elif what == "odd-pseudoforests":
        n = sum(1 for _ in enumerate_odd_circle_pseudoforests(G, args.max_edges))
        if args.profile:
            profile = even_activity_profile(G, ordering, args.max_edges)
    elif what == "pseudoforests":
        n = sum(1 for _ in enumerate_pseudoforests(G, args.max_edges))
    else:
        n = len(enumerate_cycles(G, max_edges=args.max_edges))
    payload = {"what": what, "count": n}
    table = str(n)
    if profile is not None:
        payload["profile"] = profile.to_json()
        payload["graded"] = list(profile.graded)
        table += "\nactivity " + " ".join(f"{k}:{v}" for k, v in profile.counts.items())
        table += "\ngraded   " + " ".join(map(str, profile.graded))
    _emit(args, payload, table)
    return EXIT_OK


def cmd_orient_check(args) -> int:
    inst = _require_graph(_read_instance(args))
    if inst.gains is None:
        raise InputError("orient-check needs gains (in the input or via --gains)")
    _check_cap(inst, args.max_edges)
    crit = orientation_independent_criterion(inst.graph, inst.gains)
    payload = {"criterion": crit.to_json()}
    line = crit.describe()
    if inst.graph.num_edges <= min(args.max_edges, DEFAULT_ORIENTATION_CAP):
        brute = orientation_independent_bruteforce(inst.graph, inst.gains, inst.orientation)
        payload["brute_force"] = brute.to_json()
        agree = brute.independent == crit.independent
        payload["agree"] = agree
        if crit.independent:
            line = line[:-1] + ("; brute force agrees)" if agree else "; BRUTE FORCE DISAGREES)")
        else:
            line += "; brute force agrees" if agree else "; BRUTE FORCE DISAGREES"
        code = EXIT_OK if agree else EXIT_MISMATCH
    else:
        code = EXIT_OK
    _emit(args, payload, line)
    return code


# verification tasks are (theorem, name, callable-args) triples so that they
# can be shipped to worker processes


def _run_task(task):
    theorem, name, payload = task
    if theorem == "A":
        G, sigma, ordering = payload
        return verify_A(G, sigma, ordering, name=name)
    if theorem == "B":
        A, ordering = payload
        return verify_B(A, ordering, name=name)
    if theorem == "1":
        G, ordering = payload
        return verify_1(G, ordering, name=name)
    if theorem == "2":
        G, gamma, sigma = payload
        return verify_2(G, gamma, sigma, name=name)
    G, gamma = payload
    return verify_main(G, gamma, name=name)


def _load_corpus(args):
    if args.corpus == "builtin":
        return [(e.name, e.graph, None, None) for e in builtin_corpus()]
    try:
        data = json.loads(Path(args.corpus).read_text())
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read corpus {args.corpus}: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("graphs", [])
    out = []
    for i, obj in enumerate(data):
        try:
            G, sigma, gamma = graph_from_json(obj)
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"corpus entry {i}: {exc}") from exc
        out.append((obj.get("name", f"g{i:04d}"), G, sigma, gamma))
    return out


def _verify_tasks(args, theorem: str) -> list:
    inst = _read_instance(args)
    rng = random.Random(args.seed)
    if inst.graph is not None or inst.matrix is not None:
        _check_cap(inst, args.max_edges)
        entries = [("input", inst.graph, inst.orientation, inst.gains)] if inst.graph else []
        if inst.matrix is not None:
            if theorem not in ("B", "all"):
                raise InputError("matrix input only supports 'verify B'")
            return [("B", "input", (inst.matrix, None))]
    else:
        entries = _load_corpus(args)
        for name, G, _, _ in entries:
            if G.num_edges > args.max_edges:
                raise SizeLimitError(f"corpus graph {name} has {G.num_edges} edges > --max-edges {args.max_edges}")
    tasks = []
    wanted = ["A", "B", "1", "2", "main"] if theorem == "all" else [theorem]
    for th in wanted:
        for name, G, sigma, gamma in entries:
            m = G.num_edges
            ordering = _ordering(args, m) if name == "input" else None
            if th == "A":
                if name == "input":
                    tasks.append(("A", name, (G, sigma, ordering)))
                else:
                    for r in range(3):
                        tasks.append(("A", f"{name}/o{r}", (G, random_orientation(rng, m), None)))
            elif th == "B":
                tasks.append(("B", f"{name}/directed", (directed_incidence(G, sigma), ordering)))
                tasks.append(("B", f"{name}/undirected", (undirected_incidence(G), ordering)))
                g = gamma or random_gains(rng, m)
                tasks.append(("B", f"{name}/gain", (gain_incidence(G, sigma, g), ordering)))
            elif th == "1":
                tasks.append(("1", name, (G, ordering)))
            elif th == "2":
                if m > DEFAULT_ORIENTATION_CAP:
                    continue
                tasks.append(("2", name, (G, gamma or distinct_prime_gains(m), sigma)))
            elif th == "main":
                if m > DEFAULT_ORIENTATION_CAP:
                    continue
                tasks.append(("main", name, (G, gamma or random_gains(rng, m))))
        if th == "main" and inst.graph is None:
            for i, (G, g) in enumerate(random_gain_graphs(args.seed, args.trials)):
                tasks.append(("main", f"random-{i:04d}", (G, g)))
    return tasks


def cmd_verify(args) -> int:
    tasks = _verify_tasks(args, args.theorem)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_run_task, tasks, chunksize=8))
    else:
        records = [_run_task(t) for t in tasks]
    order = {"A": 0, "B": 1, "1": 2, "2": 3, "main": 4}
    records.sort(key=lambda r: (order[r.theorem], r.name))
    mismatches = sum(r.status == MISMATCH for r in records)
    if args.format == "json":
        print(json.dumps(
            {"records": [r.to_json() for r in records], "mismatches": mismatches, "seed": args.seed},
            sort_keys=True,
        ))
    else:
        for r in records:
            print(f"{r.theorem:<5} {r.name:<28} {r.status}")
        counts: dict[str, int] = {}
        for r in records:
            counts[r.status] = counts.get(r.status, 0) + 1
        print(f"{len(records)} records: " + ", ".join(f"{v} {k}" for k, v in sorted(counts.items())))
    return EXIT_MISMATCH if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("input")
    src.add_argument("--input", metavar="PATH", help="graph JSON, edge list, or matrix JSON")
    src.add_argument("--stdin", action="store_true", help="read the input from standard input")
    src.add_argument("--named", metavar="NAME", help="built-in graph: K3, K4, C4, C5, figure-eight, handcuff, bouquet")
    src.add_argument("--gains", help="comma-separated gains, e.g. 1,2,2 or 1/2,3")
    src.add_argument("--flips", help="comma-separated 0/1 orientation flips")
    common.add_argument("--kind", choices=("directed", "undirected", "gain"), default="directed")
    common.add_argument("--ordering", help="edge ordering for activities, e.g. 2,0,1")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    common.add_argument("--format", choices=("table", "json"), default="table")

    parser = argparse.ArgumentParser(prog="circalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", parents=[common], help="graded dimensions of a circulation algebra")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("count", parents=[common], help="count forests, pseudoforests or cycles")
    p.add_argument("what", choices=("forests", "pseudoforests", "odd-pseudoforests", "cycles"))
    p.add_argument("--profile", action="store_true", help="also print the activity profile")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("orient-check", parents=[common], help="is the gain matroid orientation-independent?")
    p.set_defaults(func=cmd_orient_check)

    p = sub.add_parser("verify", parents=[common], help="cross-check dimension theorems")
    p.add_argument("theorem", choices=("A", "B", "1", "2", "main", "all"))
    p.add_argument("--corpus", default="builtin", help="'builtin' or a JSON file with a list of graphs")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_edges <= 0 or args.trials < 0:
        parser.error("--max-edges must be positive and --trials nonnegative")
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
