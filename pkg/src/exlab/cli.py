"""Command-line surface: invariants, duality, witness, and yan subcommands.

Every command renders a human table on stdout (or machine JSON with
``--format json``) and can additionally write the JSON report to a file.
Reports are deterministic: identical configuration and seed produce
byte-identical JSON.  Exit codes: 0 success, 2 parse error, 3 solver
failure, 4 violated precondition, 5 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .cliques import independence_number
from .corners import Behavior
from .ep import (
    post_quantum_witness,
    sample_quantum_self_duality,
    verify_antiblocking_dualities,
    yan_construction,
)
from .errors import ExlabError, ParseError, PreconditionError, ResourceLimitError, SolverError
from .graphs import Graph, complement, named_graph, parse_edge_list, parse_graph6, to_graph6
from .lp import fractional_packing
from .sdp import SdpTolerances, lovasz_theta

SCHEMA_VERSION = "1"
SEED_ENV_VAR = "EXLAB_SEED"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SOLVER = 3
EXIT_PRECONDITION = 4
EXIT_RESOURCE = 5


def _fmt_float(x: float) -> str:
    return format(float(x), ".9g")


def _round9(value):
    """Normalize floats to 9 significant digits, recursively."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return float(_fmt_float(value))
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _round9(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round9(v) for v in value]
    return value


def _parse_number_list(text: str, kind: str) -> list[str]:
    items = [t for t in text.replace(",", " ").split() if t]
    if not items:
        raise ParseError(f"empty {kind} specification")
    return items


def _load_weights(spec: str | None, n: int) -> list[Fraction]:
    if spec is None:
        return [Fraction(1)] * n
    text = spec
    if "," not in spec and not _looks_numeric(spec):
        path = Path(spec)
        if not path.exists():
            raise ParseError(f"weights file not found: {spec}")
        text = path.read_text()
    items = _parse_number_list(text, "weights")
    try:
        weights = [Fraction(t) for t in items]
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid weight entry in {spec!r}") from None
    if len(weights) != n:
        raise ParseError(f"{len(weights)} weights given for {n} vertices")
    if any(w < 0 for w in weights):
        raise ParseError("weights must be nonnegative")
    return weights


def _looks_numeric(token: str) -> bool:
    try:
        Fraction(token)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def _load_behavior(spec: str, n: int) -> Behavior:
    if spec.startswith("uniform:"):
        try:
            value = float(spec.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"invalid uniform behavior {spec!r}") from None
        values = [value] * n
    else:
        text = spec
        if "," not in spec and not _looks_numeric(spec):
            path = Path(spec)
            if not path.exists():
                raise ParseError(f"behavior file not found: {spec}")
            text = path.read_text()
        items = _parse_number_list(text, "behavior")
        try:
            values = [float(Fraction(t)) for t in items]
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"invalid behavior entry in {spec!r}") from None
    if len(values) != n:
        raise ParseError(f"behavior has {len(values)} entries for {n} vertices")
    try:
        return Behavior(tuple(values))
    except PreconditionError as err:
        raise ParseError(str(err)) from None


def _resolve_graphs(args) -> list[tuple[str, Graph]]:
    sources = [s for s in (args.catalog, args.graph6, args.edge_list,
                           getattr(args, "each", None)) if s is not None]
    if len(sources) != 1:
        raise ParseError("exactly one of --catalog, --graph6, --edge-list, --each is required")
    if args.catalog is not None:
        return [(args.catalog, named_graph(args.catalog))]
    if args.graph6 is not None:
        return [(args.graph6, parse_graph6(args.graph6))]
    if args.edge_list is not None:
        path = Path(args.edge_list)
        if not path.exists():
            raise ParseError(f"edge-list file not found: {args.edge_list}")
        return [(args.edge_list, parse_edge_list(path.read_text()))]
    path = Path(args.each)
    if not path.exists():
        raise ParseError(f"batch file not found: {args.each}")
    out = []
    for lineno, line in enumerate(path.read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append((line, parse_graph6(line)))
        except ParseError as err:
            raise ParseError(f"{args.each}:{lineno}: {err}") from None
    if not out:
        raise ParseError(f"batch file {args.each} holds no graphs")
    return out


def _resolve_seed(args) -> int:
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return args.seed


def _resolve_tolerances(args) -> SdpTolerances:
    kwargs = {}
    for name in ("gap_tol", "feas_tol", "mem_tol", "orth_tol"):
        value = getattr(args, name)
        if value is not None:
            if value <= 0:
                raise ParseError(f"--{name.replace('_', '-')} must be positive")
            kwargs[name] = value
    return SdpTolerances(**kwargs)


# ---------------------------------------------------------------------------
# command result builders (shared by table and JSON output)

def _graph_summary(label: str, g: Graph) -> dict:
    return {"source": label, "vertices": g.n, "edges": g.edge_count,
            "graph6": to_graph6(g) if g.n <= 62 else None}


def _invariants_result(label: str, g: Graph, weights, tols: SdpTolerances) -> dict:
    alpha, witness = independence_number(g, weights)
    theta = lovasz_theta(g, weights, tols)
    alpha_star, optimizer = fractional_packing(g, weights)
    sandwich_ok = (float(alpha) - 1e-6 <= theta.value <= float(alpha_star) + 1e-6)
    return {
        "graph": _graph_summary(label, g),
        "weights": [str(w) for w in weights],
        "alpha": {"value": str(alpha), "witness": list(witness)},
        "theta": {
            "value": theta.value,
            "duality_gap": theta.solution.duality_gap,
            "constraint_residual": theta.solution.max_constraint_residual,
        },
        "alpha_star": {"value": str(alpha_star), "optimizer": [str(x) for x in optimizer]},
        "sandwich_ok": sandwich_ok,
    }


def _duality_result(label: str, g: Graph, sampled: int | None, seed: int,
                    tols: SdpTolerances) -> dict:
    report = verify_antiblocking_dualities(g)
    out = {
        "graph": _graph_summary(label, g),
        "abl_e1_complement_is_classical": {
            "holds": report.e1_complement_to_classical.holds,
            "separator": _fractions_or_none(report.e1_complement_to_classical.separator),
        },
        "abl_classical_complement_is_e1": {
            "holds": report.classical_complement_to_e1.holds,
            "separator": _fractions_or_none(report.classical_complement_to_e1.separator),
        },
    }
    if sampled is not None:
        sd = sample_quantum_self_duality(g, n_directions=sampled, seed=seed, tols=tols)
        tight = [r.tightness for r in sd.records if r.tightness is not None]
        out["quantum_sampled"] = {
            "directions": sd.n_directions,
            "seed": sd.seed,
            "max_cross_ep": sd.max_cross_ep,
            "passed": sd.passed,
            "errors": sum(1 for r in sd.records if r.error),
            "tightness_min": min(tight) if tight else None,
            "tightness_max": max(tight) if tight else None,
        }
    return out


def _fractions_or_none(vec) -> list[str] | None:
    return None if vec is None else [str(x) for x in vec]


def _witness_result(label: str, g: Graph, behavior: Behavior, tols: SdpTolerances) -> dict:
    report = post_quantum_witness(g, behavior, tols)
    out = report.to_dict()
    out["graph"] = _graph_summary(label, g)
    # edge overlaps are measured on the witness's own experiment graph
    out["realization"]["residuals"] = report.witness_realization.residuals(
        complement(g), report.witness)
    return out


def _yan_result(label: str, g: Graph) -> dict:
    yc = yan_construction(g)
    return {
        "graph": _graph_summary(label, g),
        "product": {
            "vertices": yc.product.n,
            "edges": yc.product.edge_count,
            "graph6": to_graph6(yc.product) if yc.product.n <= 62 else None,
            "edge_list": [[i, j] for i, j in yc.product.edges()],
        },
        "diagonal": list(yc.diagonal),
        "diagonal_is_clique": True,
    }


# ---------------------------------------------------------------------------
# table rendering

def _print_invariants(result: dict) -> None:
    g = result["graph"]
    print(f"graph {g['source']}: {g['vertices']} vertices, {g['edges']} edges")
    alpha = result["alpha"]
    theta = result["theta"]
    alpha_star = result["alpha_star"]
    print(f"  alpha       = {alpha['value']}  (witness {alpha['witness']})")
    print(f"  theta       = {_fmt_float(theta['value'])}  "
          f"(gap {_fmt_float(theta['duality_gap'])})")
    print(f"  alpha_star  = {alpha_star['value']}  "
          f"(optimizer [{', '.join(alpha_star['optimizer'])}])")
    print(f"  sandwich    : {'OK' if result['sandwich_ok'] else 'VIOLATED'}")


def _print_duality(result: dict) -> None:
    g = result["graph"]
    print(f"graph {g['source']}: {g['vertices']} vertices, {g['edges']} edges")
    first = result["abl_e1_complement_is_classical"]
    second = result["abl_classical_complement_is_e1"]
    print(f"  abl E1(comp) = NC : {'PASS' if first['holds'] else 'FAIL'}")
    print(f"  abl NC(comp) = E1 : {'PASS' if second['holds'] else 'FAIL'}")
    sampled = result.get("quantum_sampled")
    if sampled:
        print(f"  quantum sampled   : {sampled['directions']} directions, seed {sampled['seed']}")
        print(f"    max cross-EP    = {_fmt_float(sampled['max_cross_ep'])} "
              f"({'PASS' if sampled['passed'] else 'FAIL'})")
        if sampled["tightness_min"] is not None:
            print(f"    tightness range = [{_fmt_float(sampled['tightness_min'])}, "
                  f"{_fmt_float(sampled['tightness_max'])}]")


def _print_witness(result: dict) -> None:
    g = result["graph"]
    print(f"graph {g['source']}: {g['vertices']} vertices, {g['edges']} edges")
    print(f"  theta along target = {_fmt_float(result['theta_value'])}")
    print(f"  inner product      = {_fmt_float(result['inner_product'])}")
    print(f"  witness behavior   = [{', '.join(_fmt_float(x) for x in result['witness_behavior'])}]")
    print(f"  post-classical     : {'yes' if result['witness_is_post_classical'] else 'no'}")
    res = result["realization"]["residuals"]
    print(f"  realization        : edge overlap {_fmt_float(res['max_edge_overlap'])}, "
          f"behavior error {_fmt_float(res['max_behavior_error'])}")
    for claim in result["claims"]:
        print(f"  [{'ok' if claim['passed'] else 'FAIL'}] {claim['description']}")


def _print_yan(result: dict) -> None:
    g = result["graph"]
    product = result["product"]
    print(f"graph {g['source']}: {g['vertices']} vertices, {g['edges']} edges")
    print(f"  product vertices = {product['vertices']}")
    print(f"  product edges    = {product['edges']}")
    if product["graph6"] is not None:
        print(f"  product graph6   = {product['graph6']}")
    pairs = " ".join(f"{i}-{j}" for i, j in product["edge_list"])
    print(f"  product edge list: {pairs}")
    print(f"  diagonal         = {result['diagonal']}")
    print(f"  diagonal clique  : {'verified' if result['diagonal_is_clique'] else 'FAILED'}")


_PRINTERS = {
    "invariants": _print_invariants,
    "duality": _print_duality,
    "witness": _print_witness,
    "yan": _print_yan,
}


# ---------------------------------------------------------------------------
# argument parsing and dispatch

def _add_common(sub: argparse.ArgumentParser, batch: bool) -> None:
    sub.add_argument("--catalog", help="catalog graph name (C5, K3, empty4, path4, petersen)")
    sub.add_argument("--graph6", help="graph6 literal")
    sub.add_argument("--edge-list", help="path to an edge-list file")
    if batch:
        sub.add_argument("--each", help="path to a file of graph6 lines (one graph per line)")
    sub.add_argument("--seed", type=int, default=42,
                     help=f"RNG seed (default 42; {SEED_ENV_VAR} overrides)")
    sub.add_argument("--format", choices=("table", "json"), default="table",
                     help="stdout format")
    sub.add_argument("--json", metavar="PATH", help="also write the JSON report to PATH")
    for name in ("gap-tol", "feas-tol", "mem-tol", "orth-tol"):
        sub.add_argument(f"--{name}", type=float, default=None,
                         dest=name.replace("-", "_"), help=f"override {name.replace('-', '_')}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exlab",
        description="Correlation sets of exclusivity graphs: classical, quantum, "
                    "and single-copy exclusivity invariants and dualities.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("invariants", help="alpha, theta, alpha* and the sandwich verdict")
    _add_common(p, batch=True)
    p.add_argument("--weights", help="inline weights '1,2,1,...' or a file path")

    p = subs.add_parser("duality", help="exact anti-blocking dualities; optional quantum sampling")
    _add_common(p, batch=True)
    p.add_argument("--quantum-sampled", type=int, metavar="N",
                   help="also sample N seeded directions of the quantum self-duality")

    p = subs.add_parser("witness", help="post-quantum target: quantum witness and realization")
    _add_common(p, batch=False)
    p.add_argument("--behavior", required=True,
                   help="target behavior: '0.5,0.5,...', 'uniform:0.5', or a file path")

    p = subs.add_parser("yan", help="composite experiment with the complement graph")
    _add_common(p, batch=True)
    return parser


def _run(args) -> dict:
    seed = _resolve_seed(args)
    tols = _resolve_tolerances(args)
    graphs = _resolve_graphs(args)
    results = []
    for label, g in graphs:
        if args.command == "invariants":
            weights = _load_weights(args.weights, g.n)
            results.append(_invariants_result(label, g, weights, tols))
        elif args.command == "duality":
            results.append(_duality_result(label, g, args.quantum_sampled, seed, tols))
        elif args.command == "witness":
            behavior = _load_behavior(args.behavior, g.n)
            results.append(_witness_result(label, g, behavior, tols))
        else:
            results.append(_yan_result(label, g))
    return {
        "schema": SCHEMA_VERSION,
        "command": args.command,
        "seed": seed,
        "results": results,
    }


def _emit(payload: dict, args) -> None:
    payload = _round9(payload)
    text = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    if args.json:
        Path(args.json).write_text(text)
    if args.format == "json":
        sys.stdout.write(text)
    else:
        printer = _PRINTERS[payload["command"]]
        for result in payload["results"]:
            printer(result)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = _run(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except SolverError as err:
        print(f"solver error: {err}", file=sys.stderr)
        return EXIT_SOLVER
    except PreconditionError as err:
        print(f"precondition error: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceLimitError as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return EXIT_RESOURCE
    except ExlabError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_SOLVER
    _emit(payload, args)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
