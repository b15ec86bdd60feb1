"""Command-line front door.

Subcommands: curvature, classify, verify, spectrum, census, serve.  Input
graphs come from a file, an inline adjacency string, or a named family.
Exit codes: 0 success, 1 computation failure, 2 usage error, 3 failed
verification sweep.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bakry_emery import INFINITE_DIMENSION, CurvatureQuery, be_curvature
from .classification import (
    NotCubicError,
    classify_cubic,
    enumerate_cubic_two_balls,
    verify_equivalence,
)
from .graphs import AdjacencyParseError, Graph, GraphFamily, generate, parse_adjacency
from .ollivier import kappa, kappa_lly
from .spectral import laplacian_spectrum

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2
EXIT_SWEEP_FAILED = 3

NOTIONS = (
    "ollivier",
    "ollivier_idleness",
    "lly",
    "bakry_emery",
    "bakry_emery_dimension",
    "bakry_emery_sign",
)


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_COMPUTATION):
        super().__init__(message)
        self.code = code


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--file", help="path to a file holding the adjacency text")
    parser.add_argument("--adjacency", help="inline adjacency text, e.g. [[0,1],[1,0]]")
    parser.add_argument(
        "--family",
        choices=("prism", "mobius", "cycle", "ladder", "complete",
                 "complete_bipartite", "petersen"),
        help="generate a named family instead of reading a matrix",
    )
    parser.add_argument("--n", type=int, help="family size parameter")


def _load_graph(args) -> Graph:
    sources = [args.file is not None, args.adjacency is not None, args.family is not None]
    if sum(sources) != 1:
        raise CliError(
            "exactly one of --file, --adjacency, --family must be given", EXIT_USAGE
        )
    if args.n is not None and args.family is None:
        raise CliError("--n only applies together with --family", EXIT_USAGE)
    if args.family is not None:
        try:
            return generate(GraphFamily(args.family, args.n))
        except ValueError as exc:
            raise CliError(str(exc), EXIT_USAGE)
    text = args.adjacency
    if args.file is not None:
        try:
            with open(args.file, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc}")
    try:
        return parse_adjacency(text)
    except AdjacencyParseError as exc:
        raise CliError(f"invalid adjacency: {exc}")


def _parse_exact(text: str, name: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise CliError(f"{name} must be a fraction like 1/4 or a decimal", EXIT_USAGE)
    if value.denominator > 10**6:
        raise CliError(f"{name} needs a denominator of at most 10^6", EXIT_USAGE)
    return value


def _edge_values(g: Graph, notion: str, idleness: Fraction) -> dict:
    values = {}
    for x, y in g.edges:
        if notion == "lly":
            val = kappa_lly(g, x, y)
        else:
            val = kappa(g, x, y, idleness).kappa
        values[f"{x}-{y}"] = {"fraction": str(val), "decimal": round(float(val), 3)}
    return values


def _vertex_values(g: Graph, notion: str, dimension) -> dict:
    values = {}
    for v in range(g.n):
        res = be_curvature(g, CurvatureQuery(v, dimension))
        if notion == "bakry_emery_sign":
            values[str(v)] = {"sign": res.sign}
        else:
            values[str(v)] = {"decimal": round(res.curvature, 3), "sign": res.sign}
    return values


def _cmd_curvature(args) -> int:
    g = _load_graph(args)
    notion = args.notion
    idleness = Fraction(0)
    dimension = INFINITE_DIMENSION
    if notion == "ollivier_idleness":
        if args.idleness is None:
            raise CliError("--idleness is required for ollivier_idleness", EXIT_USAGE)
        idleness = _parse_exact(args.idleness, "--idleness")
        if not 0 <= idleness <= 1:
            raise CliError("--idleness must lie in [0, 1]", EXIT_USAGE)
    elif args.idleness is not None:
        raise CliError("--idleness only applies to ollivier_idleness", EXIT_USAGE)
    if notion == "bakry_emery_dimension":
        if args.dimension is None:
            raise CliError("--dimension is required for bakry_emery_dimension", EXIT_USAGE)
        if args.dimension.strip().lower() in ("inf", "infinity"):
            dimension = INFINITE_DIMENSION
        else:
            dimension = _parse_exact(args.dimension, "--dimension")
            if dimension <= 0:
                raise CliError("--dimension must be positive", EXIT_USAGE)
    elif args.dimension is not None:
        raise CliError("--dimension only applies to bakry_emery_dimension", EXIT_USAGE)

    if notion in ("ollivier", "ollivier_idleness", "lly"):
        values = _edge_values(g, notion, idleness)
        kind = "edge"
    else:
        values = _vertex_values(g, notion, dimension)
        kind = "vertex"
    if args.format == "json":
        print(json.dumps({"notion": notion, "kind": kind, "values": values}))
    else:
        label = "edge" if kind == "edge" else "vertex"
        for key, value in values.items():
            if "fraction" in value:
                print(f"{label} {key}: {value['fraction']} ({value['decimal']:.3f})")
            elif "decimal" in value:
                print(f"{label} {key}: {value['decimal']:.3f} ({value['sign']})")
            else:
                print(f"{label} {key}: {value['sign']}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    g = _load_graph(args)
    try:
        verdict = classify_cubic(g)
    except NotCubicError as exc:
        raise CliError(str(exc))
    if args.format == "json":
        body: dict = {"verdict": verdict.kind}
        if verdict.n is not None:
            body["n"] = verdict.n
            body["name"] = verdict.family_name()
        if verdict.witness_edge is not None:
            body["witness"] = {
                "edge": list(verdict.witness_edge),
                "edge_kappa0": str(verdict.witness_edge_kappa),
                "vertex": verdict.witness_vertex,
                "vertex_curvature": verdict.witness_vertex_curvature,
            }
        print(json.dumps(body))
    elif verdict.kind == "not_nonnegatively_curved":
        x, y = verdict.witness_edge
        print(
            "not nonnegatively curved: "
            f"edge {x}-{y} has kappa0 {verdict.witness_edge_kappa}, "
            f"vertex {verdict.witness_vertex} has curvature "
            f"{verdict.witness_vertex_curvature:.6f}"
        )
    else:
        print(f"{verdict.kind} n={verdict.n} ({verdict.family_name()})")
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        report = verify_equivalence(args.max_n)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "classes": report.class_count,
                    "agreement": report.agreement,
                    "positive_set": list(report.positive_names),
                    "girth_lemma_ok": report.girth_lemma_ok,
                    "max_pencil_gap": report.max_pencil_gap,
                    "certificates_checked": report.certificates_checked,
                }
            )
        )
    else:
        print(report.summary())
        if not report.agreement:
            for row in report.rows:
                if not row.agreement:
                    print(
                        f"  disagreement on {row.n}-vertex class {row.index}: "
                        f"cd={row.cd_nonnegative} "
                        f"ollivier={row.ollivier_nonnegative} "
                        f"recognized={row.recognized.kind}"
                    )
    return EXIT_OK if report.agreement and report.girth_lemma_ok else EXIT_SWEEP_FAILED


def _cmd_census(args) -> int:
    classes = enumerate_cubic_two_balls()
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "label": c.label,
                        "triangles": c.triangles,
                        "shell": [list(t) for t in c.shell_profile],
                        "curvature": round(c.curvature, 6),
                        "sign": c.sign,
                        "complete_cubic": c.is_complete_cubic,
                    }
                    for c in classes
                ]
            )
        )
        return EXIT_OK
    negatives = 0
    for c in classes:
        shell = ",".join("{" + "".join(str(v) for v in t) + "}" for t in c.shell_profile)
        flag = " NEGATIVE" if c.sign == "negative" else ""
        if c.sign == "negative":
            negatives += 1
        print(
            f"{c.label}: triangles={c.triangles} shell=[{shell or '-'}] "
            f"curvature={c.curvature:+.3f} ({c.sign}){flag}"
        )
    print(f"{len(classes)} classes, {negatives} negative")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    g = _load_graph(args)
    res = laplacian_spectrum(g)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "eigenvalues": [round(v, 9) for v in res.eigenvalues],
                    "lambda1": round(res.lambda1, 9) if res.lambda1 is not None else None,
                    "zero_multiplicity": res.zero_multiplicity,
                }
            )
        )
    else:
        print("eigenvalues:", " ".join(f"{v:.6f}" for v in res.eigenvalues))
        lam = "none" if res.lambda1 is None else f"{res.lambda1:.6f}"
        print(f"lambda1: {lam} (zero multiplicity {res.zero_multiplicity})")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import os

    import uvicorn

    os.environ["CURVKIT_SIZE_CAP"] = str(args.size_cap)
    if args.static_dir:
        os.environ["CURVKIT_STATIC_DIR"] = args.static_dir
    uvicorn.run(
        "curvkit.service:app",
        host=args.host,
        port=args.port,
        workers=args.workers,
        log_level="info",
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvkit",
        description="curvature computations on finite simple graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_curv = sub.add_parser("curvature", help="per-edge or per-vertex curvature")
    _add_input_flags(p_curv)
    p_curv.add_argument("--notion", choices=NOTIONS, default="ollivier")
    p_curv.add_argument("--idleness", help="idleness for ollivier_idleness (e.g. 1/4)")
    p_curv.add_argument("--dimension", help="dimension for bakry_emery_dimension or 'inf'")
    p_curv.add_argument("--format", choices=("table", "json"), default="table")
    p_curv.set_defaults(func=_cmd_curvature)

    p_cls = sub.add_parser("classify", help="recognize prisms and Moebius ladders")
    _add_input_flags(p_cls)
    p_cls.add_argument("--format", choices=("table", "json"), default="table")
    p_cls.set_defaults(func=_cmd_classify)

    p_ver = sub.add_parser("verify", help="three-way equivalence sweep over cubic classes")
    p_ver.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_ver.add_argument("--format", choices=("table", "json"), default="table")
    p_ver.set_defaults(func=_cmd_verify)

    p_cen = sub.add_parser("census", help="cubic 2-ball census with centre curvatures")
    p_cen.add_argument("--format", choices=("table", "json"), default="table")
    p_cen.set_defaults(func=_cmd_census)

    p_spec = sub.add_parser("spectrum", help="Laplacian eigenvalues and spectral gap")
    _add_input_flags(p_spec)
    p_spec.add_argument("--format", choices=("table", "json"), default="table")
    p_spec.set_defaults(func=_cmd_spectrum)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.add_argument("--size-cap", type=int, default=64, dest="size_cap")
    p_srv.add_argument("--workers", type=int, default=1)
    p_srv.add_argument("--static-dir", default=None, dest="static_dir")
    p_srv.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, RuntimeError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
