"""Command-line front end. JSON on stdout (CSV for ``region``).

Exit codes: 0 ok, 1 contract violated, 2 bad input, 3 precondition failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import corpus
from .complex import (FaceLimitError, Graph, SimplicialComplex, clique_complex, cross_polytope,
                      f_polynomial, is_eulerian, is_flag, is_ghs, join, polygon, simplex,
                      simplex_boundary, subdivide_times, suspension)
from .constructions import (ConstructionError, OutsideConesError, cone_decompose,
                            paper_counterexample, realize_h4, region_csv, region_grid,
                            verify_counterexample)
from .coxeter import bfs_growth_oracle, growth_series, series_expand
from .polynomial import (IntPolynomial, charney_davis_quantity, gamma_from_h, h_from_f,
                         is_reciprocal, is_unimodal)
from .posets import (GradedPoset, NotCDExpressible, PosetSizeError, barycentric, cd_index,
                     face_poset, psi)
from .realroots import root_summary

EXIT_OK, EXIT_CONTRACT, EXIT_INPUT, EXIT_PRECONDITION = 0, 1, 2, 3


class InputError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


FACE_CAP_ENV = "GAMMACALC_MAX_FACES"

# ---------------------------------------------------------------------------
# Builder AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BuilderSpec:
    """Parsed builder node; ``args`` holds child specs, ``params`` the rest."""

    op: str
    params: tuple[tuple[str, Any], ...] = ()
    args: tuple["BuilderSpec", ...] = ()

    def param(self, key):
        return dict(self.params)[key]


# op -> (integer params with lower bounds, child keys)
_OPS = {
    "polygon": ({"m": 3}, ()),
    "cross": ({"n": 1}, ()),
    "simplex": ({"n": 0}, ()),
    "simplex_boundary": ({"n": 1}, ()),
    "paper": ({"m": 0}, ()),
    "join": ({}, ("args",)),
    "suspension": ({}, ("of",)),
    "sub": ({}, ("of",)),
    "barycentric": ({}, ("of",)),
    "clique": ({}, ()),
}


def _int_param(node: dict, key: str, lo: int) -> int:
    v = node.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < lo:
        raise InputError(f"op {node.get('op')!r}: {key!r} must be an integer >= {lo}")
    return v


def parse_builder(node: Any) -> BuilderSpec:
    if not isinstance(node, dict) or "op" not in node:
        raise InputError(f"builder node must be an object with 'op': {node!r}")
    op = node["op"]
    if op not in _OPS:
        raise InputError(f"unknown op {op!r}")
    ints, _ = _OPS[op]
    params = [(k, _int_param(node, k, lo)) for k, lo in ints.items()]
    children: list[BuilderSpec] = []
    if op == "join":
        args = node.get("args")
        if not isinstance(args, list) or len(args) != 2:
            raise InputError("join takes exactly two args")
        children = [parse_builder(a) for a in args]
    elif op in ("suspension", "sub", "barycentric"):
        children = [parse_builder(node.get("of"))]
    if op == "sub":
        edge = node.get("edge")
        if not (isinstance(edge, list) and len(edge) == 2 and all(isinstance(v, str) for v in edge)):
            raise InputError("sub needs 'edge': [label, label]")
        node = {"times": 1, **node}
        params += [("edge", tuple(edge)), ("times", _int_param(node, "times", 0))]
    if op == "clique":
        g = node.get("graph")
        try:
            params.append(("graph", Graph.from_json(g)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad graph: {exc}") from exc
    return BuilderSpec(op, tuple(params), tuple(children))


def build(spec: BuilderSpec) -> SimplicialComplex:
    op, p = spec.op, spec.param
    if op == "polygon":
        return polygon(p("m"))
    if op == "cross":
        return cross_polytope(p("n"))
    if op == "simplex":
        return simplex(p("n"))
    if op == "simplex_boundary":
        return simplex_boundary(p("n"))
    if op == "paper":
        return paper_counterexample(p("m"))
    if op == "clique":
        return clique_complex(p("graph"))
    kids = [build(a) for a in spec.args]
    if op == "join":
        return join(*kids)
    if op == "suspension":
        return suspension(kids[0])
    if op == "barycentric":
        return barycentric(kids[0])
    X = kids[0]
    edge = p("edge")
    if not X.has_face(edge) or edge[0] == edge[1]:
        raise InputError(f"edge {list(edge)} is not an edge of the complex")
    return subdivide_times(X, edge, p("times"))[0]


def _read_json(source: str) -> Any:
    """Inline JSON, ``-`` for stdin, or a path."""
    text = source
    if source == "-":
        text = sys.stdin.read()
    elif not source.lstrip().startswith(("{", "[")):
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc


def load_complex(source: str) -> SimplicialComplex:
    data = _read_json(source)
    if isinstance(data, dict) and "op" in data:
        return build(parse_builder(data))
    if isinstance(data, dict) and "facets" in data:
        try:
            return SimplicialComplex.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad complex: {exc}") from exc
    raise InputError("expected a builder spec or a complex {vertices, facets}")


def _parse_poly(source: str) -> IntPolynomial:
    data = _read_json(source)
    if not isinstance(data, list) or not data:
        raise InputError("polynomial must be a nonempty coefficient list")
    try:
        return IntPolynomial.from_json(data)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad coefficient: {exc}") from exc


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _h_of(X: SimplicialComplex) -> IntPolynomial:
    return h_from_f(f_polynomial(X), X.dim + 1)


def cmd_invariants(args) -> tuple[int, Any]:
    X = load_complex(args.input)
    f = f_polynomial(X)
    h = h_from_f(f, X.dim + 1)
    eulerian = X.is_pure() and is_eulerian(X)
    if args.require_gamma and not eulerian:
        raise PreconditionError("gamma requested for a non-Eulerian complex")
    gamma = gamma_from_h(h, X.dim + 1) if eulerian else None
    out = {
        "dim": X.dim,
        "vertices": len(X.vertices),
        "f": f.to_json(),
        "h": h.to_json(),
        "gamma": gamma.to_json() if gamma is not None else None,
        "flag": is_flag(X),
        "eulerian": eulerian,
        "ghs": is_ghs(X) if args.ghs else None,
        "unimodal": is_unimodal(h, X.dim + 1),
        "charney_davis": (charney_davis_quantity(h)
                          if eulerian and is_reciprocal(h) and (X.dim + 1) % 2 == 0 else None),
    }
    return EXIT_OK, out


def cmd_roots(args) -> tuple[int, Any]:
    if args.complex:
        p = _h_of(load_complex(args.input))
    else:
        p = _parse_poly(args.input)
    if p.degree < 1:
        raise InputError("need a polynomial of degree >= 1")
    out = {"polynomial": p.to_json(), **root_summary(p, args.tol, args.tie_tol)}
    return EXIT_OK, out


def cmd_paper(args) -> tuple[int, Any]:
    if args.m < 0:
        raise InputError("m must be nonnegative")
    report = verify_counterexample(args.m, with_ghs=args.ghs)
    ok = all(report.contracts().values())
    return (EXIT_OK if ok else EXIT_CONTRACT), report.to_json()


def cmd_realize(args) -> tuple[int, Any]:
    try:
        cc = cone_decompose(args.h1, args.h2) if (args.h1, args.h2) != (4, 6) else None
        X = realize_h4(args.h1, args.h2, check_ghs=args.ghs)
    except OutsideConesError as exc:
        raise PreconditionError(str(exc)) from exc
    except ConstructionError as exc:
        return EXIT_CONTRACT, {"error": str(exc)}
    h = _h_of(X)
    return EXIT_OK, {
        "complex": X.to_json(),
        "cone": None if cc is None else {"k": cc.k, "a": cc.a, "b": cc.b},
        "h": h.to_json(),
        "flag": is_flag(X),
        "eulerian": is_eulerian(X),
        "ghs": is_ghs(X) if args.ghs else None,
    }


def cmd_region(args) -> tuple[int, str]:
    if args.h1_max < 4 or args.h2_max < 4:
        raise PreconditionError("bounds must be at least 4")
    text = region_csv(region_grid(args.h1_max, args.h2_max))
    if args.output:
        Path(args.output).write_text(text)
        return EXIT_OK, {"rows": text.count("\n") - 1, "output": args.output}
    return EXIT_OK, text


def cmd_growth(args) -> tuple[int, Any]:
    X = load_complex(args.input)
    if args.n < 0:
        raise InputError("N must be nonnegative")
    if not is_flag(X):
        raise PreconditionError("growth series needs a flag complex")
    W = growth_series(X)
    out = {"numerator": W.rat.num.to_json(), "denominator": W.rat.den.to_json(),
           "coefficients": [str(c) for c in series_expand(W, args.n)]}
    if args.check_bfs:
        agree = bfs_growth_oracle(X, args.n) == series_expand(W, args.n)
        out["bfs_agrees"] = agree
        if not agree:
            return EXIT_CONTRACT, out
    return EXIT_OK, out


def cmd_cdindex(args) -> tuple[int, Any]:
    data = _read_json(args.input)
    if isinstance(data, dict) and "covers" in data:
        try:
            P = GradedPoset.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad poset: {exc}") from exc
    else:
        P = face_poset(load_complex(args.input))
    try:
        phi = cd_index(P)
    except NotCDExpressible as exc:
        raise PreconditionError(f"poset is not Eulerian (ab-word {exc.witness} unmatched)") from exc
    return EXIT_OK, {"rank": P.total_rank, "cd_index": str(phi),
                     "terms": {w: str(c) for w, c in sorted(phi.terms.items())},
                     "ab_index": {w: str(c) for w, c in sorted(psi(P).terms.items())}}


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-12, help="numeric root tolerance")
    common.add_argument("--tie-tol", type=float, default=1e-9,
                        help="tie tolerance for smallest-modulus comparisons")
    common.add_argument("--ghs", action="store_true", help="verify homology spheres (slow)")
    common.add_argument("--max-faces", type=int, default=None, help="face enumeration cap")

    ap = argparse.ArgumentParser(prog="gammacalc", description=__doc__.splitlines()[0])
    ap.add_argument("--seed-complexes", action="store_true",
                    help="dump the canonical test corpus as JSON and exit")
    sub = ap.add_subparsers(dest="command")

    p = sub.add_parser("invariants", parents=[common], help="f, h, gamma and friends")
    p.add_argument("input", help="builder spec or complex JSON (inline, path or -)")
    p.add_argument("--require-gamma", action="store_true", help="exit 3 if gamma is undefined")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("roots", parents=[common], help="real-root analysis")
    p.add_argument("input", help="coefficient list, or a complex with --complex")
    p.add_argument("--complex", action="store_true", help="analyse the h-polynomial of a complex")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("paper", parents=[common], help="rebuild and verify the S^5 counterexample")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_paper)

    p = sub.add_parser("realize", parents=[common], help="flag 3-sphere with given h1, h2")
    p.add_argument("h1", type=int)
    p.add_argument("h2", type=int)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("region", parents=[common], help="degree-4 geography as CSV")
    p.add_argument("h1_max", type=int)
    p.add_argument("h2_max", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("growth", parents=[common], help="Coxeter growth series")
    p.add_argument("input")
    p.add_argument("n", type=int)
    p.add_argument("--check-bfs", action="store_true", help="compare with word enumeration")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("cdindex", parents=[common], help="cd-index of a poset or face poset")
    p.add_argument("input", help="poset {elements, covers} or complex/builder")
    p.set_defaults(func=cmd_cdindex)
    return ap


def _emit(payload) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def main(argv: list[str] | None = None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.seed_complexes:
        _emit(corpus.dump())
        return EXIT_OK
    if args.command is None:
        ap.print_usage(sys.stderr)
        return EXIT_INPUT
    saved = os.environ.get(FACE_CAP_ENV)
    if args.max_faces is not None:
        os.environ[FACE_CAP_ENV] = str(args.max_faces)
    try:
        code, payload = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, FaceLimitError, PosetSizeError) as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    finally:
        # main() may be called in-process; leave the environment as found
        if saved is None:
            os.environ.pop(FACE_CAP_ENV, None)
        else:
            os.environ[FACE_CAP_ENV] = saved
    _emit(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
