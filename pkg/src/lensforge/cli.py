"""Command-line front end: ``lensforge <command> [--n N --q Q ...]``.

Reports are JSON objects with a fixed key order: ``command``, ``inputs``,
``result`` and command-specific extras. Rationals are strings ``"p/q"``.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass, field

from . import errors
from .errors import BoundTooLarge, InvalidInput, LensforgeError, ParseError
from .hj import hj_expand, hj_reverse_dual, resolution_graph
from .lens import homeomorphism_class, is_homeomorphic, mod_inverse, normalize_lens, dehn_fill
from .curves import TorusCurve
from .quotient import (
    QuotientGerm,
    chain_identity_check,
    hilbert_basis,
    nu_components,
    nu_orbit_invariance,
    nu_separates_orbits,
    orbit_size_census,
    random_exact_point,
)
from .torus_cover import (
    CoveringData,
    HopfModel,
    covering_equivalent,
    covering_matrix,
    generic_degree,
    is_normal_X,
    trace_link_of_X,
)

CENSUS_MAX_N = 30
OUTPUT_FORMATS = ("json", "dot", "text")

# command -> (required params, optional params with defaults)
COMMANDS: dict[str, tuple[tuple[str, ...], dict[str, int | None]]] = {
    "classify": (("n", "q"), {}),
    "homeo": (("n", "q", "q2"), {}),
    "fill": (("n", "q"), {}),
    "cover": (("n", "q", "a", "b"), {}),
    "equiv": (("n", "q", "a", "b", "q2"), {"a2": None, "b2": None}),
    "link-x": (("n", "q"), {}),
    "basis": (("n", "q"), {"bound": None}),
    "resolve": (("n", "q"), {}),
    "orbits": (("n", "q"), {}),
    "verify-chain": (("n", "q"), {"samples": 100, "seed": 0}),
    "census": (("max_n",), {}),
}

HELP = {
    "classify": "normalize (n, q) to a canonical lens space name",
    "homeo": "decide whether L(n,q) and L(n,q2) are orientation-preserving homeomorphic",
    "fill": "Dehn filling along m1 = n*l2 - q*m2",
    "cover": "covering matrix [[a*n, a*q], [0, b]] over the Hopf link",
    "equiv": "covering equivalence of (n,q,a,b) and (n,q2,a2,b2)",
    "link-x": "link of X_{n,q} = {z^n = x y^(n-q)} with the intersection trace",
    "basis": "minimal generators of the invariant monomial semigroup of C_{n,q}",
    "resolve": "Hirzebruch-Jung chain and resolution graph",
    "orbits": "orbit sizes of G_n on phase classes and separation by nu",
    "verify-chain": "exact check of pi o nu o gamma = (z1^n, z2^n) on random points",
    "census": "table over all coprime (n, q) with n <= max-n",
}


def _exit_code_table() -> str:
    lines = ["exit codes:", "  0  success"]
    for exc in errors.ALL_ERRORS:
        lines.append(f"  {exc.exit_code:<2} {exc.__name__}")
    lines.append("  1  internal error")
    lines.append("")
    lines.append("environment: LENSFORGE_COLOR=0|1 colors text output")
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


@dataclass
class JobRequest:
    command: str
    parameters: dict[str, int] = field(default_factory=dict)
    output_format: str = "json"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ParseError(f"unknown command {self.command!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ParseError(f"unknown output format {self.output_format!r}")
        required, optional = COMMANDS[self.command]
        params = {}
        for name in required:
            value = self.parameters.get(name)
            if value is None:
                raise ParseError(f"{self.command} requires --{name.replace('_', '-')}")
            params[name] = value
        for name, default in optional.items():
            value = self.parameters.get(name, default)
            if value is not None:
                params[name] = value
        for name, value in params.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParseError(f"--{name.replace('_', '-')} must be an integer")
        self.parameters = params
        if self.output_format == "dot" and self.command != "resolve":
            raise ParseError("dot output is only available for resolve")


# -- handlers: each returns (result, extras) -------------------------------

def _classify(p):
    lens = normalize_lens(p["n"], p["q"])
    return lens.to_json(), {"name": lens.describe(), "orientation_reversed": p["n"] < 0}


def _homeo(p):
    first = normalize_lens(p["n"], p["q"])
    second = normalize_lens(p["n"], p["q2"])
    return is_homeomorphic(first, second), {
        "first": first.to_json(),
        "second": second.to_json(),
        "orientation_reversed": p["n"] < 0,
    }


def _fill(p):
    curve = p["n"] * TorusCurve(0, 1) - p["q"] * TorusCurve(1, 0)
    lens = dehn_fill(curve)
    return lens.to_json(), {"curve_m2_l2": curve.as_list(), "name": lens.describe()}


def _cover(p):
    d = CoveringData(p["n"], p["q"], p["a"], p["b"])
    m = covering_matrix(d)
    return {
        "matrix": m.as_lists(),
        "generic_degree": generic_degree(d),
        "determinant": m.det,
    }, {"model": HopfModel.to_json()}


def _equiv(p):
    d1 = CoveringData(p["n"], p["q"], p["a"], p["b"])
    d2 = CoveringData(p["n"], p["q2"], p.get("a2", p["a"]), p.get("b2", p["b"]))
    return covering_equivalent(d1, d2), {"first": d1.to_json(), "second": d2.to_json()}


def _link_x(p):
    trace = trace_link_of_X(p["n"], p["q"])
    return trace.result.to_json(), {
        "covering": trace.covering.to_json(),
        "normal": is_normal_X(p["n"], p["q"]),
        "trace": trace.to_json(),
    }


def _basis(p):
    g = QuotientGerm(p["n"], p["q"])
    basis = hilbert_basis(g, p.get("bound"))
    expressions = []
    for m in nu_components(g):
        mult = basis.express(m)
        expressions.append({"exponent": m.as_list(), "multiplicities": list(mult)})
    return basis.to_json(), {"size": len(basis), "nu_components": expressions}


def _resolve(p):
    chain = hj_expand(p["n"], p["q"])
    dual = hj_reverse_dual(chain)
    graph = resolution_graph(chain)
    return {
        "chain": list(chain.coefficients),
        "dual_q": dual.q,
        "dual_chain": list(dual.coefficients),
        "graph": graph.to_json(),
        "determinant": graph.determinant(),
    }, {"dot": graph.to_dot()}


def _orbits(p):
    g = QuotientGerm(p["n"], p["q"])
    sizes = orbit_size_census(g)
    return {
        "orbit_sizes": {str(k): sizes[k] for k in sorted(sizes)},
        "nu_separates_orbits": nu_separates_orbits(g),
    }, {}


def _verify_chain(p):
    g = QuotientGerm(p["n"], p["q"])
    if p["samples"] < 1:
        raise InvalidInput("--samples must be >= 1")
    rng = random.Random(p["seed"])
    points = [random_exact_point(rng) for _ in range(p["samples"])]
    return {
        "chain_identity": all(chain_identity_check(g, pt) for pt in points),
        "nu_orbit_invariance": all(nu_orbit_invariance(g, pt) for pt in points),
        "samples": len(points),
    }, {}


def census(max_n: int) -> list[dict]:
    """One row per coprime (n, q), 2 <= n <= max_n, ordered by n then q."""
    if max_n > CENSUS_MAX_N:
        raise BoundTooLarge(f"max-n {max_n} exceeds {CENSUS_MAX_N}")
    if max_n < 2:
        raise InvalidInput(f"max-n must be >= 2, got {max_n}")
    rows = []
    for n in range(2, max_n + 1):
        for q in range(1, n):
            try:
                lens = normalize_lens(n, q)
            except errors.NonManifoldInput:
                continue
            chain = hj_expand(n, q)
            rows.append({
                "n": n,
                "q": q,
                "q_dual": mod_inverse(q, n),
                "lens_class": list(homeomorphism_class(lens)),
                "basis_size": len(hilbert_basis(QuotientGerm(n, q))),
                "hj_chain": list(chain.coefficients),
                "hj_length": len(chain),
                "normal_X": is_normal_X(n, q),
            })
    return rows


def _census(p):
    rows = census(p["max_n"])
    return rows, {"rows": len(rows)}


HANDLERS = {
    "classify": _classify,
    "homeo": _homeo,
    "fill": _fill,
    "cover": _cover,
    "equiv": _equiv,
    "link-x": _link_x,
    "basis": _basis,
    "resolve": _resolve,
    "orbits": _orbits,
    "verify-chain": _verify_chain,
    "census": _census,
}


# -- rendering ----------------------------------------------------------------

def _color_enabled() -> bool:
    return os.environ.get("LENSFORGE_COLOR", "0") == "1"


def _render_text(obj, indent: int = 0, color: bool = False) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            label = f"\x1b[1m{key}\x1b[0m" if color else key
            if isinstance(value, (dict, list)) and value and any(
                    isinstance(v, (dict, list)) for v in (value.values() if isinstance(value, dict) else value)):
                lines.append(f"{pad}{label}:")
                lines.extend(_render_text(value, indent + 1, color))
            else:
                lines.append(f"{pad}{label}: {json.dumps(value)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1, color))
            else:
                lines.append(f"{pad}- {json.dumps(item)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def run(request: JobRequest) -> tuple[int, str]:
    """Execute a request; returns (exit status, serialized report)."""
    try:
        result, extras = HANDLERS[request.command](request.parameters)
    except LensforgeError as exc:
        return exc.exit_code, format_error(exc, request.output_format)
    if request.output_format == "dot":
        return 0, extras["dot"] + "\n"
    inputs = {k.replace("_", "-"): v for k, v in request.parameters.items()}
    report = {"command": request.command, "inputs": inputs, "result": result}
    report.update((k, v) for k, v in extras.items() if k != "dot")
    if request.output_format == "text":
        return 0, "\n".join(_render_text(report, color=_color_enabled())) + "\n"
    return 0, json.dumps(report) + "\n"


def format_error(exc: LensforgeError, output_format: str = "json") -> str:
    if output_format == "json":
        return json.dumps({"error": {
            "type": type(exc).__name__,
            "exit_code": exc.exit_code,
            "message": str(exc),
        }}) + "\n"
    return f"error[{type(exc).__name__}]: {exc}\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lensforge",
        description="Lens spaces, Hopf-link covers, cyclic quotients and HJ chains.",
        epilog=_exit_code_table(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    for name, (required, optional) in COMMANDS.items():
        sp = sub.add_parser(name, help=HELP[name], description=HELP[name],
                            epilog=_exit_code_table(),
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        for param in required:
            sp.add_argument(f"--{param.replace('_', '-')}", dest=param, type=int, required=True)
        for param, default in optional.items():
            sp.add_argument(f"--{param.replace('_', '-')}", dest=param, type=int, default=default)
        sp.add_argument("--output-format", choices=OUTPUT_FORMATS, default="json")
    return parser


def parse_request(argv) -> JobRequest:
    args = build_parser().parse_args(argv)
    if args.command is None:
        raise ParseError("a command is required")
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "output_format") and v is not None}
    return JobRequest(args.command, params, args.output_format)


def _guess_format(argv) -> str:
    for i, tok in enumerate(argv):
        if tok == "--output-format" and i + 1 < len(argv):
            return argv[i + 1] if argv[i + 1] in ("json", "text") else "json"
        if tok.startswith("--output-format="):
            value = tok.split("=", 1)[1]
            return value if value in ("json", "text") else "json"
    return "json"


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        request = parse_request(argv)
    except ParseError as exc:
        fmt = _guess_format(argv)
        (sys.stdout if fmt == "json" else sys.stderr).write(format_error(exc, fmt))
        return exc.exit_code
    try:
        status, text = run(request)
    except Exception as exc:  # noqa: BLE001 - every failure must become an error object
        sys.stdout.write(json.dumps({"error": {
            "type": "InternalError", "exit_code": 1, "message": repr(exc)}}) + "\n")
        return 1
    stream = sys.stdout if status == 0 or request.output_format == "json" else sys.stderr
    stream.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
