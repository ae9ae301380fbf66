"""``fccforge`` command line: JSON reports on stdout, DOT and encodings to files.

Exit status is 0 on success, 1 for a verified negative outcome (infeasible,
verification failure, inapplicable bound) and 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__, covering, distgraph, fcc, mdspath, specs
from .codes import parse_word

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _report(command: str, args: dict, raw_inputs: list[bytes], result: dict, citations=()) -> dict:
    digest = hashlib.sha256()
    for raw in raw_inputs:
        digest.update(hashlib.sha256(raw).digest())
    return {
        "command": command,
        "args": args,
        "version": __version__,
        "input_digest": digest.hexdigest(),
        "result": result,
        "citations": list(citations),
    }


def _load_code(source: str):
    try:
        spec, raw = specs.load_code_spec(source)
    except FileNotFoundError:
        raise UsageError(f"no such file: {source}") from None
    return spec.build(), raw


def cmd_analyze(ns) -> tuple[dict, int]:
    C, raw = _load_code(ns.code)
    result = {"n": C.n, "M": C.M, "d_min": C.d_min, "d_max": C.d_max}
    if C.M >= 2:
        result["profile"] = [{"alpha": a, "components": Q} for a, Q in distgraph.component_profile(C)]
        result["threshold"] = distgraph.connectivity_threshold(C)
    if ns.alpha is not None or ns.dot:
        alpha = ns.alpha if ns.alpha is not None else C.d_min or 0
        try:
            G = distgraph.build_alpha_graph(C, alpha)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        result["alpha"] = alpha
        result["components"] = G.n_components
        result["component_members"] = G.components()
        if ns.dot:
            Path(ns.dot).write_text(distgraph.export_dot(G))
            result["dot"] = str(ns.dot)
    return _report("analyze", {"code": ns.code, "alpha": ns.alpha}, [raw], result), EXIT_OK


def cmd_feasibility(ns) -> tuple[dict, int]:
    C, raw = _load_code(ns.code)
    report = fcc.feasibility_report(C)
    result = report.to_dict()
    citations = []
    status = EXIT_OK if report.max_strict_df is not None else EXIT_NEGATIVE
    if ns.df is not None:
        v = fcc.strict_feasible(C, ns.values, ns.df)
        result["query"] = fcc.verdict_dict(v)
        citations = [fcc.THEOREMS[c] for c in v.citations]
        status = EXIT_OK if v.feasible else EXIT_NEGATIVE
    elif report.max_strict_df is None:
        citations = [fcc.THEOREMS[c] for c in report.verdicts[0].citations] if report.verdicts else []
    echo = {"code": ns.code, "df": ns.df, "values": ns.values}
    return _report("feasibility", echo, [raw], result, citations), status


def cmd_covering(ns) -> tuple[dict, int]:
    C, raw = _load_code(ns.code)
    try:
        if ns.method == "exact":
            res = covering.covering_radius_exact(C)
        elif ns.method == "coset":
            res = covering.covering_radius_coset_leader(C)
        elif ns.method == "known":
            value = covering.known_covering_radius(C)
            res = covering.CoveringResult(value, covering.KNOWN_FORMULA)
        else:
            exact = covering.covering_radius(C)
            res = covering.janwa_mattson_bound(C, exact.value if exact is not None else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = res.to_dict()
    if ns.method == "bounds":
        exact = covering.covering_radius(C)
        result["exact"] = None if exact is None else exact.to_dict()
    return _report("covering", {"code": ns.code, "method": ns.method}, [raw], result), EXIT_OK


def cmd_construct(ns) -> tuple[dict, int]:
    inner, raw_inner = _load_code(ns.inner)
    label_code, raw_label = _load_code(ns.function_code) if ns.function_code else (None, b"")
    if not inner.is_linear:
        raise UsageError("inner code must be linear")
    f = specs.parse_function(ns.function, inner.q, inner.k)
    E = fcc.two_step_construct(f, inner, label_code)
    doc = specs.encoding_to_dict(E)
    text = json.dumps(doc, indent=ns.json_indent) + "\n"
    if ns.out:
        Path(ns.out).write_text(text)
    dd, df, _, _ = E.distances()
    result = {"length": E.length, "redundancy": E.redundancy, "d_d": dd, "d_f": df, "out": ns.out}
    echo = {"function": ns.function, "inner": ns.inner, "function_code": ns.function_code}
    return _report("construct", echo, [raw_inner, raw_label, ns.function.encode()], result), EXIT_OK


def _load_encoding(path: str):
    try:
        raw = Path(path).read_bytes()
    except FileNotFoundError:
        raise UsageError(f"no such file: {path}") from None
    return specs.encoding_from_dict(json.loads(raw)), raw


def cmd_verify(ns) -> tuple[dict, int]:
    E, raw = _load_encoding(ns.encoding)
    if ns.dd > ns.df:
        raise UsageError("claims must satisfy dd <= df")
    v = fcc.verify_fcc(E, ns.dd, ns.df)
    result = {"passed": v.passed, "d_d": v.data_distance, "d_f": v.function_distance}
    if v.violation is not None:
        w = v.violation
        result["violation"] = {
            "requirement": w.requirement, "distance": w.distance,
            "messages": [E.messages[w.i].tolist(), E.messages[w.j].tolist()],
            "codewords": [E.codewords[w.i].tolist(), E.codewords[w.j].tolist()],
        }
    status = EXIT_OK if v.passed else EXIT_NEGATIVE
    return _report("verify", {"encoding": ns.encoding, "dd": ns.dd, "df": ns.df}, [raw], result), status


def cmd_mds_path(ns) -> tuple[dict, int]:
    C, raw = _load_code(ns.code)
    u, v = parse_word(ns.source), parse_word(ns.target)
    try:
        path = mdspath.mds_path(C, u, v)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    echo = {"code": ns.code, "from": ns.source, "to": ns.target}
    return _report("mds-path", echo, [raw], mdspath.path_to_dict(C, path)), EXIT_OK


def cmd_bound(ns) -> tuple[dict, int]:
    if ns.kind == "perfect":
        if ns.q is None:
            raise UsageError("the perfect bound needs --q")
        b = fcc.perfect_redundancy_bound(ns.q, ns.k, ns.d)
    else:
        b = fcc.mds_redundancy_bound(ns.k, ns.d)
    echo = {"kind": ns.kind, "q": ns.q, "k": ns.k, "d": ns.d}
    raw = json.dumps(echo, sort_keys=True).encode()
    return _report("bound", echo, [raw], b.to_dict(), [fcc.THEOREMS[b.source]]), EXIT_OK if b.applicable else EXIT_NEGATIVE


def cmd_simulate(ns) -> tuple[dict, int]:
    E, raw = _load_encoding(ns.encoding)
    dd, df, _, _ = E.distances()
    t_data = ns.t_data if ns.t_data is not None else ((dd or 1) - 1) // 2
    t_func = ns.t_func if ns.t_func is not None else ((df or dd or 1) - 1) // 2
    try:
        stats = fcc.simulate_channel(E, t_data, t_func, ns.trials, ns.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = EXIT_OK if stats.data_recovery == 1.0 and stats.function_recovery == 1.0 else EXIT_NEGATIVE
    echo = {"encoding": ns.encoding, "t_data": t_data, "t_func": t_func, "trials": ns.trials, "seed": ns.seed}
    return _report("simulate", echo, [raw], stats.to_dict()), status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fccforge", description="Distance graphs, covering radii and strict FCC feasibility.")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-indent", type=int, default=2, help="indent for the JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    code_help = "code spec JSON file or shorthand (hamming:3, golay, rm1:4, rs:5:4:2, ...)"

    p = sub.add_parser("analyze", parents=[common], help="component profile and connectivity threshold")
    p.add_argument("code", help=code_help)
    p.add_argument("--alpha", type=int)
    p.add_argument("--dot", help="write G_alpha as DOT to this file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("feasibility", parents=[common], help="strict-FCC verdicts")
    p.add_argument("code", help=code_help)
    p.add_argument("--df", type=int)
    p.add_argument("--values", type=int, default=2)
    p.set_defaults(func=cmd_feasibility)

    p = sub.add_parser("covering", parents=[common], help="covering radius")
    p.add_argument("code", help=code_help)
    p.add_argument("--method", choices=["exact", "coset", "known", "bounds"], default="exact")
    p.set_defaults(func=cmd_covering)

    p = sub.add_parser("construct", parents=[common], help="two-step FCC construction")
    p.add_argument("--function", required=True, help="parity, weight-mod:S, coordinate:I, identity, constant")
    p.add_argument("--inner", required=True, help=code_help)
    p.add_argument("--function-code", help=code_help)
    p.add_argument("--out", help="write the encoding JSON here")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check (f:dd,df) claims for an encoding")
    p.add_argument("encoding")
    p.add_argument("--dd", type=int, required=True)
    p.add_argument("--df", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mds-path", parents=[common], help="minimum-distance path between two MDS codewords")
    p.add_argument("code", help=code_help)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.set_defaults(func=cmd_mds_path)

    p = sub.add_parser("bound", parents=[common], help="redundancy lower bounds")
    p.add_argument("kind", choices=["perfect", "mds"])
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo nearest-codeword decoding")
    p.add_argument("encoding")
    p.add_argument("--t-data", type=int)
    p.add_argument("--t-func", type=int)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)
    return parser


def _jsonable(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serialisable: {type(obj).__name__}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, status = ns.func(ns)
    except (UsageError, ValueError, KeyError, json.JSONDecodeError, OSError) as exc:
        print(f"fccforge {ns.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(json.dumps(report, indent=ns.json_indent, default=_jsonable))
    return status


if __name__ == "__main__":
    sys.exit(main())
