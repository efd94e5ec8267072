"""Command-line front end.

Subcommands: gen, info, classical, evolve, spectrum, fuzz. Exit codes are a
stable contract: 0 success (or verification pass), 1 verification failure,
2 usage or validation error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .classical import Distribution, build_transitions, classical_step
from .errors import (
    EmptyEdgeError,
    GenerationFailedError,
    HgSyntaxError,
    IndexOutOfRangeError,
    InfeasibleParametersError,
    InvalidToleranceError,
    IsolatedVertexError,
)
from .hypergraph import (
    degree_profile,
    is_connected,
    parse,
    random_feasible_parameters,
    random_regular_uniform,
    serialize,
)
from .operators import (
    apply_walk,
    basis_pair_state,
    build_isometries,
    build_pair_space,
    build_walk,
    dense_cap,
    vertex_distribution,
    vertex_superposition,
)
from .spectral import (
    CLASSIFY_TOL_DEFAULT,
    VERIFY_TOL_DEFAULT,
    analyze,
)

_USAGE_ERRORS = (
    EmptyEdgeError,
    GenerationFailedError,
    HgSyntaxError,
    IndexOutOfRangeError,
    InfeasibleParametersError,
    InvalidToleranceError,
    IsolatedVertexError,
    ValueError,
)


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _write_text(out: str | None, text: str) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _read_hypergraph(path: str):
    return parse(Path(path).read_text())


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _series_text(rows: list[tuple[int, np.ndarray]], n: int, fmt: str) -> str:
    columns = ["t"] + [f"v{i}" for i in range(n)]
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join([str(t)] + [_fmt(p) for p in probs]) for t, probs in rows]
        return "\n".join(lines) + "\n"
    payload = {"columns": columns, "rows": [[t] + [float(p) for p in probs] for t, probs in rows]}
    return json.dumps(payload, indent=2) + "\n"


def _parse_start(spec: str, ps, iso):
    """Start state from 'v:<index>' (vertex-anchored superposition) or 'pair:<v>,<e>'."""
    kind, _, rest = spec.partition(":")
    if kind == "v" and rest:
        v = int(rest)
        if not 0 <= v < ps.n:
            raise ValueError(f"unknown start vertex {v}")
        return vertex_superposition(iso, v)
    if kind == "pair" and rest:
        parts = rest.split(",")
        if len(parts) != 2:
            raise ValueError(f"start pair must be 'pair:<v>,<e>', got {spec!r}")
        return basis_pair_state(ps, int(parts[0]), int(parts[1]))
    raise ValueError(f"start must be 'v:<index>' or 'pair:<v>,<e>', got {spec!r}")


def _cmd_gen(args) -> int:
    hg = random_regular_uniform(args.n, args.m, args.k, args.d, seed=args.seed)
    _write_text(args.out, serialize(hg))
    return 0


def _cmd_info(args) -> int:
    hg = _read_hypergraph(args.file)
    profile = degree_profile(hg)
    total = int(profile.vertex_degrees.sum())
    connected = is_connected(hg)
    handshake = profile.is_regular and profile.is_uniform
    if args.format == "json":
        payload = {
            "n": hg.n,
            "m": hg.m,
            "vertex_degrees": profile.vertex_degrees.tolist(),
            "edge_degrees": profile.edge_degrees.tolist(),
            "regular": profile.d,
            "uniform": profile.k,
            "N": total,
            "nd_equals_mk": bool(hg.n * profile.d == hg.m * profile.k) if handshake else None,
            "connected": connected,
        }
        _write_text(args.out, json.dumps(payload, indent=2) + "\n")
        return 0
    lines = [
        f"n: {hg.n}",
        f"m: {hg.m}",
        f"vertex degrees: {profile.vertex_degrees.tolist()}",
        f"edge degrees: {profile.edge_degrees.tolist()}",
        f"regular: {'true (d=%d)' % profile.d if profile.is_regular else 'false'}",
        f"uniform: {'true (k=%d)' % profile.k if profile.is_uniform else 'false'}",
        f"N: {total}",
    ]
    if handshake:
        lines.append(f"nd == mk: {'true' if hg.n * profile.d == hg.m * profile.k else 'false'}")
    lines.append(f"connected: {'true' if connected else 'false'}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_classical(args) -> int:
    hg = _read_hypergraph(args.file)
    ts = build_transitions(hg)
    kind, _, rest = args.start.partition(":")
    if kind != "v" or not rest:
        raise ValueError(f"classical start must be 'v:<index>', got {args.start!r}")
    v = int(rest)
    if not 0 <= v < hg.n:
        raise ValueError(f"unknown start vertex {v}")
    point = np.zeros(hg.n)
    point[v] = 1.0
    dist = Distribution(point)
    rows = [(0, dist.probabilities)]
    for t in range(1, args.steps + 1):
        dist = classical_step(ts, dist)
        rows.append((t, dist.probabilities))
    _write_text(args.out, _series_text(rows, hg.n, args.format))
    return 0


def _cmd_evolve(args) -> int:
    hg = _read_hypergraph(args.file)
    ts = build_transitions(hg)
    ps = build_pair_space(hg)
    iso = build_isometries(hg, ts, ps)
    walk = build_walk(iso, materialize=False)
    psi = _parse_start(args.start, ps, iso)
    rows = [(0, vertex_distribution(ps, psi).probabilities)]
    for t in range(1, args.steps + 1):
        psi = apply_walk(walk, psi)
        rows.append((t, vertex_distribution(ps, psi).probabilities))
    _write_text(args.out, _series_text(rows, hg.n, args.format))
    return 0


def _cmd_spectrum(args) -> int:
    hg = _read_hypergraph(args.file)
    report = analyze(hg, classify_tol=args.classify_tol, verify_tol=args.tol)
    _write_text(args.out, report.to_json() + "\n")
    return 1 if report.verdict == "fail" else 0


def _instance_thetas(report) -> list[float]:
    return [
        float(np.arccos(np.clip(s, 0.0, 1.0)))
        for s, tag in zip(report.singular_values, report.classification)
        if tag == "interior"
    ]


def _cmd_fuzz(args) -> int:
    rng = np.random.default_rng(args.seed)
    max_pairs = min(512, dense_cap())
    instances = []
    thetas: list[float] = []
    failures = 0
    for index in range(args.count):
        n, m, k, d = random_feasible_parameters(rng, max_n=args.max_n, max_pairs=max_pairs)
        instance_seed = int(rng.integers(0, 2**63))
        hg = random_regular_uniform(n, m, k, d, seed=instance_seed)
        report = analyze(hg, classify_tol=args.classify_tol, verify_tol=args.tol)
        observed = _instance_thetas(report)
        thetas.extend(observed)
        if report.verdict != "pass":
            failures += 1
        instances.append(
            {
                "index": index,
                "n": n,
                "m": m,
                "k": k,
                "d": d,
                "N": report.size,
                "seed": instance_seed,
                "verdict": report.verdict,
                "max_pairing_distance": report.max_pairing_distance,
                "max_residual": report.max_residual,
                "theta_min": min(observed) if observed else None,
                "theta_max": max(observed) if observed else None,
            }
        )
        if args.report not in (None, "-"):
            print(f"instance {index}: n={n} m={m} k={k} d={d} N={report.size} verdict={report.verdict}")
    summary = {
        "count": args.count,
        "passed": args.count - failures,
        "failed": failures,
        "theta_min": min(thetas) if thetas else None,
        "theta_max": max(thetas) if thetas else None,
        "instances": instances,
    }
    _write_text(args.report, json.dumps(summary, indent=2) + "\n")
    return 0 if failures == 0 else 1


def _tolerance(text: str) -> float:
    value = float(text)
    if not 0.0 < value <= 1e-3:
        raise argparse.ArgumentTypeError("tolerance must be in (0, 1e-3]")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperwalk",
        description="Simulate and spectrally verify Szegedy-style walks on hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random d-regular k-uniform hypergraph")
    gen.add_argument("--n", type=_positive, required=True, help="vertex count")
    gen.add_argument("--m", type=_positive, required=True, help="hyperedge count")
    gen.add_argument("--k", type=_positive, required=True, help="vertices per hyperedge")
    gen.add_argument("--d", type=_positive, required=True, help="hyperedges per vertex")
    gen.add_argument("--seed", type=_seed, default=0)
    gen.add_argument("--out", default="-", help=".hg output path (default stdout)")
    gen.set_defaults(func=_cmd_gen)

    info = sub.add_parser("info", help="summarize a .hg file")
    info.add_argument("file")
    info.add_argument("--format", choices=("text", "json"), default="text")
    info.add_argument("--out", default="-")
    info.set_defaults(func=_cmd_info)

    classical = sub.add_parser("classical", help="classical vertex-chain time series")
    classical.add_argument("file")
    classical.add_argument("--start", required=True, help="'v:<index>' point mass")
    classical.add_argument("--steps", type=_nonnegative, required=True)
    classical.add_argument("--format", choices=("csv", "json"), default="csv")
    classical.add_argument("--out", default="-")
    classical.set_defaults(func=_cmd_classical)

    evolve = sub.add_parser("evolve", help="quantum walk vertex-marginal time series")
    evolve.add_argument("file")
    evolve.add_argument("--start", required=True, help="'v:<index>' or 'pair:<v>,<e>'")
    evolve.add_argument("--steps", type=_nonnegative, required=True)
    evolve.add_argument("--format", choices=("csv", "json"), default="csv")
    evolve.add_argument("--out", default="-")
    evolve.set_defaults(func=_cmd_evolve)

    spectrum = sub.add_parser("spectrum", help="spectral verification report (JSON)")
    spectrum.add_argument("file")
    spectrum.add_argument("--tol", type=_tolerance, default=VERIFY_TOL_DEFAULT)
    spectrum.add_argument("--classify-tol", type=_tolerance, default=CLASSIFY_TOL_DEFAULT)
    spectrum.add_argument("--out", default="-")
    spectrum.set_defaults(func=_cmd_spectrum)

    fuzz = sub.add_parser("fuzz", help="verification campaign over random instances")
    fuzz.add_argument("--count", type=_positive, required=True)
    fuzz.add_argument("--max-n", type=_positive, default=24)
    fuzz.add_argument("--seed", type=_seed, default=0)
    fuzz.add_argument("--tol", type=_tolerance, default=VERIFY_TOL_DEFAULT)
    fuzz.add_argument("--classify-tol", type=_tolerance, default=CLASSIFY_TOL_DEFAULT)
    fuzz.add_argument("--report", default="-", help="summary JSON path (default stdout)")
    fuzz.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
