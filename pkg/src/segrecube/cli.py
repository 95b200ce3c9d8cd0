"""Command-line front end.

JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success or positive
verdict, 1 negative verdict, 2 bad input, 3 internal error.

Seeded permutations use numpy's PCG64 bit generator
(``Generator(PCG64(seed)).permutation``).
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .coxeter import OnWall, Permutation, simulate_error, state_chamber
from .errors import SegreError
from .hypercube import MAX_QUBITS, generate_hypercube, to_dot, to_json
from .segre import (
    EPS_SEGRE,
    concurrence,
    is_maximally_entangled,
    is_product_state,
    max_generator_residual,
    segre_map,
)
from .state import as_point, load_state

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

EMBED_RESIDUAL_MAX = 1e-12


class InputError(Exception):
    pass


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc) + "\n")


def _load(path):
    try:
        return load_state(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except SegreError as exc:
        raise InputError(f"{path}: {exc}") from exc


def cmd_check(args) -> int:
    s = _load(args.path)
    report = is_product_state(s, args.tol)
    doc = report.to_dict()
    if s.num_qubits == 2:
        doc["concurrence"] = concurrence(s)
    if s.num_qubits % 2 == 0:
        doc["maximally_entangled"] = is_maximally_entangled(s, args.tol)
    _emit(doc)
    return EXIT_OK if report.product_state else EXIT_NEGATIVE


def cmd_embed(args) -> int:
    a, b = _load(args.path_a), _load(args.path_b)
    pa, pb = as_point(a), as_point(b)
    image = segre_map(pa, pb)
    residual = max_generator_residual(image, pa.dim, pb.dim)
    _emit(
        {
            "dim": image.dim,
            "point": repr(image),
            "coords": [[float(z.real), float(z.imag)] for z in image.coords],
            "residual": residual,
        }
    )
    if residual >= EMBED_RESIDUAL_MAX:
        print(f"generator residual {residual:.3e} exceeds {EMBED_RESIDUAL_MAX:g}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_hypercube(args) -> int:
    if not 2 <= args.n <= MAX_QUBITS:
        raise InputError(f"n must lie in 2..{MAX_QUBITS}, got {args.n}")
    g = generate_hypercube(args.n)
    sys.stdout.write(to_dot(g) if args.format == "dot" else to_json(g) + "\n")
    return EXIT_OK


def cmd_chamber(args) -> int:
    where = state_chamber(_load(args.path))
    if isinstance(where, OnWall):
        _emit({"on_wall": [list(p) for p in where.pairs]})
    else:
        _emit({"chamber": str(where)})
    return EXIT_OK


def cmd_simulate_error(args) -> int:
    s = _load(args.path)
    if args.perm is not None:
        try:
            g = Permutation.parse(args.perm)
        except SegreError as exc:
            raise InputError(str(exc)) from exc
    else:
        if args.seed < 0:
            raise InputError(f"seed must be non-negative, got {args.seed}")
        rng = np.random.Generator(np.random.PCG64(args.seed))
        g = Permutation.from_zero_based(rng.permutation(s.dim))
    try:
        record, rec = simulate_error(s, g)
    except SegreError as exc:
        raise InputError(str(exc)) from exc
    restored = state_chamber(rec.corrected)
    ok = restored == record.original_chamber
    doc = {"error": str(g), **record.to_dict(), "recovered_chamber": str(restored), "recovered": ok}
    _emit(doc)
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="segrecube", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="separability report for a state file")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=EPS_SEGRE)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("embed", help="Segre image of two state files")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("hypercube", help="emit the embedding hypercube for n qubits")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_hypercube)

    p = sub.add_parser("chamber", help="Coxeter chamber of a state's probability vector")
    p.add_argument("path")
    p.set_defaults(func=cmd_chamber)

    p = sub.add_parser("simulate-error", help="inject a permutation error and recover")
    p.add_argument("path")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm", help='1-based image list, e.g. "[3,1,2,4]"')
    group.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_simulate_error)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
