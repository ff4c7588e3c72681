"""Command line front end.

    passant verify --q 9 --suite all
    passant rank --q 13
    passant export --q 7 --format alist --out passant7.alist

Exit status: 0 when every requested check passes, 1 when a verification
fails, 2 for unusable arguments.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .plane import ConicPlane, verify_plane
from .group import ConicGroup, verify_group, verify_stabilizer, verify_parity
from .incidence import IncidenceSystem, verify_incidence, verify_equivariance
from . import blocks as _blocks
from .chartable import verify_characters, verify_permutation_module
from .gf2 import write_alist

SUITES = ("geometry", "group", "parity", "incidence", "blocks", "characters", "all")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="passant",
        description="passant-line / internal-point incidence for a conic in PG(2,q)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--q", type=int, required=True, help="odd prime power >= 3")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument(
        "--max-heavy-q",
        type=int,
        default=13,
        help="largest q for the quadratic-memory ideal dimension check",
    )
    p_verify.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p_rank = sub.add_parser("rank", help="rank and nullity of the incidence matrix")
    p_rank.add_argument("--q", type=int, required=True)

    p_export = sub.add_parser("export", help="write the incidence matrix to a file")
    p_export.add_argument("--q", type=int, required=True)
    p_export.add_argument("--format", choices=("alist", "csv", "json"), default="alist")
    p_export.add_argument("--out", required=True)
    return parser


def _plane_or_exit(q: int) -> ConicPlane:
    try:
        return ConicPlane(q)
    except (ValueError, AssertionError) as exc:
        print(f"error: q={q}: {exc}", file=sys.stderr)
        sys.exit(2)


def _run_suite(name, fn) -> dict | None:
    try:
        out = fn()
    except AssertionError as exc:
        print(f"FAIL {name}: {exc}")
        return None
    print(f"PASS {name}")
    return out


def _cmd_verify(args) -> int:
    plane = _plane_or_exit(args.q)
    want = SUITES[:-1] if args.suite == "all" else (args.suite,)
    rng = np.random.default_rng(args.seed)
    group = inc = None
    if set(want) & {"group", "parity", "incidence", "blocks", "characters"}:
        group = ConicGroup(plane)
    if set(want) & {"parity", "incidence", "blocks"}:
        inc = IncidenceSystem(plane)

    ok = True
    for name in want:
        if name == "geometry":
            ok &= _run_suite(name, lambda: verify_plane(plane)) is not None
        elif name == "group":
            def suite_group():
                info = verify_group(group, rng=rng)
                info["stabilizer"] = verify_stabilizer(group)
                return info
            ok &= _run_suite(name, suite_group) is not None
        elif name == "parity":
            ok &= _run_suite(name, lambda: verify_parity(group, inc)) is not None
        elif name == "incidence":
            def suite_incidence():
                info = verify_incidence(inc)
                sample = None if args.q <= 7 else 100
                info["equivariance"] = verify_equivariance(inc, group, sample=sample, rng=rng)
                expected = (args.q - 1) ** 2 // 4
                assert info["nullity"] == expected, (info["nullity"], expected)
                print(f"  q={args.q}: N={info['N']} rank={info['rank']} nullity={info['nullity']}")
                return info
            ok &= _run_suite(name, suite_incidence) is not None
        elif name == "blocks":
            def suite_blocks():
                alg = _blocks.ClassAlgebra(group)
                idems = _blocks.central_idempotents(alg)
                labels = _blocks.label_blocks(alg, idems)
                _blocks.verify_block_patterns(alg, idems, labels)
                info = _blocks.verify_module_decomposition(alg, idems, labels, inc)
                if args.q <= args.max_heavy_q:
                    dims = _blocks.block_ideal_dimensions(alg, idems)
                    big = (args.q - 1) ** 2 if args.q % 4 == 1 else (args.q + 1) ** 2
                    for lab, d in zip(labels, dims):
                        assert lab != "defect0" or d == big, (lab, d, big)
                    info["ideal_dims"] = dims
                print(f"  blocks: {labels}")
                return info
            ok &= _run_suite(name, suite_blocks) is not None
        elif name == "characters":
            def suite_characters():
                info = verify_characters(group)
                if args.q > 3:
                    info["module"] = verify_permutation_module(group)
                return info
            ok &= _run_suite(name, suite_characters) is not None
    return 0 if ok else 1


def _cmd_rank(args) -> int:
    plane = _plane_or_exit(args.q)
    inc = IncidenceSystem(plane)
    expected = (args.q - 1) ** 2 // 4
    print(f"q={args.q} internal_points={inc.N} rank={inc.rank()} "
          f"nullity={inc.null_dimension()} expected_nullity={expected}")
    return 0 if inc.null_dimension() == expected else 1


def _cmd_export(args) -> int:
    plane = _plane_or_exit(args.q)
    inc = IncidenceSystem(plane)
    if args.format == "alist":
        write_alist(args.out, inc.A)
    elif args.format == "csv":
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            for row in inc.A.to_bool().astype(int):
                writer.writerow(row.tolist())
    else:
        payload = {
            "q": args.q,
            "internal_points": [list(plane.points[i]) for i in inc.internal],
            "passant_lines": [list(plane.lines[j]) for j in plane.passants],
            "rows": [row.tolist() for row in inc.A.to_bool().astype(int)],
        }
        with open(args.out, "w") as fh:
            json.dump(payload, fh)
    print(f"wrote {args.out}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "rank":
        return _cmd_rank(args)
    return _cmd_export(args)


if __name__ == "__main__":
    sys.exit(main())
