"""Command-line front end.

Subcommands:

  dims       exact dimension (and basis size) of one graded component
  blocks     block table of component dimensions for one ideal
  structure  torsion/divisible/free decomposition over K[Y]
  verify     run a verification suite on an ideal or a seeded corpus
  weyl-nf    normal form of an operator expression

Exit codes: 0 = success / all checks pass, 1 = a check failed,
2 = input or validation error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import re
import sys

# lets argparse accept degree values like -1,-1 after -u
_DEGREE_MATCHER = re.compile(r"^-?\d+(,-?\d+)*$")

from .cech import cohomology
from .corpus import generate_corpus
from .expr import ExprError, parse as parse_expr
from .lattice import CMonomial, CMonomialIdeal, DimensionMismatch, FIELD, GRADED_PID
from .rigidity import block_table
from .structure import block_structure, structure_triple, bass_table
from .verify import run_suite


class InputError(ValueError):
    pass


def load_ideal(path: str) -> CMonomialIdeal:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read ideal file {path}: {exc}") from exc
    return ideal_from_dict(data)


def ideal_from_dict(data) -> CMonomialIdeal:
    if not isinstance(data, dict):
        raise InputError("ideal description must be a JSON object")
    try:
        d = int(data["d"])
        base = data["base"]
        gens_raw = data["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"ideal description needs d, base, generators: {exc}") from exc
    if base not in (FIELD, GRADED_PID):
        raise InputError(f"base must be 'field' or 'graded_pid', got {base!r}")
    if not isinstance(gens_raw, list) or not gens_raw:
        raise InputError("generators must be a nonempty list")
    gens = []
    for g in gens_raw:
        try:
            y = int(g.get("y", 0))
            x = tuple(int(e) for e in g["x"])
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad generator {g!r}: {exc}") from exc
        if y < 0 or any(e < 0 for e in x):
            raise InputError(f"negative exponent in generator {g!r}")
        if base == FIELD and y > 0:
            raise InputError("field base forbids y > 0 in generators")
        gens.append(CMonomial(y, x))
    try:
        return CMonomialIdeal(d, base, tuple(gens))
    except (ValueError, DimensionMismatch) as exc:
        raise InputError(str(exc)) from exc


def ideal_to_dict(I: CMonomialIdeal) -> dict:
    return {
        "d": I.d,
        "base": I.base,
        "generators": [{"y": g.y_pow, "x": list(g.x_exps)} for g in I.gens],
    }


def ideal_hash(I: CMonomialIdeal) -> str:
    blob = json.dumps(ideal_to_dict(I), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def parse_degree(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad degree {text!r}: comma-separated integers expected") from exc


def emit(data, fmt: str, out=None):
    out = out if out is not None else sys.stdout
    if fmt == "json":
        json.dump(data, out, indent=2, sort_keys=True)
        out.write("\n")
    else:
        out.write(data if isinstance(data, str) else str(data))
        out.write("\n")


# -- subcommands -------------------------------------------------------------


def cmd_dims(args) -> int:
    I = load_ideal(args.ideal)
    u = parse_degree(args.degree)
    rep = cohomology(I, args.i, u)
    if args.format == "json":
        emit(
            {
                "command": "dims",
                "ideal": ideal_to_dict(I),
                "ideal_hash": ideal_hash(I),
                "i": args.i,
                "u": list(rep.u),
                "dim": rep.dim,
                "basis_size": rep.basis_size(),
            },
            "json",
        )
    else:
        print(f"dim = {rep.dim}")
        print(f"basis = {rep.basis_size()} vectors")
    return 0


def cmd_blocks(args) -> int:
    I = load_ideal(args.ideal)
    table = block_table(I, args.i, sample_radius=args.radius)
    rows = list(table.rows())
    if args.format == "json":
        emit(
            {
                "command": "blocks",
                "ideal": ideal_to_dict(I),
                "ideal_hash": ideal_hash(I),
                "i": args.i,
                "radius": args.radius,
                "blocks": [
                    {"membership": label, "corner": list(corner), "dim": dim}
                    for label, corner, dim in rows
                ],
                "samples_checked": len(table.sample_log),
            },
            "json",
        )
    elif args.format == "csv":
        print("membership,corner,dim")
        for label, corner, dim in rows:
            print(f"{label},\"{corner}\",{dim}")
    else:
        width = max(len("membership"), I.nvars)
        print(f"{'membership':<{width}}  {'corner':<16}  dim")
        for label, corner, dim in rows:
            print(f"{label:<{width}}  {str(corner):<16}  {dim}")
    return 0


def cmd_structure(args) -> int:
    I = load_ideal(args.ideal)
    if I.base != GRADED_PID:
        raise InputError("structure classification needs base = graded_pid")
    if args.degree is not None:
        u = parse_degree(args.degree)
        if len(u) != I.d:
            raise InputError(f"--degree wants the X-part only ({I.d} coordinates)")
        t = structure_triple(I, args.i, u)
        b = bass_table(t)
        records = [(None, u, t, b)]
    else:
        records = block_structure(I, args.i)
    blocks = []
    for pat, corner, t, b in records:
        blocks.append(
            {
                "membership": pat.label() if pat is not None else None,
                "corner": list(corner),
                "s": t.s,
                "v": t.v,
                "r": t.r,
                "bass": {
                    "mu0_maximal": b.mu0_m,
                    "mu1_maximal": b.mu1_m,
                    "mu0_generic": b.mu0_zero,
                    "mu1_generic": b.mu1_zero,
                },
                "injdim": b.injdim,
                "dim_supp": b.dim_supp,
            }
        )
    if args.format == "csv":
        print("membership,corner,s,v,r,mu0_maximal,mu1_maximal,mu0_generic,injdim,dim_supp")
        for blk in blocks:
            print(
                f"{blk['membership']},\"{tuple(blk['corner'])}\",{blk['s']},{blk['v']},{blk['r']},"
                f"{blk['bass']['mu0_maximal']},{blk['bass']['mu1_maximal']},"
                f"{blk['bass']['mu0_generic']},{blk['injdim']},{blk['dim_supp']}"
            )
    elif args.format == "text":
        for blk in blocks:
            print(
                f"{blk['membership'] or 'u=' + str(tuple(blk['corner']))}: "
                f"(s, v, r) = ({blk['s']}, {blk['v']}, {blk['r']}), "
                f"injdim {blk['injdim']} <= dim supp {blk['dim_supp']}"
            )
    else:
        emit(
            {
                "command": "structure",
                "ideal": ideal_to_dict(I),
                "ideal_hash": ideal_hash(I),
                "i": args.i,
                "blocks": blocks,
            },
            "json",
        )
    return 0


def _suite_worker(job):
    name, ideal_dict, seed = job
    I = ideal_from_dict(ideal_dict) if ideal_dict is not None else None
    reports = run_suite(name, [I] if I is not None else [], seed)
    return [
        {
            "name": r.name,
            "status": "pass" if r.passed else "fail",
            "checked": r.checked,
            "witness": repr(r.failures[:3]) if r.failures else None,
        }
        for r in reports
    ]


def cmd_verify(args) -> int:
    if args.corpus is not None:
        seed, n = args.corpus
        ideals = generate_corpus(seed, n)
    elif args.ideal:
        ideals = [load_ideal(args.ideal)]
    elif args.suite == "weyl":
        ideals = []  # operator identities need no ideal
    else:
        raise InputError("verify needs an ideal file or --corpus SEED N")

    jobs = args.jobs or int(os.environ.get("GRADEDLC_JOBS", "1"))
    checks = []
    if args.suite == "weyl":
        checks = _suite_worker((args.suite, None, args.seed))
    elif jobs > 1:
        work = [(args.suite, ideal_to_dict(I), args.seed) for I in ideals]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_suite_worker, work):
                checks.extend(chunk)
    else:
        for I in ideals:
            checks.extend(_suite_worker((args.suite, ideal_to_dict(I), args.seed)))

    all_pass = all(c["status"] == "pass" for c in checks)
    report = {
        "command": f"verify --suite {args.suite}",
        "corpus": list(args.corpus) if args.corpus is not None else None,
        "ideal_hash": ideal_hash(ideals[0]) if len(ideals) == 1 and args.corpus is None else None,
        "seed": args.seed,
        "checks": checks,
        "status": "pass" if all_pass else "fail",
    }
    emit(report, "json")
    return 0 if all_pass else 1


def cmd_weyl_nf(args) -> int:
    try:
        el = parse_expr(args.expression)
    except ExprError as exc:
        raise InputError(str(exc)) from exc
    print(str(el))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gradedlc",
        description="Exact multigraded local cohomology of c-monomial ideals",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="dimension of one graded component")
    p._negative_number_matcher = _DEGREE_MATCHER
    p.add_argument("ideal")
    p.add_argument("-i", type=int, required=True, help="cohomological index")
    p.add_argument("-u", "--degree", required=True, help="degree, e.g. -1,-1")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("blocks", help="block table of component dimensions")
    p.add_argument("ideal")
    p.add_argument("-i", type=int, required=True)
    p.add_argument("--radius", type=int, default=6, help="verification box radius")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("structure", help="structure triples over K[Y]")
    p._negative_number_matcher = _DEGREE_MATCHER
    p.add_argument("ideal")
    p.add_argument("-i", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--blocks", action="store_true", help="all block corners (default)")
    g.add_argument("-u", "--degree", help="one X-degree, e.g. -1,0")
    p.add_argument("--format", choices=["text", "json", "csv"], default="json")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("ideal", nargs="?", help="ideal file (or use --corpus)")
    p.add_argument(
        "--suite",
        required=True,
        choices=["rigidity", "straight", "eulerian", "weyl", "structure"],
    )
    p.add_argument("--corpus", nargs=2, type=int, metavar=("SEED", "N"))
    p.add_argument("--radius", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=0, help="0 = GRADEDLC_JOBS or 1")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("weyl-nf", help="normal form of an operator expression")
    p.add_argument("expression")
    p.set_defaults(func=cmd_weyl_nf)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DimensionMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
