"""Command-line entry point: ``smallbias {build,bias,params,compare,export}``."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from . import asymptotics as asy
from .bias import (
    InfeasibleSearch,
    bias_exact_subsets,
    bias_via_weights,
)
from .concat import concatenate, rs_outer
from .fileio import FieldMatrix, format_bias_space, format_matrix, read_any, write_text
from .gf_arith import make_field
from .hermitian import build_onepoint_code, build_product_code, param_bound
from .matrices import BiasSpace, columns_to_bias_space, example_3x12


def _fmt_eps(eps) -> str:
    return f"{eps} ({float(eps):.6f})"


def _build_outer(args):
    if args.family == "product":
        return build_product_code(args.q, args.delta)
    if args.family == "onepoint":
        return build_onepoint_code(args.q, args.m_max)
    if args.family == "rs":
        return rs_outer(make_field(args.s), args.N, args.K)
    raise ValueError(f"unknown family {args.family}")


def _sample_outer(outer, count: int, seed: int) -> int:
    """Minimum weight among ``count`` seeded random nonzero outer codewords."""
    rng = np.random.default_rng(seed)
    best = outer.N
    for _ in range(count):
        c = rng.integers(0, outer.field.order, size=outer.K)
        if not c.any():
            continue
        best = min(best, int(np.count_nonzero(outer.encode(c))))
    return best


def cmd_build(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    if args.family == "example":
        G4 = example_3x12()
        write_text(out / "concat.txt", format_matrix(G4.bits, 1))
        write_text(out / "biasspace.txt", format_bias_space(columns_to_bias_space(G4)))
        print(f"n={G4.cols} k={G4.rows}")
        return 0

    t0 = time.perf_counter()
    outer = _build_outer(args)
    t_g1 = time.perf_counter() - t0
    result = concatenate(outer)
    t0 = time.perf_counter()
    space = columns_to_bias_space(result.matrix)
    t_space = time.perf_counter() - t0

    write_text(out / "outer.txt", format_matrix(outer.generator, outer.field.s))
    write_text(out / "concat.txt", format_matrix(result.matrix.bits, 1))
    write_text(out / "biasspace.txt", format_bias_space(space))

    print(f"family={outer.family} N={outer.N} K={outer.K} D={outer.design_distance}")
    print(f"n={result.matrix.cols} k={result.matrix.rows} |X|={space.size}")
    print(f"epsilon_design={_fmt_eps(result.epsilon_design)}")
    stages = {"G1": t_g1, **result.stage_seconds, "X": t_space}
    print("seconds " + " ".join(f"{k}={v:.4f}" for k, v in stages.items()))
    if args.check:
        w = _sample_outer(outer, args.check, args.seed)
        status = "ok" if w >= outer.design_distance else "VIOLATION"
        print(f"sampled {args.check} outer codewords (seed={args.seed}): min weight {w} {status}")
        if status != "ok":
            return 1
    return 0


def _load_for_bias(path, dedup: bool):
    obj = read_any(path)
    if isinstance(obj, FieldMatrix):
        matrix = obj.as_binary()
        space = columns_to_bias_space(matrix)
    else:
        space = obj
        matrix = None
    if dedup:
        space = space.deduplicated()
        matrix = None
    if matrix is None:
        matrix = space.to_matrix()
    return matrix, space


def cmd_bias(args) -> int:
    matrix, space = _load_for_bias(args.input, args.dedup)
    reports = []
    if args.method in ("subsets", "both"):
        reports.append(bias_exact_subsets(space, limit=args.subset_limit))
    if args.method in ("weights", "both"):
        reports.append(bias_via_weights(matrix, limit=args.weight_limit))
    for rep in reports:
        print(f"{rep.method}: epsilon={_fmt_eps(rep.epsilon)} witness={rep.witness}")
    if len(reports) == 2:
        if reports[0].epsilon != reports[1].epsilon:
            print("methods DISAGREE", file=sys.stderr)
            return 1
        print("methods agree")
    return 0


def cmd_params(args) -> int:
    pb = param_bound(args.q, args.delta)
    bound = "n/a" if pb.k_lower is None else f"{pb.k_lower:.4f}"
    print(f"n={pb.n} T={pb.T} delta={pb.delta} K={pb.k_exact} K_lower={bound} d>={pb.delta}")
    return 0


def cmd_compare(args) -> int:
    l_range = range(args.l_min, args.l_max + 1)
    valid, invalid = asy.compare_at(args.alpha, l_range)
    print(f"alpha={args.alpha}")
    for label, value in valid:
        print(f"  {label:<14} {value:.4f}")
    for label in invalid:
        print(f"  {label:<14} invalid")
    for other in (asy.RS, asy.AG):
        x = asy.crossover(asy.NEW, other)
        print(f"crossover New/{other.family}: alpha={x.alpha:.6f}")
    return 0


def cmd_export(args) -> int:
    obj = read_any(args.input)
    if isinstance(obj, BiasSpace):
        space = obj.deduplicated() if args.dedup else obj
        text = format_matrix(space.to_matrix().bits, 1)
    else:
        space = columns_to_bias_space(obj.as_binary())
        text = format_bias_space(space.deduplicated() if args.dedup else space)
    write_text(args.output, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smallbias", description=__doc__)
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build outer code, concatenated matrix and bias space")
    b.add_argument("family", choices=["product", "onepoint", "rs", "example"])
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--delta", type=int)
    b.add_argument("--m-max", type=int)
    b.add_argument("--s", type=int)
    b.add_argument("--N", type=int)
    b.add_argument("--K", type=int)
    b.add_argument("--out", default=".")
    b.add_argument("--check", type=int, default=0, metavar="COUNT",
                   help="sample COUNT random outer codewords against the design distance")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("bias", help="exact bias of a matrix or bias-space file")
    s.add_argument("input")
    s.add_argument("--method", choices=["subsets", "weights", "both"], default="both")
    s.add_argument("--dedup", action="store_true", help="treat the multiset as a set")
    s.add_argument("--subset-limit", type=int, default=24)
    s.add_argument("--weight-limit", type=int, default=28)
    s.set_defaults(func=cmd_bias)

    r = sub.add_parser("params", help="product code dimension against its lower bound")
    r.add_argument("--q", type=int, required=True)
    r.add_argument("--delta", type=int, required=True)
    r.set_defaults(func=cmd_params)

    c = sub.add_parser("compare", help="asymptotic exponent lines at one alpha")
    c.add_argument("--alpha", type=float, required=True)
    c.add_argument("--l-min", type=int, default=4)
    c.add_argument("--l-max", type=int, default=9)
    c.set_defaults(func=cmd_compare)

    e = sub.add_parser("export", help="convert matrix <-> bias-space file")
    e.add_argument("input")
    e.add_argument("-o", "--output", required=True)
    e.add_argument("--dedup", action="store_true")
    e.set_defaults(func=cmd_export)
    return p


_REQUIRED = {"product": ("delta",), "onepoint": ("m_max",), "rs": ("s", "N", "K"), "example": ()}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "build":
        missing = [k for k in _REQUIRED[args.family] if getattr(args, k) is None]
        if missing:
            parser.error(f"build {args.family} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))
    try:
        return args.func(args)
    except InfeasibleSearch as exc:
        print(f"error: infeasible: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
