"""Command-line front end: ``python -m kronext <command> ...``.

Exit status: 0 on success, 1 when a verification sweep finds a mismatch,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

import numpy as np

from . import partitions as pt
from . import preinjective as pi
from .monoid import product
from .symbols import SymbolSyntaxError, canonical, class_size, format_symbol, parse_symbol


class UsageError(Exception):
    pass


def _vector(text: str) -> tuple[int, ...]:
    try:
        return pt.parse_vector(text)
    except (ValueError, pt.PartitionError) as exc:
        raise UsageError(f"bad integer vector {text!r}: {exc}") from None


def _indices(text: str) -> tuple[int, ...]:
    v = _vector(text)
    if any(x < 0 for x in v) or any(v[i] < v[i + 1] for i in range(len(v) - 1)):
        raise UsageError(f"expected a weakly decreasing list of indices >= 0, got {text!r}")
    return v


def _symbol(text: str):
    try:
        return parse_symbol(text)
    except SymbolSyntaxError as exc:
        raise UsageError(str(exc)) from None


def _pair(text: str) -> tuple[int, int]:
    v = _vector(text)
    if len(v) != 2:
        raise UsageError(f"expected two integers, got {text!r}")
    return v


def _emit(args, payload, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


# ---------------------------------------------------------------------------
# commands


def cmd_product(args) -> int:
    syms = [format_symbol(s) for s in canonical(product(_symbol(args.alpha), _symbol(args.beta)))]
    _emit(args, syms, syms)
    return 0


def cmd_chain(args) -> int:
    syms = [format_symbol(s) for s in canonical(pi.chain_product(_indices(args.a)))]
    _emit(args, syms, syms)
    return 0


def cmd_dominance(args) -> int:
    a, b = _vector(args.a), _vector(args.b)
    res = pt.weighted_dominance(a, b) if args.command == "wdom" else pt.dominance_leq(a, b)
    _emit(args, {"result": res}, [str(res).lower()])
    return 0


def cmd_genmaj(args) -> int:
    c, b, a = _vector(args.c), _vector(args.b), _vector(args.a)
    res = pt.gen_maj(c, b, a)
    n = len(a)
    info = {"result": res}
    if len(c) == len(b) + n:
        info["h"] = list(pt.h_indices(b, c, n))
        info["x"] = list(pt.x_vector(b, c, n))
    lines = [str(res).lower()] + [f"{k} = {pt.format_partition(v)}" for k, v in info.items() if k != "result"]
    _emit(args, info, lines)
    return 0


def _bc_n(args):
    b, c = _indices(args.b), _indices(args.c)
    n = args.n if args.n is not None else len(c) - len(b)
    if n < 0 or len(c) != len(b) + n:
        raise UsageError(f"need len(c) == len(b) + n (zero entries count), got {len(c)}, {len(b)}, n={n}")
    return b, c, n


def cmd_embed(args) -> int:
    b, c, n = _bc_n(args)
    res = pi.embedding_exists_genmaj(b, c, n)
    wdom = pi.embedding_exists_wdom(pi.to_multiplicities(b), pi.to_multiplicities(c))
    info = {"result": res, "weighted_dominance": wdom}
    _emit(args, info, [str(res).lower()])
    return 0


def cmd_mincoker(args) -> int:
    b, c, n = _bc_n(args)
    a = pi.minimal_cokernel(b, c, n)
    _emit(args, {"cokernel": None if a is None else list(a)}, ["none" if a is None else pt.format_partition(a)])
    return 0


def cmd_lr(args) -> int:
    lam, mu = _indices(args.lam), _indices(args.mu)
    if args.nu is not None:
        c = pt.lr_coeff(lam, mu, _indices(args.nu))
        _emit(args, {"coefficient": c}, [str(c)])
        return 0
    rows = sorted(((nu, pt.lr_coeff(lam, mu, nu)) for nu in pt.lr_expansions(lam, mu)), reverse=True)
    _emit(
        args,
        [{"nu": list(nu), "coefficient": c} for nu, c in rows],
        [f"{pt.format_partition(nu)} {c}" for nu, c in rows],
    )
    return 0


def cmd_classsize(args) -> int:
    n = class_size(_symbol(args.symbol), args.q)
    _emit(args, {"class_size": n}, [str(n)])
    return 0


def read_matrix_file(path: str):
    """File: header ``q a b``, then the a x b entries of A, then those of B."""
    from .oracle.reps import Representation

    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    body = [ln for ln in lines if ln.strip() and not ln.lstrip().startswith("#")]
    if not body:
        raise UsageError(f"{path}: empty matrix file")
    try:
        q, a, b = (int(v) for v in body[0].split())
        vals = [int(v) for ln in body[1:] for v in ln.split()]
    except ValueError:
        raise UsageError(f"{path}: expected integers, header 'q a b'") from None
    if len(vals) != 2 * a * b:
        raise UsageError(f"{path}: expected {2 * a * b} matrix entries, found {len(vals)}")
    A = np.array(vals[: a * b], dtype=np.int64).reshape(a, b)
    B = np.array(vals[a * b :], dtype=np.int64).reshape(a, b)
    return Representation(q, A, B)


def cmd_classify(args) -> int:
    from .oracle.classify import classify_concrete

    X = read_matrix_file(args.file)
    cls = classify_concrete(X, verify=True)
    info = {"symbol": format_symbol(cls.symbol), "points": str(cls)}
    _emit(args, info, [info["symbol"], info["points"]])
    return 0


def cmd_verify(args) -> int:
    from .oracle.verify import compare_fields, verify_sweep

    qs = _vector(args.q)
    max_dim = _pair(args.maxdim)
    by_q = {}
    lines = []
    ok = True
    for q in qs:
        t0 = time.perf_counter()
        reports = verify_sweep(q, max_dim, args.jobs)
        by_q[q] = reports
        bad = [r for r in reports if r.status == "mismatch"]
        ok &= not bad
        counts = {s: sum(r.status == s for r in reports) for s in ("match", "mismatch", "skipped")}
        lines.append(
            f"q={q} maxdim={max_dim}: {counts['match']} match, {counts['mismatch']} mismatch, "
            f"{counts['skipped']} skipped ({time.perf_counter() - t0:.1f}s)"
        )
        lines.extend(f"  MISMATCH {r.alpha} * {r.beta}: missing {r.missing} extra {r.extra}" for r in bad)
    cross = []
    for i, p in enumerate(qs):
        for q in qs[i + 1 :]:
            diff = compare_fields(by_q[p], by_q[q])
            ok &= not diff
            cross.append({"fields": [p, q], "differing_pairs": diff})
            lines.append(f"q={p} vs q={q}: {len(diff)} differing pairs")
    payload = {
        "ok": ok,
        "maxdim": list(max_dim),
        "reports": [r.to_json() for q in qs for r in by_q[q]],
        "cross_field": cross,
    }
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(payload, fh, indent=2)
    _emit(args, payload, lines + ["all match" if ok else "MISMATCH"])
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kronext", description="Extension products of Kronecker module classes.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="product of two decomposition symbols")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("chain", parents=[common], help="{[I_an]} * ... * {[I_a1]}")
    p.add_argument("a")
    p.set_defaults(func=cmd_chain)

    for name in ("dominance", "wdom"):
        p = sub.add_parser(name, parents=[common], help=f"{name} comparison a <= b")
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=cmd_dominance)

    p = sub.add_parser("genmaj", parents=[common], help="generalized majorization c < (b, a)")
    p.add_argument("c")
    p.add_argument("b")
    p.add_argument("a")
    p.set_defaults(func=cmd_genmaj)

    for name, func in (("embed", cmd_embed), ("mincoker", cmd_mincoker)):
        p = sub.add_parser(name, parents=[common], help="monomorphism I_b -> I_c" if name == "embed" else "minimal cokernel of I_b -> I_c")
        p.add_argument("b")
        p.add_argument("c")
        p.add_argument("--n", type=int, default=None, help="number of cokernel summands (default len(c) - len(b))")
        p.set_defaults(func=func)

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficients")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu", nargs="?")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("classsize", parents=[common], help="number of iso classes of a symbol over F_q")
    p.add_argument("symbol")
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_classsize)

    p = sub.add_parser("classify", parents=[common], help="decomposition of a representation read from a file")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="compare all products with the finite-field oracle")
    p.add_argument("--q", default="2,3")
    p.add_argument("--maxdim", default="4,4")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, pt.PartitionError, ValueError) as exc:
        print(f"kronext {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
