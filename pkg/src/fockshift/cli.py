"""Command-line front end: ``fockshift {build,verify,classify,tree}``.

Exit codes: 0 when every selected check passes, 1 when a check fails,
2 on configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import classify as cl
from .config import RunConfig, load_config, seeded_config
from .decomposition import aligned_length, verify_theorem
from .errors import ConfigError, FockShiftError
from .fock import FockSpace, check_ct_relations, creation_operator, equality_on_subspace, export_operator
from .periodicity import export_tree, verify_containment
from .shift import build_shift, row_norm, shift_norm, weight_operator

CHECKS = ("relations", "factorization", "theorem", "containment")


def _dump(obj, indent=2) -> str:
    return json.dumps(obj, indent=indent, sort_keys=True) + "\n"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args) -> RunConfig:
    if args.config:
        cfg = load_config(args.config)
        if args.n is not None and args.n != cfg.n:
            raise ConfigError(f"--n {args.n} conflicts with N={cfg.n} in {args.config}")
        return cfg
    if args.n is None or args.k is None:
        raise ConfigError("either --config or both --n and --k are required")
    return seeded_config(args.n, args.k, args.m)


def _m(args, cfg: RunConfig) -> int:
    m = args.m if args.m is not None else cfg.m
    return 1 if m is None else m


def _truncation(args, cfg: RunConfig) -> int:
    """Truncation level: --depth, then the config's L, then the aligned level."""
    if args.depth is not None:
        return args.depth
    if cfg.max_length is not None:
        return cfg.max_length
    if cfg.k is not None:
        return aligned_length(cfg.k, _m(args, cfg))
    return int(cfg.weights.depth) + 1


def cmd_build(args) -> int:
    cfg = _config(args)
    space = FockSpace(cfg.n, _truncation(args, cfg))
    shifts = build_shift(cfg.weights, space)
    exact = not (args.float or cfg.arithmetic == "float")
    docs = []
    for i, t in enumerate(shifts, start=1):
        doc = export_operator(t, exact=exact)
        doc["letter"] = i
        docs.append(doc)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["letter", "row", "col", "value"])
        for doc in docs:
            for r, c, v in doc["entries"]:
                writer.writerow([doc["letter"], r, c, v])
        _emit(buf.getvalue(), args.out)
    else:
        doc = {"N": space.n, "L": space.max_length, "dimension": space.dimension, "shifts": docs}
        _emit(_dump(doc, indent=None), args.out)
    return 0


def _check_factorization(cfg: RunConfig, space: FockSpace) -> dict:
    shifts = build_shift(cfg.weights, space)
    top_level = space.max_length - 1
    failures = []
    for i, t in enumerate(shifts, start=1):
        w = weight_operator(t, i)
        if not equality_on_subspace(creation_operator(i, space) @ w, t, top_level):
            failures.append({"letter": i, "identity": "L_i W_i = T_i"})
        if not equality_on_subspace(w @ w, t.adjoint() @ t, top_level):
            failures.append({"letter": i, "identity": "W_i^2 = T_i* T_i"})
        diag_max = max(w.diagonal()[: space.cutoff(top_level)], default=0)
        if cfg.top is not None and shift_norm(cfg.weights, i).value != diag_max and space.max_length >= cfg.k:
            failures.append({"letter": i, "identity": "||T_i|| = max diag W_i"})
    out = {"check": "factorization", "passed": not failures, "max_word_length": top_level, "failures": failures}
    if cfg.top is not None:
        out["row_norm"] = str(row_norm(cfg.weights).value)
    return out


def cmd_verify(args) -> int:
    checks = list(args.check or [])
    if args.check_name:
        checks.insert(0, args.check_name)
    if not checks:
        raise ConfigError(f"choose a check: {', '.join(CHECKS)}")
    cfg = _config(args)
    reports = []
    for check in dict.fromkeys(checks):
        if check == "relations":
            space = FockSpace(cfg.n, _truncation(args, cfg))
            reports.append(check_ct_relations(build_shift(cfg.weights, space)).to_dict())
        elif check == "factorization":
            reports.append(_check_factorization(cfg, FockSpace(cfg.n, _truncation(args, cfg))))
        elif check == "theorem":
            if cfg.top is None:
                raise ConfigError("the theorem check needs a periodic weight config")
            reports.append(verify_theorem(cfg.top, _m(args, cfg)).to_dict())
        elif check == "containment":
            if cfg.top is None:
                raise ConfigError("the containment check needs a periodic weight config")
            n1 = args.n1 if args.n1 is not None else cfg.top.k
            if n1 != cfg.top.k:
                raise ConfigError(f"--n1 {n1} differs from the config period k={cfg.top.k}")
            if args.n2 is None:
                raise ConfigError("containment needs --n2")
            depth = args.depth if args.depth is not None else args.n2 + 2
            ok = verify_containment(cfg.top, args.n2, depth)
            reports.append({"check": "containment", "passed": ok, "n1": n1, "n2": args.n2, "depth": depth})
    passed = all(r["passed"] for r in reports)
    _emit(_dump({"command": "verify", "passed": passed, "reports": reports}), args.out)
    return 0 if passed else 1


def cmd_classify(args) -> int:
    if not args.seq_a or not args.seq_b:
        raise ConfigError("classify needs --seq-a and --seq-b")
    n = args.n if args.n is not None else 2
    a = cl.DivisorSequence.parse(args.seq_a)
    b = cl.DivisorSequence.parse(args.seq_b)
    equal = cl.supernatural_eq(a, b)
    k0 = cl.k0_isomorphic(n, a, b)
    agree = equal == k0
    verdict = ("equal (prefix semantics)" if equal else "not equal") + ("; K0 agrees" if agree else "; K0 DISAGREES")
    if args.format == "json":
        text = _dump({
            "command": "classify",
            "N": n,
            "a": {"terms": list(a.terms), "supernatural": str(cl.supernatural_from_sequence(a))},
            "b": {"terms": list(b.terms), "supernatural": str(cl.supernatural_from_sequence(b))},
            "prefix_semantics": True,
            "supernatural_equal": equal,
            "k0_isomorphic": k0,
            "agree": agree,
            "verdict": verdict,
        })
    else:
        lines = [
            f"a = {','.join(map(str, a))}: delta = {cl.supernatural_from_sequence(a)} (prefix)",
            f"b = {','.join(map(str, b))}: delta = {cl.supernatural_from_sequence(b)} (prefix)",
            f"K0 orders (N={n}): a = {[cl.k0_order(n, t).order for t in a]}, b = {[cl.k0_order(n, t).order for t in b]}",
            verdict,
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if agree else 1


def cmd_tree(args) -> int:
    cfg = _config(args)
    depth = args.depth if args.depth is not None else (cfg.depth if cfg.depth is not None else 2)
    tree = export_tree(cfg.weights, depth)
    if args.format == "json":
        _emit(_dump({
            "N": tree.n,
            "depth": tree.depth,
            "vertices": [str(v) for v in tree.vertices],
            "edges": [[str(p), str(c), i, str(w)] for p, c, i, w in tree.edges],
        }), args.out)
    else:
        _emit(tree.to_dot(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="JSON weight configuration")
    common.add_argument("-N", "--n", type=int, help="alphabet size")
    common.add_argument("--k", type=int, help="period (random weights when no config is given)")
    common.add_argument("--m", type=int, help="levels of the N**k-letter Fock space; L = k(m+1)-1")
    common.add_argument("--depth", type=int, help="truncation level or tree depth")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--format", choices=["json", "dot", "csv"], default=None)

    parser = argparse.ArgumentParser(prog="fockshift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="export the shift matrices T_1..T_N")
    p.add_argument("--float", action="store_true", help="export floating-point values")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", parents=[common], help="run exact verification checks")
    p.add_argument("check_name", nargs="?", choices=CHECKS)
    p.add_argument("--check", action="append", choices=CHECKS)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=[common], help="compare two divisor sequences")
    p.add_argument("--seq-a", help="comma-separated divisor sequence")
    p.add_argument("--seq-b", help="comma-separated divisor sequence")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tree", parents=[common], help="emit the weighted Fock tree as DOT")
    p.set_defaults(func=cmd_tree)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, FockShiftError, OSError) as exc:
        print(f"fockshift {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
