"""Command-line front end.

Three commands: ``betti`` prints one Betti table, ``verify`` runs a named
check suite, ``module-info`` dumps a module's matrices and characters.
Output is deterministic: fixed orderings, no timestamps, no floats.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 resource cap.
"""

import argparse
import json
import os
import sys

from .cubical import (
    DEFAULT_NAIVE_CAP,
    DimensionCapExceeded,
    cubical_complex,
    full_complex,
)
from .harrison import harrison_complex
from .linalg import format_scalar
from .modules import builtin, character, load_module, sgn_coinvariants_dim
from .perm import Permutation, symmetric_group
from .suites import SUITE_NAMES, run_suite

ENGINE_SLOT_CAP = 6
NAIVE_SLOT_CAP = 4

BETTI_FAMILIES = ("full", "ass", "lie", "tr", "sder", "harrison", "custom")
MODULE_FAMILIES = ("trivial", "sign", "regular", "ass", "lie", "tr", "sder")

_MODULE_OF = {
    "ass": "regular",
    "lie": "lie",
    "tr": "tr_cyclic",
    "sder": "lie_cyclic",
    "trivial": "trivial",
    "sign": "sign",
    "regular": "regular",
}


def _cap_from(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("CUBIX_CAP")
    if env:
        return int(env)
    return DEFAULT_NAIVE_CAP


def _load_custom(path: str):
    if not path:
        raise ValueError("--custom requires a module file path")
    return load_module(path)


def _resolve_module(family: str, n, custom_path):
    """(module or None, slot count) for one family token."""
    if family == "custom":
        module = _load_custom(custom_path)
        if n is not None and n != module.N:
            raise ValueError(
                f"--n {n} conflicts with the module's slot count {module.N}"
            )
        return module, module.N
    if n is None:
        raise ValueError(f"--n is required for family {family}")
    if n < 1:
        raise ValueError("--n must be at least 1")
    if family == "full":
        return None, n
    if family == "harrison":
        module = _load_custom(custom_path) if custom_path else builtin("regular", n)
        if module.N != n:
            raise ValueError(
                f"--n {n} conflicts with the module's slot count {module.N}"
            )
        return module, n
    kind = _MODULE_OF[family]
    module = builtin(kind, n)
    return module, module.N


def _render_table(table, family: str, slots: int, fmt: str) -> str:
    rows = [
        {"m": r.m, "dim": r.dim, "rank_d": r.rank, "betti": r.betti}
        for r in table.rows
    ]
    if fmt == "json":
        return json.dumps({"family": family, "n": slots, "rows": rows}, indent=2)
    if fmt == "csv":
        lines = ["m,dim,rank_d,betti"]
        lines += [f"{r['m']},{r['dim']},{r['rank_d']},{r['betti']}" for r in rows]
        return "\n".join(lines)
    widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in rows[0]}
    head = "  ".join(k.rjust(widths[k]) for k in ("m", "dim", "rank_d", "betti"))
    lines = [head]
    for r in rows:
        lines.append(
            "  ".join(str(r[k]).rjust(widths[k]) for k in ("m", "dim", "rank_d", "betti"))
        )
    lines.append(f"cohomology: {table.graded_symbol()}")
    return "\n".join(lines)


def cmd_betti(args) -> int:
    module, slots = _resolve_module(args.family, args.n, args.custom)
    if slots > ENGINE_SLOT_CAP:
        raise DimensionCapExceeded(slots, ENGINE_SLOT_CAP, "slot count")
    m_max = args.mmax if args.mmax is not None else slots + 2
    if m_max < 2:
        raise ValueError("--mmax must be at least 2")
    if args.family in ("full", "harrison") and args.mode == "naive":
        raise ValueError(f"mode naive is not defined for family {args.family}")
    if args.mode == "naive" and slots > NAIVE_SLOT_CAP:
        raise DimensionCapExceeded(slots, NAIVE_SLOT_CAP, "naive mode slot count")
    if args.family == "full":
        table = full_complex(slots, m_max).betti_table()
    elif args.family == "harrison":
        table = harrison_complex(module, symmetric_group(slots), m_max).betti_table()
    else:
        table = cubical_complex(
            module,
            symmetric_group(slots),
            m_max,
            mode=args.mode,
            cap=_cap_from(args),
        ).betti_table()
    n_out = args.n if args.n is not None else slots
    print(_render_table(table, args.family, n_out, args.format))
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, nmax=args.nmax, jobs=args.jobs)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'} [{c.suite}] {c.name}: {c.detail}")
    failed = sum(1 for c in checks if not c.passed)
    print(
        json.dumps(
            {
                "suite": args.suite,
                "nmax": args.nmax,
                "checks": len(checks),
                "failed": failed,
            }
        )
    )
    return 0 if failed == 0 else 1


def _partitions(total: int, largest=None):
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def _cycle_type_rep(partition) -> Permutation:
    images = []
    start = 1
    for part in partition:
        block = list(range(start, start + part))
        images.extend(block[1:] + block[:1])
        start += part
    return Permutation(tuple(images))


def cmd_module_info(args) -> int:
    if args.custom:
        module = _load_custom(args.custom)
    else:
        if args.family is None or args.n is None:
            raise ValueError("module-info needs --family with --n, or --custom")
        module = builtin(_MODULE_OF[args.family], args.n)
    group = symmetric_group(module.N)
    chars = []
    for partition in _partitions(module.N):
        rep = _cycle_type_rep(partition)
        label = "+".join(str(p) for p in partition)
        chars.append((label, format_scalar(character(module, rep))))
    sgn_dim = sgn_coinvariants_dim(module, group)
    if args.format == "json":
        payload = {
            "name": module.name,
            "slots": module.N,
            "dim": module.dim,
            "basis": list(module.basis_labels),
            "generators": [
                [[format_scalar(a.entry(i, j)) for j in range(module.dim)]
                 for i in range(module.dim)]
                for a in module.gen_actions
            ],
            "characters": {label: value for label, value in chars},
            "sgn_coinvariants": sgn_dim,
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"name: {module.name}")
    print(f"slots: {module.N}")
    print(f"dim: {module.dim}")
    print("basis: " + ", ".join(module.basis_labels))
    for i, a in enumerate(module.gen_actions, start=1):
        rows = [
            "[" + ", ".join(format_scalar(a.entry(r, c)) for c in range(module.dim)) + "]"
            for r in range(module.dim)
        ]
        print(f"s{i}: [" + ", ".join(rows) + "]")
    print("characters: " + ", ".join(f"{label}: {v}" for label, v in chars))
    print(f"sgn-coinvariants: {sgn_dim}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubix",
        description="Exact cohomology of word complexes under permutation actions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_betti = sub.add_parser("betti", help="print one Betti table")
    p_betti.add_argument("--family", required=True, choices=BETTI_FAMILIES)
    p_betti.add_argument("--custom", help="custom module JSON path")
    p_betti.add_argument("--n", type=int)
    p_betti.add_argument("--mmax", type=int)
    p_betti.add_argument("--mode", choices=("orbit", "naive"), default="orbit")
    p_betti.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p_betti.add_argument("--cap", type=int)
    p_betti.add_argument("--jobs", type=int, default=1)
    p_betti.set_defaults(func=cmd_betti)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite", required=True, choices=SUITE_NAMES + ("all",)
    )
    p_verify.add_argument("--nmax", type=int, default=4)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_info = sub.add_parser("module-info", help="describe one module")
    p_info.add_argument("--family", choices=MODULE_FAMILIES)
    p_info.add_argument("--custom", help="custom module JSON path")
    p_info.add_argument("--n", type=int)
    p_info.add_argument("--format", choices=("json", "table"), default="table")
    p_info.set_defaults(func=cmd_module_info)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DimensionCapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
