"""Command-line interface.

Exit codes: 0 success, 1 failed cross-check or property, 2 usage or input
error, 3 size beyond the brute-force bound, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify as verify_mod
from .catalan_bijection import CatalanTuple, count_by_cores, sigma, sigma_inverse
from .compatibility import DEFAULT_BOUND, METHODS, CountTable, count_pairs, enumerate_pairs
from .core import TransferSystem, count_systems, enumerate_all
from .errors import InfeasibleSize, TransferError
from .fuss_catalan import catalan, fuss_catalan
from .oracles import brute_force_systems
from .render import render_ascii, render_svg

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_IO = 0, 1, 2, 3, 4

EPILOG = """\
Sizes are poset sizes: --n N works on [N] = {1 < ... < N}, whose transfer
systems are those of the cyclic group of order p^(N-1).  So the number of
compatible pairs reported for --n N is A_N(3,1), which counts pairs for
C_{p^(N-1)}.
"""


class CliError(Exception):
    def __init__(self, code, msg):
        self.code = code
        super().__init__(msg)


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _read_json(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_USAGE, f"invalid JSON: {exc}") from exc


def _read_system(path) -> TransferSystem:
    obj = _read_json(path)
    try:
        return TransferSystem.from_json(obj)
    except (TransferError, ValueError) as exc:
        raise CliError(EXIT_USAGE, f"invalid transfer system: {exc}") from exc


def _emit(text: str, output=None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {output}: {exc}") from exc


def _load_table(path) -> CountTable:
    if path and os.path.exists(path):
        try:
            return CountTable.load(path)
        except (OSError, ValueError) as exc:
            raise CliError(EXIT_IO, f"unreadable cache {path}: {exc}") from exc
    return CountTable()


def _save_table(table, path) -> None:
    if path:
        try:
            table.save(path)
        except OSError as exc:
            raise CliError(EXIT_IO, f"cannot write cache {path}: {exc}") from exc


def _need(args, name):
    value = getattr(args, name.replace("-", "_"))
    if value is None:
        raise CliError(EXIT_USAGE, f"--{name} is required for this command")
    return value


def _sizes(args):
    if args.n is not None and args.max_n is not None:
        raise CliError(EXIT_USAGE, "give either --n or --max-n, not both")
    if args.n is not None:
        return [args.n], False
    if args.max_n is not None:
        return list(range(1, args.max_n + 1)), True
    raise CliError(EXIT_USAGE, "--n or --max-n is required")


# --- enumerate ---------------------------------------------------------------


def _format_systems(systems, fmt):
    if fmt == "json":
        return "".join(_dumps(o.to_json()) + "\n" for o in systems)
    if fmt == "csv":
        lines = ["index,n,relations"]
        for k, o in enumerate(systems):
            rel = " ".join(f"{i}-{j}" for i, j in o.relations)
            lines.append(f"{k},{o.n},{rel}")
        return "\n".join(lines) + "\n"
    if fmt == "ascii":
        return "\n".join(f"# {k}\n{render_ascii(o)}" for k, o in enumerate(systems))
    raise CliError(EXIT_USAGE, f"format {fmt!r} is not available for enumeration")


def cmd_enumerate(args):
    n = _need(args, "n")
    if n < 0:
        raise CliError(EXIT_USAGE, "--n must be non-negative")
    if args.pairs:
        if n < 1:
            raise CliError(EXIT_USAGE, "--pairs needs --n >= 1")
        text = "".join(_dumps(p.to_json()) + "\n" for p in enumerate_pairs(n))
    else:
        text = _format_systems(list(enumerate_all(n)), args.format or "json")
    _emit(text, args.output)
    return EXIT_OK


# --- count -------------------------------------------------------------------


def _count_systems(n, method, bound):
    if method in (None, "recurrence", "all"):
        got = {"recurrence": count_systems(n)}
    else:
        got = {}
    if method in ("brute", "all"):
        if n > min(bound, 7):
            if method == "brute":
                raise InfeasibleSize(f"subset filter is limited to n <= {min(bound, 7)}")
        else:
            got["brute"] = len(brute_force_systems(n))
    if method == "cores":
        raise CliError(EXIT_USAGE, "method 'cores' counts pairs, not systems")
    return got, catalan(n)


def _count_pairs(n, method, bound, table):
    if method in (None, "recurrence"):
        return {"recurrence": count_pairs(n, "recurrence", table=table)}, fuss_catalan(n, 3, 1)
    if method == "all":
        got = {"recurrence": count_pairs(n, "recurrence", table=table)}
        if n <= bound:
            got["brute"] = count_pairs(n, "brute", bound)
            got["cores"] = count_pairs(n, "cores", bound)
        return got, fuss_catalan(n, 3, 1)
    return {method: count_pairs(n, method, bound, table=table)}, fuss_catalan(n, 3, 1)


def cmd_count(args):
    fmt = args.format or "ascii"
    if args.what == "table":
        max_n = _need(args, "max-n")
        if max_n < 1:
            raise CliError(EXIT_USAGE, "--max-n must be positive")
        table = _load_table(args.cache_path)
        rows = [(n, i, table.get(n, i)) for n in range(1, max_n + 1) for i in range(n)]
        _save_table(table, args.cache_path)
        if fmt == "csv":
            text = "n,i,d\n" + "".join(f"{n},{i},{d}\n" for n, i, d in rows)
        elif fmt == "json":
            text = "".join(_dumps({"n": n, "i": i, "d": d}) + "\n" for n, i, d in rows)
        else:
            lines = []
            for n in range(1, max_n + 1):
                lines.append(f"n={n}: " + " ".join(str(d) for m, i, d in rows if m == n))
            text = "\n".join(lines) + "\n"
        _emit(text, args.output)
        return EXIT_OK

    sizes, many = _sizes(args)
    bound = args.bound if args.bound is not None else DEFAULT_BOUND
    table = _load_table(args.cache_path) if args.what == "pairs" else None
    results = []
    status = EXIT_OK
    for n in sizes:
        if n < 1:
            raise CliError(EXIT_USAGE, "sizes must be positive")
        if args.what == "systems":
            got, expected = _count_systems(n, args.method, bound)
        else:
            got, expected = _count_pairs(n, args.method, bound, table)
        values = set(got.values())
        if values != {expected}:
            detail = ", ".join(f"{k}={v}" for k, v in sorted(got.items()))
            print(f"cross-check failed at n={n}: {detail}, closed form {expected}", file=sys.stderr)
            status = EXIT_CHECK
        results.append((n, next(iter(values)) if len(values) == 1 else got))
    if table is not None:
        _save_table(table, args.cache_path)
    if not many:
        text = f"{results[0][1]}\n"
    elif fmt == "csv":
        text = "n,count\n" + "".join(f"{n},{v}\n" for n, v in results)
    elif fmt == "json":
        text = "".join(_dumps({"n": n, "count": v}) + "\n" for n, v in results)
    else:
        text = "".join(f"{n} {v}\n" for n, v in results)
    _emit(text, args.output)
    return status


# --- verify ------------------------------------------------------------------


def cmd_verify(args):
    names = list(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        max_n = args.max_n if args.max_n is not None else verify_mod.DEFAULT_MAX_N[name]
        print(f"== {name} (max n = {max_n})")
        for check in verify_mod.SUITES[name](max_n):
            print(check.line())
            ok &= check.passed
    return EXIT_OK if ok else EXIT_CHECK


# --- sigma -------------------------------------------------------------------


def cmd_sigma(args):
    if args.n is not None:
        if args.invert:
            raise CliError(EXIT_USAGE, "--n lists sigma over all systems; it cannot be inverted")
        lines = [
            _dumps({"system": o.to_json(), "tuple": sigma(o).to_json()})
            for o in enumerate_all(args.n)
        ] if args.n >= 1 else []
        _emit("".join(line + "\n" for line in lines), args.output)
        return EXIT_OK
    if args.invert:
        obj = _read_json(args.input)
        try:
            t = CatalanTuple.from_json(obj)
            out = sigma_inverse(t).to_json()
        except TransferError as exc:
            raise CliError(EXIT_USAGE, f"invalid Catalan tuple: {exc}") from exc
    else:
        o = _read_system(args.input)
        if o.n < 1:
            raise CliError(EXIT_USAGE, "sigma needs n >= 1")
        out = sigma(o).to_json()
    _emit(_dumps(out) + "\n", args.output)
    return EXIT_OK


# --- render ------------------------------------------------------------------


def cmd_render(args):
    o = _read_system(args.input)
    fmt = args.format or "ascii"
    if fmt == "svg":
        text = render_svg(o, split=args.split)
    elif fmt == "ascii":
        text = render_ascii(o)
    elif fmt == "json":
        text = _dumps(o.to_json()) + "\n"
    else:
        raise CliError(EXIT_USAGE, f"format {fmt!r} is not available for render")
    _emit(text, args.output)
    return EXIT_OK


# --- export ------------------------------------------------------------------

SEQUENCES = {
    "catalan": ("Catalan numbers Cat_n", lambda n, a: catalan(n)),
    "systems": ("transfer systems on [n], by enumeration", lambda n, a: count_systems(n)),
    "a-3-1": ("A_n(3,1)", lambda n, a: fuss_catalan(n, 3, 1)),
    "a-3-2": ("A_n(3,2)", lambda n, a: fuss_catalan(n, 3, 2)),
    "pairs": ("compatible pairs on [n], by recurrence", lambda n, a: count_pairs(n) if n else 1),
    "fuss": ("A_n(p,r) for --p and --r", lambda n, a: fuss_catalan(n, a.p, a.r)),
}


def cmd_export(args):
    fmt = args.format
    if args.what == "sequence":
        name = _need(args, "name")
        max_n = _need(args, "max-n")
        if name not in SEQUENCES:
            raise CliError(EXIT_USAGE, f"unknown sequence {name!r}; choose from {sorted(SEQUENCES)}")
        if name == "fuss" and (args.p is None or args.r is None):
            raise CliError(EXIT_USAGE, "sequence 'fuss' needs --p and --r")
        _, fn = SEQUENCES[name]
        values = [(n, fn(n, args)) for n in range(0, max_n + 1)]
        if fmt == "csv":
            text = "n,value\n" + "".join(f"{n},{v}\n" for n, v in values)
        else:
            text = "".join(f"{v}\n" for _, v in values)
    elif args.what == "fuss-table":
        max_n = _need(args, "max-n")
        max_p = args.p if args.p is not None else 3
        max_r = args.r if args.r is not None else 3
        lines = ["n,p,r,value"]
        for n in range(0, max_n + 1):
            for p in range(1, max_p + 1):
                for r in range(0, max_r + 1):
                    lines.append(f"{n},{p},{r},{fuss_catalan(n, p, r)}")
        text = "\n".join(lines) + "\n"
    elif args.what == "breakdown":
        n = _need(args, "n")
        bound = args.bound if args.bound is not None else DEFAULT_BOUND
        if n < 1:
            raise CliError(EXIT_USAGE, "--n must be positive")
        if n > bound:
            raise InfeasibleSize(f"breakdown lists every composition; limited to n <= {bound}")
        result = count_by_cores(n)
        lines = ["composition;e;catalan_product;contribution"]
        lines += [row.csv() for row in result.breakdown]
        lines.append(f"total;;;{result.total}")
        text = "\n".join(lines) + "\n"
    elif args.what == "systems":
        n = _need(args, "n")
        text = _format_systems(list(enumerate_all(n)), fmt or "json")
    elif args.what == "tuples":
        from .catalan_bijection import enumerate_tuples

        n = _need(args, "n")
        text = "".join(_dumps(t.to_json()) + "\n" for t in enumerate_tuples(n))
    else:
        raise CliError(EXIT_USAGE, f"unknown export {args.what!r}")
    _emit(text, args.output)
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transfersys",
        description="Transfer systems on [n], compatible pairs and Fuss-Catalan counts.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats):
        p.add_argument("--n", type=int)
        p.add_argument("--max-n", type=int)
        p.add_argument("--format", choices=formats)
        p.add_argument("--output", help="write to this file instead of stdout")

    p = sub.add_parser("enumerate", help="list every transfer system on [n]", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    common(p, ["json", "csv", "ascii"])
    p.add_argument("--pairs", action="store_true", help="list compatible pairs instead")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count systems, pairs, or the d(n,i) table", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("what", choices=["systems", "pairs", "table"])
    common(p, ["csv", "json", "ascii"])
    p.add_argument("--method", choices=list(METHODS) + ["all"])
    p.add_argument("--cache-path", help="CSV memo of d(n,i), read and atomically rewritten")
    p.add_argument("--bound", type=int, help=f"brute-force size limit (default {DEFAULT_BOUND})")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=list(verify_mod.SUITES) + ["all"])
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sigma", help="map a system to its Catalan tuple (or back)")
    p.add_argument("--invert", action="store_true", help="read a tuple, print the system")
    p.add_argument("--input", help="JSON file (default stdin)")
    p.add_argument("--n", type=int, help="instead of reading input, list sigma over all of T_n")
    p.add_argument("--output")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("render", help="draw a system as an arc diagram")
    p.add_argument("--input", help="JSON file (default stdin)")
    p.add_argument("--format", choices=["ascii", "svg", "json"])
    p.add_argument("--split", type=int, help="dash the arrows i -> j with i <= SPLIT < j (svg)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("export", help="write sequences and tables")
    p.add_argument("what", choices=["sequence", "fuss-table", "breakdown", "systems", "tuples"])
    common(p, ["json", "csv", "ascii"])
    p.add_argument("--name", help="sequence: " + ", ".join(sorted(SEQUENCES)))
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--bound", type=int)
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except InfeasibleSize as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except TransferError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
