"""Command-line front end.

Subcommands: matrix, entry, heatmap, verify, genpoly, trace-table.
Matrices can be emitted as exact CSV (reduced fractions), float CSV,
binary PGM heat maps, or JSON.  All file output is atomic (temp file
plus rename); exit codes are 0 for success, 1 for a verification
mismatch, 2 for usage errors.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .marginals import (
    GenPoly,
    ProbMatrix,
    UnsupportedShape,
    classify,
    count_matrix,
    gen_poly_rect,
    marginal_matrix,
)
from .rs import ORACLE_LIMIT, oracle_count_matrices, oracle_count_matrix
from .stats import convergence_table, format_3dp
from .young import (
    NotAPartitionError,
    ShapeParseError,
    f_syt,
    format_partition,
    parse_partition,
)


@dataclass
class VerifyReport:
    shape: tuple
    n: int
    matched: bool
    first_mismatch: tuple  # (i, j, formula_value, oracle_value) or None
    elapsed_ms: float

    def to_json(self) -> dict:
        return {
            "shape": format_partition(self.shape),
            "n": self.n,
            "matched": self.matched,
            "first_mismatch": (
                list(self.first_mismatch) if self.first_mismatch else None
            ),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def emit_csv_exact(P: ProbMatrix, shape) -> str:
    lines = [f"n={P.n} shape={format_partition(shape)}"]
    for row in P.rows:
        lines.append(",".join(_frac_str(v) for v in row))
    return "\n".join(lines) + "\n"


def load_csv_exact(text: str) -> ProbMatrix:
    """Inverse of emit_csv_exact (header is parsed for n only)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    n = int(lines[0].split()[0].split("=")[1])
    rows = tuple(
        tuple(Fraction(cell) for cell in ln.split(",")) for ln in lines[1:]
    )
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("matrix dimensions disagree with header")
    return ProbMatrix(n, rows)


def emit_csv_float(P: ProbMatrix, shape) -> str:
    lines = [f"n={P.n} shape={format_partition(shape)}"]
    for row in P.rows:
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def emit_json_matrix(P: ProbMatrix, shape) -> str:
    payload = {
        "n": P.n,
        "shape": format_partition(shape),
        "entries": [[_frac_str(v) for v in row] for row in P.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def render_heatmap(P: ProbMatrix, gamma: float = 1.0) -> bytes:
    """Binary PGM (P5): white is 0, black is the maximum entry."""
    n = P.n
    top = max(v for row in P.rows for v in row)
    pixels = bytearray()
    for row in P.rows:
        for v in row:
            if top == 0:
                level = 0
            elif gamma == 1.0:
                # exact: floor(255 v / top + 1/2)
                num = 2 * 255 * v.numerator * top.denominator
                den = v.denominator * top.numerator
                level = (num + den) // (2 * den)
            else:
                level = round(255 * float(v / top) ** gamma)
            pixels.append(255 - min(255, max(0, level)))
    header = f"P5\n{n} {n}\n255\n".encode("ascii")
    return header + bytes(pixels)


def write_atomic(path: str, data, binary: bool = False):
    tmp = f"{path}.tmp.{os.getpid()}"
    mode = "wb" if binary else "w"
    kwargs = {} if binary else {"encoding": "utf-8"}
    with open(tmp, mode, **kwargs) as fh:
        fh.write(data)
    os.replace(tmp, path)


def _output(data, out_path, binary: bool = False):
    if out_path:
        write_atomic(out_path, data, binary=binary)
    elif binary:
        sys.stdout.buffer.write(data)
    else:
        sys.stdout.write(data)


def _shape_matrix(shape, use_oracle: bool) -> ProbMatrix:
    if use_oracle:
        n = sum(shape)
        if n > ORACLE_LIMIT:
            raise ValueError(f"--oracle limited to n <= {ORACLE_LIMIT}")
        counts = oracle_count_matrix(shape)
        denom = f_syt(shape) ** 2
        rows = tuple(
            tuple(Fraction(v, denom) for v in row) for row in counts
        )
        return ProbMatrix(n, rows)
    return marginal_matrix(shape)[1]


def partitions_of(n: int):
    """All partitions of n, largest part first."""

    def rec(remaining, cap, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            yield from rec(remaining - part, part, prefix)
            prefix.pop()

    yield from rec(n, n, [])


def _family_kinds(name: str) -> set:
    if name == "all":
        return {"hook", "two-row", "rect"}
    return {name}


def run_verify(n: int, family: str) -> list:
    """Compare kernel matrices against the brute-force pass over S_n."""
    wanted = _family_kinds(family)
    oracle = oracle_count_matrices(n)
    reports = []
    for shape in partitions_of(n):
        fams = classify(shape)
        if not any(f.kind in wanted for f in fams):
            continue
        start = time.perf_counter()
        formula = count_matrix(shape)
        expected = oracle[shape]
        mismatch = None
        for i in range(n):
            for j in range(n):
                if formula.rows[i][j] != expected[i][j]:
                    mismatch = (i + 1, j + 1, formula.rows[i][j], expected[i][j])
                    break
            if mismatch:
                break
        elapsed = (time.perf_counter() - start) * 1000
        reports.append(VerifyReport(shape, n, mismatch is None, mismatch, elapsed))
    return reports


def emit_genpoly_csv(poly: GenPoly) -> str:
    n = poly.ell * poly.m
    lines = [f"ell={poly.ell} m={poly.m}"]
    for i in range(1, n + 1):
        lines.append(",".join(str(poly.coeff(i, j)) for j in range(1, n + 1)))
    return "\n".join(lines) + "\n"


def emit_genpoly_json(poly: GenPoly) -> str:
    n = poly.ell * poly.m
    payload = {
        "ell": poly.ell,
        "m": poly.m,
        "coeffs": [
            [poly.coeff(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def emit_trace_table(n: int, m_max: int) -> str:
    reports = convergence_table(n, m_max)
    by_m = {}
    for rep in reports:
        by_m.setdefault(rep.m, {})[rep.family] = rep
    lines = ["m,wallis_exact,wallis,hook,two_row"]
    for m in range(m_max + 1):
        hook = by_m[m]["hook"]
        two = by_m[m]["two-row"]
        w = hook.wallis_limit
        lines.append(
            ",".join(
                [
                    str(m),
                    _frac_str(w),
                    format_3dp(w),
                    format_3dp(hook.trace_prob / n),
                    format_3dp(two.trace_prob / n),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsm",
        description="Exact position marginals of fixed-shape random permutations",
    )
    parser.add_argument(
        "--oracle",
        action="store_true",
        help=f"force the brute-force path (n <= {ORACLE_LIMIT})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrix", help="emit the full probability matrix")
    p.add_argument("--shape", required=True)
    p.add_argument(
        "--format",
        default="csv-exact",
        choices=["csv-exact", "csv-float", "pgm", "json"],
    )
    p.add_argument("--out")
    p.add_argument("--gamma", type=float, default=1.0)

    p = sub.add_parser("entry", help="print one exact entry as p/q")
    p.add_argument("--shape", required=True)
    p.add_argument("-i", type=int, required=True)
    p.add_argument("-j", type=int, required=True)

    p = sub.add_parser("heatmap", help="write a PGM heat map")
    p.add_argument("--shape", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--gamma", type=float, default=1.0)

    p = sub.add_parser("verify", help="check kernels against brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--family", default="all", choices=["hook", "two-row", "rect", "all"]
    )
    p.add_argument("--out")

    p = sub.add_parser("genpoly", help="rectangle generating polynomial grid")
    p.add_argument("--rect", required=True, metavar="LxM")
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    p.add_argument("--out")

    p = sub.add_parser("trace-table", help="fixed-point trace convergence table")
    p.add_argument("--n", type=int)
    p.add_argument("--m-max", type=int)
    p.add_argument(
        "--explore",
        metavar="SHAPE",
        help="instead of the table, print trace/n for one supported shape",
    )
    p.add_argument("--out")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "matrix":
        shape = parse_partition(args.shape)
        P = _shape_matrix(shape, args.oracle)
        if args.format == "csv-exact":
            _output(emit_csv_exact(P, shape), args.out)
        elif args.format == "csv-float":
            _output(emit_csv_float(P, shape), args.out)
        elif args.format == "json":
            _output(emit_json_matrix(P, shape), args.out)
        else:
            _output(render_heatmap(P, args.gamma), args.out, binary=True)
        return 0

    if args.command == "entry":
        shape = parse_partition(args.shape)
        n = sum(shape)
        if not (1 <= args.i <= n and 1 <= args.j <= n):
            raise ValueError(f"indices must lie in 1..{n}")
        P = _shape_matrix(shape, args.oracle)
        print(_frac_str(P.entry(args.i, args.j)))
        return 0

    if args.command == "heatmap":
        shape = parse_partition(args.shape)
        P = _shape_matrix(shape, args.oracle)
        _output(render_heatmap(P, args.gamma), args.out, binary=True)
        return 0

    if args.command == "verify":
        if args.n > ORACLE_LIMIT:
            raise ValueError(f"verify limited to n <= {ORACLE_LIMIT}")
        reports = run_verify(args.n, args.family)
        text = json.dumps([r.to_json() for r in reports], indent=2) + "\n"
        _output(text, args.out)
        return 0 if all(r.matched for r in reports) else 1

    if args.command == "genpoly":
        try:
            ell_s, m_s = args.rect.lower().split("x")
            ell, m = int(ell_s), int(m_s)
        except ValueError:
            raise ValueError(f"--rect expects LxM, got {args.rect!r}") from None
        if ell < 1 or m < 1:
            raise ValueError("rectangle sides must be positive")
        poly = gen_poly_rect(ell, m)
        if args.format == "csv":
            _output(emit_genpoly_csv(poly), args.out)
        else:
            _output(emit_genpoly_json(poly), args.out)
        return 0

    if args.command == "trace-table":
        if args.explore is not None:
            shape = parse_partition(args.explore)
            P = _shape_matrix(shape, args.oracle)
            ratio = P.trace() / P.n
            text = (
                f"shape={format_partition(shape)} n={P.n} "
                f"trace_over_n={_frac_str(ratio)} ({format_3dp(ratio)})\n"
            )
            _output(text, args.out)
            return 0
        if args.n is None or args.m_max is None:
            raise ValueError("trace-table needs --n and --m-max (or --explore)")
        _output(emit_trace_table(args.n, args.m_max), args.out)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def main() -> int:
    try:
        return run()
    except (ShapeParseError, NotAPartitionError, UnsupportedShape, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
