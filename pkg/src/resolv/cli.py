"""Command-line front end.

Every subcommand reads/writes the JSON wire formats of the library and
prints either a fixed-width text report or canonical JSON; identical inputs
produce byte-identical output. Exit codes: 0 success, 1 verification failed,
2 bad input or schema, 3 resource cap exceeded.
"""

import argparse
import json
import os
import sys

from .catalog import CatalogEntry, builtin_catalog, compare, random_presentation
from .errors import ResourceLimitError, SchemaError
from .freealg import DEFAULT_WORD_CAP, element_to_json
from .info import (
    bogoliubov_dimension,
    entropy_numbers,
    information_score,
    raw_parameter_count,
)
from .matrixrep import kernel_of_evaluation
from .resolution import clifford_resolution, load_resolution, save_resolution, verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_RESOURCE = 3


def _json_out(doc):
    return json.dumps(doc, indent=2) + "\n"


def _fmt9(x):
    return f"{x:.9f}"


def render_verification(name, report, fmt):
    if fmt == "json":
        doc = {"name": name}
        doc.update(report.to_json_doc())
        return _json_out(doc)
    lines = [f"resolution: {name}"]
    mark = lambda ok: "✓" if ok else "✗"
    lines.append(
        f"surjective: {mark(report.surjective)} (generated dim {report.generated_dim}, "
        f"stabilized at degree {report.stabilization_degree})"
    )
    lines.append(f"relations vanish: {mark(report.relations_vanish)}")
    lines.append("exactness by degree:")
    lines.append("  degree  kernel  ideal  equal")
    for k in sorted(report.exactness_by_degree):
        e = report.exactness_by_degree[k]
        lines.append(
            f"  {k:>6}  {e.kernel_dim:>6}  {e.ideal_dim:>5}  {mark(e.equal)}"
        )
    lines.append(f"result: {'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def render_info(name, info, fmt):
    if fmt == "json":
        return _json_out(info.to_json_doc())
    return (
        f"resolution: {name}\n"
        f"s_numbers: {_fmt9(info.s_numbers)}\n"
        f"raw parameters: {info.raw_params} complex ({2 * info.raw_params} real)\n"
        f"bogoliubov dimension: {info.bogoliubov_dim}\n"
        f"score: {info.score}\n"
    )


def render_entropy(name, total, breakdown, fmt):
    if fmt == "json":
        doc = {
            "s_numbers": float(f"{total:.9g}"),
            "breakdown": {
                "ln_length": float(f"{breakdown['ln_length']:.9g}"),
                "ln_dims": [float(f"{v:.9g}") for v in breakdown["ln_dims"]],
                "ln_degrees": [float(f"{v:.9g}") for v in breakdown["ln_degrees"]],
            },
        }
        return _json_out(doc)
    lines = [
        f"resolution: {name}",
        f"s_numbers: {_fmt9(total)}",
        f"  ln(length): {_fmt9(breakdown['ln_length'])}",
    ]
    for i, v in enumerate(breakdown["ln_dims"]):
        lines.append(f"  ln(d_{i + 1}): {_fmt9(v)}")
    for i, v in enumerate(breakdown["ln_degrees"]):
        lines.append(f"  ln(∂_{i + 1}): {_fmt9(v)}")
    return "\n".join(lines) + "\n"


def render_params(name, raw, fmt):
    if fmt == "json":
        return _json_out({"raw_params": raw, "raw_params_real": 2 * raw})
    return f"resolution: {name}\nraw parameters: {raw} complex ({2 * raw} real)\n"


def render_bogdim(name, solution, fmt):
    if fmt == "json":
        return _json_out(solution.to_json_doc())
    return f"resolution: {name}\nbogoliubov dimension: {solution.dimension}\n"


def render_kernel(name, degree, basis, fmt):
    if fmt == "json":
        doc = {
            "degree": degree,
            "dimension": len(basis),
            "basis": [element_to_json(x) for x in basis],
        }
        return _json_out(doc)
    lines = [
        f"resolution: {name}",
        f"kernel of evaluation at degree {degree}: dimension {len(basis)}",
    ]
    for x in basis:
        lines.append(f"  {x}")
    return "\n".join(lines) + "\n"


def render_comparison(report, fmt):
    if fmt == "json":
        return _json_out(report.to_json_doc())
    header = ("name", "verified", "raw", "bog", "score", "s_numbers")
    rows = []
    for row in list(report.ranked) + list(report.failed):
        rows.append(
            (
                row.name,
                "yes" if row.verified else "NO",
                str(row.raw_params),
                str(row.bogoliubov_dim),
                str(row.score),
                _fmt9(row.s_numbers),
                "=min" if row.is_min else "",
            )
        )
    widths = [len(h) for h in header]
    for r in rows:
        for i in range(6):
            widths[i] = max(widths[i], len(r[i]))
    lines = [f"comparison: {report.scope}"]
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip())
    for r in rows:
        cells = [r[i].ljust(widths[i]) for i in range(6)]
        line = "  ".join(cells)
        if r[6]:
            line = f"{line}  {r[6]}"
        lines.append(line.rstrip())
    if report.failed:
        names = ", ".join(r.name for r in report.failed)
        lines.append(f"failed verification: {names}")
    else:
        lines.append("failed verification: none")
    return "\n".join(lines) + "\n"


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="resolv",
        description="Exact presentations of matrix algebras: construct, verify, score.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument(
            "--max-dim",
            type=int,
            default=None,
            help="word-space cap (default: RESOLV_MAX_DIM or 10^6)",
        )
        return p

    p = add_cap(sub.add_parser("clifford", help="write the Clifford presentation of M_{2^m}"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", required=True)

    def with_common(p, degree=False):
        add_cap(p)
        p.add_argument("file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        if degree:
            p.add_argument("--degree", type=int, default=None)
        return p

    with_common(sub.add_parser("verify", help="verify a resolution file"), degree=True)
    with_common(sub.add_parser("entropy", help="entropy of the discrete data"))
    with_common(sub.add_parser("params", help="raw continuous-parameter count"))
    with_common(sub.add_parser("bogdim", help="Bogoliubov automorphism dimension"))
    with_common(sub.add_parser("score", help="full information report"))
    p = add_cap(sub.add_parser("kernel", help="kernel of evaluation at a degree"))
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add_cap(sub.add_parser("catalog", help="write the built-in catalog to a directory"))
    p.add_argument("--out", required=True)

    p = add_cap(sub.add_parser("compare", help="rank resolution files by score"))
    p.add_argument("files", nargs="*")
    p.add_argument("--random", type=int, default=0, metavar="K")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--builtin", action="store_true", help="include the built-in catalog")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _word_cap(args):
    if args.max_dim is not None:
        return args.max_dim
    env = os.environ.get("RESOLV_MAX_DIM")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise SchemaError("RESOLV_MAX_DIM", f"not an integer: {env!r}") from exc
    return DEFAULT_WORD_CAP


def run(argv, stdout=None):
    """Parse argv, execute, print the report; returns the exit code."""
    out = stdout if stdout is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        cap = _word_cap(args)
        if args.command == "clifford":
            res = clifford_resolution(args.m)
            save_resolution(res, args.out)
            out.write(f"wrote {res.name} to {args.out}\n")
            return EXIT_OK
        if args.command == "verify":
            res = load_resolution(args.file)
            report = verify(res, args.degree, cap)
            out.write(render_verification(res.name, report, args.format))
            return EXIT_OK if report.passed else EXIT_VERIFY_FAILED
        if args.command == "entropy":
            res = load_resolution(args.file)
            total, breakdown = entropy_numbers(res)
            out.write(render_entropy(res.name, total, breakdown, args.format))
            return EXIT_OK
        if args.command == "params":
            res = load_resolution(args.file)
            out.write(render_params(res.name, raw_parameter_count(res), args.format))
            return EXIT_OK
        if args.command == "bogdim":
            res = load_resolution(args.file)
            out.write(render_bogdim(res.name, bogoliubov_dimension(res, cap), args.format))
            return EXIT_OK
        if args.command == "score":
            res = load_resolution(args.file)
            out.write(render_info(res.name, information_score(res, cap), args.format))
            return EXIT_OK
        if args.command == "kernel":
            res = load_resolution(args.file)
            basis = kernel_of_evaluation(res.target, args.degree, cap)
            out.write(render_kernel(res.name, args.degree, basis, args.format))
            return EXIT_OK
        if args.command == "catalog":
            os.makedirs(args.out, exist_ok=True)
            names = []
            for entry in builtin_catalog():
                path = os.path.join(args.out, f"{entry.name}.json")
                save_resolution(entry.resolution, path)
                names.append(entry.name)
            index_path = os.path.join(args.out, "index.json")
            with open(index_path, "w", encoding="utf-8") as fh:
                fh.write(_json_out({"entries": names}))
            out.write(f"wrote {len(names)} entries and index.json to {args.out}\n")
            return EXIT_OK
        if args.command == "compare":
            entries = []
            if args.builtin:
                entries.extend(builtin_catalog())
            for path in args.files:
                res = load_resolution(path)
                entries.append(
                    CatalogEntry(resolution=res, provenance={"file": path})
                )
            for k in range(args.random):
                entries.append(random_presentation(args.seed + k, cap=cap))
            report = compare(entries, args.degree, cap)
            out.write(render_comparison(report, args.format))
            return EXIT_VERIFY_FAILED if report.failed else EXIT_OK
        raise AssertionError(f"unhandled command {args.command}")
    except ResourceLimitError as exc:
        print(f"resolv: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except SchemaError as exc:
        print(f"resolv: invalid input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"resolv: error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main():
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
