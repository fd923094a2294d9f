"""Command line front end.

Subcommands: build, verify, homology, export.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error, 3 construction or gluing
failure.
"""

from __future__ import annotations

import argparse
import sys

from .assembly import assemble_cpn, assemble_toric
from .blocks import CIRCLE, CONED_OWN, CONED_ZERO, FactorSpec, build_block
from .complexes import ComplexError, SimplicialComplex
from .homology import SNF_BACKEND, homology
from .io import (
    FileFormatError,
    complex_to_facet_lines,
    complex_to_json,
    complex_to_text,
    parse_characteristic_file,
    parse_polytope_file,
    text_to_complex,
)
from .torus import torus_complex, triangulate_In
from .verify import CHECK_NAMES, run_checks

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3

MAX_N_TORUS = 6
MAX_N_TORIC = 3

_KIND_CHARS = {"s": CIRCLE, "c": CONED_OWN, "z": CONED_ZERO}


def _parse_block_spec(text: str) -> FactorSpec:
    """One character per factor slot: s = circle, c = coned disk,
    z = the diagonal-circle disk (at most one)."""
    try:
        kinds = tuple(_KIND_CHARS[ch] for ch in text)
    except KeyError:
        raise FileFormatError(
            f"bad block spec {text!r}: use characters s, c, z (e.g. 'czs')")
    if not kinds:
        raise FileFormatError("empty block spec")
    try:
        return FactorSpec(kinds)
    except ComplexError as e:
        raise FileFormatError(str(e))


def _build_target(args) -> SimplicialComplex:
    target = args.target
    if target == "torus":
        n = _int_arg(args.params, 0, "torus n")
        _range_check(n, args.max_n or MAX_N_TORUS, "torus")
        return torus_complex(n, n_max=args.max_n or MAX_N_TORUS)
    if target == "cube":
        n = _int_arg(args.params, 0, "cube n")
        _range_check(n, args.max_n or MAX_N_TORUS, "cube")
        return triangulate_In(n, n_max=args.max_n or MAX_N_TORUS)
    if target == "block":
        spec = _parse_block_spec(_str_arg(args.params, 0, "block spec"))
        _range_check(spec.n, args.max_n or MAX_N_TORIC, "block")
        return build_block(spec)
    if target == "cpn":
        n = _int_arg(args.params, 0, "cpn n")
        _range_check(n, args.max_n or MAX_N_TORIC, "cpn")
        return assemble_cpn(n, n_max=args.max_n or MAX_N_TORIC).complex
    if target == "toric":
        poly_path = _str_arg(args.params, 0, "polytope file")
        char_path = _str_arg(args.params, 1, "characteristic file")
        Q = parse_polytope_file(_read(poly_path))
        chi = parse_characteristic_file(_read(char_path), Q.m, Q.n)
        _range_check(Q.n, args.max_n or MAX_N_TORIC, "toric")
        return assemble_toric(Q, chi, n_max=args.max_n or MAX_N_TORIC).complex
    raise ComplexError(f"unknown build target {target!r}")


def _int_arg(params, i, what) -> int:
    try:
        return int(params[i])
    except (IndexError, ValueError):
        raise FileFormatError(f"missing or non-integer {what}")


def _str_arg(params, i, what) -> str:
    try:
        return params[i]
    except IndexError:
        raise FileFormatError(f"missing {what}")


def _range_check(n, n_max, what):
    # parameter validation is a usage error (exit 2), not a build failure
    if not 1 <= n <= n_max:
        raise FileFormatError(
            f"{what} size {n} out of range 1..{n_max} "
            f"(raise with --max-n at your own cost)")


def _read(path: str) -> str:
    try:
        with open(path, "r") as fh:
            return fh.read()
    except OSError as e:
        raise FileFormatError(f"cannot read {path}: {e}")


def _write(path: str | None, text: str, quiet: bool):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
        if not quiet:
            print(f"wrote {path}")
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    try:
        K = _build_target(args)
    except FileFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ComplexError as e:
        print(f"construction failed: {e}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    _write(args.out, complex_to_text(K), args.quiet)
    if not args.quiet:
        print(f"# dim {K.dim}, {len(K.vertices)} vertices, "
              f"{len(K.facets)} facets", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        K, _ = text_to_complex(_read(args.input))
    except FileFormatError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    names = CHECK_NAMES if args.checks is None else tuple(args.checks.split(","))
    bad = [c for c in names if c not in CHECK_NAMES]
    if bad:
        print(f"unknown checks: {', '.join(bad)}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run_checks(K, names)
    except ComplexError as e:
        print(f"verification aborted: {e}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_homology(args) -> int:
    try:
        K, _ = text_to_complex(_read(args.input))
    except FileFormatError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    h = homology(K)
    fv = K.f_vector()
    print(f"f-vector: {fv}")
    print(f"euler characteristic: {K.euler_characteristic()}")
    print(f"{'dim':>3}  {'betti':>5}  torsion")
    for d, b in enumerate(h.betti):
        tor = ",".join(map(str, h.torsion[d])) if h.torsion[d] else "-"
        print(f"{d:>3}  {b:>5}  {tor}")
    if not args.quiet:
        print(f"# snf backend: {SNF_BACKEND}", file=sys.stderr)
    return EXIT_OK


def cmd_export(args) -> int:
    try:
        K, _ = text_to_complex(_read(args.input))
    except FileFormatError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "canonical":
        text = complex_to_text(K)
    elif args.format == "json":
        text = complex_to_json(K)
    elif args.format == "facets-only":
        text = complex_to_facet_lines(K)
    else:
        print(f"unknown format {args.format!r}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _write(args.out, text, args.quiet)
    except OSError as e:
        print(f"write error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tritoric",
        description="Build and verify equivariant triangulations of tori, "
                    "blocks, projective spaces, and toric quotients.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct a complex and write it out")
    b.add_argument("target", choices=["torus", "cube", "block", "cpn", "toric"])
    b.add_argument("params", nargs="*",
                   help="torus/cube/cpn: n; block: kind string (s/c/z per "
                        "slot); toric: polytope-file characteristic-file")
    b.add_argument("--out", help="output path (default: stdout)")
    b.add_argument("--max-n", type=int, default=None,
                   help="override the size guard (builds grow fast)")
    b.add_argument("--quiet", action="store_true")
    b.set_defaults(fn=cmd_build)

    v = sub.add_parser("verify", help="run structural checks on a complex file")
    v.add_argument("input")
    v.add_argument("--checks", default=None,
                   help=f"comma list from: {','.join(CHECK_NAMES)}")
    v.add_argument("--json", action="store_true")
    v.set_defaults(fn=cmd_verify)

    h = sub.add_parser("homology", help="integer homology of a complex file")
    h.add_argument("input")
    h.add_argument("--quiet", action="store_true")
    h.set_defaults(fn=cmd_homology)

    e = sub.add_parser("export", help="re-export a complex file")
    e.add_argument("input")
    e.add_argument("--format", default="canonical",
                   choices=["canonical", "json", "facets-only"])
    e.add_argument("--out", help="output path (default: stdout)")
    e.add_argument("--quiet", action="store_true")
    e.set_defaults(fn=cmd_export)
    return p


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
