"""Command-line interface.

Exit codes: 0 on success, 1 when a check fails, 2 on usage, parse or
evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .calculus import SEGMENT, census, special_faces
from .errors import ConvexError
from .gallery import GALLERY_NAMES, gallery, gallery_params
from .polarity import dual, polar
from .selfdual import is_selfdual
from .spec_io import dumps, load_body
from .svg import render_svg
from .verify import verify_all


def read_spec(arg: str) -> str:
    """Inline JSON (starting with '{'), '-' for standard input, or a file path."""
    if arg.lstrip().startswith("{"):
        return arg
    if arg == "-":
        return sys.stdin.read()
    with open(arg, encoding="utf-8") as fh:
        return fh.read()


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _number(text: str):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    return int(v) if v.is_integer() and "." not in text else v


def cmd_census(args) -> int:
    print(census(load_body(read_spec(args.spec))))
    return 0


def cmd_polar(args) -> int:
    body = load_body(read_spec(args.spec))
    out = polar(body) if args.command == "polar" else dual(body)
    _write(dumps(out, exact=args.exact), args.output)
    return 0


def cmd_classify(args) -> int:
    body = load_body(read_spec(args.spec))
    for face, label in special_faces(body):
        print(f"{SEGMENT if label == SEGMENT else label.name} {face}")
    return 0


def cmd_selfdual(args) -> int:
    ok, dev = is_selfdual(load_body(read_spec(args.spec)), args.tol)
    print(f"selfdual={'true' if ok else 'false'} deviation={dev:.3e} tol={args.tol:g}")
    return 0 if ok else 1


def cmd_render(args) -> int:
    body = load_body(read_spec(args.spec))
    svg = render_svg(body, show_markers=args.markers, scale=args.scale, align_origin=not args.no_origin)
    _write(svg, args.output)
    return 0


def cmd_verify(args) -> int:
    body = load_body(read_spec(args.spec))
    claims = [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else None
    report = verify_all(body, claims, args.samples)
    print(report.text())
    failed = len(report.failures)
    print(f"{len(report.entries) - failed} passed, {failed} failed", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_example(args) -> int:
    names = gallery_params(args.name)
    if len(args.params) > len(names):
        raise ConvexError(f"{args.name} takes parameters ({', '.join(names)})", code="BAD_PARAM")
    spec = {"type": "gallery", "name": args.name}
    if args.params:
        spec["params"] = list(args.params)
    gallery(args.name, args.params)  # fail early on bad parameters
    _write(json.dumps(spec), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexdual", description="Planar convex bodies, polars and face lattices.")
    sub = p.add_subparsers(dest="command", required=True)
    spec_help = "body specification: a JSON file path, inline JSON, or - for stdin"

    s = sub.add_parser("census", help="print n, p, m, f, s")
    s.add_argument("spec", help=spec_help)
    s.set_defaults(func=cmd_census)

    for name in ("polar", "dual"):
        s = sub.add_parser(name, help=f"write the {name} body as a pieces specification")
        s.add_argument("spec", help=spec_help)
        s.add_argument("-o", "--output", help="output file (default: stdout)")
        s.add_argument("--exact", action="store_true", help="write polar arcs exactly instead of sampled")
        s.set_defaults(func=cmd_polar)

    s = sub.add_parser("classify", help="list segments and classified boundary points")
    s.add_argument("spec", help=spec_help)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("selfdual-check", help="test whether the body equals its dual")
    s.add_argument("spec", help=spec_help)
    s.add_argument("--tol", type=float, default=1e-8)
    s.set_defaults(func=cmd_selfdual)

    s = sub.add_parser("render", help="draw the body as SVG")
    s.add_argument("spec", help=spec_help)
    s.add_argument("-o", "--output", help="output .svg file (default: stdout)")
    s.add_argument("--markers", action="store_true", help="mark classified points (* + @ o)")
    s.add_argument("--scale", type=float, default=200.0)
    s.add_argument("--no-origin", action="store_true", help="omit the origin cross-hair")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("verify", help="run the claim checks and print a report")
    s.add_argument("spec", help=spec_help)
    s.add_argument("--claims", help="comma-separated claim id prefixes")
    s.add_argument("--samples", type=int, default=64, help="number of sampled smooth points")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("example", help="print the specification of a gallery body")
    s.add_argument("name", choices=GALLERY_NAMES)
    s.add_argument("params", nargs="*", type=_number)
    s.add_argument("-o", "--output", help="output file (default: stdout)")
    s.set_defaults(func=cmd_example)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConvexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc.strerror or exc}: {getattr(exc, 'filename', '') or ''}".rstrip(": "), file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
