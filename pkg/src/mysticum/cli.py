"""Command line: ``mysticum build|verify|sequence|render``.

Exit codes: 0 success, 1 usage error, 2 degenerate input, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import serialize
from .base import DegenerateSextuple, Sextuple, fixture_sextuple, random_sextuple
from .mutation import DEFAULT_MAX_HEIGHT, MutationDegeneracy, build_multimysticum
from .projective import format_scalar, parse_scalar
from .ranges import (
    RangeSpec,
    carrier,
    extract_range,
    proof_witnesses,
    required_height,
    verify_all,
    veronese_sequence,
)
from .render import Drawable, collect_elements, render_svg, select

EXIT_OK, EXIT_USAGE, EXIT_DEGENERATE, EXIT_FAILED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _params(text):
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != 6:
        raise argparse.ArgumentTypeError("exactly six comma-separated values expected")
    try:
        return [parse_scalar(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _size(text):
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError("size must look like 800x600") from exc
    if w <= 0 or h <= 0:
        raise argparse.ArgumentTypeError("size must be positive")
    return w, h


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _add_source(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--params", type=_params, help="six parameters: rationals or inf")
    g.add_argument("--random", action="store_true", help="sample a random sextuple")
    p.add_argument("--seed", type=int, default=0, help="seed for --random")
    p.add_argument("--height", type=_nonneg, default=DEFAULT_MAX_HEIGHT)
    p.add_argument("--out", type=Path, help="write output here instead of stdout")


def make_parser():
    parser = _Parser(prog="mysticum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="construct the multimysticum and dump it")
    _add_source(b)
    b.add_argument("--format", choices=("json", "text"), default="json")

    v = sub.add_parser("verify", help="check all 300 ranges and the proof witnesses")
    _add_source(v)
    v.add_argument("--depth", type=_nonneg, help="range depth (default: --height)")
    v.add_argument("--input", type=Path, help="verify a stored build document")
    v.add_argument("--format", choices=("json", "text"), default="text")

    s = sub.add_parser("sequence", help="print the Veronese sequence")
    s.add_argument("n", type=_nonneg, nargs="?", default=12)
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.add_argument("--out", type=Path)

    r = sub.add_parser("render", help="draw elements or a range as SVG")
    _add_source(r)
    r.add_argument("--labels", default=None,
                   help="comma-separated globs on label text, e.g. 'P *,K 3;05'")
    r.add_argument("--range", dest="range_spec", default=None,
                   help="draw one range with its carrier, e.g. 'K(3;05)'")
    r.add_argument("--heights", default="0", help="comma-separated layer heights")
    r.add_argument("--svg-size", type=_size, default=(800, 800))
    r.add_argument("--no-text", action="store_true", help="omit node labels")
    return parser


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _sextuple(args):
    if args.params is not None:
        return Sextuple(args.params)
    if args.random:
        return random_sextuple(args.seed)
    return fixture_sextuple()


def _config(args, s, **extra):
    cfg = {
        "params": [format_scalar(t) for t in s.params],
        "source": "params" if args.params is not None else ("random" if args.random else "fixture"),
        "seed": args.seed if args.random else None,
        "height": args.height,
    }
    cfg.update(extra)
    return cfg


def _degenerate(args, exc):
    doc = {
        "schema": serialize.SCHEMA,
        "error": {"type": type(exc).__name__, "step": exc.step, "detail": exc.detail},
    }
    if getattr(args, "format", "json") == "json":
        _emit(serialize.dumps(doc), args.out)
    print(f"degenerate input: {exc}", file=sys.stderr)
    return EXIT_DEGENERATE


def cmd_build(args):
    t0 = time.perf_counter()
    try:
        s = _sextuple(args)
        m = build_multimysticum(s, args.height)
    except (DegenerateSextuple, MutationDegeneracy) as exc:
        return _degenerate(args, exc)
    doc = serialize.report_document(
        _config(args, s), m, timing={"seconds": round(time.perf_counter() - t0, 3)}
    )
    if args.format == "json":
        _emit(serialize.dumps(doc), args.out)
    else:
        c = doc["counts"]
        lines = [f"sextuple {' '.join(doc['config']['params'])}",
                 "fixed " + " ".join(f"{k}={v}" for k, v in c["fixed"].items())]
        lines += [f"height {l['height']}: {l['kirkman']} Kirkmans, {l['pascal']} Pascals"
                  for l in c["layers"]]
        lines += [f"inter-layer {l['lower']}: {l['count']} {l['kind']} elements"
                  for l in c["interlayers"]]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args):
    t0 = time.perf_counter()
    try:
        if args.input is not None:
            doc = serialize.loads(args.input.read_text(encoding="utf-8"))
            m = serialize.multimysticum_from_dict(doc)
            s = m.sextuple
            cfg = dict(doc.get("config") or {})
            cfg["input"] = str(args.input)
        else:
            s = _sextuple(args)
            m = build_multimysticum(s, args.height)
            cfg = _config(args, s)
        depth = args.height if args.depth is None else args.depth
        cfg["depth"] = depth
        summary = verify_all(m, depth)
        witnesses = proof_witnesses(m)
    except (DegenerateSextuple, MutationDegeneracy) as exc:
        return _degenerate(args, exc)
    doc = serialize.report_document(
        cfg, m, summary, witnesses,
        timing={"seconds": round(time.perf_counter() - t0, 3)},
    )
    ok = doc["verdict"]["ok"]
    if args.format == "json":
        _emit(serialize.dumps(doc), args.out)
    else:
        lines = [f"ranges {summary} " + " ".join(f"{k}={v}" for k, v in summary.by_kind().items())]
        for w in witnesses:
            lines.append(f"witness {'PASS' if w.ok else 'FAIL'} {w.name}")
        for r in summary.failures():
            mm = r.to_dict()["mismatch"]
            lines.append(f"mismatch {r.spec} index {mm['index']}: "
                         f"found {mm['found']} expected {mm['expected']}")
        lines.append("verdict " + ("PASS" if ok else "FAIL"))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_sequence(args):
    terms = [format_scalar(t) for t in veronese_sequence(args.n)]
    if args.format == "json":
        _emit(json.dumps(terms) + "\n", args.out)
    else:
        _emit("".join(t + "\n" for t in terms), args.out)
    return EXIT_OK


def cmd_render(args):
    try:
        heights = sorted({int(h) for h in args.heights.split(",") if h.strip()})
    except ValueError:
        print("render: --heights must be comma-separated integers", file=sys.stderr)
        return EXIT_USAGE
    spec = None
    if args.range_spec:
        try:
            spec = RangeSpec.parse(args.range_spec)
        except (ValueError, KeyError, IndexError):
            print(f"render: bad range spec {args.range_spec!r}", file=sys.stderr)
            return EXIT_USAGE
    try:
        s = _sextuple(args)
        m = build_multimysticum(s, max(heights))
    except (DegenerateSextuple, MutationDegeneracy) as exc:
        return _degenerate(args, exc)
    base_drawable = None
    if spec is not None:
        depth = args.height
        m = m.elevated_to(required_height(spec, depth))
        elements = extract_range(m, spec, depth)
        chosen = [Drawable(f"{spec}[{k}]", e, k - 2 if k >= 2 else None)
                  for k, e in enumerate(elements)]
        base_drawable = Drawable(f"carrier {spec.carrier_label}", carrier(m, spec))
    else:
        pool = collect_elements(m, heights)
        chosen = select(pool, args.labels if args.labels is not None else "P *")
    if not chosen:
        print("render: the label filter selected nothing", file=sys.stderr)
        return EXIT_USAGE
    svg = render_svg(chosen, s, size=args.svg_size, show_labels=not args.no_text,
                     carrier=base_drawable,
                     title=args.range_spec or args.labels or "P *")
    _emit(svg, args.out)
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "sequence": cmd_sequence,
    "render": cmd_render,
}


def main(argv=None):
    args = make_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
