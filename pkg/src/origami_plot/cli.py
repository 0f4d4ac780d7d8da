"""Command-line front end: plot, pairwise, weighted, area, example, serve.

The same entry point backs both the ``origami`` and ``snowflake`` commands;
only the program name differs, output bytes are identical. Exit codes:
0 success, 1 I/O failure, 2 validation or usage error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .data import (
    embedded_example,
    read_csv_dataset,
    serialize_dataset,
    write_area_report,
)
from .errors import InvalidOptionError, OrigamiError
from .geometry import (
    Dataset,
    area_calculation,
    resolve_aux,
    standardize_weights,
)
from .render import RenderOptions, render_pairwise, render_single, render_weighted

DEFAULT_PORT = 8080
PORT_ENV_VAR = "ORIGAMI_PORT"

# (flag, RenderOptions field, parser) for the chart styling surface.
_OPTION_FLAGS = [
    ("--axistype", "axistype", int),
    ("--seg", "seg", int),
    ("--pty", "pty", int),
    ("--plty", "plty", int),
    ("--plwd", "plwd", float),
    ("--pdensity", "pdensity", float),
    ("--pangle", "pangle", float),
    ("--cgl-lty", "cglty", int),
    ("--cgl-lwd", "cglwd", float),
    ("--cgl-col", "cglcol", str),
    ("--axislab-col", "axislabcol", str),
    ("--title", "title", str),
    ("--vlcex", "vlcex", float),
    ("--calcex", "calcex", float),
    ("--palcex", "palcex", float),
    ("--width", "width", int),
    ("--height", "height", int),
]


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true/false, got {text!r}")


def _parse_color(text: str) -> tuple[float, ...]:
    try:
        parts = tuple(float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if len(parts) == 3:
        parts = parts + (1.0,)
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("colors take 3 or 4 comma-separated components")
    return parts


def _parse_weights(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _parse_labels(text: str) -> tuple[str, ...]:
    return tuple(text.split(","))


def _add_data_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", required=True, metavar="PATH",
                        help="input CSV ('-' reads stdin)")
    parser.add_argument("--scale-max", type=float, default=1.0, dest="scale_max",
                        help="value ceiling shared by all attributes (default 1)")
    parser.add_argument("--aux", type=float, default=None,
                        help="auxiliary point radius (default: half the data minimum; "
                             "required when the minimum is 0)")


def _add_option_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("chart options")
    for flag, dest, parse in _OPTION_FLAGS:
        group.add_argument(flag, dest=dest, type=parse, default=None)
    group.add_argument("--centerzero", dest="centerzero", type=_parse_bool,
                       default=None, metavar="{true,false}")
    group.add_argument("--caxislabels", dest="caxislabels", type=_parse_labels,
                       default=None, help="comma-separated tick labels (seg+1 entries)")
    for flag in ("--pcol", "--pfcol", "--pcol2", "--pfcol2"):
        group.add_argument(flag, dest=flag.lstrip("-"), type=_parse_color,
                           default=None, metavar="R,G,B[,A]")


def build_parser(prog: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=prog,
        description="Origami (snowflake) plots: radar charts whose area is "
                    "invariant to attribute ordering.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_plot = sub.add_parser("plot", help="render one object (or all objects) to SVG")
    _add_data_flags(p_plot)
    p_plot.add_argument("--object", required=True,
                        help="object name, or 'all' for one SVG per object")
    p_plot.add_argument("--out", default="-", metavar="PATH",
                        help="output SVG path ('-' for stdout); a directory "
                             "when --object all")
    _add_option_flags(p_plot)

    p_pair = sub.add_parser("pairwise", help="superimpose two objects in one SVG")
    _add_data_flags(p_pair)
    p_pair.add_argument("--object1", required=True)
    p_pair.add_argument("--object2", required=True)
    p_pair.add_argument("--out", default="-", metavar="PATH")
    _add_option_flags(p_pair)

    p_weighted = sub.add_parser("weighted",
                                help="overlay an object's weighted polygon on the original")
    _add_data_flags(p_weighted)
    p_weighted.add_argument("--object", required=True)
    p_weighted.add_argument("--weights", required=True, type=_parse_weights,
                            metavar="W1,W2,...", help="positive weights summing to 1")
    p_weighted.add_argument("--out", default="-", metavar="PATH")
    _add_option_flags(p_weighted)

    p_area = sub.add_parser("area", help="per-object raw and normalized areas as CSV")
    _add_data_flags(p_area)
    p_area.add_argument("--out", default="-", metavar="PATH")

    p_example = sub.add_parser("example", help="write the built-in SUCRA dataset as CSV")
    p_example.add_argument("--out", default="-", metavar="PATH")

    p_serve = sub.add_parser("serve", help="run the JSON render API (and web UI)")
    p_serve.add_argument("--port", type=int, default=None,
                         help=f"listen port (default {PORT_ENV_VAR} or {DEFAULT_PORT})")
    p_serve.add_argument("--host", default="127.0.0.1")

    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_output(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _load_dataset(args: argparse.Namespace) -> Dataset:
    return read_csv_dataset(_read_input(args.input), args.scale_max)


def _render_options(args: argparse.Namespace) -> RenderOptions:
    provided = {}
    for _, dest, _ in _OPTION_FLAGS:
        value = getattr(args, dest)
        if value is not None:
            provided[dest] = value
    for dest in ("centerzero", "caxislabels", "pcol", "pfcol", "pcol2", "pfcol2"):
        value = getattr(args, dest)
        if value is not None:
            provided[dest] = value
    return RenderOptions.from_mapping(provided)


def _slug(name: str) -> str:
    slug = re.sub(r"[^A-Za-z0-9]+", "-", name).strip("-").lower()
    return slug or "object"


def _cmd_plot(args: argparse.Namespace) -> int:
    ds = _load_dataset(args)
    aux = resolve_aux(ds, args.aux)
    opts = _render_options(args)
    if args.object == "all":
        if args.out == "-":
            raise InvalidOptionError("--object all needs --out set to a directory")
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        used: set[str] = set()
        for name in ds.object_names:
            stem = _slug(name)
            if stem in used:
                stem = f"{stem}-{ds.object_index(name)}"
            used.add(stem)
            svg = render_single(ds, name, aux, opts)
            _write_output(str(out_dir / f"{stem}.svg"), svg)
        return 0
    svg = render_single(ds, args.object, aux, opts)
    _write_output(args.out, svg)
    return 0


def _cmd_pairwise(args: argparse.Namespace) -> int:
    ds = _load_dataset(args)
    aux = resolve_aux(ds, args.aux)
    svg = render_pairwise(ds, args.object1, args.object2, aux, _render_options(args))
    _write_output(args.out, svg)
    return 0


def _cmd_weighted(args: argparse.Namespace) -> int:
    ds = _load_dataset(args)
    wv = standardize_weights(args.weights, ds.n_attributes)
    aux = resolve_aux(ds, args.aux)
    svg = render_weighted(ds, args.object, wv, aux, _render_options(args))
    _write_output(args.out, svg)
    return 0


def _cmd_area(args: argparse.Namespace) -> int:
    ds = _load_dataset(args)
    aux = resolve_aux(ds, args.aux)
    _write_output(args.out, write_area_report(area_calculation(ds, aux)))
    return 0


def _cmd_example(args: argparse.Namespace) -> int:
    _write_output(args.out, serialize_dataset(embedded_example()))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import app

    port = args.port
    if port is None:
        port = int(os.environ.get(PORT_ENV_VAR, DEFAULT_PORT))
    uvicorn.run(app, host=args.host, port=port)
    return 0


_COMMANDS = {
    "plot": _cmd_plot,
    "pairwise": _cmd_pairwise,
    "weighted": _cmd_weighted,
    "area": _cmd_area,
    "example": _cmd_example,
    "serve": _cmd_serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    prog = os.path.basename(sys.argv[0]) if sys.argv else "origami"
    if prog.startswith("python") or prog.endswith(".py") or not prog:
        prog = "origami"
    parser = build_parser(prog)
    args = parser.parse_args(argv)
    # Diagnostics carry no program name so the snowflake alias stays
    # byte-identical to origami on every stream.
    try:
        return _COMMANDS[args.command](args)
    except OrigamiError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
