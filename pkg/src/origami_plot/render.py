"""Deterministic SVG rendering of single, pairwise and weighted origami plots.

Chart anatomy, bottom to top: grid rings (concentric n-gons), solid main
axes, dashed auxiliary axes, polygon fills, polygon strokes, vertex markers,
tick labels, attribute labels, title. Identical inputs produce byte-identical
SVG text; element classes (axis-main, axis-aux, grid-ring, polygon-1, ...)
are stable so the documents stay machine-checkable.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence
from xml.sax.saxutils import escape

from .errors import (
    CanvasTooSmallError,
    InvalidOptionError,
    SameObjectError,
    UnsupportedSymbolError,
)
from .geometry import (
    AuxiliaryConfig,
    Dataset,
    PolygonGeometry,
    WeightVector,
    apply_weights,
    build_polygon,
    validate_aux,
)

RGBA = tuple[float, float, float, float]

PRIMARY_STROKE: RGBA = (0.2, 0.5, 0.5, 1.0)
PRIMARY_FILL: RGBA = (0.2, 0.5, 0.5, 0.1)
SECONDARY_STROKE: RGBA = (0.6, 0.3, 0.3, 1.0)
SECONDARY_FILL: RGBA = (0.6, 0.3, 0.3, 0.1)

# R line-type codes; the full table is out of scope.
_DASH_PATTERNS = {1: None, 2: "6 4", 3: "2 4"}

_MARKER_RADIUS = 3.0
_MIN_CANVAS = 100
_RADIUS_FRACTION = 0.38
_LABEL_FRACTION = 1.08
_BASE_FONT = 12.0


@dataclass(frozen=True)
class RenderOptions:
    """Chart options: axes, grid, symbols, colors, labels and canvas size.

    ``pty`` accepts the symbol codes 16 (filled circle) and 32 (no markers);
    ``plty``/``cglty`` accept line-type codes 1 (solid), 2 (dashed) and
    3 (dotted). Colors are (r, g, b, a) tuples with components in [0, 1].
    ``caxislabels`` defaults to seg+1 even labels from 0 to the data ceiling.
    """

    axistype: int = 1
    seg: int = 4
    pty: int = 16
    plty: int = 1
    plwd: float = 1.0
    pdensity: float | None = None
    pangle: float = 45.0
    cglty: int = 1
    cglwd: float = 0.1
    cglcol: str = "#000000"
    axislabcol: str = "#808080"
    title: str = ""
    centerzero: bool = True
    vlcex: float = 1.0
    calcex: float | None = None
    palcex: float | None = None
    caxislabels: tuple[str, ...] | None = None
    pcol: RGBA = PRIMARY_STROKE
    pfcol: RGBA = PRIMARY_FILL
    pcol2: RGBA = SECONDARY_STROKE
    pfcol2: RGBA = SECONDARY_FILL
    width: int = 600
    height: int = 600

    def validated(self) -> "RenderOptions":
        if self.axistype not in (0, 1, 2, 3):
            raise InvalidOptionError(f"axistype must be 0..3, got {self.axistype}")
        if not isinstance(self.seg, int) or self.seg < 1:
            raise InvalidOptionError(f"seg must be a positive integer, got {self.seg}")
        if self.pty not in (16, 32):
            raise UnsupportedSymbolError(
                f"point symbol {self.pty} unsupported; use 16 (circle) or 32 (none)"
            )
        for name, lty in (("plty", self.plty), ("cglty", self.cglty)):
            if lty not in _DASH_PATTERNS:
                raise InvalidOptionError(f"{name} must be one of 1, 2, 3; got {lty}")
        for name, wd in (("plwd", self.plwd), ("cglwd", self.cglwd)):
            if not (math.isfinite(wd) and wd >= 0):
                raise InvalidOptionError(f"{name} must be >= 0, got {wd}")
        if self.pdensity is not None and not (
            math.isfinite(self.pdensity) and self.pdensity > 0
        ):
            raise InvalidOptionError(f"pdensity must be > 0, got {self.pdensity}")
        if self.caxislabels is not None and len(self.caxislabels) != self.seg + 1:
            raise InvalidOptionError(
                f"caxislabels needs seg+1 = {self.seg + 1} entries, "
                f"got {len(self.caxislabels)}"
            )
        for name, color in (
            ("pcol", self.pcol),
            ("pfcol", self.pfcol),
            ("pcol2", self.pcol2),
            ("pfcol2", self.pfcol2),
        ):
            if len(color) != 4 or any(not (0.0 <= c <= 1.0) for c in color):
                raise InvalidOptionError(
                    f"{name} must be 4 components in [0, 1], got {color}"
                )
        for name, cex in (("vlcex", self.vlcex), ("calcex", self.calcex), ("palcex", self.palcex)):
            if cex is not None and not (math.isfinite(cex) and cex > 0):
                raise InvalidOptionError(f"{name} must be > 0, got {cex}")
        return self

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> "RenderOptions":
        """Build options from a partial dict (JSON body or parsed flags)."""
        kwargs = {}
        for key, value in mapping.items():
            if key not in _OPTION_FIELDS:
                raise InvalidOptionError(f"unknown option {key!r}")
            if value is None:
                continue
            if key in ("pcol", "pfcol", "pcol2", "pfcol2"):
                try:
                    value = tuple(float(c) for c in value)
                except (TypeError, ValueError):
                    raise InvalidOptionError(f"{key} must be 4 numbers") from None
            elif key == "caxislabels":
                if isinstance(value, str):
                    raise InvalidOptionError("caxislabels must be a list of labels")
                value = tuple(str(v) for v in value)
            elif key in ("axistype", "seg", "pty", "plty", "cglty", "width", "height"):
                if isinstance(value, bool) or not isinstance(value, int):
                    raise InvalidOptionError(f"{key} must be an integer, got {value!r}")
            elif key == "centerzero":
                if not isinstance(value, bool):
                    raise InvalidOptionError(f"centerzero must be a boolean, got {value!r}")
            elif key in ("title", "cglcol", "axislabcol"):
                value = str(value)
            else:
                try:
                    value = float(value)
                except (TypeError, ValueError):
                    raise InvalidOptionError(f"{key} must be a number, got {value!r}") from None
            kwargs[key] = value
        return cls(**kwargs).validated()


_OPTION_FIELDS = frozenset(RenderOptions.__dataclass_fields__)


@dataclass(frozen=True)
class ChartFrame:
    """Pixel-space chart frame: canvas center, plot radius, axis directions."""

    width: int
    height: int
    center: tuple[float, float]
    radius: float
    directions: tuple[tuple[float, float], ...]

    def to_px(self, x: float, y: float) -> tuple[float, float]:
        # Math coordinates are y-up; SVG is y-down.
        return self.center[0] + x, self.center[1] - y


def layout(n: int, opts: RenderOptions) -> ChartFrame:
    """Compute the chart frame for ``n`` main axes on the options' canvas."""
    if opts.width < _MIN_CANVAS or opts.height < _MIN_CANVAS:
        raise CanvasTooSmallError(
            f"canvas {opts.width}x{opts.height} below minimum {_MIN_CANVAS}x{_MIN_CANVAS}"
        )
    center = (opts.width / 2.0, opts.height / 2.0)
    radius = _RADIUS_FRACTION * min(opts.width, opts.height)
    directions = tuple(
        (
            math.cos(math.pi / 2.0 - 2.0 * math.pi * k / n),
            math.sin(math.pi / 2.0 - 2.0 * math.pi * k / n),
        )
        for k in range(n)
    )
    return ChartFrame(opts.width, opts.height, center, radius, directions)


def _fmt(x: float) -> str:
    # 9 decimal places keeps printed coordinates within 5e-10 of the
    # computed value; trailing zeros stripped for stable compact output.
    s = f"{x:.9f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _hex_color(color: RGBA) -> str:
    r, g, b = (int(c * 255.0 + 0.5) for c in color[:3])
    return f"#{r:02X}{g:02X}{b:02X}"


def _alpha(color: RGBA) -> float:
    return color[3]


def _label_text(value: float) -> str:
    return f"{value:g}"


def _tick_labels(opts: RenderOptions, scale_max: float) -> tuple[str, ...]:
    if opts.caxislabels is not None:
        return opts.caxislabels
    return tuple(_label_text(j * scale_max / opts.seg) for j in range(opts.seg + 1))


def _scaled_radius(value: float, scale_max: float, opts: RenderOptions, frame: ChartFrame) -> float:
    if opts.centerzero:
        return frame.radius * (value / scale_max)
    floor = scale_max / opts.seg
    if value < floor:
        warnings.warn(
            f"value {value} below the centerzero=False floor {floor}; clamped to center",
            stacklevel=3,
        )
        return 0.0
    return frame.radius * (value - floor) / (scale_max - floor)


def _polygon_points(
    pg: PolygonGeometry, scale_max: float, opts: RenderOptions, frame: ChartFrame
) -> list[tuple[float, float]]:
    pts = []
    for v in pg.vertices:
        r = _scaled_radius(v.radius, scale_max, opts, frame)
        pts.append(frame.to_px(r * math.cos(v.angle), r * math.sin(v.angle)))
    return pts


def _points_attr(pts: Sequence[tuple[float, float]]) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)


def _dash_attr(lty: int) -> str:
    pattern = _DASH_PATTERNS[lty]
    return f' stroke-dasharray="{pattern}"' if pattern else ""


def _opacity_attr(kind: str, alpha: float) -> str:
    return f' {kind}-opacity="{_label_text(alpha)}"' if alpha != 1.0 else ""


class _SvgBuilder:
    """Accumulates SVG elements for one chart."""

    def __init__(self, ds: Dataset, aux: AuxiliaryConfig, opts: RenderOptions):
        self.ds = ds
        self.opts = opts.validated()
        self.aux = validate_aux(aux.aux_value, ds)
        self.frame = layout(ds.n_attributes, self.opts)
        self.defs: list[str] = []
        self.body: list[str] = []

    # -- layer helpers ------------------------------------------------

    def background(self) -> None:
        self.body.append(
            f'<rect class="background" width="{self.frame.width}" '
            f'height="{self.frame.height}" fill="#FFFFFF"/>'
        )

    def grid_rings(self) -> None:
        opts, frame = self.opts, self.frame
        stroke_width = max(opts.cglwd, 0.25)  # cglwd default 0.1 is sub-visible
        for j in range(1, opts.seg + 1):
            r = frame.radius * j / opts.seg
            pts = [frame.to_px(r * dx, r * dy) for dx, dy in frame.directions]
            self.body.append(
                f'<polygon class="grid-ring" points="{_points_attr(pts)}" fill="none" '
                f'stroke="{opts.cglcol}" stroke-width="{_label_text(stroke_width)}"'
                f"{_dash_attr(opts.cglty)}/>"
            )

    def axes(self) -> None:
        frame = self.frame
        n = self.ds.n_attributes
        cx, cy = frame.center
        for dx, dy in frame.directions:
            x, y = frame.to_px(frame.radius * dx, frame.radius * dy)
            self.body.append(
                f'<line class="axis-main" x1="{_fmt(cx)}" y1="{_fmt(cy)}" '
                f'x2="{_fmt(x)}" y2="{_fmt(y)}" stroke="#000000" stroke-width="1"/>'
            )
        for k in range(n):
            angle = math.pi / 2.0 - (2 * k + 1) * math.pi / n
            x, y = frame.to_px(
                frame.radius * math.cos(angle), frame.radius * math.sin(angle)
            )
            self.body.append(
                f'<line class="axis-aux" x1="{_fmt(cx)}" y1="{_fmt(cy)}" '
                f'x2="{_fmt(x)}" y2="{_fmt(y)}" stroke="#000000" stroke-width="1" '
                f'stroke-dasharray="6 4"/>'
            )

    def hatch_pattern(self, slot: int, fill: RGBA) -> str:
        # Line spacing inversely proportional to density (R counts lines/inch).
        spacing = max(72.0 / self.opts.pdensity, 0.5)
        pattern_id = f"hatch-{slot}"
        self.defs.append(
            f'<pattern id="{pattern_id}" width="{_fmt(spacing)}" height="{_fmt(spacing)}" '
            f'patternUnits="userSpaceOnUse" patternTransform="rotate({_label_text(-self.opts.pangle)})">'
            f'<line x1="0" y1="0" x2="{_fmt(spacing)}" y2="0" '
            f'stroke="{_hex_color(fill)}" stroke-width="1"/></pattern>'
        )
        return pattern_id

    def polygon_fill(self, slot: int, pg: PolygonGeometry, fill: RGBA) -> None:
        pts = _polygon_points(pg, self.ds.scale_max, self.opts, self.frame)
        if self.opts.pdensity is not None:
            pattern_id = self.hatch_pattern(slot, fill)
            paint = f'fill="url(#{pattern_id})"'
        else:
            paint = f'fill="{_hex_color(fill)}"{_opacity_attr("fill", _alpha(fill))}'
        self.body.append(
            f'<polygon class="polygon-fill polygon-{slot}" points="{_points_attr(pts)}" '
            f'{paint} stroke="none"/>'
        )

    def polygon_stroke(self, slot: int, pg: PolygonGeometry, stroke: RGBA, lty: int) -> None:
        pts = _polygon_points(pg, self.ds.scale_max, self.opts, self.frame)
        self.body.append(
            f'<polygon class="polygon-stroke polygon-{slot}" points="{_points_attr(pts)}" '
            f'fill="none" stroke="{_hex_color(stroke)}"'
            f'{_opacity_attr("stroke", _alpha(stroke))} '
            f'stroke-width="{_label_text(self.opts.plwd)}"{_dash_attr(lty)}/>'
        )

    def markers(self, slot: int, pg: PolygonGeometry, color: RGBA) -> None:
        if self.opts.pty == 32:
            return
        pts = _polygon_points(pg, self.ds.scale_max, self.opts, self.frame)
        for vertex, (x, y) in zip(pg.vertices, pts):
            if vertex.kind != "main":
                continue
            self.body.append(
                f'<circle class="marker marker-{slot}" cx="{_fmt(x)}" cy="{_fmt(y)}" '
                f'r="{_label_text(_MARKER_RADIUS)}" fill="{_hex_color(color)}"'
                f'{_opacity_attr("fill", _alpha(color))}/>'
            )

    def tick_labels(self) -> None:
        opts, frame = self.opts, self.frame
        if opts.axistype in (1, 3):
            labels = _tick_labels(opts, self.ds.scale_max)
            size = _BASE_FONT * (opts.calcex if opts.calcex is not None else 1.0)
            cx, cy = frame.center
            for j, label in enumerate(labels):
                y = cy - frame.radius * j / opts.seg
                self.body.append(
                    f'<text class="tick-label tick-center" x="{_fmt(cx + 4)}" y="{_fmt(y + 4)}" '
                    f'font-family="sans-serif" font-size="{_label_text(size)}" '
                    f'fill="{opts.axislabcol}">{escape(label)}</text>'
                )
        if opts.axistype in (2, 3):
            # Around-the-chart label: the attribute ceiling at each axis tip.
            size = _BASE_FONT * (opts.palcex if opts.palcex is not None else 1.0)
            text = _label_text(self.ds.scale_max)
            for dx, dy in frame.directions:
                x, y = frame.to_px(frame.radius * dx, frame.radius * dy)
                self.body.append(
                    f'<text class="tick-label tick-around" x="{_fmt(x)}" y="{_fmt(y)}" '
                    f'text-anchor="middle" font-family="sans-serif" '
                    f'font-size="{_label_text(size)}" fill="{opts.axislabcol}">'
                    f"{escape(text)}</text>"
                )

    def attribute_labels(self) -> None:
        opts, frame = self.opts, self.frame
        size = _BASE_FONT * opts.vlcex
        for name, (dx, dy) in zip(self.ds.attribute_names, frame.directions):
            r = _LABEL_FRACTION * frame.radius
            x, y = frame.to_px(r * dx, r * dy)
            if dx > 0.1:
                anchor = "start"
            elif dx < -0.1:
                anchor = "end"
            else:
                anchor = "middle"
            if dy > 0.1:
                y -= 4.0
            elif dy < -0.1:
                y += 12.0
            else:
                y += 4.0
            self.body.append(
                f'<text class="attr-label" x="{_fmt(x)}" y="{_fmt(y)}" '
                f'text-anchor="{anchor}" font-family="sans-serif" '
                f'font-size="{_label_text(size)}" fill="#000000">{escape(name)}</text>'
            )

    def title(self) -> None:
        if not self.opts.title:
            return
        self.body.append(
            f'<text class="chart-title" x="{_fmt(self.frame.width / 2.0)}" y="24" '
            f'text-anchor="middle" font-family="sans-serif" font-size="16" '
            f'fill="#000000">{escape(self.opts.title)}</text>'
        )

    def legend(self, entries: Sequence[tuple[str, RGBA]]) -> None:
        x1 = self.frame.width - 160
        self.body.append('<g class="legend">')
        for i, (name, color) in enumerate(entries):
            y = 20 + 18 * i
            self.body.append(
                f'<line x1="{x1}" y1="{y}" x2="{x1 + 20}" y2="{y}" '
                f'stroke="{_hex_color(color)}" stroke-width="2"/>'
            )
            self.body.append(
                f'<text x="{x1 + 26}" y="{y + 4}" font-family="sans-serif" '
                f'font-size="12" fill="#000000">{escape(name)}</text>'
            )
        self.body.append("</g>")

    def document(self) -> str:
        parts = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{self.frame.width}" '
            f'height="{self.frame.height}" '
            f'viewBox="0 0 {self.frame.width} {self.frame.height}">',
        ]
        if self.defs:
            parts.append("<defs>" + "".join(self.defs) + "</defs>")
        parts.extend(self.body)
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


def _chart_base(builder: _SvgBuilder) -> None:
    builder.background()
    builder.grid_rings()
    builder.axes()


def render_single(
    ds: Dataset, object_name: str, aux: AuxiliaryConfig, opts: RenderOptions = RenderOptions()
) -> str:
    """One object's origami plot as standalone SVG text."""
    builder = _SvgBuilder(ds, aux, opts)
    pg = build_polygon(ds.row(object_name), builder.aux)
    _chart_base(builder)
    builder.polygon_fill(1, pg, builder.opts.pfcol)
    builder.polygon_stroke(1, pg, builder.opts.pcol, builder.opts.plty)
    builder.markers(1, pg, builder.opts.pcol)
    builder.tick_labels()
    builder.attribute_labels()
    builder.title()
    return builder.document()


def render_pairwise(
    ds: Dataset,
    object1: str,
    object2: str,
    aux: AuxiliaryConfig,
    opts: RenderOptions = RenderOptions(),
) -> str:
    """Two objects superimposed for comparison: object1 in the primary colors,
    object2 in the secondary colors drawn above it, plus a color legend."""
    builder = _SvgBuilder(ds, aux, opts)
    idx1 = ds.object_index(object1)
    idx2 = ds.object_index(object2)
    if idx1 == idx2:
        raise SameObjectError(
            f"pairwise plot needs two distinct objects, got {object1!r} twice"
        )
    name1, name2 = ds.object_names[idx1], ds.object_names[idx2]
    pg1 = build_polygon(ds.values[idx1], builder.aux)
    pg2 = build_polygon(ds.values[idx2], builder.aux)
    _chart_base(builder)
    builder.polygon_fill(1, pg1, builder.opts.pfcol)
    builder.polygon_fill(2, pg2, builder.opts.pfcol2)
    builder.polygon_stroke(1, pg1, builder.opts.pcol, builder.opts.plty)
    builder.polygon_stroke(2, pg2, builder.opts.pcol2, builder.opts.plty)
    builder.markers(1, pg1, builder.opts.pcol)
    builder.markers(2, pg2, builder.opts.pcol2)
    builder.tick_labels()
    builder.attribute_labels()
    builder.title()
    builder.legend([(name1, builder.opts.pcol), (name2, builder.opts.pcol2)])
    return builder.document()


def render_weighted(
    ds: Dataset,
    object_name: str,
    wv: WeightVector,
    aux: AuxiliaryConfig,
    opts: RenderOptions = RenderOptions(),
) -> str:
    """Unweighted polygon (primary colors) overlaid with the weighted polygon
    (secondary colors, dashed). Both share the same auxiliary radius."""
    builder = _SvgBuilder(ds, aux, opts)
    row = ds.row(object_name)
    weighted = apply_weights(row, wv)
    pg_plain = build_polygon(row, builder.aux)
    pg_weighted = build_polygon(weighted, builder.aux)
    _chart_base(builder)
    builder.polygon_fill(1, pg_plain, builder.opts.pfcol)
    builder.polygon_fill(2, pg_weighted, builder.opts.pfcol2)
    builder.polygon_stroke(1, pg_plain, builder.opts.pcol, builder.opts.plty)
    builder.polygon_stroke(2, pg_weighted, builder.opts.pcol2, 2)  # always dashed
    builder.markers(1, pg_plain, builder.opts.pcol)
    builder.markers(2, pg_weighted, builder.opts.pcol2)
    builder.tick_labels()
    builder.attribute_labels()
    builder.title()
    return builder.document()
