"""Origami-plot geometry: polygon construction, areas and weighting.

An origami plot places each attribute value on a radial main axis and
interleaves fixed-radius auxiliary points on bisecting axes. Connecting the
2n points yields a star-shaped polygon whose area depends only on the *sum*
of the attribute values, so it is invariant to attribute ordering and scales
linearly with the values — the two properties plain radar charts lack.

Everything in this module is a pure function over immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    AuxiliaryUnspecifiedError,
    DuplicateNameError,
    EmptyInputError,
    LengthMismatchError,
    MissingValueError,
    NonPositiveAuxError,
    NonPositiveWeightError,
    OutOfRangeError,
    TooFewAttributesError,
    UnknownObjectError,
    WeightSumError,
)

WEIGHT_SUM_TOLERANCE = 1e-9

MAIN = "main"
AUX = "aux"


@dataclass(frozen=True)
class Dataset:
    """Validated object x attribute matrix.

    Rows are objects, columns are attributes; every cell is finite and lies
    in [0, scale_max]. Construct via :func:`validate_dataset` rather than
    directly so the invariants hold.
    """

    object_names: tuple[str, ...]
    attribute_names: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]
    scale_max: float = 1.0

    @property
    def n_objects(self) -> int:
        return len(self.object_names)

    @property
    def n_attributes(self) -> int:
        return len(self.attribute_names)

    def min_value(self) -> float:
        return min(v for row in self.values for v in row)

    def object_index(self, name: str) -> int:
        """Index of an object by name; surrounding whitespace is ignored."""
        try:
            return self.object_names.index(name)
        except ValueError:
            pass
        wanted = name.strip()
        for i, existing in enumerate(self.object_names):
            if existing.strip() == wanted:
                return i
        available = ", ".join(self.object_names)
        raise UnknownObjectError(f"unknown object {name!r}; available: {available}")

    def row(self, name: str) -> tuple[float, ...]:
        return self.values[self.object_index(name)]


@dataclass(frozen=True)
class AuxiliaryConfig:
    """Shared radius of all auxiliary points, in the same units as the data."""

    aux_value: float


@dataclass(frozen=True)
class WeightVector:
    """Positive attribute weights summing to 1, plus max-standardized factors.

    ``standardized[k] = weights[k] / max(weights)`` so the top-weighted
    attribute keeps its unweighted radius (its factor is exactly 1.0).
    """

    weights: tuple[float, ...]
    standardized: tuple[float, ...]


@dataclass(frozen=True)
class Vertex:
    """One polygon vertex in polar form. ``kind`` is ``"main"`` or ``"aux"``."""

    kind: str
    index: int
    angle: float
    radius: float


@dataclass(frozen=True)
class PolygonGeometry:
    """Ordered 2n-vertex origami polygon: Main(0), Aux(0), ..., Main(n-1), Aux(n-1).

    Vertex i sits at angle pi/2 - i*pi/n (first attribute at 12 o'clock,
    then clockwise); every auxiliary vertex has radius ``aux_value``.
    """

    n: int
    vertices: tuple[Vertex, ...]
    aux_value: float

    def cartesian(self) -> tuple[tuple[float, float], ...]:
        return tuple(
            (v.radius * math.cos(v.angle), v.radius * math.sin(v.angle))
            for v in self.vertices
        )


@dataclass(frozen=True)
class ObjectArea:
    name: str
    raw_area: float
    normalized_area: float


@dataclass(frozen=True)
class AreaReport:
    """Per-object raw (plot-units^2) and normalized (in [0, 1]) areas."""

    entries: tuple[ObjectArea, ...]
    aux_value: float


def _parse_cell(cell, row_name: str, col_name: str) -> float:
    if cell is None:
        raise MissingValueError(f"missing value at ({row_name!r}, {col_name!r})")
    if isinstance(cell, str):
        text = cell.strip()
        if not text:
            raise MissingValueError(f"empty cell at ({row_name!r}, {col_name!r})")
        try:
            value = float(text)
        except ValueError:
            raise MissingValueError(
                f"non-numeric cell {cell!r} at ({row_name!r}, {col_name!r})"
            ) from None
    elif isinstance(cell, bool):
        raise MissingValueError(f"non-numeric cell {cell!r} at ({row_name!r}, {col_name!r})")
    elif isinstance(cell, (int, float)):
        value = float(cell)
    else:
        raise MissingValueError(f"non-numeric cell {cell!r} at ({row_name!r}, {col_name!r})")
    if not math.isfinite(value):
        raise MissingValueError(f"non-finite value at ({row_name!r}, {col_name!r})")
    return value


def _check_distinct(names: Sequence[str], what: str) -> None:
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise DuplicateNameError(f"duplicate {what} name {name!r}")
        seen.add(name)


def validate_dataset(
    object_names: Sequence[str],
    attribute_names: Sequence[str],
    values: Sequence[Sequence],
    scale_max: float = 1.0,
) -> Dataset:
    """Validate a named numeric table into a :class:`Dataset`.

    Cells may be numbers or numeric strings; anything empty, non-numeric or
    non-finite raises ``MissingValueError`` with its coordinates. Values must
    lie in [0, scale_max]; names must be non-empty and pairwise distinct;
    at least 3 attributes and 1 object are required. Row/column order is
    preserved.
    """
    if not (isinstance(scale_max, (int, float)) and math.isfinite(scale_max) and scale_max > 0):
        raise OutOfRangeError(f"scale_max must be a positive finite number, got {scale_max!r}")
    scale_max = float(scale_max)

    object_names = tuple(str(n) for n in object_names)
    attribute_names = tuple(str(n) for n in attribute_names)
    if len(attribute_names) < 3:
        raise TooFewAttributesError(
            f"need at least 3 attributes, got {len(attribute_names)}"
        )
    if not object_names:
        raise EmptyInputError("dataset has no objects")
    if any(not n.strip() for n in object_names):
        raise MissingValueError("blank object name")
    if any(not n.strip() for n in attribute_names):
        raise MissingValueError("blank attribute name")
    _check_distinct(object_names, "object")
    _check_distinct(attribute_names, "attribute")

    if len(values) != len(object_names):
        raise LengthMismatchError(
            f"{len(values)} value rows for {len(object_names)} objects"
        )
    parsed_rows = []
    for row_name, row in zip(object_names, values):
        if len(row) != len(attribute_names):
            raise LengthMismatchError(
                f"row {row_name!r} has {len(row)} cells, expected {len(attribute_names)}"
            )
        parsed = []
        for col_name, cell in zip(attribute_names, row):
            value = _parse_cell(cell, row_name, col_name)
            if value < 0.0 or value > scale_max:
                raise OutOfRangeError(
                    f"value {value} at ({row_name!r}, {col_name!r}) outside [0, {scale_max}]"
                )
            parsed.append(value)
        parsed_rows.append(tuple(parsed))

    return Dataset(object_names, attribute_names, tuple(parsed_rows), scale_max)


def default_aux(ds: Dataset) -> AuxiliaryConfig:
    """Default auxiliary radius: half the dataset minimum.

    When the minimum is 0 there is no usable default and the caller must
    supply the radius explicitly (``AuxiliaryUnspecifiedError``).
    """
    minimum = ds.min_value()
    if minimum == 0.0:
        raise AuxiliaryUnspecifiedError(
            "dataset minimum is 0; specify the auxiliary point value explicitly"
        )
    return AuxiliaryConfig(minimum / 2.0)


def validate_aux(aux_value: float, ds: Dataset) -> AuxiliaryConfig:
    """Check an explicit auxiliary radius against a dataset's scale."""
    if not (isinstance(aux_value, (int, float)) and math.isfinite(aux_value)):
        raise NonPositiveAuxError(f"auxiliary value must be a finite number, got {aux_value!r}")
    aux_value = float(aux_value)
    if aux_value <= 0.0:
        raise NonPositiveAuxError(f"auxiliary value must be > 0, got {aux_value}")
    if aux_value > ds.scale_max:
        raise OutOfRangeError(
            f"auxiliary value {aux_value} exceeds scale_max {ds.scale_max}"
        )
    return AuxiliaryConfig(aux_value)


def resolve_aux(ds: Dataset, aux_value: float | None) -> AuxiliaryConfig:
    """Explicit auxiliary radius if given, else the half-minimum default."""
    if aux_value is None:
        return default_aux(ds)
    return validate_aux(aux_value, ds)


def standardize_weights(
    weights: Sequence[float], expected_length: int | None = None
) -> WeightVector:
    """Validate a weight vector and divide it by its maximum.

    Weights must be strictly positive and sum to 1 within 1e-9. The returned
    ``standardized`` factors lie in (0, 1] with the maximum exactly 1, so the
    top-weighted attribute is left untouched by :func:`apply_weights`.
    """
    w = tuple(float(x) for x in weights)
    if not w:
        raise LengthMismatchError("empty weight vector")
    for x in w:
        if not math.isfinite(x) or x <= 0.0:
            raise NonPositiveWeightError(f"weights must be > 0, got {x}")
    total = math.fsum(w)
    if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
        raise WeightSumError(f"weights must sum to 1, got {total!r}")
    if expected_length is not None and len(w) != expected_length:
        raise LengthMismatchError(
            f"{len(w)} weights for {expected_length} attributes"
        )
    top = max(w)
    return WeightVector(w, tuple(x / top for x in w))


def apply_weights(values: Sequence[float], wv: WeightVector) -> tuple[float, ...]:
    """Scale attribute values by the standardized weight factors.

    The argmax-weight attribute is multiplied by exactly 1.0 and therefore
    unchanged; all other values shrink (factors < 1).
    """
    if len(values) != len(wv.standardized):
        raise LengthMismatchError(
            f"{len(values)} values for {len(wv.standardized)} weights"
        )
    return tuple(v * s for v, s in zip(values, wv.standardized))


def build_polygon(values: Sequence[float], aux: AuxiliaryConfig) -> PolygonGeometry:
    """Interleave main values with auxiliary points into the 2n-vertex polygon.

    Vertex i is at angle pi/2 - i*pi/n; even vertices carry the attribute
    values, odd ones the shared auxiliary radius.
    """
    n = len(values)
    if n < 3:
        raise TooFewAttributesError(f"need at least 3 attributes, got {n}")
    if not (math.isfinite(aux.aux_value) and aux.aux_value > 0.0):
        raise NonPositiveAuxError(f"auxiliary value must be > 0, got {aux.aux_value}")
    radii = [float(v) for v in values]
    if any(not math.isfinite(r) or r < 0.0 for r in radii):
        raise OutOfRangeError("polygon radii must be finite and >= 0")

    vertices = []
    for i in range(2 * n):
        angle = math.pi / 2.0 - i * math.pi / n
        if i % 2 == 0:
            vertices.append(Vertex(MAIN, i // 2, angle, radii[i // 2]))
        else:
            vertices.append(Vertex(AUX, i // 2, angle, aux.aux_value))
    return PolygonGeometry(n, tuple(vertices), aux.aux_value)


def polygon_area_shoelace(pg: PolygonGeometry) -> float:
    """Shoelace area of the vertex cycle in Cartesian coordinates.

    The polygon is star-shaped about the origin (angular gaps of pi/n and
    nonnegative radii), so this equals the sum of the 2n center triangles.
    Kept free of the closed form below: it is the independent oracle.
    """
    pts = pg.cartesian()
    cross = [
        x1 * y2 - x2 * y1
        for (x1, y1), (x2, y2) in zip(pts, pts[1:] + pts[:1])
    ]
    return abs(math.fsum(cross)) / 2.0


def polygon_area_closed_form(values: Sequence[float], aux_value: float) -> float:
    """Closed-form origami area: aux_value * sin(pi/n) * sum(values).

    Each main radius spans two center triangles with its flanking auxiliary
    points, each of area r*aux*sin(pi/n)/2; summing collapses to the product
    above. Depends on the values only through their sum, hence the ordering
    invariance and linear scaling.
    """
    n = len(values)
    if n < 3:
        raise TooFewAttributesError(f"need at least 3 attributes, got {n}")
    if not (math.isfinite(aux_value) and aux_value > 0.0):
        raise NonPositiveAuxError(f"auxiliary value must be > 0, got {aux_value}")
    if any(not math.isfinite(v) or v < 0.0 for v in values):
        raise OutOfRangeError("polygon radii must be finite and >= 0")
    return aux_value * math.sin(math.pi / n) * math.fsum(values)


def radar_polygon_area(values: Sequence[float]) -> float:
    """Area of the plain radar polygon (main points only, no auxiliary points).

    Equals sin(2*pi/n)/2 * sum(values[k] * values[k+1 mod n]): it depends on
    which values are *adjacent*, which is exactly the order-dependence the
    origami construction removes. Kept as the falsification witness.
    """
    n = len(values)
    if n < 3:
        raise TooFewAttributesError(f"need at least 3 attributes, got {n}")
    radii = [float(v) for v in values]
    if any(not math.isfinite(r) or r < 0.0 for r in radii):
        raise OutOfRangeError("polygon radii must be finite and >= 0")
    products = [radii[k] * radii[(k + 1) % n] for k in range(n)]
    return 0.5 * math.sin(2.0 * math.pi / n) * math.fsum(products)


def max_polygon_area(n: int, aux_value: float, scale_max: float) -> float:
    """Area of the all-max origami polygon: the normalization denominator."""
    return aux_value * math.sin(math.pi / n) * n * scale_max


def normalized_area(values: Sequence[float], scale_max: float) -> float:
    """Raw area over max area. The aux radius cancels algebraically, leaving
    mean(values)/scale_max, so the reduced form is computed directly: it is
    exact at the endpoints (1.0 iff all values equal scale_max, 0.0 iff all
    zero) and bit-for-bit independent of the auxiliary radius."""
    n = len(values)
    return math.fsum(values) / (n * scale_max)


def area_calculation(ds: Dataset, aux: AuxiliaryConfig) -> AreaReport:
    """Raw and normalized origami areas for every object in the dataset."""
    aux_cfg = validate_aux(aux.aux_value, ds)
    entries = tuple(
        ObjectArea(
            name,
            polygon_area_closed_form(row, aux_cfg.aux_value),
            normalized_area(row, ds.scale_max),
        )
        for name, row in zip(ds.object_names, ds.values)
    )
    return AreaReport(entries, aux_cfg.aux_value)
