"""CSV input/output and the built-in SUCRA example dataset.

Expected table shape: first row is the header (first cell ignored, the rest
are attribute names), first column holds object names, remaining cells are
numeric. RFC 4180 quoting, comma delimiter, UTF-8, '.' decimal separator.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import EmptyInputError, RaggedRowError
from .geometry import AreaReport, Dataset, validate_dataset


@dataclass(frozen=True)
class RawTable:
    """Rectangular string table: attribute header plus (object, cells) rows.

    Numeric parsing is deferred to :func:`origami_plot.geometry.validate_dataset`
    so parse errors carry row/column coordinates.
    """

    attribute_names: tuple[str, ...]
    rows: tuple[tuple[str, tuple[str, ...]], ...]


def parse_csv(text: str) -> RawTable:
    """Parse CSV text into a :class:`RawTable`, preserving order.

    The first header cell (above the object-name column) is ignored.
    Surrounding whitespace in names is trimmed; interior whitespace is kept.
    """
    records = [rec for rec in csv.reader(io.StringIO(text)) if rec]
    if not records:
        raise EmptyInputError("no CSV content")
    header, *body = records
    if not body:
        raise EmptyInputError("CSV has a header but no data rows")
    attribute_names = tuple(cell.strip() for cell in header[1:])
    rows = []
    for i, record in enumerate(body, start=2):
        if len(record) != len(header):
            raise RaggedRowError(
                f"row {i} has {len(record)} cells, expected {len(header)}"
            )
        rows.append((record[0].strip(), tuple(record[1:])))
    return RawTable(attribute_names, tuple(rows))


def to_dataset(raw: RawTable, scale_max: float = 1.0) -> Dataset:
    """Validate a parsed table into a :class:`Dataset`."""
    return validate_dataset(
        [name for name, _ in raw.rows],
        raw.attribute_names,
        [cells for _, cells in raw.rows],
        scale_max,
    )


def read_csv_dataset(text: str, scale_max: float = 1.0) -> Dataset:
    return to_dataset(parse_csv(text), scale_max)


def serialize_dataset(ds: Dataset) -> str:
    """CSV text for a dataset; values written at full (repr) precision so
    ``read_csv_dataset`` round-trips them exactly."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("",) + ds.attribute_names)
    for name, row in zip(ds.object_names, ds.values):
        writer.writerow((name,) + tuple(repr(v) for v in row))
    return out.getvalue()


def write_area_report(report: AreaReport) -> str:
    """CSV area report: one row per object, areas with 6 decimal places."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("object", "raw_area", "normalized_area"))
    for entry in report.entries:
        writer.writerow(
            (entry.name, f"{entry.raw_area:.6f}", f"{entry.normalized_area:.6f}")
        )
    return out.getvalue()


# SUCRA scores for eight prostaglandin treatments across five delivery
# outcomes (higher is better). Ships with the package as a ready-made demo.
_SUCRA_ATTRIBUTES = ("caesarean", "maternal", "neonatal", "hyperstimulation", "vaginal")
_SUCRA_ROWS = (
    ("Intracervical PGE2", (0.24, 0.93, 0.79, 0.82, 0.23)),
    ("High-dose oral misoprostol", (0.78, 0.68, 0.81, 0.38, 0.43)),
    ("Low-dose oral misoprostol", (0.21, 0.37, 0.80, 0.99, 0.18)),
    ("Titrated oral misoprostol", (0.93, 0.58, 0.44, 0.54, 0.82)),
    ("High-dose vaginal misoprostol", (0.68, 0.51, 0.25, 0.16, 0.93)),
    ("Low-dose vaginal misoprostol", (0.69, 0.58, 0.23, 0.33, 0.79)),
    ("Vaginal PGE2", (0.42, 0.61, 0.81, 0.65, 0.65)),
    ("Vaginal PGE2 pessary", (0.55, 0.24, 0.37, 0.63, 0.47)),
)


def embedded_example() -> Dataset:
    """The built-in SUCRA example: 8 treatments x 5 outcomes, scale 0..1."""
    return validate_dataset(
        [name for name, _ in _SUCRA_ROWS],
        _SUCRA_ATTRIBUTES,
        [row for _, row in _SUCRA_ROWS],
        1.0,
    )
