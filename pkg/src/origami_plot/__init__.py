"""Origami (snowflake) plots: a radar-chart alternative whose connected-region
area is invariant to attribute ordering and scales linearly with the values.

Layers: pure geometry (:mod:`origami_plot.geometry`), CSV I/O and the bundled
SUCRA example (:mod:`origami_plot.data`), deterministic SVG rendering
(:mod:`origami_plot.render`), a CLI (:mod:`origami_plot.cli`) and a stateless
JSON render API (:mod:`origami_plot.server`).
"""

__version__ = "0.1.0"

from .errors import OrigamiError
from .geometry import (
    AreaReport,
    AuxiliaryConfig,
    Dataset,
    ObjectArea,
    PolygonGeometry,
    WeightVector,
    apply_weights,
    area_calculation,
    build_polygon,
    default_aux,
    polygon_area_closed_form,
    polygon_area_shoelace,
    radar_polygon_area,
    resolve_aux,
    standardize_weights,
    validate_aux,
    validate_dataset,
)
from .data import (
    RawTable,
    embedded_example,
    parse_csv,
    read_csv_dataset,
    serialize_dataset,
    to_dataset,
    write_area_report,
)
from .render import (
    RenderOptions,
    layout,
    render_pairwise,
    render_single,
    render_weighted,
)

__all__ = [
    "__version__",
    "OrigamiError",
    "AreaReport",
    "AuxiliaryConfig",
    "Dataset",
    "ObjectArea",
    "PolygonGeometry",
    "RawTable",
    "RenderOptions",
    "WeightVector",
    "apply_weights",
    "area_calculation",
    "build_polygon",
    "default_aux",
    "embedded_example",
    "layout",
    "parse_csv",
    "polygon_area_closed_form",
    "polygon_area_shoelace",
    "radar_polygon_area",
    "read_csv_dataset",
    "render_pairwise",
    "render_single",
    "render_weighted",
    "resolve_aux",
    "serialize_dataset",
    "standardize_weights",
    "to_dataset",
    "validate_aux",
    "validate_dataset",
    "write_area_report",
]
