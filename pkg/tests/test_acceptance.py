"""Acceptance suite: one test per criterion, run at the stated tolerances.

The conftest terminal-summary hook prints one PASS/FAIL line per criterion.
CLI criteria exercise the installed ``origami``/``snowflake`` console scripts
end to end; install the package (``pip install -e .``) before running.
"""

import math
import random
import shutil
import subprocess
import time
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from conftest import elements_with_class, points_of, svg_root

from origami_plot import (
    AuxiliaryConfig,
    RenderOptions,
    apply_weights,
    area_calculation,
    build_polygon,
    default_aux,
    embedded_example,
    polygon_area_closed_form,
    polygon_area_shoelace,
    radar_polygon_area,
    render_pairwise,
    render_single,
    render_weighted,
    serialize_dataset,
    standardize_weights,
    validate_dataset,
    write_area_report,
)
from origami_plot.errors import (
    AuxiliaryUnspecifiedError,
    NonPositiveWeightError,
    WeightSumError,
)
from origami_plot.geometry import max_polygon_area
from origami_plot.server import app

REL_TOL = 1e-12
FIG4_WEIGHTS = (0.15, 0.25, 0.3, 0.2, 0.1)
PAIR = ("High-dose oral misoprostol", "High-dose vaginal misoprostol")


def rel_close(a: float, b: float, tol: float = REL_TOL) -> bool:
    return math.isclose(a, b, rel_tol=tol, abs_tol=0.0)


def cli(args: list[str], stdin: bytes = b"", binary: str = "origami"):
    path = shutil.which(binary)
    if path is None:
        pytest.fail(f"{binary} console script not on PATH; run 'pip install -e .'")
    return subprocess.run([path, *args], input=stdin, capture_output=True)


def test_criterion_permutation_invariance():
    rng = random.Random(20250810)
    start = time.perf_counter()
    for _ in range(1000):
        n = rng.randint(3, 12)
        values = [rng.uniform(0.0, 1.0) for _ in range(n)]
        aux = rng.uniform(1e-9, 1.0)
        reference = polygon_area_closed_form(values, aux)
        for _ in range(10):
            permuted = rng.sample(values, n)
            assert rel_close(polygon_area_closed_form(permuted, aux), reference)
    assert time.perf_counter() - start < 5.0


def test_criterion_radar_falsification_witness():
    ordered = [1.0, 1.0, 0.0, 0.0]
    shuffled = [1.0, 0.0, 1.0, 0.0]
    assert radar_polygon_area(ordered) == 0.5
    assert radar_polygon_area(shuffled) == 0.0
    aux = 0.5
    assert polygon_area_closed_form(ordered, aux) == polygon_area_closed_form(shuffled, aux)


def test_criterion_oracle_equivalence():
    rng = random.Random(20250811)
    start = time.perf_counter()
    for _ in range(10_000):
        n = rng.randint(3, 12)
        values = [rng.uniform(0.0, 1.0) for _ in range(n)]
        aux = rng.uniform(1e-9, 1.0)
        closed = polygon_area_closed_form(values, aux)
        sho = polygon_area_shoelace(build_polygon(values, AuxiliaryConfig(aux)))
        assert rel_close(sho, closed)
    assert time.perf_counter() - start < 10.0


def test_criterion_linearity():
    rng = random.Random(20250812)
    for _ in range(1000):
        n = rng.randint(3, 12)
        values = [rng.uniform(0.0, 1.0) for _ in range(n)]
        aux = rng.uniform(1e-9, 1.0)
        c = rng.uniform(0.0, 1.0)
        scaled_area = polygon_area_closed_form([c * v for v in values], aux)
        expected = c * polygon_area_closed_form(values, aux)
        assert math.isclose(scaled_area, expected, rel_tol=REL_TOL, abs_tol=1e-300)


def test_criterion_table1_reproduction():
    ds = embedded_example()
    aux = default_aux(ds)
    report = area_calculation(ds, aux)
    by_name = {e.name: e.normalized_area for e in report.entries}
    for entry, row in zip(report.entries, ds.values):
        assert rel_close(entry.normalized_area, sum(row) / len(row))
        sho = polygon_area_shoelace(build_polygon(row, aux))
        assert rel_close(sho / max_polygon_area(ds.n_attributes, aux.aux_value, 1.0),
                         entry.normalized_area)
    assert abs(by_name["Intracervical PGE2"] - 0.602) < REL_TOL
    assert abs(by_name["High-dose oral misoprostol"] - 0.616) < REL_TOL
    assert abs(by_name["Titrated oral misoprostol"] - 0.662) < REL_TOL
    for a1 in (0.04, 0.08, 0.5):
        other = area_calculation(ds, AuxiliaryConfig(a1))
        for e1, e2 in zip(report.entries, other.entries):
            assert abs(e1.normalized_area - e2.normalized_area) <= REL_TOL


def test_criterion_weighting():
    ds = embedded_example()
    row = ds.row("High-dose oral misoprostol")
    equal = standardize_weights([0.2] * 5)
    assert apply_weights(row, equal) == row
    aux = AuxiliaryConfig(0.08)
    assert build_polygon(apply_weights(row, equal), aux) == build_polygon(row, aux)

    fig4 = standardize_weights(FIG4_WEIGHTS)
    weighted = apply_weights(row, fig4)
    assert weighted[2] == row[2] == 0.81
    for k in (0, 1, 3, 4):
        assert weighted[k] < row[k]

    with pytest.raises(WeightSumError):
        standardize_weights([0.5, 0.6])
    with pytest.raises(NonPositiveWeightError):
        standardize_weights([0.5, -0.1, 0.6])
    with pytest.raises(NonPositiveWeightError):
        standardize_weights([0.6, 0.4, 0.0])


def test_criterion_aux_default():
    assert default_aux(embedded_example()).aux_value == 0.08
    with_zero = validate_dataset(["a"], ["x", "y", "z"], [[0.0, 0.4, 0.9]])
    with pytest.raises(AuxiliaryUnspecifiedError):
        default_aux(with_zero)


def test_criterion_svg_structure():
    ds = embedded_example()
    aux = default_aux(ds)
    for name in ds.object_names:
        svg = render_single(ds, name, aux)
        svg_root(svg)  # parses as XML
        assert len(elements_with_class(svg, "axis-main")) == 5
        assert len(elements_with_class(svg, "axis-aux")) == 5
        assert all(
            el.get("stroke-dasharray") for el in elements_with_class(svg, "axis-aux")
        )
        assert len(elements_with_class(svg, "grid-ring")) == 4
        strokes = elements_with_class(svg, "polygon-stroke")
        assert len(strokes) == 1
        assert len(points_of(strokes[0])) == 10  # <polygon> is closed by definition
        assert len(elements_with_class(svg, "marker")) == 5

    no_markers = render_single(ds, ds.object_names[0], aux, RenderOptions(pty=32))
    assert len(elements_with_class(no_markers, "marker")) == 0

    pairwise = render_pairwise(ds, PAIR[0], PAIR[1], aux)
    assert len(elements_with_class(pairwise, "polygon-stroke")) == 2

    weighted = render_weighted(
        ds, "High-dose oral misoprostol", standardize_weights(FIG4_WEIGHTS), aux
    )
    strokes = elements_with_class(weighted, "polygon-stroke")
    assert [s.get("stroke") for s in strokes] == ["#338080", "#994D4D"]
    assert strokes[0].get("stroke-dasharray") is None
    assert strokes[1].get("stroke-dasharray") == "6 4"


def test_criterion_cli_end_to_end(tmp_path):
    ds = embedded_example()

    example = cli(["example"])
    assert example.returncode == 0
    assert example.stdout.decode() == serialize_dataset(ds)

    out_dir = tmp_path / "all"
    plot_all = cli(
        ["plot", "--input", "-", "--object", "all", "--out", str(out_dir)],
        stdin=example.stdout,
    )
    assert plot_all.returncode == 0, plot_all.stderr
    svgs = sorted(out_dir.glob("*.svg"))
    assert len(svgs) == 8
    for path in svgs:
        root = svg_root(path.read_text(encoding="utf-8"))
        assert root.tag.endswith("svg")

    area = cli(["area", "--input", "-"], stdin=example.stdout)
    assert area.returncode == 0
    expected = write_area_report(area_calculation(ds, default_aux(ds)))
    assert area.stdout == expected.encode("utf-8")

    for args in (
        ["example"],
        ["area", "--input", "-"],
        ["plot", "--input", "-", "--object", "Intracervical PGE2", "--out", "-"],
    ):
        stdin = b"" if args == ["example"] else example.stdout
        assert cli(args, stdin).stdout == cli(args, stdin, binary="snowflake").stdout


def test_criterion_api_parity_and_statelessness():
    ds = embedded_example()
    example_csv = serialize_dataset(ds).encode("utf-8")
    with TestClient(app) as client:
        data = client.get("/api/example").json()

        cases = [
            (
                {"mode": "single", "data": data, "objects": ["Intracervical PGE2"]},
                ["plot", "--input", "-", "--object", "Intracervical PGE2", "--out", "-"],
            ),
            (
                {"mode": "pairwise", "data": data, "objects": list(PAIR)},
                ["pairwise", "--input", "-", "--object1", PAIR[0],
                 "--object2", PAIR[1], "--out", "-"],
            ),
            (
                {"mode": "weighted", "data": data,
                 "objects": ["High-dose oral misoprostol"],
                 "weights": list(FIG4_WEIGHTS)},
                ["weighted", "--input", "-", "--object", "High-dose oral misoprostol",
                 "--weights", ",".join(str(w) for w in FIG4_WEIGHTS), "--out", "-"],
            ),
        ]
        for body, args in cases:
            api_svg = client.post("/api/render", json=body).json()["svg"]
            cli_svg = cli(args, stdin=example_csv).stdout
            assert api_svg.encode("utf-8") == cli_svg, args[0]

        body = cases[0][0]

        def post(_):
            return client.post("/api/render", json=body).text

        with ThreadPoolExecutor(max_workers=50) as pool:
            results = list(pool.map(post, range(50)))
        assert len(set(results)) == 1
