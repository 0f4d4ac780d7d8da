"""CLI behavior: subcommands, exit codes, pipelines and the snowflake alias."""

import io
import shutil
import subprocess
import sys

import pytest

from conftest import elements_with_class, points_of

from origami_plot import (
    area_calculation,
    default_aux,
    embedded_example,
    render_single,
    serialize_dataset,
    write_area_report,
)
from origami_plot.cli import main
from origami_plot.geometry import AuxiliaryConfig


@pytest.fixture
def sucra_csv(tmp_path, sucra):
    path = tmp_path / "sucra.csv"
    path.write_text(serialize_dataset(sucra), encoding="utf-8")
    return path


def run_cli(args, capsys):
    code = main([str(a) for a in args])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_plot_single_object(sucra_csv, tmp_path, capsys, sucra):
    out = tmp_path / "p.svg"
    code, _, err = run_cli(
        ["plot", "--input", sucra_csv, "--object", "Intracervical PGE2", "--out", out],
        capsys,
    )
    assert code == 0 and err == ""
    svg = out.read_text(encoding="utf-8")
    assert len(points_of(elements_with_class(svg, "polygon-stroke")[0])) == 10
    assert svg == render_single(sucra, "Intracervical PGE2", default_aux(sucra))


def test_plot_to_stdout(sucra_csv, capsys):
    code, out, _ = run_cli(
        ["plot", "--input", sucra_csv, "--object", "Vaginal PGE2"], capsys
    )
    assert code == 0
    assert out.startswith("<?xml") and out.endswith("</svg>\n")


def test_plot_all_objects(sucra_csv, tmp_path, capsys, sucra):
    out_dir = tmp_path / "plots"
    code, _, _ = run_cli(
        ["plot", "--input", sucra_csv, "--object", "all", "--out", out_dir], capsys
    )
    assert code == 0
    files = sorted(out_dir.glob("*.svg"))
    assert len(files) == sucra.n_objects
    assert (out_dir / "intracervical-pge2.svg").exists()


def test_plot_unknown_object_exit_2(sucra_csv, capsys):
    code, _, err = run_cli(
        ["plot", "--input", sucra_csv, "--object", "PGE9", "--out", "-"], capsys
    )
    assert code == 2
    assert "UNKNOWN_OBJECT" in err and "Intracervical PGE2" in err


def test_plot_option_flags(sucra_csv, tmp_path, capsys):
    out = tmp_path / "styled.svg"
    code, _, _ = run_cli(
        [
            "plot", "--input", sucra_csv, "--object", "Vaginal PGE2", "--out", out,
            "--seg", "5", "--pty", "32", "--title", "Styled", "--axistype", "0",
            "--pcol", "0,0,1", "--width", "400", "--height", "300",
        ],
        capsys,
    )
    assert code == 0
    svg = out.read_text(encoding="utf-8")
    assert len(elements_with_class(svg, "grid-ring")) == 5
    assert elements_with_class(svg, "marker") == []
    assert elements_with_class(svg, "tick-label") == []
    assert elements_with_class(svg, "polygon-stroke")[0].get("stroke") == "#0000FF"


def test_area_stdout_matches_report_writer(sucra_csv, capsys, sucra):
    code, out, _ = run_cli(["area", "--input", sucra_csv], capsys)
    assert code == 0
    assert out == write_area_report(area_calculation(sucra, default_aux(sucra)))


def test_area_with_aux_override(sucra_csv, capsys, sucra):
    code, out, _ = run_cli(["area", "--input", sucra_csv, "--aux", "0.5"], capsys)
    assert code == 0
    assert out == write_area_report(area_calculation(sucra, AuxiliaryConfig(0.5)))


def test_weighted_invalid_weights_exit_2(sucra_csv, capsys):
    code, _, err = run_cli(
        ["weighted", "--input", sucra_csv, "--object", "Vaginal PGE2",
         "--weights", "0.5,0.6", "--out", "-"],
        capsys,
    )
    assert code == 2 and "WEIGHT_SUM" in err


def test_weighted_renders_two_polygons(sucra_csv, tmp_path, capsys):
    out = tmp_path / "w.svg"
    code, _, _ = run_cli(
        ["weighted", "--input", sucra_csv, "--object", "High-dose oral misoprostol",
         "--weights", "0.15,0.25,0.3,0.2,0.1", "--out", out],
        capsys,
    )
    assert code == 0
    assert len(elements_with_class(out.read_text(), "polygon-stroke")) == 2


def test_pairwise_same_object_exit_2(sucra_csv, capsys):
    code, _, err = run_cli(
        ["pairwise", "--input", sucra_csv, "--object1", "Vaginal PGE2",
         "--object2", "Vaginal PGE2", "--out", "-"],
        capsys,
    )
    assert code == 2 and "SAME_OBJECT" in err


def test_example_round_trips_through_area(capsys, monkeypatch, sucra):
    code, example_csv, _ = run_cli(["example"], capsys)
    assert code == 0
    monkeypatch.setattr(sys, "stdin", io.StringIO(example_csv))
    code, area_out, _ = run_cli(["area", "--input", "-"], capsys)
    assert code == 0
    assert area_out == write_area_report(area_calculation(sucra, default_aux(sucra)))


def test_aux_required_when_minimum_zero(tmp_path, capsys):
    path = tmp_path / "zero.csv"
    path.write_text(",x,y,z\na,0,0.5,0.5\n", encoding="utf-8")
    code, _, err = run_cli(["area", "--input", path], capsys)
    assert code == 2 and "AUX_UNSPECIFIED" in err
    code, out, _ = run_cli(["area", "--input", path, "--aux", "0.1"], capsys)
    assert code == 0 and "a,0.0" in out


def test_missing_input_file_exit_1(tmp_path, capsys):
    code, _, err = run_cli(
        ["area", "--input", tmp_path / "nope.csv"], capsys
    )
    assert code == 1 and "I/O error" in err


def test_ragged_csv_exit_2(tmp_path, capsys):
    path = tmp_path / "ragged.csv"
    path.write_text(",x,y,z\na,1,2,3\nb,1,2\n", encoding="utf-8")
    code, _, err = run_cli(["area", "--input", path], capsys)
    assert code == 2 and "RAGGED_ROW" in err


def test_plot_all_to_stdout_rejected(sucra_csv, capsys):
    code, _, err = run_cli(
        ["plot", "--input", sucra_csv, "--object", "all"], capsys
    )
    assert code == 2 and "INVALID_OPTION" in err


def test_centerzero_and_grid_flags(sucra_csv, tmp_path, capsys):
    out = tmp_path / "cz.svg"
    code, _, _ = run_cli(
        ["plot", "--input", sucra_csv, "--object", "Vaginal PGE2", "--out", out,
         "--centerzero", "false", "--aux", "0.3", "--cgl-col", "#ff0000",
         "--cgl-lwd", "1.5", "--caxislabels", "a,b,c,d,e"],
        capsys,
    )
    assert code == 0
    svg = out.read_text(encoding="utf-8")
    ring = elements_with_class(svg, "grid-ring")[0]
    assert ring.get("stroke") == "#ff0000"
    assert ring.get("stroke-width") == "1.5"
    labels = [el.text for el in elements_with_class(svg, "tick-center")]
    assert labels == ["a", "b", "c", "d", "e"]


def test_unicode_names_round_trip(tmp_path, capsys):
    path = tmp_path / "unicode.csv"
    path.write_text(
        ",café,naïve,Ω-score\nobjet d'art,0.5,0.25,0.75\nzweites维度,0.1,0.2,0.3\n",
        encoding="utf-8",
    )
    out = tmp_path / "u.svg"
    code, _, _ = run_cli(
        ["plot", "--input", path, "--object", "objet d'art", "--out", out], capsys
    )
    assert code == 0
    svg = out.read_text(encoding="utf-8")
    assert "café" in svg and "Ω-score" in svg


@pytest.mark.skipif(
    shutil.which("origami") is None or shutil.which("snowflake") is None,
    reason="console scripts not installed",
)
def test_snowflake_alias_byte_identical(sucra_csv):
    args = ["plot", "--input", str(sucra_csv), "--object", "Titrated oral misoprostol",
            "--out", "-"]
    origami = subprocess.run(["origami", *args], capture_output=True, check=True)
    snowflake = subprocess.run(["snowflake", *args], capture_output=True, check=True)
    assert origami.stdout == snowflake.stdout
    assert origami.stdout.startswith(b"<?xml")
