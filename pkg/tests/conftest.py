"""Shared test helpers plus a pass/fail line per acceptance criterion."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from origami_plot import embedded_example

_SVG_NS = "{http://www.w3.org/2000/svg}"


@pytest.fixture
def sucra():
    return embedded_example()


def svg_root(svg_text: str) -> ET.Element:
    return ET.fromstring(svg_text)


def elements_with_class(svg_text: str, cls: str) -> list[ET.Element]:
    root = svg_root(svg_text)
    return [
        el for el in root.iter()
        if cls in (el.get("class") or "").split()
    ]


def points_of(el: ET.Element) -> list[tuple[float, float]]:
    pairs = (el.get("points") or "").split()
    return [tuple(float(c) for c in p.split(",")) for p in pairs]


def tag_name(el: ET.Element) -> str:
    return el.tag.removeprefix(_SVG_NS)


# ---- acceptance reporting -------------------------------------------------

_acceptance_outcomes: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance_outcomes.append((name, report.outcome))
    elif report.when == "setup" and report.outcome != "passed":
        _acceptance_outcomes.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance_outcomes:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] {name}")
