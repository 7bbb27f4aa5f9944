import re
from pathlib import Path

import pytest

from motwedge.chart import (
    IRREGULAR, REGULAR, TSV_HEADER, ChartDot, classify, emit_svg, emit_tsv, enumerate_dots, in_cone,
    packaged_labels, synthesize_label)
from motwedge.errors import DomainError
from motwedge.wedge import Verdict, companion_descriptor, family_status

GOLDEN = Path(__file__).parent / "golden" / "wedge_through_70.tsv"
RED_DOTS = {(40, 8), (45, 9), (57, 12), (60, 12), (62, 13), (65, 13)}


def test_small_ranges():
    assert [d.position for d in enumerate_dots(40)] == [(40, 8)]
    assert [d.position for d in enumerate_dots(45)] == [(40, 8), (42, 9), (44, 10), (45, 9)]
    with pytest.raises(DomainError):
        enumerate_dots(39)


def test_through_stem_70_matches_golden():
    dots = enumerate_dots(70)
    assert emit_tsv(dots) == GOLDEN.read_text(encoding="utf-8")
    assert len(dots) == 58
    assert {d.position for d in dots if d.cls == IRREGULAR} == RED_DOTS
    assert not any(d.synthesized for d in dots)


def test_positions_are_distinct_far_out():
    dots = enumerate_dots(300)
    assert len({d.position for d in dots}) == len(dots)


def test_cone_bounds():
    dots = enumerate_dots(150)
    assert all(in_cone(d.stem, d.filtration) and d.filtration >= 8 for d in dots)
    # the vertex sits on both boundary lines
    assert 5 * 8 == 40 and 40 / 2 - 12 == 8


def test_classification_examples():
    by_pos = {d.position: d for d in enumerate_dots(70)}
    assert classify(by_pos[(40, 8)]) == IRREGULAR
    assert classify(by_pos[(51, 12)]) == REGULAR and by_pos[(51, 12)].label == "e0^3"
    assert classify(by_pos[(62, 13)]) == IRREGULAR


def test_classifier_agrees_with_status_engine():
    for d in enumerate_dots(200):
        comp = companion_descriptor(d.lam, d.i, d.j)
        empty = comp is not None and family_status(comp).verdict is Verdict.EMPTY
        assert (d.cls == IRREGULAR) == empty, d
        if comp is not None and empty:
            assert family_status(comp).evidence_kind == "alpha"


def test_labels():
    by_pos = {d.position: d for d in enumerate_dots(90)}
    assert by_pos[(44, 10)].label == "d0*r"
    assert by_pos[(70, 23)].label == "P^3*d0*l"
    assert by_pos[(52, 14)].label == "P*d0*r"
    assert by_pos[(80, 16)].label == "tau*g^4" and by_pos[(80, 16)].synthesized
    assert synthesize_label("tau*e0^3", 2, 0) == "P^2*e0^3"
    assert synthesize_label("tau*e0^2*g", 1, 0) == "P*e0.e0*g"
    assert synthesize_label("g*r", 1, 2) == "P*g^3*r"
    assert len(packaged_labels()) == 58


def test_tsv_row():
    rows = emit_tsv(enumerate_dots(70)).splitlines()
    assert rows[0] == TSV_HEADER
    assert "61\t14\t34\td₀e₀r\tRegular\td₀e₀r\t0\t0" in rows


def test_svg_single_dot():
    svg = emit_svg(enumerate_dots(40))
    assert svg.count("<circle") == 1
    assert 'fill="#ff0000"' in svg


def test_svg_full_chart():
    svg = emit_svg(enumerate_dots(70))
    circles = re.findall(r'<circle [^>]*fill="(#[0-9a-f]{6})"', svg)
    assert len(circles) == 58
    assert circles.count("#ff0000") == 6
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")


def test_svg_rejects_empty():
    with pytest.raises(DomainError):
        emit_svg([])


def test_dot_provenance():
    d = ChartDot(40, 8, 23, "tau*g^2", IRREGULAR, "tau*g^2", 0, 0)
    assert d.provenance == ("tau*g^2", 0, 0)
