import xml.etree.ElementTree as ET
from math import acos, degrees

import numpy as np
import pytest

from temperedforms.modules.forms.bqf import Form
from temperedforms.modules.lattice.eisenstein import (EisInt, one_three,
                                                      sublattice_containing,
                                                      three_three)
from temperedforms.modules.lattice.verifier import classify
from temperedforms.modules.output.figure import (FigureSpec, embed_points,
                                                 figure_for_record,
                                                 render_figure)
from temperedforms.modules.tempered.records import ScanRow, TwoTwoRecord

NS = "{http://www.w3.org/2000/svg}"
RECORD_23 = TwoTwoRecord.create(23, -1155, Form(19, -17, 19),
                                Form(17, -1, 17))


def _circles(svg: str, group: str):
    root = ET.fromstring(svg)
    node = root.find("{}g[@id='{}']".format(NS, group))
    return node.findall(NS + "circle")


def test_render_is_deterministic():
    spec = figure_for_record(RECORD_23)
    assert render_figure(spec) == render_figure(figure_for_record(RECORD_23))


def test_minimal_circles():
    spec = figure_for_record(three_three(7))
    inner, outer = _circles(render_figure(spec), "minimal-circles")
    ratio = float(outer.get("r")) / float(inner.get("r"))
    assert ratio ** 2 == pytest.approx(7, rel=1e-5)

    spec = FigureSpec.create(spec.pair, draw_outer=False)
    assert len(_circles(render_figure(spec), "minimal-circles")) == 1


def test_window():
    pair = sublattice_containing(EisInt(2, -1), 7).pair()
    svg = render_figure(FigureSpec.create(pair, window=0.5))
    assert len(_circles(svg, "lattice-points")) == 1
    assert len(_circles(svg, "sublattice-points")) == 1

    svg = render_figure(FigureSpec.create(pair, window=1.0))
    # origin and the six units
    assert len(_circles(svg, "lattice-points")) == 7
    with pytest.raises(ValueError):
        FigureSpec.create(pair, window=0)


def test_coordinates_have_fixed_precision():
    svg = render_figure(figure_for_record(RECORD_23),
                        svg_options={"precision": 3})
    for circle in _circles(svg, "lattice-points"):
        assert len(circle.get("cx").split(".")[1]) == 3
    assert "-0.000" not in svg


def test_embedding_preserves_shape():
    spec = figure_for_record(RECORD_23)
    result = classify(spec.pair)
    s_points = embed_points(spec.pair, result.S)
    assert np.abs(s_points) == pytest.approx([1, 1])
    s_prime_points = embed_points(spec.pair, result.S_prime)
    assert np.abs(s_prime_points) ** 2 == pytest.approx([391 / 19] * 2)

    def angle(points):
        return degrees(abs(np.angle(points[0] / points[1])))
    assert angle(s_points) == pytest.approx(degrees(acos(8.5 / 19)))
    assert angle(s_prime_points) == pytest.approx(degrees(acos(11.5 / 391)))


def test_figure_for_dual_record():
    rec = one_three(11)[0]
    spec = figure_for_record(rec)
    result = classify(spec.pair)
    assert (result.s, result.s_prime) == (1, 3)
    assert result.tau2 == rec.tau2
    with pytest.raises(ValueError):
        figure_for_record(ScanRow(2, -4, 1))
