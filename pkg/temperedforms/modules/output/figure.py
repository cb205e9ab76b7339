#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.output.figure

SVG drawings of a lattice pair M c L: points of L as dots, points of
M circled, and the circles through the minimal vectors of L - M and
of M. Coordinates are the only floating point values in the package
and are written with a fixed number of decimals.
"""

import xml.etree.ElementTree as ET
from typing import List

import numpy as np

from ..config import conf
from ..forms.bqf import distinguished_basis
from ..lattice.eisenstein import EisInt, sublattice_containing
from ..lattice.geometry import Vector, short_vectors, to_form
from ..lattice.verifier import PairLattice, classify, dualize
from ..tempered.records import TemperedRecord, TwoTwoRecord
from ..tempered.two_two import pair_lattice_of


class FigureSpec:
    """a pair to draw, the window radius in units of the length of a
    minimal vector of L - M, and which minimal circles to draw"""

    def __init__(self, properties: dict):
        self.pair = properties["pair"]
        self.window = properties.get("window", conf["svg"]["window"])
        self.draw_inner = properties.get("draw_inner", True)
        self.draw_outer = properties.get("draw_outer", True)
        if self.window <= 0:
            raise ValueError("window radius must be positive, got {}".format(
                self.window))

    @staticmethod
    def create(pair: PairLattice, window: float = None,
               draw_inner: bool = True, draw_outer: bool = True):
        properties = {
            "pair": pair,
            "draw_inner": draw_inner,
            "draw_outer": draw_outer
        }
        if window is not None:
            properties["window"] = window
        return FigureSpec(properties)


def embed_points(pair: PairLattice, vectors: List[Vector]) -> np.ndarray:
    """complex plane images of integer vectors, scaled so that the
    minimal vectors of L - M have length 1: (x, y) goes to
    sqrt(a) (x + y gamma) for the integral form (a, b, c) of the Gram
    matrix and gamma = (b + sqrt(D)) / 2a"""
    form, k = to_form(pair.gram)
    gamma = distinguished_basis(form).to_complex()
    m_L = classify(pair).m_L
    scale = np.sqrt(form.a) / np.sqrt(float(k * m_L))
    coords = np.array(vectors, dtype=float).reshape(-1, 2)
    return scale * (coords[:, 0] + coords[:, 1] * gamma)


def _fmt(value: float, precision: int) -> str:
    # + 0.0 turns -0.0 into 0.0
    return "{:.{}f}".format(float(value) + 0.0, precision)


def render_figure(spec: FigureSpec, svg_options: dict = None) -> str:
    """deterministic SVG text for spec"""
    options = dict(conf["svg"])
    if svg_options:
        options.update(svg_options)
    precision = options["precision"]
    canvas = options["canvas"]
    centre = canvas / 2
    pixels = (centre - options["margin"]) / spec.window

    pair = spec.pair
    result = classify(pair)
    half = short_vectors(pair.gram, result.m_L * spec.window ** 2)
    vectors = [(0, 0)] + [w for v in half for w in (v, (-v[0], -v[1]))]
    points = embed_points(pair, vectors)

    def px(z: complex):
        return (_fmt(centre + pixels * z.real, precision),
                _fmt(centre - pixels * z.imag, precision))

    root = ET.Element(
        "svg", xmlns="http://www.w3.org/2000/svg", version="1.1",
        width="{}px".format(canvas), height="{}px".format(canvas),
        viewBox="0 0 {} {}".format(canvas, canvas))
    circles = ET.SubElement(root, "g", id="minimal-circles", fill="none")
    radii = []
    if spec.draw_inner:
        radii.append((1.0, options["inner_circle_color"]))
    if spec.draw_outer:
        radii.append((float(np.sqrt(float(result.tau2))),
                      options["outer_circle_color"]))
    for radius, color in radii:
        ET.SubElement(circles, "circle", cx=_fmt(centre, precision),
                      cy=_fmt(centre, precision),
                      r=_fmt(pixels * radius, precision), stroke=color,
                      **{"stroke-width": str(options["stroke"])})

    dots = ET.SubElement(root, "g", id="lattice-points", fill="black")
    rings = ET.SubElement(root, "g", id="sublattice-points", fill="none",
                          stroke="black",
                          **{"stroke-width": str(options["stroke"])})
    for v, z in zip(vectors, points):
        cx, cy = px(z)
        ET.SubElement(dots, "circle", cx=cx, cy=cy,
                      r=str(options["point_radius"]))
        if pair.contains(v):
            ET.SubElement(rings, "circle", cx=cx, cy=cy,
                          r=str(options["ring_radius"]))
    return ET.tostring(root, encoding="unicode")


def figure_for_record(rec, window: float = None) -> FigureSpec:
    """figure of the pair behind a 2-and-2 or Eisenstein record"""
    if isinstance(rec, TwoTwoRecord):
        pair = pair_lattice_of(rec)
    elif isinstance(rec, TemperedRecord):
        pair = sublattice_containing(EisInt(*rec.witness), rec.ell).pair()
        if rec.kind == "1and3":
            pair = dualize(pair)
    else:
        raise ValueError("no figure for {}".format(type(rec).__name__))
    return FigureSpec.create(pair, window)
