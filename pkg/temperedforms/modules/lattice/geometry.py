#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.lattice.geometry

Plane lattice helpers in exact arithmetic: rational Gram matrices,
short vector enumeration, Hermite normal forms and the l+1 index-l
sublattices of Z^2
"""

from fractions import Fraction
from math import floor, ceil, isqrt, lcm
from typing import List, NamedTuple, Tuple

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from ..forms.bqf import Form, UnimodularMap, reduce

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]
Vector = Tuple[int, int]


class Gram(NamedTuple):
    """symmetric positive definite matrix [[g11, g12], [g12, g22]]"""
    g11: Fraction
    g12: Fraction
    g22: Fraction

    @property
    def det(self) -> Fraction:
        return self.g11 * self.g22 - self.g12 * self.g12

    def value(self, v: Vector) -> Fraction:
        x, y = v
        return self.g11 * x * x + 2 * self.g12 * x * y + self.g22 * y * y

    def scaled(self, factor) -> "Gram":
        return Gram(self.g11 * factor, self.g12 * factor, self.g22 * factor)

    def matrix(self):
        return ((self.g11, self.g12), (self.g12, self.g22))

    def check(self):
        if self.g11 <= 0 or self.det <= 0:
            raise ValueError("Gram matrix {} is not positive definite".format(
                [[str(x) for x in row] for row in self.matrix()]))

    @staticmethod
    def create(g11, g12, g22):
        return Gram(Fraction(g11), Fraction(g12), Fraction(g22))

    @staticmethod
    def from_form(f: Form) -> "Gram":
        """Gram matrix [[a, b/2], [b/2, c]] of ax^2 + bxy + cy^2"""
        return Gram(Fraction(f.a), Fraction(f.b, 2), Fraction(f.c))


HEXAGONAL = Gram.create(1, Fraction(-1, 2), 1)
SQUARE = Gram.create(1, 0, 1)


def to_form(gram: Gram) -> Tuple[Form, Fraction]:
    """smallest integral form proportional to gram, with the factor
    k such that form = k * gram"""
    coefficients = (gram.g11, 2 * gram.g12, gram.g22)
    k = lcm(*(c.denominator for c in coefficients))
    a, b, c = (int(x * k) for x in coefficients)
    return Form(a, b, c), Fraction(k)


def transform_gram(gram: Gram, m: Matrix) -> Gram:
    """m G m^T for an integer 2x2 matrix m"""
    (p, q), (r, s) = m
    return Gram(
        gram.value((p, q)),
        gram.g11 * p * r + gram.g12 * (p * s + q * r) + gram.g22 * q * s,
        gram.value((r, s)))


def mat_mul(m: Matrix, n: Matrix) -> Matrix:
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def det(m: Matrix) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def vec_mul(v: Vector, m: Matrix) -> Vector:
    """row vector times matrix"""
    return (v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1])


def in_lattice(v: Vector, h: Matrix) -> bool:
    """v lies in the row span of h iff v adj(h) = 0 mod det(h)"""
    d = det(h)
    (a, b), (c, e) = h
    return ((v[0] * e - v[1] * c) % d == 0
            and (-v[0] * b + v[1] * a) % d == 0)


def canonical_sign(v: Vector) -> Vector:
    """representative of +-v whose first non-zero entry is positive"""
    x, y = v
    if x < 0 or (x == 0 and y < 0):
        return (-x, -y)
    return (x, y)


def short_vectors(gram: Gram, bound) -> List[Vector]:
    """all v != 0 with v G v^T <= bound, one per +- pair, sorted by
    value and then lexicographically"""
    gram.check()
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be non-negative")
    g11, g12, _ = gram
    d = gram.det
    # g11 * Q(x, y) = (g11 x + g12 y)^2 + det y^2
    y_max = isqrt(floor(bound * g11 / d))
    found = []
    for y in range(0, y_max + 1):
        room = bound * g11 - d * y * y
        if room < 0:
            continue
        # |g11 x + g12 y| <= sqrt(room)
        centre = -g12 * y / g11
        radius = Fraction(isqrt(ceil(room)) + 1) / g11
        for x in range(floor(centre - radius), ceil(centre + radius) + 1):
            if x == 0 and y == 0:
                continue
            if y == 0 and x < 0:
                continue
            value = gram.value((x, y))
            if value <= bound:
                found.append((value, canonical_sign((x, y))))
    found.sort()
    return [v for _, v in found]


def gauss_reduce(gram: Gram) -> Tuple[Gram, Matrix]:
    """reduced Gram matrix and the det +1 map carrying gram to it"""
    form, _ = to_form(gram)
    _, m = reduce(form)
    rows = m.rows()
    return transform_gram(gram, rows), rows


def hnf(m: Matrix) -> Matrix:
    """Hermite normal form [[h11, h12], [0, h22]] of the row span of
    a non-singular integer matrix, 0 <= h12 < h22"""
    (a, b), (c, d) = m
    if det(m) == 0:
        raise ValueError("singular matrix")
    if a == 0 and c == 0:
        raise ValueError("rows do not span a full rank lattice")
    s, t, g = igcdex(a, c)
    s, t, g = int(s), int(t), int(g)
    row1 = (s * a + t * c, s * b + t * d)
    row2 = ((c // g) * a - (a // g) * c, (c // g) * b - (a // g) * d)
    h22 = abs(row2[1])
    h12 = row1[1] % h22
    return ((row1[0], h12), (0, h22))


def index_sublattices(ell: int) -> List[Matrix]:
    """HNFs of the ell+1 index-ell sublattices of Z^2"""
    return [((ell, 0), (0, 1))] + [((1, k), (0, ell)) for k in range(ell)]


def complete_basis(v: Vector) -> UnimodularMap:
    """det +1 integer matrix with first row the primitive vector v"""
    x, y = v
    s, t, g = igcdex(x, y)
    if g != 1:
        raise ValueError("vector {} is not primitive".format(v))
    return UnimodularMap(x, y, -int(t), int(s))
