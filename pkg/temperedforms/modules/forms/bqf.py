#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.forms.bqf

Exact arithmetic on positive definite integral binary quadratic
forms ax^2 + bxy + cy^2: reduction, duality, evaluation and
representation search
"""

from fractions import Fraction
from math import gcd, isqrt, sqrt
from typing import NamedTuple, Optional, Tuple


class Form(NamedTuple):
    """integral binary quadratic form ax^2 + bxy + cy^2"""
    a: int
    b: int
    c: int

    def __str__(self):
        return "{},{},{}".format(self.a, self.b, self.c)

    @property
    def discriminant(self) -> int:
        return discriminant(self)

    @property
    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    @property
    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.c > 0 and discriminant(self) < 0

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}

    @staticmethod
    def parse(text: str):
        """parse the 'a,b,c' serialisation"""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError("not a form: '{}'".format(text))
        return Form(*(int(part) for part in parts))


class UnimodularMap(NamedTuple):
    """integer matrix [[p, q], [r, s]] with determinant +-1; the rows
    are the new basis vectors written in the old basis"""
    p: int
    q: int
    r: int
    s: int

    @property
    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    @property
    def proper(self) -> bool:
        return self.det == 1

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """matrix product self * other"""
        return UnimodularMap(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s)

    def inverse(self) -> "UnimodularMap":
        d = self.det
        return UnimodularMap(self.s * d, -self.q * d, -self.r * d, self.p * d)

    def rows(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return ((self.p, self.q), (self.r, self.s))


IDENTITY = UnimodularMap(1, 0, 0, 1)


class QuadSurd(NamedTuple):
    """exact number p + q*sqrt(radicand) with negative radicand"""
    p: Fraction
    q: Fraction
    radicand: int

    def __str__(self):
        return "{} + ({})*sqrt({})".format(self.p, self.q, self.radicand)

    def to_complex(self) -> complex:
        """floating point value, for drawing only"""
        return complex(float(self.p), float(self.q) * sqrt(-self.radicand))


def discriminant(f: Form) -> int:
    return f.b * f.b - 4 * f.a * f.c


def is_reduced(f: Form) -> bool:
    """|b| <= a <= c, with b <= 0 whenever |b| = a or a = c"""
    a, b, c = f
    if not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b > 0:
        return False
    return True


def reduce(f: Form) -> Tuple[Form, UnimodularMap]:
    """Gauss reduction; returns the reduced form together with the
    det +1 map m such that transform(f, m) is the reduced form"""
    f = Form(*f)
    if not f.is_positive_definite:
        raise ValueError("form {} is not positive definite".format(f))
    a, b, c = f
    m = IDENTITY
    while True:
        # translate b into [-a, a)
        k = -((a + b) // (2 * a))
        if k:
            c = a * k * k + b * k + c
            b = b + 2 * a * k
            m = UnimodularMap(1, 0, k, 1).compose(m)
        if a > c or (a == c and b > 0):
            # (x, y) -> (y, -x)
            a, b, c = c, -b, a
            m = UnimodularMap(0, 1, -1, 0).compose(m)
            continue
        return Form(a, b, c), m


def dual(f: Form) -> Form:
    return Form(f.c, -f.b, f.a)


def evaluate(f: Form, x: int, y: int) -> int:
    return f.a * x * x + f.b * x * y + f.c * y * y


def transform(f: Form, m: UnimodularMap) -> Form:
    """coefficients of the form with matrix m A m^T"""
    if abs(m.det) != 1:
        raise ValueError("map {} is not unimodular".format(tuple(m)))
    return Form(
        evaluate(f, m.p, m.q),
        2 * f.a * m.p * m.r + f.b * (m.p * m.s + m.q * m.r)
        + 2 * f.c * m.q * m.s,
        evaluate(f, m.r, m.s))


def represents(f: Form, n: int) -> Optional[Tuple[int, int]]:
    """smallest coprime (x, y) with f(x, y) = n, ordered by |x|, then
    |y|, then positive before negative signs; None when there is none"""
    if n <= 0:
        raise ValueError("n must be positive")
    if not f.is_positive_definite:
        raise ValueError("form {} is not positive definite".format(f))
    d = -discriminant(f)
    x_max = isqrt(4 * f.c * n // d)
    y_max = isqrt(4 * f.a * n // d)
    for ax in range(x_max + 1):
        for ay in range(y_max + 1):
            if gcd(ax, ay) != 1:
                continue
            for x, y in ((ax, ay), (ax, -ay), (-ax, ay), (-ax, -ay)):
                if evaluate(f, x, y) == n:
                    return (x, y)
    return None


def distinguished_basis(f: Form) -> QuadSurd:
    """gamma = (b + sqrt(D)) / 2a, so that {1, gamma} carries f"""
    if f.a <= 0:
        raise ValueError("form {} is not positive definite".format(f))
    return QuadSurd(Fraction(f.b, 2 * f.a), Fraction(1, 2 * f.a),
                    discriminant(f))


def principal_form(d: int) -> Form:
    """identity form (1, b0, (b0^2 - D)/4), b0 = D mod 2"""
    check_discriminant(d)
    b0 = d % 2
    return Form(1, b0, (b0 * b0 - d) // 4)


def check_discriminant(d: int):
    if d >= 0 or d % 4 not in (0, 1):
        raise ValueError("{} is not a discriminant".format(d))
