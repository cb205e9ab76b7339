#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.lattice.verifier

Definition-level check of tempered perfection for a lattice pair
M c L of prime index, plus the duality transform and the linear
system fixing a tempered form from its minimal vectors
"""

from fractions import Fraction
from functools import partial
from typing import List, Optional, Tuple

from sympy import Matrix, Rational

from ..utils import parallel_map
from .geometry import (HEXAGONAL, Gram, Vector, canonical_sign, det,
                       gauss_reduce, in_lattice, index_sublattices, mat_mul,
                       short_vectors, transform_gram, vec_mul)


class PairLattice:
    """L0 = Z^2 with Gram matrix G, and the sublattice M0 spanned by
    the rows of H"""

    def __init__(self, properties: dict):
        self.gram = properties["gram"]
        self.sub = properties["sub"]
        self.ell = properties["ell"]
        self.gram.check()
        if abs(det(self.sub)) != self.ell:
            raise ValueError(
                "sublattice matrix {} does not have determinant +-{}".format(
                    self.sub, self.ell))

    def __repr__(self):
        return "PairLattice(G={}, H={}, ell={})".format(
            tuple(str(x) for x in self.gram), self.sub, self.ell)

    def contains(self, v: Vector) -> bool:
        """is v in M0"""
        return in_lattice(v, self.sub)

    @staticmethod
    def create(gram: Gram, sub, ell: int):
        return PairLattice({
            "gram": gram,
            "sub": tuple(tuple(int(x) for x in row) for row in sub),
            "ell": ell
        })


class Classification:
    """minimal vectors of L0 - M0 (S) and of M0 - {0} (S') with their
    values, and the verdict"""

    def __init__(self, properties: dict):
        self.ell = properties["ell"]
        self.m_L = properties["m_L"]
        self.m_M = properties["m_M"]
        self.S = properties["S"]
        self.S_prime = properties["S_prime"]
        self.s = len(self.S)
        self.s_prime = len(self.S_prime)
        self.tau2 = self.m_M / self.m_L
        self.tempered = self.tau2 >= 1 and self.s + self.s_prime >= 4
        if self.s > 3 or self.s_prime > 3:
            raise Exception("a plane lattice has at most 3 minimal pairs")

    @property
    def kind(self) -> str:
        return "{}and{}".format(self.s, self.s_prime)

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "tempered": self.tempered,
            "s": self.s,
            "s_prime": self.s_prime,
            "tau2_num": self.tau2.numerator,
            "tau2_den": self.tau2.denominator,
            "m_L": str(self.m_L),
            "m_M": str(self.m_M),
            "S": [list(v) for v in self.S],
            "S_prime": [list(v) for v in self.S_prime]
        }


def _minimal_outside(pair: PairLattice) -> Tuple[Fraction, List[Vector]]:
    """minimum of G over L0 - M0 and the vectors attaining it"""
    reduced, rows = gauss_reduce(pair.gram)
    bound = min(reduced.g11, reduced.g22)
    while True:
        outside = []
        for c in short_vectors(reduced, bound):
            v = vec_mul(c, rows)
            if not pair.contains(v):
                outside.append((pair.gram.value(v), v))
        if outside:
            break
        bound *= 2
    m = min(value for value, _ in outside)
    return m, sorted(canonical_sign(v) for value, v in outside if value == m)


def _minimal_inside(pair: PairLattice) -> Tuple[Fraction, List[Vector]]:
    """minimum of G over M0 - {0} and the vectors attaining it"""
    gram_m = transform_gram(pair.gram, pair.sub)
    reduced, rows = gauss_reduce(gram_m)
    basis = mat_mul(rows, pair.sub)
    m = min(reduced.g11, reduced.g22)
    vectors = [vec_mul(c, basis) for c in short_vectors(reduced, m)]
    return m, sorted(canonical_sign(v) for v in vectors)


def classify(pair: PairLattice) -> Classification:
    """decide tempered perfection of (L0, M0, G) by enumeration"""
    m_L, s_vectors = _minimal_outside(pair)
    m_M, s_prime_vectors = _minimal_inside(pair)
    return Classification({
        "ell": pair.ell,
        "m_L": m_L,
        "m_M": m_M,
        "S": s_vectors,
        "S_prime": s_prime_vectors
    })


def solve_rationality(s_vectors: List[Vector],
                      s_prime_vectors: List[Vector]
                      ) -> Optional[Tuple[Tuple[Fraction, ...], bool]]:
    """solve a x^2 + b xy + c y^2 = 1 on S and = u on S' for
    (a, b, c, u); returns the solution (a particular one when the
    system is underdetermined) and whether it is unique, or None
    when the system is inconsistent"""
    if not s_vectors or not s_prime_vectors:
        raise ValueError("S and S' must both be non-empty")
    rows = []
    rhs = []
    for x, y in s_vectors:
        rows.append([x * x, x * y, y * y, 0])
        rhs.append(1)
    for x, y in s_prime_vectors:
        rows.append([x * x, x * y, y * y, -1])
        rhs.append(0)
    system = Matrix(rows)
    try:
        solution, params = system.gauss_jordan_solve(Matrix(rhs))
    except ValueError:
        return None
    if params.shape[0] > 0:
        solution = solution.subs({p: 0 for p in params})
    values = tuple(_to_fraction(x) for x in solution)
    return values, system.rank() == 4


def _to_fraction(x) -> Fraction:
    x = Rational(x)
    return Fraction(int(x.p), int(x.q))


def dualize(pair: PairLattice) -> PairLattice:
    """the pair (M*, L*): Gram adj(H G H^T), sublattice matrix H^T.
    tau^2 of the dual is l^2 / tau^2 of the pair, and s, s' swap
    unless a minimal vector of M* lies in L* (M holding a minimal
    vector of L, tau^2 = 1)"""
    g11, g12, g22 = transform_gram(pair.gram, pair.sub)
    h = pair.sub
    return PairLattice.create(
        Gram(g22, -g12, g11),
        ((h[0][0], h[1][0]), (h[0][1], h[1][1])),
        pair.ell)


def _classify_hexagonal(sub, ell: int) -> Classification:
    return classify(PairLattice.create(HEXAGONAL, sub, ell))


def oracle_eisenstein(ell: int, num_threads: int = None
                      ) -> List[Tuple[tuple, Classification]]:
    """classification of every index-ell sublattice of Z[w]"""
    subs = index_sublattices(ell)
    results = parallel_map(partial(_classify_hexagonal, ell=ell), subs,
                           num_threads)
    return list(zip(subs, results))
