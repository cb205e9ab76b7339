#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.lattice.eisenstein

Arithmetic in Z[w] (w a primitive cube root of unity) and the
classification of the 3-and-3, 3-and-1 and 1-and-3 tempered forms
on the hexagonal lattice for a prime index l
"""

from fractions import Fraction
from math import ceil, floor, gcd, isqrt
from typing import Dict, List, NamedTuple, Optional, Set

from sympy import factorint, isprime

from ..tempered.records import TemperedRecord
from ..utils import log
from .geometry import (HEXAGONAL, Matrix, complete_basis, gauss_reduce,
                       hnf, in_lattice, index_sublattices, mat_mul,
                       short_vectors, transform_gram, vec_mul)
from .verifier import PairLattice, classify, dualize


class EisInt(NamedTuple):
    """x + y*w"""
    x: int
    y: int

    def __str__(self):
        return "{}{:+d}w".format(self.x, self.y)

    def __mul__(self, other: "EisInt") -> "EisInt":
        # w^2 = -1 - w
        a, b = self
        c, d = other
        return EisInt(a * c - b * d, a * d + b * c - b * d)

    def __neg__(self):
        return EisInt(-self.x, -self.y)

    @property
    def norm(self) -> int:
        return norm(self)

    @property
    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def conjugate(self) -> "EisInt":
        # conj(w) = -1 - w
        return EisInt(self.x - self.y, -self.y)

    def times_omega(self) -> "EisInt":
        return EisInt(-self.y, self.x - self.y)


UNITS = [EisInt(1, 0), EisInt(1, 1), EisInt(0, 1),
         EisInt(-1, 0), EisInt(-1, -1), EisInt(0, -1)]


class EisSublattice:
    """index-l sublattice of Z[w], rows of an HNF in the basis {1, w}"""

    def __init__(self, properties: dict):
        self.hnf = properties["hnf"]
        self.ell = properties["hnf"][0][0] * properties["hnf"][1][1]

    def __eq__(self, other):
        return isinstance(other, EisSublattice) and self.hnf == other.hnf

    def __hash__(self):
        return hash(self.hnf)

    def __repr__(self):
        return "EisSublattice({})".format(self.hnf)

    def contains(self, v: EisInt) -> bool:
        return in_lattice(tuple(v), self.hnf)

    def is_ideal(self) -> bool:
        """closed under multiplication by w"""
        return all(self.contains(EisInt(*row).times_omega())
                   for row in self.hnf)

    def conjugate(self) -> "EisSublattice":
        rows = [EisInt(*row).conjugate() for row in self.hnf]
        return EisSublattice.from_rows(tuple(tuple(v) for v in rows))

    def pair(self) -> PairLattice:
        return PairLattice.create(HEXAGONAL, self.hnf, self.ell)

    @staticmethod
    def from_rows(rows: Matrix):
        return EisSublattice({"hnf": hnf(rows)})


def norm(v: EisInt) -> int:
    x, y = v
    return x * x - x * y + y * y


def _inner(v: EisInt, w: EisInt) -> Fraction:
    """hexagonal inner product with Gram [[1, -1/2], [-1/2, 1]]"""
    return (Fraction(v.x * w.x + v.y * w.y)
            - Fraction(v.x * w.y + v.y * w.x, 2))


def splitting(p: int) -> str:
    if not isprime(p):
        raise ValueError("{} is not prime".format(p))
    if p == 3:
        return "ramified"
    if p % 6 == 1:
        return "split"
    return "inert"


def primitive_representations(n: int) -> List[EisInt]:
    """all coprime (x, y) with x^2 - xy + y^2 = n"""
    if n < 1:
        raise ValueError("n must be positive")
    found = []
    # 4n = (2x - y)^2 + 3y^2
    y_max = isqrt(4 * n // 3)
    for y in range(-y_max, y_max + 1):
        disc = 4 * n - 3 * y * y
        t = isqrt(disc)
        if t * t != disc:
            continue
        for twice_x in {y + t, y - t}:
            if twice_x % 2:
                continue
            x = twice_x // 2
            if gcd(x, y) == 1:
                found.append(EisInt(x, y))
    return sorted(found)


def representation_count(n: int) -> int:
    """6 * 2^|S| when n = 3^r * prod p^e with r <= 1 and all p = 1
    mod 6, S the set of such p; 0 otherwise"""
    primes = 0
    for p, e in factorint(n).items():
        if p == 3:
            if e > 1:
                return 0
        elif p % 6 == 1:
            primes += 1
        else:
            return 0
    return 6 * 2 ** primes


def canonical(v: EisInt) -> EisInt:
    """the unit multiple of v with x > 0 >= y"""
    for u in UNITS:
        w = u * v
        if w.x > 0 and w.y <= 0:
            return w
    raise ValueError("zero has no canonical associate")


def sublattices(ell: int) -> List[EisSublattice]:
    if not isprime(ell):
        raise ValueError("{} is not prime".format(ell))
    return [EisSublattice({"hnf": h}) for h in index_sublattices(ell)]


def sublattice_containing(v: EisInt, ell: int) -> EisSublattice:
    """the unique index-ell sublattice containing the primitive v:
    complete v to a unimodular basis and pull back diag(1, ell)"""
    if not EisInt(*v).is_primitive:
        raise ValueError("{} is not primitive".format(tuple(v)))
    p, q, r, s = complete_basis(tuple(v))
    return EisSublattice.from_rows(((p, q), (ell * r, ell * s)))


def reduced_basis(m: EisSublattice):
    """shortest vector v of M and the shortest vector w independent
    of it, by enumeration under the hexagonal Gram matrix"""
    gram, rows = gauss_reduce(transform_gram(HEXAGONAL, m.hnf))
    basis = mat_mul(rows, m.hnf)
    bound = min(gram.g11, gram.g22)
    candidates = short_vectors(gram, bound)
    v = candidates[0]
    while True:
        independent = [c for c in candidates
                       if c[0] * v[1] - c[1] * v[0] != 0]
        if independent:
            break
        bound *= 2
        candidates = short_vectors(gram, bound)
    w = independent[0]
    return EisInt(*vec_mul(v, basis)), EisInt(*vec_mul(w, basis))


def second_minimal(v: EisInt, ell: int) -> EisInt:
    """second basis vector l*w + t*v of the reduced basis of the
    sublattice containing v, where {v, w} is a basis of Z[w]"""
    v = EisInt(*v)
    if norm(v) >= ell:
        raise ValueError("norm of {} must be below {}".format(v, ell))
    if not v.is_primitive:
        raise ValueError("{} is not primitive".format(v))
    _, _, c, d = complete_basis(tuple(v))
    lw = EisInt(ell * c, ell * d)
    t0 = -_inner(lw, v) / norm(v)
    best = None
    for t in range(floor(t0) - 1, ceil(t0) + 2):
        candidate = EisInt(lw.x + t * v.x, lw.y + t * v.y)
        key = (norm(candidate), abs(t))
        if best is None or key < best[0]:
            best = (key, candidate)
    w_hat = best[1]
    check_v, check_w = reduced_basis(sublattice_containing(v, ell))
    if sorted((norm(v), norm(w_hat))) != sorted((norm(check_v),
                                                  norm(check_w))):
        raise Exception(
            "second minimal vector of {} at {} disagrees with enumeration"
            .format(v, ell))
    return w_hat


def three_three(ell: int) -> Optional[TemperedRecord]:
    """the 3-and-3 form (Z[w], p) with p | ell, when ell is 3 or 1 mod 6"""
    if splitting(ell) == "inert":
        return None
    witness = max((canonical(v) for v in primitive_representations(ell)),
                  key=lambda v: (v.x, v.y))
    return TemperedRecord({
        "kind": "3and3",
        "ell": ell,
        "s": 3,
        "s_prime": 3,
        "tau2": Fraction(ell),
        "witness": tuple(witness)
    })


class OrbitList:
    """unit orbits of primitive vectors of each admissible norm in
    [3l/4, l), each live until crossed out"""

    def __init__(self, properties: dict):
        self.ell = properties["ell"]
        self.orbits = properties["orbits"]
        self.live = {orbit for norm_orbits in self.orbits.values()
                     for orbit in norm_orbits}

    def next_live(self) -> Optional[EisInt]:
        for beta in sorted(self.orbits):
            for orbit in sorted(self.orbits[beta]):
                if orbit in self.live:
                    return orbit
        return None

    def cross_out(self, v: EisInt):
        self.live.discard(canonical(v))

    @staticmethod
    def create(ell: int):
        orbits = {}
        beta = -(-3 * ell // 4)
        while beta < ell:
            if representation_count(beta):
                orbits[beta] = {canonical(v) for v in
                                primitive_representations(beta)}
            beta += 1
        return OrbitList({"ell": ell, "orbits": orbits})


def _algorithm_one_witnesses(ell: int) -> Dict[int, EisInt]:
    orbits = OrbitList.create(ell)
    recorded = {}
    v = orbits.next_live()
    while v is not None:
        w_hat = second_minimal(v, ell)
        recorded.setdefault(norm(v), v)
        orbits.cross_out(v)
        if norm(w_hat) in orbits.orbits:
            orbits.cross_out(w_hat)
        v = orbits.next_live()
    return recorded


def algorithm_one(ell: int) -> Set[int]:
    """3-and-1 temperaments in [3l/4, l): repeatedly take the live
    orbit of smallest norm, record its norm and cross out its own
    orbit and that of its second minimal vector"""
    return set(_algorithm_one_witnesses(ell))


def _verified_three_one(ell: int, beta: int,
                        witness: EisInt) -> Optional[TemperedRecord]:
    result = classify(sublattice_containing(witness, ell).pair())
    if not (result.tempered and result.s == 3 and result.s_prime == 1
            and result.tau2 == beta):
        log("rejected 3-and-1 candidate beta={} at ell={}: {}".format(
            beta, ell, result.kind))
        return None
    return TemperedRecord({
        "kind": "3and1",
        "ell": ell,
        "s": 3,
        "s_prime": 1,
        "tau2": Fraction(beta),
        "witness": tuple(witness)
    })


def three_one(ell: int) -> List[TemperedRecord]:
    """verified 3-and-1 records for the prime ell"""
    if not isprime(ell):
        raise ValueError("{} is not prime".format(ell))
    witnesses = {}
    # 1 < beta < (sqrt(3)/2) l, where every primitive vector will do
    for beta in range(2, ell):
        if 4 * beta * beta < 3 * ell * ell and representation_count(beta):
            witnesses[beta] = max(
                (canonical(v) for v in primitive_representations(beta)),
                key=lambda v: (v.x, v.y))
    for beta, v in _algorithm_one_witnesses(ell).items():
        witnesses.setdefault(beta, v)
    records = [_verified_three_one(ell, beta, witnesses[beta])
               for beta in sorted(witnesses)]
    return [record for record in records if record is not None]


def three_one_temperaments(ell: int) -> List[Fraction]:
    return [record.tau2 for record in three_one(ell)]


def one_three(ell: int) -> List[TemperedRecord]:
    """duals of the 3-and-1 records, tau^2 = l^2 / beta"""
    records = []
    for record in three_one(ell):
        pair = dualize(sublattice_containing(
            EisInt(*record.witness), ell).pair())
        result = classify(pair)
        if not (result.tempered and result.s == 1 and result.s_prime == 3
                and result.tau2 * record.tau2 == ell * ell):
            raise Exception("dual of {} is a {} form".format(
                record, result.kind))
        records.append(TemperedRecord({
            "kind": "1and3",
            "ell": ell,
            "s": 1,
            "s_prime": 3,
            "tau2": Fraction(ell * ell) / record.tau2,
            "witness": record.witness
        }))
    return sorted(records, key=lambda record: record.tau2)


def one_three_temperaments(ell: int) -> List[Fraction]:
    return [record.tau2 for record in one_three(ell)]


def e_count(ell: int, n: int) -> int:
    """number of index-ell sublattices containing a primitive
    representation of n < ell; formula and direct scan must agree"""
    if not 0 < n < ell:
        raise ValueError("need 0 < n < ell")
    representations = primitive_representations(n)
    scanned = sum(1 for m in sublattices(ell)
                  if any(m.contains(v) for v in representations))
    count = representation_count(n)
    expected = count // 2
    if scanned != expected:
        raise Exception(
            "E_{}({}) has {} sublattices, formula gives {}".format(
                ell, n, scanned, expected))
    return scanned


def e_sets(ell: int) -> Dict[int, Set[EisSublattice]]:
    """for every representable n < ell, the sublattices containing a
    primitive representation of n"""
    result = {}
    for m in sublattices(ell):
        gram, rows = gauss_reduce(transform_gram(HEXAGONAL, m.hnf))
        basis = mat_mul(rows, m.hnf)
        for c in short_vectors(gram, ell - 1):
            v = EisInt(*vec_mul(c, basis))
            if v.is_primitive:
                result.setdefault(norm(v), set()).add(m)
    return result
