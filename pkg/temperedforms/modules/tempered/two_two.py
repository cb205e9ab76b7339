#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.tempered.two_two

Enumerate the 2-and-2 tempered forms of a prime index l through
class groups of discriminants |D| <= 4l^2, and the inverse question
of which primes l occur for a given discriminant
"""

from fractions import Fraction
from functools import partial
from math import gcd
from os import path
from typing import List, Optional, Tuple

from sympy import isprime, primerange

from ..forms.bqf import Form, UnimodularMap, evaluate, reduce, transform
from ..forms.classgroup import (ambiguous_classes, class_group,
                                classes_representing, compose,
                                genus_of, genus_partition, genus_values,
                                inverse, kronecker, one_class_per_genus,
                                prime_witness, well_rounded_classes,
                                well_rounded_forms)
from ..lattice.geometry import Gram, complete_basis, index_sublattices, mat_mul
from ..lattice.verifier import PairLattice, classify
from ..utils import load_pickle, log, parallel_map, store_pickle, timed
from .records import ScanRow, TwoTwoRecord

__all__ = ["TwoTwoRecord", "enumerate", "records_for_disc", "pair_lattice_of",
           "verify_record", "max_ratio_scan", "scan_summary",
           "conjecture_holds", "ells_for_disc", "congruence_classes",
           "prime_class"]


def _restricted_form(f: Form, h) -> Form:
    """f on the sublattice spanned by the rows of h"""
    (p, q), (r, s) = h
    a = evaluate(f, p, q)
    c = evaluate(f, r, s)
    b = evaluate(f, p + r, q + s) - a - c
    return Form(a, b, c)


def pair_lattice_of(rec: TwoTwoRecord) -> PairLattice:
    """explicit pair for a record: L carries the form class_L, M is the
    index-l sublattice whose restricted form is l * class_M (the
    sublattice p L for a prime p of norm l), written in a basis of L
    whose first vector is a minimal vector of M, so that M is spanned
    by (1, 0) and (0, l)"""
    ell = rec.ell
    f = rec.class_L
    for h in index_sublattices(ell):
        restricted = _restricted_form(f, h)
        if gcd(gcd(restricted.a, restricted.b), restricted.c) != ell:
            continue
        scaled = Form(*(x // ell for x in restricted))
        reduced, m = reduce(scaled)
        if reduced != rec.class_M:
            continue
        basis = mat_mul(m.rows(), h)
        shortest = next(row for row in basis if gcd(*row) == 1)
        u = complete_basis(shortest)
        form = transform(f, u)
        # keep the middle coefficient in [-a, a)
        k = -((form.a + form.b) // (2 * form.a))
        u = UnimodularMap(u.p, u.q, u.r + k * u.p, u.s + k * u.q)
        return PairLattice.create(Gram.from_form(transform(f, u)),
                                  ((1, 0), (0, ell)), ell)
    raise Exception("no index-{} sublattice of class {} in {}".format(
        ell, rec.class_M, rec.class_L))


def verify_record(rec: TwoTwoRecord) -> bool:
    """classify the explicit pair; it must be 2-and-2 with the
    record's temperament"""
    result = classify(pair_lattice_of(rec))
    return (result.tempered and result.s == 2 and result.s_prime == 2
            and result.tau2 == rec.tau2)


def records_for_disc(d: int, ell: int) -> List[TwoTwoRecord]:
    """verified 2-and-2 records of discriminant d and index ell,
    ordered by the class index of L"""
    if kronecker(d, ell) == -1:
        return []
    g = class_group(d)
    wr = well_rounded_classes(g)
    if not wr:
        return []
    if d % ell == 0:
        if g.identity not in classes_representing(g, ell):
            return []
        log("admitting ramified discriminant D={} for ell={}".format(d, ell))
    ambiguous = set(ambiguous_classes(g))
    ideal_classes = [i for i in classes_representing(g, ell)
                     if i in ambiguous]
    if not ideal_classes:
        return []
    p_class = ideal_classes[0]
    records = []
    for c in wr:
        c_prime = compose(g, c, p_class)
        if c_prime not in wr:
            continue
        rec = TwoTwoRecord.create(ell, d, g.classes[c], g.classes[c_prime])
        if verify_record(rec):
            records.append(rec)
        else:
            log("verifier rejected ell={} D={} {} -> {}".format(
                ell, d, rec.class_L, rec.class_M))
    return records


def enumerate(ell: int, num_threads: int = None) -> List[TwoTwoRecord]:
    """all 2-and-2 forms of index ell, sorted by (|D|, class of L);
    only discriminants with a well-rounded class are examined"""
    if not isprime(ell):
        raise ValueError("{} is not prime".format(ell))
    bound = 4 * ell * ell
    candidates = sorted(well_rounded_forms(bound), reverse=True)
    with timed("enumerating 2-and-2 forms for ell={} over {} "
               "discriminants".format(ell, len(candidates))):
        results = parallel_map(partial(records_for_disc, ell=ell),
                               candidates, num_threads)
    return [rec for records in results for rec in records]


def _scan_prime(ell: int, cache_folder: str = None) -> Optional[ScanRow]:
    records = None
    pickle_path = None
    if cache_folder:
        pickle_path = path.join(cache_folder, "two_two_{}.pkl".format(ell))
        records = load_pickle(pickle_path)
    if records is None:
        records = enumerate(ell, num_threads=1)
        if pickle_path:
            store_pickle(records, pickle_path)
    if not records:
        log("no 2-and-2 forms for ell={}".format(ell))
        return None
    d = min(rec.discriminant for rec in records)
    return ScanRow(ell, d, Fraction(-d, ell * ell))


def max_ratio_scan(max_ell: int, num_threads: int = None,
                   cache_folder: str = None) -> List[ScanRow]:
    """for each prime ell <= max_ell, the 2-and-2 discriminant of
    largest absolute value"""
    primes = list(primerange(2, max_ell + 1))
    rows = parallel_map(partial(_scan_prime, cache_folder=cache_folder),
                        primes, num_threads)
    return [row for row in rows if row is not None]


def conjecture_holds(rows: List[ScanRow]) -> bool:
    """|D| <= 3 l^2 on every row"""
    return all(row.ratio <= 3 for row in rows)


def scan_summary(rows: List[ScanRow]) -> Tuple[Optional[ScanRow], bool]:
    """row with the largest ratio, and the conjecture flag"""
    if not rows:
        return None, True
    best = max(rows, key=lambda row: (row.ratio, -row.ell))
    return best, conjecture_holds(rows)


def ells_for_disc(d: int, max_ell: int) -> List[Tuple[int, Form, Form]]:
    """primes ell <= max_ell admitting a 2-and-2 form of discriminant
    d, with the classes of L and M"""
    g = class_group(d)
    if not well_rounded_classes(g):
        log("discriminant {} has no well-rounded class".format(d))
        return []
    rows = []
    for ell in primerange(2, max_ell + 1):
        for rec in records_for_disc(d, ell):
            rows.append((ell, rec.class_L, rec.class_M))
    return rows


def congruence_classes(d: int) -> Optional[Tuple[int, List[List[int]]]]:
    """residues mod |D| of the primes ell admitting a 2-and-2 form,
    one set per admitting genus; None when a genus holds several
    classes and congruences cannot decide"""
    g = class_group(d)
    if not one_class_per_genus(g):
        return None
    wr = well_rounded_classes(g)
    admitting = sorted({genus_of(g, compose(g, inverse(g, c), c_prime))
                        for c in wr for c_prime in wr})
    genera = genus_partition(g)
    return -d, [genus_values(g, genera[k]) for k in admitting]


def prime_class(d: int, p: int) -> List[Tuple[int, bool, Tuple[int, int]]]:
    """classes of the primes above p, whether each is principal, and a
    primitive representation of p by its reduced form"""
    g = class_group(d)
    return [(i, i == g.identity, prime_witness(g, i, p))
            for i in classes_representing(g, p)]
