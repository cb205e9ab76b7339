#!/usr/bin/env python
# vim: set fileencoding=utf-8 :
#
# Copyright (C) 2022 The temperedforms authors
"""temperedforms.modules.forms.classgroup

Proper ideal class groups of imaginary quadratic orders, enumerated
through reduced forms; composition, ambiguity, well-roundedness and
genus structure
"""

from functools import lru_cache
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Set

import numpy as np
from sympy import divisors, isprime, primerange
from sympy.ntheory import sqrt_mod

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

try:
    from sympy.functions.combinatorial.numbers import jacobi_symbol
except ImportError:  # sympy < 1.13
    from sympy.ntheory import jacobi_symbol

from ..config import conf
from .bqf import (Form, check_discriminant, principal_form, reduce,
                  represents)


class ClassGroup:
    """All reduced primitive forms of one discriminant. Composition
    is evaluated lazily and memoised per index pair."""

    def __init__(self, properties: dict):
        self.discriminant = properties["discriminant"]
        self.classes = properties["classes"]
        self.index = {form: i for i, form in enumerate(self.classes)}
        self.identity = self.index[reduce(
            principal_form(self.discriminant))[0]]
        self._products = {}
        self._genera = None

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return "ClassGroup(D={}, h={})".format(
            self.discriminant, len(self.classes))

    @staticmethod
    def create(d: int):
        """enumerate the reduced forms of discriminant d"""
        return ClassGroup({
            "discriminant": d,
            "classes": reduced_forms(d)
        })


@lru_cache(maxsize=conf["class_group_cache_size"])
def class_group(d: int) -> ClassGroup:
    """memoised ClassGroup.create"""
    return ClassGroup.create(d)


class WRWitness(NamedTuple):
    """factorisation -FG of D (or D/4) producing the well-rounded
    reduced form (a, b, a)"""
    F: int
    G: int
    a: int
    b: int


def reduced_forms(d: int) -> List[Form]:
    """all primitive reduced forms of discriminant d, sorted by (a, b)"""
    check_discriminant(d)
    forms = []
    a = 1
    # a reduced form has 3a^2 <= |D|
    while 3 * a * a <= -d:
        for b in range(-a, a):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b > 0):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            forms.append(Form(a, b, c))
        a += 1
    return forms


def compose_forms(f1: Form, f2: Form) -> Form:
    """reduced composite of two primitive forms of equal discriminant
    (Dirichlet composition, Cohen's formulation)"""
    d = f1.discriminant
    if f2.discriminant != d:
        raise ValueError("forms {} and {} have different discriminants".format(
            f1, f2))
    if f1.a > f2.a:
        f1, f2 = f2, f1
    a1, b1, _ = f1
    a2, b2, c2 = f2
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1 = 0
        d0 = a1
    else:
        u, _, d0 = igcdex(a2, a1)
        y1 = u
    if s % d0 == 0:
        y2 = -1
        x2 = 0
        d1 = d0
    else:
        u, v, d1 = igcdex(s, d0)
        x2 = u
        y2 = -v
    v1 = a1 // d1
    v2 = a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - d) // (4 * a3)
    return reduce(Form(int(a3), int(b3), int(c3)))[0]


def compose(g: ClassGroup, i: int, j: int) -> int:
    """index of the class of the composite of classes i and j"""
    key = (i, j) if i <= j else (j, i)
    result = g._products.get(key)
    if result is None:
        result = g.index[compose_forms(g.classes[i], g.classes[j])]
        g._products[key] = result
    return result


def composition_table(g: ClassGroup) -> List[List[int]]:
    h = len(g)
    return [[compose(g, i, j) for j in range(h)] for i in range(h)]


def class_of(g: ClassGroup, f: Form) -> int:
    if not f.is_primitive:
        raise ValueError("form {} is not primitive".format(f))
    if f.discriminant != g.discriminant:
        raise ValueError("form {} does not have discriminant {}".format(
            f, g.discriminant))
    return g.index[reduce(f)[0]]


def inverse(g: ClassGroup, i: int) -> int:
    a, b, c = g.classes[i]
    return class_of(g, Form(a, -b, c))


def element_order(g: ClassGroup, i: int) -> int:
    order = 1
    current = i
    while current != g.identity:
        current = compose(g, current, i)
        order += 1
    return order


def ambiguous_classes(g: ClassGroup) -> List[int]:
    """b = 0, b = -a or a = c"""
    return [i for i, (a, b, c) in enumerate(g.classes)
            if b == 0 or b == -a or a == c]


def well_rounded_classes(g: ClassGroup) -> List[int]:
    return [i for i, (a, _, c) in enumerate(g.classes) if a == c]


def _roots_mod_4p(d: int, p: int) -> List[int]:
    """all b in [0, 2p) with b^2 = d mod 4p"""
    if p == 2:
        return [b for b in range(4) if (b * b - d) % 8 == 0]
    roots = sqrt_mod(d % p, p, all_roots=True) or []
    result = set()
    for root in roots:
        # b^2 = d mod 4 iff b = d mod 2
        b = root if (root - d) % 2 == 0 else root + p
        result.add(b % (2 * p))
    return sorted(result)


def classes_representing(g: ClassGroup, p: int) -> List[int]:
    """classes whose reduced form primitively represents the prime p;
    a class does so iff it contains a form (p, b, c)"""
    if not isprime(p):
        raise ValueError("{} is not prime".format(p))
    d = g.discriminant
    found = set()
    for b in _roots_mod_4p(d, p):
        c = (b * b - d) // (4 * p)
        f = Form(p, b, c)
        if f.is_primitive:
            found.add(class_of(g, f))
    return sorted(found)


def genus_partition(g: ClassGroup) -> List[List[int]]:
    """cosets of the subgroup of squares; the principal genus first,
    the others in order of their smallest class index"""
    if g._genera is None:
        squares = sorted({compose(g, i, i) for i in range(len(g))})
        assigned = {}
        genera = []
        for i in range(len(g)):
            if i in assigned:
                continue
            coset = sorted({compose(g, i, sq) for sq in squares})
            for member in coset:
                assigned[member] = len(genera)
            genera.append(coset)
        g._genera = genera
    return g._genera


def genus_of(g: ClassGroup, i: int) -> int:
    for genus_id, members in enumerate(genus_partition(g)):
        if i in members:
            return genus_id
    raise Exception("class {} is in no genus".format(i))


def one_class_per_genus(g: ClassGroup) -> bool:
    return all(len(members) == 1 for members in genus_partition(g))


def genus_values(g: ClassGroup, genus: List[int]) -> List[int]:
    """residues in (Z/|D|)^x taken by the forms of a genus, by
    evaluating every form over the whole (x, y) grid mod |D|"""
    n = -g.discriminant
    xs = np.arange(n, dtype=np.int64)
    x_sq = (xs * xs) % n
    attained = np.zeros(n, dtype=bool)
    # rows per block so that each n-wide intermediate stays in budget
    block = max(1, conf["genus_block_elements"] // n)
    for i in genus:
        a, b, c = g.classes[i]
        a_x = (a * x_sq) % n
        for start in range(0, n, block):
            ys = xs[start:start + block]
            b_xy = (b * ((ys[:, None] * xs[None, :]) % n)) % n
            c_y = ((c * ((ys * ys) % n)) % n)[:, None]
            values = (a_x[None, :] + b_xy + c_y) % n
            attained[np.unique(values)] = True
    residues = np.nonzero(attained)[0]
    coprime = residues[np.gcd(residues, n) == 1]
    return [int(value) for value in coprime]


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d | n) for n >= 1"""
    if n < 1:
        raise ValueError("n must be positive")
    result = 1
    while n % 2 == 0:
        n //= 2
        if d % 2 == 0:
            return 0
        if d % 8 in (3, 5):
            result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(d % n, n))


def has_wr_discriminant(d: int) -> List[WRWitness]:
    """factorisations of D certifying a well-rounded reduced form:
    odd D = -FG with gcd(F, G) = 1; even D/4 = -FG with
    gcd((F+G)/2, 2G) = 1; in both cases G <= F <= 3G"""
    check_discriminant(d)
    witnesses = []
    odd = d % 2 == 1
    n = -d if odd else -d // 4
    for big_g in divisors(n):
        big_f = n // big_g
        if big_f < big_g:
            break
        if big_f > 3 * big_g:
            continue
        if odd:
            if gcd(big_f, big_g) != 1 or (big_f + big_g) % 4:
                continue
            a = (big_f + big_g) // 4
            b = (big_g - big_f) // 2
        else:
            if (big_f + big_g) % 2:
                continue
            a = (big_f + big_g) // 2
            if gcd(a, 2 * big_g) != 1:
                continue
            b = big_g - big_f
        witnesses.append(WRWitness(big_f, big_g, a, b))
    return sorted(witnesses, key=lambda w: w.a)


def smallest_primes(g: ClassGroup, limit: int = None) -> List[Optional[int]]:
    """for each class, the smallest non-inert prime <= limit that it
    primitively represents"""
    if limit is None:
        limit = conf["max_prime_scan"]
    result = [None] * len(g)
    missing = len(g)
    for p in primerange(2, limit + 1):
        if kronecker(g.discriminant, p) == -1:
            continue
        for i in classes_representing(g, p):
            if result[i] is None:
                result[i] = p
                missing -= 1
        if missing == 0:
            break
    return result


def prime_witness(g: ClassGroup, i: int, p: int) -> Optional[tuple]:
    """a primitive representation of p by the reduced form of class i"""
    return represents(g.classes[i], p)


def well_rounded_forms(bound: int) -> Dict[int, Set[Form]]:
    """all primitive reduced forms (a, b, a) with |D| <= bound, keyed
    by discriminant"""
    result = {}
    a = 1
    while 3 * a * a <= bound:
        for b in range(-a, 1):
            d = b * b - 4 * a * a
            if -d > bound or gcd(a, b) != 1:
                continue
            result.setdefault(d, set()).add(Form(a, b, a))
        a += 1
    return result
