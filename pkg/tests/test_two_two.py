from fractions import Fraction
from os import path

import pytest
from sympy import primerange

from temperedforms.modules.forms.bqf import Form, evaluate, reduce
from temperedforms.modules.forms.classgroup import (class_group, class_of,
                                                    genus_of,
                                                    genus_partition,
                                                    genus_values)
from temperedforms.modules.lattice.geometry import to_form
from temperedforms.modules.lattice.verifier import classify
from temperedforms.modules.tempered.records import ScanRow, TwoTwoRecord
from temperedforms.modules.tempered.two_two import (
    congruence_classes, conjecture_holds, ells_for_disc, enumerate,
    max_ratio_scan, pair_lattice_of, prime_class, records_for_disc,
    scan_summary, verify_record)

RECORD_23 = TwoTwoRecord.create(23, -1155, Form(19, -17, 19),
                                Form(17, -1, 17))
MIRROR_23 = TwoTwoRecord.create(23, -1155, Form(17, -1, 17),
                                Form(19, -17, 19))
GAUSS_17 = TwoTwoRecord.create(17, -4, Form(1, 0, 1), Form(1, 0, 1))
GAUSS_2 = TwoTwoRecord.create(2, -4, Form(1, 0, 1), Form(1, 0, 1))


def test_record_temperament():
    assert RECORD_23.tau2 == Fraction(391, 19)
    assert MIRROR_23.tau2 == Fraction(437, 17)
    assert RECORD_23.tau2 * MIRROR_23.tau2 == 23 * 23
    assert GAUSS_17.tau2 == 17


def test_enumerate_23():
    records = enumerate(23)
    assert RECORD_23 in records
    assert MIRROR_23 in records
    distinct = [rec for rec in records if rec.class_L != rec.class_M]
    assert -1155 in {rec.discriminant for rec in distinct}
    keys = [(-rec.discriminant, class_of(class_group(rec.discriminant),
                                         rec.class_L)) for rec in records]
    assert keys == sorted(keys)


def test_enumerate_gaussian():
    assert GAUSS_17 in enumerate(17)
    assert GAUSS_2 in enumerate(2)
    assert records_for_disc(-4, 2) == [GAUSS_2]
    # 3 mod 4 stays inert in Z[i]
    assert records_for_disc(-4, 3) == []


def test_first_distinct_shape_is_at_23():
    for ell in primerange(2, 23):
        assert all(rec.class_L == rec.class_M for rec in enumerate(ell))


def test_enumerate_rejects_composite():
    with pytest.raises(ValueError):
        enumerate(21)


def test_enumerate_is_independent_of_threads():
    assert enumerate(23, num_threads=2) == enumerate(23, num_threads=1)


def test_pair_lattice_of_worked_example():
    pair = pair_lattice_of(RECORD_23)
    assert pair.gram.g11 == 391
    assert pair.sub == ((1, 0), (0, 23))
    assert reduce(to_form(pair.gram)[0])[0] == Form(19, -17, 19)
    result = classify(pair)
    assert (result.s, result.s_prime) == (2, 2)
    assert result.tau2 == Fraction(391, 19)
    assert result.m_L == 19


@pytest.mark.parametrize("rec", [GAUSS_17, GAUSS_2])
def test_pair_lattice_of_gaussian(rec):
    pair = pair_lattice_of(rec)
    assert pair.gram.g11 == rec.ell
    assert reduce(to_form(pair.gram)[0])[0] == Form(1, 0, 1)
    result = classify(pair)
    assert result.kind == "2and2"
    assert result.tau2 == rec.ell


def test_verify_record():
    assert verify_record(RECORD_23)
    assert verify_record(MIRROR_23)
    wrong = TwoTwoRecord({
        "ell": 23,
        "discriminant": -1155,
        "class_L": Form(19, -17, 19),
        "class_M": Form(17, -1, 17),
        "tau2": Fraction(23)
    })
    assert not verify_record(wrong)


def test_ells_for_disc_55():
    rows = ells_for_disc(-55, 100)
    assert [ell for ell, _, _ in rows] == [59, 71]
    for _, class_L, class_M in rows:
        assert class_L == class_M == Form(4, -3, 4)


def test_ells_for_disc_1155():
    rows = ells_for_disc(-1155, 500)
    ells = sorted({ell for ell, _, _ in rows})
    assert ells[:9] == [23, 53, 113, 137, 317, 331, 379, 421, 443]
    residues = congruence_classes(-1155)[1]
    for ell in ells:
        assert any(ell % 1155 in values for values in residues)


def test_ells_for_disc_without_well_rounded_class():
    assert ells_for_disc(-23, 100) == []


def test_congruence_classes():
    modulus, residues = congruence_classes(-1155)
    assert modulus == 1155
    assert [len(values) for values in residues] == [30, 30]
    g = class_group(-1155)
    genera = genus_partition(g)
    expected = [genus_values(g, genera[genus_of(g, i)])
                for i in (g.identity, class_of(g, Form(15, -15, 23)))]
    assert sorted(residues) == sorted(expected)

    assert congruence_classes(-55) is None
    assert congruence_classes(-4) == (4, [[1]])


def test_prime_class():
    rows = prime_class(-1155, 23)
    g = class_group(-1155)
    assert len(rows) == 1
    index, principal, rep = rows[0]
    assert index == class_of(g, Form(15, -15, 23))
    assert not principal
    assert evaluate(g.classes[index], *rep) == 23

    [(index, principal, rep)] = prime_class(-55, 59)
    assert principal
    assert evaluate(Form(1, -1, 14), *rep) == 59

    assert prime_class(-55, 3) == []


@pytest.mark.parametrize("p, form, principal, witness", [
    (31, Form(4, -3, 4), False, (1, 3)),
    (59, Form(1, -1, 14), True, (1, -2)),
    (71, Form(1, -1, 14), True, (3, -2)),
    (89, Form(4, -3, 4), False, (1, 5)),
])
def test_prime_class_55(p, form, principal, witness):
    g = class_group(-55)
    assert prime_class(-55, p) == [(class_of(g, form), principal, witness)]


def test_scan_summary():
    rows = [ScanRow(5, -87, Fraction(87, 25)),
            ScanRow(47, -6435, Fraction(6435, 2209))]
    best, holds = scan_summary(rows)
    assert best.ell == 5
    assert not holds
    assert not conjecture_holds(rows)
    assert conjecture_holds(rows[1:])
    assert scan_summary([]) == (None, True)


def test_scan_cache(tmp_path):
    rows = max_ratio_scan(23, cache_folder=str(tmp_path))
    assert path.exists(path.join(str(tmp_path), "two_two_23.pkl"))
    assert max_ratio_scan(23, cache_folder=str(tmp_path)) == rows
    assert rows[-1].ell == 23
    assert 1155 <= -rows[-1].discriminant <= 4 * 23 * 23
    assert rows[-1].ratio == Fraction(-rows[-1].discriminant, 529)


@pytest.mark.slow
def test_max_ratio_scan_to_100():
    rows = max_ratio_scan(100)
    best, holds = scan_summary(rows)
    assert (best.ell, best.discriminant) == (47, -6435)
    assert best.ratio == Fraction(6435, 2209)
    assert holds
    assert all(row.ratio <= 4 for row in rows)


@pytest.mark.slow
def test_enumeration_properties_to_50():
    by_disc = {}
    for ell in primerange(2, 50):
        records = enumerate(ell)
        for rec in records:
            assert -rec.discriminant <= 4 * ell * ell
            if ell > 2:
                assert rec.discriminant % ell != 0
            mirrors = [other for other in records
                       if other.discriminant == rec.discriminant
                       and other.class_L == rec.class_M
                       and other.class_M == rec.class_L]
            assert len(mirrors) == 1
            assert mirrors[0].tau2 * rec.tau2 == ell * ell
            by_disc.setdefault(rec.discriminant, set()).add(ell)
    for d, ells in by_disc.items():
        assert {ell for ell, _, _ in ells_for_disc(d, 50)} == ells
