from fractions import Fraction
from itertools import product

import pytest

from temperedforms.modules.forms.bqf import (IDENTITY, Form, QuadSurd,
                                             UnimodularMap, discriminant,
                                             distinguished_basis, dual,
                                             evaluate, is_reduced, reduce,
                                             represents, transform)


def test_discriminant():
    assert discriminant(Form(1, -1, 1)) == -3
    assert discriminant(Form(391, 169, 19)) == -1155
    assert Form(17, -1, 17).discriminant == -1155


def test_is_reduced():
    assert is_reduced(Form(19, -17, 19))
    assert not is_reduced(Form(19, 17, 19))
    assert not is_reduced(Form(391, 169, 19))
    assert is_reduced(Form(2, 1, 7))
    assert not is_reduced(Form(2, 2, 7))


def test_reduce_examples():
    reduced, m = reduce(Form(391, 169, 19))
    assert reduced == Form(19, -17, 19)
    assert m.proper
    assert transform(Form(391, 169, 19), m) == reduced
    assert reduce(Form(1, -1, 14))[0] == Form(1, -1, 14)
    assert reduce(Form(1, 0, 1)) == (Form(1, 0, 1), IDENTITY)


def test_reduce_is_a_proper_equivalence_invariant():
    f = Form(19, -17, 19)
    for p, q in [(1, 1), (2, 1), (3, -4), (5, 7)]:
        # complete (p, q) to a det +1 matrix
        for r, s in product(range(-8, 9), repeat=2):
            if p * s - q * r == 1:
                g = transform(f, UnimodularMap(p, q, r, s))
                assert g.discriminant == f.discriminant
                assert reduce(g)[0] == f
                break


def test_reduce_rejects_indefinite_forms():
    assert Form(2, 1, 7).is_positive_definite
    assert not Form(1, 3, 1).is_positive_definite
    assert not Form(-2, 1, -7).is_positive_definite
    with pytest.raises(ValueError):
        reduce(Form(1, 3, 1))
    with pytest.raises(ValueError):
        reduce(Form(-2, 1, -7))
    with pytest.raises(ValueError):
        represents(Form(-2, 1, -7), 5)


def test_dual():
    assert dual(Form(19, -17, 19)) == Form(19, 17, 19)
    assert dual(Form(1, 0, 1)) == Form(1, 0, 1)
    assert dual(Form(2, -1, 7)) == Form(7, 1, 2)
    assert dual(dual(Form(3, 1, 5))) == Form(3, 1, 5)


def test_evaluate():
    f = Form(391, 169, 19)
    assert evaluate(f, 0, 1) == 19
    assert evaluate(f, 5, -23) == 391
    assert evaluate(f, 0, 0) == 0


def test_represents():
    assert represents(Form(4, -3, 4), 31) == (1, 3)
    assert represents(Form(1, -1, 14), 59) == (1, -2)
    assert represents(Form(1, -1, 14), 71) == (3, -2)
    assert represents(Form(4, -3, 4), 89) == (1, 5)
    assert represents(Form(1, 0, 1), 3) is None
    with pytest.raises(ValueError):
        represents(Form(1, 0, 1), 0)


def test_represents_returns_primitive_solutions():
    f = Form(2, 1, 7)
    for n in range(1, 120):
        found = represents(f, n)
        if found is not None:
            x, y = found
            assert evaluate(f, x, y) == n


def test_minimum_of_reduced_form_is_a():
    for f in [Form(19, -17, 19), Form(2, 1, 7), Form(15, -15, 23),
              Form(1, -1, 1)]:
        values = [evaluate(f, x, y)
                  for x, y in product(range(-30, 31), repeat=2)
                  if (x, y) != (0, 0)]
        assert min(values) == f.a


def test_distinguished_basis():
    assert distinguished_basis(Form(1, -1, 1)) == QuadSurd(
        Fraction(-1, 2), Fraction(1, 2), -3)
    assert distinguished_basis(Form(1, 0, 1)) == QuadSurd(
        Fraction(0), Fraction(1, 2), -4)
    gamma = distinguished_basis(Form(19, -17, 19))
    assert gamma == QuadSurd(Fraction(-17, 38), Fraction(1, 38), -1155)
    assert gamma.to_complex().imag > 0


def test_transform():
    f = Form(19, -17, 19)
    assert transform(f, IDENTITY) == f
    assert transform(Form(1, 0, 1), UnimodularMap(0, 1, 1, 0)) == Form(1, 0, 1)
    reduced, m = reduce(Form(391, 169, 19))
    assert transform(reduced, m.inverse()) == Form(391, 169, 19)
    with pytest.raises(ValueError):
        transform(f, UnimodularMap(2, 0, 0, 1))


def test_form_text():
    assert str(Form(17, -1, 17)) == "17,-1,17"
    assert Form.parse("17,-1,17") == Form(17, -1, 17)
    with pytest.raises(ValueError):
        Form.parse("1,2")
