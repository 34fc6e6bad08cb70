from fractions import Fraction

import pytest

from chardeg.chars import character_table
from chardeg.groups import Group
from chardeg.oracle import (CycloField, ORACLE_ORDER_BOUND, oracle_table,
                            verify_against_oracle)
from chardeg.perms import parse_cycles


def make(gens, degree, name=None):
    return Group([parse_cycles(s, degree) for s in gens], degree, name=name)


def test_field_arithmetic():
    f = CycloField(12)
    z = f.zeta(1)
    assert f.eq(f.mul(z, f.zeta(11)), f.one)
    twelve = f.from_rational(Fraction(12))
    assert f.rational(twelve) == 12
    assert f.rational(z) is None
    assert f.eq(f.inv(z), f.zeta(11))
    # conjugation fixes rationals and inverts roots
    assert f.eq(f.conj(z), f.zeta(11))
    assert f.eq(f.conj(twelve), twelve)


def test_field_relations():
    f = CycloField(6)
    # z6^3 = -1
    assert f.rational(f.zeta(3)) == -1
    # 1 + z3 + z3^2 = 0 inside Q(zeta_6)
    total = f.add(f.add(f.one, f.zeta(2)), f.zeta(4))
    assert f.is_zero(total)


def test_oracle_rejects_large_groups():
    s5 = make(["(1 2 3 4 5)", "(1 2)"], 5)
    with pytest.raises(ValueError):
        oracle_table(list(s5.generators), 5)


def test_oracle_s3_table():
    s3 = make(["(1 2 3)", "(1 2)"], 3, "S3")
    rows, classes, field = oracle_table(list(s3.generators), 3)
    assert sorted(d for d, _ in rows) == [1, 1, 2]
    assert [len(c) for c in classes] == [1, 3, 2]


def test_oracle_matches_engine_samples():
    cases = [
        (["(1 2 3 4)", "(1 2)"], 4, "S4"),
        (["(1 2 3)", "(2 3 4)"], 4, "A4"),
        (["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"], 7, "F21"),
    ]
    for gens, degree, name in cases:
        g = make(gens, degree, name)
        verify_against_oracle(g, character_table(g))


def test_oracle_bound_value():
    assert ORACLE_ORDER_BOUND == 24
