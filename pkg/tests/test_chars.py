import pytest

from chardeg.chars import (character_table, extensions_of, gallagher_check,
                           inner_product, kernel_classes_contain,
                           kernel_subgroup, restrict_character, tensor)
from chardeg.checks import principal_character
from chardeg.groups import Group, Subgroup, center
from chardeg.perms import parse_cycles


def make(gens, degree, name=None):
    return Group([parse_cycles(s, degree) for s in gens], degree, name=name)


@pytest.fixture(scope="module")
def s5():
    return make(["(1 2 3 4 5)", "(1 2)"], 5, "S5")


@pytest.fixture(scope="module")
def a5_in_s5(s5):
    return Subgroup(s5, [parse_cycles("(1 2 3 4 5)", 5),
                         parse_cycles("(1 2 3)", 5)])


def test_inner_product_regular(s5):
    t = character_table(s5)
    # <1, regular> = 1: the regular character is sum of d * chi
    regular = None
    for c in t.chars:
        scaled = [v.scale(c.degree) for v in c.values]
        regular = scaled if regular is None else [
            a + b for a, b in zip(regular, scaled)]
    one = principal_character(t)
    assert inner_product(t, one, regular) == 1


def test_tensor_with_principal(s5):
    t = character_table(s5)
    chi = t.chars[-1]
    one = principal_character(t)
    prod = tensor(chi, one)
    assert all(x.value_eq(y) for x, y in zip(prod, chi.values))


def test_sign_squares_to_one(s5):
    t = character_table(s5)
    sgn = [c for c in t.chars
           if c.degree == 1 and c is not principal_character(t)][0]
    square = tensor(sgn, sgn)
    one = principal_character(t)
    assert all(x.value_eq(y) for x, y in zip(square, one.values))


def test_sign_times_degree5(s5):
    t = character_table(s5)
    sgn = [c for c in t.chars
           if c.degree == 1 and c is not principal_character(t)][0]
    deg5 = [c for c in t.chars if c.degree == 5]
    prod = tensor(sgn, deg5[0])
    # equals the other degree-5 character
    assert all(x.value_eq(y) for x, y in zip(prod, deg5[1].values))
    assert not all(x.value_eq(y) for x, y in zip(prod, deg5[0].values))


def test_restriction_to_a5(s5, a5_in_s5):
    ts5 = character_table(s5)
    ta5 = character_table(a5_in_s5)
    one = principal_character(ts5)
    restricted = restrict_character(s5, one, a5_in_s5)
    assert all(v.rational() == 1 for v in restricted)
    # S5's degree-4 restricts to A5's degree-4 irreducibly
    deg4 = [c for c in ts5.chars if c.degree == 4][0]
    restricted = restrict_character(s5, deg4, a5_in_s5)
    assert inner_product(ta5, restricted, restricted) == 1
    target = [c for c in ta5.chars if c.degree == 4][0]
    assert inner_product(ta5, restricted, target) == 1


def test_restriction_degree5_irreducible(s5, a5_in_s5):
    ts5 = character_table(s5)
    ta5 = character_table(a5_in_s5)
    deg5 = [c for c in ts5.chars if c.degree == 5][0]
    restricted = restrict_character(s5, deg5, a5_in_s5)
    target = [c for c in ta5.chars if c.degree == 5][0]
    assert inner_product(ta5, restricted, target) == 1


def test_kernel_of_principal(s5):
    t = character_table(s5)
    ker = kernel_subgroup(s5, principal_character(t))
    assert ker.order == s5.order


def test_kernel_of_sign(s5):
    t = character_table(s5)
    sgn = [c for c in t.chars
           if c.degree == 1 and c is not principal_character(t)][0]
    assert kernel_subgroup(s5, sgn).order == 60


def test_faithful_kernel_trivial(cat):
    sl25 = cat.group("SL2_5")
    t = character_table(sl25)
    deg2 = [c for c in t.chars if c.degree == 2][0]
    assert kernel_subgroup(sl25, deg2).order == 1


def test_restrict_sl25_degree2_to_center(cat):
    sl25 = cat.group("SL2_5")
    t = character_table(sl25)
    z = center(sl25)
    tz = character_table(z)
    lam = [c for c in tz.chars if c is not principal_character(tz)][0]
    for chi in t.chars:
        if chi.degree != 2:
            continue
        restricted = restrict_character(sl25, chi, z)
        # restriction is 2 * lambda
        doubled = [v.scale(2) for v in lam.values]
        assert all(x.value_eq(y) for x, y in zip(restricted, doubled))


def test_extensions_principal_case(s5, a5_in_s5):
    ta5 = character_table(a5_in_s5)
    one = principal_character(ta5)
    exts = extensions_of(s5, a5_in_s5, one)
    # exactly the linear characters of S5 trivial on A5... both are
    assert len(exts) == 2
    assert all(c.degree == 1 for c in exts)


def test_extensions_degree5(s5, a5_in_s5):
    ta5 = character_table(a5_in_s5)
    theta = [c for c in ta5.chars if c.degree == 5][0]
    exts = extensions_of(s5, a5_in_s5, theta)
    assert len(exts) == 2
    assert all(c.degree == 5 for c in exts)


def test_extensions_warn_non_normal(s5):
    h = Subgroup(s5, [parse_cycles("(1 2)", 5)])
    th = character_table(h)
    warnings = []
    extensions_of(s5, h, principal_character(th), warn=warnings.append)
    assert warnings


def test_gallagher_whole_group(s5):
    t = character_table(s5)
    whole = Subgroup(s5, list(s5.generators))
    psi = t.chars[-1]
    res = gallagher_check(s5, whole, psi)
    assert res.passed


def test_gallagher_s5_a5(s5, a5_in_s5):
    ta5 = character_table(a5_in_s5)
    theta = [c for c in ta5.chars if c.degree == 5][0]
    psi = extensions_of(s5, a5_in_s5, theta)[0]
    res = gallagher_check(s5, a5_in_s5, psi)
    assert res.passed


def test_gallagher_precondition_reported(s5, a5_in_s5):
    ts5 = character_table(s5)
    deg6 = [c for c in ts5.chars if c.degree == 6][0]
    # degree-6 restricts reducibly (A5 has no degree-6)
    res = gallagher_check(s5, a5_in_s5, deg6)
    assert not res.passed
    assert "precondition" in res.details[0]


def test_kernel_classes_contain(cat):
    sl27 = cat.group("SL2_7")
    t = character_table(sl27)
    z = center(sl27)
    for chi in t.chars:
        expected = all(t.classes.class_of(g) in chi.kernel_classes
                       for g in z.generators)
        assert kernel_classes_contain(t, chi, z) == expected


def test_tensor_decomposes_with_nonneg_integer_multiplicities(cat):
    for name in ("A5", "S4", "Q8", "PSL2_7"):
        g = cat.group(name)
        t = character_table(g)
        chi, psi = t.chars[-1], t.chars[-2]
        prod = tensor(chi, psi)
        total_degree = 0
        for tau in t.chars:
            mult = inner_product(t, prod, tau)
            assert mult.denominator == 1 and mult >= 0
            total_degree += mult * tau.degree
        assert total_degree == chi.degree * psi.degree


def test_regular_character_multiplicities(cat):
    g = cat.group("SL2_5")
    t = character_table(g)
    regular = None
    for c in t.chars:
        scaled = [v.scale(c.degree) for v in c.values]
        regular = scaled if regular is None else [
            a + b for a, b in zip(regular, scaled)]
    for c in t.chars:
        assert inner_product(t, regular, c) == c.degree


def test_fused_characters_do_not_extend(cat):
    # the two degree-3 characters of A5 are swapped by S5, so neither extends
    s5 = cat.group("S5")
    a5 = Subgroup(s5, cat.group("A5").generators)
    ta5 = character_table(a5)
    for theta in ta5.chars:
        if theta.degree == 3:
            assert extensions_of(s5, a5, theta) == []


def test_quotient_degrees_consistency(cat):
    # characters trivial on the center realize the central quotient's table
    from chardeg.groups import quotient_group
    for name in ("SL2_5", "SL2_7", "2A6", "3A6", "Q8", "D8"):
        g = cat.group(name)
        z = center(g)
        t = character_table(g)
        kernel_degrees = sorted(
            c.degree for c in t.chars if kernel_classes_contain(t, c, z))
        q = quotient_group(g, z)
        assert kernel_degrees == character_table(q.group).degrees(), name
    # SL2(5)/Z realizes A5's table exactly
    sl25 = cat.group("SL2_5")
    q = quotient_group(sl25, center(sl25))
    assert character_table(q.group).degrees() == \
        character_table(cat.group("A5")).degrees()
