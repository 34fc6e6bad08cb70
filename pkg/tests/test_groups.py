import pytest

from chardeg.errors import NotMemberError, NotNormalError
from chardeg.groups import (Group, Subgroup, center, class_fusion,
                            conjugacy_classes, derived_series, is_p_solvable,
                            is_perfect, is_solvable, minimal_normal_subgroups,
                            normal_closure, quotient_group, solvable_radical)
from chardeg.perms import parse_cycles


def make(gens, degree, name=None):
    return Group([parse_cycles(s, degree) for s in gens], degree, name=name)


@pytest.fixture(scope="module")
def a5():
    return make(["(1 2 3 4 5)", "(1 2 3)"], 5, "A5")


@pytest.fixture(scope="module")
def s4():
    return make(["(1 2 3 4)", "(1 2)"], 4, "S4")


@pytest.fixture(scope="module")
def s5():
    return make(["(1 2 3 4 5)", "(1 2)"], 5, "S5")


def test_trivial_group():
    g = Group([], 1)
    assert g.order == 1
    assert conjugacy_classes(g).num_classes == 1


def test_build_orders(a5, s4):
    assert a5.order == 60
    assert s4.order == 24


def test_generators_canonically_sorted():
    g1 = make(["(1 2 3 4 5)", "(1 2 3)"], 5)
    g2 = make(["(1 2 3)", "(1 2 3 4 5)"], 5)
    assert g1.generators == g2.generators


def test_class_data_a5(a5):
    cd = conjugacy_classes(a5)
    assert cd.sizes == [1, 15, 20, 12, 12]
    assert cd.orders == [1, 2, 3, 5, 5]
    assert sum(cd.sizes) == 60
    assert all(60 % s == 0 for s in cd.sizes)
    assert len(cd.element_index) == 60


def test_class_data_cyclic():
    c3 = make(["(1 2 3)"], 3)
    cd = conjugacy_classes(c3)
    assert cd.sizes == [1, 1, 1]


def test_class_count_s5(s5):
    assert conjugacy_classes(s5).num_classes == 7


def test_inverse_and_power_maps(a5):
    cd = conjugacy_classes(a5)
    for i in range(cd.num_classes):
        assert cd.inverse_class[cd.inverse_class[i]] == i
        assert cd.power_class[i][0] == 0  # identity class is index 0
        if cd.orders[i] > 1:
            assert cd.power_class[i][1] == i


def test_derived_series(s4, a5):
    orders = [g.order for g in derived_series(s4)]
    assert orders == [24, 12, 4, 1]
    assert is_solvable(s4)
    assert derived_series(a5) == [a5]
    assert is_perfect(a5)
    assert not is_solvable(a5)


def test_derived_series_abelian():
    c6 = make(["(1 2 3 4 5 6)"], 6)
    assert [g.order for g in derived_series(c6)] == [6, 1]


def test_center(a5):
    assert center(a5).order == 1
    c4 = make(["(1 2 3 4)"], 4)
    assert center(c4).order == 4
    d8 = make(["(1 2 3 4)", "(2 4)"], 4)
    assert center(d8).order == 2


def test_normal_closure(s4, a5):
    assert normal_closure(s4, [parse_cycles("(1 2 3)", 4)]).order == 12
    assert normal_closure(s4, [s4.identity()]).order == 1
    assert normal_closure(a5, [parse_cycles("(1 2)(3 4)", 5)]).order == 60
    with pytest.raises(NotMemberError):
        normal_closure(a5, [parse_cycles("(1 2)", 5)])


def test_minimal_normal_subgroups(s4):
    mins = minimal_normal_subgroups(s4)
    assert [m.order for m in mins] == [4]
    v4 = make(["(1 2)", "(3 4)"], 4)
    assert sorted(m.order for m in minimal_normal_subgroups(v4)) == [2, 2, 2]
    trivial = Group([], 1)
    assert minimal_normal_subgroups(trivial) == []


def test_solvable_radical(s4, a5):
    assert solvable_radical(s4).order == 24
    assert solvable_radical(a5).order == 1


def test_quotient_s4_v4(s4):
    v4 = s4.subgroup([parse_cycles("(1 2)(3 4)", 4),
                      parse_cycles("(1 3)(2 4)", 4)])
    q = quotient_group(s4, v4)
    assert q.group.order == 6
    assert not q.group.is_abelian()


def test_quotient_whole_and_trivial(s4):
    whole = s4.subgroup(list(s4.generators))
    assert quotient_group(s4, whole).group.order == 1
    trivial = s4.subgroup([])
    q = quotient_group(s4, trivial)
    assert q.group.order == 24
    assert q.project(s4.generators[0]) == s4.generators[0]


def test_quotient_not_normal(s5):
    h = s5.subgroup([parse_cycles("(1 2)", 5)])
    with pytest.raises(NotNormalError):
        quotient_group(s5, h)


def test_quotient_projection_and_preimage(s4):
    v4 = s4.subgroup([parse_cycles("(1 2)(3 4)", 4),
                      parse_cycles("(1 3)(2 4)", 4)])
    q = quotient_group(s4, v4)
    for x in q.group.elements():
        pre = q.preimage(x)
        assert q.project(pre) == x
    assert [g.order for g in derived_series(q.group)] == [6, 3, 1]


def test_quotient_order_multiplicative(cat):
    for name in ("SL2_5", "S4", "2A6"):
        g = cat.group(name)
        z = center(g)
        if z.order == 1:
            continue
        q = quotient_group(g, z)
        assert q.group.order * z.order == g.order
        assert is_solvable(q.group) == (is_solvable(g))


def test_solvable_quotient_of_solvable(s4):
    a4 = s4.subgroup([parse_cycles("(1 2 3)", 4), parse_cycles("(2 3 4)", 4)])
    assert is_solvable(quotient_group(s4, a4).group)


def test_p_solvable(a5, s4):
    for p in (2, 3, 5):
        assert not is_p_solvable(a5, p)
    assert is_p_solvable(a5, 7)  # 7 does not divide 60
    for p in (2, 3, 5, 7):
        assert is_p_solvable(s4, p)
    with pytest.raises(ValueError):
        is_p_solvable(s4, 6)


def test_p_solvable_agrees_with_solvable(cat):
    for name in ("S4", "D8", "F20", "E27", "Q8"):
        g = cat.group(name)
        for p in (2, 3, 5, 7):
            assert is_p_solvable(g, p)


def test_class_fusion(s5, a5):
    a5_sub = s5.subgroup(list(a5.generators))
    fusion = class_fusion(s5, a5_sub)
    cd5 = conjugacy_classes(s5)
    cda = conjugacy_classes(a5_sub)
    # the two 12-element 5-cycle classes fuse into one S5 class
    five_cycle_classes = [fusion[i] for i in range(cda.num_classes)
                          if cda.orders[i] == 5]
    assert len(five_cycle_classes) == 2
    assert len(set(five_cycle_classes)) == 1
    # identity maps to identity
    assert fusion[0] == 0
    # fusion of H = G is the identity map
    assert class_fusion(s5, s5.subgroup(list(s5.generators))) == \
        list(range(cd5.num_classes))


def test_subgroup_membership_validated(a5):
    with pytest.raises(NotMemberError):
        Subgroup(a5, [parse_cycles("(1 2)", 5)])


def test_product_solvability(cat):
    a5xa5 = cat.group("A5xA5")
    assert not is_solvable(a5xa5)
    c3xs3 = cat.group("C3xS3")
    assert is_solvable(c3xs3)


def test_radical_properties(cat):
    g = cat.group("C2xA5")
    rad = solvable_radical(g)
    assert rad.order == 2
    assert is_solvable(rad)
    assert rad.is_normal()
    q = quotient_group(g, rad)
    assert solvable_radical(q.group).order == 1


def test_radical_of_central_products(cat):
    # the radical of SL2(5) o Q8 is the Q8 image extended over the center:
    # the quotient by it is A5, so its order is 480 / 60 = 8
    g = cat.group("SL25oQ8")
    rad = solvable_radical(g)
    assert rad.order == 8
    assert is_solvable(rad)
    q = quotient_group(g, rad)
    assert q.group.order == 60
    assert solvable_radical(q.group).order == 1
    # for the perfect central cover 6.A6 the radical is the center
    g6 = cat.group("6A6")
    assert solvable_radical(g6).order == 6


def test_p_solvable_nonsolvable_cases(cat):
    psl27 = cat.group("PSL2_7")
    for p in (2, 3, 7):
        assert not is_p_solvable(psl27, p)
    for p in (5, 11, 13):
        assert is_p_solvable(psl27, p)
    assert not is_p_solvable(cat.group("A5xA5"), 2)
    assert is_p_solvable(cat.group("A5xA5"), 7)


def test_fusion_of_central_classes(cat):
    sl25 = cat.group("SL2_5")
    z = center(sl25)
    fusion = class_fusion(sl25, z)
    cd = conjugacy_classes(sl25)
    assert len(fusion) == 2
    assert all(cd.sizes[ci] == 1 for ci in fusion)


def test_exponent(a5):
    assert a5.exponent() == 30
