import pytest

from chardeg.bsgs import StabilizerChain
from chardeg.perms import Permutation, parse_cycles


def brute_closure(gens, degree):
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in elements:
                    elements.add(y)
                    new.append(y)
        frontier = new
    return elements


CASES = [
    ("trivial", [], 1, 1),
    ("C5", ["(1 2 3 4 5)"], 5, 5),
    ("S4", ["(1 2 3 4)", "(1 2)"], 4, 24),
    ("A5", ["(1 2 3 4 5)", "(1 2 3)"], 5, 60),
    ("S5", ["(1 2 3 4 5)", "(1 2)"], 5, 120),
    ("A6", ["(1 2 3 4 5)", "(4 5 6)"], 6, 360),
    ("D12", ["(1 2 3 4 5 6)", "(2 6)(3 5)"], 6, 12),
]


@pytest.mark.parametrize("name,gens,degree,order", CASES)
def test_order_matches_enumeration(name, gens, degree, order):
    perms = [parse_cycles(s, degree) for s in gens]
    chain = StabilizerChain(perms, degree)
    assert chain.order() == order
    assert len(brute_closure(perms, degree)) == order


@pytest.mark.parametrize("name,gens,degree,order", CASES)
def test_elements_enumeration(name, gens, degree, order):
    perms = [parse_cycles(s, degree) for s in gens]
    chain = StabilizerChain(perms, degree)
    elements = list(chain.elements())
    assert len(elements) == order
    assert len(set(elements)) == order
    assert set(elements) == brute_closure(perms, degree)


def test_membership():
    gens = [parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)]
    chain = StabilizerChain(gens, 5)
    assert chain.contains(parse_cycles("(1 2)(3 4)", 5))
    assert not chain.contains(parse_cycles("(1 2)", 5))  # odd


def test_generators_sift_to_identity():
    gens = [parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)]
    chain = StabilizerChain(gens, 4)
    for g in gens:
        assert chain.contains(g)


def test_base_prefix_levels():
    # prefix points head the base even when redundant
    gens = [parse_cycles("(1 2)", 4)]
    chain = StabilizerChain(gens, 4, base_prefix=(2, 3))
    assert chain.base[:2] == [2, 3]
    assert chain.order() == 2
    # the stabilizer of the prefix is the full group here (it fixes 3, 4)
    stab_gens = chain.stabilizer_generators(2)
    assert StabilizerChain(stab_gens, 4).order() == 2


def test_deterministic_construction():
    gens = [parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)]
    a = StabilizerChain(gens, 5)
    b = StabilizerChain(gens, 5)
    assert a.base == b.base
    assert [sorted(t) for t in a.transversals] == \
        [sorted(t) for t in b.transversals]
    assert list(a.elements()) == list(b.elements())


def test_group_orbit_product_identity(cat):
    # BSGS order equals brute-force enumeration for every group up to 5000
    for entry in cat.load_all():
        g = entry.group
        if g.order > 5000:
            continue
        assert len(brute_closure(list(g.generators), g.degree)) == g.order
