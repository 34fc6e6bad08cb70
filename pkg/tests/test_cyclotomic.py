import pytest

from chardeg.cyclotomic import (CycValue, cyclotomic_polynomial,
                                reduce_to_power_basis)


@pytest.mark.parametrize("n,expected", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_polynomials(n, expected):
    assert cyclotomic_polynomial(n) == expected


def test_phi_degree_is_euler_totient():
    from math import gcd
    for n in range(1, 40):
        totient = sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
        assert len(cyclotomic_polynomial(n)) - 1 == totient


def test_root_of_unity_relations():
    # 1 + z3 + z3^2 = 0
    v = CycValue(3, (1, 1, 1))
    assert v.is_zero()
    # z6 + z6^5 = 1
    v = CycValue(6, (0, 1, 0, 0, 0, 1))
    assert v.rational() == 1
    # z4^2 = -1
    v = CycValue.root_of_unity(4) * CycValue.root_of_unity(4)
    assert v.rational() == -1


def test_embedding_respects_value():
    v = CycValue(3, (2, 1, 0))
    w = v.embed(12)
    assert (v - w).is_zero()
    assert v.value_eq(w)


def test_embedding_respects_arithmetic():
    a = CycValue(4, (1, 2, 0, 0))
    b = CycValue(6, (0, 1, 1, 0, 0, 0))
    lhs = (a * b).embed(12)
    rhs = a.embed(12) * b.embed(12)
    assert lhs.value_eq(rhs)
    assert (a + b).value_eq(a.embed(12) + b.embed(12))


def test_distinct_formal_vectors_same_value():
    # {z6, z6^3, z6^5} and {1, z3, z3^2} both sum to zero
    a = CycValue(6, (0, 1, 0, 1, 0, 1))
    b = CycValue(3, (1, 1, 1))
    assert a.coeffs != b.embed(6).coeffs
    assert a.value_eq(b)


def test_conjugation():
    v = CycValue(5, (0, 1, 0, 0, 0))
    assert v.conjugate() == CycValue(5, (0, 0, 0, 0, 1))
    # v * conj(v) = 1 for a root of unity
    assert (v * v.conjugate()).rational() == 1


def test_rational_detection():
    assert CycValue(8, (3, 0, 0, 0, 0, 0, 0, 0)).rational() == 3
    assert CycValue(8, (0, 1, 0, 0, 0, 0, 0, 0)).rational() is None
    golden = CycValue(5, (0, 1, 0, 0, 1))  # z5 + z5^4, irrational
    assert golden.rational() is None


def test_reduce_to_power_basis_matches_slow_path():
    # large coefficients force the arbitrary-precision fallback
    big = 2 ** 70
    coeffs = [big, -big, 0, big, 0, 0]
    fast_sized = [1, -1, 0, 1, 0, 0]
    scaled = reduce_to_power_basis(coeffs, 6)
    small = reduce_to_power_basis(fast_sized, 6)
    assert scaled == tuple(big * x for x in small)


def test_scale_and_str():
    v = CycValue(3, (1, 2, 0))
    assert v.scale(2).coeffs == (2, 4, 0)
    assert "z3" in str(v)
    assert str(CycValue(4, (0,) * 4)) == "0"
