import pytest

from friezemod.matrix import continuant
from friezemod.monomial import (
    monomial_size_table,
    check_divisor_monomial,
    check_prime_sizes,
    check_symmetry_k_negk,
    half_modulus_analysis,
    minimal_monomial_size,
    monomial_record,
    prime_power_reduction,
    prime_power_reduction_for,
)
from friezemod.solutions import CTuple, constant, find_reduction, is_solution, validate_witness
from oracle import naive_order_size


@pytest.mark.parametrize("n,k,size", [(11, 3, 5), (7, 3, 4), (6, 3, 6), (47, 3, 8), (13, 5, 7), (23, 5, 4), (41, 17, 4)])
def test_sizes(n, k, size):
    assert minimal_monomial_size(n, k).size == size


def test_sizes_against_oracle():
    for n in range(2, 26):
        assert minimal_monomial_size(n, 0).size == 2
        for k in range(n):
            rec = minimal_monomial_size(n, k)
            assert rec.size == naive_order_size(n, k, (k,))
            assert rec.size <= 3 * n


def test_prime_sizes_and_symmetry():
    assert [minimal_monomial_size(11, k).size for k in range(11)] == [2, 3, 11, 5, 5, 6, 6, 5, 5, 11, 3]
    assert check_prime_sizes(11) and check_prime_sizes(47)
    assert minimal_monomial_size(11, 8).size == 5
    assert minimal_monomial_size(17, 6).size == minimal_monomial_size(17, 11).size == 4
    for n in range(2, 40):
        assert check_symmetry_k_negk(n)
    with pytest.raises(ValueError):
        check_prime_sizes(15)


def test_half_modulus():
    assert half_modulus_analysis(12).size == 4
    rec = half_modulus_analysis(10)
    assert rec.size == 6 and rec.irreducible
    assert half_modulus_analysis(4).solution.entries == (2, 2, 2, 2)
    for bad in (2, 7):
        with pytest.raises(ValueError):
            half_modulus_analysis(bad)


def test_divisor_monomial():
    assert check_divisor_monomial(12, 2)
    assert check_divisor_monomial(18, 3)
    assert check_divisor_monomial(8, 2)
    assert minimal_monomial_size(18, 6).size == 6
    with pytest.raises(ValueError):
        check_divisor_monomial(12, 3)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_divisor_continuant(p):
    for n in range(p * p, 600, p * p):
        assert continuant(n, [n // p] * (p - 1)).rep == (-1) ** ((p - 1) // 2) % n


def test_prime_power_examples():
    w = prime_power_reduction(3, 3)
    assert len(w.original) == 18 and len(w.right) == 8 and len(w.left) == 12
    assert is_solution(w.right) and is_solution(w.left)
    w = prime_power_reduction(3, 2)
    assert w.right.entries == (6, 3, 3, 6) and w.left.entries == (6, 3, 3, 6)
    assert validate_witness(w)
    assert prime_power_reduction(2, 3) is None
    assert find_reduction(constant(8, 2, 8)) is None
    with pytest.raises(ValueError):
        prime_power_reduction_for(12, 2)


def test_prime_power_witnesses_validate():
    count = 0
    for l in (3, 4, 5):
        e = 2
        while l**e <= 3000:
            w = prime_power_reduction(l, e)
            assert validate_witness(w), (l, e)
            count += 1
            e += 1
    assert count == 6 + 4 + 3  # 3^2..3^7, 4^2..4^5, 5^2..5^4


def test_nine_part_as_written():
    # the size-4 part (-N/l, N/l, N/l, -N/l) for N = 9, l = 3, placed as the right operand
    w = prime_power_reduction(3, 2)
    assert w.transform.apply(w.original) == constant(9, 3, 6)
    assert is_solution(CTuple(9, (-3, 3, 3, -3)))


def test_verdicts_agree_with_brute_force():
    for n in range(2, 31):
        for k in range(n):
            rec = monomial_record(n, k)
            v = rec.verdict
            assert v.decided
            if rec.size < 3:
                assert v.status == "trivial"
                continue
            w = find_reduction(rec.solution)
            assert v.status == ("irreducible" if w is None else "reducible"), (n, k, v)
            if v.witness is not None:
                assert validate_witness(v.witness)


def test_size_table_layout():
    rows = monomial_size_table([11, 13])
    assert [k for k, _ in rows] == list(range(7))
    assert rows[6][1] == {11: 6, 13: 7}
    assert len(monomial_size_table([11, 13], all_k=True)) == 13
    assert monomial_size_table([11, 13], all_k=True)[12][1][11] is None
    with pytest.raises(ValueError):
        monomial_size_table([11, 15])
