import pytest
from hypothesis import given, strategies as st

from passant.gfq import GF, binary_splitting_field, shifted_square_counts

QS = [3, 5, 7, 9, 11, 13, 25, 27]


def test_modulus_is_lexicographically_least():
    # ascending coefficient tuples, leading coefficient dropped
    assert GF(9).modulus == (1, 0, 1)
    assert GF(25).modulus == (2, 0, 1)
    assert GF(27).modulus == (1, 2, 0, 1)
    assert GF(5).modulus == (0, 1)


def test_least_primitive_roots():
    assert [GF(q).xi for q in (3, 5, 7, 9, 11, 13)] == [2, 2, 3, 4, 2, 2]


def test_rejects_non_prime_powers():
    for bad in (1, 6, 12, 15):
        with pytest.raises(ValueError):
            GF(bad)


@given(st.sampled_from(QS), st.data())
def test_field_axioms(q, data):
    F = GF(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    c = data.draw(st.integers(0, q - 1))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    if a:
        assert F.mul(a, F.inv(a)) == 1


@given(st.sampled_from(QS), st.data())
def test_frobenius_is_additive(q, data):
    F = GF(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(0, q - 1))
    frob = lambda x: F.pow_(x, F.p)
    assert frob(F.add(a, b)) == F.add(frob(a), frob(b))


@given(st.sampled_from(QS), st.data())
def test_square_classes_multiply(q, data):
    F = GF(q)
    a = data.draw(st.integers(1, q - 1))
    b = data.draw(st.integers(1, q - 1))
    assert F.is_square(F.mul(a, b)) == (F.is_square(a) == F.is_square(b))


def test_squares_split_units_in_half():
    for q in QS:
        F = GF(q)
        assert len(F.squares) == len(F.nonsquares) == (q - 1) // 2
        assert F.is_square(1)
        with pytest.raises(ValueError):
            F.is_square(0)


@given(st.sampled_from(QS), st.data())
def test_coeff_round_trip(q, data):
    F = GF(q)
    a = data.draw(st.integers(0, q - 1))
    assert F.from_coeffs(F.coeffs(a)) == a


def test_exp_log_inverse():
    for q in QS:
        F = GF(q)
        for a in F.units():
            assert F.exp[F.log[a]] == a


def test_binary_splitting_field_orders():
    sizes = {3: 2, 5: 4, 7: 4, 9: 16, 11: 16, 13: 64, 17: 64, 19: 4096}
    for q, size in sizes.items():
        K = binary_splitting_field(q)
        assert K.q == size
        # the odd parts of q-1 and q+1 must divide the unit group order
        for m in (q - 1, q + 1):
            while m % 2 == 0:
                m //= 2
            assert (size - 1) % m == 0


def test_shifted_square_counts():
    # pairs (class of x, class of x+1) over nonzero x with x+1 nonzero
    got = shifted_square_counts(GF(9))
    assert got == {("sq", "sq"): 1, ("sq", "non"): 2, ("non", "sq"): 2, ("non", "non"): 2}
    for q in (5, 7, 11, 13):
        total = sum(shifted_square_counts(GF(q)).values())
        assert total == q - 2
