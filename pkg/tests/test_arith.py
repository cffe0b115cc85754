"""Number-theory layer: factorization, totient, orders, gcd chains."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from powergraph.arith import (
    Sequence,
    divisors,
    euler_phi,
    factorize,
    iterated_gcd,
    mult_order,
    nu_omega_split,
    sequence_product,
    sequence_product_all,
    two_adic_valuation,
)

_FAST = settings(max_examples=300, deadline=None, derandomize=True)


def test_factorize_basics():
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(97) == {97: 1}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}


def test_factorize_rejects_nonpositive():
    with pytest.raises(ValueError):
        factorize(0)
    with pytest.raises(ValueError):
        factorize(-6)
    with pytest.raises(ValueError):
        factorize(True)


@_FAST
@given(st.integers(1, 5000))
def test_factorize_reconstructs(n):
    prod = 1
    for p, e in factorize(n).items():
        prod *= p**e
    assert prod == n


def test_euler_phi_small_values():
    assert [euler_phi(n) for n in range(1, 13)] == [
        1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4,
    ]
    assert euler_phi(91) == 72


@_FAST
@given(st.integers(1, 300), st.integers(1, 300))
def test_euler_phi_multiplicative(a, b):
    if math.gcd(a, b) == 1:
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(97) == [1, 97]


@_FAST
@given(st.integers(1, 2000))
def test_divisors_sorted_and_complete(n):
    ds = divisors(n)
    assert ds == sorted(ds)
    assert all(n % d == 0 for d in ds)
    assert len(ds) == sum(1 for d in range(1, n + 1) if n % d == 0)


def test_mult_order_golden():
    # powers of 2 mod 5 cycle through 2, 4, 3, 1
    assert mult_order(2, 5) == 4
    assert mult_order(3, 7) == 6
    assert mult_order(10, 1) == 1
    assert mult_order(1, 12) == 1


def test_mult_order_needs_unit():
    with pytest.raises(ValueError):
        mult_order(2, 4)


@_FAST
@given(st.integers(1, 200), st.integers(2, 200))
def test_mult_order_is_the_least_exponent(t, n):
    if math.gcd(t, n) != 1:
        return
    m = mult_order(t, n)
    assert pow(t, m, n) == 1
    assert all(pow(t, j, n) != 1 for j in range(1, m))
    assert euler_phi(n) % m == 0


def test_nu_omega_split_golden():
    assert nu_omega_split(24, 10) == (8, 3)
    assert nu_omega_split(91, 14) == (7, 13)
    assert nu_omega_split(7, 3) == (1, 7)
    assert nu_omega_split(13, 1) == (1, 13)


@_FAST
@given(st.integers(1, 3000), st.integers(1, 60))
def test_nu_omega_split_properties(n, t):
    nu, omega = nu_omega_split(n, t)
    assert nu * omega == n
    assert math.gcd(omega, t) == 1
    # nu collects exactly the primes shared with t
    assert all(t % p == 0 for p in factorize(nu))


class TestSequence:
    def test_strips_trailing_ones(self):
        assert Sequence((4, 2, 1, 1)).terms == (4, 2)
        assert Sequence((1, 1, 1)).terms == (1,)
        assert Sequence((1,)).terms == (1,)

    def test_rejects_bad_terms(self):
        with pytest.raises(ValueError):
            Sequence(())
        with pytest.raises(ValueError):
            Sequence((2, 3))
        with pytest.raises(ValueError):
            Sequence((2, 0))

    def test_equality_modulo_padding(self):
        assert Sequence((2, 2)) == Sequence((2, 2, 1))
        assert Sequence((2,)) == (2, 1, 1)
        assert hash(Sequence((3, 1))) == hash(Sequence((3,)))
        assert Sequence((2,)) != Sequence((3,))

    def test_immutable(self):
        s = Sequence((2,))
        with pytest.raises(AttributeError):
            s.terms = (3,)

    def test_product_depth_trivial(self):
        assert Sequence((4, 2)).product == 8
        assert Sequence((4, 2)).depth == 2
        assert Sequence((1,)).product == 1
        assert Sequence((1,)).depth == 0
        assert Sequence((1,)).is_trivial()
        assert not Sequence((2,)).is_trivial()

    def test_sequence_interface(self):
        s = Sequence((4, 2))
        assert list(s) == [4, 2]
        assert len(s) == 2
        assert s[0] == 4


def test_iterated_gcd_golden():
    assert iterated_gcd(24, 10) == Sequence((2, 2, 2))
    assert iterated_gcd(91, 14) == Sequence((7,))
    assert iterated_gcd(8, 2) == Sequence((2, 2, 2))
    assert iterated_gcd(12, 4) == Sequence((4,))
    assert iterated_gcd(35, 6) == Sequence((1,))


@_FAST
@given(st.integers(1, 3000), st.integers(1, 60))
def test_iterated_gcd_product_is_nu_part(n, t):
    seq = iterated_gcd(n, t)
    assert seq.product == nu_omega_split(n, t)[0]
    # successive terms divide their predecessor
    assert all(a % b == 0 for a, b in zip(seq.terms, seq.terms[1:]))
    assert all(t % p == 0 for p in factorize(seq.product))


def test_sequence_product_golden():
    assert sequence_product(Sequence((2,)), Sequence((2, 2))) == Sequence((4, 2))
    assert sequence_product(Sequence((1,)), Sequence((5, 5))) == Sequence((5, 5))
    assert sequence_product_all([]) == Sequence((1,))
    assert sequence_product_all(
        [Sequence((2, 2)), Sequence((3,)), Sequence((2,))]
    ) == Sequence((12, 2))


@st.composite
def _sequences(draw):
    length = draw(st.integers(1, 5))
    terms = []
    bound = draw(st.integers(1, 12))
    for _ in range(length):
        bound = draw(st.integers(1, bound))
        terms.append(bound)
    return Sequence(terms)


@_FAST
@given(_sequences(), _sequences())
def test_sequence_product_commutes(u, v):
    assert sequence_product(u, v) == sequence_product(v, u)
    assert sequence_product(u, v).product == u.product * v.product


@_FAST
@given(_sequences(), _sequences(), _sequences())
def test_sequence_product_associates(u, v, w):
    assert sequence_product(sequence_product(u, v), w) == sequence_product(
        u, sequence_product(v, w)
    )


def test_two_adic_valuation():
    assert two_adic_valuation(12) == 2
    assert two_adic_valuation(7) == 0
    assert two_adic_valuation(1024) == 10
    with pytest.raises(ValueError):
        two_adic_valuation(0)
