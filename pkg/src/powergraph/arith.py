"""Number-theoretic helpers for power maps on finite groups.

Everything here works on plain Python ints (arbitrary precision, so no
overflow concerns).  The exponent t of a power map is always >= 1; t = 0
is rejected everywhere.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator


def _check_positive(value: int, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{name} must be an int, got {value!r}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return value


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent} (trial division)."""
    _check_positive(n, "n")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def euler_phi(n: int) -> int:
    """Euler's totient: the number of 1 <= a <= n with gcd(a, n) = 1."""
    _check_positive(n, "n")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    _check_positive(n, "n")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mult_order(t: int, n: int) -> int:
    """Multiplicative order of t modulo n; requires gcd(t, n) = 1.

    The order is found by testing divisors of euler_phi(n) ascending, so
    the cost stays proportional to the divisor count rather than phi(n).
    """
    _check_positive(t, "t")
    _check_positive(n, "n")
    if n == 1:
        return 1
    if math.gcd(t, n) != 1:
        raise ValueError(f"t = {t} is not a unit modulo n = {n}")
    for d in divisors(euler_phi(n)):
        if pow(t, d, n) == 1:
            return d
    raise AssertionError("unreachable: order divides euler_phi(n)")


def nu_omega_split(n: int, t: int) -> tuple[int, int]:
    """Split n = nu * omega with omega the largest divisor coprime to t.

    nu collects every prime factor of n that also divides t; omega is what
    remains.  For t = 1 this gives (1, n).
    """
    _check_positive(n, "n")
    _check_positive(t, "t")
    omega = n
    g = math.gcd(omega, t)
    while g > 1:
        omega //= g
        g = math.gcd(omega, t)
    return n // omega, omega


class Sequence:
    """A non-increasing sequence of positive ints, modulo trailing 1s.

    Two sequences that differ only in trailing 1s are considered equal;
    canonical storage strips them, except the all-ones sequence which is
    kept as (1).  Instances are immutable and hashable.
    """

    __slots__ = ("terms",)

    terms: tuple[int, ...]

    def __init__(self, terms: Iterable[int]):
        terms = tuple(terms)
        if not terms:
            raise ValueError("Sequence needs at least one term")
        for x in terms:
            _check_positive(x, "sequence term")
        for a, b in zip(terms, terms[1:]):
            if a < b:
                raise ValueError(f"sequence is not non-increasing: {terms}")
        end = len(terms)
        while end > 1 and terms[end - 1] == 1:
            end -= 1
        canonical = terms[:end]
        if canonical == (1,) or canonical[-1] != 1:
            object.__setattr__(self, "terms", canonical)
        else:
            # only possible for terms == (1, 1, ...) handled above
            object.__setattr__(self, "terms", (1,))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Sequence is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i: int) -> int:
        return self.terms[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Sequence):
            return self.terms == other.terms
        if isinstance(other, tuple):
            return self == Sequence(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("powergraph.Sequence", self.terms))

    def __repr__(self) -> str:
        return f"Sequence{self.terms}"

    @property
    def product(self) -> int:
        result = 1
        for x in self.terms:
            result *= x
        return result

    @property
    def depth(self) -> int:
        """Length after stripping trailing 1s; 0 for the trivial sequence."""
        return 0 if self.terms == (1,) else len(self.terms)

    def is_trivial(self) -> bool:
        return self.terms == (1,)


def iterated_gcd(n: int, t: int) -> Sequence:
    """The gcd chain of n by t: nu_1 = gcd(t, n), nu_{i+1} = gcd(t, n / prod).

    Stops when the next term would be 1.  Returns Sequence((1,)) when
    gcd(t, n) = 1.  The product of the terms is the nu-part of n from
    nu_omega_split(n, t), and each term divides the previous one.
    """
    _check_positive(n, "n")
    _check_positive(t, "t")
    g = math.gcd(t, n)
    if g == 1:
        return Sequence((1,))
    terms = []
    remaining = n
    while g > 1:
        terms.append(g)
        remaining //= g
        g = math.gcd(t, remaining)
    return Sequence(terms)


def sequence_product(u: Sequence, v: Sequence) -> Sequence:
    """Coordinatewise product after padding the shorter sequence with 1s.

    Raises ValueError if the result fails the non-increasing invariant
    (it cannot, for valid inputs: a coordinatewise product of positive
    non-increasing sequences is non-increasing, but the construction
    revalidates rather than trusting the caller).
    """
    a, b = u.terms, v.terms
    if len(a) < len(b):
        a, b = b, a
    b = b + (1,) * (len(a) - len(b))
    return Sequence(x * y for x, y in zip(a, b))


def sequence_product_all(seqs: Iterable[Sequence]) -> Sequence:
    """Fold of sequence_product; empty input gives the trivial sequence."""
    result = Sequence((1,))
    for s in seqs:
        result = sequence_product(result, s)
    return result


def two_adic_valuation(n: int) -> int:
    """Largest e with 2^e dividing n."""
    _check_positive(n, "n")
    return (n & -n).bit_length() - 1
