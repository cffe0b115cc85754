"""Finite groups as index sets with a multiplication law.

A group of order n has elements 0, ..., n-1 with mul(a, b) -> int and a
distinguished identity index.  Vectorized multiplication on index arrays
(mul_array) lets the oracle build successor tables by square-and-multiply
without materializing n x n Cayley tables.

Families: cyclic, direct products of cyclics, unit groups mod n, dihedral,
generalized quaternion, split metacyclic extensions C_n x| C_m, and
PGL(2, q) over prime fields and a fixed list of small prime-power fields.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence as TSequence

import numpy as np

from .arith import _check_positive, factorize


class FiniteGroup:
    """Base interface: order, identity, mul; everything else has defaults."""

    name: str = "group"
    order: int = 1
    identity: int = 0
    #: cyclic factor orders when the group is known abelian, else None
    abelian_orders: tuple[int, ...] | None = None

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def label(self, a: int) -> str:
        return str(a)

    def elements(self) -> range:
        return range(self.order)

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise mul on index arrays; families override with numpy."""
        mul = self.mul
        return np.fromiter(
            map(mul, a.tolist(), b.tolist()), dtype=np.int64, count=len(a)
        )

    def check_element(self, a: int) -> int:
        if not 0 <= a < self.order:
            raise ValueError(f"element index {a} out of range for {self.name}")
        return a

    def __repr__(self) -> str:
        return f"<{self.name} order={self.order}>"


def power(g_obj: FiniteGroup, g: int, t: int) -> int:
    """g^t by square-and-multiply on group elements; t >= 1 required."""
    _check_positive(t, "t")
    g_obj.check_element(g)
    acc = g_obj.identity
    base = g
    while t:
        if t & 1:
            acc = g_obj.mul(acc, base)
        t >>= 1
        if t:
            base = g_obj.mul(base, base)
    return acc


def element_order(g_obj: FiniteGroup, g: int) -> int:
    """Order of g in the group (iterated multiplication, no shortcuts)."""
    g_obj.check_element(g)
    e = g_obj.identity
    h = g
    n = 1
    while h != e:
        h = g_obj.mul(h, g)
        n += 1
        if n > g_obj.order:
            raise AssertionError(f"mul is not a group law on {g_obj.name}")
    return n


# ---------------------------------------------------------------------------
# abelian families


class CyclicGroup(FiniteGroup):
    """C_n, written additively on residues 0..n-1."""

    def __init__(self, n: int):
        _check_positive(n, "n")
        self.n = n
        self.order = n
        self.name = f"cyclic:{n}"
        self.abelian_orders = (n,)

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.n


class AbelianGroup(FiniteGroup):
    """C_{r_1} x ... x C_{r_k} on mixed-radix encoded tuples."""

    def __init__(self, orders: Iterable[int]):
        rs = tuple(orders)
        if not rs:
            raise ValueError("need at least one cyclic factor")
        for r in rs:
            _check_positive(r, "factor order")
        self.factor_orders = rs
        self.order = math.prod(rs)
        strides = []
        acc = self.order
        for r in rs:
            acc //= r
            strides.append(acc)
        self.strides = tuple(strides)
        self.name = "abelian:" + "x".join(str(r) for r in rs)
        self.abelian_orders = rs
        self._coords: list[np.ndarray] | None = None

    def encode(self, coords: TSequence[int]) -> int:
        return sum(c * s for c, s in zip(coords, self.strides))

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for r, s in zip(self.factor_orders, self.strides):
            out.append((a // s) % r)
        return tuple(out)

    def mul(self, a: int, b: int) -> int:
        total = 0
        for r, s in zip(self.factor_orders, self.strides):
            total += (((a // s) + (b // s)) % r) * s
        return total

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self._coords is None:
            idx = np.arange(self.order, dtype=np.int64)
            self._coords = [
                (idx // s) % r for r, s in zip(self.factor_orders, self.strides)
            ]
        out = np.zeros(len(a), dtype=np.int64)
        for coord, r, s in zip(self._coords, self.factor_orders, self.strides):
            out += ((coord[a] + coord[b]) % r) * s
        return out

    def label(self, a: int) -> str:
        return "(" + ",".join(str(c) for c in self.decode(a)) + ")"


class UnitsGroup(FiniteGroup):
    """The multiplicative group of residues coprime to n, for n >= 2."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"units group needs modulus >= 2, got {n}")
        self.n = n
        units = [a for a in range(1, n) if math.gcd(a, n) == 1]
        self.units = np.asarray(units, dtype=np.int64)
        pos = np.full(n, -1, dtype=np.int64)
        pos[self.units] = np.arange(len(units), dtype=np.int64)
        self._pos = pos
        self.order = len(units)
        self.name = f"units:{n}"
        self.abelian_orders = self._cyclic_factors(n)
        assert math.prod(self.abelian_orders) == self.order

    @staticmethod
    def _cyclic_factors(n: int) -> tuple[int, ...]:
        # classical decomposition of (Z/n)* per prime-power factor of n
        factors: list[int] = []
        for p, k in sorted(factorize(n).items()):
            if p == 2:
                if k == 2:
                    factors.append(2)
                elif k >= 3:
                    factors.extend([2, 2 ** (k - 2)])
            else:
                factors.append(p ** (k - 1) * (p - 1))
        return tuple(factors) if factors else (1,)

    def mul(self, a: int, b: int) -> int:
        return int(self._pos[int(self.units[a]) * int(self.units[b]) % self.n])

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._pos[self.units[a] * self.units[b] % self.n]

    def label(self, a: int) -> str:
        return str(int(self.units[a]))


# ---------------------------------------------------------------------------
# metacyclic families


class SemidirectGroup(FiniteGroup):
    """C_n x| C_m with presentation <a, b | b^n = a^m = 1, a b a^-1 = b^s>.

    Elements are normal forms b^i a^j encoded as i*m + j.  Requires
    s^m = 1 (mod n) so that conjugation by a is an automorphism.
    """

    def __init__(self, n: int, m: int, s: int):
        _check_positive(n, "n")
        _check_positive(m, "m")
        if s < 0:
            raise ValueError(f"s must be >= 0, got {s}")
        if pow(s, m, n) != 1 % n:
            raise ValueError(
                f"s^m = 1 (mod n) fails for n={n}, m={m}, s={s}: the twist is "
                "not an automorphism of order dividing m"
            )
        self.n = n
        self.m = m
        self.s = s % n
        self.order = n * m
        self.name = f"semidirect:n={n},m={m},s={s}"
        spow = [1 % n]
        for _ in range(m - 1):
            spow.append(spow[-1] * self.s % n)
        self.spow = np.asarray(spow, dtype=np.int64)

    def mul(self, a: int, b: int) -> int:
        m = self.m
        i1, j1 = divmod(a, m)
        i2, j2 = divmod(b, m)
        i = (i1 + i2 * int(self.spow[j1])) % self.n
        return i * m + (j1 + j2) % m

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        m = self.m
        i1, j1 = a // m, a % m
        i2, j2 = b // m, b % m
        i = (i1 + i2 * self.spow[j1]) % self.n
        return i * m + (j1 + j2) % m

    def label(self, a: int) -> str:
        i, j = divmod(a, self.m)
        parts = []
        if i:
            parts.append("b" if i == 1 else f"b^{i}")
        if j:
            parts.append("a" if j == 1 else f"a^{j}")
        return "*".join(parts) if parts else "1"

    @staticmethod
    def flower_condition(n: int, m: int, s: int) -> bool:
        """True iff the family's flower criterion holds for (n, m, s).

        The geometric sums 1 + s + ... + s^(j-1) must vanish mod n for
        j = m and be coprime to n for 1 <= j < m.  Requires n, m, s > 1.
        """
        if n <= 1 or m <= 1 or s <= 1:
            return False
        acc = 0
        for j in range(1, m + 1):
            acc = (acc * s + 1) % n  # 1 + s + ... + s^(j-1), built Horner-style
            if j < m:
                if math.gcd(acc, n) != 1:
                    return False
            elif acc % n != 0:
                return False
        return True


class DihedralGroup(SemidirectGroup):
    """D_2n of order 2n: rotations b and a reflection a."""

    def __init__(self, n: int):
        _check_positive(n, "n")
        super().__init__(n, 2, (n - 1) % n)
        self.name = f"dihedral:{2 * n}"

    def label(self, a: int) -> str:
        i, j = divmod(a, 2)
        parts = []
        if i:
            parts.append("r" if i == 1 else f"r^{i}")
        if j:
            parts.append("s")
        return "*".join(parts) if parts else "1"


class QuaternionGroup(FiniteGroup):
    """Generalized quaternion Q_4n = <a, b | a^2n = 1, a^n = b^2, bab^-1 = a^-1>.

    Elements are normal forms a^i b^j with 0 <= i < 2n, j in {0, 1},
    encoded as j*2n + i.  Requires n >= 2.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"generalized quaternion needs n >= 2, got {n}")
        self.n = n
        self.order = 4 * n
        self.name = f"quaternion:{4 * n}"

    def mul(self, a: int, b: int) -> int:
        n2 = 2 * self.n
        j1, i1 = divmod(a, n2)
        j2, i2 = divmod(b, n2)
        if j1 == 0:
            return j2 * n2 + (i1 + i2) % n2
        if j2 == 0:
            return n2 + (i1 - i2) % n2
        return (i1 - i2 + self.n) % n2

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        n2 = 2 * self.n
        j1, i1 = a // n2, a % n2
        j2, i2 = b // n2, b % n2
        plus = (i1 + i2) % n2
        minus = (i1 - i2) % n2
        minus_n = (i1 - i2 + self.n) % n2
        i = np.where(j1 == 0, plus, np.where(j2 == 0, minus, minus_n))
        return (j1 ^ j2) * n2 + i

    def label(self, a: int) -> str:
        j, i = divmod(a, 2 * self.n)
        parts = []
        if i:
            parts.append("a" if i == 1 else f"a^{i}")
        if j:
            parts.append("b")
        return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# PGL(2, q)

#: monic irreducible polynomials (coefficients low to high) for the
#: supported prime-power fields
_IRREDUCIBLE: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),  # x^2 + x + 1 over GF(2)
    8: (1, 1, 0, 1),  # x^3 + x + 1 over GF(2)
    9: (1, 0, 1),  # x^2 + 1 over GF(3)
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1 over GF(2)
    25: (2, 0, 1),  # x^2 + 2 over GF(5)
    27: (1, 2, 0, 1),  # x^3 + 2x + 1 over GF(3)
}


def _is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


class _GF:
    """A small finite field with dense add/mul/inv tables.

    Elements are 0..q-1; for prime powers an element encodes the
    coefficient vector of a polynomial in base p (low digit = constant
    term).
    """

    def __init__(self, q: int):
        if _is_prime(q):
            p, s = q, 1
        elif q in _IRREDUCIBLE:
            p = min(factorize(q))
            s = round(math.log(q, p))
        else:
            raise ValueError(
                f"unsupported field order {q}: need a prime or one of "
                f"{sorted(_IRREDUCIBLE)}"
            )
        self.q, self.p, self.s = q, p, s
        if s == 1:
            grid = np.arange(q, dtype=np.int64)
            self.add = (grid[:, None] + grid[None, :]) % q
            self.mul = (grid[:, None] * grid[None, :]) % q
        else:
            irr = _IRREDUCIBLE[q]
            add = np.zeros((q, q), dtype=np.int64)
            mul = np.zeros((q, q), dtype=np.int64)
            digits = [self._digits(x) for x in range(q)]
            for x in range(q):
                for y in range(q):
                    add[x, y] = self._encode(
                        [(dx + dy) % p for dx, dy in zip(digits[x], digits[y])]
                    )
                    mul[x, y] = self._encode(
                        self._poly_mul(digits[x], digits[y], p, irr)
                    )
            self.add, self.mul = add, mul
        inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            for y in range(1, q):
                if self.mul[x, y] == 1:
                    inv[x] = y
                    break
            else:
                raise AssertionError(f"no inverse for {x}: field tables broken")
        self.inv = inv

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.s):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def _encode(self, digits: TSequence[int]) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d
        return out

    @staticmethod
    def _poly_mul(
        a: TSequence[int], b: TSequence[int], p: int, irr: TSequence[int]
    ) -> list[int]:
        s = len(a)
        c = [0] * (2 * s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    c[i + j] = (c[i + j] + ai * bj) % p
        # reduce with x^s = -(irr[0] + irr[1] x + ... + irr[s-1] x^(s-1))
        for i in range(2 * s - 2, s - 1, -1):
            coef = c[i]
            if coef:
                c[i] = 0
                for k in range(s):
                    c[i - s + k] = (c[i - s + k] - coef * irr[k]) % p
        return c[:s]



class PGLGroup(FiniteGroup):
    """PGL(2, q): invertible 2x2 matrices over GF(q) modulo scalars.

    The canonical representative of a class scales the first nonzero
    entry (row-major) to 1.  Elements are indices into the list of
    representatives in lexicographic (a, b, c, d) order.
    """

    def __init__(self, q: int):
        field = _GF(q)
        self.q = q
        self.field = field
        mats = []
        # first nonzero entry 1 means either a = 1, or a = 0 and b = 1
        # (a = b = 0 forces det = 0)
        for c in range(1, q):
            for d in range(q):
                mats.append((0, 1, c, d))
        mul = field.mul
        for b in range(q):
            for c in range(q):
                bc = int(mul[b, c])
                for d in range(q):
                    if d != bc:  # det = d - b*c must not vanish
                        mats.append((1, b, c, d))
        mats.sort()
        self.order = len(mats)
        assert self.order == q**3 - q
        arr = np.asarray(mats, dtype=np.int64)
        self._a, self._b, self._c, self._d = (arr[:, k] for k in range(4))
        self._mats = mats
        lookup = np.full(q**4, -1, dtype=np.int64)
        keys = ((arr[:, 0] * q + arr[:, 1]) * q + arr[:, 2]) * q + arr[:, 3]
        lookup[keys] = np.arange(self.order, dtype=np.int64)
        self._lookup = lookup
        self._add = [[int(v) for v in row] for row in field.add]
        self._mul = [[int(v) for v in row] for row in field.mul]
        self._inv = [int(v) for v in field.inv]
        self.identity = int(lookup[(1 * q + 0) * q * q + 0 * q + 1])
        self.name = f"pgl2:{q}"

    def mul(self, x: int, y: int) -> int:
        add, mul, q = self._add, self._mul, self.q
        a1, b1, c1, d1 = self._mats[x]
        a2, b2, c2, d2 = self._mats[y]
        a = add[mul[a1][a2]][mul[b1][c2]]
        b = add[mul[a1][b2]][mul[b1][d2]]
        c = add[mul[c1][a2]][mul[d1][c2]]
        d = add[mul[c1][b2]][mul[d1][d2]]
        lead = a or b or c or d
        t = self._inv[lead]
        a, b, c, d = mul[a][t], mul[b][t], mul[c][t], mul[d][t]
        return int(self._lookup[((a * q + b) * q + c) * q + d])

    def mul_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        F = self.field
        q = self.q
        a1, b1, c1, d1 = self._a[x], self._b[x], self._c[x], self._d[x]
        a2, b2, c2, d2 = self._a[y], self._b[y], self._c[y], self._d[y]
        a = F.add[F.mul[a1, a2], F.mul[b1, c2]]
        b = F.add[F.mul[a1, b2], F.mul[b1, d2]]
        c = F.add[F.mul[c1, a2], F.mul[d1, c2]]
        d = F.add[F.mul[c1, b2], F.mul[d1, d2]]
        lead = np.where(a != 0, a, np.where(b != 0, b, np.where(c != 0, c, d)))
        t = F.inv[lead]
        a, b, c, d = F.mul[a, t], F.mul[b, t], F.mul[c, t], F.mul[d, t]
        return self._lookup[((a * q + b) * q + c) * q + d]

    def matrix(self, x: int) -> tuple[int, int, int, int]:
        return (
            int(self._a[x]),
            int(self._b[x]),
            int(self._c[x]),
            int(self._d[x]),
        )

    def label(self, x: int) -> str:
        a, b, c, d = self.matrix(x)
        return f"[[{a},{b}],[{c},{d}]]"


# ---------------------------------------------------------------------------
# factories (stable public names)


def make_cyclic(n: int) -> CyclicGroup:
    return CyclicGroup(n)


def make_abelian(orders: Iterable[int]) -> AbelianGroup:
    return AbelianGroup(orders)


def make_units(n: int) -> UnitsGroup:
    return UnitsGroup(n)


def make_dihedral(n: int) -> DihedralGroup:
    """Dihedral group of order 2n."""
    return DihedralGroup(n)


def make_quaternion(n: int) -> QuaternionGroup:
    """Generalized quaternion group of order 4n (n >= 2)."""
    return QuaternionGroup(n)


def make_semidirect(n: int, m: int, s: int) -> SemidirectGroup:
    return SemidirectGroup(n, m, s)


def make_pgl2(q: int) -> PGLGroup:
    return PGLGroup(q)


# ---------------------------------------------------------------------------
# subgroup machinery


def cyclic_subgroup(g_obj: FiniteGroup, g: int) -> frozenset[int]:
    """The subgroup generated by a single element."""
    g_obj.check_element(g)
    e = g_obj.identity
    elems = {e}
    h = g
    while h != e:
        elems.add(h)
        h = g_obj.mul(h, g)
    return frozenset(elems)


def mu_subgroups(g_obj: FiniteGroup) -> list[frozenset[int]]:
    """Maximal cyclic subgroups: all <g>, minus those strictly contained
    in another.  Sorted by (size, sorted elements) for determinism.
    """
    distinct: set[frozenset[int]] = set()
    for g in g_obj.elements():
        distinct.add(cyclic_subgroup(g_obj, g))
    subs = sorted(distinct, key=lambda s: (len(s), sorted(s)))
    maximal = []
    for i, s in enumerate(subs):
        contained = any(
            len(other) > len(s) and s < other for other in subs[i + 1 :]
        )
        if not contained:
            maximal.append(s)
    return maximal


def is_cyclic(g_obj: FiniteGroup) -> bool:
    return any(
        element_order(g_obj, g) == g_obj.order for g in g_obj.elements()
    )


@dataclass(frozen=True)
class FlowerType:
    """The numeric type (c0; c1, ..., ck): pistil order and petal orders.

    Petal orders are kept sorted ascending; every petal order must be a
    multiple of the pistil order.
    """

    pistil: int
    petals: tuple[int, ...]

    def __post_init__(self):
        _check_positive(self.pistil, "pistil order")
        if not self.petals:
            raise ValueError("a flower type needs at least one petal")
        object.__setattr__(self, "petals", tuple(sorted(self.petals)))
        for c in self.petals:
            if c < self.pistil or c % self.pistil != 0:
                raise ValueError(
                    f"petal order {c} is not a multiple of the pistil order "
                    f"{self.pistil}"
                )

    @property
    def size(self) -> int:
        """Number of elements of a group (or pseudo-flower) of this type."""
        k = len(self.petals)
        return sum(self.petals) - (k - 1) * self.pistil

    def __str__(self) -> str:
        groups = []
        for c, cnt in sorted(Counter(self.petals).items()):
            groups.append(f"{c}^{cnt}" if cnt > 1 else str(c))
        return f"({self.pistil}; {', '.join(groups)})"


@dataclass(frozen=True)
class FlowerDecomposition:
    """A verified flower decomposition: the pistil and the actual petals."""

    pistil: frozenset[int]
    petals: tuple[frozenset[int], ...]
    type: FlowerType


def flower_decompose(g_obj: FiniteGroup) -> FlowerDecomposition | None:
    """Decompose a noncyclic group into pistil and petals, if it is one.

    Returns None when the maximal cyclic subgroups do not intersect
    pairwise in a common subgroup.  Cyclic groups are outside the flower
    machinery and raise ValueError.  The result is cached on the group.
    """
    cached = getattr(g_obj, "_flower_cache", False)
    if cached is not False:
        if isinstance(cached, ValueError):
            raise cached
        return cached
    result = _flower_decompose_uncached(g_obj)
    if isinstance(result, ValueError):
        g_obj._flower_cache = result
        raise result
    g_obj._flower_cache = result
    return result


def _flower_decompose_uncached(g_obj):
    mus = mu_subgroups(g_obj)
    if len(mus) == 1:
        return ValueError(
            f"{g_obj.name} is cyclic; flower decomposition targets noncyclic groups"
        )
    pistil = mus[0] & mus[1]
    for i in range(len(mus)):
        for j in range(i + 1, len(mus)):
            if mus[i] & mus[j] != pistil:
                return None
    k = len(mus)
    total = sum(len(s) for s in mus) - (k - 1) * len(pistil)
    assert total == g_obj.order, (
        f"petal counting identity fails on {g_obj.name}: {total} != {g_obj.order}"
    )
    ftype = FlowerType(len(pistil), tuple(len(s) for s in mus))
    petals = tuple(sorted(mus, key=lambda s: (len(s), sorted(s))))
    return FlowerDecomposition(frozenset(pistil), petals, ftype)


def center(g_obj: FiniteGroup) -> frozenset[int]:
    """Elements commuting with everything (one vectorized row per element)."""
    n = g_obj.order
    idx = np.arange(n, dtype=np.int64)
    out = []
    for z in range(n):
        zz = np.full(n, z, dtype=np.int64)
        if np.array_equal(g_obj.mul_array(zz, idx), g_obj.mul_array(idx, zz)):
            out.append(z)
    return frozenset(out)


def generated_subgroup(g_obj: FiniteGroup, gens: Iterable[int]) -> frozenset[int]:
    """Closure of a generating set under multiplication."""
    gens = [g_obj.check_element(g) for g in gens]
    elems = {g_obj.identity}
    frontier = [g_obj.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g_obj.mul(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


class SubsetGroup(FiniteGroup):
    """A subgroup of a parent group, relabeled to dense indices 0..h-1.

    The element set must already be closed under multiplication.
    """

    def __init__(self, parent: FiniteGroup, elements: Iterable[int], name=None):
        elems = sorted(set(elements))
        pos = {g: i for i, g in enumerate(elems)}
        if parent.identity not in pos:
            raise ValueError("subgroup must contain the identity")
        for a in elems:
            for b in elems:
                if parent.mul(a, b) not in pos:
                    raise ValueError("element set is not closed under mul")
        self.parent = parent
        self.parent_elements = elems
        self._pos = pos
        self.order = len(elems)
        self.identity = pos[parent.identity]
        self.name = name or f"subgroup:{parent.name}:{self.order}"

    def mul(self, a: int, b: int) -> int:
        return self._pos[
            self.parent.mul(self.parent_elements[a], self.parent_elements[b])
        ]

    def label(self, a: int) -> str:
        return self.parent.label(self.parent_elements[a])


def compatible_generators(
    g_obj: FiniteGroup, dec: FlowerDecomposition
) -> list[int]:
    """Petal generators g_i with all g_i^(c_i/c_0) equal (one per petal).

    Found by direct search: pick any generator h_i of each petal, solve
    (h_i^(c_i/c_0))^f = g_0 in the pistil by scanning f, then bump f by
    multiples of c_0 until it is coprime to |G|.  Returns the generators
    in dec.petals order.
    """
    c0 = len(dec.pistil)
    gens: list[int] = []
    target = None
    for petal in dec.petals:
        ci = len(petal)
        h = next(g for g in sorted(petal) if element_order(g_obj, g) == ci)
        if target is None:
            gens.append(h)
            target = power(g_obj, h, ci // c0) if ci > c0 else g_obj.identity
            continue
        base = power(g_obj, h, ci // c0) if ci > c0 else g_obj.identity
        f = next(
            f
            for f in range(1, c0 + 1)
            if power(g_obj, base, f) == target
        )
        while math.gcd(f, g_obj.order) != 1:
            f += c0
            if f > g_obj.order * c0:
                raise AssertionError("no coprime exponent found in the scan range")
        gens.append(power(g_obj, h, f) if f > 1 else h)
    return gens


# ---------------------------------------------------------------------------
# the group spec mini-language


class GroupSpecError(ValueError):
    """Parse error for a group spec string, with the offending position."""

    def __init__(self, spec: str, position: int, message: str):
        self.spec = spec
        self.position = position
        super().__init__(f"bad group spec {spec!r} at position {position}: {message}")


def _parse_int(spec: str, text: str, offset: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise GroupSpecError(spec, offset, f"expected an integer, got {text!r}")


def parse_group(spec: str) -> FiniteGroup:
    """Build a group from a spec string.

    Forms: cyclic:12, abelian:6x12, units:91, dihedral:12 (order 12),
    quaternion:24 (order 24), semidirect:n=65,m=4,s=8, pgl2:5.
    """
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise GroupSpecError(spec, len(spec), "missing ':' after the family name")
    offset = len(kind) + 1
    try:
        if kind == "cyclic":
            return CyclicGroup(_parse_int(spec, rest, offset))
        if kind == "abelian":
            orders = []
            pos = offset
            for part in rest.split("x"):
                orders.append(_parse_int(spec, part, pos))
                pos += len(part) + 1
            return AbelianGroup(orders)
        if kind == "units":
            return UnitsGroup(_parse_int(spec, rest, offset))
        if kind == "dihedral":
            order = _parse_int(spec, rest, offset)
            if order < 2 or order % 2:
                raise GroupSpecError(
                    spec, offset, f"dihedral order must be even and >= 2, got {order}"
                )
            return DihedralGroup(order // 2)
        if kind == "quaternion":
            order = _parse_int(spec, rest, offset)
            if order < 8 or order % 4:
                raise GroupSpecError(
                    spec,
                    offset,
                    f"quaternion order must be a multiple of 4 and >= 8, got {order}",
                )
            return QuaternionGroup(order // 4)
        if kind == "semidirect":
            params = {}
            pos = offset
            for part in rest.split(","):
                key, eq, val = part.partition("=")
                if not eq or key not in ("n", "m", "s"):
                    raise GroupSpecError(
                        spec, pos, f"expected n=/m=/s= assignment, got {part!r}"
                    )
                params[key] = _parse_int(spec, val, pos + len(key) + 1)
                pos += len(part) + 1
            missing = {"n", "m", "s"} - set(params)
            if missing:
                raise GroupSpecError(
                    spec, len(spec), f"missing parameters: {sorted(missing)}"
                )
            return SemidirectGroup(params["n"], params["m"], params["s"])
        if kind == "pgl2":
            return PGLGroup(_parse_int(spec, rest, offset))
    except GroupSpecError:
        raise
    except ValueError as exc:
        raise GroupSpecError(spec, offset, str(exc)) from exc
    raise GroupSpecError(spec, 0, f"unknown family {kind!r}")
