"""Partitions, parking functions, Raney sequences and the closed-form counts."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts if p)
        if any(p < 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"{self.parts} is not a partition")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def from_composition(cls, comp: Sequence[int]) -> "Partition":
        return cls(tuple(sorted((c for c in comp if c), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i] if i < len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def dominates(self, other: "Partition") -> bool:
        """Dominance order self >= other (same size assumed)."""
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i]
            b += other[i]
            if a < b:
                return False
        return True

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    for parts in gen(n, n if max_part is None else max_part):
        yield Partition(parts)


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into ``parts`` parts, lexicographically descending."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def multinomial(comp: Sequence[int]) -> int:
    return factorial(sum(comp)) // prod(factorial(c) for c in comp)


# -- parking functions and A_n ----------------------------------------------

def is_parking_function(f: Sequence[int]) -> bool:
    n = len(f)
    return all(sum(1 for v in f if v <= k) >= k for k in range(1, n + 1)) and \
        all(1 <= v <= n for v in f)


def enumerate_parking_functions(n: int) -> list[tuple[int, ...]]:
    """All parking functions {1..n} -> {1..n}, lexicographic."""
    if n < 1:
        raise ValueError("n >= 1 required")
    return [f for f in itertools.product(range(1, n + 1), repeat=n) if is_parking_function(f)]


def is_a_sequence(a: Sequence[int]) -> bool:
    n = len(a)
    if any(x < 0 for x in a) or sum(a) != n:
        return False
    s = 0
    for k, x in enumerate(a, 1):
        s += x
        if s < k:
            return False
    return True


def enumerate_A(n: int) -> list[tuple[int, ...]]:
    """Sequences a_i >= 0 with sum n and a_1 + ... + a_k >= k, lexicographically descending."""
    if n < 1:
        raise ValueError("n >= 1 required")
    out = []

    def gen(prefix, total):
        k = len(prefix)
        if k == n:
            if total == n:
                out.append(tuple(prefix))
            return
        for x in range(n - total, -1, -1):
            if total + x >= k + 1:
                prefix.append(x)
                gen(prefix, total + x)
                prefix.pop()
    gen([], 0)
    return out


# -- Raney sequences ----------------------------------------------------------

def is_raney(H: Sequence[int], n: int, s: int) -> bool:
    H = set(H)
    if len(H) != n or not H <= set(range(1, s * n + 1)):
        return False
    count = 0
    for k in range(1, s * n + 1):
        count += k in H
        if s * count < k:
            return False
    return True


def enumerate_raney(n: int, s: int) -> list[tuple[int, ...]]:
    """n-subsets H of {1..sn} with s*|H cap {1..k}| >= k for every k, lexicographic."""
    if n < 1 or s < 2:
        raise ValueError("need n >= 1 and s >= 2")
    out = []
    top = s * n

    def gen(prefix, k):
        # prefix holds the chosen elements <= k
        if len(prefix) == n:
            # the density condition holds trivially from here on since s*n >= k
            out.append(tuple(prefix))
            return
        if k == top:
            return
        nxt = k + 1
        # take nxt
        prefix.append(nxt)
        gen(prefix, nxt)
        prefix.pop()
        # skip nxt if the density condition still holds at nxt
        if s * len(prefix) >= nxt:
            gen(prefix, nxt)
    gen([], 0)
    return out


def raney_weight_census(n: int, r: int) -> dict[tuple[int, ...], int]:
    """Count H in R_{n+1}^{r+1} by residues: i_j = #{h in H : h = j+1 mod r+1}, j = 1..r.

    Keys are compositions (i_0, ..., i_r) of n with i_0 = n - (i_1 + ... + i_r).
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    s = r + 1
    census: dict[tuple[int, ...], int] = {}
    for H in enumerate_raney(n + 1, s):
        tail = tuple(sum(1 for h in H if h % s == (j + 1) % s) for j in range(1, r + 1))
        key = (n - sum(tail),) + tail
        census[key] = census.get(key, 0) + 1
    return census


# -- closed forms -------------------------------------------------------------

def catalan(n: int) -> int:
    """(2n+2)! / ((n+1)! (n+2)!), the dimension count at d=2 for sl_2 (C_{n+1})."""
    return factorial(2 * n + 2) // (factorial(n + 1) * factorial(n + 2))


def narayana(n: int, i: int) -> int:
    """(n+1)! n! / ((n-i+1)! (n-i)! (i+1)! i!)."""
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    num = factorial(n + 1) * factorial(n)
    den = factorial(n - i + 1) * factorial(n - i) * factorial(i + 1) * factorial(i)
    return num // den


def higher_catalan(n: int, r: int) -> int:
    """((r+1)(n+1))! / ((n+1)! (r(n+1)+1)!)."""
    num = factorial((r + 1) * (n + 1))
    den = factorial(n + 1) * factorial(r * (n + 1) + 1)
    assert num % den == 0
    return num // den


def hoggatt_conjecture_dim(n: int, i: int, d: int) -> int:
    """Conjectured weight-(n-2i) dimension of the sl_2 module for d-dimensional currents.

    Product over k = 0..i-1 of (d+n-1-k)! k! / ((n-1-k)! (d+k)!).
    """
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    if i in (0, n):
        return 1
    num = den = 1
    for k in range(i):
        num *= factorial(d + n - 1 - k) * factorial(k)
        den *= factorial(n - 1 - k) * factorial(d + k)
    assert num % den == 0
    return num // den


def plane_partition_box(a: int, b: int, c: int) -> int:
    """MacMahon's count of plane partitions inside an a x b x c box."""
    num = den = 1
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            num *= i + j + c - 1
            den *= i + j - 1
    return num // den


def binomial(n: int, k: int) -> int:
    return comb(n, k)


def q_factorial(n: int) -> list[int]:
    """Coefficients of [n]_q! = prod_{k=1..n} (1 + q + ... + q^{k-1}), constant term first."""
    coeffs = [1]
    for k in range(1, n + 1):
        nxt = [0] * (len(coeffs) + k - 1)
        for i, c in enumerate(coeffs):
            for j in range(k):
                nxt[i + j] += c
        coeffs = nxt
    return coeffs
