"""Polynomials in n multivariables x_1..x_n, each a point of Q^d.

A monomial is stored as a flat row-major exponent tuple of length n*d:
entry ``i*d + k`` is the exponent of coordinate k of x_{i+1}.  Blocks are
0-based internally.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactla import to_scalar


@dataclass(frozen=True, order=True)
class MultiMonomial:
    exps: tuple[int, ...]
    n: int
    d: int

    def __post_init__(self):
        if len(self.exps) != self.n * self.d:
            raise ValueError("exponent table has the wrong shape")
        if any(e < 0 for e in self.exps):
            raise ValueError("negative exponent")

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]]) -> "MultiMonomial":
        n = len(table)
        d = len(table[0]) if n else 0
        return cls(tuple(e for row in table for e in row), n, d)

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        d = self.d
        return tuple(self.exps[i * d:(i + 1) * d] for i in range(self.n))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def multidegree(self) -> tuple[int, ...]:
        return multidegree(self.exps, self.d)


def multidegree(exps: Sequence[int], d: int) -> tuple[int, ...]:
    return tuple(sum(exps[k::d]) for k in range(d))


def _normalize(terms: Mapping) -> dict:
    out = {}
    for m, c in terms.items():
        c = to_scalar(c)
        if c != 0:
            out[m] = c
    return out


class Poly:
    """Element of Q[x_1..x_n] with x_i in Q^d; ``terms`` maps flat exponent tuples to coefficients."""

    __slots__ = ("terms", "n", "d")

    def __init__(self, terms: Mapping[tuple[int, ...], object], n: int, d: int):
        self.n = n
        self.d = d
        self.terms = _normalize(terms)
        for m in self.terms:
            if len(m) != n * d:
                raise ValueError(f"monomial {m} does not match n={n}, d={d}")

    @classmethod
    def zero(cls, n: int, d: int) -> "Poly":
        return cls({}, n, d)

    @classmethod
    def one(cls, n: int, d: int) -> "Poly":
        return cls({(0,) * (n * d): 1}, n, d)

    @classmethod
    def monomial(cls, table: Sequence[Sequence[int]], coeff=1) -> "Poly":
        m = MultiMonomial.from_table(table)
        return cls({m.exps: coeff}, m.n, m.d)

    @classmethod
    def variable(cls, i: int, k: int, n: int, d: int) -> "Poly":
        """Coordinate k of x_{i+1} (0-based indices)."""
        e = [0] * (n * d)
        e[i * d + k] = 1
        return cls({tuple(e): 1}, n, d)

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError(f"shape mismatch: (n, d) = {(self.n, self.d)} vs {(other.n, other.d)}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly({(0,) * (self.n * self.d): other}, self.n, self.d)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Poly(terms, self.n, self.d)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()}, self.n, self.d)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = to_scalar(other)
            return Poly({m: c * v for m, v in self.terms.items()}, self.n, self.d)
        self._check(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        return Poly(terms, self.n, self.d)

    def __rmul__(self, other) -> "Poly":
        return self * other

    def __truediv__(self, c) -> "Poly":
        c = Fraction(c)
        return Poly({m: Fraction(v) / c for m, v in self.terms.items()}, self.n, self.d)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return (self.n, self.d) == (other.n, other.d) and self.terms == other.terms
        return self == self._coerce(other)

    def __hash__(self):
        return hash((self.n, self.d, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"Poly(0; n={self.n}, d={self.d})"
        parts = []
        for m in sorted(self.terms, reverse=True):
            parts.append(f"{self.terms[m]}*{MultiMonomial(m, self.n, self.d).table}")
        return " + ".join(parts)

    def is_homogeneous(self) -> bool:
        return len({multidegree(m, self.d) for m in self.terms}) <= 1

    def multidegrees(self) -> set[tuple[int, ...]]:
        return {multidegree(m, self.d) for m in self.terms}


def permute_exps(sigma: Sequence[int], exps: tuple[int, ...], d: int) -> tuple[int, ...]:
    """Send block i to block sigma[i]."""
    out = [0] * len(exps)
    for i, s in enumerate(sigma):
        out[s * d:(s + 1) * d] = exps[i * d:(i + 1) * d]
    return tuple(out)


def _check_perm(sigma: Sequence[int], n: int) -> None:
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"{sigma} is not a permutation of 0..{n - 1}")


def permute_blocks(sigma: Sequence[int], p: Poly) -> Poly:
    """Action x_i -> x_{sigma(i)} of a permutation given as a 0-based image list."""
    _check_perm(sigma, p.n)
    return Poly({permute_exps(sigma, m, p.d): c for m, c in p.terms.items()}, p.n, p.d)


def polarized_power_sum(alpha: Sequence[int], n: int) -> Poly:
    """p_alpha = sum_i x_i^alpha."""
    alpha = tuple(alpha)
    d = len(alpha)
    if d == 0 or sum(alpha) < 1 or min(alpha) < 0:
        raise ValueError("multi-exponent must be nonnegative with |alpha| >= 1")
    terms = {}
    for i in range(n):
        e = [0] * (n * d)
        e[i * d:(i + 1) * d] = alpha
        terms[tuple(e)] = 1
    return Poly(terms, n, d)


def check_composition(comp: Sequence[int], n: int) -> tuple[int, ...]:
    comp = tuple(int(c) for c in comp)
    if any(c < 0 for c in comp) or sum(comp) != n:
        raise ValueError(f"{comp} is not a composition of {n}")
    return comp


def young_subgroup(comp: Sequence[int]) -> list[tuple[int, ...]]:
    """All elements of S_{i_0} x ... x S_{i_r} acting on consecutive blocks."""
    segments = []
    start = 0
    for c in comp:
        segments.append(list(itertools.permutations(range(start, start + c))))
        start += c
    return [tuple(itertools.chain.from_iterable(parts))
            for parts in itertools.product(*segments)]


def reynolds(comp: Sequence[int], p: Poly) -> Poly:
    """Average of p over the Young subgroup S_{i_0} x ... x S_{i_r}."""
    check_composition(comp, p.n)
    group = young_subgroup(comp)
    terms: dict = {}
    for sigma in group:
        for m, c in p.terms.items():
            pm = permute_exps(sigma, m, p.d)
            terms[pm] = terms.get(pm, 0) + c
    size = len(group)
    return Poly({m: Fraction(c, size) for m, c in terms.items()}, p.n, p.d)


def orbit(exps: tuple[int, ...], comp: Sequence[int], d: int) -> set[tuple[int, ...]]:
    """Young-subgroup orbit of a monomial, via distinct rearrangements of each block segment."""
    blocks = [exps[i * d:(i + 1) * d] for i in range(len(exps) // d)]
    choices = []
    start = 0
    for c in comp:
        seg = blocks[start:start + c]
        choices.append(_distinct_perms(tuple(seg)))
        start += c
    return {tuple(itertools.chain.from_iterable(itertools.chain.from_iterable(pick)))
            for pick in itertools.product(*choices)}


@lru_cache(maxsize=None)
def _distinct_perms(seg: tuple) -> tuple:
    return tuple(set(itertools.permutations(seg)))


def orbit_sum(exps: tuple[int, ...], comp: Sequence[int], n: int, d: int) -> Poly:
    return Poly({m: 1 for m in orbit(exps, comp, d)}, n, d)


def _compositions(total: int, parts: int):
    """Weak compositions of total into the given number of parts, lex descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomial_exps(n: int, d: int, mu: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Flat exponent tuples of multidegree mu, lex-descending (graded-lex within a fixed degree)."""
    mu = tuple(mu)
    if len(mu) != d:
        raise ValueError(f"multidegree {mu} has length != d={d}")
    per_coord = [list(_compositions(m, n)) for m in mu]
    out = []
    for pick in itertools.product(*per_coord):
        e = [0] * (n * d)
        for k, comp in enumerate(pick):
            for i, v in enumerate(comp):
                e[i * d + k] = v
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


def monomial_basis(n: int, d: int, mu: Sequence[int]) -> list[MultiMonomial]:
    return [MultiMonomial(e, n, d) for e in monomial_exps(n, d, tuple(mu))]


def count_monomials(n: int, mu: Sequence[int]) -> int:
    """Stars-and-bars count of monomials of multidegree mu."""
    return math.prod(math.comb(m + n - 1, n - 1) for m in mu) if n else int(all(m == 0 for m in mu))


def multidegrees_of_total(d: int, g: int) -> list[tuple[int, ...]]:
    return list(_compositions(g, d))


def nonzero_exponents_below(mu: Sequence[int], bound: int | None = None) -> Iterable[tuple[int, ...]]:
    """All alpha <= mu componentwise with 1 <= |alpha| (<= bound if given)."""
    for alpha in itertools.product(*(range(m + 1) for m in mu)):
        s = sum(alpha)
        if s >= 1 and (bound is None or s <= bound):
            yield alpha
