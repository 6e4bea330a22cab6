"""Weight characters of local Weyl modules W({Z}_{n w1}) for sl(r+1).

At the origin the weight space of composition (i_0..i_r) is the image of the
Young-subgroup invariants in the coinvariant quotient.  For d = 1 and any
point multiset Z the module is the quotient of S^n(A_N (x) V) by J_Z, where
A_N = Q[x] / prod_z (x - z)^N and J_Z is the kernel of evaluation at Z on
S^n(A_N).  The weight space of (i_0..i_r) is S^{i_0}(A_N) (x) ... (x) S^{i_r}(A_N),
written as commutative monomials in a basis of A_N; an element P of A_N acts
through the derivation b -> P*b.

Two routes compute J_Z * M:

``block``
    Basis (x - z)^l e_z with e_z the idempotent at z.  The derivation of e_z
    acts on a monomial by its number of factors at z, and evaluates to the
    multiplicity m_z, so only monomials with content exactly m survive, and
    on those J_Z is generated by the nilpotent (x - z)^l e_z, l >= 1.
``power-sum``
    J_Z is generated by Sym(x^k) - sum_i z_i^k for k = 1..n because power sums
    generate the symmetric functions.  Works in either the idempotent basis
    or the monomial basis 1, x, .., x^{D-1}.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .coinvariants import RankConfig, invariant_coinvariant_dims
from .combinat import compositions
from .exactla import RankProvenance, SparseMatrix, crosscheck_rank, rank, to_scalar


class UnsupportedConfiguration(ValueError):
    """A configuration outside the realized cases (points with d != 1)."""


def composition_to_weight(comp: Sequence[int]) -> tuple[int, ...]:
    return tuple(comp[j] - comp[j + 1] for j in range(len(comp) - 1))


@dataclass
class WeightCharacter:
    n: int
    r: int
    entries: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        for comp, v in self.entries.items():
            if len(comp) != self.r + 1 or sum(comp) != self.n or min(comp) < 0:
                raise ValueError(f"{comp} is not a composition of {self.n} into {self.r + 1} parts")
            if v < 0:
                raise ValueError(f"negative multiplicity at {comp}")
        self.entries = {c: v for c, v in self.entries.items() if v}

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, comp) -> int:
        return self.entries.get(tuple(comp), 0)

    def weights(self) -> dict[tuple[int, ...], int]:
        """Multiplicities keyed by sl(r+1) weight coordinates."""
        return {composition_to_weight(c): v for c, v in self.entries.items()}

    def rows(self) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """(composition, weight, dim) for every composition, lexicographically descending."""
        return [(c, composition_to_weight(c), self[c]) for c in compositions(self.n, self.r + 1)]

    def __mul__(self, other: "WeightCharacter") -> "WeightCharacter":
        """Character of the tensor product: compositions add."""
        if self.r != other.r:
            raise ValueError("characters of different rank")
        out: Counter = Counter()
        for a, u in self.entries.items():
            for b, v in other.entries.items():
                out[tuple(x + y for x, y in zip(a, b))] += u * v
        return WeightCharacter(self.n + other.n, self.r, dict(out))

    @classmethod
    def unit(cls, r: int) -> "WeightCharacter":
        return cls(0, r, {(0,) * (r + 1): 1})

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightCharacter):
            return NotImplemented
        return (self.n, self.r, self.entries) == (other.n, other.r, other.entries)


def origin_weyl_character(n: int, d: int, r: int, config: RankConfig = RankConfig(),
                          max_degree: int | None = None) -> WeightCharacter:
    """Weight character of the local Weyl module at the origin of C^d."""
    if n < 0 or d < 1 or r < 1:
        raise ValueError("need n >= 0, d >= 1, r >= 1")
    kw = {} if max_degree is None else {"max_degree": max_degree}
    entries = {comp: invariant_coinvariant_dims(n, d, comp, config, **kw).total
               for comp in compositions(n, r + 1)}
    return WeightCharacter(n, r, entries)


# -- point multisets on the line ----------------------------------------------

@dataclass(frozen=True)
class PointMultiset:
    points: tuple[tuple[Fraction, ...], ...]
    d: int

    @classmethod
    def of(cls, points: Iterable) -> "PointMultiset":
        pts = []
        for p in points:
            if isinstance(p, (tuple, list)):
                pts.append(tuple(Fraction(to_scalar(c)) for c in p))
            else:
                pts.append((Fraction(to_scalar(p)),))
        dims = {len(p) for p in pts}
        if len(dims) > 1:
            raise ValueError("points of different dimensions")
        return cls(tuple(sorted(pts)), dims.pop() if dims else 1)

    @property
    def n(self) -> int:
        return len(self.points)

    def multiplicities(self) -> dict[Fraction, int]:
        """Multiplicity of each distinct point (d = 1)."""
        self._require_line()
        return dict(sorted(Counter(p[0] for p in self.points).items()))

    def groups(self) -> list["PointMultiset"]:
        return [PointMultiset(((z,),) * m, 1) for z, m in self.multiplicities().items()]

    def _require_line(self) -> None:
        if self.d != 1:
            raise UnsupportedConfiguration(
                f"point multisets are realized only on the line (d=1), got d={self.d}")


def _multisets(elements: Sequence, size: int):
    return itertools.combinations_with_replacement(elements, size)


def _monomial(factors: Sequence) -> tuple:
    """Canonical form of a commutative monomial: sorted (element, exponent) pairs."""
    return tuple(sorted(Counter(factors).items()))


def _derive(comp_monos: tuple, action) -> dict:
    """Apply the derivation b -> action(b) to a product of monomials, one per sl weight slot.

    ``action(b)`` returns {element: coeff}.  The result maps new product keys to coefficients.
    """
    out: dict = {}
    for j, mono in enumerate(comp_monos):
        for b, e in mono:
            for nb, c in action(b).items():
                cnt = dict(mono)
                if e == 1:
                    del cnt[b]
                else:
                    cnt[b] = e - 1
                cnt[nb] = cnt.get(nb, 0) + 1
                key = comp_monos[:j] + (tuple(sorted(cnt.items())),) + comp_monos[j + 1:]
                out[key] = out.get(key, 0) + e * c
    return out


def _weight_basis(comp: Sequence[int], elements: Sequence):
    """Products of monomials of degrees comp[j] in the given elements."""
    per_slot = [[_monomial(ms) for ms in _multisets(elements, i)] for i in comp]
    return itertools.product(*per_slot)


def _block_basis(comp: Sequence[int], mult: dict, N: int):
    """Products of monomials in the (z, l) with exactly m_z factors at each point z."""
    points = list(mult)
    out = []

    def splits(k, left):
        # t[z][j]: factors at point z in slot j, rows summing to m_z, columns to comp[j]
        if k == len(points):
            if not any(left):
                yield []
            return
        for row in compositions(mult[points[k]], len(comp)):
            if all(a <= b for a, b in zip(row, left)):
                for rest in splits(k + 1, [b - a for a, b in zip(row, left)]):
                    yield [row] + rest

    for table in splits(0, list(comp)):
        per_slot = []
        for j in range(len(comp)):
            choices = [[tuple((z, l) for l in ms) for ms in _multisets(range(N), table[k][j])]
                       for k, z in enumerate(points)]
            per_slot.append([_monomial(itertools.chain.from_iterable(pick))
                             for pick in itertools.product(*choices)])
        out.extend(itertools.product(*per_slot))
    return out


def _quotient_dim(cols: list, rows: list[dict], config: RankConfig,
                  provenance: RankProvenance | None) -> int:
    index = {c: i for i, c in enumerate(cols)}
    mat = SparseMatrix.from_rows(({index[k]: v for k, v in row.items()} for row in rows), len(cols))
    if config.exact:
        rk = rank(mat)
    else:
        rk = crosscheck_rank(mat, *config.primes, provenance=provenance)
    return len(cols) - rk


def _block_weight_dim(comp, mult: dict, N: int, config, provenance) -> int:
    # elements are (z, l) standing for (x - z)^l e_z
    cols = _block_basis(comp, mult, N)
    if not cols:
        return 0
    rows = []
    for z in mult:
        # on the block, N_{z,l} is the l-th power sum of m_z commuting nilpotents, so by
        # Newton's identities l <= m_z already generates
        for l in range(1, min(N, mult[z] + 1)):
            def act(b, z=z, l=l):
                bz, bl = b
                return {(bz, bl + l): 1} if bz == z and bl + l < N else {}
            for mono in cols:
                row = _derive(mono, act)
                if row:
                    rows.append(row)
    return _quotient_dim(cols, rows, config, provenance)


def _crt_power_action(k: int, N: int):
    """x^k * (x - z)^l e_z = sum_t C(k, t) z^{k-t} (x - z)^{l+t} e_z, truncated at N."""
    def act(b):
        z, l = b
        out = {}
        for t in range(0, min(k, N - 1 - l) + 1):
            c = comb(k, t) * z ** (k - t)
            if c:
                out[(z, l + t)] = c
        return out
    return act


def _monomial_power_action(k: int, modulus: list[Fraction]):
    """x^k * x^a reduced modulo the monic polynomial with coefficient list ``modulus`` (low first)."""
    D = len(modulus) - 1
    powers = [_reduce_power(e, modulus) for e in range(2 * D + k + 1)]

    def act(a):
        return {i: c for i, c in enumerate(powers[a + k]) if c}
    return act


def _reduce_power(e: int, modulus: list[Fraction]) -> list[Fraction]:
    D = len(modulus) - 1
    poly = [Fraction(0)] * max(e + 1, D)
    poly[e] = Fraction(1)
    for top in range(len(poly) - 1, D - 1, -1):
        c = poly[top]
        if c:
            for i in range(D + 1):
                poly[top - D + i] -= c * modulus[i]
    return poly[:D]


def _vanishing_polynomial(mult: dict, N: int) -> list[Fraction]:
    """Coefficients (low degree first) of prod_z (x - z)^N."""
    poly = [Fraction(1)]
    for z in mult:
        for _ in range(N):
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= z * c
            poly = nxt
    return poly


def _power_sum_weight_dim(comp, pts: PointMultiset, N: int, basis: str, config, provenance) -> int:
    mult = pts.multiplicities()
    n = pts.n
    if basis == "crt":
        elements = [(z, l) for z in mult for l in range(N)]
        actions = [_crt_power_action(k, N) for k in range(1, n + 1)]
    elif basis == "monomial":
        modulus = _vanishing_polynomial(mult, N)
        elements = list(range(len(modulus) - 1))
        actions = [_monomial_power_action(k, modulus) for k in range(1, n + 1)]
    else:
        raise ValueError(f"unknown basis {basis!r}")
    values = [sum(p[0] ** k for p in pts.points) for k in range(1, n + 1)]
    cols = list(_weight_basis(comp, elements))
    rows = []
    for act, val in zip(actions, values):
        for mono in cols:
            row = _derive(mono, act)
            if val:
                row[mono] = row.get(mono, 0) - val
            row = {k: v for k, v in row.items() if v}
            if row:
                rows.append(row)
    return _quotient_dim(cols, rows, config, provenance)


ROUTES = ("block", "power-sum", "power-sum-monomial")


def points_weyl_character(points, r: int, N: int | None = None, route: str = "block",
                          config: RankConfig = RankConfig(),
                          provenance: RankProvenance | None = None) -> WeightCharacter:
    """Weight character of S^n(A_N (x) V_{r+1}) / J_Z S^n(A_N (x) V_{r+1}) for points on the line."""
    pts = points if isinstance(points, PointMultiset) else PointMultiset.of(points)
    pts._require_line()
    if r < 1:
        raise ValueError("need r >= 1")
    n = pts.n
    N = n if N is None else N
    if N < n:
        raise ValueError(f"truncation order N={N} is below n={n}")
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if n == 0:
        return WeightCharacter.unit(r)
    # the block route only needs the multiplicities, so points become labels 0, 1, ..
    counts = dict(enumerate(pts.multiplicities().values()))
    entries = {}
    for comp in compositions(n, r + 1):
        if route == "block":
            entries[comp] = _block_weight_dim(comp, counts, N, config, provenance)
        else:
            basis = "crt" if route == "power-sum" else "monomial"
            entries[comp] = _power_sum_weight_dim(comp, pts, N, basis, config, provenance)
    return WeightCharacter(n, r, entries)


@dataclass
class FactorizationReport:
    points: PointMultiset
    r: int
    whole: WeightCharacter
    factors: list[WeightCharacter]
    product: WeightCharacter

    @property
    def total_factorizes(self) -> bool:
        return self.whole.total == self.product.total

    @property
    def passed(self) -> bool:
        return self.whole == self.product


def verify_tensor_factorization(points, r: int, N: int | None = None,
                                route: str = "block", config: RankConfig = RankConfig()
                                ) -> FactorizationReport:
    """Compare the character at a multiset with the product of the characters at its distinct points."""
    pts = points if isinstance(points, PointMultiset) else PointMultiset.of(points)
    pts._require_line()
    whole = points_weyl_character(pts, r, N, route, config)
    factors = [points_weyl_character(g, r, None if N is None else max(N, g.n), route, config)
               for g in pts.groups()]
    product = WeightCharacter.unit(r)
    for f in factors:
        product = product * f
    return FactorizationReport(pts, r, whole, factors, product)


def truncation_stability_check(points, r: int, N: int | None = None, route: str = "block",
                               config: RankConfig = RankConfig()) -> bool:
    """True when the characters at truncation orders N and N+1 coincide."""
    pts = points if isinstance(points, PointMultiset) else PointMultiset.of(points)
    N = pts.n if N is None else N
    return points_weyl_character(pts, r, N, route, config) == \
        points_weyl_character(pts, r, N + 1, route, config)
