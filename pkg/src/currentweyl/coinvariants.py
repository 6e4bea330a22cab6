"""Multigraded dimensions of the coinvariant quotient of Q[x_1..x_n], x_i in Q^d.

Write R = Q[x_1..x_n] and I for the ideal generated by positive-degree
S_n-invariants.  In multidegree mu, I is spanned by products m * p_alpha of
monomials with polarized power sums, and ``dim (R/I)_mu = #monomials - rank``.

Two routes compute the quotient:

``span``
    Builds the m * p_alpha rows literally and eliminates.  Simple, but the
    matrices grow with the ring, not with the quotient.
``presentation`` (default)
    Builds Q_mu = (R/I)_mu from the lower pieces:
    ``Q_mu = (+)_v x_v Q_{mu - e(v)} / (commutators, p_mu)``.  Here v runs
    over the variables, e(v) is the unit multidegree of v, and the
    commutators are ``x_v (x_w s) - x_w (x_v s)`` for basis vectors s of
    Q_{mu - e(v) - e(w)}.  Matrix sizes are bounded by n*d*max dim Q.

Young-subgroup invariants use integral orbit sums, so every input row has
0/1 entries and reduces cleanly mod any prime.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .exactla import DEFAULT_PRIMES, Echelon, RankProvenance, ReductionError
from .polyring import (check_composition, count_monomials, monomial_exps,
                       multidegrees_of_total, nonzero_exponents_below, orbit)

log = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 40


class DegreeCapExceeded(RuntimeError):
    """The stopping rule did not fire below the configured degree cap."""


@dataclass
class GradedDims:
    n: int
    d: int
    dims: dict[tuple[int, ...], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def by_degree(self) -> list[int]:
        """Dimensions summed over each total degree 0..top."""
        if not self.total:
            return []
        top = max(sum(mu) for mu, v in self.dims.items() if v)
        out = [0] * (top + 1)
        for mu, v in self.dims.items():
            if v:
                out[sum(mu)] += v
        return out

    def support(self) -> dict[tuple[int, ...], int]:
        return {mu: v for mu, v in self.dims.items() if v}


@dataclass(frozen=True)
class RankConfig:
    primes: tuple[int, int] = DEFAULT_PRIMES
    exact: bool = False
    # Multisymmetric invariants over Q are generated by p_alpha with |alpha| <= n.
    bound_generators: bool = True
    method: str = "presentation"

    def __post_init__(self):
        if self.method not in ("presentation", "span"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.primes[0] == self.primes[1]:
            raise ValueError("crosscheck needs two distinct primes")


def _unit(d: int, k: int) -> tuple[int, ...]:
    return tuple(int(j == k) for j in range(d))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Piece:
    """The literal multidegree-mu slice: monomial columns and m * p_alpha rows."""

    def __init__(self, n: int, d: int, mu: tuple[int, ...], bound: int | None):
        self.n, self.d, self.mu = n, d, mu
        self.monos = monomial_exps(n, d, mu)
        self.col = {m: j for j, m in enumerate(self.monos)}
        self.bound = bound
        self._ech: dict = {}

    def ideal_rows(self) -> list[dict]:
        n, d, mu = self.n, self.d, self.mu
        col = self.col
        rows = []
        seen = set()
        for alpha in nonzero_exponents_below(mu, self.bound):
            rest = _sub(mu, alpha)
            for m in monomial_exps(n, d, rest):
                row = {}
                for i in range(n):
                    e = list(m)
                    for k in range(d):
                        e[i * d + k] += alpha[k]
                    row[col[tuple(e)]] = 1
                key = frozenset(row)
                if key not in seen:
                    seen.add(key)
                    rows.append(row)
        return rows

    def echelon(self, p: int | None) -> Echelon:
        if p not in self._ech:
            ech = Echelon(p)
            ech.extend(self.ideal_rows())
            self._ech[p] = ech
        return self._ech[p]

    def invariant_rows(self, comp: tuple[int, ...]) -> list[dict]:
        rows = []
        seen = set()
        for m in self.monos:
            if m in seen:
                continue
            orb = orbit(m, comp, self.d)
            seen |= orb
            rows.append({self.col[x]: 1 for x in orb})
        return rows


class _Tower:
    """The quotient built multidegree by multidegree over one field (p=None is Q).

    ``basis[mu]`` lists the surviving columns of T_mu; a column is a pair
    (variable, index into basis[mu - e(variable)]) standing for x_v * s.
    """

    def __init__(self, n: int, d: int, p: int | None, bound: int | None):
        self.n, self.d, self.p, self.bound = n, d, p, bound
        zero = (0,) * d
        self.basis: dict[tuple, list] = {zero: [None]}
        self.pos: dict[tuple, dict] = {zero: {None: 0}}
        self.cols: dict[tuple, dict] = {zero: {}}
        self.ech: dict[tuple, Echelon] = {zero: Echelon(p)}
        self._mono_nf: dict = {}
        self._unit_nf: dict = {}

    def coord(self, v: int) -> int:
        return v % self.d

    def dim(self, mu: tuple[int, ...]) -> int:
        if min(mu) < 0:
            return 0
        self.build(mu)
        return len(self.basis[mu])

    def build(self, mu: tuple[int, ...]) -> None:
        if mu in self.basis:
            return
        n, d = self.n, self.d
        nvars = n * d
        cols: dict = {}
        for v in range(nvars):
            k = self.coord(v)
            if mu[k] == 0:
                continue
            below = _sub(mu, _unit(d, k))
            for j in range(self.dim(below)):
                cols[(v, j)] = len(cols)
        rows = []
        # commutators x_v (x_w s) = x_w (x_v s)
        for v in range(nvars):
            k = self.coord(v)
            for w in range(v + 1, nvars):
                l = self.coord(w)
                base = _sub(_sub(mu, _unit(d, k)), _unit(d, l))
                if min(base) < 0:
                    continue
                for j in range(self.dim(base)):
                    a = self.times_var(w, j, _sub(mu, _unit(d, k)))
                    b = self.times_var(v, j, _sub(mu, _unit(d, l)))
                    row = {}
                    for t, c in a.items():
                        row[cols[(v, t)]] = c
                    for t, c in b.items():
                        key = cols[(w, t)]
                        row[key] = row.get(key, 0) - c
                    rows.append({key: c for key, c in row.items() if c})
        total = sum(mu)
        if total >= 1 and (self.bound is None or total <= self.bound):
            # the generator p_mu, each x_i^mu split off at its first nonzero coordinate
            k = next(k for k in range(d) if mu[k])
            rest = _sub(mu, _unit(d, k))
            row = {}
            for i in range(n):
                e = [0] * nvars
                e[i * d:(i + 1) * d] = rest
                for t, c in self.nf_monomial(tuple(e)).items():
                    key = cols[(i * d + k, t)]
                    row[key] = row.get(key, 0) + c
            rows.append({key: c for key, c in row.items() if c})
        ech = Echelon(self.p)
        ech.extend(r for r in rows if r)
        pivots = set(ech.pivot_cols)
        inv = {c: key for key, c in cols.items()}
        free = [c for c in range(len(cols)) if c not in pivots]
        self.basis[mu] = [inv[c] for c in free]
        self.pos[mu] = {c: i for i, c in enumerate(free)}
        self.cols[mu] = cols
        self.ech[mu] = ech

    def reduce(self, mu: tuple[int, ...], row: dict) -> dict:
        """Coordinates (over basis[mu]) of a vector given in T_mu columns."""
        ech = self.ech[mu]
        red = ech.reduce(ech.coerce(row))
        pos = self.pos[mu]
        return {pos[c]: v for c, v in red.items()}

    def times_var(self, v: int, j: int, mu: tuple[int, ...]) -> dict:
        """x_v times basis vector j of Q_{mu - e(v)}, in coordinates of Q_mu."""
        key = (v, j, mu)
        out = self._unit_nf.get(key)
        if out is None:
            self.build(mu)
            out = self.reduce(mu, {self.cols[mu][(v, j)]: 1})
            self._unit_nf[key] = out
        return out

    def nf_monomial(self, exps: tuple[int, ...]) -> dict:
        """Coordinates of the class of a monomial in its multidegree piece."""
        out = self._mono_nf.get(exps)
        if out is not None:
            return out
        d = self.d
        mu = tuple(sum(exps[k::d]) for k in range(d))
        if sum(mu) == 0:
            out = {0: 1}
        else:
            v = next(i for i, e in enumerate(exps) if e)
            smaller = list(exps)
            smaller[v] -= 1
            lower = self.nf_monomial(tuple(smaller))
            self.build(mu)
            cols = self.cols[mu]
            out = self.reduce(mu, {cols[(v, t)]: c for t, c in lower.items()}) if lower else {}
        self._mono_nf[exps] = out
        return out

    def image_rank(self, mu: tuple[int, ...], polys: list[dict]) -> int:
        """Rank of the images in Q_mu of polynomials given as {exps: coeff}."""
        self.build(mu)
        ech = Echelon(self.p)
        for poly in polys:
            row: dict = {}
            for m, c in poly.items():
                for t, v in self.nf_monomial(m).items():
                    row[t] = row.get(t, 0) + c * v
            ech.add({t: v for t, v in row.items() if v})
        return ech.rank


class CoinvariantEngine:
    """Caches eliminations for one (n, d) and one rank configuration."""

    def __init__(self, n: int, d: int, config: RankConfig = RankConfig(),
                 max_degree: int = DEFAULT_MAX_DEGREE):
        if n < 0 or d < 1:
            raise ValueError("need n >= 0 and d >= 1")
        self.n, self.d = n, d
        self.config = config
        self.max_degree = max_degree
        self.provenance = RankProvenance(config.primes)
        self._bound = n if config.bound_generators else None
        self._pieces: dict[tuple[int, ...], _Piece] = {}
        self._towers: dict = {}
        self._dims: GradedDims | None = None
        self._field: int | None = None
        self.last_field: int | None = None

    # -- literal span route -------------------------------------------------
    def piece(self, mu: Sequence[int]) -> _Piece:
        mu = tuple(mu)
        if len(mu) != self.d or min(mu, default=0) < 0:
            raise ValueError(f"bad multidegree {mu} for d={self.d}")
        if mu not in self._pieces:
            self._pieces[mu] = _Piece(self.n, self.d, mu, self._bound)
        return self._pieces[mu]

    def _crosscheck(self, compute):
        """Run ``compute(p)`` for both primes; fall back to Q on disagreement."""
        if self.config.exact:
            self.last_field = None
            return compute(None)
        p1, p2 = self.config.primes
        try:
            a, b = compute(p1), compute(p2)
            agree = a == b
        except ReductionError:
            agree = False
        self.provenance.record(not agree)
        if agree:
            self.last_field = p1
            return a
        log.info("prime results disagree for n=%d, d=%d; escalating to Q", self.n, self.d)
        self.last_field = None
        return compute(None)

    def _span_ranks(self, piece: _Piece, extra, p):
        ech = piece.echelon(p)
        if extra is None:
            return ech.rank, ech.rank
        ext = ech.copy()
        ext.extend(extra)
        return ech.rank, ext.rank

    def ideal_piece_dim(self, mu: Sequence[int]) -> int:
        """Rank of the m * p_alpha rows in multidegree mu (always the literal route)."""
        mu = tuple(mu)
        if sum(mu) == 0:
            return 0
        piece = self.piece(mu)
        return self._crosscheck(lambda p: self._span_ranks(piece, None, p)[0])

    # -- presentation route -------------------------------------------------
    def tower(self, p: int | None) -> _Tower:
        if p not in self._towers:
            self._towers[p] = _Tower(self.n, self.d, p, self._bound)
        return self._towers[p]

    def _layers(self, dim_of) -> GradedDims:
        out = GradedDims(self.n, self.d)
        g = 0
        while True:
            if g > self.max_degree:
                raise DegreeCapExceeded(
                    f"no zero layer up to total degree {self.max_degree} (n={self.n}, d={self.d})")
            layer = {mu: dim_of(mu) for mu in multidegrees_of_total(self.d, g)}
            out.dims.update(layer)
            if not any(layer.values()):
                return out
            g += 1

    def coinvariant_dims(self, check_stop: bool = False) -> GradedDims:
        if self._dims is None:
            if self.config.method == "span":
                def run(p):
                    return self._layers(
                        lambda mu: count_monomials(self.n, mu)
                        - (self._span_ranks(self.piece(mu), None, p)[0] if sum(mu) else 0)).dims
            else:
                def run(p):
                    return self._layers(self.tower(p).dim).dims
            dims = self._crosscheck(run)
            self._dims = GradedDims(self.n, self.d, dict(dims))
            self._field = self.last_field
        if check_stop:
            g = self.top_degree + 2
            extra = [self._dim_in_field(mu) for mu in multidegrees_of_total(self.d, g)]
            if any(extra):
                raise AssertionError(f"stopping rule violated at degree {g}")
        return self._dims

    def _dim_in_field(self, mu):
        if self.config.method == "span":
            return count_monomials(self.n, mu) - self._span_ranks(self.piece(mu), None, self._field)[0]
        return self.tower(self._field).dim(tuple(mu))

    @property
    def top_degree(self) -> int:
        dims = self.coinvariant_dims()
        return max((sum(mu) for mu, v in dims.dims.items() if v), default=-1)

    def invariant_dims(self, comp: Sequence[int]) -> GradedDims:
        """Dimensions of the image of the Young-subgroup invariants in each piece."""
        comp = check_composition(comp, self.n)
        full = self.coinvariant_dims()
        live = [mu for mu, v in full.dims.items() if v]

        def run(p):
            res = {}
            for mu in live:
                piece = self.piece(mu)
                if self.config.method == "span":
                    base, ext = self._span_ranks(piece, piece.invariant_rows(comp), p)
                    res[mu] = ext - base
                else:
                    orbit_polys = [dict.fromkeys(r_monos, 1) for r_monos in
                                   _orbits(piece.monos, comp, self.d)]
                    res[mu] = self.tower(p).image_rank(mu, orbit_polys)
            return res

        res = self._crosscheck(run)
        out = GradedDims(self.n, self.d, {mu: 0 for mu in full.dims})
        out.dims.update(res)
        return out


def _orbits(monos, comp, d):
    seen = set()
    for m in monos:
        if m in seen:
            continue
        orb = orbit(m, comp, d)
        seen |= orb
        yield sorted(orb)


@lru_cache(maxsize=64)
def engine(n: int, d: int, config: RankConfig = RankConfig(),
           max_degree: int = DEFAULT_MAX_DEGREE) -> CoinvariantEngine:
    return CoinvariantEngine(n, d, config, max_degree)


def ideal_piece_dim(n: int, d: int, mu: Sequence[int], config: RankConfig = RankConfig()) -> int:
    return engine(n, d, config).ideal_piece_dim(tuple(mu))


def coinvariant_dims(n: int, d: int, config: RankConfig = RankConfig(),
                     max_degree: int = DEFAULT_MAX_DEGREE) -> GradedDims:
    return engine(n, d, config, max_degree).coinvariant_dims()


def invariant_coinvariant_dims(n: int, d: int, comp: Sequence[int],
                               config: RankConfig = RankConfig(),
                               max_degree: int = DEFAULT_MAX_DEGREE) -> GradedDims:
    return engine(n, d, config, max_degree).invariant_dims(comp)
