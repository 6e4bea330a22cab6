"""Exact rank computations over Q and over prime fields.

Matrices are sparse (a dict of nonzero entries).  Elimination keeps every
row as a ``{col: value}`` dict and picks pivots Markowitz-style: the shortest
active row first, and inside it the column touching the fewest other rows.

Prime-field ranks never exceed the rational rank.  :func:`crosscheck_rank`
runs two primes and falls back to exact rational elimination when they
disagree.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

# Both primes sit just below 2**31.
DEFAULT_PRIMES = (2147483647, 2147483629)


class ReductionError(ArithmeticError):
    """A rational entry cannot be reduced mod p (p divides a denominator)."""


def to_scalar(x) -> int | Fraction:
    """Normalize to an int or a lowest-terms Fraction with positive denominator."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    q = Fraction(x)
    return q.numerator if q.denominator == 1 else q


def reduce_mod(x, p: int) -> int:
    """Image of a rational in F_p."""
    if isinstance(x, int):
        return x % p
    q = Fraction(x)
    if q.denominator % p == 0:
        raise ReductionError(f"{p} divides the denominator of {q}")
    return q.numerator * pow(q.denominator, -1, p) % p


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: Mapping[tuple[int, int], int | Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            v = to_scalar(v)
            if v != 0:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_rows(cls, rows: Iterable[Mapping[int, object]], cols: int) -> "SparseMatrix":
        entries = {}
        n = 0
        for i, row in enumerate(rows):
            n = i + 1
            for j, v in row.items():
                entries[(i, j)] = v
        return cls(n, cols, entries)

    @classmethod
    def from_dense(cls, data) -> "SparseMatrix":
        data = [list(r) for r in data]
        cols = len(data[0]) if data else 0
        return cls.from_rows(({j: v for j, v in enumerate(r) if v} for r in data), cols)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def row_dicts(self) -> list[dict]:
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out


class Echelon:
    """Row-echelon basis of a growing subspace of K^cols.

    Pivot rows are kept in insertion order; row ``k`` is zero on the pivot
    columns of rows ``0..k-1``.  ``p=None`` means K = Q.
    """

    def __init__(self, p: int | None = None):
        self.p = p
        self.pivot_cols: list[int] = []
        self.pivot_rows: list[dict] = []
        self._index: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_cols)

    def copy(self) -> "Echelon":
        e = Echelon(self.p)
        # pivot rows are never mutated after insertion
        e.pivot_cols = list(self.pivot_cols)
        e.pivot_rows = list(self.pivot_rows)
        e._index = dict(self._index)
        return e

    def coerce(self, row: Mapping[int, object]) -> dict:
        if self.p is None:
            return {j: to_scalar(v) for j, v in row.items() if v != 0}
        p = self.p
        out = {}
        for j, v in row.items():
            v = reduce_mod(v, p)
            if v:
                out[j] = v
        return out

    def _push(self, col: int, row: dict) -> None:
        self._index[col] = len(self.pivot_cols)
        self.pivot_cols.append(col)
        self.pivot_rows.append(row)

    def reduce(self, row: dict) -> dict:
        """Reduce an already-coerced row in place against the pivots."""
        index = self._index
        heap = [index[c] for c in row if c in index]
        heapq.heapify(heap)
        p = self.p
        while heap:
            k = heapq.heappop(heap)
            c = self.pivot_cols[k]
            v = row.get(c)
            if v is None:
                continue
            prow = self.pivot_rows[k]
            if p is None:
                f = Fraction(v) / prow[c]
                for j, w in prow.items():
                    nv = row.get(j, 0) - f * w
                    if nv:
                        row[j] = nv
                        if j in index and index[j] > k:
                            heapq.heappush(heap, index[j])
                    else:
                        row.pop(j, None)
            else:
                f = v * pow(prow[c], -1, p) % p
                for j, w in prow.items():
                    nv = (row.get(j, 0) - f * w) % p
                    if nv:
                        row[j] = nv
                        if j in index and index[j] > k:
                            heapq.heappush(heap, index[j])
                    else:
                        row.pop(j, None)
        return row

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert a row; True when it enlarged the span."""
        r = self.reduce(self.coerce(row))
        if not r:
            return False
        self._push(min(r), r)
        return True

    def extend(self, rows: Iterable[Mapping[int, object]]) -> int:
        """Insert rows via Markowitz elimination; returns the rank gained."""
        active = [r for r in (self.reduce(self.coerce(row)) for row in rows) if r]
        before = self.rank
        _markowitz(active, self)
        return self.rank - before


def _markowitz(rows: list[dict], ech: Echelon) -> None:
    """Eliminate ``rows`` (already reduced against ``ech``), appending pivots."""
    p = ech.p
    colrows: dict[int, set] = {}
    for i, r in enumerate(rows):
        for c in r:
            colrows.setdefault(c, set()).add(i)
    alive = [True] * len(rows)
    heap = [(len(r), i) for i, r in enumerate(rows)]
    heapq.heapify(heap)
    while heap:
        ln, i = heapq.heappop(heap)
        if not alive[i]:
            continue
        prow = rows[i]
        if ln != len(prow):
            heapq.heappush(heap, (len(prow), i))
            continue
        alive[i] = False
        if not prow:
            continue
        c = min(prow, key=lambda j: (len(colrows[j]), j))
        for j in prow:
            colrows[j].discard(i)
        pv = prow[c]
        inv = pow(pv, -1, p) if p is not None else None
        for k in list(colrows[c]):
            row = rows[k]
            v = row[c]
            if p is None:
                f = Fraction(v) / pv
                for j, w in prow.items():
                    nv = row.get(j, 0) - f * w
                    if nv:
                        if j not in row:
                            colrows.setdefault(j, set()).add(k)
                        row[j] = nv
                    else:
                        del row[j]
                        colrows[j].discard(k)
            else:
                f = v * inv % p
                for j, w in prow.items():
                    nv = (row.get(j, 0) - f * w) % p
                    if nv:
                        if j not in row:
                            colrows.setdefault(j, set()).add(k)
                        row[j] = nv
                    else:
                        del row[j]
                        colrows[j].discard(k)
            if len(row) < len(prow) or not row:
                heapq.heappush(heap, (len(row), k))
        ech._push(c, prow)


def rank(m: SparseMatrix, p: int | None = None) -> int:
    """Rank over Q (``p=None``) or over F_p.

    Raises ReductionError when p divides a denominator.
    """
    ech = Echelon(p)
    ech.extend(m.row_dicts())
    return ech.rank


@dataclass
class RankProvenance:
    """How a crosschecked rank was obtained."""

    primes: tuple[int, int]
    escalated: bool = False
    calls: int = 0
    escalations: int = 0

    def record(self, escalated: bool) -> None:
        self.calls += 1
        if escalated:
            self.escalations += 1
            self.escalated = True


def crosscheck_rank(m: SparseMatrix, p1: int = DEFAULT_PRIMES[0],
                    p2: int = DEFAULT_PRIMES[1],
                    provenance: RankProvenance | None = None) -> int:
    """Rank mod two primes; exact rational rank when they disagree."""
    if p1 == p2:
        raise ValueError("crosscheck needs two distinct primes")
    rows = m.row_dicts()
    try:
        r1 = _rank_rows(rows, p1)
        r2 = _rank_rows(rows, p2)
        agree = r1 == r2
    except ReductionError:
        agree = False
    if provenance is not None:
        provenance.record(not agree)
    if agree:
        return r1
    return _rank_rows(rows, None)


def _rank_rows(rows: list[dict], p: int | None) -> int:
    ech = Echelon(p)
    ech.extend(rows)
    return ech.rank


def nullity(m: SparseMatrix, p: int | None = None) -> int:
    return m.cols - rank(m, p)
