"""Symmetric functions in the h, e, s and m bases, and the passage to sl(r+1) characters.

Changes of basis go through Kostka numbers counted by enumerating
semistandard tableaux as chains of horizontal strips.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping, Sequence

from .combinat import Partition, compositions, enumerate_A, partitions
from .exactla import to_scalar

BASES = ("h", "e", "s", "m")


class NotAModule(ValueError):
    """A Schur expansion with negative or fractional coefficients was passed as a module."""


@dataclass(frozen=True)
class SymFuncExpr:
    basis: str
    coeffs: Mapping[Partition, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
            c = to_scalar(c)
            if c != 0:
                clean[lam] = clean.get(lam, 0) + c
        clean = {k: v for k, v in clean.items() if v != 0}
        if len({lam.size for lam in clean}) > 1:
            raise ValueError("expression is not homogeneous")
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def single(cls, basis: str, *parts: int, coeff=1) -> "SymFuncExpr":
        return cls(basis, {Partition(parts): coeff})

    @property
    def degree(self) -> int | None:
        return next(iter(self.coeffs)).size if self.coeffs else None

    def __add__(self, other: "SymFuncExpr") -> "SymFuncExpr":
        if self.basis != other.basis:
            raise ValueError(f"cannot add {self.basis}- and {other.basis}-expansions")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymFuncExpr(self.basis, out)

    def __mul__(self, c) -> "SymFuncExpr":
        return SymFuncExpr(self.basis, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"0[{self.basis}]"
        return " + ".join(f"{v}*{self.basis}{k.parts}"
                          for k, v in sorted(self.coeffs.items(), reverse=True))


# -- Kostka numbers -------------------------------------------------------------

_lock = threading.Lock()


def _horizontal_strips(outer: tuple[int, ...], size: int):
    """Partitions nu inside ``outer`` with outer/nu a horizontal strip of the given size."""
    outer = list(outer)
    k = len(outer)

    def gen(i, left, acc):
        if i == k:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        # row i of nu lies between outer[i+1] and outer[i]
        lo = outer[i + 1] if i + 1 < k else 0
        for v in range(outer[i], lo - 1, -1):
            taken = outer[i] - v
            if taken > left:
                break
            acc.append(v)
            yield from gen(i + 1, left - taken, acc)
            acc.pop()
    yield from gen(0, size, [])


@lru_cache(maxsize=None)
def _kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return int(not shape)
    # the largest letter fills a horizontal strip of size content[-1]
    return sum(_kostka(nu, content[:-1]) for nu in _horizontal_strips(shape, content[-1]))


def kostka(lam, mu) -> int:
    """Number of SSYT of shape lam and content mu (mu may be any composition)."""
    lam = tuple(lam.parts if isinstance(lam, Partition) else lam)
    mu = tuple(mu.parts if isinstance(mu, Partition) else mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    Partition(lam)
    with _lock:
        return _kostka(lam, tuple(mu))


# -- changes of basis -----------------------------------------------------------

def _require(x: SymFuncExpr, basis: str) -> None:
    if x.basis != basis:
        raise ValueError(f"expected a {basis}-expansion, got {x.basis}")


def h_to_schur(x: SymFuncExpr) -> SymFuncExpr:
    """h_mu = sum_lam K_{lam,mu} s_lam."""
    _require(x, "h")
    out: dict = {}
    for mu, c in x.coeffs.items():
        for lam in partitions(mu.size):
            k = kostka(lam, mu)
            if k:
                out[lam] = out.get(lam, 0) + c * k
    return SymFuncExpr("s", out)


def e_to_schur(x: SymFuncExpr) -> SymFuncExpr:
    """e_mu = sum_lam K_{lam',mu} s_lam."""
    _require(x, "e")
    out: dict = {}
    for mu, c in x.coeffs.items():
        for lam in partitions(mu.size):
            k = kostka(lam.conjugate(), mu)
            if k:
                out[lam] = out.get(lam, 0) + c * k
    return SymFuncExpr("s", out)


def schur_to_monomial(x: SymFuncExpr) -> SymFuncExpr:
    """s_lam = sum_mu K_{lam,mu} m_mu."""
    _require(x, "s")
    out: dict = {}
    for lam, c in x.coeffs.items():
        for mu in partitions(lam.size):
            k = kostka(lam, mu)
            if k:
                out[mu] = out.get(mu, 0) + c * k
    return SymFuncExpr("m", out)


def monomial_to_schur(x: SymFuncExpr) -> SymFuncExpr:
    """Invert the unitriangular Kostka matrix (dominance order) by back substitution."""
    _require(x, "m")
    rest = {k: Fraction(v) for k, v in x.coeffs.items()}
    out: dict = {}
    while rest:
        # a dominance-maximal partition in the support can only come from s_top
        top = max(rest, key=lambda p: p.parts)
        c = rest[top]
        out[top] = c
        for mu in partitions(top.size):
            k = kostka(top, mu)
            if k:
                rest[mu] = rest.get(mu, 0) - c * k
                if rest[mu] == 0:
                    del rest[mu]
    return SymFuncExpr("s", out)


def tensor_sign(x: SymFuncExpr) -> SymFuncExpr:
    """The involution omega: h <-> e, s_lam -> s_lam'; m goes through the Schur basis."""
    if x.basis == "h":
        return SymFuncExpr("e", x.coeffs)
    if x.basis == "e":
        return SymFuncExpr("h", x.coeffs)
    if x.basis == "s":
        return SymFuncExpr("s", {lam.conjugate(): c for lam, c in x.coeffs.items()})
    return schur_to_monomial(tensor_sign(monomial_to_schur(x)))


def to_schur(x: SymFuncExpr) -> SymFuncExpr:
    if x.basis == "s":
        return x
    return {"h": h_to_schur, "e": e_to_schur, "m": monomial_to_schur}[x.basis](x)


# -- the parking-function module --------------------------------------------------

def parking_frobenius(n: int) -> SymFuncExpr:
    """Frobenius image of the permutation module on parking functions: sum of h_sort(a) over A_n."""
    out: dict = {}
    for a in enumerate_A(n):
        lam = Partition.from_composition(a)
        out[lam] = out.get(lam, 0) + 1
    return SymFuncExpr("h", out)


def hook_dimension(lam: Partition) -> int:
    """Dimension of the S_n irreducible indexed by lam."""
    conj = lam.conjugate()
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(lam.size) // hooks


def sn_dimension(x: SymFuncExpr) -> Fraction | int:
    """Dimension of the virtual S_n-module with this Frobenius image."""
    n = x.degree
    if n is None:
        return 0
    if x.basis == "h":
        return sum(c * factorial(n) // prod(factorial(p) for p in lam) for lam, c in x.coeffs.items())
    if x.basis == "e":
        return sn_dimension(SymFuncExpr("h", x.coeffs))
    return sum(c * hook_dimension(lam) for lam, c in to_schur(x).coeffs.items())


# -- passage to sl(r+1) -------------------------------------------------------------

def frobenius_transform(x: SymFuncExpr, r: int) -> dict[tuple[int, ...], int]:
    """s_xi -> irrep with highest weight (xi_1 - xi_2, ..., xi_r - xi_{r+1}); rows beyond r+1 vanish."""
    _require(x, "s")
    out: dict[tuple[int, ...], int] = {}
    for xi, c in x.coeffs.items():
        if c < 0 or Fraction(c).denominator != 1:
            raise NotAModule(f"coefficient {c} of s{xi.parts} is not a multiplicity")
        if len(xi) > r + 1:
            continue
        hw = tuple(xi[j] - xi[j + 1] for j in range(r))
        out[hw] = out.get(hw, 0) + int(c)
    return out


def weight_to_partition(r: int, hw: Sequence[int], n: int | None = None) -> Partition:
    """The GL(r+1) partition of size n (smallest possible if n is None) with this sl highest weight."""
    hw = tuple(hw)
    if len(hw) != r or min(hw, default=0) < 0:
        raise ValueError(f"{hw} is not a dominant sl({r + 1}) weight")
    rows = [sum(hw[j:]) for j in range(r)] + [0]
    size = sum(rows)
    if n is not None:
        extra = n - size
        if extra < 0 or extra % (r + 1):
            raise ValueError(f"weight {hw} does not occur in degree {n}")
        rows = [v + extra // (r + 1) for v in rows]
    return Partition(tuple(rows))


def irrep_dim(r: int, hw: Sequence[int]) -> int:
    """Weyl dimension formula for sl(r+1): prod_{i<j} (xi_i - xi_j + j - i) / (j - i)."""
    xi = weight_to_partition(r, hw)
    num = den = 1
    for i in range(r + 1):
        for j in range(i + 1, r + 1):
            num *= xi[i] - xi[j] + j - i
            den *= j - i
    return num // den


def irrep_weight_character(r: int, hw: Sequence[int], n: int | None = None) -> dict[tuple[int, ...], int]:
    """Weight multiplicities keyed by compositions (i_0..i_r); the multiplicity is a Kostka number."""
    xi = weight_to_partition(r, hw, n)
    out = {}
    for comp in compositions(xi.size, r + 1):
        k = kostka(xi, comp)
        if k:
            out[comp] = k
    return out


def parking_weight_character(n: int, r: int) -> dict[tuple[int, ...], int]:
    """Weight character of F(C PF_n (x) sign) for sl(r+1), summed over its irreducibles."""
    if n == 0:
        return {(0,) * (r + 1): 1}
    irreps = frobenius_transform(e_to_schur(tensor_sign(parking_frobenius(n))), r)
    out: dict = {}
    for hw, mult in irreps.items():
        for comp, k in irrep_weight_character(r, hw, n).items():
            out[comp] = out.get(comp, 0) + mult * k
    return out
