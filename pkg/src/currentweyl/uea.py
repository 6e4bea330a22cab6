"""Normal ordering in U(sl_2 (x) A) applied to a highest-weight vector v.

A letter is ``(g, P)`` with g in {"e", "h", "f"} and P a formal coefficient,
stored as a sorted tuple of symbol indices (``()`` is the unit).  v is
killed by every e (x) P and h (x) P, and the only brackets needed are

    [e (x) P, f (x) Q] = h (x) PQ,    [h (x) P, f (x) Q] = -2 f (x) PQ.

f-letters commute, so a fully rewritten term is an unordered product of
f-letters, keyed by the sorted tuple of their coefficients.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

Coeff = tuple[int, ...]
Letter = tuple[str, Coeff]
Word = tuple[Letter, ...]
FProduct = tuple[Coeff, ...]

GENERATORS = ("e", "h", "f")


def coeff(*symbols: int) -> Coeff:
    return tuple(sorted(symbols))


def times(p: Coeff, q: Coeff) -> Coeff:
    return tuple(sorted(p + q))


def make_word(letters: Sequence[tuple[str, Sequence[int]]]) -> Word:
    word = []
    for g, c in letters:
        if g not in GENERATORS:
            raise ValueError(f"unknown generator {g!r}")
        word.append((g, tuple(sorted(c))))
    return tuple(word)


def martini_word(n: int, m: int) -> Word:
    """(e (x) P_1) ... (e (x) P_n) f^{n+m}."""
    return tuple(("e", (i,)) for i in range(1, n + 1)) + (("f", ()),) * (n + m)


def _redexes(word: Word) -> list[int]:
    return [i for i in range(len(word) - 1) if word[i][0] != "f" and word[i + 1][0] == "f"]


def _step(word: Word, i: int) -> list[tuple[int, Word]]:
    """Rewrite X f at position i as f X + [X, f]."""
    (g, p), (_, q) = word[i], word[i + 1]
    swapped = word[:i] + (word[i + 1], word[i]) + word[i + 2:]
    if g == "e":
        return [(1, swapped), (1, word[:i] + (("h", times(p, q)),) + word[i + 2:])]
    return [(1, swapped), (-2, word[:i] + (("f", times(p, q)),) + word[i + 2:])]


def _terminal(word: Word) -> FProduct | None:
    if all(g == "f" for g, _ in word):
        return tuple(sorted(c for _, c in word))
    return None


def _add(acc: dict, part: dict, scale: int) -> None:
    for k, v in part.items():
        nv = acc.get(k, 0) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


@lru_cache(maxsize=None)
def _leftmost(word: Word) -> tuple[tuple[FProduct, int], ...]:
    if word and word[-1][0] != "f":
        return ()
    term = _terminal(word)
    if term is not None:
        return ((term, 1),)
    i = _redexes(word)[0]
    acc: dict = {}
    for c, w in _step(word, i):
        _add(acc, dict(_leftmost(w)), c)
    return tuple(sorted(acc.items()))


def _random_order(word: Word, rng: random.Random) -> dict:
    if word and word[-1][0] != "f":
        return {}
    term = _terminal(word)
    if term is not None:
        return {term: 1}
    i = rng.choice(_redexes(word))
    acc: dict = {}
    for c, w in _step(word, i):
        _add(acc, _random_order(w, rng), c)
    return acc


def normal_order_apply(word, strategy: str = "leftmost", seed: int | None = None) -> dict[FProduct, int]:
    """Rewrite ``word . v`` as a sum of f-products applied to v."""
    word = make_word(word)
    if strategy == "leftmost":
        return dict(_leftmost(word))
    if strategy == "random":
        return _random_order(word, random.Random(seed))
    raise ValueError(f"unknown strategy {strategy!r}")


# -- cocktail servings --------------------------------------------------------

@dataclass(frozen=True)
class CocktailServing:
    glasses: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.glasses)

    def f_product(self) -> FProduct:
        """The f-product prod_G f (x) P(G) indexed by this serving."""
        return tuple(sorted(self.glasses))

    def __str__(self) -> str:
        return "|".join("".join(f"I{i}" for i in g) or "-" for g in self.glasses)


def _set_partitions(items: list[int], max_blocks: int) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest, max_blocks):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        if len(part) < max_blocks:
            yield [[first]] + part


def enumerate_servings(m: int, n: int) -> list[CocktailServing]:
    """Ways to pour n labeled ingredients into m indistinguishable glasses, empty glasses allowed."""
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    out = set()
    for part in _set_partitions(list(range(1, n + 1)), m):
        glasses = [tuple(sorted(b)) for b in part] + [()] * (m - len(part))
        out.add(CocktailServing(tuple(sorted(glasses))))
    return sorted(out, key=lambda s: s.glasses)


@dataclass
class MartiniReport:
    m: int
    n: int
    table: dict[CocktailServing, int]
    support_ok: bool
    integral: bool
    sign_ok: bool
    stray: dict[FProduct, int]

    @property
    def passed(self) -> bool:
        return self.support_ok and self.integral and self.sign_ok


def martini_check(m: int, n: int) -> MartiniReport:
    """Expand (e P_1)..(e P_n) f^{n+m} v and compare with the cocktail servings."""
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    result = normal_order_apply(martini_word(n, m))
    servings = enumerate_servings(m, n)
    by_product = {s.f_product(): s for s in servings}
    table = {s: result.get(s.f_product(), 0) for s in servings}
    stray = {k: v for k, v in result.items() if k not in by_product}
    support_ok = not stray and all(table.values())
    integral = all(isinstance(v, int) for v in result.values())
    sign_ok = m == 0 or all((-1) ** n * c > 0 for c in table.values())
    return MartiniReport(m, n, table, support_ok, integral, sign_ok, stray)


@dataclass
class AnrReport:
    k: int
    support: dict[FProduct, int]

    @property
    def coefficient(self) -> int:
        return self.support.get((tuple(range(1, self.k + 1)),), 0)

    @property
    def passed(self) -> bool:
        return len(self.support) == 1 and self.coefficient != 0


def anr_check(k: int) -> AnrReport:
    """(e P_1)..(e P_k) f^{k+1} v must be a nonzero multiple of (f (x) P_1..P_k) v."""
    if k < 1:
        raise ValueError("need k >= 1")
    return AnrReport(k, normal_order_apply(martini_word(k, 1)))
