"""
Permutations of ``{1, ..., n}`` in one-line notation and the Bruhat order.

Products follow ``(u * v)(i) == u(v(i))``, so right multiplication by the
simple reflection ``s_i`` swaps the entries in positions ``i, i+1`` and left
multiplication swaps the values ``i, i+1``.

>>> s1, s2 = simple_reflection(1, 3), simple_reflection(2, 3)
>>> str(s1 * s2)
'2,3,1'
>>> (s1 * s2 * s1) == longest_element(3)
True
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import permutations as _permutations
from typing import Iterable

import numpy as np

__all__ = [
    "Permutation", "RankError", "GuardExceeded",
    "identity", "simple_reflection", "longest_element", "all_permutations",
    "compose", "inverse", "length", "content", "right_descents",
    "left_descents", "reduced_word", "word_product", "bruhat_leq",
    "bruhat_leq_oracle", "bruhat_matrix", "parse_permutation",
]

ORACLE_MAX_N = 7


class RankError(ValueError):
    """Raised when two objects of different rank are combined."""


class GuardExceeded(ValueError):
    """Raised when a brute-force routine is asked for too large a rank."""


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class Permutation:
    """An element of S_n; ``entries[p]`` is the image of ``p + 1``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("rank must be at least 1")
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of 1..{len(entries)}: {entries}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        return self.entries[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))

    def __repr__(self) -> str:
        return f"Permutation({self.entries})"

    def __lt__(self, other: Permutation) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.sort_key < other.sort_key

    @functools.cached_property
    def length(self) -> int:
        e = self.entries
        return sum(1 for a in range(len(e)) for b in range(a + 1, len(e)) if e[a] > e[b])

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Global deterministic order: by length, then one-line notation."""
        return (self.length, self.entries)

    @functools.cached_property
    def _rank_table(self) -> tuple[int, ...]:
        # entry (a, b) counts positions p <= a with w(p) >= b, for 1 <= a, b <= n
        n = self.n
        table = []
        for b in range(1, n + 1):
            count = 0
            for a in range(n):
                if self.entries[a] >= b:
                    count += 1
                table.append(count)
        return tuple(table)

    def inverse(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return self.entries == tuple(range(1, self.n + 1))


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation such as ``"3,1,2"``."""
    try:
        entries = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise ValueError(f"cannot parse permutation {text!r}") from None
    return Permutation(entries)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def simple_reflection(i: int, n: int) -> Permutation:
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple reflection s_{i} does not exist in S_{n}")
    e = list(range(1, n + 1))
    e[i - 1], e[i] = e[i], e[i - 1]
    return Permutation(tuple(e))


def longest_element(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


@functools.lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """All of S_n in the global (length, lexicographic) order."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    return tuple(sorted(Permutation(p) for p in _permutations(range(1, n + 1))))


def _check_rank(u: Permutation, v: Permutation) -> None:
    if u.n != v.n:
        raise RankError(f"rank mismatch: S_{u.n} vs S_{v.n}")


def compose(u: Permutation, v: Permutation) -> Permutation:
    _check_rank(u, v)
    return Permutation(tuple(u.entries[x - 1] for x in v.entries))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for pos, val in enumerate(w.entries, start=1):
        inv[val - 1] = pos
    return Permutation(tuple(inv))


def length(w: Permutation) -> int:
    return w.length


def content(w: Permutation) -> int:
    """Number of distinct simple reflections in a reduced word of ``w``."""
    top = 0
    count = 0
    for i, val in enumerate(w.entries[:-1], start=1):
        top = max(top, val)
        if top != i:
            count += 1
    return count


def right_descents(w: Permutation) -> frozenset[int]:
    e = w.entries
    return frozenset(i for i in range(1, w.n) if e[i - 1] > e[i])


def left_descents(w: Permutation) -> frozenset[int]:
    return right_descents(inverse(w))


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Reduced word, obtained by repeatedly stripping the smallest right descent."""
    e = list(w.entries)
    word = []
    while True:
        for i in range(1, len(e)):
            if e[i - 1] > e[i]:
                e[i - 1], e[i] = e[i], e[i - 1]
                word.append(i)
                break
        else:
            break
    word.reverse()
    return tuple(word)


def word_product(word: Iterable[int], n: int) -> Permutation:
    """Product ``s_{a_1} s_{a_2} ... s_{a_k}`` of a word of simple reflections."""
    e = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"simple reflection s_{i} does not exist in S_{n}")
        e[i - 1], e[i] = e[i], e[i - 1]
    return Permutation(tuple(e))


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """Bruhat comparison ``x <= y`` via the rank-matrix criterion."""
    _check_rank(x, y)
    return all(a <= b for a, b in zip(x._rank_table, y._rank_table))


@functools.lru_cache(maxsize=4096)
def _subword_interval(y: Permutation) -> frozenset[tuple[int, ...]]:
    # products of reduced subwords of a fixed reduced word of y; a letter is
    # kept only if it extends the prefix product to a longer element
    reached = {tuple(range(1, y.n + 1))}
    for i in reduced_word(y):
        grown = set()
        for u in reached:
            if u[i - 1] < u[i]:
                v = list(u)
                v[i - 1], v[i] = v[i], v[i - 1]
                grown.add(tuple(v))
        reached |= grown
    return frozenset(reached)


def bruhat_leq_oracle(x: Permutation, y: Permutation) -> bool:
    """Independent Bruhat test: is ``x`` a reduced subword product of ``y``?"""
    _check_rank(x, y)
    if x.n > ORACLE_MAX_N:
        raise GuardExceeded(f"subword oracle limited to n <= {ORACLE_MAX_N}")
    return x.entries in _subword_interval(y)


@functools.lru_cache(maxsize=None)
def bruhat_matrix(n: int) -> np.ndarray:
    """
    Boolean matrix ``M[a, b] = (W[a] <= W[b])`` over ``W = all_permutations(n)``.

    Read-only; used by the brute-force poset routines.
    """
    if n > 6:
        raise GuardExceeded("bruhat_matrix limited to n <= 6")
    tables = np.array([w._rank_table for w in all_permutations(n)], dtype=np.int8)
    mat = (tables[:, None, :] <= tables[None, :, :]).all(axis=2)
    mat.setflags(write=False)
    return mat


@functools.lru_cache(maxsize=None)
def permutation_index(n: int) -> dict[Permutation, int]:
    return {w: k for k, w in enumerate(all_permutations(n))}

