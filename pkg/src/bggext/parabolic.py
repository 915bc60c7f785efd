"""
Standard parabolic subgroups of S_n, coset representatives and special
elements.

A subset ``J`` of ``{1, ..., n-1}`` generates the subgroup ``W_J``.  Cosets
``W_J * w`` ("left", the subgroup acts from the left) are detected by left
descents; cosets ``w * W_J`` ("right") by right descents.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Literal

from .symmetric_group import (
    GuardExceeded,
    Permutation,
    all_permutations,
    compose,
    identity,
    inverse,
    left_descents,
)

__all__ = [
    "ParabolicSubset", "parse_parabolic", "subgroup_elements",
    "longest_in_parabolic", "x_long", "x_short", "coset_long_rep",
    "coset_short_rep", "is_special", "segments", "all_parabolics", "relabel_by_w0",
]

Side = Literal["left", "right"]
SUBGROUP_MAX_N = 8


@dataclass(frozen=True)
class ParabolicSubset:
    simples: frozenset[int]
    n: int

    def __post_init__(self):
        simples = frozenset(int(i) for i in self.simples)
        object.__setattr__(self, "simples", simples)
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        bad = sorted(i for i in simples if not 1 <= i <= self.n - 1)
        if bad:
            raise ValueError(f"simple reflections {bad} do not exist in S_{self.n}")

    @property
    def rank(self) -> int:
        return len(self.simples)

    def __str__(self) -> str:
        return ",".join(map(str, sorted(self.simples)))

    def __iter__(self):
        return iter(sorted(self.simples))


def parse_parabolic(text: str, n: int) -> ParabolicSubset:
    """``"1,3"`` -> ``{s1, s3}``; the empty string is the trivial parabolic."""
    text = text.replace(" ", "")
    if not text:
        return ParabolicSubset(frozenset(), n)
    try:
        simples = frozenset(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse parabolic subset {text!r}") from None
    return ParabolicSubset(simples, n)


def all_parabolics(n: int) -> list[ParabolicSubset]:
    gens = range(1, n)
    return [
        ParabolicSubset(frozenset(i for i in gens if mask >> (i - 1) & 1), n)
        for mask in range(2 ** (n - 1))
    ]


def segments(J: ParabolicSubset) -> list[tuple[int, int]]:
    """Maximal runs ``[a, b]`` of positions permuted by ``W_J`` (``b - a + 1`` points)."""
    runs = []
    start = 1
    for i in range(1, J.n):
        if i not in J.simples:
            runs.append((start, i))
            start = i + 1
    runs.append((start, J.n))
    return runs


@functools.lru_cache(maxsize=None)
def subgroup_elements(J: ParabolicSubset) -> frozenset[Permutation]:
    """Closure of ``{s_i : i in J}`` under multiplication."""
    if J.n > SUBGROUP_MAX_N:
        raise GuardExceeded(f"subgroup enumeration limited to n <= {SUBGROUP_MAX_N}")
    start = identity(J.n).entries
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for i in J.simples:
                v = list(u)
                v[i - 1], v[i] = v[i], v[i - 1]
                v = tuple(v)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(Permutation(u) for u in seen)


def longest_in_parabolic(J: ParabolicSubset) -> Permutation:
    entries: list[int] = []
    for a, b in segments(J):
        entries.extend(range(b, a - 1, -1))
    return Permutation(tuple(entries))


@functools.lru_cache(maxsize=None)
def x_short(J: ParabolicSubset) -> frozenset[Permutation]:
    """Shortest representatives of the cosets ``W_J * w``."""
    return frozenset(w for w in all_permutations(J.n) if not left_descents(w) & J.simples)


@functools.lru_cache(maxsize=None)
def x_long(J: ParabolicSubset) -> frozenset[Permutation]:
    """Longest representatives of the cosets ``W_J * w``."""
    return frozenset(w for w in all_permutations(J.n) if J.simples <= left_descents(w))


def _coset_rep(w: Permutation, J: ParabolicSubset, side: Side, longest: bool) -> Permutation:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    e = list(w.entries)
    while True:
        for i in sorted(J.simples):
            if side == "right":
                # w * s_i swaps positions i, i+1
                descent = e[i - 1] > e[i]
                if descent != longest:
                    e[i - 1], e[i] = e[i], e[i - 1]
                    break
            else:
                # s_i * w swaps values i, i+1
                p, q = e.index(i), e.index(i + 1)
                descent = p > q
                if descent != longest:
                    e[p], e[q] = e[q], e[p]
                    break
        else:
            return Permutation(tuple(e))


def coset_long_rep(w: Permutation, J: ParabolicSubset, side: Side) -> Permutation:
    """Longest element of ``W_J * w`` (``side="left"``) or ``w * W_J`` (``"right"``)."""
    return _coset_rep(w, J, side, longest=True)


def coset_short_rep(w: Permutation, J: ParabolicSubset, side: Side) -> Permutation:
    """Shortest element of ``W_J * w`` (``side="left"``) or ``w * W_J`` (``"right"``)."""
    return _coset_rep(w, J, side, longest=False)


@functools.lru_cache(maxsize=65536)
def is_special(y: Permutation, P: ParabolicSubset) -> ParabolicSubset | None:
    """
    Return ``Q`` with ``W_P * y == y * W_Q`` if the conjugate ``y^-1 W_P y``
    is a standard parabolic subgroup, else ``None``.
    """
    y_inv = inverse(y)
    conj = frozenset(compose(compose(y_inv, u), y) for u in subgroup_elements(P))
    simples = frozenset(
        i for i in range(1, P.n)
        if any(c.length == 1 and c.entries[i - 1] == i + 1 for c in conj)
    )
    Q = ParabolicSubset(simples, P.n)
    return Q if subgroup_elements(Q) == conj else None


def relabel_by_w0(P: ParabolicSubset) -> ParabolicSubset:
    """The subset indexing ``w0 * W_P * w0``."""
    return ParabolicSubset(frozenset(P.n - i for i in P.simples), P.n)
