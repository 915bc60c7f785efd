"""
Bigrassmannian permutations, their ``(i, j, k)`` coordinates, the sets
``BM(w)`` / ``sBMt(w)`` and brute-force Bruhat joins.

In type A the bigrassmannian elements are exactly the join-irreducible
elements of the Bruhat order; :func:`join_irreducibles` recomputes them from
the join definition so the two descriptions can be compared.
"""

from __future__ import annotations

import functools
from typing import Iterable, NamedTuple

import numpy as np

from .symmetric_group import (
    GuardExceeded,
    Permutation,
    all_permutations,
    bruhat_leq,
    bruhat_matrix,
    identity,
    left_descents,
    permutation_index,
    right_descents,
)

__all__ = [
    "BigrassCoord", "NotBigrassmannian", "is_bigrassmannian",
    "bigrassmannians", "chain", "chains", "coord_of", "element_of",
    "bm", "bm_st", "join", "join_irreducibles", "chain_size",
]

JOIN_MAX_N = 7
JOIN_IRREDUCIBLES_MAX_N = 5


class NotBigrassmannian(ValueError):
    pass


class BigrassCoord(NamedTuple):
    """Left descent ``i``, right descent ``j`` and chain position ``k``."""

    i: int
    j: int
    k: int


def chain_size(i: int, j: int, n: int) -> int:
    """Expected number of bigrassmannians with descents ``(s_i, s_j)``."""
    return max(0, min(i, j, n - i, n - j))


def is_bigrassmannian(w: Permutation) -> bool:
    return len(left_descents(w)) == 1 and len(right_descents(w)) == 1


def _descent_pair(b: Permutation) -> tuple[int, int]:
    left, right = left_descents(b), right_descents(b)
    if len(left) != 1 or len(right) != 1:
        raise NotBigrassmannian(f"{b} is not bigrassmannian")
    return next(iter(left)), next(iter(right))


@functools.lru_cache(maxsize=None)
def bigrassmannians(n: int) -> tuple[Permutation, ...]:
    """All bigrassmannian elements of S_n, by exhaustive descent scan."""
    if n < 2:
        raise ValueError("bigrassmannians need n >= 2")
    return tuple(w for w in all_permutations(n) if is_bigrassmannian(w))


@functools.lru_cache(maxsize=None)
def chains(n: int) -> dict[tuple[int, int], tuple[Permutation, ...]]:
    """Map ``(i, j)`` to the Bruhat-ascending chain of bigrassmannians."""
    groups: dict[tuple[int, int], list[Permutation]] = {}
    for b in bigrassmannians(n):
        groups.setdefault(_descent_pair(b), []).append(b)
    result = {}
    for key in sorted(groups):
        members = sorted(groups[key], key=lambda w: w.length)
        for lower, upper in zip(members, members[1:]):
            # the coordinate k is only well defined along a chain
            if lower.length == upper.length or not bruhat_leq(lower, upper):
                raise AssertionError(f"bigrassmannians with descents {key} do not form a chain")
        result[key] = tuple(members)
    return result


def chain(i: int, j: int, n: int) -> tuple[Permutation, ...]:
    return chains(n).get((i, j), ())


def coord_of(b: Permutation) -> BigrassCoord:
    i, j = _descent_pair(b)
    return BigrassCoord(i, j, chain(i, j, b.n).index(b))


def element_of(c: BigrassCoord | tuple[int, int, int], n: int) -> Permutation:
    i, j, k = c
    members = chain(i, j, n)
    if not 0 <= k < len(members):
        raise ValueError(f"no bigrassmannian with coordinates {tuple(c)} in S_{n}")
    return members[k]


def _maximal(elements: Iterable[Permutation]) -> frozenset[Permutation]:
    elements = list(elements)
    return frozenset(
        u for u in elements
        if not any(u != v and bruhat_leq(u, v) for v in elements)
    )


@functools.lru_cache(maxsize=65536)
def bm(w: Permutation) -> frozenset[Permutation]:
    """Bruhat-maximal bigrassmannians below ``w``."""
    if w.n < 2:
        return frozenset()
    return _maximal(b for b in bigrassmannians(w.n) if bruhat_leq(b, w))


def bm_st(w: Permutation, s: int, t: int) -> frozenset[Permutation]:
    """Elements of ``bm(w)`` with left descent ``s_s`` and right descent ``s_t``."""
    return frozenset(z for z in bm(w) if _descent_pair(z) == (s, t))


def _minimal_indices(candidates: np.ndarray, mat: np.ndarray) -> np.ndarray:
    sub = mat[np.ix_(candidates, candidates)]
    below = sub & ~np.eye(len(candidates), dtype=bool)
    return candidates[~below.any(axis=0)]


def join(elements: Iterable[Permutation], n: int | None = None) -> Permutation | None:
    """
    Least upper bound in the Bruhat order, or ``None`` if there is none.

    ``n`` is only needed for the empty set, whose join is the identity.
    """
    elements = list(elements)
    if n is None:
        if not elements:
            raise ValueError("rank required for the join of the empty set")
        n = elements[0].n
    if n > JOIN_MAX_N:
        raise GuardExceeded(f"brute-force join limited to n <= {JOIN_MAX_N}")
    if not elements:
        return identity(n)
    perms = all_permutations(n)
    if n <= 6:
        mat = bruhat_matrix(n)
        index = permutation_index(n)
        rows = [index[u] for u in elements]
        upper = np.flatnonzero(mat[rows, :].all(axis=0))
        minimal = _minimal_indices(upper, mat)
        return perms[minimal[0]] if len(minimal) == 1 else None
    upper = [v for v in perms if all(bruhat_leq(u, v) for u in elements)]
    minimal = _minimal(upper)
    return minimal[0] if len(minimal) == 1 else None


def _minimal(elements: list[Permutation]) -> list[Permutation]:
    return [u for u in elements if not any(v != u and bruhat_leq(v, u) for v in elements)]


@functools.lru_cache(maxsize=None)
def join_irreducibles(n: int) -> tuple[Permutation, ...]:
    """
    Join-irreducible elements of S_n, straight from the definition.

    ``w`` is a join of some set avoiding ``w`` iff it is the join of its
    whole strict down-set: every such set lies in the down-set, and a least
    upper bound of a subset that is also an upper bound of the down-set is
    its least upper bound.
    """
    if n > JOIN_IRREDUCIBLES_MAX_N:
        raise GuardExceeded(f"join_irreducibles limited to n <= {JOIN_IRREDUCIBLES_MAX_N}")
    perms = all_permutations(n)
    result = []
    for w in perms:
        below = [u for u in perms if u != w and bruhat_leq(u, w)]
        if join(below, n) != w:
            result.append(w)
    return tuple(result)
