"""
Robinson-Schensted correspondence and Kazhdan-Lusztig cells of S_n.

Cells are read off tableaux: same recording tableau for left cells, same
insertion tableau for right cells, same shape for two-sided cells.  The
penultimate cell ``J`` is the image of the small cell (the two-sided cell of
the simple reflections) under ``w -> w0 * w``.  Its elements are indexed by
pairs of simple reflections through their unique left and right ascents.
"""

from __future__ import annotations

import bisect
import functools
from dataclasses import dataclass

from .bruhat_base import NotBigrassmannian, is_bigrassmannian
from .symmetric_group import (
    Permutation,
    RankError,
    all_permutations,
    compose,
    left_descents,
    longest_element,
    right_descents,
    simple_reflection,
)

__all__ = [
    "StandardTableau", "Shape", "rsk", "shape", "same_left_cell",
    "same_right_cell", "same_two_sided_cell", "cell_of_shape", "two_sided_cells",
    "small_cell", "penultimate_cell", "left_ascents", "right_ascents",
    "w_st", "phi", "hook_shape",
]

Shape = tuple[int, ...]


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Shape:
        return tuple(len(r) for r in self.rows)

    def is_standard(self) -> bool:
        rows = self.rows
        if any(list(r) != sorted(r) or len(set(r)) != len(r) for r in rows):
            return False
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper) or any(lower[c] <= upper[c] for c in range(len(lower))):
                return False
        entries = sorted(e for r in rows for e in r)
        return entries == list(range(1, len(entries) + 1))

    def __str__(self) -> str:
        return "/".join(" ".join(map(str, r)) for r in self.rows)


def rsk(w: Permutation) -> tuple[StandardTableau, StandardTableau]:
    """Row insertion of the one-line word; returns (insertion, recording)."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(w.entries, start=1):
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([value])
                q_rows.append([step])
                break
            current = p_rows[row]
            pos = bisect.bisect_right(current, value)
            if pos == len(current):
                current.append(value)
                q_rows[row].append(step)
                break
            current[pos], value = value, current[pos]
            row += 1
    return (
        StandardTableau(tuple(tuple(r) for r in p_rows)),
        StandardTableau(tuple(tuple(r) for r in q_rows)),
    )


def shape(w: Permutation) -> Shape:
    return rsk(w)[0].shape


def _same_rank(x: Permutation, y: Permutation) -> None:
    if x.n != y.n:
        raise RankError(f"rank mismatch: S_{x.n} vs S_{y.n}")


def same_left_cell(x: Permutation, y: Permutation) -> bool:
    _same_rank(x, y)
    return rsk(x)[1] == rsk(y)[1]


def same_right_cell(x: Permutation, y: Permutation) -> bool:
    _same_rank(x, y)
    return rsk(x)[0] == rsk(y)[0]


def same_two_sided_cell(x: Permutation, y: Permutation) -> bool:
    _same_rank(x, y)
    return shape(x) == shape(y)


@functools.lru_cache(maxsize=None)
def two_sided_cells(n: int) -> dict[Shape, frozenset[Permutation]]:
    cells: dict[Shape, set[Permutation]] = {}
    for w in all_permutations(n):
        cells.setdefault(shape(w), set()).add(w)
    return {sh: frozenset(ws) for sh, ws in cells.items()}


def cell_of_shape(n: int, parts: Shape) -> frozenset[Permutation]:
    return two_sided_cells(n).get(tuple(parts), frozenset())


def hook_shape(n: int) -> Shape:
    """The shape ``(2, 1, ..., 1)`` of the penultimate cell."""
    return (2,) + (1,) * (n - 2)


def _require_rank(n: int) -> None:
    if n < 3:
        raise ValueError("the small and penultimate cells need n >= 3")


@functools.lru_cache(maxsize=None)
def small_cell(n: int) -> frozenset[Permutation]:
    _require_rank(n)
    return cell_of_shape(n, shape(simple_reflection(1, n)))


@functools.lru_cache(maxsize=None)
def penultimate_cell(n: int) -> frozenset[Permutation]:
    _require_rank(n)
    w0 = longest_element(n)
    cell = frozenset(compose(w0, u) for u in small_cell(n))
    if cell != cell_of_shape(n, hook_shape(n)):
        raise AssertionError(f"w0 * (small cell) is not the hook-shape class in S_{n}")
    return cell


def left_ascents(w: Permutation) -> frozenset[int]:
    return frozenset(range(1, w.n)) - left_descents(w)


def right_ascents(w: Permutation) -> frozenset[int]:
    return frozenset(range(1, w.n)) - right_descents(w)


@functools.lru_cache(maxsize=None)
def _ascent_index(n: int) -> dict[tuple[int, int], Permutation]:
    index: dict[tuple[int, int], Permutation] = {}
    for x in sorted(penultimate_cell(n)):
        left, right = left_ascents(x), right_ascents(x)
        if len(left) != 1 or len(right) != 1:
            raise AssertionError(f"{x} in the penultimate cell has ascents {set(left)}, {set(right)}")
        key = (next(iter(left)), next(iter(right)))
        if key in index:
            raise AssertionError(f"two penultimate-cell elements with ascents {key}")
        index[key] = x
    if len(index) != (n - 1) ** 2:
        raise AssertionError("ascent pairs do not exhaust the penultimate cell")
    return index


def w_st(s: int, t: int, n: int) -> Permutation:
    """The element of the penultimate cell whose only left ascent is ``s_s``
    and whose only right ascent is ``s_t``."""
    _require_rank(n)
    if not (1 <= s <= n - 1 and 1 <= t <= n - 1):
        raise ValueError(f"simple reflections s_{s}, s_{t} do not exist in S_{n}")
    return _ascent_index(n)[(s, t)]


def phi(b: Permutation) -> Permutation:
    """Send a bigrassmannian with descents ``(s, t)`` to ``w_st(s, t)``."""
    if not is_bigrassmannian(b):
        raise NotBigrassmannian(f"{b} is not bigrassmannian")
    (s,), (t,) = left_descents(b), right_descents(b)
    return w_st(s, t, b.n)
