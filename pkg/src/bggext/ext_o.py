"""
First extensions from simple modules to Verma modules in (regular and
singular) blocks of type A category O, and socles of Verma cokernels.

Everything here is index data.  A graded answer lists the integers ``i`` with
``ext^1(L_x, Delta_y<i>) != 0`` when both graded lifts have their top in
degree 0 (:data:`TOP_DEGREE_ZERO`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .bruhat_base import NotBigrassmannian, bigrassmannians, bm, coord_of, is_bigrassmannian
from .cells import penultimate_cell, phi
from .parabolic import ParabolicSubset, coset_long_rep, coset_short_rep
from .symmetric_group import (
    Permutation,
    RankError,
    bruhat_leq,
    compose,
    content,
    identity,
    longest_element,
)

__all__ = [
    "Status", "GradedExtAnswer", "SocleEntry", "TOP_DEGREE_ZERO",
    "m_degree", "to_top_degree", "socle_coker_verma", "socle_coker_verma_bm_difference",
    "has_simple_socle_coker", "ext1_simple_to_verma", "ext1_singular",
    "antidominant_degree",
]

TOP_DEGREE_ZERO = "top-degree-0"


class Status(str, enum.Enum):
    EXACT = "exact"
    ZERO = "zero"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class GradedExtAnswer:
    """
    ``dim`` is ``None`` only for unknown answers; ``degrees`` is ``None``
    when the graded lift is not determined.  ``block_degrees`` carries a
    second degree report where two normalizations are in play.
    """

    status: Status
    dim: int | None
    degrees: tuple[int, ...] | None
    normalization: str = TOP_DEGREE_ZERO
    block_degrees: tuple[int, ...] | None = None

    def __post_init__(self):
        if (self.status is Status.ZERO) != (self.dim == 0):
            raise ValueError(f"inconsistent answer: status {self.status.value}, dim {self.dim}")
        if self.status is Status.UNKNOWN and (self.dim is not None or self.degrees is not None):
            raise ValueError("unknown answers carry no dimension or degrees")

    @classmethod
    def zero(cls, normalization: str = TOP_DEGREE_ZERO) -> GradedExtAnswer:
        return cls(Status.ZERO, 0, (), normalization)

    @classmethod
    def unknown(cls, normalization: str = TOP_DEGREE_ZERO) -> GradedExtAnswer:
        return cls(Status.UNKNOWN, None, None, normalization)

    @classmethod
    def exact(cls, dim: int, degrees: tuple[int, ...] | None,
              normalization: str = TOP_DEGREE_ZERO, block_degrees=None) -> GradedExtAnswer:
        if dim == 0:
            return cls.zero(normalization)
        return cls(Status.EXACT, dim, degrees, normalization, block_degrees)


class SocleEntry(NamedTuple):
    """Simple ``L_x`` in the socle, in graded position ``m``."""

    x: Permutation
    m: int


def m_degree(b: Permutation) -> int:
    """Graded position of the socle constituent attached to a bigrassmannian."""
    if not is_bigrassmannian(b):
        raise NotBigrassmannian(f"{b} is not bigrassmannian")
    n = b.n
    i, j, k = coord_of(b)
    return (n - 1) * (n - 2) // 2 + abs(i - j) + 2 * k


def to_top_degree(m: int, ell_y: int) -> int:
    """
    Convert ``ext^1(L_x<-m>, Delta_y<-l(y)>) != 0`` into the ``i`` with
    ``ext^1(L_x, Delta_y<i>) != 0``.
    """
    return m - ell_y


def antidominant_degree(n: int, ell_y: int) -> int:
    """Degree of the extension from the antidominant simple to ``Delta_y``."""
    return longest_element(n).length - ell_y - 2


def _check_rank(x: Permutation, y: Permutation) -> None:
    if x.n != y.n:
        raise RankError(f"rank mismatch: S_{x.n} vs S_{y.n}")


def socle_coker_verma(v: Permutation, w: Permutation) -> frozenset[SocleEntry]:
    """Socle of ``Delta_v / Delta_w`` for ``v <= w``."""
    _check_rank(v, w)
    if not bruhat_leq(v, w):
        raise ValueError(f"{v} is not below {w} in the Bruhat order")
    if w.n < 3:
        if w.n == 2 and v != w:
            # S_2 has no penultimate cell; the quotient is L_e
            raise ValueError("socles are indexed by the penultimate cell, which needs n >= 3")
        return frozenset()
    restricted = [b for b in _below(w) if not bruhat_leq(b, v)]
    top = [b for b in restricted if not any(b != c and bruhat_leq(b, c) for c in restricted)]
    return frozenset(SocleEntry(phi(b), m_degree(b)) for b in top)


def socle_coker_verma_bm_difference(v: Permutation, w: Permutation) -> frozenset[SocleEntry]:
    """The same socle, read off ``BM(w) \\ BM(v)`` directly."""
    _check_rank(v, w)
    return frozenset(SocleEntry(phi(b), m_degree(b)) for b in bm(w) - bm(v))


def _below(w: Permutation) -> list[Permutation]:
    return [b for b in bigrassmannians(w.n) if bruhat_leq(b, w)]


def has_simple_socle_coker(w: Permutation) -> bool:
    if w.is_identity():
        raise ValueError("Delta_e / Delta_e is zero")
    simple = is_bigrassmannian(w)
    if simple != (len(socle_coker_verma(identity(w.n), w)) == 1):
        raise AssertionError(f"socle count disagrees with the bigrassmannian test at {w}")
    return simple


def _require_penultimate(n: int) -> None:
    if n < 3:
        raise ValueError("only the antidominant simple is covered for n < 3")


def _phi_witnesses(x: Permutation, y: Permutation) -> list[Permutation]:
    return [b for b in bm(y) if phi(b) == x]


def ext1_simple_to_verma(x: Permutation, y: Permutation) -> GradedExtAnswer:
    """``ext^1(L_x, Delta_y<i>)`` in the regular block."""
    _check_rank(x, y)
    n = x.n
    w0 = longest_element(n)
    if x == w0:
        return GradedExtAnswer.exact(content(compose(w0, y)), (antidominant_degree(n, y.length),))
    _require_penultimate(n)
    if x not in penultimate_cell(n):
        return GradedExtAnswer.zero()
    witnesses = _phi_witnesses(x, y)
    if len(witnesses) > 1:
        raise AssertionError(f"{x} occurs {len(witnesses)} times in phi(BM({y}))")
    if not witnesses:
        return GradedExtAnswer.zero()
    return GradedExtAnswer.exact(1, (to_top_degree(m_degree(witnesses[0]), y.length),))


def ext1_singular(x: Permutation, y: Permutation, stab: ParabolicSubset) -> GradedExtAnswer:
    """
    ``ext^1(L(x.lambda), Delta(y.lambda)<i>)`` in the singular block whose
    dot-stabilizer is ``W_stab``; ``x`` and ``y`` may be any coset members.
    """
    _check_rank(x, y)
    if stab.n != x.n:
        raise RankError(f"stabilizer lives in S_{stab.n}, elements in S_{x.n}")
    n = x.n
    w0 = longest_element(n)
    x_bar = coset_long_rep(x, stab, "right")
    y_low = coset_short_rep(y, stab, "right")
    if x_bar == w0:
        # only the dimension is available for the antidominant simple
        dim = content(compose(x_bar, y_low)) - stab.rank
        if dim == 0:
            return GradedExtAnswer.zero()
        degrees = (antidominant_degree(n, y_low.length),) if stab.rank == 0 else None
        return GradedExtAnswer.exact(dim, degrees)
    _require_penultimate(n)
    witnesses = _phi_witnesses(x_bar, y_low)
    if not witnesses:
        return GradedExtAnswer.zero()
    if len(witnesses) > 1:
        raise AssertionError(f"{x_bar} occurs {len(witnesses)} times in phi(BM({y_low}))")
    return GradedExtAnswer.exact(1, (to_top_degree(m_degree(witnesses[0]), y_low.length),))
