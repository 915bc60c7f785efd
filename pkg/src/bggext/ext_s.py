"""
First extensions in the S-subcategory attached to a parabolic subset ``p``.

Simples, proper standard and standard objects are indexed by the longest
coset representatives ``x_long(p)``.  Proper standard answers are complete
in type A.  Standard answers are complete only for special ``y``;
otherwise the status is :attr:`Status.UNKNOWN`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .bruhat_base import bm
from .cells import penultimate_cell, phi
from .ext_o import (
    GradedExtAnswer,
    SocleEntry,
    antidominant_degree,
    m_degree,
    socle_coker_verma,
    to_top_degree,
)
from .parabolic import (
    ParabolicSubset,
    coset_long_rep,
    coset_short_rep,
    is_special,
    longest_in_parabolic,
    x_long,
)
from .symmetric_group import Permutation, bruhat_leq, compose, content, longest_element

__all__ = [
    "SCategoryContext", "S_STANDARD_NORMALIZATION",
    "ext1_simple_to_proper_standard", "socle_coker_proper_standard",
    "ext1_simple_to_standard", "standard_special_branch",
]

# block degree shifted by l(w0^p); pinned by a single graded table entry
S_STANDARD_NORMALIZATION = "top-degree-0+l(w0p)"


@dataclass(frozen=True)
class SCategoryContext:
    p: ParabolicSubset

    @property
    def n(self) -> int:
        return self.p.n

    @functools.cached_property
    def w0p(self) -> Permutation:
        return longest_in_parabolic(self.p)

    @functools.cached_property
    def xlong(self) -> frozenset[Permutation]:
        return x_long(self.p)

    def short(self, y: Permutation) -> Permutation:
        """The shortest representative ``w0p * y`` of the coset of ``y``."""
        return compose(self.w0p, y)

    def check(self, *elements: Permutation) -> None:
        for w in elements:
            if w.n != self.n or w not in self.xlong:
                raise ValueError(f"{w} is not a longest coset representative for p = {{{self.p}}}")


def ext1_simple_to_proper_standard(ctx: SCategoryContext, x: Permutation, y: Permutation) -> GradedExtAnswer:
    """
    ``ext^1(L^p_x, proper-standard^p_y<i>)``.

    The socle condition is evaluated at the short representative
    ``w0p * y``; at ``y`` itself it disagrees with the sl3 table.
    """
    ctx.check(x, y)
    n = ctx.n
    w0 = longest_element(n)
    y_short = ctx.short(y)
    if x == w0:
        return GradedExtAnswer.exact(content(compose(w0, y_short)), (antidominant_degree(n, y.length),))
    if n < 3:
        raise ValueError("only the antidominant simple is covered for n < 3")
    witnesses = [b for b in bm(y_short) if phi(b) == x]
    if not witnesses:
        return GradedExtAnswer.zero()
    if len(witnesses) > 1:
        raise AssertionError(f"{x} occurs {len(witnesses)} times in phi(BM({y_short}))")
    return GradedExtAnswer.exact(1, (to_top_degree(m_degree(witnesses[0]), y.length),))


def socle_coker_proper_standard(ctx: SCategoryContext, x: Permutation, y: Permutation) -> frozenset[SocleEntry]:
    """Socle of the quotient of proper standards indexed by ``y`` over ``x`` (``x >= y``)."""
    ctx.check(x, y)
    if not bruhat_leq(y, x):
        raise ValueError(f"{x} is not above {y} in the Bruhat order")
    return frozenset(
        e for e in socle_coker_verma(ctx.short(y), ctx.short(x)) if e.x in ctx.xlong
    )


def ext1_simple_to_standard(ctx: SCategoryContext, x: Permutation, y: Permutation) -> GradedExtAnswer:
    """
    ``ext^1(L^p_x, standard^p_y<i>)`` for special ``y``; unknown otherwise.

    Nonzero middle-branch answers report degrees in
    :data:`S_STANDARD_NORMALIZATION` and the singular-block degree in
    ``block_degrees``.  Antidominant answers carry no degrees.
    """
    ctx.check(x, y)
    tag = S_STANDARD_NORMALIZATION
    n = ctx.n
    w0 = longest_element(n)
    if x == w0 and y == w0:
        return GradedExtAnswer.zero(tag)
    if y == ctx.w0p and x != w0:
        return GradedExtAnswer.zero(tag)
    if x != w0 and (n < 3 or x not in penultimate_cell(n)):
        return GradedExtAnswer.zero(tag)
    stab = is_special(y, ctx.p)
    if stab is None:
        return GradedExtAnswer.unknown(tag)
    return standard_special_branch(ctx, x, y, stab)


def standard_special_branch(ctx: SCategoryContext, x: Permutation, y: Permutation,
                            stab: ParabolicSubset) -> GradedExtAnswer:
    """
    The singular-block formula for special ``y`` with ``W_p y = y W_stab``,
    without the vanishing shortcuts applied by :func:`ext1_simple_to_standard`.
    """
    tag = S_STANDARD_NORMALIZATION
    w0 = longest_element(ctx.n)
    x_bar = coset_long_rep(x, stab, "right")
    y_low = coset_short_rep(y, stab, "right")
    if y_low != ctx.short(y):
        raise AssertionError(f"short representatives disagree for special {y}")
    if x_bar == w0:
        if x != w0:
            return GradedExtAnswer.zero(tag)
        return GradedExtAnswer.exact(content(compose(x_bar, y_low)) - stab.rank, None, tag)
    if x != x_bar:
        # translation onto the wall kills L_x
        return GradedExtAnswer.zero(tag)
    if ctx.n < 3:
        raise ValueError("only the antidominant simple is covered for n < 3")
    witnesses = [b for b in bm(y_low) if phi(b) == x_bar]
    if not witnesses:
        return GradedExtAnswer.zero(tag)
    if len(witnesses) > 1:
        raise AssertionError(f"{x_bar} occurs {len(witnesses)} times in phi(BM({y_low}))")
    block = to_top_degree(m_degree(witnesses[0]), y_low.length)
    return GradedExtAnswer.exact(1, (block + ctx.w0p.length,), tag, block_degrees=(block,))
