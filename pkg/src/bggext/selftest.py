"""
Invariant battery shared by ``bggext selftest`` and the test suite.

Each check takes a rank ``n`` and returns ``None`` on success or a short
description of the first counterexample, scanning elements in the global
order so the reported counterexample is the smallest one.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product
from math import factorial, prod
from typing import Callable, Iterable, Iterator

from . import bruhat_base as bb
from . import cells
from . import ext_o
from . import ext_s
from . import parabolic as par
from .symmetric_group import (
    Permutation,
    all_permutations,
    bruhat_leq,
    bruhat_leq_oracle,
    compose,
    content,
    identity,
    inverse,
    left_descents,
    longest_element,
    reduced_word,
    right_descents,
    simple_reflection,
    word_product,
)

__all__ = ["Check", "CHECKS", "run_selftest", "first_failure"]


@dataclass(frozen=True)
class Check:
    name: str
    fn: Callable[[int], str | None]
    min_n: int = 3
    max_n: int = 7


def first_failure(cases: Iterable[tuple[bool, str]]) -> str | None:
    for ok, label in cases:
        if not ok:
            return label
    return None


def _pairs(n: int) -> Iterator[tuple[Permutation, Permutation]]:
    perms = all_permutations(n)
    return product(perms, perms)


def check_words(n: int) -> str | None:
    def cases():
        for w in all_permutations(n):
            word = reduced_word(w)
            yield (word_product(word, n) == w and len(word) == w.length
                   and content(w) == len(set(word))
                   and (content(w) == w.length) == (len(set(word)) == len(word))), f"w={w}"
    return first_failure(cases())


def check_length_laws(n: int) -> str | None:
    w0 = longest_element(n)
    gens = [simple_reflection(i, n) for i in range(1, n)]

    def cases():
        for w in all_permutations(n):
            yield compose(w0, w).length == w0.length - w.length, f"w0*w, w={w}"
            yield left_descents(w) == right_descents(inverse(w)), f"descents, w={w}"
            for s in gens:
                yield compose(w, s).length <= w.length + 1, f"l(ws)<=l(w)+1, w={w}, s={s}"
        for i in range(1, n):
            lhs = compose(compose(w0, simple_reflection(i, n)), w0)
            yield lhs == simple_reflection(n - i, n), f"w0 s_{i} w0"
    return first_failure(cases())


def check_bruhat_oracle(n: int, samples: int = 2000, seed: int = 0) -> str | None:
    perms = all_permutations(n)
    if n <= 5:
        pairs: Iterable = _pairs(n)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(perms), rng.choice(perms)) for _ in range(samples))
    return first_failure(
        (bruhat_leq(x, y) == bruhat_leq_oracle(x, y), f"x={x}, y={y}") for x, y in pairs
    )


def check_bruhat_poset(n: int) -> str | None:
    perms = all_permutations(n)

    def cases():
        for x, y in _pairs(n):
            if bruhat_leq(x, y):
                yield x.length < y.length or x == y, f"length, x={x}, y={y}"
                yield not bruhat_leq(y, x) or x == y, f"antisymmetry, x={x}, y={y}"
        if n <= 4:
            for x, y, z in product(perms, repeat=3):
                if bruhat_leq(x, y) and bruhat_leq(y, z):
                    yield bruhat_leq(x, z), f"transitivity, {x} {y} {z}"
    return first_failure(cases())


def check_chains(n: int) -> str | None:
    def cases():
        for i, j in product(range(1, n), repeat=2):
            members = bb.chain(i, j, n)
            yield len(members) == bb.chain_size(i, j, n), f"|{i}B{j}|={len(members)}"
            yield all(bruhat_leq(a, b) for a, b in zip(members, members[1:])), f"{i}B{j} not a chain"
        for b in bb.bigrassmannians(n):
            yield bb.element_of(bb.coord_of(b), n) == b, f"round trip {b}"
    return first_failure(cases())


def check_join_irreducibles(n: int) -> str | None:
    if n > 5:
        return None
    got, want = bb.join_irreducibles(n), bb.bigrassmannians(n)
    return None if got == want else f"join-irreducibles {set(map(str, got)) ^ set(map(str, want))}"


def check_join_of_bm(n: int) -> str | None:
    if n > 5:
        return None
    return first_failure((bb.join(bb.bm(w), n) == w, f"w={w}") for w in all_permutations(n))


def check_bm_structure(n: int) -> str | None:
    B = bb.bigrassmannians(n)

    def cases():
        for w in all_permutations(n):
            top = bb.bm(w)
            yield (w.is_identity() == (not top)), f"empty BM, w={w}"
            yield all(not bruhat_leq(a, b) for a in top for b in top if a != b), f"antichain, w={w}"
            keys = [bb.coord_of(b)[:2] for b in top]
            yield len(keys) == len(set(keys)), f"two BM elements in one chain, w={w}"
            if n <= 5:
                for b in B:
                    yield bruhat_leq(b, w) == any(bruhat_leq(b, c) for c in top), f"down-set, b={b}, w={w}"
    return first_failure(cases())


def check_rsk(n: int) -> str | None:
    seen = set()

    def cases():
        for w in all_permutations(n):
            p, q = cells.rsk(w)
            yield p.shape == q.shape and p.is_standard() and q.is_standard(), f"tableaux of {w}"
            yield cells.rsk(inverse(w)) == (q, p), f"inverse symmetry, w={w}"
            yield (p, q) not in seen, f"rsk not injective at {w}"
            seen.add((p, q))
    return first_failure(cases())


def check_penultimate(n: int) -> str | None:
    w0 = longest_element(n)
    J = cells.penultimate_cell(n)
    hook = cells.cell_of_shape(n, cells.hook_shape(n))

    def cases():
        yield J == hook, "penultimate cell is not the hook class"
        yield len(J) == (n - 1) ** 2, f"|J|={len(J)}"
        yield all(compose(w0, u) in J for u in cells.small_cell(n)), "w0 * small cell"
        images = {cells.w_st(s, t, n) for s in range(1, n) for t in range(1, n)}
        yield images == J, "w_st is not onto the penultimate cell"
        for x in sorted(J):
            yield len(cells.left_ascents(x)) == 1 == len(cells.right_ascents(x)), f"ascents of {x}"
    return first_failure(cases())


def check_graded_injectivity(n: int) -> str | None:
    seen: dict[tuple[Permutation, int], Permutation] = {}

    def cases():
        for b in bb.bigrassmannians(n):
            key = (cells.phi(b), ext_o.m_degree(b))
            yield key not in seen, f"{b} and {seen.get(key)} share (phi, m)"
            seen[key] = b
        for members in bb.chains(n).values():
            ms = [ext_o.m_degree(b) for b in members]
            yield all(a < b for a, b in zip(ms, ms[1:])), f"m not increasing along {members[0]}"
    return first_failure(cases())


def check_parabolic(n: int) -> str | None:
    if n > 6:
        return None

    def cases():
        for J in par.all_parabolics(n):
            w0p = par.longest_in_parabolic(J)
            W_J = par.subgroup_elements(J)
            size = prod(factorial(b - a + 1) for a, b in par.segments(J))
            yield len(W_J) == size, f"|W_J|, J={{{J}}}"
            yield w0p == max(W_J, key=lambda u: u.length), f"w0^J, J={{{J}}}"
            long_, short = par.x_long(J), par.x_short(J)
            yield len(long_) == factorial(n) // size, f"|x_long|, J={{{J}}}"
            yield long_ == {compose(w0p, u) for u in short}, f"x_long = w0^J x_short, J={{{J}}}"
            yield all(compose(w0p, u).length == w0p.length + u.length for u in short), f"lengths add, J={{{J}}}"
            if n <= 5:
                facts = {compose(u, v) for u in W_J for v in short}
                yield len(facts) == factorial(n), f"unique factorization, J={{{J}}}"
    return first_failure(cases())


def check_special(n: int) -> str | None:
    if n > 5:
        return None
    w0 = longest_element(n)

    def cases():
        for P in par.all_parabolics(n):
            for u in sorted(par.subgroup_elements(P)):
                yield par.is_special(u, P) is not None, f"{u} in W_P not special, P={{{P}}}"
            yield par.is_special(w0, P) == par.relabel_by_w0(P), f"w0 special, P={{{P}}}"
            for y in all_permutations(n):
                Q = par.is_special(y, P)
                if Q is not None:
                    ok = len(par.subgroup_elements(Q)) == len(par.subgroup_elements(P))
                    ok = ok and {compose(u, y) for u in par.subgroup_elements(P)} == {
                        compose(y, v) for v in par.subgroup_elements(Q)}
                    yield ok, f"special {y}, P={{{P}}}"
    return first_failure(cases())


def check_verma_ext(n: int) -> str | None:
    if n > 6:
        return None
    J = cells.penultimate_cell(n)
    w0 = longest_element(n)

    def cases():
        for y in all_permutations(n):
            for x in all_permutations(n):
                if x == w0:
                    continue
                a = ext_o.ext1_simple_to_verma(x, y)
                yield a.dim in (0, 1) and (a.dim == 0 or x in J), f"x={x}, y={y}"
                if x in J:
                    (s,), (t,) = cells.left_ascents(x), cells.right_ascents(x)
                    yield a.dim == len(bb.bm_st(y, s, t)) <= 1, f"sBMt bound, x={x}, y={y}"
        yield ext_o.ext1_simple_to_verma(w0, w0).dim == 0, "antidominant self-extension"
    return first_failure(cases())


def check_socles(n: int) -> str | None:
    if n > 5:
        return None
    e = identity(n)

    def cases():
        for w in all_permutations(n):
            if not w.is_identity():
                top = ext_o.socle_coker_verma(e, w)
                yield len(top) == len(bb.bm(w)), f"socle vs BM, w={w}"
                yield (len(top) == 1) == bb.is_bigrassmannian(w), f"simple socle, w={w}"
            for v in all_permutations(n):
                if bruhat_leq(v, w):
                    yield (ext_o.socle_coker_verma(v, w)
                           == ext_o.socle_coker_verma_bm_difference(v, w)), f"v={v}, w={w}"
    return first_failure(cases())


def check_singular_reduction(n: int) -> str | None:
    if n > 4:
        return None
    empty = par.ParabolicSubset(frozenset(), n)
    return first_failure(
        (ext_o.ext1_singular(x, y, empty) == ext_o.ext1_simple_to_verma(x, y), f"x={x}, y={y}")
        for x, y in _pairs(n)
    )


def check_trivial_parabolic(n: int) -> str | None:
    if n > 4:
        return None
    ctx = ext_s.SCategoryContext(par.ParabolicSubset(frozenset(), n))

    def cases():
        for x, y in _pairs(n):
            ref = ext_o.ext1_simple_to_verma(x, y)
            yield ext_s.ext1_simple_to_proper_standard(ctx, x, y) == ref, f"proper standard, x={x}, y={y}"
            std = ext_s.ext1_simple_to_standard(ctx, x, y)
            same = std.status == ref.status and std.dim == ref.dim
            if ref.status is ext_o.Status.EXACT and x != longest_element(n):
                same = same and std.block_degrees == ref.degrees
            yield same, f"standard, x={x}, y={y}"
    return first_failure(cases())


def check_proper_standard(n: int) -> str | None:
    if n > 5:
        return None
    w0 = longest_element(n)

    def cases():
        for P in par.all_parabolics(n):
            ctx = ext_s.SCategoryContext(P)
            xl = sorted(ctx.xlong)
            for y in xl:
                top = ext_s.socle_coker_proper_standard(ctx, y, ctx.w0p)
                anti = ext_s.ext1_simple_to_proper_standard(ctx, w0, y)
                yield anti.dim == ext_o.ext1_simple_to_verma(w0, ctx.short(y)).dim, \
                    f"antidominant, P={{{P}}}, y={y}"
                for x in xl:
                    if x == w0:
                        continue
                    a = ext_s.ext1_simple_to_proper_standard(ctx, x, y)
                    from_socle = sorted(e.m - y.length for e in top if e.x == x)
                    yield (a.dim == len(from_socle)
                           and list(a.degrees) == from_socle), f"formula vs socle, P={{{P}}}, x={x}, y={y}"
    return first_failure(cases())


def check_standard(n: int) -> str | None:
    if n > 5:
        return None
    w0 = longest_element(n)
    J = cells.penultimate_cell(n)

    def cases():
        for P in par.all_parabolics(n):
            ctx = ext_s.SCategoryContext(P)
            xl = sorted(ctx.xlong)
            for x in xl:
                if x != w0:
                    a = ext_s.ext1_simple_to_standard(ctx, x, ctx.w0p)
                    yield a.status is ext_o.Status.ZERO, f"vanishing at w0p, P={{{P}}}, x={x}"
                    # the special-branch formula must agree with the vanishing
                    stab = par.is_special(ctx.w0p, P)
                    y_low = par.coset_short_rep(ctx.w0p, stab, "right")
                    yield y_low.is_identity() and not bb.bm(y_low), f"BM at w0p, P={{{P}}}"
                for y in xl:
                    a = ext_s.ext1_simple_to_standard(ctx, x, y)
                    if a.status is ext_o.Status.EXACT:
                        yield x in J or x == w0, f"nonzero outside J, P={{{P}}}, x={x}, y={y}"
                    if x != w0 and a.status is not ext_o.Status.UNKNOWN:
                        # socle multiplicity of L_x in Delta_e / Delta_{w0p y}
                        mult = sum(1 for e in ext_o.socle_coker_verma(identity(n), ctx.short(y)) if e.x == x)
                        yield a.dim == mult, f"socle reduction, P={{{P}}}, x={x}, y={y}"
    return first_failure(cases())


CHECKS: tuple[Check, ...] = (
    Check("reduced words and content", check_words),
    Check("length and descent laws", check_length_laws),
    Check("bruhat rank criterion vs subword oracle", check_bruhat_oracle),
    Check("bruhat partial order", check_bruhat_poset, max_n=5),
    Check("iBj chains and coordinates", check_chains),
    Check("join-irreducibles are bigrassmannian", check_join_irreducibles, max_n=5),
    Check("join(BM(w)) = w", check_join_of_bm, max_n=5),
    Check("BM structure", check_bm_structure, max_n=6),
    Check("Robinson-Schensted", check_rsk, max_n=6),
    Check("penultimate cell and w_st", check_penultimate),
    Check("graded injectivity of (phi, m)", check_graded_injectivity),
    Check("parabolic cosets", check_parabolic, max_n=6),
    Check("special elements", check_special, max_n=5),
    Check("Verma extensions and sBMt sharpness", check_verma_ext, max_n=6),
    Check("socles of Verma cokernels", check_socles, max_n=5),
    Check("singular block, trivial stabilizer", check_singular_reduction, max_n=4),
    Check("S-subcategory, trivial parabolic", check_trivial_parabolic, max_n=4),
    Check("proper standard formula vs socle", check_proper_standard, max_n=5),
    Check("standard objects", check_standard, max_n=5),
)


def run_selftest(max_n: int, out=print) -> int:
    """Run every check for ``3 <= n <= max_n``; return the number of failures."""
    failures = 0
    for check in CHECKS:
        for n in range(check.min_n, min(max_n, check.max_n) + 1):
            start = time.perf_counter()
            result = check.fn(n)
            elapsed = time.perf_counter() - start
            status = "PASS" if result is None else "FAIL"
            line = f"{status} n={n} {check.name} ({elapsed:.2f}s)"
            if result is not None:
                failures += 1
                line += f": counterexample {result}"
            out(line)
    return failures
