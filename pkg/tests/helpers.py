"""Shared brute-force oracles and generators for the test suite.

Everything here is deliberately independent of the optimized span
construction in the package: spans are generated from the defining
spanning sets (all monomial brackets, all two-sided monomial paddings),
counts come from first principles (rotation tests, necklace classes,
commutative monomials).
"""

from fractions import Fraction
from itertools import product as iproduct
from math import comb
from random import Random

from lcsideals.freealg import Poly, all_words, nested_word_chain
from lcsideals.linalg import GradedSubspace


def spanning_chains(n: int, k: int, d: int):
    """Right-normed chains of k monomial slots with degrees summing to d,
    generated here from first principles (independent of the package)."""
    if k == 1:
        for w in iproduct(range(1, n + 1), repeat=d):
            yield (w,)
        return
    for e in range(1, d - k + 2):
        for m in iproduct(range(1, n + 1), repeat=e):
            for chain in spanning_chains(n, k - 1, d - e):
                yield (m,) + chain


def random_poly(rng: Random, n: int, max_deg: int, terms: int = 4) -> Poly:
    out = {}
    for _ in range(terms):
        d = rng.randint(0, max_deg)
        w = tuple(rng.randint(1, n) for _ in range(d))
        out[w] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Poly(n, out)


def random_homogeneous(rng: Random, n: int, deg: int, terms: int = 4) -> Poly:
    out = {}
    for _ in range(terms):
        w = tuple(rng.randint(1, n) for _ in range(deg))
        out[w] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Poly(n, out)


def oracle_l_span(n: int, k: int, d: int) -> GradedSubspace:
    """L_k degree-d piece from the defining spanning chains."""
    rows = [nested_word_chain(n, slots) for slots in spanning_chains(n, k, d)]
    return GradedSubspace.from_rows(n, d, rows)


def oracle_m_span(n: int, k: int, d: int) -> GradedSubspace:
    """M_k degree-d piece from all monomial paddings u·s·v of chains s."""
    rows = []
    for e in range(k, d + 1):
        for slots in spanning_chains(n, k, e):
            s = nested_word_chain(n, slots)
            if s.is_zero():
                continue
            for a in range(d - e + 1):
                b = d - e - a
                for u in all_words(n, a):
                    pu = Poly.monomial(n, u)
                    for v in all_words(n, b):
                        rows.append(pu * s * Poly.monomial(n, v))
    return GradedSubspace.from_rows(n, d, rows)


def oracle_product_span(n: int, indices: tuple[int, ...], d: int) -> GradedSubspace:
    """Product ideal piece from products of oracle M rows over compositions."""
    def rows_for(idx: tuple[int, ...], deg: int) -> list[Poly]:
        if len(idx) == 1:
            return oracle_m_span(n, idx[0], deg).row_polys()
        out = []
        rest = idx[1:]
        for d1 in range(idx[0], deg - sum(rest) + 1):
            heads = oracle_m_span(n, idx[0], d1).row_polys()
            tails = rows_for(rest, deg - d1)
            out += [h * t for h in heads for t in tails]
        return out

    return GradedSubspace.from_rows(n, d, rows_for(indices, d))


def necklace_count(n: int, d: int) -> int:
    """Cyclic equivalence classes of degree-d words, by explicit canonization."""
    seen = set()
    for w in iproduct(range(1, n + 1), repeat=d):
        seen.add(min(w[i:] + w[:i] for i in range(d)))
    return len(seen)


def commutative_monomial_count(n: int, d: int) -> int:
    return comb(d + n - 1, n - 1)


def brute_lyndon_words(n: int, d_max: int) -> list[tuple[int, ...]]:
    """Lyndon words by the rotation-test definition, exhaustively."""
    out = []
    for d in range(1, d_max + 1):
        for w in iproduct(range(1, n + 1), repeat=d):
            if all(w < w[i:] + w[:i] for i in range(1, d)):
                out.append(w)
    return sorted(out)


def filtration_space(n: int, r: int, d: int) -> GradedSubspace:
    """Span of all products of at most r standard bracketings, degree d."""
    from lcsideals.lyndon import lyndon_words, standard_bracketing

    lws = [w for w in lyndon_words(n, d)]
    rows: list[Poly] = []

    def rec(remaining: int, slots: int, acc: list) -> None:
        if remaining == 0:
            p = Poly.one(n)
            for w in acc:
                p = p * standard_bracketing(w, n)
            rows.append(p)
            return
        if slots == 0:
            return
        for w in lws:
            if len(w) <= remaining:
                rec(remaining - len(w), slots - 1, acc + [w])

    rec(d, r, [])
    return GradedSubspace.from_rows(n, d, rows)


def subspaces_equal(a: GradedSubspace, b: GradedSubspace) -> bool:
    return a.dim == b.dim and a.is_subspace_of(b)


def tuples_with_sum_at_most(total_max: int) -> list[tuple[int, ...]]:
    """All index tuples with entries >= 2 and sum <= total_max."""
    out = []

    def build(prefix: list[int], budget: int) -> None:
        if prefix:
            out.append(tuple(prefix))
        for v in range(2, budget + 1):
            build(prefix + [v], budget - v)

    build([], total_max)
    return out
