"""Dimension computations in the quotients R_{i,j} = A_n / (M_i · M_j).

Everything is done by span differences: the degree-d dimension of a series
member inside the quotient is dim(span(S ∪ I)) - dim(I) with I the graded
piece of the modded-out product ideal.  No coset representatives are ever
constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .freealg import Poly, Word, all_words, bracket, nested_word_chain
from .linalg import extension_dim
from .series import l_span, m_span, product_span


@dataclass(frozen=True)
class QuotientSpec:
    """The PI-quotient of A_n by the product ideal M_i · M_j."""

    n: int
    i: int
    j: int

    def __post_init__(self):
        if self.i < 2 or self.j < 2:
            raise ValueError("quotient ideal indices must be >= 2")

    def label(self) -> str:
        return f"R[{self.i},{self.j}](A_{self.n})"


SERIES_KINDS = ("L", "M", "N", "B")


def quotient_dim(spec: QuotientSpec, kind: str, r: int, d: int) -> int:
    """dim of the degree-d piece of L_r, M_r, N_r = M_r/M_{r+1} or
    B_r = L_r/L_{r+1} computed inside the quotient."""
    if kind not in SERIES_KINDS:
        raise ValueError(f"series kind must be one of {SERIES_KINDS}")
    if r < 1:
        raise ValueError("series index must be >= 1")
    if kind == "N":
        return quotient_dim(spec, "M", r, d) - quotient_dim(spec, "M", r + 1, d)
    if kind == "B":
        return quotient_dim(spec, "L", r, d) - quotient_dim(spec, "L", r + 1, d)
    ideal = product_span(spec.n, (spec.i, spec.j), d)
    span = l_span(spec.n, r, d) if kind == "L" else m_span(spec.n, r, d)
    return extension_dim(ideal, span.int_rows())


def iso_check(
    j: int, i_values: list[int] | range, d_max: int, n: int = 2
) -> list[dict]:
    """Graded dimension comparison of B_i and N_i inside R_{j,2}.

    Rows with i >= t, where t = 2*ceil((j+1)/2), fall under the isomorphism
    statement and are marked asserted; smaller i are reported only.
    """
    spec = QuotientSpec(n, j, 2)
    t = 2 * ((j + 1 + 1) // 2)
    rows = []
    for i in i_values:
        for d in range(d_max + 1):
            dim_b = quotient_dim(spec, "B", i, d)
            dim_n = quotient_dim(spec, "N", i, d)
            rows.append(
                {
                    "i": i,
                    "degree": d,
                    "dim_B": dim_b,
                    "dim_N": dim_n,
                    "equal": dim_b == dim_n,
                    "asserted": i >= t,
                }
            )
    return rows


def sorted_commutator_count(n: int, r: int) -> int:
    """Number of sorted index sequences (i_1 > i_2 <= i_3 <= ... <= i_r)."""
    if r < 2:
        raise ValueError("sorted commutators need length >= 2")
    total = 0
    for tail in combinations_with_replacement(range(1, n + 1), r - 1):
        total += n - tail[0]
    return total


def structure_basis_r22(n: int, r: int, d: int) -> int:
    """Size of the monomial-times-sorted-commutator basis of the degree-d
    piece of N_r inside R_{2,2}(A_n).

    For r = 1 the sortedness constraint degenerates; that layer is the
    polynomial ring, counted by commutative monomials.
    """
    if r < 1:
        raise ValueError("layer index must be >= 1")
    if r == 1:
        return comb(d + n - 1, n - 1)
    if d < r:
        return 0
    return comb(d - r + n - 1, n - 1) * sorted_commutator_count(n, r)


def sorted_commutator_words(n: int, r: int) -> list[Word]:
    """The letter sequences of the sorted commutators, for inspection."""
    out = []
    for tail in combinations_with_replacement(range(1, n + 1), r - 1):
        for head in range(tail[0] + 1, n + 1):
            out.append((head,) + tail)
    return sorted(out)


def two_row_module_dim(a: int, b: int = 0) -> int:
    """Dimension a - b + 1 of the irreducible GL_2 module for the two-row
    partition (a, b); the module sits in total degree a + b."""
    if b < 0 or a < b:
        raise ValueError("need a >= b >= 0")
    return a - b + 1


def r23_structure_dims(r: int, d_max: int) -> dict[int, int]:
    """Graded dimensions predicted for N_r(R_{2,3}(A_2)), r > 4.

    Convolution of a symmetric-algebra factor (dimension i+1 in degree i)
    with a bracket factor concentrated in total degree r: the module for
    (r-1,1) plus the module for (r-3,1) twisted by the determinant (1,1).
    """
    if r < 5:
        raise ValueError("the structure formula applies for r > 4")
    bracket_dim = two_row_module_dim(r - 1, 1) + two_row_module_dim(
        r - 3, 1
    ) * two_row_module_dim(1, 1)
    out = {}
    for d in range(d_max + 1):
        out[d] = (d - r + 1) * bracket_dim if d >= r else 0
    return out


def metabelian_check(n: int, d_max: int) -> bool:
    """Two slot-permutation facts behind the quotient computations.

    Products of two brackets of generators lie in the (2,2) product ideal,
    and swapping the two outer slots of [a, b, l] with l a pure commutator
    changes the element by a member of that ideal.  Checked for all
    monomial instances up to total degree d_max.
    """
    if d_max < 4:
        raise ValueError("instances start at degree 4")
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            for u in range(1, n + 1):
                for v in range(1, n + 1):
                    elem = bracket(Poly.gen(n, p), Poly.gen(n, q)) * bracket(
                        Poly.gen(n, u), Poly.gen(n, v)
                    )
                    if not elem.is_zero() and not product_span(n, (2, 2), 4).contains(
                        elem
                    ):
                        return False

    # [a,[b,l]] - [b,[a,l]] = [[a,b],l] lands in M2·M2 once l is a bracket
    for total in range(4, d_max + 1):
        for da in range(1, total - 2):
            for db in range(1, total - 1 - da):
                dl = total - da - db
                if dl < 2:
                    continue
                for wa in all_words(n, da):
                    a = Poly.monomial(n, wa)
                    for wb in all_words(n, db):
                        b = Poly.monomial(n, wb)
                        for dl1 in range(1, dl):
                            for wl1 in all_words(n, dl1):
                                for wl2 in all_words(n, dl - dl1):
                                    l = nested_word_chain(n, [wl1, wl2])
                                    if l.is_zero():
                                        continue
                                    diff = bracket(a, bracket(b, l)) - bracket(
                                        b, bracket(a, l)
                                    )
                                    if diff.is_zero():
                                        continue
                                    if not product_span(n, (2, 2), total).contains(
                                        diff
                                    ):
                                        return False
    return True
