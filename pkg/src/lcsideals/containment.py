"""Containment indices of products of lower central series ideals.

containment_index() computes the observed maximal s with
M_{i1}···M_{ik} ⊆ M_s degreewise up to a cutoff, together with bounds and
an explicit non-membership witness.  Containment evidence is stamped with
the cutoff; non-containment of a homogeneous witness is definitive because
each graded component is checked exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence

from .exprs import poly_to_expr
from .freealg import Poly, bracket
from .linalg import IntRow, rank_word
from .lyndon import standard_bracketing
from .series import chain_poly, m_span, product_generators

Matrix = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def _validate_tuple(indices: Sequence[int]) -> tuple[int, ...]:
    t = tuple(indices)
    if not t:
        raise ValueError("need at least one ideal index")
    if any(i < 2 for i in t):
        raise ValueError("ideal indices must be >= 2")
    return t


def bound_report(n: int, indices: Sequence[int]) -> tuple[int, int]:
    """(lower, upper) bounds on the containment index.

    Upper bound: total - k + 1, from the PBW filtration argument.  Lower
    bound: combine factors pairwise, gaining an extra degree whenever an odd
    index participates; p odd entries allow min(p, k-1) such steps.
    """
    t = _validate_tuple(indices)
    k = len(t)
    total = sum(t)
    p = sum(1 for i in t if i % 2 == 1)
    upper = total - k + 1
    lower = total - 2 * (k - 1) + min(p, k - 1)
    return lower, upper


def pbw_witness(n: int, indices: Sequence[int]) -> Poly:
    """A product of standard bracketings with lengths matching the tuple.

    Generators are assigned greedily left to right, wrapping around modulo
    n; each factor's letters are sorted, which yields a Lyndon word whenever
    at least two letters differ (always the case for length >= 2, n >= 2).
    Nonzero products of Lie basis elements achieve the full PBW factor
    count, hence lie outside M_{total-k+2} in their degree.
    """
    if n < 2:
        raise ValueError("witness construction needs n >= 2")
    t = _validate_tuple(indices)
    out = Poly.one(n)
    cursor = 0
    for length in t:
        letters = sorted(1 + (cursor + s) % n for s in range(length))
        cursor += length
        out = out * standard_bracketing(tuple(letters), n)
    return out


@dataclass
class ContainmentReport:
    n: int
    indices: tuple[int, ...]
    cutoff: int
    index_observed: int
    upper_bound_pbw: int
    lower_bound_formula: int
    witness: Poly
    witness_degree: int
    witness_target: int
    per_degree: dict[int, int]  # degree -> maximal s verified contained

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "tuple": list(self.indices),
            "cutoff": self.cutoff,
            "index": self.index_observed,
            "upper": self.upper_bound_pbw,
            "lower": self.lower_bound_formula,
            "witness_expr": poly_to_expr(self.witness),
            "witness_degree": self.witness_degree,
            "witness_target": self.witness_target,
            "per_degree": [
                {
                    "degree": d,
                    "contained_in": list(range(1, s_max + 1)),
                }
                for d, s_max in sorted(self.per_degree.items())
            ],
        }


def default_cutoff(indices: Sequence[int]) -> int:
    return sum(indices) + 2


def containment_index(
    n: int, indices: Sequence[int], cutoff: int | None = None
) -> ContainmentReport:
    """Observed containment index of M_{i1}···M_{ik} in A_n up to a cutoff.

    For every degree d <= cutoff the product component is tested against
    M_s for ascending s; the observed index is the largest s contained at
    every degree.  A witness failing membership in M_{index+1} at its own
    degree makes the non-containment side definitive.
    """
    t = _validate_tuple(indices)
    total = sum(t)
    k = len(t)
    if cutoff is None:
        cutoff = default_cutoff(t)
    if cutoff < total:
        raise ValueError(
            f"cutoff {cutoff} below the minimal degree {total} of the product"
        )
    lower, upper = bound_report(n, t)
    s_cap = upper + 1

    per_degree: dict[int, int] = {}
    for d in range(total, cutoff + 1):
        gens = product_generators(n, t, d)
        s_max = 1
        for s in range(2, s_cap + 1):
            target = m_span(n, s, d)
            if all(target.contains_row(g) for g in gens):
                s_max = s
            else:
                break
        per_degree[d] = s_max

    index = min(per_degree.values())

    witness = pbw_witness(n, t)
    wdeg = witness.degree()
    if m_span(n, index + 1, wdeg).contains(witness):
        witness, wdeg = _search_witness(n, t, index, cutoff)

    return ContainmentReport(
        n=n,
        indices=t,
        cutoff=cutoff,
        index_observed=index,
        upper_bound_pbw=upper,
        lower_bound_formula=lower,
        witness=witness,
        witness_degree=wdeg,
        witness_target=index + 1,
        per_degree=per_degree,
    )


def _search_witness(
    n: int, t: tuple[int, ...], index: int, cutoff: int
) -> tuple[Poly, int]:
    """Fallback: scan product generators for one outside M_{index+1}."""
    for d in range(sum(t), cutoff + 1):
        target = m_span(n, index + 1, d)
        for g in product_generators(n, t, d):
            if not target.contains_row(g):
                return _introw_poly(n, d, g), d
    raise AssertionError("observed index admits no witness; containment logic broken")


def _introw_poly(n: int, d: int, row: IntRow) -> Poly:
    return Poly(n, {rank_word(r, n, d): Fraction(c) for r, c in row.items()})


# -- sl(2) trace witness ---------------------------------------------------

_E: Matrix = ((Fraction(0), Fraction(1)), (Fraction(0), Fraction(0)))
_F: Matrix = ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))
_H: Matrix = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(-1)))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )  # type: ignore[return-value]


def _mat_add(a: Matrix, b: Matrix, sign: int = 1) -> Matrix:
    return tuple(
        tuple(a[i][j] + sign * b[i][j] for j in range(2)) for i in range(2)
    )  # type: ignore[return-value]


def _mat_bracket(a: Matrix, b: Matrix) -> Matrix:
    return _mat_add(_mat_mul(a, b), _mat_mul(b, a), sign=-1)


def mat_trace(a: Matrix) -> Fraction:
    return a[0][0] + a[1][1]


def sl2_witness(i: int, j: int, n: int) -> tuple[Matrix, Fraction]:
    """Image and trace of a product of two adjoint strings under the
    evaluation into 2x2 matrices.

    Same parity of i and j: x1 -> e+f, x2 -> h, element
    ad^{i-1}(x2)(x1) · ad^{j-1}(x2)(x1).  Different parity needs n >= 3:
    x1 -> e, x2 -> h, x3 -> f, element ad^{i-1}(x2)(x1) · ad^{j-1}(x2)(x3).
    A nonzero trace certifies L_i·L_j ⊄ L_{i+j}, since length-(i+j)
    commutators of matrices are traceless.
    """
    if i < 2 or j < 2:
        raise ValueError("ideal indices must be >= 2")
    same_parity = (i - j) % 2 == 0
    if same_parity:
        if n < 2:
            raise ValueError("same-parity witness needs n >= 2")
        first = second = _mat_add(_E, _F)
    else:
        if n < 3:
            raise ValueError("different-parity witness needs n >= 3")
        first, second = _E, _F

    def ad_power(base: Matrix, power: int, target: Matrix) -> Matrix:
        out = target
        for _ in range(power):
            out = _mat_bracket(base, out)
        return out

    value = _mat_mul(ad_power(_H, i - 1, first), ad_power(_H, j - 1, second))
    return value, mat_trace(value)


def ad_string_poly(n: int, i: int, core: int) -> Poly:
    """ad^{i-1}(x2) applied to the given generator, as an element of A_n."""
    out = Poly.gen(n, core)
    x2 = Poly.gen(n, 2)
    for _ in range(i - 1):
        out = bracket(x2, out)
    return out


# -- open degree-6 elements on three generators ----------------------------

OPEN_ELEMENTS: tuple[tuple[str, tuple[int, ...], tuple[int, ...]], ...] = (
    ("[x1,x2]*[x3,x1,x1,x2]", (1, 2), (3, 1, 1, 2)),
    ("[x1,x2]*[x3,x2,x1,x2]", (1, 2), (3, 2, 1, 2)),
    ("[x1,x2]*[x3,x3,x3,x1]", (1, 2), (3, 3, 3, 1)),
)


def check_open_elements(cutoff: int = 6) -> list[dict]:
    """Membership of the three degree-6 test elements in M_5(A_3).

    Each element is checked in its own degree; with cutoff >= 7 the
    one-letter padded products are checked in degree 7 as well.
    """
    if cutoff < 6:
        raise ValueError("cutoff must cover the elements' degree 6")
    n = 3
    rows = []
    target6 = m_span(n, 5, 6)
    polys = []
    for expr, left, right in OPEN_ELEMENTS:
        p = chain_poly(n, left) * chain_poly(n, right)
        polys.append((expr, p))
        rows.append(
            {"expr": expr, "degree": 6, "contained": target6.contains(p)}
        )
    if cutoff >= 7:
        target7 = m_span(n, 5, 7)
        for expr, p in polys:
            padded_ok = all(
                target7.contains(Poly.gen(n, g) * p)
                and target7.contains(p * Poly.gen(n, g))
                for g in range(1, n + 1)
            )
            rows.append(
                {"expr": expr, "degree": 7, "contained": padded_ok}
            )
    return rows


# -- conjecture sweep for tuples of twos -----------------------------------


def conjectured_2k_index(n: int, k: int) -> int:
    """Piecewise conjectural value of the index for the k-tuple (2,...,2)."""
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    if n >= 4 and n % 2 == 0:
        return max(2 * ceil(Fraction(k, 2) - Fraction(n, 4)), 0) + 2
    if n >= 5:
        return max(2 * ceil(Fraction(k, 2) - Fraction(n, 4) + Fraction(1, 4)), 0) + 2
    return k + 1


def conjecture_2k_sweep(
    n_max: int, k_max: int, cutoff: int | None = None
) -> list[dict]:
    """Observed vs conjectured index for tuples (2,...,2), tabulated.

    Matches are reported, never asserted.  Desk scale only: the component
    dimension n^degree grows fast.
    """
    if n_max > 5 or k_max > 4:
        raise ValueError("sweep is desk-scale only: n_max <= 5, k_max <= 4")
    rows = []
    for n in range(2, n_max + 1):
        for k in range(1, k_max + 1):
            t = (2,) * k
            report = containment_index(n, t, cutoff or default_cutoff(t))
            conj = conjectured_2k_index(n, k)
            rows.append(
                {
                    "n": n,
                    "k": k,
                    "observed": report.index_observed,
                    "conjectured": conj,
                    "match": report.index_observed == conj,
                    "cutoff": report.cutoff,
                }
            )
    return rows
