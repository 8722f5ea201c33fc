"""Graded spanning sets for L_k, M_k, product ideals, and generator sets.

All subspaces are exact echelonized graded pieces, built recursively and
cached per (n, kind, index, degree).  L_1 is the whole algebra; L_k is
spanned by brackets of monomials against L_{k-1}; M_k pads L_k by monomial
multiples on both sides; product ideals multiply M-components over degree
compositions.  Generation is optimized (single-letter brackets for L_2,
one-letter padding for M and span closures) but spans the same subspaces
as the defining spanning sets, which the test suite cross-checks against
brute-force oracles.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from typing import Iterable, Iterator, Sequence

from .freealg import Poly, Word, all_words, bracket, nested_word_chain
from .linalg import GradedSubspace, IntRow, row_canonical

# Right-normed pure commutator, given by its letters; length 1 = generator.
Chain = tuple[int, ...]

_lock = threading.RLock()
_span_cache: dict[tuple, GradedSubspace] = {}
_gen_cache: dict[tuple, list[IntRow]] = {}
_chain_poly_cache: dict[tuple[int, Chain], Poly] = {}


def clear_caches() -> None:
    with _lock:
        _span_cache.clear()
        _gen_cache.clear()
        _chain_poly_cache.clear()


def _full_component(n: int, d: int) -> GradedSubspace:
    S = GradedSubspace(n, d)
    for r in range(n**d):
        S._rows[r] = {r: 1}
    return S.freeze()


def _empty(n: int, d: int) -> GradedSubspace:
    return GradedSubspace(n, max(d, 0)).freeze()


def l_span(n: int, k: int, d: int) -> GradedSubspace:
    """Degree-d component of L_k(A_n), echelonized."""
    if k < 1:
        raise ValueError("lower central series index must be >= 1")
    if d < 0:
        return _empty(n, d)
    key = ("L", n, k, d)
    with _lock:
        got = _span_cache.get(key)
        if got is not None:
            return got
        if k == 1:
            S = _full_component(n, d)
        elif d < k:
            S = _empty(n, d)
        else:
            S = GradedSubspace.from_rows(n, d, _l_candidates(n, k, d))
        _span_cache[key] = S
        return S


def _l_candidates(n: int, k: int, d: int) -> Iterator[IntRow]:
    if k == 2:
        # [letter, word]: same span as all monomial brackets by telescoping
        # m1 m2 - m2 m1 across one-letter rotations.
        top = n ** (d - 1)
        for i in range(n):
            base = i * top
            for ru in range(top):
                a = base + ru
                b = ru * n + i
                if a != b:
                    yield {a: 1, b: -1}
        return
    for e in range(1, d - k + 2):
        ds = d - e
        sub = l_span(n, k - 1, ds)
        shift = n**ds
        rshift = n**e
        for rm in range(n**e):
            left_base = rm * shift
            for srow in sub.int_rows():
                vec: IntRow = {left_base + r: c for r, c in srow.items()}
                for r, c in srow.items():
                    key2 = r * rshift + rm
                    s = vec.get(key2, 0) - c
                    if s:
                        vec[key2] = s
                    else:
                        vec.pop(key2, None)
                if vec:
                    yield vec


def m_span(n: int, k: int, d: int) -> GradedSubspace:
    """Degree-d component of the two-sided ideal M_k = A·L_k·A."""
    if k < 1:
        raise ValueError("ideal index must be >= 1")
    if d < 0:
        return _empty(n, d)
    key = ("M", n, k, d)
    with _lock:
        got = _span_cache.get(key)
        if got is not None:
            return got
        if k == 1:
            S = _full_component(n, d)
        elif d < k:
            S = _empty(n, d)
        else:
            rows: list[IntRow] = [dict(r) for r in l_span(n, k, d).int_rows()]
            prev = m_span(n, k, d - 1)
            top = n ** (d - 1)
            for row in prev.int_rows():
                for i in range(n):
                    base = i * top
                    rows.append({base + r: c for r, c in row.items()})
                    rows.append({r * n + i: c for r, c in row.items()})
            S = GradedSubspace.from_rows(n, d, rows)
        _span_cache[key] = S
        return S


def product_generators(n: int, indices: Sequence[int], d: int) -> list[IntRow]:
    """Spanning rows of M_{i1}···M_{ik} at degree d: products of basis rows
    of the factors over all degree compositions."""
    indices = tuple(indices)
    if not indices:
        raise ValueError("need at least one factor")
    key = ("PG", n, indices, d)
    with _lock:
        got = _gen_cache.get(key)
        if got is not None:
            return got
        if len(indices) == 1:
            rows = [dict(r) for r in m_span(n, indices[0], d).int_rows()]
        else:
            head, rest = indices[0], indices[1:]
            rows = []
            seen: set[tuple[tuple[int, int], ...]] = set()
            rest_min = sum(rest)
            for d1 in range(head, d - rest_min + 1):
                shift = n ** (d - d1)
                heads = list(m_span(n, head, d1).int_rows())
                if not heads:
                    continue
                tails = product_generators(n, rest, d - d1)
                for ra in heads:
                    for rb in tails:
                        vec = {
                            ka * shift + kb: va * vb
                            for ka, va in ra.items()
                            for kb, vb in rb.items()
                        }
                        ckey = row_canonical(vec)
                        if ckey not in seen:
                            seen.add(ckey)
                            rows.append(vec)
        _gen_cache[key] = rows
        return rows


def product_span(n: int, indices: Sequence[int], d: int) -> GradedSubspace:
    """Degree-d component of the product ideal M_{i1}···M_{ik}."""
    indices = tuple(indices)
    for i in indices:
        if i < 2:
            raise ValueError("product ideal indices must be >= 2")
    if len(indices) == 1:
        return m_span(n, indices[0], d)
    if d < 0:
        return _empty(n, d)
    key = ("P", n, indices, d)
    with _lock:
        got = _span_cache.get(key)
        if got is not None:
            return got
        if d < sum(indices):
            S = _empty(n, d)
        else:
            S = GradedSubspace.from_rows(n, d, product_generators(n, indices, d))
        _span_cache[key] = S
        return S


# -- ideal specifications ------------------------------------------------


@dataclass(frozen=True)
class IdealSpec:
    """A graded ideal (or ideal quotient) of A_n named by kind and indices.

    kind "L" or "M" with index k; "N" for the layer M_k/M_{k+1}; "P" for a
    product of M-ideals with the given factor indices.
    """

    kind: str
    n: int
    index: int = 0
    factors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind in ("L", "M", "N"):
            if self.index < 1:
                raise ValueError("series index must be >= 1")
        elif self.kind == "P":
            if not self.factors:
                raise ValueError("product spec needs factor indices")
            if any(i < 2 for i in self.factors):
                raise ValueError("product factor indices must be >= 2")
        else:
            raise ValueError(f"unknown ideal kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str, n: int) -> "IdealSpec":
        t = text.strip().upper()
        if t.startswith("P"):
            factors = tuple(int(x) for x in t[1:].split(","))
            return cls("P", n, factors=factors)
        if "*" in t:
            factors = tuple(int(part[1:]) for part in t.split("*"))
            if not all(part.startswith("M") for part in t.split("*")):
                raise ValueError(f"cannot parse ideal spec {text!r}")
            return cls("P", n, factors=factors)
        if t and t[0] in "LMN" and t[1:].isdigit():
            return cls(t[0], n, index=int(t[1:]))
        raise ValueError(f"cannot parse ideal spec {text!r}")

    def label(self) -> str:
        if self.kind == "P":
            return "*".join(f"M{i}" for i in self.factors)
        return f"{self.kind}{self.index}"


def spec_dim(spec: IdealSpec, d: int) -> int:
    if spec.kind == "L":
        return l_span(spec.n, spec.index, d).dim
    if spec.kind == "M":
        return m_span(spec.n, spec.index, d).dim
    if spec.kind == "N":
        return m_span(spec.n, spec.index, d).dim - m_span(spec.n, spec.index + 1, d).dim
    return product_span(spec.n, spec.factors, d).dim


@dataclass
class DimTable:
    """Dimension table keyed by (ideal label, degree)."""

    rows: dict[tuple[str, int], int] = field(default_factory=dict)

    def add(self, label: str, degree: int, dim: int) -> None:
        self.rows[(label, degree)] = dim

    def get(self, label: str, degree: int) -> int:
        return self.rows[(label, degree)]

    def sorted_rows(self) -> list[tuple[str, int, int]]:
        return [
            (label, degree, dim)
            for (label, degree), dim in sorted(self.rows.items())
        ]

    def to_csv(self) -> str:
        lines = ["spec,degree,dim"]
        lines += [f"{label},{degree},{dim}" for label, degree, dim in self.sorted_rows()]
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> list[dict]:
        return [
            {"spec": label, "degree": degree, "dim": dim}
            for label, degree, dim in self.sorted_rows()
        ]


def dim_table(specs: Iterable[IdealSpec], d_max: int) -> DimTable:
    table = DimTable()
    for spec in specs:
        for d in range(d_max + 1):
            table.add(spec.label(), d, spec_dim(spec, d))
    return table


def n_dims(n: int, k: int, d_max: int) -> DimTable:
    """Graded dimensions of the layer N_k = M_k/M_{k+1} up to d_max."""
    return dim_table([IdealSpec("N", n, index=k)], d_max)


# -- spanning chains and pure-commutator machinery ------------------------


def l_span_chains(n: int, k: int, d: int) -> Iterator[tuple[Word, ...]]:
    """The defining spanning set of L_k at degree d: right-normed chains of
    monomial slots, outer slots bracketed on the left."""
    if k == 1:
        for w in all_words(n, d):
            yield (w,)
        return
    if d < k:
        return
    for e in range(1, d - k + 2):
        for m in all_words(n, e):
            for chain in l_span_chains(n, k - 1, d - e):
                yield (m,) + chain


def chain_poly(n: int, chain: Chain) -> Poly:
    """The element of a right-normed pure commutator with the given letters."""
    key = (n, chain)
    got = _chain_poly_cache.get(key)
    if got is None:
        got = nested_word_chain(n, [(l,) for l in chain])
        with _lock:
            _chain_poly_cache[key] = got
    return got


def pure_product_poly(n: int, factors: Sequence[Chain]) -> Poly:
    """Product of right-normed pure commutators."""
    out = Poly.one(n)
    for ch in factors:
        out = out * chain_poly(n, ch)
    return out


def decompose_pure(
    n: int, slots: Sequence[Word]
) -> list[tuple[Fraction, tuple[Chain, ...]]]:
    """Rewrite a right-normed commutator with monomial slots as a combination
    of pure-commutator products.

    Every term carries the same number of factors, the PBW degree
    (total degree - slot count + 1) of the input.  Terms whose commutator
    chain vanishes identically are dropped; the survivors re-sum to the
    input element exactly.
    """
    if not slots:
        raise ValueError("need at least one slot")
    for w in slots:
        if len(w) < 1:
            raise ValueError("slots must be nonempty monomials")

    def merge(acc: dict, factors: tuple[Chain, ...], c: Fraction) -> None:
        s = acc.get(factors, 0) + c
        if s:
            acc[factors] = s
        else:
            acc.pop(factors, None)

    def walk(slots: tuple[Word, ...]) -> dict[tuple[Chain, ...], Fraction]:
        if len(slots) == 1:
            return {tuple((l,) for l in slots[0]): Fraction(1)}
        head = slots[0]
        if len(head) == 1:
            x = head[0]
            out: dict[tuple[Chain, ...], Fraction] = {}
            for factors, c in walk(slots[1:]).items():
                # bracketing against a letter acts as a derivation on the
                # factor product; [x, chain] is again right-normed
                for jj in range(len(factors)):
                    newf = factors[:jj] + ((x,) + factors[jj],) + factors[jj + 1 :]
                    merge(out, newf, c)
            return out
        a, b = head[:-1], head[-1]
        out = {}
        # [ab, l] = a[b, l] + [a, l]b
        for factors, c in walk(((b,),) + slots[1:]).items():
            merge(out, tuple((l,) for l in a) + factors, c)
        for factors, c in walk((a,) + slots[1:]).items():
            merge(out, factors + ((b,),), c)
        return out

    result = []
    for factors, c in walk(tuple(slots)).items():
        if all(not chain_poly(n, ch).is_zero() for ch in factors):
            result.append((c, factors))
    result.sort(key=lambda t: t[1])
    return result


def free_permute(
    n: int, factors: Sequence[Chain], i: int, j: int
) -> tuple[list[Chain], Poly]:
    """Swap adjacent factors i and j of a pure-commutator product.

    Returns (swapped factor list, error element) with
    product(factors) = product(swapped) + error; the error is the same
    product with the two factors joined by a bracket, so it lies in
    L_{len_i + len_j} at the joined position.
    """
    if j != i + 1 or not 0 <= i < len(factors) - 1:
        raise ValueError("positions must be adjacent and in range")
    factors = list(factors)
    swapped = factors[:i] + [factors[j], factors[i]] + factors[j + 1 :]
    err = Poly.one(n)
    for ch in factors[:i]:
        err = err * chain_poly(n, ch)
    err = err * bracket(chain_poly(n, factors[i]), chain_poly(n, factors[j]))
    for ch in factors[j + 1 :]:
        err = err * chain_poly(n, ch)
    return swapped, err


# -- generator sets of M-ideals on two generators --------------------------


def shapes_for_index(i: int) -> list[tuple[int, ...]]:
    """Length tuples (i_1..i_q), entries >= 2, with sum - q + 1 = i."""
    if i < 2:
        raise ValueError("index must be >= 2")
    out: list[tuple[int, ...]] = []

    def build(remaining_sum: int, parts: int, prefix: tuple[int, ...]) -> None:
        if parts == 0:
            if remaining_sum == 0:
                out.append(prefix)
            return
        for v in range(2, remaining_sum - 2 * (parts - 1) + 1):
            build(remaining_sum - v, parts - 1, prefix + (v,))

    for q in range(1, i):
        build(i + q - 1, q, ())
    return sorted(out, key=lambda t: (len(t), t))


def generators_S(i: int, d_max: int) -> list[Poly]:
    """Pure-commutator products on A_2 whose shape makes them maximally
    included in M_i, instantiated with all generator choices up to d_max."""
    n = 2
    polys: list[Poly] = []
    seen: set[Poly] = set()
    for shape in shapes_for_index(i):
        if sum(shape) > d_max:
            continue
        per_factor = [
            [c for c in iter_product(range(1, n + 1), repeat=l)] for l in shape
        ]
        for combo in iter_product(*per_factor):
            p = pure_product_poly(n, combo)
            if not p.is_zero() and p not in seen:
                seen.add(p)
                polys.append(p)
    return polys


class SpanIdeal:
    """Graded pieces of the ideal closure of explicit homogeneous generators.

    two_sided pads generators by monomials on both sides; otherwise only on
    the left.
    """

    def __init__(self, n: int, generators: Iterable[Poly], two_sided: bool = True):
        self.n = n
        self.two_sided = two_sided
        self.by_degree: dict[int, list[Poly]] = {}
        for g in generators:
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError("span generators must be homogeneous")
            self.by_degree.setdefault(g.degree(), []).append(g)
        self._memo: dict[int, GradedSubspace] = {}

    def span(self, d: int) -> GradedSubspace:
        got = self._memo.get(d)
        if got is not None:
            return got
        if d < 0:
            S = _empty(self.n, d)
        else:
            rows: list[IntRow | Poly] = list(self.by_degree.get(d, []))
            if d > 0:
                prev = self.span(d - 1)
                top = self.n ** (d - 1)
                for row in prev.int_rows():
                    for i in range(self.n):
                        rows.append({i * top + r: c for r, c in row.items()})
                        if self.two_sided:
                            rows.append({r * self.n + i: c for r, c in row.items()})
            S = GradedSubspace.from_rows(self.n, d, rows)
        self._memo[d] = S
        return S
