"""Lyndon words, standard bracketings, and PBW straightening.

The free Lie algebra inside A_n has a basis of standard bracketings of
Lyndon words (ordered lexicographically); nondecreasing products of those
bracketings form a PBW basis of A_n.  straighten() rewrites any element in
that basis and pbw_degree() reads off the maximal factor count, the
filtration degree in the enveloping algebra.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from .freealg import Poly, Word, bracket

# A PBW monomial is a nondecreasing tuple of Lyndon words.
PbwMonomial = tuple[Word, ...]


def is_lyndon(w: Word) -> bool:
    """True iff w is strictly smaller than every proper cyclic rotation."""
    if not w:
        return False
    d = len(w)
    return all(w < w[i:] + w[:i] for i in range(1, d))


def lyndon_words(n: int, d: int) -> list[Word]:
    """All Lyndon words of degree <= d over 1..n, lexicographically sorted.

    Duval's generation: extend periodically, bump the last non-maximal
    letter, truncate.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    out: list[Word] = []
    w = [0]
    while w:
        w[-1] += 1
        out.append(tuple(w))
        m = len(w)
        while len(w) < d:
            w.append(w[len(w) - m])
        while w and w[-1] == n:
            w.pop()
    return sorted(out)


def lyndon_factor_split(w: Word) -> tuple[Word, Word]:
    """Standard factorization w = uv with v the longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no proper Lyndon suffix")


def standard_bracketing(w: Word, n: int) -> Poly:
    """The Lie element obtained by recursively bracketing a Lyndon word."""
    if not is_lyndon(w):
        raise ValueError(f"{w} is not a Lyndon word")
    if len(w) == 1:
        return Poly.gen(n, w[0])
    u, v = lyndon_factor_split(w)
    return bracket(standard_bracketing(u, n), standard_bracketing(v, n))


class PbwExpansion:
    """An element written in the PBW basis.

    terms maps each PBW monomial (nondecreasing tuple of Lyndon words) to a
    nonzero rational.  Re-expanding every factor and multiplying reproduces
    the original element exactly.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[PbwMonomial, Fraction]):
        self.n = n
        self.terms = {m: c for m, c in terms.items() if c}

    def max_factor_count(self) -> int:
        if not self.terms:
            raise ValueError("zero expansion has no factor count")
        return max(len(m) for m in self.terms)

    def to_poly(self) -> Poly:
        out = Poly.zero(self.n)
        for mono, c in self.terms.items():
            term = Poly.scalar(self.n, c)
            for factor in mono:
                term = term * _bracketing_cached(self.n, factor)
            out = out + term
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, PbwExpansion):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        return f"PbwExpansion({self.n}, {len(self.terms)} terms)"


# -- caches ------------------------------------------------------------

_lock = threading.Lock()
_bracketing_cache: dict[tuple[int, Word], Poly] = {}
_solver_cache: dict[tuple[int, int], "_LyndonSolver"] = {}
_pair_cache: dict[tuple[int, Word, Word], dict[Word, Fraction]] = {}
_word_cache: dict[tuple[int, Word], dict[PbwMonomial, Fraction]] = {}


def clear_caches() -> None:
    with _lock:
        _bracketing_cache.clear()
        _solver_cache.clear()
        _pair_cache.clear()
        _word_cache.clear()


def _bracketing_cached(n: int, w: Word) -> Poly:
    key = (n, w)
    got = _bracketing_cache.get(key)
    if got is None:
        got = standard_bracketing(w, n)
        with _lock:
            _bracketing_cache[key] = got
    return got


class _LyndonSolver:
    """Expresses degree-d Lie elements in the standard-bracketing basis.

    Augmented row echelon over the word basis: reducing a query against the
    rows accumulates the coefficient vector in the Lyndon basis.
    """

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.rows: dict[Word, tuple[dict[Word, Fraction], dict[Word, Fraction]]] = {}
        for lw in lyndon_words(n, d):
            if len(lw) != d:
                continue
            poly = _bracketing_cached(n, lw)
            self._insert(dict(poly.terms), {lw: Fraction(1)})

    def _insert(self, vec: dict[Word, Fraction], combo: dict[Word, Fraction]) -> None:
        vec, combo = self._reduce(vec, combo)
        if not vec:
            return
        pivot = max(vec)
        lead = vec[pivot]
        vec = {w: c / lead for w, c in vec.items()}
        combo = {w: c / lead for w, c in combo.items()}
        self.rows[pivot] = (vec, combo)

    def _reduce(
        self, vec: dict[Word, Fraction], combo: dict[Word, Fraction]
    ) -> tuple[dict[Word, Fraction], dict[Word, Fraction]]:
        while vec:
            pivot = max(vec)
            row = self.rows.get(pivot)
            if row is None:
                return vec, combo
            c = vec[pivot]
            rvec, rcombo = row
            for w, v in rvec.items():
                s = vec.get(w, 0) - c * v
                if s:
                    vec[w] = s
                else:
                    vec.pop(w, None)
            for w, v in rcombo.items():
                s = combo.get(w, 0) - c * v
                if s:
                    combo[w] = s
                else:
                    combo.pop(w, None)
        return vec, combo

    def solve(self, p: Poly) -> dict[Word, Fraction]:
        """Coefficients of p in the Lyndon basis; p must be a Lie element."""
        vec, combo = self._reduce(dict(p.terms), {})
        if vec:
            raise ValueError("element is not in the free Lie algebra component")
        return {w: -c for w, c in combo.items()}


def _solver(n: int, d: int) -> _LyndonSolver:
    key = (n, d)
    got = _solver_cache.get(key)
    if got is None:
        got = _LyndonSolver(n, d)
        with _lock:
            _solver_cache[key] = got
    return got


def _swap_pair(n: int, u: Word, v: Word) -> dict[Word, Fraction]:
    """Lyndon-basis coefficients of [b_u, b_v], cached."""
    key = (n, u, v)
    got = _pair_cache.get(key)
    if got is None:
        p = bracket(_bracketing_cached(n, u), _bracketing_cached(n, v))
        got = {} if p.is_zero() else _solver(n, len(u) + len(v)).solve(p)
        with _lock:
            _pair_cache[key] = got
    return got


def _straighten_word(n: int, word: Word) -> dict[PbwMonomial, Fraction]:
    key = (n, word)
    got = _word_cache.get(key)
    if got is not None:
        return got

    done: dict[PbwMonomial, Fraction] = {}
    # Each letter is a Lyndon word, so a word is a factor sequence already.
    work: dict[PbwMonomial, Fraction] = {tuple((l,) for l in word): Fraction(1)}
    while work:
        seq, coeff = work.popitem()
        bad = next(
            (i for i in range(len(seq) - 1) if seq[i] > seq[i + 1]),
            None,
        )
        if bad is None:
            s = done.get(seq, 0) + coeff
            if s:
                done[seq] = s
            else:
                done.pop(seq, None)
            continue
        u, v = seq[bad], seq[bad + 1]
        swapped = seq[:bad] + (v, u) + seq[bad + 2 :]
        s = work.get(swapped, 0) + coeff
        if s:
            work[swapped] = s
        else:
            work.pop(swapped, None)
        for w, c in _swap_pair(n, u, v).items():
            merged = seq[:bad] + (w,) + seq[bad + 2 :]
            s = work.get(merged, 0) + coeff * c
            if s:
                work[merged] = s
            else:
                work.pop(merged, None)

    with _lock:
        _word_cache[key] = done
    return done


def straighten(p: Poly) -> PbwExpansion:
    """Rewrite p in the PBW basis of nondecreasing Lyndon bracketings."""
    out: dict[PbwMonomial, Fraction] = {}
    for word, coeff in p.terms.items():
        for mono, c in _straighten_word(p.n, word).items():
            s = out.get(mono, 0) + coeff * c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return PbwExpansion(p.n, out)


def pbw_degree(p: Poly) -> int:
    """Maximal factor count over the PBW expansion of p (p nonzero)."""
    if p.is_zero():
        raise ValueError("zero polynomial has no PBW degree")
    return straighten(p).max_factor_count()


def witt_dimension(n: int, d: int) -> int:
    """Number of Lyndon words of degree exactly d over n letters."""
    def mobius(m: int) -> int:
        out, k, mm = 1, 2, m
        while k * k <= mm:
            if mm % k == 0:
                mm //= k
                if mm % k == 0:
                    return 0
                out = -out
            k += 1
        if mm > 1:
            out = -out
        return out

    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += mobius(e) * n ** (d // e)
    return total // d
