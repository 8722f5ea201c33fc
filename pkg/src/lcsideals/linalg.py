"""Echelonized subspaces of homogeneous components of A_n.

A GradedSubspace holds a row echelon basis of a subspace of the degree-d
component, with pivot = maximal word in lexicographic order.  Rows are
stored as sparse integer vectors (content-stripped, positive leading
coefficient); the rational rows with leading coefficient 1 are recovered on
demand.  Freezing back-eliminates to the unique reduced echelon form and
makes the subspace immutable, after which membership tests reduce in a
single descending pass.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .freealg import Poly, Word

IntRow = dict[int, int]


def word_rank(w: Word, n: int) -> int:
    r = 0
    for letter in w:
        r = r * n + (letter - 1)
    return r


def rank_word(r: int, n: int, degree: int) -> Word:
    letters = []
    for _ in range(degree):
        letters.append(r % n + 1)
        r //= n
    return tuple(reversed(letters))


def poly_to_introw(p: Poly, n: int, degree: int) -> IntRow:
    """Clear denominators and strip content; {} for the zero element."""
    if p.n != n:
        raise ValueError("generator-count mismatch")
    if not p.terms:
        return {}
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    row = {}
    for w, c in p.terms.items():
        if len(w) != degree:
            raise ValueError(f"degree mismatch: word {w} in degree-{degree} component")
        row[word_rank(w, n)] = int(c * den)
    return _strip(row)


def _strip(row: IntRow) -> IntRow:
    """Divide by the content and make the leading coefficient positive."""
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if row[max(row)] < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


def row_canonical(row: IntRow) -> tuple[tuple[int, int], ...]:
    """Hashable canonical form for deduplicating spanning candidates."""
    return tuple(sorted(_strip(dict(row)).items()))


class GradedSubspace:
    """Span of homogeneous degree-d elements, as an echelonized basis.

    Mutable (single writer) until freeze(); frozen instances are immutable
    and safe to share.
    """

    __slots__ = ("n", "degree", "_rows", "_frozen")

    def __init__(self, n: int, degree: int):
        if n < 1 or degree < 0:
            raise ValueError("need n >= 1 and degree >= 0")
        self.n = n
        self.degree = degree
        self._rows: dict[int, IntRow] = {}
        self._frozen = False

    @classmethod
    def from_rows(
        cls, n: int, degree: int, rows: Iterable[IntRow | Poly], freeze: bool = True
    ) -> "GradedSubspace":
        out = cls(n, degree)
        seen: set[tuple[tuple[int, int], ...]] = set()
        for r in rows:
            if isinstance(r, Poly):
                r = poly_to_introw(r, n, degree)
            if not r:
                continue
            key = row_canonical(r)
            if key in seen:
                continue
            seen.add(key)
            out.insert_row(dict(r))
        if freeze:
            out.freeze()
        return out

    # -- core reduction -------------------------------------------------

    def _reduce(self, vec: IntRow) -> IntRow:
        """Eliminate pivot coordinates of vec against the stored rows.

        Exact up to a positive scalar, which is all membership and rank
        need.  On a frozen subspace a single descending pass suffices.
        """
        rows = self._rows
        if self._frozen:
            hits = sorted((r for r in vec if r in rows), reverse=True)
            for r in hits:
                c = vec.get(r)
                if not c:
                    continue
                self._eliminate(vec, rows[r], r, c)
            return vec
        while vec:
            m = max(vec)
            row = rows.get(m)
            if row is None:
                return vec
            self._eliminate(vec, row, m, vec[m])
        return vec

    @staticmethod
    def _eliminate(vec: IntRow, row: IntRow, pivot: int, c: int) -> None:
        lead = row[pivot]
        if lead != 1:
            g = gcd(c, lead)
            mult = lead // g
            if mult != 1:
                for k in list(vec):
                    vec[k] *= mult
            c = c * mult // lead
        for k, v in row.items():
            s = vec.get(k, 0) - c * v
            if s:
                vec[k] = s
            else:
                vec.pop(k, None)

    # -- construction -----------------------------------------------------

    def insert_row(self, vec: IntRow) -> bool:
        """Reduce vec and install it as a new pivot row; True if dim grew."""
        if self._frozen:
            raise RuntimeError("cannot insert into a frozen subspace")
        vec = self._reduce(vec)
        if not vec:
            return False
        self._rows[max(vec)] = _strip(vec)
        return True

    def insert(self, p: Poly) -> "GradedSubspace":
        """Grow the span by p (degree-d homogeneous or zero); returns self."""
        self.insert_row(poly_to_introw(p, self.n, self.degree))
        return self

    def freeze(self) -> "GradedSubspace":
        """Back-eliminate to reduced echelon form and make immutable."""
        if self._frozen:
            return self
        rows = self._rows
        for pivot in sorted(rows):
            vec = rows[pivot]
            hits = sorted((r for r in vec if r != pivot and r in rows), reverse=True)
            for r in hits:
                c = vec.get(r)
                if not c:
                    continue
                self._eliminate(vec, rows[r], r, c)
            rows[pivot] = _strip(vec)
        self._frozen = True
        return self

    # -- queries ----------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def frozen(self) -> bool:
        return self._frozen

    def contains_row(self, vec: IntRow) -> bool:
        return not self._reduce(dict(vec))

    def contains(self, p: Poly) -> bool:
        """Exact membership of a degree-d homogeneous element."""
        return self.contains_row(poly_to_introw(p, self.n, self.degree))

    def residue_row(self, vec: IntRow) -> IntRow:
        """Reduction of vec against the basis (canonical up to scale)."""
        return _strip(self._reduce(dict(vec)))

    def is_subspace_of(self, other: "GradedSubspace") -> bool:
        if self.n != other.n or self.degree != other.degree:
            raise ValueError("subspace comparison needs matching n and degree")
        return all(other.contains_row(row) for row in self._rows.values())

    def pivot_words(self) -> list[Word]:
        return [rank_word(r, self.n, self.degree) for r in sorted(self._rows, reverse=True)]

    def int_rows(self) -> Iterator[IntRow]:
        """The stored rows, in descending pivot order."""
        for r in sorted(self._rows, reverse=True):
            yield self._rows[r]

    def row_polys(self) -> list[Poly]:
        """Basis rows as Polys with leading coefficient 1."""
        out = []
        for r in sorted(self._rows, reverse=True):
            row = self._rows[r]
            lead = Fraction(row[r])
            out.append(
                Poly(
                    self.n,
                    {
                        rank_word(k, self.n, self.degree): Fraction(v) / lead
                        for k, v in row.items()
                    },
                )
            )
        return out

    def __repr__(self) -> str:
        state = "frozen" if self._frozen else "building"
        return (
            f"GradedSubspace(n={self.n}, degree={self.degree}, "
            f"dim={self.dim}, {state})"
        )


def insert(S: GradedSubspace, p: Poly) -> GradedSubspace:
    return S.insert(p)


def contains(S: GradedSubspace, p: Poly) -> bool:
    return S.contains(p)


def is_subspace(S: GradedSubspace, T: GradedSubspace) -> bool:
    """True iff every row of S reduces to zero against T."""
    return S.is_subspace_of(T)


def extension_dim(base: GradedSubspace, rows: Iterable[IntRow | Poly]) -> int:
    """dim(span(base ∪ rows)) - dim(base), without copying base."""
    side = GradedSubspace(base.n, base.degree)
    for r in rows:
        if isinstance(r, Poly):
            r = poly_to_introw(r, base.n, base.degree)
        rem = base.residue_row(r)
        if rem:
            side.insert_row(rem)
    return side.dim
