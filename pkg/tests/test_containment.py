from fractions import Fraction

import pytest

from lcsideals.containment import (
    ad_string_poly,
    bound_report,
    check_open_elements,
    conjecture_2k_sweep,
    conjectured_2k_index,
    containment_index,
    default_cutoff,
    pbw_witness,
    sl2_witness,
    _mat_add,
    _mat_bracket,
    _E,
    _F,
    _H,
)
from lcsideals.freealg import Poly, bracket
from lcsideals.lyndon import is_lyndon, pbw_degree
from lcsideals.series import l_span, m_span


def test_headline_example_a2_22():
    rep = containment_index(2, (2, 2), 6)
    assert rep.index_observed == 3
    assert rep.upper_bound_pbw == 3
    assert rep.lower_bound_formula == 2
    assert rep.witness_degree == 4
    # definitive non-containment of the witness
    assert not m_span(2, 4, 4).contains(rep.witness)
    assert m_span(2, 3, 4).contains(rep.witness)


def test_a3_22_is_three():
    rep = containment_index(3, (2, 2), 6)
    assert rep.index_observed == 3


def test_small_theorem1_cells():
    for t in [(2,), (3,), (2, 3), (2, 2, 2)]:
        rep = containment_index(2, t, sum(t) + 2)
        assert rep.index_observed == sum(t) - len(t) + 1


def test_cutoff_too_small():
    with pytest.raises(ValueError):
        containment_index(2, (2, 2), 3)
    assert default_cutoff((2, 2)) == 6


def test_tuple_validation():
    with pytest.raises(ValueError):
        containment_index(2, (1, 2), 5)
    with pytest.raises(ValueError):
        bound_report(2, ())


def test_report_json_schema():
    rep = containment_index(2, (2, 2), 5)
    obj = rep.to_json_obj()
    assert set(obj) >= {
        "n",
        "tuple",
        "cutoff",
        "index",
        "upper",
        "lower",
        "witness_expr",
        "witness_degree",
        "per_degree",
    }
    assert obj["per_degree"][0]["contained_in"] == [1, 2, 3]
    assert rep.lower_bound_formula <= rep.index_observed <= rep.upper_bound_pbw


def test_even_pair_on_four_generators_drops_below_upper_bound():
    # with four generators the two-factor even product already fails M_3,
    # so the observed index sits strictly below the filtration upper bound
    rep = containment_index(4, (2, 2), 6)
    assert rep.index_observed == 2
    assert rep.index_observed == conjectured_2k_index(4, 2)
    assert rep.index_observed < rep.upper_bound_pbw
    assert not m_span(4, 3, rep.witness_degree).contains(rep.witness)


def test_search_witness_scans_generators():
    from lcsideals.containment import _search_witness

    w, d = _search_witness(4, (2, 2), 2, 5)
    assert w.degree() == d
    assert not m_span(4, 3, d).contains(w)


def test_report_witness_is_definitive():
    # the report invariant: whatever index was observed, the attached
    # witness fails membership in M_{index+1} at its own degree
    for t in [(2,), (2, 2), (2, 3), (3, 3), (2, 2, 2)]:
        rep = containment_index(2, t, sum(t) + 1)
        assert not m_span(2, rep.index_observed + 1, rep.witness_degree).contains(
            rep.witness
        )
        assert rep.witness_target == rep.index_observed + 1


def test_bound_report_examples():
    # both even: the pairwise rule gives m+l-2
    assert bound_report(2, (2, 4)) == (4, 5)
    # one odd: m+l-1
    assert bound_report(2, (3, 4)) == (6, 6)
    # all odd: lower = upper = sum - k + 1
    assert bound_report(2, (3, 3, 5)) == (9, 9)
    assert bound_report(2, (5,)) == (5, 5)


def test_pbw_witness_shape_and_membership():
    w = pbw_witness(2, (2, 2))
    b = bracket(Poly.gen(2, 1), Poly.gen(2, 2))
    assert w == b * b
    assert pbw_degree(w) == 2
    assert not m_span(2, 4, 4).contains(w)  # M2·M2 ⊄ M4
    assert pbw_witness(2, (4,)).degree() == 4


def test_pbw_witness_factor_words_are_lyndon():
    # the sorted letter choices must land on Lyndon words for every tuple
    for n in (2, 3):
        for t in [(2,), (3,), (2, 2), (2, 3), (4, 2), (2, 2, 3)]:
            cursor = 0
            for length in t:
                letters = tuple(sorted(1 + (cursor + s) % n for s in range(length)))
                cursor += length
                assert is_lyndon(letters)
            w = pbw_witness(n, t)
            assert not w.is_zero()
            assert w.degree() == sum(t)
            assert pbw_degree(w) == len(t)


def test_witness_single_entry_tuple_is_lie_element():
    w = pbw_witness(2, (5,))
    assert pbw_degree(w) == 1
    assert l_span(2, 5, 5).contains(w)


def test_sl2_ad_string_identity():
    # ad^k(h)(e+f) = 2^k (e-f) for odd k, 2^k (e+f) for even k
    ef = _mat_add(_E, _F)
    emf = _mat_add(_E, _F, sign=-1)
    cur = ef
    for k in range(1, 7):
        cur = _mat_bracket(_H, cur)
        want = emf if k % 2 else ef
        scale = 2**k
        assert cur == tuple(
            tuple(scale * want[i][j] for j in range(2)) for i in range(2)
        )


def test_sl2_trace_values_same_parity():
    # ad^{i-1}(h)(e+f) = 2^{i-1}(e±f), so the product evaluates to
    # 2^{i+j-2}(e±f)² = ±2^{i+j-2}·I: trace +2^(i+j-1) for both indices
    # odd, -2^(i+j-1) for both even
    for i in range(2, 7):
        for j in range(2, 7):
            if (i - j) % 2:
                continue
            _, trace = sl2_witness(i, j, 2)
            expected = 2 ** (i + j - 1)
            assert trace == (expected if i % 2 else -expected)


def test_sl2_trace_nonzero_mixed_parity():
    _, trace = sl2_witness(2, 3, 3)
    assert trace != 0


def test_sl2_hypothesis_errors():
    with pytest.raises(ValueError):
        sl2_witness(2, 3, 2)  # mixed parity needs n >= 3
    with pytest.raises(ValueError):
        sl2_witness(1, 3, 2)


def test_sl2_matches_free_algebra_evaluation():
    # evaluate the same element inside A_2 and map words to matrices
    def phi(p: Poly):
        images = {1: _mat_add(_E, _F), 2: _H}
        zero = ((Fraction(0),) * 2,) * 2
        out = zero
        for w, c in p.terms.items():
            m = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
            for letter in w:
                a, b = m, images[letter]
                m = tuple(
                    tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2))
                    for i in range(2)
                )
            out = tuple(
                tuple(out[i][j] + c * m[i][j] for j in range(2)) for i in range(2)
            )
        return out

    for i, j in [(2, 2), (3, 3), (2, 4)]:
        elem = ad_string_poly(2, i, 1) * ad_string_poly(2, j, 1)
        got, trace = sl2_witness(i, j, 2)
        assert phi(elem) == got
        assert trace == got[0][0] + got[1][1]


def test_open_elements_contained_at_degree_six():
    rows = check_open_elements(6)
    assert len(rows) == 3
    assert all(r["contained"] for r in rows)
    assert all(r["degree"] == 6 for r in rows)
    with pytest.raises(ValueError):
        check_open_elements(5)


def test_conjectured_2k_formula_values():
    assert conjectured_2k_index(2, 3) == 4  # k+1
    assert conjectured_2k_index(3, 2) == 3
    assert conjectured_2k_index(4, 1) == 2  # max term vanishes
    assert conjectured_2k_index(4, 3) == 4
    assert conjectured_2k_index(5, 2) == 2
    with pytest.raises(ValueError):
        conjectured_2k_index(1, 2)


def test_conjecture_sweep_small():
    rows = conjecture_2k_sweep(3, 2)
    assert all(r["match"] for r in rows)
    assert {(r["n"], r["k"]) for r in rows} == {(2, 1), (2, 2), (3, 1), (3, 2)}
    with pytest.raises(ValueError):
        conjecture_2k_sweep(6, 2)
