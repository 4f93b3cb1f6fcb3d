"""Unit tests for the congruence check engine.

The sweep engine works on cleared sums accumulated modulo (q^n - 1)^e, so
the tests here hold it against two slower reference routes (term-ratio
recursion with modular inversion, and fully independent per-term builds)
and against hand-computed residues at the smallest n.
"""

import pytest

from qcongr.polyring import LaurentPoly, RationalFunction
from qcongr.qobjects import q_integer, qpoch
from qcongr.residue import Modulus
from qcongr.verify import (
    CATALOG,
    MODULAR_IDS,
    CheckResult,
    CongruenceReport,
    _accumulate_product,
    _accumulate_sum,
    _exact_factorization_sides,
    _PowerAccumulator,
    check,
    lhs_sum,
    lhs_sum_naive,
    rhs_value,
    sweep,
    verify_combined_sums,
    verify_rhs_e1_pairs,
)

Q = LaurentPoly.monomial(1)

SUM_SHAPES = [(1, 1), (-1, 1), (-1, 2), (1, 2), (3, 1)]


def engine_sum_value(n, a, c, e):
    """The cleared-sum route, mapped down and divided by (q;q)_{n-1}."""
    mod = Modulus(n, e)
    acc = _PowerAccumulator(n, e)
    s = acc.to_residue(mod, _accumulate_sum(acc, n, a, c))
    b = acc.to_residue(mod, _accumulate_product(acc, 1, 1, n - 1))
    return s * b.inverse()


def test_catalog_shape():
    assert list(CATALOG) == [
        "GZcon", "guokey", "GGcon1", "GGcon2",
        "thm1.1a", "thm1.1b", "thm1.2a", "thm1.2b",
        "lemma2.2", "aux-central", "aux-negpoch", "aux-exact-lemma22",
    ]
    assert MODULAR_IDS == tuple(list(CATALOG)[:-1])
    for cid, ch in CATALOG.items():
        assert ch.id == cid
        if ch.kind == "exact":
            assert ch.e is None
            assert ch.accepts(1) and ch.accepts(2)
        else:
            assert ch.e in (1, 2)
            assert ch.accepts(3) and ch.accepts(99)
            assert not ch.accepts(4) and not ch.accepts(1)


def test_rhs_hand_values_n3():
    m1 = Modulus(3, 1)
    m2 = Modulus(3, 2)
    assert rhs_value("GZcon", 3, m1) == -m1.q_power(2)
    assert rhs_value("guokey", 3, m2) == -m2.q_power(2)
    assert rhs_value("GGcon1", 3, m1) == m1.q_power(2)
    assert rhs_value("GGcon2", 3, m1) == m1.one()
    assert rhs_value("thm1.1a", 3, m2) \
        == m2.q_power(2) - m2.reduce((1 + Q) * q_integer(3))
    assert rhs_value("thm1.1b", 3, m2) \
        == m2.q_power(3) - m2.reduce(2 * Q * q_integer(3))
    assert rhs_value("thm1.2a", 3, m2) \
        == -m2.q_power(1) + m2.reduce((Q - 1) * q_integer(3)) * m2.q_power(-1)
    assert rhs_value("thm1.2b", 3, m2) \
        == m2.q_power(0) + m2.reduce((1 + Q) * q_integer(3)) * m2.q_power(-2)
    assert rhs_value("lemma2.2", 3, m2) == -m2.reduce(Q * q_integer(3))
    assert rhs_value("aux-negpoch", 3, m1) == m1.one()


def test_rhs_sign_alternation():
    # the leading sign alternates with period 4 in n
    m5 = Modulus(5, 1)
    m7 = Modulus(7, 1)
    assert rhs_value("GZcon", 5, m5) == m5.q_power(6)
    assert rhs_value("GZcon", 7, m7) == -m7.q_power(12)
    assert rhs_value("GGcon1", 5, m5) == -m5.q_power(6)
    assert rhs_value("GGcon1", 7, m7) == m7.q_power(12)
    assert rhs_value("GGcon2", 5, m5) == -m5.q_power(-1)
    assert rhs_value("thm1.2b", 5, Modulus(5, 2)).rep \
        == (-Modulus(5, 2).q_power(4)
            + Modulus(5, 2).reduce((1 + Q) * q_integer(5))
            * Modulus(5, 2).q_power(-2)).rep


def test_hand_built_sum_n3():
    # sum_{k=0}^{2} (q;q^2)_k/(q;q)_k q^k, written out term by term
    honest = RationalFunction(LaurentPoly.one()) \
        + RationalFunction((1 - Q) * Q, 1 - Q) \
        + RationalFunction((1 - Q) * (1 - Q**3) * Q**2, (1 - Q) * (1 - Q**2))
    for e in (1, 2):
        mod = Modulus(3, e)
        expect = mod.reduce(honest.num) * mod.reduce(honest.den).inverse()
        assert engine_sum_value(3, 1, 1, e) == expect
        assert lhs_sum(3, 1, 2, 1, mod) == expect


def test_three_routes_agree():
    for n in (3, 5, 9):
        for e in (1, 2):
            mod = Modulus(n, e)
            for a, c in SUM_SHAPES:
                ref = lhs_sum(n, a, 2, c, mod)
                assert lhs_sum_naive(n, a, 2, c, mod) == ref, (n, e, a, c)
                assert engine_sum_value(n, a, c, e) == ref, (n, e, a, c)


def test_accumulator_matches_plain_reduction():
    for n in (3, 5, 8):
        for e in (1, 2, 3):
            acc = _PowerAccumulator(n, e)
            mod = Modulus(n, e)
            p = qpoch(1, 2, n) * Q**3 + q_integer(2 * n)
            xs = [0] * (p.degree + 1)
            for exp, cc in p.terms():
                xs[exp] = cc
            assert acc.to_residue(mod, acc.reduce(list(xs))) == mod.reduce(p)


def test_all_checks_pass_small():
    for cid in MODULAR_IDS:
        for n in (3, 5, 7, 9, 11, 13, 15):
            cell = check(cid, n)
            assert cell.ok, (cid, n)
            assert cell.e == CATALOG[cid].e
            assert cell.lhs == cell.rhs


def test_check_domain_and_unknown_id():
    with pytest.raises(KeyError):
        check("nosuch", 3)
    with pytest.raises(ValueError):
        check("GZcon", 4)
    with pytest.raises(ValueError):
        check("GZcon", 1)


def test_sign_flip_fails_everywhere_small():
    for n in range(3, 26, 2):
        cell = check("thm1.1a", n, sign_flip=True)
        assert not cell.ok, n
        assert cell.status == "fail"
        # the recorded left side is the honest value, not the flipped rhs
        assert cell.lhs == check("thm1.1a", n).rhs


def test_sign_flip_changes_rhs_only_by_power_sign():
    mod = Modulus(5, 2)
    plain = rhs_value("thm1.1a", 5, mod)
    flipped = rhs_value("thm1.1a", 5, mod, sign_flip=True)
    assert plain != flipped
    # corrections are shared; at n = 5 the plain leading sign is negative
    assert flipped - plain == mod.q_power(6) * 2


def test_exact_factorization_check():
    for n in range(1, 13):
        cell = check("aux-exact-lemma22", n)
        assert cell.ok
        assert cell.e is None
        left, right = _exact_factorization_sides(n)
        assert left == right
        # and the underlying rational identity at desk scale
        lhs = RationalFunction(qpoch(1, 2, n - 1), qpoch(1, 1, n - 1))
        rhs = RationalFunction(
            qpoch(1, 1, 2 * n - 2),
            qpoch(1, 1, n - 1, coeff=-1) * qpoch(1, 1, n - 1) ** 2)
        assert lhs == rhs


def test_sweep_structure_and_order():
    report = sweep(n_max=15)
    assert report.all_pass
    assert not report.failures()
    assert len(report.cells) == len(MODULAR_IDS) * 7
    order = {cid: i for i, cid in enumerate(CATALOG)}
    keys = [(order[c.check], c.n) for c in report.cells]
    assert keys == sorted(keys)
    assert {c.n for c in report.cells} == {3, 5, 7, 9, 11, 13, 15}


def test_sweep_subset_and_errors():
    report = sweep(["thm1.2b", "GZcon"], 9)
    assert {c.check for c in report.cells} == {"GZcon", "thm1.2b"}
    assert [c.check for c in report.cells][:4] == ["GZcon"] * 4
    with pytest.raises(KeyError):
        sweep(["nosuch"], 9)
    assert sweep([], 9).cells == []
    assert sweep([], 9).all_pass


def test_sweep_cells_match_independent_checks():
    report = sweep(n_max=9)
    for cell in report.cells:
        alone = check(cell.check, cell.n)
        assert cell.status == alone.status
        assert cell.lhs == alone.lhs
        assert cell.rhs == alone.rhs


def test_exact_check_runs_under_own_id():
    report = sweep(["aux-exact-lemma22"], 9)
    assert report.all_pass
    assert [c.n for c in report.cells] == [3, 5, 7, 9]
    assert all(c.e is None for c in report.cells)


def test_json_cell_shape():
    cell = check("guokey", 3)
    obj = cell.to_json_obj()
    assert list(obj) == ["check", "n", "e", "status", "lhs", "rhs"]
    assert obj["check"] == "guokey" and obj["n"] == 3 and obj["e"] == 2
    assert obj["status"] == "pass"
    assert obj["lhs"] == obj["rhs"]
    assert set(obj["lhs"]) == {"terms"}
    exact = check("aux-exact-lemma22", 3).to_json_obj()
    assert exact["e"] is None
    assert set(exact["lhs"]) == {"terms"}


def test_json_lines_deterministic():
    a = sweep(n_max=9).to_json_lines()
    b = sweep(n_max=9).to_json_lines()
    assert a == b
    assert a.count("\n") == len(MODULAR_IDS) * 4 - 1


def test_render_table():
    text = sweep(["GZcon"], 7).render_table()
    lines = text.splitlines()
    assert lines[0].split() == ["check", "n", "e", "status"]
    assert len(lines) == 5
    assert lines[-1] == "3 cells, 3 pass, 0 fail"


def test_failing_cell_reports_honest_lhs():
    cell = check("guokey", 3, sign_flip=True)
    report = CongruenceReport(["guokey"], 3, [cell])
    assert not report.all_pass
    assert report.failures() == [cell]
    assert "fail" in report.render_table()
    # witness equals the true sum residue, reconstructed independently
    mod = Modulus(3, 2)
    assert cell.lhs == lhs_sum(3, 1, 2, 1, mod)


def test_combined_sums():
    for n in range(3, 26, 2):
        assert verify_combined_sums(n), n


def test_rhs_pairs_collapse_at_e1():
    for n in range(3, 26, 2):
        results = verify_rhs_e1_pairs(n)
        assert set(results) == {"guokey", "thm1.1a", "thm1.2b"}
        assert all(results.values()), (n, results)


def test_e2_pass_implies_e1_statement():
    # the e = 1 companions of the e = 2 checks hold at the same n
    for strong, weak in (("guokey", "GZcon"), ("thm1.1a", "GGcon1"),
                         ("thm1.2b", "GGcon2")):
        for n in (3, 5, 7, 9):
            assert check(strong, n).ok
            assert check(weak, n).ok
