"""Claim checkers: catalog order, pass behavior, witness derivations, and
naive cross-checks of two checkers on every labeled structure at n = 2."""

from itertools import combinations

import pytest

from conftest import (
    make_min_chain,
    make_null_table,
    make_one_element,
    named_structures,
    structure_pool,
)
from pogamma.setcalc import regularity
from pogamma.theorems import (
    THEOREM_IDS,
    CheckReport,
    check_prop4,
    check_prop6,
    check_remark7,
    check_thm8,
    run_all,
    run_selected,
    thm8_witness,
)

POOL = structure_pool(2, 1) + structure_pool(2, 2) + structure_pool(3, 1)


def test_run_all_passes_on_named_structures():
    for name, s in named_structures():
        reports = run_all(s)
        assert [r.theorem_id for r in reports] == list(THEOREM_IDS)
        for r in reports:
            assert r.status == "pass", f"{name} {r.theorem_id}: {r.detail}"
            assert r.witness is None
            assert isinstance(r.detail, str) and r.detail


def test_run_all_passes_on_enumerated_pool():
    for s in POOL:
        for r in run_all(s):
            assert r.status == "pass", f"{r.theorem_id}: {r.detail}"


def test_run_selected_keeps_catalog_order():
    s = make_min_chain()
    reports = run_selected(s, ["thm9", "prop2"])
    assert [r.theorem_id for r in reports] == ["prop2", "thm9"]
    only = run_selected(s, ["prop4"])
    assert [r.theorem_id for r in only] == ["prop4"]


def test_run_selected_splits_the_paired_checker():
    s = make_min_chain()
    forward = run_selected(s, ["prop6-forward"])
    assert [r.theorem_id for r in forward] == ["prop6-forward"]
    converse = run_selected(s, ["prop6-converse"])
    assert [r.theorem_id for r in converse] == ["prop6-converse"]


def test_run_selected_rejects_unknown_ids():
    with pytest.raises(ValueError):
        run_selected(make_min_chain(), ["prop2", "lemma1"])


def test_prop6_directions_are_vacuous_where_hypotheses_fail():
    # the null table is neither completely regular nor product-closed
    forward, converse = check_prop6(make_null_table())
    assert forward.status == "pass" and "vacuous" in forward.detail
    assert converse.status == "pass" and "vacuous" in converse.detail
    forward, converse = check_prop6(make_min_chain())
    assert "applies" in forward.detail
    assert "applies" in converse.detail


def test_remark7_vacuous_and_active_details():
    assert "vacuous" in check_remark7(make_null_table()).detail
    assert "completely regular" in check_remark7(make_min_chain()).detail


def test_thm8_witness_examples():
    min_chain = make_min_chain()
    assert thm8_witness(min_chain, 1, 1, 0, 0) == (1, 0, 0)
    assert thm8_witness(make_one_element(), 0, 0, 0, 0) == (0, 0, 0)
    with pytest.raises(ValueError):
        thm8_witness(min_chain, 1, 0, 0, 0)


def test_thm8_derived_witnesses_replay_directly():
    from pogamma.setcalc import is_strongly_regular
    replayed = 0
    for s in POOL:
        if is_strongly_regular(s) is not None:
            continue
        assert check_thm8(s).status == "pass"
        for a in range(s.n):
            x, g, u = regularity(s, a, "strongly-regular").data
            y, g2, u2 = thm8_witness(s, a, x, g, u)
            assert (g2, u2) == (g, u)
            p = s.prod
            assert s.le(a, p(u, p(g, a, y), a))
            assert s.le(y, p(g, p(u, y, a), y))
            assert p(g, a, y) == p(g, y, a) == p(u, y, a) == p(u, a, y)
            replayed += 1
    assert replayed > 0


def test_check_report_shape():
    r = run_all(make_one_element())[0]
    assert isinstance(r, CheckReport)
    assert r.status in ("pass", "violation")
    assert r.theorem_id in THEOREM_IDS


def _naive_prop4_holds(s):
    # the equivalence restated with raw loops and itertools.combinations,
    # sharing no helper code with the checker
    n, m = s.n, s.m

    def completely(a):
        return any(
            s.le(a, s.prod(g3, s.prod(g2, s.prod(g1, a, a), x), s.prod(g4, a, a)))
            for x in range(n)
            for g1 in range(m) for g2 in range(m) for g3 in range(m) for g4 in range(m))

    cr = all(completely(a) for a in range(n))
    all_semiprime = True
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            b = set(combo)
            prods = {s.prod(g2, s.prod(g1, x, t), y)
                     for x in b for t in range(n) for y in b
                     for g1 in range(m) for g2 in range(m)}
            down = {t for t in range(n) if any(s.le(t, u) for u in b)}
            if not (prods <= b and down == b):
                continue
            for a in range(n):
                if a not in b and all(s.prod(g, a, a) in b for g in range(m)):
                    all_semiprime = False
    return cr == all_semiprime


def _naive_remark7_holds(s):
    n, m = s.n, s.m

    def strong(a):
        for x in range(n):
            for g in range(m):
                for u in range(m):
                    ax = s.prod(g, a, x)
                    if (s.le(a, s.prod(u, ax, a))
                            and ax == s.prod(g, x, a) == s.prod(u, x, a) == s.prod(u, a, x)):
                        return True
        return False

    def completely(a):
        return any(
            s.le(a, s.prod(g3, s.prod(g2, s.prod(g1, a, a), x), s.prod(g4, a, a)))
            for x in range(n)
            for g1 in range(m) for g2 in range(m) for g3 in range(m) for g4 in range(m))

    if not all(strong(a) for a in range(n)):
        return True
    return all(completely(a) for a in range(n))


def test_naive_cross_check_on_all_labeled_n2_structures():
    labeled = structure_pool(2, 1, canonical=False) + structure_pool(2, 2, canonical=False)
    assert len(labeled) == 20 + 34
    for s in labeled:
        assert (check_prop4(s).status == "pass") == _naive_prop4_holds(s)
        assert (check_remark7(s).status == "pass") == _naive_remark7_holds(s)
