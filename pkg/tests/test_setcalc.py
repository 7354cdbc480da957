"""Subset calculus: closures, products, bi-ideals, and witness searches."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    make_left_zero,
    make_min_chain,
    make_null_table,
    make_one_element,
    named_structures,
    nonempty_subsets,
    structure_pool,
)
from pogamma.setcalc import (
    REGULARITY_KINDS,
    RegularityWitness,
    all_bi_ideals,
    bi_ideal_generated_fixpoint,
    bi_ideal_generated_formula,
    compose_cr_witness,
    downward_closure,
    is_bi_ideal,
    is_completely_regular,
    is_semiprime,
    is_strongly_regular,
    is_strongly_regular_subset,
    is_subsemigroup,
    regularity,
    semiprime_failure,
    set_product,
    witness_holds,
    word_product,
)

POOL = structure_pool(2, 1) + structure_pool(2, 2) + structure_pool(3, 1)


def test_downward_closure_examples():
    min_chain = make_min_chain()
    assert downward_closure(min_chain, {1}) == frozenset({0, 1})
    assert downward_closure(min_chain, {0}) == frozenset({0})
    assert downward_closure(make_null_table(), {1}) == frozenset({1})
    assert downward_closure(min_chain, frozenset()) == frozenset()


def test_set_product_examples():
    min_chain = make_min_chain()
    assert set_product(min_chain, {0, 1}, {1}) == frozenset({0, 1})
    left_zero = make_left_zero()
    assert set_product(left_zero, {0, 1}, {1}) == frozenset({0, 1})
    assert set_product(left_zero, {1}, {0, 1}) == frozenset({1})
    assert set_product(make_null_table(), {0, 1}, {0, 1}) == frozenset({0})
    assert set_product(min_chain, frozenset(), {1}) == frozenset()


def test_word_product_folds_left():
    s = make_min_chain()
    assert word_product(s, [{0, 1}]) == frozenset({0, 1})
    a, b, c = {1}, {0, 1}, {1}
    assert word_product(s, [a, b, c]) == set_product(s, set_product(s, a, b), c)
    with pytest.raises(ValueError):
        word_product(s, [])


@st.composite
def _structure_and_masks(draw):
    s = draw(st.sampled_from(POOL))
    masks = draw(st.tuples(st.integers(0, (1 << s.n) - 1), st.integers(0, (1 << s.n) - 1)))
    sets = tuple(frozenset(i for i in range(s.n) if mask >> i & 1) for mask in masks)
    return (s,) + sets


@given(_structure_and_masks())
@settings(max_examples=300, deadline=None)
def test_downward_closure_laws(case):
    s, a, b = case
    ca = downward_closure(s, a)
    assert a <= ca
    assert downward_closure(s, ca) == ca
    assert ca <= downward_closure(s, a | b)
    lhs = set_product(s, ca, downward_closure(s, b))
    assert lhs <= downward_closure(s, set_product(s, a, b))


def test_is_subsemigroup():
    null = make_null_table()
    assert is_subsemigroup(null, null.universe)
    assert is_subsemigroup(null, {0})
    assert not is_subsemigroup(null, {1})
    min_chain = make_min_chain()
    assert is_subsemigroup(min_chain, {1})
    with pytest.raises(ValueError):
        is_subsemigroup(null, frozenset())


def test_is_bi_ideal_examples():
    null = make_null_table()
    assert is_bi_ideal(null, {0})
    assert not is_bi_ideal(null, {1})
    min_chain = make_min_chain()
    assert is_bi_ideal(min_chain, {0})
    assert not is_bi_ideal(min_chain, {1})
    assert is_bi_ideal(min_chain, {0, 1})
    with pytest.raises(ValueError):
        is_bi_ideal(null, frozenset())


def test_all_bi_ideals_listing_and_order():
    assert all_bi_ideals(make_one_element()) == [frozenset({0})]
    assert all_bi_ideals(make_null_table()) == [frozenset({0}), frozenset({0, 1})]
    assert all_bi_ideals(make_min_chain()) == [frozenset({0}), frozenset({0, 1})]
    assert all_bi_ideals(make_left_zero()) == \
        [frozenset({0}), frozenset({1}), frozenset({0, 1})]


def _brute_bi_ideals(s):
    # definition written out with raw loops, no setcalc helpers
    out = []
    for b in nonempty_subsets(s.n):
        prods = {s.prod(g2, s.prod(g1, x, t), y)
                 for x in b for t in range(s.n) for y in b
                 for g1 in range(s.m) for g2 in range(s.m)}
        down = {t for t in range(s.n) if any(s.le(t, u) for u in b)}
        if prods <= set(b) and down == set(b):
            out.append(b)
    return out


def test_all_bi_ideals_matches_brute_definition():
    for s in structure_pool(2, 2) + structure_pool(3, 1):
        assert all_bi_ideals(s) == _brute_bi_ideals(s)


def test_generated_bi_ideal_examples():
    null = make_null_table()
    assert bi_ideal_generated_formula(null, {1}) == frozenset({0, 1})
    assert bi_ideal_generated_formula(null, {0}) == frozenset({0})
    product_of_one = set_product(null, {1}, {1})
    assert bi_ideal_generated_formula(null, product_of_one) == frozenset({0})
    min_chain = make_min_chain()
    assert bi_ideal_generated_formula(min_chain, {1}) == frozenset({0, 1})
    assert bi_ideal_generated_formula(min_chain, {0}) == frozenset({0})


def test_generated_routes_agree_on_named_structures():
    for _, s in named_structures():
        for a in nonempty_subsets(s.n):
            formula = bi_ideal_generated_formula(s, a)
            assert formula == bi_ideal_generated_fixpoint(s, a)
            assert a <= formula
            assert is_bi_ideal(s, formula)


def test_generated_is_least_on_named_structures():
    for _, s in named_structures():
        ideals = all_bi_ideals(s)
        for a in range(s.n):
            b = bi_ideal_generated_formula(s, {a})
            assert b in ideals
            assert all(b <= c for c in ideals if a in c)


def test_generated_requires_nonempty():
    s = make_min_chain()
    with pytest.raises(ValueError):
        bi_ideal_generated_formula(s, frozenset())
    with pytest.raises(ValueError):
        bi_ideal_generated_fixpoint(s, frozenset())


def test_semiprime_examples():
    null = make_null_table()
    assert semiprime_failure(null, {0}) == 1
    assert not is_semiprime(null, {0})
    assert is_semiprime(null, {0, 1})
    assert is_semiprime(make_min_chain(), {0})
    assert is_semiprime(make_left_zero(), {0})


def test_regularity_witness_examples():
    min_chain = make_min_chain()
    w = regularity(min_chain, 1, "regular")
    assert w == RegularityWitness("regular", 1, (1, 0, 0))
    assert witness_holds(min_chain, w)
    assert regularity(min_chain, 0, "regular") == RegularityWitness("regular", 0, (0, 0, 0))
    null = make_null_table()
    for kind in REGULARITY_KINDS:
        assert regularity(null, 1, kind) is None
    assert regularity(null, 0, "regular") == RegularityWitness("regular", 0, (0, 0, 0))


def test_regularity_scan_returns_first_hit():
    # element 1 of the left-zero table is witnessed by x = 0 and x = 1;
    # the scan must settle on 0
    w = regularity(make_left_zero(), 1, "regular")
    assert w.data == (0, 0, 0)


_DATA_WIDTH = {kind: (5 if kind == "completely-regular" else 3) for kind in REGULARITY_KINDS}


def _first_witness_brute(s, a, kind):
    width = _DATA_WIDTH[kind]
    for data in product(range(s.n), *[range(s.m)] * (width - 1)):
        w = RegularityWitness(kind, a, data)
        if witness_holds(s, w):
            return w
    return None


def test_regularity_agrees_with_exhaustive_first_hit():
    for s in structure_pool(2, 2):
        for a in range(s.n):
            for kind in REGULARITY_KINDS:
                assert regularity(s, a, kind) == _first_witness_brute(s, a, kind)


def test_unknown_kind_rejected():
    s = make_min_chain()
    with pytest.raises(ValueError):
        regularity(s, 0, "reversible")
    with pytest.raises(ValueError):
        witness_holds(s, RegularityWitness("reversible", 0, (0, 0, 0)))


def test_structure_level_flags():
    assert is_completely_regular(make_min_chain()) is None
    assert is_strongly_regular(make_min_chain()) is None
    assert is_completely_regular(make_null_table()) == 1
    assert is_strongly_regular(make_null_table()) == 1
    assert is_strongly_regular(make_left_zero()) is None
    assert is_strongly_regular(make_one_element()) is None


def test_strong_regularity_implies_complete_regularity_on_pool():
    for s in POOL:
        if is_strongly_regular(s) is None:
            assert is_completely_regular(s) is None


def test_compose_cr_witness_on_fully_regular_structures():
    seen = 0
    for s in structure_pool(2, 2) + structure_pool(3, 1):
        if is_completely_regular(s) is not None:
            continue
        for a in range(s.n):
            reg = regularity(s, a, "regular")
            rreg = regularity(s, a, "right-regular")
            lreg = regularity(s, a, "left-regular")
            w = compose_cr_witness(s, a, reg, rreg, lreg)
            assert w.kind == "completely-regular"
            assert w.element == a
            assert len(w.data) == 5
            assert w.data[1:3] == rreg.data[1:]
            assert w.data[3:5] == lreg.data[1:]
            assert witness_holds(s, w)
            seen += 1
    assert seen > 0


def test_compose_cr_witness_rejects_bad_inputs():
    s = make_min_chain()
    reg = regularity(s, 1, "regular")
    rreg = regularity(s, 1, "right-regular")
    lreg = regularity(s, 1, "left-regular")
    with pytest.raises(ValueError):
        compose_cr_witness(s, 1, rreg, rreg, lreg)
    with pytest.raises(ValueError):
        compose_cr_witness(s, 0, reg, rreg, lreg)
    null = make_null_table()
    fake = RegularityWitness("regular", 1, (0, 0, 0))
    assert not witness_holds(null, fake)
    with pytest.raises(ValueError):
        compose_cr_witness(null, 1,
                           fake,
                           RegularityWitness("right-regular", 1, (0, 0, 0)),
                           RegularityWitness("left-regular", 1, (0, 0, 0)))


def test_strongly_regular_subset_examples():
    null = make_null_table()
    assert not is_strongly_regular_subset(null, {0, 1})
    assert is_strongly_regular_subset(null, {0})
    min_chain = make_min_chain()
    assert is_strongly_regular_subset(min_chain, {0})
    assert is_strongly_regular_subset(min_chain, {0, 1})
    assert is_strongly_regular_subset(make_left_zero(), {0, 1})
    with pytest.raises(ValueError):
        is_strongly_regular_subset(null, {1})
    with pytest.raises(ValueError):
        is_strongly_regular_subset(null, frozenset())


def test_subset_witness_relaxation_only_widens():
    for s in structure_pool(2, 2):
        for t in nonempty_subsets(s.n):
            if not is_subsemigroup(s, t):
                continue
            if is_strongly_regular_subset(s, t, witness_in_subset=True):
                assert is_strongly_regular_subset(s, t, witness_in_subset=False)
