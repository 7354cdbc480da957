"""Executable checkers for the workbench's claim catalog.

Each checker evaluates one universally quantified claim about bi-ideals
and regularity on a concrete finite structure and reports pass or a
violating witness.  Claim ids (prop2 .. thm9) are the stable interface
used by the CLI filter and by sweep reports.  Equivalence checkers
evaluate every side of an equivalence independently and compare at the
end, so a bug in one side cannot mask the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import PoGammaSemigroup
from .setcalc import (
    all_bi_ideals,
    bi_ideal_generated_formula,
    downward_closure,
    is_completely_regular,
    is_strongly_regular,
    is_strongly_regular_subset,
    is_subsemigroup,
    regularity,
    semiprime_failure,
    set_product,
    witness_holds,
    word_product,
)
from .setcalc import RegularityWitness

THEOREM_IDS = (
    "prop2",
    "prop3",
    "prop4",
    "prop5",
    "prop6-forward",
    "prop6-converse",
    "remark7",
    "thm8",
    "thm9",
)


@dataclass
class CheckReport:
    """Outcome of one claim check on one structure.

    status is "pass" or "violation"; a violation always carries a witness
    mapping with enough data to re-evaluate the failure directly.
    """

    theorem_id: str
    status: str
    witness: dict | None
    detail: str


def _passed(tid: str, detail: str) -> CheckReport:
    return CheckReport(tid, "pass", None, detail)


def _violated(tid: str, witness: dict, detail: str) -> CheckReport:
    return CheckReport(tid, "violation", witness, detail)


def check_prop2(s: PoGammaSemigroup) -> CheckReport:
    """B(x) M B(y) <= (x M y] for all elements x, y."""
    u = s.universe
    for x in range(s.n):
        bx = bi_ideal_generated_formula(s, {x})
        for y in range(s.n):
            by = bi_ideal_generated_formula(s, {y})
            lhs = word_product(s, [bx, u, by])
            rhs = downward_closure(s, word_product(s, [{x}, u, {y}]))
            extra = lhs - rhs
            if extra:
                e = min(extra)
                return _violated("prop2", {"x": x, "y": y, "element": e},
                                 f"element {e} of B({x})MB({y}) escapes (x M y]")
    return _passed("prop2", "B(x)MB(y) <= (xMy] for all pairs")


def check_prop3(s: PoGammaSemigroup) -> CheckReport:
    """Regular + left regular + right regular everywhere is the same as
    the one-inequality form a <= (a g1 a) g2 x g3 (a g4 a) everywhere."""
    conj_fail = None
    for a in range(s.n):
        if (regularity(s, a, "regular") is None
                or regularity(s, a, "left-regular") is None
                or regularity(s, a, "right-regular") is None):
            conj_fail = a
            break
    single_fail = is_completely_regular(s)
    conj = conj_fail is None
    single = single_fail is None
    if conj != single:
        element = single_fail if conj else conj_fail
        return _violated("prop3",
                         {"conjunction": conj, "single_inequality": single, "element": element},
                         f"sides disagree at element {element}")
    state = "hold" if conj else "fail"
    return _passed("prop3", f"both characterizations {state} together")


def check_prop4(s: PoGammaSemigroup) -> CheckReport:
    """Complete regularity holds exactly when every bi-ideal is semiprime."""
    cr_fail = is_completely_regular(s)
    cr = cr_fail is None
    bad = None
    for b in all_bi_ideals(s):
        a = semiprime_failure(s, b)
        if a is not None:
            bad = (b, a)
            break
    all_semiprime = bad is None
    if cr != all_semiprime:
        if bad is not None:
            witness = {"bi_ideal": sorted(bad[0]), "element": bad[1]}
            detail = f"completely regular but bi-ideal {sorted(bad[0])} is not semiprime at {bad[1]}"
        else:
            witness = {"element": cr_fail}
            detail = f"every bi-ideal semiprime but element {cr_fail} is not completely regular"
        return _violated("prop4", witness, detail)
    state = "holds" if cr else "fails"
    return _passed("prop4", f"each side {state}: equivalence intact")


def check_prop5(s: PoGammaSemigroup) -> CheckReport:
    """Complete regularity, B(a) = B(aa) = B(aaMaa) for all a, and
    B(a) = B(aa) for all a hold or fail together."""
    u = s.universe
    cr = is_completely_regular(s) is None
    chain_ok, chain_wit = True, None
    pair_ok, pair_wit = True, None
    for a in range(s.n):
        single = frozenset({a})
        b_a = bi_ideal_generated_formula(s, single)
        b_aa = bi_ideal_generated_formula(s, set_product(s, single, single))
        b_big = bi_ideal_generated_formula(s, word_product(s, [single, single, u, single, single]))
        if pair_ok and b_a != b_aa:
            pair_ok, pair_wit = False, a
        if chain_ok and not (b_a == b_aa == b_big):
            chain_ok, chain_wit = False, a
    if not (cr == chain_ok == pair_ok):
        element = next(w for w in (chain_wit, pair_wit, 0) if w is not None)
        return _violated("prop5",
                         {"completely_regular": cr, "triple_equality": chain_ok,
                          "pair_equality": pair_ok, "element": element},
                         f"conditions disagree at element {element}")
    state = "hold" if cr else "fail"
    return _passed("prop5", f"all three conditions {state} together")


def check_prop6(s: PoGammaSemigroup) -> tuple[CheckReport, CheckReport]:
    """Forward: complete regularity forces B = (BB] for every bi-ideal.
    Converse, in the printed form: that product property forces every
    element to be regular (not the full way back to complete regularity)."""
    cr = is_completely_regular(s) is None
    product_fail = None
    for b in all_bi_ideals(s):
        if downward_closure(s, set_product(s, b, b)) != b:
            product_fail = b
            break
    product_prop = product_fail is None
    if cr and not product_prop:
        forward = _violated("prop6-forward", {"bi_ideal": sorted(product_fail)},
                            f"bi-ideal {sorted(product_fail)} differs from (BB]")
    else:
        state = "applies" if cr else "is vacuous (not completely regular)"
        forward = _passed("prop6-forward", f"forward direction {state}")
    reg_fail = None
    for a in range(s.n):
        if regularity(s, a, "regular") is None:
            reg_fail = a
            break
    if product_prop and reg_fail is not None:
        converse = _violated("prop6-converse", {"element": reg_fail},
                             f"every bi-ideal equals (BB] yet {reg_fail} is not regular")
    else:
        state = "applies" if product_prop else "is vacuous (product property fails)"
        converse = _passed("prop6-converse", f"converse direction {state}")
    return forward, converse


def check_remark7(s: PoGammaSemigroup) -> CheckReport:
    """Strong regularity implies complete regularity."""
    if is_strongly_regular(s) is not None:
        return _passed("remark7", "vacuous: not strongly regular")
    cr_fail = is_completely_regular(s)
    if cr_fail is not None:
        return _violated("remark7", {"element": cr_fail},
                         f"strongly regular but element {cr_fail} is not completely regular")
    return _passed("remark7", "strongly regular and completely regular")


def thm8_witness(s: PoGammaSemigroup, a: int, x: int, g: int, u: int) -> tuple[int, int, int]:
    """Turn a strong-regularity witness (x, g, u) for a into the derived
    witness y = (x u a) g x, keeping the letters.

    Raises ValueError when (x, g, u) is not actually a strong witness.
    """
    w = RegularityWitness("strongly-regular", a, (x, g, u))
    if not witness_holds(s, w):
        raise ValueError(f"({x}, {g}, {u}) is not a strong-regularity witness for {a}")
    y = s.prod(g, s.prod(u, x, a), x)
    return (y, g, u)


def check_thm8(s: PoGammaSemigroup) -> CheckReport:
    """On a strongly regular structure the derived witness y for each a
    satisfies a <= (a g y) u a, y <= (y u a) g y, and
    a g y = y g a = y u a = a u y."""
    if is_strongly_regular(s) is not None:
        return _passed("thm8", "vacuous: not strongly regular")
    p = s.prod
    for a in range(s.n):
        x, g, u = regularity(s, a, "strongly-regular").data
        y, _, _ = thm8_witness(s, a, x, g, u)
        a_ok = s.le(a, p(u, p(g, a, y), a))
        y_ok = s.le(y, p(g, p(u, y, a), y))
        four_ok = p(g, a, y) == p(g, y, a) == p(u, y, a) == p(u, a, y)
        if not (a_ok and y_ok and four_ok):
            return _violated("thm8",
                             {"a": a, "x": x, "y": y, "g": g, "u": u,
                              "holds": [a_ok, y_ok, four_ok]},
                             f"derived witness {y} fails for element {a}")
    return _passed("thm8", "derived witnesses verified for every element")


def check_thm9(s: PoGammaSemigroup) -> CheckReport:
    """Strong regularity, condition (2), and condition (3) coincide.

    Condition (2): every element is left and right regular and (M a M] is
    a strongly regular subsemigroup for every a.  Condition (3): every a
    lies in (M a] and in (a M], with the same subsemigroup requirement.
    The subsemigroup property of (M a M] is itself part of the claim, so
    a failure there is reported as a violation outright; an empty (M a M]
    cannot occur but would falsify conditions (2) and (3).
    """
    u = s.universe
    b1 = is_strongly_regular(s) is None
    sub_ok = True
    for a in range(s.n):
        span = downward_closure(s, word_product(s, [u, {a}, u]))
        if not span:
            sub_ok = False
            continue
        if not is_subsemigroup(s, span):
            return _violated("thm9", {"a": a, "subset": sorted(span)},
                             f"(M {a} M] is not a subsemigroup")
        if not is_strongly_regular_subset(s, span):
            sub_ok = False
    left_all = all(regularity(s, a, "left-regular") is not None for a in range(s.n))
    right_all = all(regularity(s, a, "right-regular") is not None for a in range(s.n))
    b2 = left_all and right_all and sub_ok
    sided_ok = True
    for a in range(s.n):
        in_left = a in downward_closure(s, word_product(s, [u, {a}]))
        in_right = a in downward_closure(s, word_product(s, [{a}, u]))
        if not (in_left and in_right):
            sided_ok = False
            break
    b3 = sided_ok and sub_ok
    if not (b1 == b2 == b3):
        return _violated("thm9",
                         {"strongly_regular": b1, "condition2": b2, "condition3": b3},
                         "the three conditions disagree")
    state = "hold" if b1 else "fail"
    return _passed("thm9", f"all three conditions {state} together")


_SINGLE_CHECKERS = {
    "prop2": check_prop2,
    "prop3": check_prop3,
    "prop4": check_prop4,
    "prop5": check_prop5,
    "remark7": check_remark7,
    "thm8": check_thm8,
    "thm9": check_thm9,
}


def run_selected(s: PoGammaSemigroup, ids) -> list[CheckReport]:
    """Run the named checkers, reporting in catalog order."""
    wanted = set(ids)
    unknown = wanted - set(THEOREM_IDS)
    if unknown:
        raise ValueError(f"unknown theorem ids: {sorted(unknown)}")
    results = {}
    if wanted & {"prop6-forward", "prop6-converse"}:
        forward, converse = check_prop6(s)
        results["prop6-forward"] = forward
        results["prop6-converse"] = converse
    for tid in wanted - {"prop6-forward", "prop6-converse"}:
        results[tid] = _SINGLE_CHECKERS[tid](s)
    return [results[tid] for tid in THEOREM_IDS if tid in wanted]


def run_all(s: PoGammaSemigroup) -> list[CheckReport]:
    """All nine checkers in catalog order."""
    return run_selected(s, THEOREM_IDS)
