"""Subset calculus over a finite po-Gamma-semigroup.

Subsets of the universe are plain frozensets of element indices.  In
docstrings we write juxtaposition AB for the product set {x g y : x in
A, g any letter, y in B} and (A] for the downward closure of A, so for
example (A u AMA] is the closure of A united with the three-factor
product through the whole universe M.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import PoGammaSemigroup

REGULARITY_KINDS = (
    "regular",
    "left-regular",
    "right-regular",
    "completely-regular",
    "strongly-regular",
)


def downward_closure(s: PoGammaSemigroup, a) -> frozenset:
    """(A]: every element lying below some member of A."""
    leq = s.order.leq
    return frozenset(t for t in range(s.n) if any(leq[t][u] for u in a))


def set_product(s: PoGammaSemigroup, a, b) -> frozenset:
    """AB: all products x g y with x in A, y in B, g any letter."""
    op = s.tables.op
    m = s.m
    return frozenset(op[g][x][y] for x in a for g in range(m) for y in b)


def word_product(s: PoGammaSemigroup, parts) -> frozenset:
    """Product of several subsets, folded from the left."""
    parts = [frozenset(p) for p in parts]
    if not parts:
        raise ValueError("word_product requires at least one factor")
    acc = parts[0]
    for p in parts[1:]:
        acc = set_product(s, acc, p)
    return acc


def is_subsemigroup(s: PoGammaSemigroup, t) -> bool:
    """Nonempty T with TT inside T."""
    t = frozenset(t)
    if not t:
        raise ValueError("subsemigroups are nonempty")
    return set_product(s, t, t) <= t


def is_bi_ideal(s: PoGammaSemigroup, b) -> bool:
    """Nonempty B with BMB inside B, closed downward."""
    b = frozenset(b)
    if not b:
        raise ValueError("bi-ideals are nonempty")
    return word_product(s, [b, s.universe, b]) <= b and downward_closure(s, b) == b


def bi_ideal_generated_formula(s: PoGammaSemigroup, a) -> frozenset:
    """(A u AMA]: the closed form of the bi-ideal generated by A."""
    a = frozenset(a)
    if not a:
        raise ValueError("generating sets are nonempty")
    return downward_closure(s, a | word_product(s, [a, s.universe, a]))


def bi_ideal_generated_fixpoint(s: PoGammaSemigroup, a) -> frozenset:
    """Least bi-ideal containing A, grown by iterating X -> (X u XMX].

    Deliberately independent of the closed form so the two routes can
    serve as mutual oracles; stabilizes within n rounds.
    """
    a = frozenset(a)
    if not a:
        raise ValueError("generating sets are nonempty")
    u = s.universe
    cur = a
    while True:
        nxt = downward_closure(s, cur | word_product(s, [cur, u, cur]))
        if nxt == cur:
            return cur
        cur = nxt


def all_bi_ideals(s: PoGammaSemigroup) -> list:
    """Every bi-ideal, ascending by bit pattern (element i is bit i)."""
    out = []
    for mask in range(1, 1 << s.n):
        b = frozenset(i for i in range(s.n) if mask >> i & 1)
        if is_bi_ideal(s, b):
            out.append(b)
    return out


def semiprime_failure(s: PoGammaSemigroup, b):
    """Least a with aa inside B but a outside B, or None."""
    b = frozenset(b)
    for a in range(s.n):
        if a not in b and set_product(s, frozenset({a}), frozenset({a})) <= b:
            return a
    return None


def is_semiprime(s: PoGammaSemigroup, b) -> bool:
    """B is semiprime when aa inside B forces a in B."""
    return semiprime_failure(s, b) is None


@dataclass(frozen=True)
class RegularityWitness:
    """A concrete instantiation of one regularity inequality.

    data lists the witnessing element first and then the letters, in the
    same order the search scans them; see regularity() for the layout of
    each kind.
    """

    kind: str
    element: int
    data: tuple[int, ...]


def witness_holds(s: PoGammaSemigroup, w: RegularityWitness) -> bool:
    """Re-evaluate the defining inequality of a witness."""
    a = w.element
    p = s.prod
    if w.kind == "regular":
        x, g, u = w.data
        return s.le(a, p(u, p(g, a, x), a))
    if w.kind == "left-regular":
        z, g, u = w.data
        return s.le(a, p(u, p(g, z, a), a))
    if w.kind == "right-regular":
        y, g, u = w.data
        return s.le(a, p(u, p(g, a, a), y))
    if w.kind == "completely-regular":
        x, g1, g2, g3, g4 = w.data
        return s.le(a, p(g3, p(g2, p(g1, a, a), x), p(g4, a, a)))
    if w.kind == "strongly-regular":
        x, g, u = w.data
        ax = p(g, a, x)
        return (s.le(a, p(u, ax, a))
                and ax == p(g, x, a) == p(u, x, a) == p(u, a, x))
    raise ValueError(f"unknown witness kind {w.kind!r}")


def regularity(s: PoGammaSemigroup, a: int, kind: str):
    """First witness of the given kind for a, or None.

    The scan runs the element slot ascending, then each letter slot, and
    returns the first hit, so results are deterministic.  data layouts:

      regular             (x, g, u)           a <= (a g x) u a
      left-regular        (z, g, u)           a <= (z g a) u a
      right-regular       (y, g, u)           a <= (a g a) u y
      completely-regular  (x, g1, g2, g3, g4) a <= ((a g1 a) g2 x) g3 (a g4 a)
      strongly-regular    (x, g, u)           as regular, plus
                                              a g x = x g a = x u a = a u x
    """
    n, m = s.n, s.m
    p = s.prod
    le = s.le
    if kind == "regular":
        for x in range(n):
            for g in range(m):
                for u in range(m):
                    if le(a, p(u, p(g, a, x), a)):
                        return RegularityWitness(kind, a, (x, g, u))
        return None
    if kind == "left-regular":
        for z in range(n):
            for g in range(m):
                for u in range(m):
                    if le(a, p(u, p(g, z, a), a)):
                        return RegularityWitness(kind, a, (z, g, u))
        return None
    if kind == "right-regular":
        for y in range(n):
            for g in range(m):
                for u in range(m):
                    if le(a, p(u, p(g, a, a), y)):
                        return RegularityWitness(kind, a, (y, g, u))
        return None
    if kind == "completely-regular":
        for x in range(n):
            for g1 in range(m):
                for g2 in range(m):
                    for g3 in range(m):
                        for g4 in range(m):
                            if le(a, p(g3, p(g2, p(g1, a, a), x), p(g4, a, a))):
                                return RegularityWitness(kind, a, (x, g1, g2, g3, g4))
        return None
    if kind == "strongly-regular":
        for x in range(n):
            for g in range(m):
                for u in range(m):
                    ax = p(g, a, x)
                    if (le(a, p(u, ax, a))
                            and ax == p(g, x, a) == p(u, x, a) == p(u, a, x)):
                        return RegularityWitness(kind, a, (x, g, u))
        return None
    raise ValueError(f"unknown regularity kind {kind!r}, expected one of {REGULARITY_KINDS}")


def is_completely_regular(s: PoGammaSemigroup):
    """None when every element has a completely-regular witness, else the
    least element without one."""
    for a in range(s.n):
        if regularity(s, a, "completely-regular") is None:
            return a
    return None


def is_strongly_regular(s: PoGammaSemigroup):
    """None when every element has a strongly-regular witness, else the
    least element without one."""
    for a in range(s.n):
        if regularity(s, a, "strongly-regular") is None:
            return a
    return None


def compose_cr_witness(s: PoGammaSemigroup, a: int, reg: RegularityWitness,
                       rreg: RegularityWitness, lreg: RegularityWitness) -> RegularityWitness:
    """Combine regular, right-regular, and left-regular witnesses for a
    into a completely-regular witness.

    The middle element is (y g1 t) g2 z built from the plain witness
    (t, g1, g2) and the one-sided elements y, z; the outer letters are
    taken from the one-sided witnesses.  Inputs are re-checked and a
    ValueError is raised if any of them does not actually hold.
    """
    for w, want in ((reg, "regular"), (rreg, "right-regular"), (lreg, "left-regular")):
        if not isinstance(w, RegularityWitness) or w.kind != want or w.element != a:
            raise ValueError(f"expected a {want} witness for element {a}")
        if not witness_holds(s, w):
            raise ValueError(f"{want} witness {w.data} does not hold for element {a}")
    t, tg1, tg2 = reg.data     # a <= (a tg1 t) tg2 a
    y, rg1, rg2 = rreg.data    # a <= (a rg1 a) rg2 y
    z, lg1, lg2 = lreg.data    # a <= (z lg1 a) lg2 a
    x = s.prod(tg2, s.prod(tg1, y, t), z)
    return RegularityWitness("completely-regular", a, (x, rg1, rg2, lg1, lg2))


def is_strongly_regular_subset(s: PoGammaSemigroup, t, witness_in_subset: bool = True) -> bool:
    """Strong regularity relativized to a subsemigroup T.

    Every b in T needs an x with b <= (b g x) u b and the four equal
    products b g x = x g b = x u b = b u x.  By default x must come from
    T itself; witness_in_subset=False relaxes the search to all of M.
    """
    t = frozenset(t)
    if not is_subsemigroup(s, t):
        raise ValueError("expected a subsemigroup")
    pool = sorted(t) if witness_in_subset else range(s.n)
    p = s.prod
    for b in sorted(t):
        if not _strong_witness_in(s, b, pool, p):
            return False
    return True


def _strong_witness_in(s, b, pool, p):
    for x in pool:
        for g in range(s.m):
            for u in range(s.m):
                bx = p(g, b, x)
                if (s.le(b, p(u, bx, b))
                        and bx == p(g, x, b) == p(u, x, b) == p(u, b, x)):
                    return True
    return False
