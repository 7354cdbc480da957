"""Exhaustive generation of table families and compatible orders, plus
isomorphism canonicalization and the claim sweep over everything found.

Tables are generated depth first, one cell at a time in (letter, row,
column) order, abandoning a partial fill as soon as some fully
determined associativity instance fails.  Orders are generated as all
partial orders on the universe and filtered by compatibility.  A sweep
partitions work by the value of the first table cell, so any worker
count reproduces the single-worker report byte for byte.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from . import setcalc, theorems
from .model import (
    GammaTables,
    OrderRelation,
    PoGammaSemigroup,
    equality_order,
    validate_gamma_tables,
)

# m * n^2 table cells; keeps the search at desk scale (largest supported
# sweeps are n=3, m=2 and n=4, m=1).
MAX_TABLE_CELLS = 18

# naive generation enumerates n ** (m * n^2) raw fills
MAX_NAIVE_FILLS = 1_000_000

SWEEP_EXAMPLE_CAP = 10


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate: universe size, letter count, whether to attach
    every compatible order or just the discrete one, and whether to keep
    only canonical representatives of isomorphism classes."""

    n: int
    m: int
    require_order: bool = True
    canonical_only: bool = True

    def validate(self) -> None:
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need n >= 1 and m >= 1, got n={self.n}, m={self.m}")
        cells = self.m * self.n * self.n
        if cells > MAX_TABLE_CELLS:
            raise ValueError(
                f"m * n^2 = {cells} exceeds the desk-scale guard of {MAX_TABLE_CELLS}; "
                f"the largest supported sweeps are n=3, m=2 and n=4, m=1")


def _assoc_instances(n: int, m: int):
    # (ab_idx, bc_idx, ga_base, mu_n, c) per instance; cell (g, a, b) lives
    # at flat index (g*n + a)*n + b
    out = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for g in range(m):
                    for u in range(m):
                        out.append((
                            (g * n + a) * n + b,
                            (u * n + b) * n + c,
                            (g * n + a) * n,
                            u * n,
                            c,
                        ))
    return out


def _consistent(cells, instances, n):
    # check every fully determined instance; undetermined reads skip
    for ab_idx, bc_idx, ga_base, mu_n, c in instances:
        p = cells[ab_idx]
        if p < 0:
            continue
        lhs = cells[(mu_n + p) * n + c]
        if lhs < 0:
            continue
        q = cells[bc_idx]
        if q < 0:
            continue
        rhs = cells[ga_base + q]
        if rhs < 0:
            continue
        if lhs != rhs:
            return False
    return True


def _tables_from_cells(cells, n, m) -> GammaTables:
    op = tuple(
        tuple(tuple(cells[(g * n + a) * n + b] for b in range(n)) for a in range(n))
        for g in range(m))
    return GammaTables(n=n, m=m, op=op)


def enumerate_tables(spec: EnumSpec, prefix=()):
    """Yield every Gamma-associative table family over (n, m) depth first.

    prefix pins the first len(prefix) cells in (letter, row, column)
    order, which partitions the search space for parallel sweeps; the
    concatenation of all single-cell prefixes in ascending order equals
    the unpartitioned stream.
    """
    spec.validate()
    n, m = spec.n, spec.m
    total = m * n * n
    if len(prefix) > total:
        raise ValueError("prefix longer than the table")
    cells = [-1] * total
    for i, v in enumerate(prefix):
        if not 0 <= v < n:
            raise ValueError(f"prefix value {v} out of range")
        cells[i] = v
    instances = _assoc_instances(n, m)
    if not _consistent(cells, instances, n):
        return
    yield from _extend(cells, len(prefix), total, n, m, instances)


def _extend(cells, pos, total, n, m, instances):
    if pos == total:
        yield _tables_from_cells(cells, n, m)
        return
    for v in range(n):
        cells[pos] = v
        if _consistent(cells, instances, n):
            yield from _extend(cells, pos + 1, total, n, m, instances)
    cells[pos] = -1


def enumerate_tables_naive(spec: EnumSpec):
    """Oracle-grade generation: try every raw fill and keep the ones the
    validator accepts.  Only viable for tiny (n, m)."""
    spec.validate()
    n, m = spec.n, spec.m
    total = m * n * n
    if n ** total > MAX_NAIVE_FILLS:
        raise ValueError(f"{n}^{total} raw fills is past the naive guard of {MAX_NAIVE_FILLS}")
    for combo in product(range(n), repeat=total):
        t = _tables_from_cells(combo, n, m)
        if validate_gamma_tables(t).ok:
            yield t


@lru_cache(maxsize=None)
def all_partial_orders(n: int) -> tuple:
    """Every partial order on 0..n-1, sorted by flattened relation.

    Each order is reached by picking a permutation as a topological
    ordering, choosing forward edges, and closing transitively;
    duplicates from different permutations collapse in a set.
    """
    seen = set()
    forward = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for perm in permutations(range(n)):
        for mask in range(1 << len(forward)):
            leq = [[i == j for j in range(n)] for i in range(n)]
            for k, (i, j) in enumerate(forward):
                if mask >> k & 1:
                    leq[perm[i]][perm[j]] = True
            for w in range(n):
                roww = leq[w]
                for i in range(n):
                    if leq[i][w]:
                        rowi = leq[i]
                        for j in range(n):
                            if roww[j]:
                                rowi[j] = True
            seen.add(tuple(tuple(row) for row in leq))
    return tuple(OrderRelation(n=n, leq=rel) for rel in sorted(seen))


def order_compatible(tables: GammaTables, order: OrderRelation) -> bool:
    """Fast two-sided compatibility test with early exit."""
    op, leq, n, m = tables.op, order.leq, tables.n, tables.m
    for a in range(n):
        for b in range(n):
            if a == b or not leq[a][b]:
                continue
            for g in range(m):
                og = op[g]
                for c in range(n):
                    if not leq[og[a][c]][og[b][c]] or not leq[og[c][a]][og[c][b]]:
                        return False
    return True


def enumerate_orders(tables: GammaTables):
    """All partial orders compatible with the given tables."""
    for o in all_partial_orders(tables.n):
        if order_compatible(tables, o):
            yield o


def relabel(s: PoGammaSemigroup, pi, sigma) -> PoGammaSemigroup:
    """Transport the structure along element map pi and letter map sigma
    (both old index -> new index)."""
    n, m = s.n, s.m
    op = s.tables.op
    leq = s.order.leq
    op2 = [[[0] * n for _ in range(n)] for _ in range(m)]
    for g in range(m):
        for a in range(n):
            for b in range(n):
                op2[sigma[g]][pi[a]][pi[b]] = pi[op[g][a][b]]
    leq2 = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            leq2[pi[a]][pi[b]] = leq[a][b]
    return PoGammaSemigroup(
        tables=GammaTables(n=n, m=m, op=tuple(tuple(tuple(r) for r in t) for t in op2)),
        order=OrderRelation(n=n, leq=tuple(tuple(r) for r in leq2)))


def structure_encoding(s: PoGammaSemigroup) -> bytes:
    """Flat byte string: all table cells, then the order matrix."""
    flat = []
    for table in s.tables.op:
        for row in table:
            flat.extend(row)
    for row in s.order.leq:
        flat.extend(1 if v else 0 for v in row)
    return bytes(flat)


def canonical_key(s: PoGammaSemigroup) -> bytes:
    """Minimal encoding over every relabeling of elements and letters.

    Equal keys mean isomorphic structures (products and order preserved
    both ways), so the key doubles as the canonical-form test.
    """
    best = None
    for sigma in permutations(range(s.m)):
        for pi in permutations(range(s.n)):
            enc = structure_encoding(relabel(s, pi, sigma))
            if best is None or enc < best:
                best = enc
    return best


def enumerate_structures(spec: EnumSpec, prefix=()):
    """Yield po-structures at the requested size, depth first by table
    then order.

    Every yielded structure passes all three validators; with
    canonical_only, only structures equal to their own canonical form
    survive, one per isomorphism class.
    """
    for t in enumerate_tables(spec, prefix):
        if spec.require_order:
            orders = enumerate_orders(t)
        else:
            orders = [equality_order(t.n)]
        for o in orders:
            s = PoGammaSemigroup(tables=t, order=o)
            if spec.canonical_only and structure_encoding(s) != canonical_key(s):
                continue
            yield s


@lru_cache(maxsize=None)
def _labeled_tables(n: int, m: int) -> tuple:
    return tuple(enumerate_tables(EnumSpec(n, m, canonical_only=False)))


def random_structures(n: int, m: int, count: int, seed: int):
    """Deterministic sample of valid structures: a uniformly chosen table
    family paired with a compatible order (orders tried in shuffled
    sequence; the discrete order guarantees a hit)."""
    rng = random.Random(seed)
    tables = _labeled_tables(n, m)
    posets = list(all_partial_orders(n))
    out = []
    for _ in range(count):
        t = rng.choice(tables)
        candidates = posets[:]
        rng.shuffle(candidates)
        order = next(o for o in candidates if order_compatible(t, o))
        out.append(PoGammaSemigroup(tables=t, order=order))
    return out


def classify(s: PoGammaSemigroup) -> dict:
    """Structure-level property flags used in sweep tallies."""
    regular = all(setcalc.regularity(s, a, "regular") is not None for a in range(s.n))
    completely = setcalc.is_completely_regular(s) is None
    strongly = setcalc.is_strongly_regular(s) is None
    product_prop = all(
        setcalc.downward_closure(s, setcalc.set_product(s, b, b)) == b
        for b in setcalc.all_bi_ideals(s))
    return {
        "regular": regular,
        "completely_regular": completely,
        "strongly_regular": strongly,
        "product_property": product_prop,
    }


@dataclass
class SweepViolation:
    structure: PoGammaSemigroup
    report: theorems.CheckReport


@dataclass
class SweepReport:
    """Aggregate of one sweep: what was enumerated, per-class tallies,
    every violation, and the structures satisfying the bi-ideal product
    property without being completely regular (the open converse gap)."""

    n: int
    m: int
    canonical: bool
    require_order: bool
    theorems: tuple[str, ...]
    structures: int
    regular_structures: int
    completely_regular_structures: int
    strongly_regular_structures: int
    product_property_structures: int
    product_without_cr: int
    product_without_cr_examples: list
    violations: list


def _sweep_partition(spec: EnumSpec, ids, prefix) -> SweepReport:
    counts = {"regular": 0, "completely_regular": 0, "strongly_regular": 0,
              "product_property": 0}
    gap = 0
    gap_examples = []
    violations = []
    total = 0
    for s in enumerate_structures(spec, prefix):
        total += 1
        flags = classify(s)
        for key in counts:
            if flags[key]:
                counts[key] += 1
        if flags["product_property"] and not flags["completely_regular"]:
            gap += 1
            if len(gap_examples) < SWEEP_EXAMPLE_CAP:
                gap_examples.append(s)
        for report in theorems.run_selected(s, ids):
            if report.status == "violation":
                violations.append(SweepViolation(structure=s, report=report))
    return SweepReport(
        n=spec.n, m=spec.m, canonical=spec.canonical_only,
        require_order=spec.require_order, theorems=tuple(ids),
        structures=total,
        regular_structures=counts["regular"],
        completely_regular_structures=counts["completely_regular"],
        strongly_regular_structures=counts["strongly_regular"],
        product_property_structures=counts["product_property"],
        product_without_cr=gap,
        product_without_cr_examples=gap_examples,
        violations=violations,
    )


def _merge_partitions(spec: EnumSpec, ids, parts) -> SweepReport:
    merged = SweepReport(
        n=spec.n, m=spec.m, canonical=spec.canonical_only,
        require_order=spec.require_order, theorems=tuple(ids),
        structures=sum(p.structures for p in parts),
        regular_structures=sum(p.regular_structures for p in parts),
        completely_regular_structures=sum(p.completely_regular_structures for p in parts),
        strongly_regular_structures=sum(p.strongly_regular_structures for p in parts),
        product_property_structures=sum(p.product_property_structures for p in parts),
        product_without_cr=sum(p.product_without_cr for p in parts),
        product_without_cr_examples=[s for p in parts for s in p.product_without_cr_examples][:SWEEP_EXAMPLE_CAP],
        violations=[v for p in parts for v in p.violations],
    )
    return merged


def sweep(spec: EnumSpec, theorem_ids=None, workers: int = 1) -> SweepReport:
    """Enumerate per spec and run the selected checkers on every structure.

    Work splits by the value of the first table cell; partial results
    merge in ascending cell order, so the report is identical for any
    worker count.
    """
    spec.validate()
    ids = tuple(theorem_ids) if theorem_ids else theorems.THEOREM_IDS
    unknown = set(ids) - set(theorems.THEOREM_IDS)
    if unknown:
        raise ValueError(f"unknown theorem ids: {sorted(unknown)}")
    if workers > 1:
        jobs = [(spec, ids, (v,)) for v in range(spec.n)]
        with multiprocessing.Pool(min(workers, len(jobs))) as pool:
            parts = pool.starmap(_sweep_partition, jobs)
    else:
        parts = [_sweep_partition(spec, ids, ())]
    return _merge_partitions(spec, ids, parts)
