"""Finite po-Gamma-semigroup structures and axiom validation.

A structure is a finite set M = {0, ..., n-1} together with a family of
binary operations indexed by letters {0, ..., m-1} (the product of a and
b under letter g is written a g b) and a partial order on M.  Validation
covers three axiom layers: mixed associativity of the operation family,
the partial-order axioms, and two-sided compatibility of the order with
every operation.  All core types are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass


class StructuralError(ValueError):
    """Declared dimensions and array shapes disagree."""


@dataclass(frozen=True)
class GammaTables:
    """Multiplication tables op[g][a][b], one n x n table per letter g."""

    n: int
    m: int
    op: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "GammaTables":
        op = tuple(tuple(tuple(int(v) for v in row) for row in table) for table in rows)
        m = len(op)
        n = len(op[0]) if m else 0
        return cls(n=n, m=m, op=op)


@dataclass(frozen=True)
class OrderRelation:
    """Boolean relation with leq[a][b] encoding a <= b."""

    n: int
    leq: tuple[tuple[bool, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "OrderRelation":
        leq = tuple(tuple(bool(v) for v in row) for row in rows)
        return cls(n=len(leq), leq=leq)


def equality_order(n: int) -> OrderRelation:
    """The discrete order: a <= b only when a = b."""
    return OrderRelation(n=n, leq=tuple(tuple(i == j for j in range(n)) for i in range(n)))


@dataclass(frozen=True)
class PoGammaSemigroup:
    """Tables and an order over the same universe.

    Construction only enforces matching dimensions; run the validators
    (or load through the file layer, which does) before trusting the
    axioms.
    """

    tables: GammaTables
    order: OrderRelation

    def __post_init__(self):
        if self.tables.n != self.order.n:
            raise StructuralError(
                f"tables are over {self.tables.n} elements but the order is over {self.order.n}")

    @property
    def n(self) -> int:
        return self.tables.n

    @property
    def m(self) -> int:
        return self.tables.m

    @property
    def universe(self) -> frozenset:
        return frozenset(range(self.tables.n))

    def prod(self, g: int, a: int, b: int) -> int:
        return self.tables.op[g][a][b]

    def le(self, a: int, b: int) -> bool:
        return self.order.leq[a][b]


def structure_from_rows(tables_rows, order_rows) -> PoGammaSemigroup:
    return PoGammaSemigroup(tables=GammaTables.from_rows(tables_rows),
                            order=OrderRelation.from_rows(order_rows))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validator: ok, or every failure as (axiom, witness)."""

    ok: bool
    failures: tuple[tuple[str, tuple], ...]

    @classmethod
    def from_failures(cls, failures) -> "ValidationReport":
        frozen = tuple((name, tuple(wit)) for name, wit in failures)
        return cls(ok=not frozen, failures=frozen)


def format_failure(failure) -> str:
    name, witness = failure
    return f"{name}{tuple(witness)}"


def _check_table_shape(t: GammaTables) -> None:
    if t.n < 1 or t.m < 1:
        raise StructuralError(f"need n >= 1 and m >= 1, got n={t.n}, m={t.m}")
    if len(t.op) != t.m:
        raise StructuralError(f"expected {t.m} tables, found {len(t.op)}")
    for g, table in enumerate(t.op):
        if len(table) != t.n or any(len(row) != t.n for row in table):
            raise StructuralError(f"table {g} is not {t.n}x{t.n}")


def validate_gamma_tables(t: GammaTables) -> ValidationReport:
    """Report every entry-range and mixed-associativity failure.

    Associativity is required in the strong mixed form: (a g b) u c must
    equal a g (b u c) for every pair of letters g, u.  It is only
    meaningful once all entries are in range, so range failures suppress
    the associativity scan.
    """
    _check_table_shape(t)
    n, op = t.n, t.op
    failures = []
    for g in range(t.m):
        for a in range(n):
            for b in range(n):
                v = op[g][a][b]
                if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < n:
                    failures.append(("entry-range", (g, a, b, v)))
    if not failures:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    for g in range(t.m):
                        ab = op[g][a][b]
                        for u in range(t.m):
                            if op[u][ab][c] != op[g][a][op[u][b][c]]:
                                failures.append(("gamma-associativity", (a, b, c, g, u)))
    return ValidationReport.from_failures(failures)


def validate_order(o: OrderRelation) -> ValidationReport:
    """Report every reflexivity, antisymmetry, and transitivity failure."""
    if o.n < 1:
        raise StructuralError(f"need n >= 1, got n={o.n}")
    if len(o.leq) != o.n or any(len(row) != o.n for row in o.leq):
        raise StructuralError(f"relation is not {o.n}x{o.n}")
    n, leq = o.n, o.leq
    failures = []
    for a in range(n):
        if not leq[a][a]:
            failures.append(("reflexivity", (a,)))
    for a in range(n):
        for b in range(a + 1, n):
            if leq[a][b] and leq[b][a]:
                failures.append(("antisymmetry", (a, b)))
    for a in range(n):
        for b in range(n):
            if leq[a][b]:
                for c in range(n):
                    if leq[b][c] and not leq[a][c]:
                        failures.append(("transitivity", (a, b, c)))
    return ValidationReport.from_failures(failures)


def validate_compatibility(s: PoGammaSemigroup) -> ValidationReport:
    """Report every place the order fails to survive multiplication.

    Side "left" means the compared pair sits on the left of the product
    (a g c against b g c), side "right" that it sits on the right.
    Witnesses are (a, b, c, g, side).
    """
    op, leq, n, m = s.tables.op, s.order.leq, s.n, s.m
    failures = []
    for a in range(n):
        for b in range(n):
            if a == b or not leq[a][b]:
                continue
            for c in range(n):
                for g in range(m):
                    if not leq[op[g][a][c]][op[g][b][c]]:
                        failures.append(("compatibility", (a, b, c, g, "left")))
                    if not leq[op[g][c][a]][op[g][c][b]]:
                        failures.append(("compatibility", (a, b, c, g, "right")))
    return ValidationReport.from_failures(failures)


def validate_structure(s: PoGammaSemigroup) -> ValidationReport:
    """All three validators; compatibility runs only once both layers hold."""
    tables_report = validate_gamma_tables(s.tables)
    order_report = validate_order(s.order)
    failures = list(tables_report.failures) + list(order_report.failures)
    if tables_report.ok and order_report.ok:
        failures += list(validate_compatibility(s).failures)
    return ValidationReport.from_failures(failures)
