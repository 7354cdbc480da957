"""Shared builders and cached enumeration pools for the test suite."""

from functools import lru_cache
from pathlib import Path

from pogamma.enumeration import EnumSpec, enumerate_structures, enumerate_tables
from pogamma.model import structure_from_rows

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURE_DIR = REPO_ROOT / "fixtures"


def make_one_element():
    return structure_from_rows([[[0]]], [[1]])


def make_null_table():
    return structure_from_rows([[[0, 0], [0, 0]]], [[1, 0], [0, 1]])


def make_min_chain():
    return structure_from_rows([[[0, 0], [0, 1]]], [[1, 1], [0, 1]])


def make_left_zero():
    return structure_from_rows([[[0, 0], [1, 1]]], [[1, 0], [0, 1]])


def make_product_gap():
    # every bi-ideal equals (BB] but element 0 is not completely regular
    return structure_from_rows(
        [[[3, 3, 1, 3], [1, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3, 3]]],
        [[1, 1, 1, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 1, 1, 1]])


# fixture file -> (embedded name, builder)
FIXTURE_FILES = {
    "one_element.json": ("one-element", make_one_element),
    "null_table.json": ("null-table", make_null_table),
    "min_chain.json": ("min-chain", make_min_chain),
    "left_zero.json": ("left-zero", make_left_zero),
    "product_gap.json": ("product-gap", make_product_gap),
}


def named_structures():
    return [(name, build()) for name, build in
            (("one-element", make_one_element), ("null-table", make_null_table),
             ("min-chain", make_min_chain), ("left-zero", make_left_zero),
             ("product-gap", make_product_gap))]


@lru_cache(maxsize=None)
def structure_pool(n, m, canonical=True):
    return tuple(enumerate_structures(EnumSpec(n, m, canonical_only=canonical)))


@lru_cache(maxsize=None)
def table_pool(n, m):
    return tuple(enumerate_tables(EnumSpec(n, m, canonical_only=False)))


def nonempty_subsets(n):
    for mask in range(1, 1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def all_subsets(n):
    for mask in range(1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)
