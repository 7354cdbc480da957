"""Regenerate the shipped fixture structures from their definitions.

Run from the repository root: python3 scripts/make_fixtures.py
"""

from pathlib import Path

from pogamma.formats import save_structure
from pogamma.model import structure_from_rows

FIXTURES = {
    "one_element.json": ("one-element", [[[0]]], [[1]]),
    "null_table.json": ("null-table", [[[0, 0], [0, 0]]], [[1, 0], [0, 1]]),
    "min_chain.json": ("min-chain", [[[0, 0], [0, 1]]], [[1, 1], [0, 1]]),
    "left_zero.json": ("left-zero", [[[0, 0], [1, 1]]], [[1, 0], [0, 1]]),
    # every bi-ideal equals (BB] yet element 0 is not completely regular,
    # so the product property cannot force complete regularity
    "product_gap.json": ("product-gap",
                         [[[3, 3, 1, 3], [1, 1, 1, 1], [2, 2, 2, 2], [3, 3, 3, 3]]],
                         [[1, 1, 1, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 1, 1, 1]]),
}


def main() -> None:
    out_dir = Path(__file__).resolve().parents[1] / "fixtures"
    out_dir.mkdir(exist_ok=True)
    for filename, (name, tables, order) in FIXTURES.items():
        save_structure(out_dir / filename, structure_from_rows(tables, order), name)
        print(f"wrote {out_dir / filename}")


if __name__ == "__main__":
    main()
