#!/usr/bin/env python3
"""Check the local Python environment for the packing toolkit."""

from __future__ import annotations

import argparse
import importlib.util
import sys
from importlib import metadata
from typing import List, Optional, Sequence, Tuple


CORE_MODULES = [
    ("networkx", "networkx"),
    ("numpy", "numpy"),
    ("pandas", "pandas"),
    ("sympy", "sympy"),
    ("tqdm", "tqdm"),
]

OPTIONAL_MODULES = [
    ("pytest", "pytest"),
]

Row = Tuple[str, str, bool, str]


def _is_available(module_name: str) -> bool:
    return importlib.util.find_spec(module_name) is not None


def _pkg_version(package_name: str) -> str:
    try:
        return metadata.version(package_name)
    except metadata.PackageNotFoundError:
        return "-"


def check_group(group_name: str, items: Sequence[Tuple[str, str]], verbose: bool = True) -> List[Row]:
    rows: List[Row] = []
    if verbose:
        print(f"\n{group_name}:")
    for module_name, package_name in items:
        ok = _is_available(module_name)
        version = _pkg_version(package_name) if ok else "-"
        if verbose:
            status = "OK" if ok else "MISSING"
            print(f"  {status:8} {module_name:32} {version}")
        rows.append((module_name, package_name, ok, version))
    return rows


def smoke_test() -> bool:
    """Count the packings of K2 with 3 colours and k = 2 (the answer is 9)."""
    from utils.graphs import generate_named
    from utils.packing import classical_packing_count

    return classical_packing_count(generate_named("complete", n=2), 3, 2) == 9


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Check dependencies for the packing toolkit.")
    parser.add_argument(
        "--require-optional",
        action="store_true",
        help="Return non-zero exit code when optional packages are missing.",
    )
    parser.add_argument(
        "--smoke",
        action="store_true",
        help="Also run a tiny packing count once the core packages are present.",
    )
    args = parser.parse_args(argv)

    print("Packing toolkit environment check")
    print(f"Python: {sys.version.split()[0]}")

    core_rows = check_group("Core dependencies", CORE_MODULES)
    optional_rows = check_group("Optional dependencies", OPTIONAL_MODULES)

    missing_core = [row for row in core_rows if not row[2]]
    missing_optional = [row for row in optional_rows if not row[2]]

    print("\nSummary:")
    if missing_core:
        print("  Missing core packages:")
        for module_name, _, _, _ in missing_core:
            print(f"  - {module_name}")
    else:
        print("  All core packages are installed.")

    if missing_optional:
        print("  Missing optional packages:")
        for module_name, _, _, _ in missing_optional:
            print(f"  - {module_name}")
        print("  Counting and the CLI work without them; the test suite needs pytest.")
    else:
        print("  All optional packages are installed.")

    if missing_core:
        return 1
    if args.smoke:
        ok = smoke_test()
        print(f"  Smoke test: {'OK' if ok else 'FAILED'}")
        if not ok:
            return 1
    if args.require_optional and missing_optional:
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
