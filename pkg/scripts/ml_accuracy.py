# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Tabulate the Mittag-Leffler accuracy against the reference table.

Usage: ``python scripts/ml_accuracy.py [--csv PATH] [--regenerate]``

Prints (or writes) one row per reference point with the evaluation path
and the relative error; exits with 1 if any error exceeds 1e-10.
``--regenerate`` first rewrites ``tests/data/ml_oracle.txt`` with the
high precision series.
"""

import argparse
import cmath
import sys
from pathlib import Path

import pandas as pd

ROOT_DIR = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT_DIR))

# pylint: disable=wrong-import-position
from fracqos.mlf import MlRequest, ml, uses_series  # noqa: E402
from tests.mlf.oracle import (  # noqa: E402
    read_oracle_table,
    write_oracle_table,
)

LIMIT = 1e-10


def accuracy_table() -> pd.DataFrame:
    """Evaluate every reference point.

    Returns
    -------
    pd.DataFrame
        beta, |z|, arg z, path and the relative error.
    """
    rows = []
    for point in read_oracle_table():
        actual = ml(point.beta, point.z)
        series = uses_series(MlRequest(beta=point.beta, z=point.z))
        rows.append(
            {
                "beta": point.beta,
                "abs_z": abs(point.z),
                "arg_z": cmath.phase(point.z),
                "path": "series" if series else "contour",
                "error": abs(actual - point.value) / abs(point.value),
            }
        )
    return pd.DataFrame(rows)


def main() -> None:
    """Print the table and the worst error."""
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", type=Path, default=None)
    parser.add_argument("--regenerate", action="store_true")
    args = parser.parse_args()
    if args.regenerate:
        print(f"wrote {write_oracle_table()}")
    table = accuracy_table()
    if args.csv is not None:
        table.to_csv(args.csv, index=False, float_format="%.6g")
    else:
        print(table.to_string(index=False, float_format="%.3g"))
    worst = table.loc[table["error"].idxmax()]
    print(
        f"worst error {worst['error']:.3g} at beta={worst['beta']:g} "
        f"|z|={worst['abs_z']:.3g} ({worst['path']})"
    )
    if worst["error"] > LIMIT:
        sys.exit(1)


if __name__ == "__main__":
    main()
