# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Write sweep tables as CSV."""

import logging
from pathlib import Path
from typing import List, Union

import pandas as pd

from .runner import KEY_COLUMNS, OBSERVABLE_COLUMNS

LOG = logging.getLogger(__name__)

FLOAT_FORMAT = "%.12g"
"""Floating-point fields carry 12 significant digits."""


def csv_columns(table: pd.DataFrame) -> List[str]:
    """Get the CSV columns of a table.

    Parameters
    ----------
    table : pd.DataFrame
        The sweep table.

    Returns
    -------
    List[str]
        The fixed header, then the table's ``rho_`` columns in order.
    """
    extra = [
        str(column)
        for column in table.columns
        if str(column).startswith("rho_")
    ]
    return list(KEY_COLUMNS + OBSERVABLE_COLUMNS) + extra


def format_csv(table: pd.DataFrame) -> str:
    """Format a sweep table as CSV text.

    The header is ``variant,l,beta,lambda,n,c0,t,p_total,p_excited``
    (followed by any ``rho_`` columns); missing values are empty fields and
    every line ends with a newline.

    Parameters
    ----------
    table : pd.DataFrame
        The sweep table.

    Returns
    -------
    str
        The CSV text.

    Raises
    ------
    KeyError
        If a non-empty table lacks a fixed column.
    """
    columns = csv_columns(table)
    missing = [column for column in columns if column not in table.columns]
    if missing and not table.empty:
        raise KeyError(f"Table lacks columns {missing}")
    frame = table.reindex(columns=columns)
    return frame.to_csv(
        index=False,
        float_format=FLOAT_FORMAT,
        lineterminator="\n",
        na_rep="",
    )


def write_csv(table: pd.DataFrame, path: Union[str, Path]) -> Path:
    """Write a sweep table as CSV (see :func:`format_csv`).

    Parameters
    ----------
    table : pd.DataFrame
        The sweep table.
    path : Union[str, Path]
        The output file; missing parent directories are created.

    Returns
    -------
    Path
        The written file.

    Raises
    ------
    IsADirectoryError
        If the path is a directory.
    KeyError
        If a non-empty table lacks a fixed column.
    """
    output = Path(path)
    if output.is_dir():
        raise IsADirectoryError(f"Cannot write CSV to directory {output}")
    content = format_csv(table)
    output.parent.mkdir(parents=True, exist_ok=True)
    with output.open("w", encoding="utf-8", newline="") as handle:
        handle.write(content)
    LOG.debug("Wrote %d rows to %s", len(table), output)
    return output
