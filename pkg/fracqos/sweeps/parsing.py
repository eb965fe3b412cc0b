# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Parse sweep configuration documents.

A document is a list of ``key = value`` lines; ``#`` starts a comment.
List-valued keys take comma-separated values::

    # fig1 top row, NewTFSE only
    preset = fig1
    variant = new
    l = 1
    csv = out/fig1_new.csv

A ``preset`` supplies the starting values; the other keys override them,
wherever they appear in the document.
"""

from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple, Union

from ..errors import ConfigParseError
from ..propagate import TfseVariant
from .config import SweepConfig
from .presets import get_preset

RawValue = Union[str, int, float]
"""A value as written in a document or passed on the command line."""

KEY_ALIASES: Dict[str, str] = {
    "preset": "preset",
    "variant": "variant",
    "variants": "variant",
    "l": "l",
    "qubits": "l",
    "beta": "beta",
    "lambda": "lambda",
    "n": "n",
    "c0": "c0",
    "tmax": "tmax",
    "steps": "steps",
    "observables": "observables",
    "csv": "csv",
    "output": "csv",
    "svg": "svg",
}
"""Accepted keys and the documented key each one stands for."""


def _to_int(text: str) -> int:
    number = float(text)
    if not number.is_integer():
        raise ValueError(f"'{text}' is not an integer")
    return int(number)


def _to_variant(text: str) -> TfseVariant:
    return TfseVariant.parse(text)


_FIELDS: Dict[str, Tuple[str, Callable[[str], Any], bool]] = {
    "variant": ("variants", _to_variant, True),
    "l": ("qubits", _to_int, True),
    "beta": ("beta_values", float, True),
    "lambda": ("lambda_values", float, True),
    "n": ("n_values", _to_int, True),
    "c0": ("c0_values", float, True),
    "tmax": ("t_max", float, False),
    "steps": ("t_steps", _to_int, False),
    "observables": ("observables", str.lower, True),
    "csv": ("csv_path", Path, False),
    "svg": ("svg_path", Path, False),
}
"""Documented key -> (SweepConfig field, item converter, is a list)."""


def parse_config(text: str) -> SweepConfig:
    """Parse a configuration document.

    Parameters
    ----------
    text : str
        The document.

    Returns
    -------
    SweepConfig
        The validated configuration, defaults filled in.

    Raises
    ------
    ConfigParseError
        If a line is malformed, a key is unknown or repeated, or a value
        has the wrong type.
    pydantic.ValidationError
        If a value is out of range.
    """
    entries: Dict[str, Tuple[str, int]] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(
                f"Expected 'key = value', got '{line}'", line=number
            )
        raw_key, value = (part.strip() for part in line.split("=", 1))
        key = _canonical_key(raw_key, number)
        if key in entries:
            raise ConfigParseError(
                f"Repeated key (first set on line {entries[key][1]})",
                line=number,
                field=raw_key,
            )
        entries[key] = (value, number)
    return _build(entries)


def load_config(path: Union[str, Path]) -> SweepConfig:
    """Read and parse a configuration file.

    Parameters
    ----------
    path : Union[str, Path]
        The file.

    Returns
    -------
    SweepConfig
        The validated configuration.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    ConfigParseError
        If the document is malformed.
    """
    return parse_config(Path(path).read_text(encoding="utf-8"))


def config_from_mapping(
    values: Mapping[str, Optional[RawValue]],
    base: Optional[SweepConfig] = None,
) -> SweepConfig:
    """Build a configuration from keys and raw values.

    The same conversions as :func:`parse_config` apply; ``None`` values are
    skipped (the command line passes unset flags as ``None``).

    Parameters
    ----------
    values : Mapping[str, Optional[RawValue]]
        Documented keys (or their aliases) and their values.
    base : Optional[SweepConfig], optional
        The values to start from, by default the documented defaults (or
        the ``preset`` key, which excludes a base).

    Returns
    -------
    SweepConfig
        The validated configuration.

    Raises
    ------
    ConfigParseError
        If a key is unknown or given twice through aliases, a value has
        the wrong type, or both a base and a ``preset`` key are given.
    pydantic.ValidationError
        If a value is out of range.
    """
    entries: Dict[str, Tuple[str, Optional[int]]] = {}
    for raw_key, value in values.items():
        if value is None:
            continue
        key = _canonical_key(raw_key, None)
        if key in entries:
            raise ConfigParseError("Repeated key", field=raw_key)
        entries[key] = (str(value).strip(), None)
    if base is not None and "preset" in entries:
        raise ConfigParseError(
            "A preset replaces every value of the configuration file, "
            "put 'preset = ...' in the file instead",
            field="preset",
        )
    return _build(entries, base)


def _canonical_key(raw_key: str, line: Optional[int]) -> str:
    key = raw_key.strip().lower()
    if key not in KEY_ALIASES:
        valid = ", ".join(sorted(KEY_ALIASES))
        raise ConfigParseError(
            f"Unknown key, expected one of {valid}", line=line, field=raw_key
        )
    return KEY_ALIASES[key]


def _build(
    entries: Mapping[str, Tuple[str, Optional[int]]],
    base: Optional[SweepConfig] = None,
) -> SweepConfig:
    if base is None:
        base = SweepConfig()
    if "preset" in entries:
        value, line = entries["preset"]
        try:
            base = get_preset(value).sweep_config()
        except ValueError as error:
            raise ConfigParseError(
                str(error), line=line, field="preset"
            ) from error
    fields: Dict[str, Any] = {
        name: getattr(base, name) for name in SweepConfig.model_fields
    }
    for key, (value, line) in entries.items():
        if key == "preset":
            continue
        field, convert, is_list = _FIELDS[key]
        fields[field] = _convert(key, value, line, convert, is_list)
    return SweepConfig(**fields)


def _convert(
    key: str,
    value: str,
    line: Optional[int],
    convert: Callable[[str], Any],
    is_list: bool,
) -> Any:
    items: List[str] = (
        [item.strip() for item in value.split(",")] if is_list else [value]
    )
    if any(not item for item in items):
        raise ConfigParseError("Empty value", line=line, field=key)
    try:
        converted = [convert(item) for item in items]
    except ValueError as error:
        raise ConfigParseError(str(error), line=line, field=key) from error
    return tuple(converted) if is_list else converted[0]
