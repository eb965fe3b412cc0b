# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Test fracqos.sweeps.parsing.*."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from fracqos.errors import ConfigParseError
from fracqos.propagate import TfseVariant
from fracqos.sweeps import (
    SweepConfig,
    config_from_mapping,
    get_preset,
    load_config,
    parse_config,
)


def test_minimal_document() -> None:
    """Test that omitted keys take their defaults."""
    config = parse_config("variant = new\nl = 2\n")
    assert config.variants == (TfseVariant.NEW,)
    assert config.qubits == (2,)
    assert config.beta_values == (0.5,)
    assert config.n_values == (50,)
    assert config.t_steps == 400


def test_empty_document() -> None:
    """Test a document with comments only."""
    assert parse_config("# nothing\n\n   # at all\n") == SweepConfig()


def test_full_document() -> None:
    """Test every key, lists and comments."""
    # Given
    text = "\n".join(
        [
            "# a comment",
            "variants = naber1, XGF  # trailing comment",
            "qubits = 1,2",
            "beta = 0.2, 0.6",
            "lambda = 0, 1",
            "n = 0, 100",
            "c0 = 0.2",
            "tmax = 10",
            "steps = 11",
            "observables = total, rho_diag",
            "output = out/table.csv",
            "svg = out/plot.svg",
        ]
    )
    # When
    config = parse_config(text)
    # Then
    assert config.variants == (TfseVariant.NABER_I, TfseVariant.XGF)
    assert config.qubits == (1, 2)
    assert config.beta_values == (0.2, 0.6)
    assert config.lambda_values == (0.0, 1.0)
    assert config.n_values == (0, 100)
    assert config.c0_values == (0.2,)
    assert config.t_max == 10.0
    assert config.t_steps == 11
    assert config.observables == ("total", "rho_diag")
    assert config.csv_path == Path("out/table.csv")
    assert config.svg_path == Path("out/plot.svg")


def test_out_of_range_value() -> None:
    """Test that range checks surface as validation errors."""
    with pytest.raises(ValidationError):
        parse_config("beta = 1.5\n")


def test_preset_expansion() -> None:
    """Test a preset with an override, whatever the line order."""
    config = parse_config("l = 1\npreset = fig9\n")
    expected = get_preset("fig9").sweep_config()
    assert config.qubits == (1,)
    assert config.beta_values == expected.beta_values
    assert config.n_values == (20,)
    assert config.variants == tuple(TfseVariant)


def test_unknown_preset() -> None:
    """Test a preset id that does not exist."""
    with pytest.raises(ConfigParseError) as info:
        parse_config("\npreset = fig99\n")
    assert info.value.line == 2
    assert info.value.field == "preset"


@pytest.mark.parametrize(
    "text,line,field",
    [
        ("beta 0.5\n", 1, None),
        ("variant = new\ngamma = 1\n", 2, "gamma"),
        ("beta = 0.5\nbeta = 0.6\n", 2, "beta"),
        ("l = 1\nqubits = 2\n", 2, "qubits"),
        ("n = 2.5\n", 1, "n"),
        ("beta = 0.5,,0.6\n", 1, "beta"),
        ("beta = half\n", 1, "beta"),
        ("variant = naber3\n", 1, "variant"),
        ("steps = ten\n", 1, "steps"),
    ],
)
def test_malformed(text: str, line: int, field: str) -> None:
    """Test the reported line and key of malformed documents.

    Parameters
    ----------
    text : str
        The document.
    line : int
        The expected line number.
    field : str
        The expected key.
    """
    with pytest.raises(ConfigParseError) as info:
        parse_config(text)
    assert info.value.line == line
    assert info.value.field == field
    assert f"line {line}" in str(info.value)


def test_integer_written_as_float() -> None:
    """Test that 2.0 is accepted as an integer."""
    assert parse_config("n = 2.0\n").n_values == (2,)


def test_load_config(data_dir: Path, decoupled_sweep: SweepConfig) -> None:
    """Test reading a file.

    Parameters
    ----------
    data_dir : Path
        The test data directory.
    decoupled_sweep : SweepConfig
        The sweep the file describes.
    """
    assert load_config(data_dir / "decoupled.conf") == decoupled_sweep


def test_load_missing_file(tmp_path: Path) -> None:
    """Test a missing file.

    Parameters
    ----------
    tmp_path : Path
        A temporary directory.
    """
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "missing.conf")


def test_config_from_mapping() -> None:
    """Test raw values, skipped None values and a base."""
    base = SweepConfig(n_values=(7,), t_steps=10)
    config = config_from_mapping(
        {"variant": "new,xgf", "beta": 0.3, "steps": 5, "c0": None},
        base=base,
    )
    assert config.variants == (TfseVariant.NEW, TfseVariant.XGF)
    assert config.beta_values == (0.3,)
    assert config.t_steps == 5
    assert config.n_values == (7,)


def test_config_from_mapping_preset() -> None:
    """Test a preset key without and with a base."""
    # Given the fig10 preset
    # When it is the only source of values
    config = config_from_mapping({"preset": "fig10", "steps": 5})
    # Then its grid is used with the other keys on top
    assert config.n_values == (0, 10, 50)
    assert config.t_steps == 5
    # When a base (a configuration file) is given as well
    # Then the combination is rejected instead of dropping the base
    with pytest.raises(ConfigParseError, match="preset"):
        config_from_mapping(
            {"preset": "fig10"}, base=SweepConfig(n_values=(7,))
        )


def test_config_from_mapping_repeated_alias() -> None:
    """Test the same key under two aliases."""
    with pytest.raises(ConfigParseError):
        config_from_mapping({"csv": "a.csv", "output": "b.csv"})
