# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
# pylint: disable=too-many-arguments,too-many-positional-arguments
# pylint: disable=too-many-locals,unused-argument
"""Command line interface to run sweeps and reproduce the figure presets.

Exit codes: 0 on success, 1 on IO errors, 2 on invalid input, 3 on
numerical failures.
"""

import logging
from pathlib import Path
from typing import Dict, Optional, Union

import anyio
import pandas as pd
import typer
from typing_extensions import Annotated

from ._version import __version__
from .errors import NumericalError
from .sweeps import (
    SweepConfig,
    SweepRunner,
    config_from_mapping,
    default_grouping,
    emit_svg,
    format_csv,
    get_preset,
    load_config,
    oscillation_report,
    write_csv,
)
from .utils import get_logger

app = typer.Typer(
    name="simulate",
    help="Simulate qubits in cavities under time-fractional evolution.",
    context_settings={"help_option_names": ["-h", "--help"]},
    add_completion=False,
    pretty_exceptions_enable=False,
)

Overrides = Dict[str, Union[str, int, float, None]]


def _show_version(value: bool) -> None:
    if value:
        typer.echo(f"fracqos version: {__version__}")
        raise typer.Exit()


@app.command()
def simulate(
    config: Annotated[
        Optional[Path],
        typer.Option(
            "--config",
            "-c",
            help="Path to a key=value sweep configuration file.",
            exists=True,
            file_okay=True,
            dir_okay=False,
            readable=True,
            resolve_path=True,
        ),
    ] = None,
    preset: Annotated[
        Optional[str],
        typer.Option(
            help="A figure preset, fig1 ... fig13 (not with --config)."
        ),
    ] = None,
    out: Annotated[
        Optional[Path],
        typer.Option(
            help=(
                "Directory for the per-panel CSV and SVG files of a preset "
                "(figN_<panel>.csv, figN_<panel>.svg)."
            ),
            file_okay=False,
            resolve_path=True,
        ),
    ] = None,
    variant: Annotated[
        Optional[str],
        typer.Option(help="Variants: naber1, naber2, xgf, new (comma list)."),
    ] = None,
    qubits: Annotated[
        Optional[str],
        typer.Option(help="System sizes: 1, 2 (comma list)."),
    ] = None,
    beta: Annotated[
        Optional[str],
        typer.Option(help="Fractional orders in (0, 1] (comma list)."),
    ] = None,
    coupling: Annotated[
        Optional[str],
        typer.Option("--lambda", help="Couplings in [0, 1] (comma list)."),
    ] = None,
    photons: Annotated[
        Optional[str],
        typer.Option("--n", help="Photon numbers (comma list)."),
    ] = None,
    c0: Annotated[
        Optional[str],
        typer.Option(help="Initial concurrences in [0, 1] (comma list)."),
    ] = None,
    tmax: Annotated[
        Optional[float],
        typer.Option(help="End of the time grid [0, tmax]."),
    ] = None,
    steps: Annotated[
        Optional[int],
        typer.Option(help="Number of time points (at least 2)."),
    ] = None,
    observables: Annotated[
        Optional[str],
        typer.Option(help="Observables: total, excited, rho_diag."),
    ] = None,
    csv: Annotated[
        Optional[Path],
        typer.Option(help="CSV output file (stdout if neither file is set)."),
    ] = None,
    svg: Annotated[
        Optional[Path],
        typer.Option(help="SVG plot output file."),
    ] = None,
    jobs: Annotated[
        int,
        typer.Option(min=1, help="Curves evaluated at the same time."),
    ] = 1,
    verbose: Annotated[
        bool,
        typer.Option("--verbose", help="Log debug messages."),
    ] = False,
    version: Annotated[
        Optional[bool],
        typer.Option(
            "--version",
            help="Show the version of the fracqos package.",
            callback=_show_version,
            is_eager=True,
        ),
    ] = None,
) -> None:
    """Run a sweep and write its table (and plot)."""
    logger = get_logger(logging.DEBUG if verbose else logging.INFO)
    overrides: Overrides = {
        "variant": variant,
        "l": qubits,
        "beta": beta,
        "lambda": coupling,
        "n": photons,
        "c0": c0,
        "tmax": tmax,
        "steps": steps,
        "observables": observables,
    }
    try:
        if out is not None:
            if preset is None or config is not None:
                raise ValueError("--out needs --preset (and no --config)")
            if csv is not None or svg is not None:
                raise ValueError("--out writes its own files, drop --csv/--svg")
            _run_preset(preset, out, overrides, jobs, logger)
            return
        base = load_config(config) if config is not None else None
        overrides.update(
            {
                "preset": preset,
                "csv": None if csv is None else str(csv),
                "svg": None if svg is None else str(svg),
            }
        )
        _run_config(config_from_mapping(overrides, base=base), jobs, logger)
    except NumericalError as error:
        logger.error("Numerical failure: %s", error)
        raise typer.Exit(code=3) from error
    except ValueError as error:
        logger.error("Invalid input: %s", error)
        raise typer.Exit(code=2) from error
    except OSError as error:
        logger.error("Cannot write output: %s", error)
        raise typer.Exit(code=1) from error


def _evaluate(sweep: SweepConfig, jobs: int) -> pd.DataFrame:
    runner = SweepRunner(sweep, workers=jobs)
    if jobs > 1:
        return anyio.run(runner.a_run)
    return runner.run()


def _log_report(table: pd.DataFrame, logger: logging.Logger) -> None:
    for summary in oscillation_report(table):
        logger.info(summary.describe())


def _run_config(
    sweep: SweepConfig, jobs: int, logger: logging.Logger
) -> None:
    logger.debug("Sweeping %d rows", sweep.row_count)
    table = _evaluate(sweep, jobs)
    if sweep.csv_path is None and sweep.svg_path is None:
        typer.echo(format_csv(table), nl=False)
    if sweep.csv_path is not None:
        logger.info("Wrote %s", write_csv(table, sweep.csv_path))
    if sweep.svg_path is not None:
        written = emit_svg(table, default_grouping(sweep), sweep.svg_path)
        logger.info("Wrote %s", written)
    _log_report(table, logger)


def _run_preset(
    preset_id: str,
    out: Path,
    overrides: Overrides,
    jobs: int,
    logger: logging.Logger,
) -> None:
    figure = get_preset(preset_id)
    logger.info("%s: %s", figure.id, figure.caption)
    for panel in figure.panels:
        sweep = config_from_mapping(overrides, base=panel.config)
        table = _evaluate(sweep, jobs)
        stem = f"{figure.id}_{panel.name}"
        logger.info("Wrote %s", write_csv(table, out / f"{stem}.csv"))
        written = emit_svg(
            table, panel.grouping, out / f"{stem}.svg", title=stem
        )
        logger.info("Wrote %s", written)
        _log_report(table, logger)


if __name__ == "__main__":
    app()
