# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Figure presets: the published parameter grids as ready-made sweeps.

The published figures do not label their time axes; every preset uses
t in [0, 20] with 400 points. Figures 1 to 9 add inset panels that replay
one variant on t in [0, 0.5], where its early-time behaviour is visible.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from typing_extensions import Literal

from ..propagate import TfseVariant
from .config import SweepConfig

INSET_T_MAX = 0.5
"""End of the time grid of an inset panel."""

GROUP_KEYS = ("variant", "l", "beta", "lambda", "n", "c0")
"""Table columns a plot can group by."""

PlotObservable = Literal["p_total", "p_excited"]
"""Table columns a plot can draw."""

_FIELD_OF_KEY = {
    "variant": "variants",
    "l": "qubits",
    "beta": "beta_values",
    "lambda": "lambda_values",
    "n": "n_values",
    "c0": "c0_values",
}


@dataclass(frozen=True, slots=True)
class PlotGrouping:
    """How table rows become panels and curves.

    Attributes
    ----------
    curve_by : Tuple[str, ...]
        Keys whose values separate curves within a panel.
    observable : PlotObservable
        The plotted column.
    panel_by : Tuple[str, ...]
        Keys whose values separate panels (none: a single panel).
    """

    curve_by: Tuple[str, ...]
    observable: PlotObservable = "p_total"
    panel_by: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        """Validate the keys.

        Raises
        ------
        ValueError
            If a key is not a groupable column.
        """
        for key in self.curve_by + self.panel_by:
            if key not in GROUP_KEYS:
                raise ValueError(
                    f"Cannot group by '{key}', expected one of {GROUP_KEYS}"
                )
        if self.observable not in ("p_total", "p_excited"):
            raise ValueError(f"Cannot plot '{self.observable}'")


@dataclass(frozen=True, slots=True)
class PresetPanel:
    """One panel of a figure.

    Attributes
    ----------
    name : str
        File-name friendly panel name, e.g. ``l1_naber1``.
    config : SweepConfig
        The sweep behind the panel.
    grouping : PlotGrouping
        How the panel's rows become curves.
    """

    name: str
    config: SweepConfig
    grouping: PlotGrouping


@dataclass(frozen=True, slots=True)
class FigurePreset:
    """A published figure.

    Attributes
    ----------
    id : str
        ``fig1`` ... ``fig13``.
    caption : str
        What the figure shows.
    panels : Tuple[PresetPanel, ...]
        The panels, first row (one qubit) first.
    """

    id: str
    caption: str
    panels: Tuple[PresetPanel, ...]

    def sweep_config(self) -> SweepConfig:
        """Get one sweep covering every panel.

        Returns
        -------
        SweepConfig
            The union of the panels' swept values.
        """
        configs = [panel.config for panel in self.panels]
        first = configs[0]
        return first.model_copy(
            update={
                "variants": tuple(
                    sorted(
                        _union(config.variants for config in configs),
                        key=lambda variant: variant.info.ordinal,
                    )
                ),
                "qubits": tuple(
                    sorted(_union(config.qubits for config in configs))
                ),
                "beta_values": _sorted_union(c.beta_values for c in configs),
                "lambda_values": _sorted_union(
                    c.lambda_values for c in configs
                ),
                "n_values": _sorted_union(c.n_values for c in configs),
                "c0_values": _sorted_union(c.c0_values for c in configs),
            }
        )


def _union(groups: Iterable[Tuple[object, ...]]) -> List[object]:
    seen: List[object] = []
    for group in groups:
        for value in group:
            if value not in seen:
                seen.append(value)
    return seen


def _sorted_union(groups: Iterable[Tuple[float, ...]]) -> Tuple[float, ...]:
    return tuple(sorted({value for group in groups for value in group}))


def _label(key: str, value: object) -> str:
    if isinstance(value, TfseVariant):
        return value.value
    if key == "l":
        return f"l{value}"
    return f"{key}{value:g}" if isinstance(value, float) else f"{key}{value}"


def _split(
    preset_id: str,
    caption: str,
    base: SweepConfig,
    panel_key: str,
    grouping: PlotGrouping,
) -> FigurePreset:
    panels: List[PresetPanel] = []
    for qubits in base.qubits:
        if panel_key == "l":
            config = base.model_copy(update={"qubits": (qubits,)})
            panels.append(PresetPanel(f"l{qubits}", config, grouping))
            continue
        field = _FIELD_OF_KEY[panel_key]
        for value in getattr(base, field):
            config = base.model_copy(
                update={"qubits": (qubits,), field: (value,)}
            )
            name = f"l{qubits}_{_label(panel_key, value)}"
            panels.append(PresetPanel(name, config, grouping))
    return FigurePreset(preset_id, caption, tuple(panels))


def _with_insets(
    figure: FigurePreset,
    variant: TfseVariant,
    curve_by: Tuple[str, ...],
    qubits: Tuple[int, ...] = (),
) -> FigurePreset:
    """Append one short-time panel of ``variant`` per system size."""
    sweep = figure.sweep_config()
    observable = figure.panels[0].grouping.observable
    insets = tuple(
        PresetPanel(
            f"l{size}_{variant.value}_inset",
            sweep.model_copy(
                update={
                    "variants": (variant,),
                    "qubits": (size,),
                    "t_max": INSET_T_MAX,
                }
            ),
            PlotGrouping(curve_by=curve_by, observable=observable),
        )
        for size in qubits or sweep.qubits
    )
    return FigurePreset(figure.id, figure.caption, figure.panels + insets)


_CAPUTO_AND_NEW = (TfseVariant.NABER_I, TfseVariant.NABER_II, TfseVariant.NEW)
_ALL = tuple(TfseVariant)
_XGF = (TfseVariant.XGF,)

_INSETS: Dict[str, Tuple[TfseVariant, Tuple[str, ...], Tuple[int, ...]]] = {
    "fig1": (TfseVariant.NABER_II, ("beta",), ()),
    "fig2": (TfseVariant.NABER_II, ("lambda",), ()),
    "fig3": (TfseVariant.NABER_II, ("n",), ()),
    "fig4": (TfseVariant.NABER_II, ("c0",), ()),
    "fig5": (TfseVariant.XGF, ("beta",), ()),
    "fig6": (TfseVariant.XGF, ("lambda",), ()),
    "fig7": (TfseVariant.XGF, ("n",), ()),
    "fig8": (TfseVariant.XGF, ("c0",), ()),
    "fig9": (TfseVariant.NABER_II, ("beta",), (1,)),
}
"""Inset variant, curve keys and system sizes (all when empty) by figure."""


def _fig13() -> FigurePreset:
    pairs = ((0, 0.1), (10, 0.5), (50, 1.0))
    panels: List[PresetPanel] = []
    for qubits, c0_values, curve_by in (
        (1, (0.5,), ("variant",)),
        (2, (0.0, 0.5, 1.0), ("variant", "c0")),
    ):
        for photons, beta in pairs:
            config = SweepConfig(
                variants=_ALL,
                qubits=(qubits,),
                beta_values=(beta,),
                lambda_values=(0.0,),
                n_values=(photons,),
                c0_values=c0_values,
            )
            panels.append(
                PresetPanel(
                    f"l{qubits}_n{photons}_beta{beta:g}",
                    config,
                    PlotGrouping(curve_by=curve_by, observable="p_excited"),
                )
            )
    return FigurePreset(
        "fig13",
        "Excited-state probabilities without coupling (lambda=0) for "
        "(n, beta) = (0, 0.1), (10, 0.5), (50, 1).",
        tuple(panels),
    )


def _build_presets() -> Dict[str, FigurePreset]:
    total = "p_total"
    excited = "p_excited"
    presets = [
        _split(
            "fig1",
            "Total probability for beta = 0.2, 0.6, 1 "
            "(lambda=0.5, n=50, C0=0.5).",
            SweepConfig(
                variants=_CAPUTO_AND_NEW,
                qubits=(1, 2),
                beta_values=(0.2, 0.6, 1.0),
            ),
            "variant",
            PlotGrouping(curve_by=("beta",), observable=total),
        ),
        _split(
            "fig2",
            "Total probability for lambda = 0, 0.5, 1 "
            "(beta=0.5, n=50, C0=0.5).",
            SweepConfig(
                variants=_CAPUTO_AND_NEW,
                qubits=(1, 2),
                lambda_values=(0.0, 0.5, 1.0),
            ),
            "variant",
            PlotGrouping(curve_by=("lambda",), observable=total),
        ),
        _split(
            "fig3",
            "Total probability for n = 0, 100, 200 "
            "(beta=0.5, lambda=0.5, C0=0.5).",
            SweepConfig(
                variants=_CAPUTO_AND_NEW,
                qubits=(1, 2),
                n_values=(0, 100, 200),
            ),
            "variant",
            PlotGrouping(curve_by=("n",), observable=total),
        ),
        _split(
            "fig4",
            "Two-qubit total probability for C0 = 0, 0.5, 1 "
            "(beta=0.5, lambda=0.5, n=50).",
            SweepConfig(
                variants=_CAPUTO_AND_NEW,
                qubits=(2,),
                c0_values=(0.0, 0.5, 1.0),
            ),
            "variant",
            PlotGrouping(curve_by=("c0",), observable=total),
        ),
        _split(
            "fig5",
            "XGF total probability for beta = 0.1, 0.5, 1 "
            "(lambda=0.5, n=50, C0=0.5).",
            SweepConfig(
                variants=_XGF, qubits=(1, 2), beta_values=(0.1, 0.5, 1.0)
            ),
            "l",
            PlotGrouping(curve_by=("beta",), observable=total),
        ),
        _split(
            "fig6",
            "XGF total probability for lambda = 0, 0.5, 1 "
            "(beta=0.5, n=50, C0=0.5).",
            SweepConfig(
                variants=_XGF, qubits=(1, 2), lambda_values=(0.0, 0.5, 1.0)
            ),
            "l",
            PlotGrouping(curve_by=("lambda",), observable=total),
        ),
        _split(
            "fig7",
            "XGF total probability for n = 0, 50, 500 "
            "(beta=0.5, lambda=0.5, C0=0.5).",
            SweepConfig(variants=_XGF, qubits=(1, 2), n_values=(0, 50, 500)),
            "l",
            PlotGrouping(curve_by=("n",), observable=total),
        ),
        _split(
            "fig8",
            "XGF two-qubit total probability for C0 = 0, 0.5, 1 "
            "(beta=0.5, lambda=0.5, n=50).",
            SweepConfig(
                variants=_XGF, qubits=(2,), c0_values=(0.0, 0.5, 1.0)
            ),
            "l",
            PlotGrouping(curve_by=("c0",), observable=total),
        ),
        _split(
            "fig9",
            "Excited-state probability for beta = 0.1, 0.3, 0.5, 0.7, 0.9, 1 "
            "(lambda=0.5, n=20, C0=0.5).",
            SweepConfig(
                variants=_ALL,
                qubits=(1, 2),
                beta_values=(0.1, 0.3, 0.5, 0.7, 0.9, 1.0),
                n_values=(20,),
            ),
            "beta",
            PlotGrouping(curve_by=("variant",), observable=excited),
        ),
        _split(
            "fig10",
            "Excited-state probability for n = 0, 10, 50 "
            "(beta=0.8, lambda=0.5, C0=0.5).",
            SweepConfig(
                variants=_ALL,
                qubits=(1, 2),
                beta_values=(0.8,),
                n_values=(0, 10, 50),
            ),
            "n",
            PlotGrouping(curve_by=("variant",), observable=excited),
        ),
        _split(
            "fig11",
            "Two-qubit excited-state probability for C0 = 0.2, 0.6, 1 "
            "(beta=0.9, lambda=0.5, n=50).",
            SweepConfig(
                variants=_ALL,
                qubits=(2,),
                beta_values=(0.9,),
                c0_values=(0.2, 0.6, 1.0),
            ),
            "c0",
            PlotGrouping(curve_by=("variant",), observable=excited),
        ),
        _split(
            "fig12",
            "Excited-state probability for lambda = 0, 0.05, 0.1, 0.2, 0.6, 1 "
            "(beta=0.8, n=40, C0=0.5).",
            SweepConfig(
                variants=_ALL,
                qubits=(1, 2),
                beta_values=(0.8,),
                lambda_values=(0.0, 0.05, 0.1, 0.2, 0.6, 1.0),
                n_values=(40,),
            ),
            "lambda",
            PlotGrouping(curve_by=("variant",), observable=excited),
        ),
        _fig13(),
    ]
    presets = [
        _with_insets(preset, *_INSETS[preset.id])
        if preset.id in _INSETS
        else preset
        for preset in presets
    ]
    return {preset.id: preset for preset in presets}


PRESETS: Dict[str, FigurePreset] = _build_presets()
"""All figure presets by id."""


def get_preset(preset_id: str) -> FigurePreset:
    """Get a figure preset.

    Parameters
    ----------
    preset_id : str
        ``fig1`` ... ``fig13`` (case insensitive).

    Returns
    -------
    FigurePreset
        The preset.

    Raises
    ------
    ValueError
        If no preset has that id.
    """
    key = preset_id.strip().lower()
    if key not in PRESETS:
        raise ValueError(
            f"Unknown preset '{preset_id}', expected fig1 ... fig{len(PRESETS)}"
        )
    return PRESETS[key]
