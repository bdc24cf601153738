"""Named sweep presets reproducing the reference figure set.

Each preset id maps to the field, atom sequence, and interaction parameters
of one published curve family.  Presets whose source lists "r=0.0" have the
level-shift terms disabled; presets with an explicit small r enable them.
All presets share the default grid of 1000 points on scaled time [0, 10].
"""

from __future__ import annotations

from .cascade import AtomSequence
from .fields import FieldSpec
from .sweep import RunConfig

__all__ = ["FIGURE_IDS", "figure_preset", "preset_table"]

# id -> (field, atoms, chi_over_kappa, r, stark)
_PRESETS: dict[str, tuple[str, str, float, float, bool]] = {
    # vacuum field, excited-ground pair, varying Kerr strength
    "1a": ("fock:0", "eg", 0.0, 1.0, False),
    "1b": ("fock:0", "eg", 0.2, 1.0, False),
    "1c": ("fock:0", "eg", 1.0, 1.0, False),
    "1d": ("fock:0", "eg", 2.0, 1.0, False),
    # vacuum eg with level shifts at strongly asymmetric coupling
    "2a": ("fock:0", "eg", 0.0, 0.001, True),
    "2b": ("fock:0", "eg", 1.0, 0.001, True),
    # two-photon field, eg, Kerr only
    "3a": ("fock:2", "eg", 0.0, 1.0, False),
    "3b": ("fock:2", "eg", 0.5, 1.0, False),
    # two-photon field, eg, with level shifts
    "4a": ("fock:2", "eg", 0.0, 0.001, True),
    "4b": ("fock:2", "eg", 0.0, 0.5, True),
    "4c": ("fock:2", "eg", 2.0, 0.1, True),
    # vacuum field, both atoms excited
    "5a": ("fock:0", "ee", 0.0, 1.0, False),
    "5b": ("fock:0", "ee", 1.0, 1.0, False),
    "6a": ("fock:0", "ee", 0.0, 0.001, True),
    "6b": ("fock:0", "ee", 0.0, 0.2, True),
    "6c": ("fock:0", "ee", 1.0, 0.001, True),
    # two-photon field, ee
    "7a": ("fock:2", "ee", 0.0, 1.0, False),
    "7b": ("fock:2", "ee", 0.5, 1.0, False),
    "8a": ("fock:2", "ee", 0.0, 0.5, True),
    "8b": ("fock:2", "ee", 0.0, 2.0, True),
    "8c": ("fock:2", "ee", 0.1, 2.0, True),
    # thermal field, mean 0.5, eg
    "9a": ("thermal:0.5", "eg", 0.0, 1.0, False),
    "9b": ("thermal:0.5", "eg", 0.5, 1.0, False),
    "10a": ("thermal:0.5", "eg", 0.0, 0.01, True),
    "10b": ("thermal:0.5", "eg", 0.0, 0.1, True),
    "10c": ("thermal:0.5", "eg", 0.5, 0.3, True),
    # thermal field, mean 2.0, eg
    "11a": ("thermal:2.0", "eg", 0.0, 1.0, False),
    "11b": ("thermal:2.0", "eg", 0.5, 1.0, False),
    "12a": ("thermal:2.0", "eg", 0.0, 0.01, True),
    "12b": ("thermal:2.0", "eg", 0.0, 0.1, True),
    "12c": ("thermal:2.0", "eg", 0.5, 0.3, True),
    # thermal field, mean 0.5, ee
    "13a": ("thermal:0.5", "ee", 0.0, 1.0, False),
    "13b": ("thermal:0.5", "ee", 0.5, 1.0, False),
    "14a": ("thermal:0.5", "ee", 0.0, 0.01, True),
    "14b": ("thermal:0.5", "ee", 0.0, 0.3, True),
    "14c": ("thermal:0.5", "ee", 1.0, 0.01, True),
    "14d": ("thermal:0.5", "ee", 0.5, 0.3, True),
    # thermal field, mean 2.0, ee
    "15a": ("thermal:2.0", "ee", 0.0, 1.0, False),
    "15b": ("thermal:2.0", "ee", 0.5, 1.0, False),
    "16a": ("thermal:2.0", "ee", 0.0, 0.01, True),
    "16b": ("thermal:2.0", "ee", 0.0, 0.3, True),
    "16c": ("thermal:2.0", "ee", 1.0, 0.01, True),
    "16d": ("thermal:2.0", "ee", 0.5, 0.3, True),
}

FIGURE_IDS: tuple[str, ...] = tuple(_PRESETS)


def figure_preset(preset_id: str, **overrides) -> RunConfig:
    """RunConfig for a named preset.

    Output paths, grid, and dump options may be overridden via keyword
    arguments (anything RunConfig accepts except the physics fields).
    """
    key = str(preset_id).strip().lower()
    if key not in _PRESETS:
        raise ValueError(
            f"unknown figure id {preset_id!r}; valid ids: {', '.join(FIGURE_IDS)}"
        )
    field, atoms, chi, r, stark = _PRESETS[key]
    locked = {"field", "atoms", "chi_over_kappa", "r", "stark"}
    bad = locked & set(overrides)
    if bad:
        raise ValueError(f"preset parameters cannot be overridden: {', '.join(sorted(bad))}")
    return RunConfig(
        field=FieldSpec.parse(field),
        atoms=AtomSequence.parse(atoms),
        chi_over_kappa=chi,
        r=r,
        stark=stark,
        **overrides,
    )


def preset_table() -> list[tuple[str, str]]:
    """(id, one-line parameter description) for every preset, in id order."""
    return [(key, figure_preset(key).describe()) for key in FIGURE_IDS]
