"""Named surfaces with their h^{q,0} data."""

from __future__ import annotations

from dataclasses import dataclass

from .exact_algebra import FieldSpec
from .graded_basis import SurfaceHodgeData


@dataclass(frozen=True)
class SurfacePreset:
    name: str
    data: SurfaceHodgeData
    notes: tuple[str, ...]


_PRESETS = [
    SurfacePreset(
        "supersingular-enriques",
        SurfaceHodgeData(1, 1, 1, FieldSpec(2), "supersingular Enriques surface"),
        (
            "char 2, h^1(O_X) = 1 with Frobenius acting as zero on H^1(O_X).",
            "omega_X is trivial, so h^{2,0} = 1 and the 2-form is nowhere vanishing.",
            "Etale fundamental group is trivial (canonical cover is an alpha_2-torsor); "
            "Hilb^n(X) is simply connected for n >= 2.",
            "h^{1,0} = 1 is chosen here: extra invariant 2-forms on X^n come from products "
            "a_i a_j of global 1-forms with a_i = a_j, which needs a nonzero 1-form. "
            "Hodge symmetry fails in char 2 and the data is sometimes quoted as "
            "h^{0,1} = 1, h^{1,0} = 0; with h^{1,0} = 0 no anomaly appears (see k3).",
        ),
    ),
    SurfacePreset(
        "enriques-char0",
        SurfaceHodgeData(1, 0, 0, FieldSpec(0), "Enriques surface, char != 2"),
        (
            "Hodge diamond 1; 0 0; 0 10 0; 0 0; 1.  p_g = 0, q = 0, chi(O_X) = 1, c_2 = 12.",
            "omega_X is nontrivial 2-torsion; the K3 double cover gives pi_1 = Z/2.",
        ),
    ),
    SurfacePreset(
        "k3",
        SurfaceHodgeData(1, 0, 1, FieldSpec(0), "K3 surface"),
        (
            "h^{1,0} = 0, h^{2,0} = 1 in every characteristic; use --char to choose one.",
            "Control case: with no global 1-forms Hilb^n keeps h^{2,0} = 1 in char 2 as well.",
        ),
    ),
    SurfacePreset(
        "abelian-char0",
        SurfaceHodgeData(1, 2, 1, FieldSpec(0), "abelian surface"),
        ("h^{1,0} = 2, h^{2,0} = 1.",),
    ),
]

PRESETS: dict[str, SurfacePreset] = {p.name: p for p in _PRESETS}


def get_preset(name: str) -> SurfacePreset:
    try:
        return PRESETS[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
