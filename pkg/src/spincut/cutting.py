"""Cutting a dataset in two and checking that quantization adds up.

A cut specification assigns every component of the input to one side and
lists the reduced components that appear on both cut spaces.  Each reduced
component becomes a codimension-2 datum with normal weight 1 and determinant
weight 1; the plus side receives it with sign -1 and the minus side with
sign +1 (the two sides see opposite complex structures on the new normal
line, which in data terms is exactly an orientation flip).  Everything else
is carried over unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .fixed_points import (
    Codim2Component,
    FixedPointData,
    InvalidDataError,
    require_valid,
)
from .kostant import character_rational
from .laurent import NotDivisibleError, VirtualCharacter, char_sum


class DimensionMismatchError(ValueError):
    """A reduced component's dimension is incompatible with the data's m."""


@dataclass(frozen=True)
class ReducedComponent:
    """One component of the cut locus quotient, as both cut spaces see it.

    dim-2 components carry the two integrals that determine their data:
    chern_lred for the reduced determinant line and chern_nminus for the
    chosen normal direction; the engine derives the tensor-product Chern
    number chern_lred + chern_nminus itself.
    """

    dim: int
    chern_lred: int | None = None
    chern_nminus: int | None = None


@dataclass(frozen=True)
class CutSpecification:
    """Side assignment per component index plus the reduced components."""

    assignments: tuple[tuple[int, str], ...]
    reduced: tuple[ReducedComponent, ...] = ()

    def __post_init__(self) -> None:
        raw = self.assignments
        if isinstance(raw, Mapping):
            pairs = tuple(sorted((int(k), v) for k, v in raw.items()))
        else:
            pairs = tuple(sorted((int(k), v) for k, v in raw))
        object.__setattr__(self, "assignments", pairs)
        object.__setattr__(self, "reduced", tuple(self.reduced))

    def as_dict(self) -> dict[int, str]:
        return dict(self.assignments)


@dataclass(frozen=True)
class AdditivityRow:
    weight: int
    original: int
    plus: int
    minus: int


@dataclass(frozen=True)
class AdditivityReport:
    """Per-weight comparison of the original character with plus + minus."""

    holds: bool
    rows: tuple[AdditivityRow, ...]


def build_cut_data(
    data: FixedPointData, spec: CutSpecification
) -> tuple[FixedPointData, FixedPointData]:
    """Construct the fixed-point data of both cut spaces."""
    require_valid(data)
    total = len(data.components())
    sides = spec.as_dict()
    for index, side in sides.items():
        if side not in ("plus", "minus"):
            raise InvalidDataError(f'component {index}: side must be "plus" or "minus"')
        if not 0 <= index < total:
            raise InvalidDataError(f"assignment for unknown component {index}")
    for index in range(total):
        if index not in sides:
            raise InvalidDataError(f"component {index} has no side assignment")
    for i, reduced in enumerate(spec.reduced):
        if reduced.dim not in (0, 2):
            raise InvalidDataError(f"reduced[{i}]: dim must be 0 or 2")
        if reduced.dim == 0:
            if reduced.chern_lred is not None or reduced.chern_nminus is not None:
                raise InvalidDataError(f"reduced[{i}]: dim-0 components carry no Chern numbers")
            if data.half_dimension != 1:
                raise DimensionMismatchError(
                    f"reduced[{i}]: dim-0 reduced component requires half_dimension 1, "
                    f"got {data.half_dimension}"
                )
        else:
            if reduced.chern_lred is None or reduced.chern_nminus is None:
                raise InvalidDataError(
                    f"reduced[{i}]: dim-2 components need chern_Lred and chern_Nminus"
                )
            if data.half_dimension != 2:
                raise DimensionMismatchError(
                    f"reduced[{i}]: dim-2 reduced component requires half_dimension 2, "
                    f"got {data.half_dimension}"
                )
    plus_isolated, minus_isolated = [], []
    plus_codim2, minus_codim2 = [], []
    for index, comp in enumerate(data.components()):
        target_isolated = plus_isolated if sides[index] == "plus" else minus_isolated
        target_codim2 = plus_codim2 if sides[index] == "plus" else minus_codim2
        if index < len(data.isolated):
            target_isolated.append(comp)
        else:
            target_codim2.append(comp)
    for reduced in spec.reduced:
        if reduced.dim == 2:
            chern_l = reduced.chern_lred + reduced.chern_nminus
            chern_n = reduced.chern_nminus
        else:
            chern_l = chern_n = None
        for sign, bucket in ((-1, plus_codim2), (1, minus_codim2)):
            bucket.append(
                Codim2Component(
                    dim=reduced.dim,
                    normal_weight=1,
                    det_weight=1,
                    sign=sign,
                    chern_l=chern_l,
                    chern_n=chern_n,
                )
            )
    plus = FixedPointData(data.half_dimension, tuple(plus_isolated), tuple(plus_codim2))
    minus = FixedPointData(data.half_dimension, tuple(minus_isolated), tuple(minus_codim2))
    return plus, minus


def _character_for(label: str, data: FixedPointData, paper_signs: bool) -> VirtualCharacter:
    try:
        return character_rational(data, paper_signs)
    except NotDivisibleError as exc:
        raise NotDivisibleError(f"{label} dataset is not realizable: {exc}") from exc


def check_additivity(
    data: FixedPointData,
    plus: FixedPointData,
    minus: FixedPointData,
    paper_signs: bool = False,
) -> AdditivityReport:
    """Compare char(data) with char(plus) + char(minus), weight by weight."""
    original = _character_for("original", data, paper_signs)
    plus_char = _character_for("plus", plus, paper_signs)
    minus_char = _character_for("minus", minus, paper_signs)
    combined = char_sum(plus_char, minus_char)
    weights = sorted(
        set(original.support()) | set(plus_char.support()) | set(minus_char.support())
    )
    rows = tuple(
        AdditivityRow(
            weight=w,
            original=original.multiplicity(w),
            plus=plus_char.multiplicity(w),
            minus=minus_char.multiplicity(w),
        )
        for w in weights
    )
    return AdditivityReport(holds=original == combined, rows=rows)
