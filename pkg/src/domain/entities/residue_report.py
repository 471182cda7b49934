# -*- coding: utf-8 -*-
"""ResidueReport 엔티티 - R·dz/z 의 네 점 유수"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from ..value_objects.half_power_scalar import HalfPowerScalar

RESIDUE_POINTS = ("0", "1", "q_inv", "infinity")


@dataclass(frozen=True)
class ResidueReport:
    """{0, 1, q⁻¹, ∞} 에서의 정확한 유수와 그 합"""

    residues: Tuple[Tuple[str, HalfPowerScalar], ...]

    def __post_init__(self):
        points = tuple(point for point, _ in self.residues)
        if points != RESIDUE_POINTS:
            raise ValueError(f"residues must be listed for {RESIDUE_POINTS}, got {points}")

    @property
    def total(self) -> HalfPowerScalar:
        result = HalfPowerScalar.zero()
        for _, value in self.residues:
            result = result + value
        return result

    def at(self, point: str) -> HalfPowerScalar:
        return dict(self.residues)[point]

    def to_dict(self) -> Dict[str, Any]:
        data = {point: value.to_dict() for point, value in self.residues}
        data["sum"] = self.total.to_dict()
        return data
