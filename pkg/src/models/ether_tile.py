from dataclasses import dataclass
from typing import Dict, Any, Tuple


@dataclass(frozen=True)
class EtherTile:
    """
    Spatially and temporally periodic background of a rule.

    Tiling rows[0] across a width divisible by spatial_period and evolving
    it temporal_period steps gives rows[0] rotated by shift_per_period
    cells; rows[t] is the tiled row after t steps.

    Attributes:
        rule_number: Rule the tile belongs to
        spatial_period: Cells per tile row
        temporal_period: Steps per repetition
        rows: temporal_period binary rows of spatial_period cells
        shift_per_period: Cyclic displacement after one temporal period
    """
    rule_number: int
    spatial_period: int
    temporal_period: int
    rows: Tuple[str, ...]
    shift_per_period: int

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(self.rows))
        if len(self.rows) != self.temporal_period:
            raise ValueError("Ether tile needs one row per step of its temporal period")
        if any(len(row) != self.spatial_period for row in self.rows):
            raise ValueError("Ether tile rows must have spatial_period cells")
        if self.rows[0] in ('0' * self.spatial_period, '1' * self.spatial_period):
            raise ValueError("Uniform rows are not an ether tile")

    def to_dict(self) -> Dict[str, Any]:
        """Convert ether tile to dictionary"""
        return {
            'rule_number': self.rule_number,
            'spatial_period': self.spatial_period,
            'temporal_period': self.temporal_period,
            'rows': list(self.rows),
            'shift_per_period': self.shift_per_period
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'EtherTile':
        """Create ether tile from dictionary"""
        return cls(
            rule_number=data['rule_number'],
            spatial_period=data['spatial_period'],
            temporal_period=data['temporal_period'],
            rows=tuple(data['rows']),
            shift_per_period=data['shift_per_period']
        )
