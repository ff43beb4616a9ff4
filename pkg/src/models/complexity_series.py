from dataclasses import dataclass, field
from typing import Dict, Any, List, Optional, Union
from models.region import Region


@dataclass
class ComplexitySeries:
    """
    LZ complexity over time for one region (or the whole row).

    Attributes:
        start_step: Step of the first value
        stride: Steps between consecutive values
        values: Phrase counts, or averaged reals after smoothing
        region: Region measured; None means the whole row
        label: Column name in CSV output
    """
    start_step: int
    stride: int
    values: List[Union[int, float]] = field(default_factory=list)
    region: Optional[Region] = None
    label: str = 'value'

    def __post_init__(self):
        if self.stride < 1:
            raise ValueError("Series stride must be at least 1")
        if any(value < 0 for value in self.values):
            raise ValueError("Complexity values must be non-negative")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_whole_row(self) -> bool:
        return self.region is None

    def step_at(self, index: int) -> int:
        return self.start_step + index * self.stride

    @property
    def steps(self) -> List[int]:
        return [self.step_at(i) for i in range(len(self.values))]

    def to_dict(self) -> Dict[str, Any]:
        """Convert series to dictionary"""
        return {
            'start_step': self.start_step,
            'stride': self.stride,
            'values': list(self.values),
            'region': self.region.to_dict() if self.region else None,
            'label': self.label
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ComplexitySeries':
        """Create series from dictionary"""
        region = data.get('region')
        return cls(
            start_step=data['start_step'],
            stride=data['stride'],
            values=list(data['values']),
            region=Region.from_dict(region) if region else None,
            label=data.get('label', 'value')
        )
