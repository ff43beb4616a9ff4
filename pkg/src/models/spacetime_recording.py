from dataclasses import dataclass, field
from typing import List, Dict, Any, Optional
from models.configuration import Configuration


@dataclass
class SpacetimeRecording:
    """
    Time-ordered rows of an evolution.

    Row i holds the configuration at step start_step + i * stride.

    Attributes:
        width: Cells per row
        start_step: Step of the first row
        stride: Steps between consecutive rows
        rows: Recorded configurations
        rule_number: Rule that produced the rows (None if unknown)
    """
    width: int
    start_step: int = 0
    stride: int = 1
    rows: List[Configuration] = field(default_factory=list)
    rule_number: Optional[int] = None

    def __post_init__(self):
        if self.stride < 1:
            raise ValueError("Recording stride must be at least 1")
        for row in self.rows:
            self._check_width(row)

    def _check_width(self, row: Configuration) -> None:
        if row.width != self.width:
            raise ValueError(f"Row width {row.width} differs from recording width {self.width}")

    def __len__(self) -> int:
        return len(self.rows)

    def append(self, row: Configuration) -> None:
        self._check_width(row)
        self.rows.append(row)

    def step_of(self, index: int) -> int:
        """Time step of row index"""
        return self.start_step + index * self.stride

    @property
    def steps(self) -> List[int]:
        return [self.step_of(i) for i in range(len(self.rows))]

    @property
    def last_step(self) -> int:
        return self.step_of(len(self.rows) - 1)

    def row_at_step(self, step: int) -> Configuration:
        """Configuration recorded at a time step"""
        offset = step - self.start_step
        if offset < 0 or offset % self.stride or offset // self.stride >= len(self.rows):
            raise KeyError(f"Step {step} was not recorded")
        return self.rows[offset // self.stride]

    def window(self, from_step: int, to_step: int) -> 'SpacetimeRecording':
        """Rows recorded between from_step and to_step inclusive"""
        indices = [i for i in range(len(self.rows)) if from_step <= self.step_of(i) <= to_step]
        if not indices:
            return SpacetimeRecording(self.width, from_step, self.stride, [], self.rule_number)
        return SpacetimeRecording(
            width=self.width,
            start_step=self.step_of(indices[0]),
            stride=self.stride,
            rows=[self.rows[i] for i in indices],
            rule_number=self.rule_number
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert recording to dictionary"""
        return {
            'width': self.width,
            'start_step': self.start_step,
            'stride': self.stride,
            'rule_number': self.rule_number,
            'rows': [row.to_string() for row in self.rows]
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SpacetimeRecording':
        """Create recording from dictionary"""
        return cls(
            width=data['width'],
            start_step=data['start_step'],
            stride=data['stride'],
            rows=[Configuration.from_string(row) for row in data['rows']],
            rule_number=data.get('rule_number')
        )
