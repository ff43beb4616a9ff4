from dataclasses import dataclass
from typing import Dict, Any


@dataclass(frozen=True)
class DropEvent:
    """
    A maximal decline of a smoothed complexity series.

    Attributes:
        start_step: Last step before the decline starts
        end_step: Step where the decline bottoms out
        magnitude: Fall in complexity between the two steps
    """
    start_step: int
    end_step: int
    magnitude: float

    @property
    def step(self) -> int:
        """Onset of the decline"""
        return self.start_step

    def to_dict(self) -> Dict[str, Any]:
        return {
            'start_step': self.start_step,
            'end_step': self.end_step,
            'magnitude': self.magnitude
        }
