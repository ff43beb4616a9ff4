from dataclasses import dataclass
from typing import Dict, Any


@dataclass(frozen=True)
class Region:
    """
    Contiguous strip of cells [start_x, start_x + length).

    Attributes:
        start_x: Index of the leftmost cell
        length: Number of cells
    """
    start_x: int
    length: int

    @property
    def end_x(self) -> int:
        return self.start_x + self.length

    @property
    def label(self) -> str:
        """Column name used in CSV output"""
        return f"region_{self.start_x}_{self.length}"

    def fits(self, width: int) -> bool:
        """Whether the region lies inside a row of the given width"""
        return 0 <= self.start_x and 0 <= self.length and self.end_x <= width

    def __str__(self) -> str:
        return f"{self.start_x}:{self.length}"

    @classmethod
    def parse(cls, text: str) -> 'Region':
        """Parse START:LEN"""
        start, separator, length = text.strip().partition(':')
        if not separator:
            raise ValueError(f"Region must be START:LEN, got '{text}'")
        return cls(start_x=int(start), length=int(length))

    def to_dict(self) -> Dict[str, Any]:
        """Convert region to dictionary"""
        return {
            'start_x': self.start_x,
            'length': self.length
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Region':
        """Create region from dictionary"""
        return cls(
            start_x=data['start_x'],
            length=data['length']
        )
