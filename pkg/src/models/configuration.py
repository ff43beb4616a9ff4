from dataclasses import dataclass
from typing import Dict, Any, Iterable
import numpy as np
from models.region import Region


@dataclass(frozen=True)
class Configuration:
    """
    Cyclic row of binary cells, bit-packed into one integer.

    Cell x lives at bit (width - 1 - x), so the zero-padded binary
    representation of bits reads the row from x=0 to x=width-1.
    The neighbor to the left of cell 0 is cell width-1.

    Attributes:
        width: Number of cells
        bits: Packed cell states
    """
    width: int
    bits: int

    def __post_init__(self):
        if self.width < 1:
            raise ValueError("Configuration width must be positive")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError("Configuration bits do not fit the width")

    @property
    def mask(self) -> int:
        return (1 << self.width) - 1

    def __len__(self) -> int:
        return self.width

    def cell(self, x: int) -> int:
        """State of cell x, cyclic index"""
        return (self.bits >> (self.width - 1 - x % self.width)) & 1

    def rotate(self, k: int) -> 'Configuration':
        """Cyclic shift to the right: cell x of the result is cell x-k of this row"""
        k %= self.width
        if k == 0:
            return self
        rotated = (self.bits >> k) | ((self.bits << (self.width - k)) & self.mask)
        return Configuration(self.width, rotated)

    def to_string(self) -> str:
        """Row as '0'/'1' characters, x=0 first"""
        return format(self.bits, f'0{self.width}b')

    def region_string(self, region: Region) -> str:
        """Cells of a region, read in increasing x"""
        if not region.fits(self.width):
            raise ValueError(f"Region {region} does not fit width {self.width}")
        return self.to_string()[region.start_x:region.end_x]

    def to_array(self) -> np.ndarray:
        """Cells as a uint8 array of 0/1"""
        n_bytes = (self.width + 7) // 8
        pad = n_bytes * 8 - self.width
        packed = np.frombuffer(self.bits.to_bytes(n_bytes, 'big'), dtype=np.uint8)
        return np.unpackbits(packed)[pad:]

    def density(self) -> float:
        """Fraction of cells in state 1"""
        return self.bits.bit_count() / self.width

    @classmethod
    def from_array(cls, cells: np.ndarray) -> 'Configuration':
        """Pack a 0/1 array"""
        cells = np.asarray(cells, dtype=np.uint8)
        width = int(cells.size)
        if width == 0:
            raise ValueError("Configuration width must be positive")
        pad = (-width) % 8
        packed = np.packbits(cells)
        return cls(width, int.from_bytes(packed.tobytes(), 'big') >> pad)

    @classmethod
    def from_string(cls, text: str) -> 'Configuration':
        """Parse a string of '0'/'1' characters with no other content"""
        if not text or text.strip('01'):
            raise ValueError("Configuration string must be a non-empty run of 0/1")
        return cls(len(text), int(text, 2))

    @classmethod
    def from_cells(cls, cells: Iterable[int]) -> 'Configuration':
        return cls.from_string(''.join('1' if cell else '0' for cell in cells))

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary"""
        return {
            'width': self.width,
            'cells': self.to_string()
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Configuration':
        """Create configuration from dictionary"""
        configuration = cls.from_string(data['cells'])
        if configuration.width != data['width']:
            raise ValueError("Configuration width does not match its cells")
        return configuration
