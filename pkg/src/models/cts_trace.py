from dataclasses import dataclass, field
from typing import Dict, Any, List, Optional


@dataclass
class CtsTrace:
    """
    Word history of a cyclic tag system run.

    Words are kept verbatim until the stored symbols would exceed the
    trace cap; lengths are always kept.

    Attributes:
        words: Tape words from step 0, possibly cut short by the cap
        lengths: Word length at every step from step 0
        halted: Whether the word became empty
        halted_at: Step at which it halted
        words_truncated: Whether words stopped being stored
    """
    words: List[str] = field(default_factory=list)
    lengths: List[int] = field(default_factory=list)
    halted: bool = False
    halted_at: Optional[int] = None
    words_truncated: bool = False

    @property
    def steps_taken(self) -> int:
        """Steps executed, including the one that emptied the word"""
        if self.halted:
            return self.halted_at
        return max(len(self.lengths) - 1, 0)

    def to_dict(self) -> Dict[str, Any]:
        """Convert trace to dictionary"""
        return {
            'words': list(self.words),
            'lengths': list(self.lengths),
            'halted': self.halted,
            'halted_at': self.halted_at,
            'words_truncated': self.words_truncated
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CtsTrace':
        """Create trace from dictionary"""
        return cls(
            words=list(data['words']),
            lengths=list(data['lengths']),
            halted=data['halted'],
            halted_at=data.get('halted_at'),
            words_truncated=data.get('words_truncated', False)
        )
