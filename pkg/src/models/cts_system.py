from dataclasses import dataclass
from typing import Dict, Any, Tuple


def _check_binary(word: str, what: str) -> None:
    if word.strip('01'):
        raise ValueError(f"{what} must contain only 0 and 1, got '{word}'")


@dataclass(frozen=True)
class CtsSystem:
    """
    Cyclic tag system: the appendant table.

    Attributes:
        appendants: Binary words chosen cyclically; each may be empty
    """
    appendants: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'appendants', tuple(self.appendants))
        if not self.appendants:
            raise ValueError("Appendant table must not be empty")
        for appendant in self.appendants:
            _check_binary(appendant, "Appendant")

    def __len__(self) -> int:
        return len(self.appendants)

    def to_dict(self) -> Dict[str, Any]:
        return {'appendants': list(self.appendants)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CtsSystem':
        return cls(appendants=tuple(data['appendants']))


@dataclass(frozen=True)
class CtsState:
    """
    Tape word, appendant index and step count of a running system.

    An empty word only occurs in the halted terminal state.

    Attributes:
        word: Binary tape word, read from the front
        index: Position in the appendant table of the next appendant
        step: Number of steps taken
    """
    word: str
    index: int = 0
    step: int = 0

    def __post_init__(self):
        _check_binary(self.word, "Tape word")
        if self.index < 0:
            raise ValueError("Appendant index must be non-negative")
        if self.step < 0:
            raise ValueError("Step must be non-negative")

    @property
    def is_halted(self) -> bool:
        return not self.word

    def to_dict(self) -> Dict[str, Any]:
        return {
            'word': self.word,
            'index': self.index,
            'step': self.step
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CtsState':
        return cls(
            word=data['word'],
            index=data.get('index', 0),
            step=data.get('step', 0)
        )


@dataclass(frozen=True)
class Halted:
    """
    Terminal marker returned once the tape word becomes empty.

    Attributes:
        step: Step at which the word became empty
    """
    step: int
