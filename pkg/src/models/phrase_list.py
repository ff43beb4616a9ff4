from dataclasses import dataclass, field
from typing import Dict, Any, List, Optional
from models.lz_dictionary import LzDictionary


@dataclass(frozen=True)
class PhraseList:
    """
    Result of an LZ78 parse.

    Attributes:
        phrases: Divided phrases in input order; their concatenation is the input
        count: Number of phrases (the LZ complexity)
        dictionary: Phrase trie built by the parse, when it came from one
    """
    phrases: List[str] = field(default_factory=list, hash=False)
    count: int = 0
    dictionary: Optional[LzDictionary] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.count != len(self.phrases):
            raise ValueError("Phrase count must equal the number of phrases")

    def joined(self) -> str:
        """The parsed input, rebuilt from the phrases"""
        return ''.join(self.phrases)

    def to_dict(self) -> Dict[str, Any]:
        """Convert phrase list to dictionary"""
        return {
            'phrases': list(self.phrases),
            'count': self.count
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PhraseList':
        """Create phrase list from dictionary"""
        return cls(
            phrases=list(data['phrases']),
            count=data['count']
        )
