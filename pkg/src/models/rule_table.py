from dataclasses import dataclass, field
from typing import Dict, Any, Tuple

NEIGHBORHOODS: Tuple[str, ...] = ('111', '110', '101', '100', '011', '010', '001', '000')


@dataclass(frozen=True)
class RuleTable:
    """
    Transition table of an elementary cellular automaton rule.

    Bit k of rule_number is the next state of the neighborhood whose
    three cells (left, center, right) spell k in binary.

    Attributes:
        rule_number: Rule number 0-255
        entries: Map from neighborhood pattern ('000'-'111') to next state
    """
    rule_number: int
    entries: Dict[str, int] = field(hash=False)

    def __post_init__(self):
        if sorted(self.entries) != sorted(NEIGHBORHOODS):
            raise ValueError("Rule table needs exactly the 8 neighborhoods 000-111")
        if any(state not in (0, 1) for state in self.entries.values()):
            raise ValueError("Rule table states must be 0 or 1")
        if self.to_rule_number() != self.rule_number:
            raise ValueError(
                f"Rule table entries spell rule {self.to_rule_number()}, not rule {self.rule_number}"
            )

    @property
    def outputs(self) -> Tuple[int, ...]:
        """Next states indexed by neighborhood value 0-7"""
        return tuple(self.entries[format(k, '03b')] for k in range(8))

    def next_state(self, left: int, center: int, right: int) -> int:
        """Next state of a cell given its neighborhood"""
        return self.entries[f"{left}{center}{right}"]

    def to_rule_number(self) -> int:
        """Rebuild the rule number from the entries"""
        return sum(state << k for k, state in enumerate(self.outputs))

    def to_dict(self) -> Dict[str, Any]:
        """Convert rule table to dictionary"""
        return {
            'rule_number': self.rule_number,
            'entries': {pattern: self.entries[pattern] for pattern in NEIGHBORHOODS}
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RuleTable':
        """Create rule table from dictionary"""
        return cls(
            rule_number=data['rule_number'],
            entries=dict(data['entries'])
        )
