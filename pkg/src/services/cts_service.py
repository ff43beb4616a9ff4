"""
Reference interpreter for cyclic tag systems.
"""
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union
from config import get_config
from errors import DataError, ParseError, UsageError
from models.cts_system import CtsSystem, CtsState, Halted
from models.cts_trace import CtsTrace

logger = logging.getLogger(__name__)

EMPTY_APPENDANT = '-'


class CtsService:
    """Service for stepping and running cyclic tag systems"""

    def __init__(self):
        self.config = get_config()

    def cts_step(self, state: Union[CtsState, Halted], system: CtsSystem) -> Union[CtsState, Halted]:
        """
        Read and delete the head symbol; a '1' appends the current appendant.

        Args:
            state: Current state with a non-empty word; a Halted value is rejected
            system: Appendant table

        Returns:
            Union[CtsState, Halted]: The next state, or Halted if the word became empty

        Raises:
            UsageError: If the state is already halted
        """
        if isinstance(state, Halted) or state.is_halted:
            raise UsageError("Cannot step a halted cyclic tag system")

        index = state.index % len(system)
        head, rest = state.word[0], state.word[1:]
        if head == '1':
            rest += system.appendants[index]

        step = state.step + 1
        if not rest:
            return Halted(step=step)

        return CtsState(word=rest, index=(index + 1) % len(system), step=step)

    def cts_run(
        self,
        initial: CtsState,
        system: CtsSystem,
        max_steps: Optional[int] = None,
        symbol_cap: Optional[int] = None
    ) -> CtsTrace:
        """
        Run a cyclic tag system until it halts or max_steps is reached.

        Args:
            initial: Starting state (step 0)
            system: Appendant table
            max_steps: Step limit (defaults to CTS_MAX_STEPS)
            symbol_cap: Total symbols stored verbatim before the trace keeps lengths only
                (defaults to CTS_TRACE_SYMBOL_CAP)

        Returns:
            CtsTrace: Words (up to the cap) and lengths from step 0, plus the halting flag

        Raises:
            UsageError: If max_steps is negative
        """
        max_steps = self.config.CTS_MAX_STEPS if max_steps is None else max_steps
        symbol_cap = self.config.CTS_TRACE_SYMBOL_CAP if symbol_cap is None else symbol_cap
        if max_steps < 0:
            raise UsageError(f"max_steps must be non-negative, got {max_steps}")

        trace = CtsTrace()
        if initial.is_halted:
            trace.halted = True
            trace.halted_at = initial.step
            return trace

        stored = 0
        state: Union[CtsState, Halted] = initial
        for _ in range(max_steps + 1):
            if isinstance(state, Halted):
                trace.halted = True
                trace.halted_at = state.step
                logger.debug(f"Cyclic tag system halted at step {state.step}")
                break

            trace.lengths.append(len(state.word))
            if not trace.words_truncated and stored + len(state.word) <= symbol_cap:
                trace.words.append(state.word)
                stored += len(state.word)
            elif not trace.words_truncated:
                trace.words_truncated = True
                logger.info(f"Trace symbol cap {symbol_cap} reached at step {state.step}; keeping lengths only")

            if len(trace.lengths) > max_steps:
                break
            state = self.cts_step(state, system)

        return trace

    def parse_description(self, text: str, source: Optional[str] = None) -> Tuple[CtsState, CtsSystem]:
        """
        Parse a CTS description: the initial word, then one appendant per line.

        '#' starts a comment; blank lines are ignored; a lone '-' is the
        empty appendant.

        Args:
            text: Description text
            source: Name used in error messages

        Returns:
            Tuple[CtsState, CtsSystem]: Initial state at index 0 and the appendant table

        Raises:
            ParseError: If a line holds anything but 0/1, or no appendant is given
        """
        offset = 0
        words: List[str] = []
        for line in text.splitlines(keepends=True):
            content = line.split('#', 1)[0].strip()
            if content:
                if content != EMPTY_APPENDANT:
                    bad = content.strip('01')
                    if bad:
                        column = line.index(bad[0])
                        raise ParseError(f"Illegal symbol {bad[0]!r} in CTS description", offset + column, source)
                words.append(content)
            offset += len(line.encode('utf-8'))

        if len(words) < 2:
            raise ParseError("CTS description needs an initial word and at least one appendant", source=source)
        if words[0] == EMPTY_APPENDANT:
            raise ParseError("The initial word must not be empty", source=source)

        appendants = tuple('' if word == EMPTY_APPENDANT else word for word in words[1:])
        return CtsState(word=words[0]), CtsSystem(appendants=appendants)

    def load_description(self, path: str) -> Tuple[CtsState, CtsSystem]:
        """
        Read and parse a CTS description file.

        Args:
            path: File path

        Returns:
            Tuple[CtsState, CtsSystem]: Initial state and appendant table

        Raises:
            DataError: If the file cannot be read
            ParseError: If its content is malformed
        """
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise DataError(f"Cannot read CTS description {path}: {e}")
        return self.parse_description(text, source=str(path))


# Global CTS service instance
cts_service = CtsService()
