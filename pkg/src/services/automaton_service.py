"""
Elementary cellular automaton stepping on bit-packed periodic rows.
"""
import logging
from typing import Iterator, List, Optional, Tuple
import numpy as np
from config import get_config
from errors import RangeError, InvalidConfigurationError, UsageError
from models.rule_table import RuleTable
from models.configuration import Configuration
from models.spacetime_recording import SpacetimeRecording

logger = logging.getLogger(__name__)


class AutomatonService:
    """Service for building rules and evolving configurations"""

    def __init__(self):
        self.config = get_config()

    def make_rule_table(self, rule_number: int) -> RuleTable:
        """
        Decode a rule number into its 8-entry transition table.

        Args:
            rule_number: Rule number 0-255

        Returns:
            RuleTable: Table with entries[b2b1b0] = bit (4*b2 + 2*b1 + b0) of rule_number

        Raises:
            RangeError: If rule_number is outside 0-255
        """
        if not 0 <= rule_number <= 255:
            raise RangeError(f"Rule number must be 0-255, got {rule_number}")

        entries = {format(k, '03b'): (rule_number >> k) & 1 for k in range(8)}
        return RuleTable(rule_number=rule_number, entries=entries)

    def step(self, config: Configuration, rule: RuleTable) -> Configuration:
        """
        Advance a configuration by one time step under periodic boundaries.

        The row is one integer, so every bitwise operation below updates
        all cells at once.

        Args:
            config: Current configuration (width >= 3)
            rule: Transition table

        Returns:
            Configuration: The configuration at the next step

        Raises:
            InvalidConfigurationError: If the width is below 3
        """
        width = config.width
        if width < 3:
            raise InvalidConfigurationError(f"Configuration width must be at least 3, got {width}")

        mask = config.mask
        center = config.bits
        # left[x] = cells[x-1], right[x] = cells[x+1], both cyclic
        left = (center >> 1) | ((center & 1) << (width - 1))
        right = ((center << 1) & mask) | (center >> (width - 1))

        return Configuration(width, self._apply_rule(rule, left, center, right, mask))

    def _apply_rule(self, rule: RuleTable, left: int, center: int, right: int, mask: int) -> int:
        outputs = rule.outputs
        ones = [k for k in range(8) if outputs[k]]
        if not ones:
            return 0
        if len(ones) == 8:
            return mask

        # Sum of the shorter minterm list; the zero list is complemented at the end
        invert = len(ones) > 4
        terms = [k for k in range(8) if not outputs[k]] if invert else ones

        literals = (
            (left ^ mask, left),
            (center ^ mask, center),
            (right ^ mask, right)
        )
        result = 0
        for k in terms:
            result |= literals[0][(k >> 2) & 1] & literals[1][(k >> 1) & 1] & literals[2][k & 1]

        return result ^ mask if invert else result

    def iter_evolution(
        self,
        config: Configuration,
        rule: RuleTable,
        steps: int,
        record_every: int = 1
    ) -> Iterator[Tuple[int, Configuration]]:
        """
        Evolve a configuration, yielding every record_every-th step.

        Nothing is kept between yields, so long runs cost one row of memory.

        Args:
            config: Initial configuration (step 0)
            rule: Transition table
            steps: Number of steps to simulate
            record_every: Stride between yielded steps

        Yields:
            Tuple[int, Configuration]: (step, configuration) for steps 0, stride, 2*stride, ...

        Raises:
            UsageError: If steps is negative or the stride is below 1
        """
        if steps < 0:
            raise UsageError(f"Steps must be non-negative, got {steps}")
        if record_every < 1:
            raise UsageError(f"Record stride must be at least 1, got {record_every}")

        progress_every = self.config.PROGRESS_EVERY
        current = config
        yield 0, current
        for t in range(1, steps + 1):
            current = self.step(current, rule)
            if t % record_every == 0:
                yield t, current
            if progress_every and t % progress_every == 0:
                logger.info(f"Rule {rule.rule_number}: step {t}/{steps}")

    def evolve(
        self,
        config: Configuration,
        rule: RuleTable,
        steps: int,
        record_every: int = 1
    ) -> SpacetimeRecording:
        """
        Evolve a configuration and record its space-time history.

        Args:
            config: Initial configuration
            rule: Transition table
            steps: Number of steps to simulate
            record_every: Stride between recorded rows

        Returns:
            SpacetimeRecording: floor(steps / record_every) + 1 rows starting with config
        """
        rows: List[Configuration] = [
            row for _, row in self.iter_evolution(config, rule, steps, record_every)
        ]
        return SpacetimeRecording(
            width=config.width,
            start_step=0,
            stride=record_every,
            rows=rows,
            rule_number=rule.rule_number
        )

    def random_configuration(
        self,
        width: int,
        density: Optional[float] = None,
        seed: Optional[int] = None
    ) -> Configuration:
        """
        Draw a random configuration from a seeded PCG64 generator.

        Args:
            width: Number of cells (>= 1)
            density: Probability of each cell being 1 (defaults to DEFAULT_DENSITY)
            seed: Generator seed (defaults to DEFAULT_SEED)

        Returns:
            Configuration: The same configuration for the same (width, density, seed)

        Raises:
            RangeError: If width < 1 or density is outside [0, 1]
        """
        density = self.config.DEFAULT_DENSITY if density is None else density
        seed = self.config.DEFAULT_SEED if seed is None else seed

        if width < 1:
            raise RangeError(f"Width must be at least 1, got {width}")
        if not 0.0 <= density <= 1.0:
            raise RangeError(f"Density must be within [0, 1], got {density}")

        rng = np.random.default_rng(seed)
        cells = (rng.random(width) < density).astype(np.uint8)
        logger.debug(f"Random configuration: width={width} density={density} seed={seed}")
        return Configuration.from_array(cells)


# Global automaton service instance
automaton_service = AutomatonService()
