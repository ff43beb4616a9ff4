"""
Search for periodic backgrounds (ether) and measure how much of a row they cover.
"""
import logging
from typing import Optional, Set
import numpy as np
from config import get_config
from errors import CapabilityError, RangeError, UsageError
from models.configuration import Configuration
from models.ether_tile import EtherTile
from models.rule_table import RuleTable
from services.automaton_service import automaton_service

logger = logging.getLogger(__name__)


def _minimal_period(row: str) -> int:
    """Smallest cyclic period of a row"""
    width = len(row)
    for period in range(1, width + 1):
        if width % period == 0 and row == row[period:] + row[:period]:
            return period
    return width


class EtherService:
    """Service for ether tile search, tiling and coverage"""

    def __init__(self):
        self.config = get_config()

    def find_ether_tile(
        self,
        rule: RuleTable,
        spatial_period: int,
        temporal_period: int,
        repeats: Optional[int] = None
    ) -> Optional[EtherTile]:
        """
        Exhaustively search for a non-uniform periodic background.

        Every seed row of spatial_period cells is tiled across
        repeats * spatial_period cells and evolved temporal_period steps;
        the first primitive, non-uniform seed whose evolved row is a
        rotation of itself is verified again with the bit-packed kernel
        and returned.

        Args:
            rule: Transition table
            spatial_period: Cells per tile row (1 <= spatial_period <= ETHER_SEARCH_BOUND)
            temporal_period: Steps per repetition (>= 1)
            repeats: Tile copies in the test row (defaults to ETHER_TILE_REPEATS, at least 3)

        Returns:
            Optional[EtherTile]: The tile, or None if no seed qualifies

        Raises:
            UsageError: If a period is below 1
            CapabilityError: If spatial_period exceeds the search bound
        """
        repeats = max(3, self.config.ETHER_TILE_REPEATS if repeats is None else repeats)
        if spatial_period < 1 or temporal_period < 1:
            raise UsageError("Spatial and temporal periods must be at least 1")
        if spatial_period > self.config.ETHER_SEARCH_BOUND:
            raise CapabilityError(
                f"Exhaustive ether search is bounded to spatial period {self.config.ETHER_SEARCH_BOUND}, "
                f"got {spatial_period}"
            )

        width = repeats * spatial_period
        seeds = np.arange(1 << spatial_period, dtype=np.int64)
        shifts = np.arange(spatial_period - 1, -1, -1, dtype=np.int64)
        tiles = ((seeds[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
        initial = np.tile(tiles, (1, repeats))

        table = np.array(rule.outputs, dtype=np.uint8)
        rows = initial
        for _ in range(temporal_period):
            index = (np.roll(rows, 1, axis=1) << 2) | (rows << 1) | np.roll(rows, -1, axis=1)
            rows = table[index]

        candidates = np.zeros(len(seeds), dtype=bool)
        for shift in range(spatial_period):
            candidates |= np.all(rows == np.roll(initial, shift, axis=1), axis=1)

        for seed in np.flatnonzero(candidates):
            seed_row = ''.join(str(cell) for cell in tiles[seed])
            if _minimal_period(seed_row) != spatial_period or len(set(seed_row)) < 2:
                continue
            tile = self._verified_tile(rule, seed_row, temporal_period, width)
            if tile is not None:
                logger.info(
                    f"Rule {rule.rule_number}: ether tile {seed_row} "
                    f"({spatial_period} cells, {temporal_period} steps, shift {tile.shift_per_period})"
                )
                return tile
            logger.debug(f"Candidate {seed_row} failed verification")

        logger.info(f"Rule {rule.rule_number}: no ether tile of {spatial_period} cells and {temporal_period} steps")
        return None

    def _verified_tile(self, rule: RuleTable, seed_row: str, temporal_period: int, width: int) -> Optional[EtherTile]:
        spatial_period = len(seed_row)
        start = Configuration.from_string(seed_row * (width // spatial_period))

        rows = []
        current = start
        for _ in range(temporal_period):
            rows.append(current.to_string()[:spatial_period])
            current = automaton_service.step(current, rule)

        for shift in range(spatial_period):
            if start.rotate(shift) == current:
                return EtherTile(
                    rule_number=rule.rule_number,
                    spatial_period=spatial_period,
                    temporal_period=temporal_period,
                    rows=tuple(rows),
                    shift_per_period=shift
                )
        return None

    def tile_configuration(self, tile: EtherTile, width: int, phase: int = 0) -> Configuration:
        """
        An ether-only configuration.

        Args:
            tile: Ether tile
            width: Row width, a multiple of the spatial period
            phase: Tile row to use (taken modulo the temporal period)

        Returns:
            Configuration: tile.rows[phase] repeated across the row

        Raises:
            RangeError: If width is not a positive multiple of the spatial period
        """
        if width < 1 or width % tile.spatial_period:
            raise RangeError(f"Width {width} is not a multiple of spatial period {tile.spatial_period}")
        row = tile.rows[phase % tile.temporal_period]
        return Configuration.from_string(row * (width // tile.spatial_period))

    def _phase_codes(self, tile: EtherTile) -> Set[int]:
        codes = set()
        for row in tile.rows:
            for shift in range(tile.spatial_period):
                codes.add(int(row[shift:] + row[:shift], 2))
        return codes

    def ether_coverage(self, row: Configuration, tile: EtherTile) -> float:
        """
        Fraction of cells lying in ether.

        Cell x counts when the cyclic window of spatial_period cells
        centred on it equals some rotation of some tile row.

        Args:
            row: Configuration to measure
            tile: Ether tile

        Returns:
            float: Covered fraction in [0, 1]
        """
        period = tile.spatial_period
        cells = row.to_array().astype(np.int64)
        offsets = np.arange(period) - period // 2
        windows = cells[(np.arange(row.width)[:, None] + offsets[None, :]) % row.width]
        weights = np.int64(1) << np.arange(period - 1, -1, -1, dtype=np.int64)
        codes = windows @ weights

        matched = np.isin(codes, np.fromiter(self._phase_codes(tile), dtype=np.int64))
        return float(matched.mean())


# Global ether service instance
ether_service = EtherService()
