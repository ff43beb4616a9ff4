"""
Flat-file formats: .cfg configurations, space-time text and CSV series.
"""
import logging
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Generator, IO, Iterable, List, Sequence
import pandas as pd
from errors import DataError, ParseError
from models.complexity_series import ComplexitySeries
from models.configuration import Configuration

logger = logging.getLogger(__name__)

CFG_LINE_WIDTH = 100
WHITESPACE = b' \t\r\n\x0b\x0c'


def _current_umask() -> int:
    mask = os.umask(0)
    os.umask(mask)
    return mask


class FileService:
    """Service for reading and writing experiment files"""

    def parse_configuration(self, data: bytes, source: str = '<data>') -> Configuration:
        """
        Parse .cfg content: '0'/'1' digits, whitespace ignored, x=0 first.

        Args:
            data: Raw file bytes
            source: Name used in error messages

        Returns:
            Configuration: Width equals the number of digits

        Raises:
            ParseError: On any other byte (with its offset) or when there are no digits
        """
        digits = data.translate(None, WHITESPACE)
        illegal = digits.translate(None, b'01')
        if illegal:
            offset = next(i for i, byte in enumerate(data) if byte not in b'01' and byte not in WHITESPACE)
            raise ParseError(f"Illegal character {bytes([data[offset]])!r} in configuration", offset, source)
        if not digits:
            raise ParseError("Configuration has zero digits", source=source)

        return Configuration.from_string(digits.decode('ascii'))

    def load_configuration(self, path: str) -> Configuration:
        """
        Load a .cfg configuration file.

        Args:
            path: File path

        Returns:
            Configuration: The parsed configuration

        Raises:
            DataError: If the file is missing or unreadable
            ParseError: If the content is not a .cfg configuration
        """
        try:
            data = Path(path).read_bytes()
        except FileNotFoundError:
            raise DataError(f"Configuration file not found: {path}")
        except OSError as e:
            raise DataError(f"Cannot read configuration file {path}: {e}")

        config = self.parse_configuration(data, source=str(path))
        logger.info(f"Loaded configuration {path} ({config.width} cells)")
        return config

    def format_configuration(self, config: Configuration, line_width: int = CFG_LINE_WIDTH) -> str:
        text = config.to_string()
        return ''.join(text[i:i + line_width] + '\n' for i in range(0, len(text), line_width))

    def save_configuration(self, config: Configuration, path: str) -> str:
        """
        Write a configuration in .cfg format, wrapped for readability.

        Args:
            config: Configuration to write
            path: Destination path

        Returns:
            str: The written path
        """
        with self.atomic_writer(path) as handle:
            handle.write(self.format_configuration(config))
        return str(path)

    def save_spacetime(self, rows: Iterable[Configuration], path: str) -> str:
        """
        Write rows one per line, earliest first.

        Args:
            rows: Configurations in time order
            path: Destination path

        Returns:
            str: The written path
        """
        with self.atomic_writer(path) as handle:
            for row in rows:
                handle.write(row.to_string())
                handle.write('\n')
        return str(path)

    @contextmanager
    def atomic_writer(self, path: str, binary: bool = False) -> Generator[IO, None, None]:
        """
        Open a temporary file that replaces path only if the block succeeds.

        The replacement gets mode 0o666 less the process umask, as open() would.

        Args:
            path: Final destination
            binary: Yield a bytes handle instead of UTF-8 text

        Yields:
            IO: Handle to write to
        """
        destination = Path(path)
        destination.parent.mkdir(parents=True, exist_ok=True)
        descriptor, temporary = tempfile.mkstemp(prefix=f".{destination.name}.", dir=destination.parent)
        try:
            if binary:
                handle = os.fdopen(descriptor, 'wb')
            else:
                handle = os.fdopen(descriptor, 'w', encoding='utf-8', newline='')
            with handle:
                yield handle
            os.chmod(temporary, 0o666 & ~_current_umask())
            os.replace(temporary, destination)
        except BaseException:
            if os.path.exists(temporary):
                os.remove(temporary)
            raise

    def write_series_csv(self, path: str, series: Sequence[ComplexitySeries], comments: Sequence[str]) -> str:
        """
        Write aligned series as CSV: '#' comment lines, a header, then one row per step.

        A single series is written as `step,value`; several as one column
        per series label.

        Args:
            path: Destination path
            series: Series sharing start_step, stride and length
            comments: Metadata lines, written after '# '

        Returns:
            str: The written path

        Raises:
            ValueError: If the series are empty or not aligned
        """
        if not series:
            raise ValueError("No series to write")
        first = series[0]
        for other in series[1:]:
            if (other.start_step, other.stride, len(other)) != (first.start_step, first.stride, len(first)):
                raise ValueError("Series written to one CSV must share steps")

        columns: Dict[str, List] = {'step': first.steps}
        if len(series) == 1:
            columns['value'] = list(first.values)
        else:
            for item in series:
                columns[item.label] = list(item.values)
        frame = pd.DataFrame(columns)

        with self.atomic_writer(path) as handle:
            for line in comments:
                handle.write(f"# {line}\n")
            frame.to_csv(handle, index=False, lineterminator='\n', float_format='%.4f')

        logger.info(f"Wrote {path} ({len(first)} rows, {len(series)} series)")
        return str(path)

    def write_table_csv(self, path: str, records: Sequence[Dict], columns: Sequence[str], comments: Sequence[str]) -> str:
        """
        Write dictionaries as CSV rows under '#' comment lines.

        Args:
            path: Destination path
            records: Rows as dictionaries
            columns: Column order
            comments: Metadata lines

        Returns:
            str: The written path
        """
        frame = pd.DataFrame(list(records), columns=list(columns))
        with self.atomic_writer(path) as handle:
            for line in comments:
                handle.write(f"# {line}\n")
            frame.to_csv(handle, index=False, lineterminator='\n', float_format='%.4f')
        return str(path)

    def read_series_csv(self, path: str) -> List[ComplexitySeries]:
        """
        Read a series CSV written by write_series_csv.

        Args:
            path: CSV path

        Returns:
            List[ComplexitySeries]: One series per value column

        Raises:
            DataError: If the file is missing or has no step column
        """
        try:
            frame = pd.read_csv(path, comment='#')
        except FileNotFoundError:
            raise DataError(f"CSV file not found: {path}")
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            raise DataError(f"Cannot read CSV {path}: {e}")

        if 'step' not in frame.columns or len(frame.columns) < 2:
            raise DataError(f"CSV {path} needs a step column and at least one value column")

        steps = frame['step'].to_numpy()
        stride = int(steps[1] - steps[0]) if len(steps) > 1 else 1
        start = int(steps[0]) if len(steps) else 0
        return [
            ComplexitySeries(
                start_step=start,
                stride=max(stride, 1),
                values=frame[column].tolist(),
                label=column
            )
            for column in frame.columns if column != 'step'
        ]

    def remove_quietly(self, paths: Iterable[str]) -> None:
        """Delete files that exist, ignoring the rest"""
        for path in paths:
            try:
                os.remove(path)
                logger.info(f"Removed partial output {path}")
            except FileNotFoundError:
                pass


# Global file service instance
file_service = FileService()
