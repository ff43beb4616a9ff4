"""
Space-time diagrams as raster images: one pixel per cell, one pixel row per recorded step.
"""
import logging
from pathlib import Path
from typing import Optional, Sequence
from PIL import Image
from PIL.PngImagePlugin import PngInfo
from errors import RangeError, UsageError
from models.configuration import Configuration
from models.region import Region
from services.file_service import file_service

logger = logging.getLogger(__name__)

# Pillow writes mode '1' images through its PPM plugin as binary PBM (P4)
IMAGE_FORMATS = {
    '.png': 'PNG',
    '.pbm': 'PPM',
}


class ImageService:
    """Service for drawing space-time diagrams of a region over a step window"""

    def scanline(self, row: Configuration, region: Optional[Region] = None) -> bytes:
        """
        Pack the cells of a region into one mode '1' image row.

        Mode '1' rows are padded to whole bytes and a set bit is white, so
        cells in state 1 become cleared bits (black pixels).

        Args:
            row: Configuration to crop
            region: Cells drawn, left to right; None draws the whole row

        Returns:
            bytes: ceil(length / 8) bytes, most significant bit first

        Raises:
            RangeError: If the region does not fit the row or is empty
        """
        region = Region(0, row.width) if region is None else region
        if not region.fits(row.width) or region.length == 0:
            raise RangeError(f"Region {region} cannot be drawn from a row of width {row.width}")

        mask = (1 << region.length) - 1
        cells = (row.bits >> (row.width - region.end_x)) & mask
        pad = (-region.length) % 8
        return ((cells ^ mask) << pad).to_bytes((region.length + pad) // 8, 'big')

    def render(self, scanlines: Sequence[bytes], width: int) -> Image.Image:
        """Assemble scanlines of width pixels, earliest step on top"""
        if not scanlines:
            raise UsageError("Cannot draw a space-time image without rows")
        return Image.frombytes('1', (width, len(scanlines)), b''.join(scanlines))

    def emit_spacetime(
        self,
        scanlines: Sequence[bytes],
        width: int,
        path: str,
        metadata: Sequence[str] = ()
    ) -> str:
        """
        Write a space-time image as PNG or PBM, chosen by the file suffix.

        PNG files carry the metadata lines as text chunks.

        Args:
            scanlines: Rows built by scanline(), in step order
            width: Pixels per row (the region length)
            path: Destination .png or .pbm path
            metadata: 'key: value' lines to embed

        Returns:
            str: The written path

        Raises:
            UsageError: If the suffix is not supported or there are no rows
        """
        image_format = IMAGE_FORMATS.get(Path(path).suffix.lower())
        if image_format is None:
            raise UsageError(f"Space-time images must end in {' or '.join(IMAGE_FORMATS)}, got {path}")

        image = self.render(scanlines, width)
        options = {}
        if image_format == 'PNG':
            info = PngInfo()
            for line in metadata:
                key, _, value = line.partition(': ')
                info.add_text(key, value)
            options['pnginfo'] = info

        with file_service.atomic_writer(path, binary=True) as handle:
            image.save(handle, format=image_format, **options)
        logger.info(f"Wrote space-time image {path} ({image.width}x{image.height})")
        return str(path)


# Global image service instance
image_service = ImageService()
