"""
Analysis and initial-source enumerations.
"""
from enum import Enum


class AnalysisKind(str, Enum):
    """
    What part of each row an analysis measures.

    Values:
        WHOLE: The whole row
        SECTIONS: n contiguous sections covering the row
        REGIONS: An explicit list of regions
    """
    WHOLE = 'whole'
    SECTIONS = 'sections'
    REGIONS = 'regions'


class InitialKind(str, Enum):
    """
    Where the initial configuration comes from.

    Values:
        RANDOM: Seeded random cells at a given density
        FILE: A .cfg file
    """
    RANDOM = 'random'
    FILE = 'file'
