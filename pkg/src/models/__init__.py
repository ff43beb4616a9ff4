from models.rule_table import RuleTable
from models.configuration import Configuration
from models.spacetime_recording import SpacetimeRecording
from models.phrase_list import PhraseList
from models.lz_dictionary import LzDictionary
from models.cts_system import CtsSystem, CtsState, Halted
from models.cts_trace import CtsTrace
from models.region import Region
from models.complexity_series import ComplexitySeries
from models.ether_tile import EtherTile
from models.drop_event import DropEvent
from models.experiment_spec import ExperimentSpec, InitialSource, AnalysisSpec

__all__ = [
    'RuleTable',
    'Configuration',
    'SpacetimeRecording',
    'PhraseList',
    'LzDictionary',
    'CtsSystem',
    'CtsState',
    'Halted',
    'CtsTrace',
    'Region',
    'ComplexitySeries',
    'EtherTile',
    'DropEvent',
    'ExperimentSpec',
    'InitialSource',
    'AnalysisSpec'
]
