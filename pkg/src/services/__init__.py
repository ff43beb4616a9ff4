from services.automaton_service import automaton_service
from services.lz78_service import lz78_service
from services.cts_service import cts_service
from services.analysis_service import analysis_service
from services.ether_service import ether_service
from services.file_service import file_service
from services.plot_service import plot_service
from services.image_service import image_service
from services.experiment_service import experiment_service

__all__ = [
    'automaton_service',
    'lz78_service',
    'cts_service',
    'analysis_service',
    'ether_service',
    'file_service',
    'plot_service',
    'image_service',
    'experiment_service'
]
