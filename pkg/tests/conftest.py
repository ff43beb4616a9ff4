import pytest
import os
import sys

# Add src to path so we can import our modules
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))
os.environ['ECA_ENV'] = 'test'

from cli import main
from models.configuration import Configuration
from services.automaton_service import automaton_service
from services.ether_service import ether_service

FULL_WIDTH = 65900


@pytest.fixture(scope='session')
def rule_110():
    """Transition table of rule 110"""
    return automaton_service.make_rule_table(110)


@pytest.fixture(scope='session')
def random_row():
    """A seeded density-0.5 row at full width"""
    return automaton_service.random_configuration(FULL_WIDTH, 0.5, 20120601)


@pytest.fixture(scope='session')
def ether_tile(rule_110):
    """The rule 110 ether: 14 cells, 7 steps"""
    tile = ether_service.find_ether_tile(rule_110, 14, 7)
    assert tile is not None
    return tile


@pytest.fixture
def write_cfg(tmp_path):
    """Write a .cfg file and return its path"""
    def _write(content, name='initial.cfg'):
        path = tmp_path / name
        if isinstance(content, Configuration):
            content = content.to_string()
        if isinstance(content, str):
            content = content.encode('ascii')
        path.write_bytes(content)
        return str(path)
    return _write


@pytest.fixture
def run_cli():
    """Run the command line and return its exit code"""
    def _run(*argv):
        try:
            return main([str(arg) for arg in argv])
        except SystemExit as e:
            return e.code
    return _run
