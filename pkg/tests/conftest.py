"""
Pytest configuration file.
"""

import os
import sys

import pytest

# Add the src directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from stallings_lab.core.event_system import event_bus
from stallings_lab.core.subgroup import Subgroup
from stallings_lab.core.words import word
from stallings_lab.lab.examples import example_guzman
from stallings_lab.sampling.random_gen import make_rng


@pytest.fixture
def rng():
    """A fixed-seed numpy generator."""
    return make_rng(12345)


@pytest.fixture
def guzman_pair():
    return example_guzman()


@pytest.fixture
def rose3():
    return Subgroup.full(3)


@pytest.fixture
def commutator_subgroup():
    """⟨x1 x2 x1⁻¹ x2⁻¹⟩ in F2."""
    return Subgroup.from_words(2, [word(1, 2, -1, -2)])


@pytest.fixture(autouse=True)
def clean_event_bus():
    """Drop subscriptions a test leaves behind on the global bus."""
    saved = {k: list(v) for k, v in event_bus._handlers.items()}
    yield
    event_bus._handlers.clear()
    event_bus._handlers.update(saved)


@pytest.fixture
def in_tmp(tmp_path, monkeypatch):
    """Run in an empty directory so log files and outputs stay out of the tree."""
    monkeypatch.chdir(tmp_path)
    return tmp_path
