import os

import pytest

from utils.problem_reader import ProblemReader

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def problem_path(name):
    return os.path.join(ROOT, 'problems', name)


def data_path(name):
    return os.path.join(ROOT, 'tests', 'data', name)


@pytest.fixture
def reader():
    return ProblemReader()


@pytest.fixture
def example1(reader):
    """Binomial coefficients"""
    return reader.read(problem_path('example1.json'))


@pytest.fixture
def example2(reader):
    """Bit strings starting with 0, counted by length and number of singles"""
    return reader.read(problem_path('example2.json'))
