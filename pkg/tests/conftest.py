from pathlib import Path

import pytest

from aggparadox.logic.parser import parse
from aggparadox.models.schemas import IssueSet

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def issues3():
    return IssueSet.default(3)


@pytest.fixture
def implication(issues3):
    """p1 & p2 -> p3, the smallest unsafe constraint"""
    return parse("p1 & p2 -> p3", issues3)


@pytest.fixture
def two_cnf(issues3):
    return parse("(p1 | p2) & (~p2 | p3)", issues3)


@pytest.fixture
def ostrogorski_ic():
    issues = IssueSet.of("E", "S", "F", "A")
    return parse("A <-> ((E & S) | (E & F) | (S & F))", issues)


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def golden_dir():
    return GOLDEN_DIR
