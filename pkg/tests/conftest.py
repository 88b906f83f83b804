"""Shared fixtures: the expensive builds and classifications, once per session."""

import pytest

from perfpart.construct_l61 import build_l61
from perfpart.construct_l82 import build_l82, build_type1, build_type2, build_type3
from perfpart.graph_model import l_graph
from perfpart.matchings import classify_l61, classify_l82, enumerate_matchings


@pytest.fixture(scope="session")
def l61_classes():
    return classify_l61(enumerate_matchings(l_graph(1, 6)))


@pytest.fixture(scope="session")
def l82_classes():
    return classify_l82(enumerate_matchings(l_graph(2, 4)))


@pytest.fixture(scope="session")
def l61_cert():
    return build_l61()


@pytest.fixture(scope="session")
def type1_parts():
    return build_type1()


@pytest.fixture(scope="session")
def type2_parts():
    return build_type2()


@pytest.fixture(scope="session")
def type3_parts():
    return build_type3()


@pytest.fixture(scope="session")
def l82_cert():
    return build_l82()
