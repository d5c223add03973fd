"""Shared fixtures: the standard example posets and their JSON files."""

import pytest

from posetdeform.posets import (
    chain_poset,
    crown_poset,
    diamond_poset,
    sphere_poset,
)


@pytest.fixture(scope="session")
def chain2():
    return chain_poset(2)


@pytest.fixture(scope="session")
def chain3():
    return chain_poset(3)


@pytest.fixture(scope="session")
def diamond():
    return diamond_poset()


@pytest.fixture(scope="session")
def cr4():
    return crown_poset()


@pytest.fixture(scope="session")
def sphere():
    return sphere_poset()
