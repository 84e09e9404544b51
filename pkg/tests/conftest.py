"""
Shared fixtures: the repository root goes on sys.path and root systems are cached per session.
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from flagstab.roots.root_system import build  # noqa: E402
from flagstab.weyl.weyl_group import WeylGroup  # noqa: E402

_GROUPS = {}


def weyl_group(type_spec: str) -> WeylGroup:
    if type_spec not in _GROUPS:
        _GROUPS[type_spec] = WeylGroup(build(type_spec))
    return _GROUPS[type_spec]


@pytest.fixture(scope="session")
def groups():
    """Lookup of cached Weyl groups by type spec."""
    return weyl_group


@pytest.fixture(scope="session")
def a2():
    return weyl_group("A2")


@pytest.fixture(scope="session")
def b2():
    return weyl_group("B2")


@pytest.fixture(scope="session")
def g2():
    return weyl_group("G2")


@pytest.fixture(scope="session")
def b3():
    return weyl_group("B3")
