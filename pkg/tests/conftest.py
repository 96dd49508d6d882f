from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from helpers import GOLDEN_NAMES, load_family

from houghreg import check_sigma_regularity


@pytest.fixture(scope="session")
def golden_families():
    return {name: load_family(name) for name in GOLDEN_NAMES}


@pytest.fixture(scope="session")
def golden_reports(golden_families):
    """One analysis per golden family, shared by all tests that need it."""
    return {name: check_sigma_regularity(fam) for name, fam in golden_families.items()}
