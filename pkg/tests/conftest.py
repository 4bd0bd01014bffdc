from __future__ import annotations

from pathlib import Path

import pytest

from cdgraphs.enumeration import load_appendix, read_labelled_g6
from cdgraphs.occurrence import KnowledgeBase

DATA = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def appendix():
    return load_appendix(DATA)


@pytest.fixture(scope="session")
def disconnected():
    return dict(read_labelled_g6(DATA / "disconnected.g6"))


@pytest.fixture(scope="session")
def lemma_graphs():
    return dict(read_labelled_g6(DATA / "lemma_graphs.g6"))


@pytest.fixture(scope="session")
def kb() -> KnowledgeBase:
    return KnowledgeBase.load(DATA / "knowledge_base.facts")


def p(*ks: int) -> list[int]:
    """p_k vertex names to 0-based indices."""
    return [k - 1 for k in ks]
