from __future__ import annotations

from pathlib import Path

import pytest

from posetcalc import build_poset, load_poset, random_graded_poset
from posetcalc.data import fixture_path

GOLDEN = Path(__file__).parent / "golden"

P_ELEMENTS = ["0hat", "u1", "u2", "u3", "1hat"]
P_COVERS = [
    ("0hat", "u1"), ("0hat", "u2"), ("0hat", "u3"),
    ("u1", "1hat"), ("u2", "1hat"), ("u3", "1hat"),
]
P_LABELS = {
    ("0hat", "u1"): 1, ("0hat", "u2"): 2, ("0hat", "u3"): 3,
    ("u1", "1hat"): 2, ("u2", "1hat"): 1, ("u3", "1hat"): 1,
}
Q_ELEMENTS = ["0hat", "v1", "v2", "w1", "w2", "1hat"]
Q_COVERS = [
    ("0hat", "v1"), ("0hat", "v2"), ("v1", "w1"), ("v2", "w2"), ("w1", "1hat"), ("w2", "1hat"),
]

# seeds of the shared random suite: ranks 1..4, level widths <= 4
RANDOM_SEEDS = range(500)


@pytest.fixture(scope="session")
def P():
    return build_poset(P_ELEMENTS, P_COVERS)


@pytest.fixture(scope="session")
def Q():
    return build_poset(Q_ELEMENTS, Q_COVERS)


@pytest.fixture(scope="session")
def P_labels():
    return dict(P_LABELS)


@pytest.fixture(scope="session")
def chain2():
    return build_poset(["0", "1"], [("0", "1")])


@pytest.fixture(scope="session")
def trivial():
    return build_poset(["*"], [])


@pytest.fixture(scope="session")
def random_suite():
    return [random_graded_poset(seed, 4, 4) for seed in RANDOM_SEEDS]


@pytest.fixture(scope="session")
def small_random_suite(random_suite):
    return random_suite[:60]


@pytest.fixture(scope="session")
def bundled():
    return {name: load_poset(fixture_path(name)) for name in ("P", "Q")}
