"""Bundled example posets."""

from importlib import resources


def fixture_path(name: str):
    return resources.files(__name__) / f"{name}.poset"
