from __future__ import annotations

import functools

import pytest

from cliffgraph.catalog import load_catalog


@functools.lru_cache(maxsize=None)
def catalog_entries():
    return tuple(load_catalog())


@functools.lru_cache(maxsize=None)
def group(name: str):
    for e in catalog_entries():
        if e.name == name:
            return e.group()
    raise KeyError(name)


def groups_up_to(bound: int):
    out = []
    for e in catalog_entries():
        G = group(e.name)
        if G.order <= bound:
            out.append((e.name, G))
    return out


@pytest.fixture
def G():
    return group


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
