"""Group catalog files: JSON lines, one entry per group."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from cliffgraph.errors import InputError
from cliffgraph.permgroup import Group, closure, parse_permutation


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    degree: int
    generators: tuple[str, ...]
    tags: tuple[str, ...] = field(default=())

    def group(self) -> Group:
        perms = [parse_permutation(g, self.degree) for g in self.generators]
        return closure(self.degree, perms)


def parse_catalog(text: str, source: str = "<catalog>") -> list[CatalogEntry]:
    entries, names = [], set()
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
            entry = CatalogEntry(
                name=str(raw["name"]),
                degree=int(raw["degree"]),
                generators=tuple(raw["generators"]),
                tags=tuple(raw.get("tags", ())),
            )
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"{source}:{lineno}: bad catalog entry ({exc})") from None
        if entry.name in names:
            raise InputError(f"{source}:{lineno}: duplicate group name {entry.name!r}")
        names.add(entry.name)
        entries.append(entry)
    return entries


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    """Entries of a catalog file; the bundled catalog when ``path`` is None."""
    if path is None:
        text = resources.files("cliffgraph").joinpath("data/catalog.jsonl").read_text()
        return parse_catalog(text, "bundled catalog")
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read catalog {path}: {exc}") from None
    return parse_catalog(text, str(path))


def find_entry(entries: list[CatalogEntry], name: str) -> CatalogEntry:
    for e in entries:
        if e.name == name:
            return e
    raise InputError(f"unknown group {name!r}")


def catalog_group(name: str, path: str | Path | None = None) -> Group:
    return find_entry(load_catalog(path), name).group()
