"""Poset document format (JSON).

A document is an object with ``elements`` (array of strings), ``covers``
(array of ``[lower, upper]``), optional ``labels`` (array of
``[lower, upper, integer]``) and optional ``name``.  Ranks are never stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .poset import Poset, build_poset
from .rlabeling import Labeling, normalize_labeling


@dataclass
class PosetDocument:
    name: str
    poset: Poset
    labeling: Labeling | None = None


def _fail(msg: str, source: str | None) -> ParseError:
    return ParseError(f"{source}: {msg}" if source else msg)


def parse_poset(text: str, source: str | None = None) -> PosetDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _fail(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}", source) from None
    if not isinstance(data, dict):
        raise _fail("document must be an object", source)
    unknown = set(data) - {"name", "elements", "covers", "labels"}
    if unknown:
        raise _fail(f"unknown keys {sorted(unknown)}", source)

    name = data.get("name", "")
    if not isinstance(name, str):
        raise _fail("'name' must be a string", source)
    elements = data.get("elements")
    if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
        raise _fail("'elements' must be an array of strings", source)
    seen: set[str] = set()
    for e in elements:
        if e in seen:
            raise _fail(f"duplicate element {e!r}", source)
        seen.add(e)

    covers = data.get("covers", [])
    if not isinstance(covers, list):
        raise _fail("'covers' must be an array", source)
    for i, c in enumerate(covers):
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            raise _fail(f"covers[{i}] must be a pair of strings", source)

    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list):
            raise _fail("'labels' must be an array", source)
        for i, lab in enumerate(labels):
            if not (
                isinstance(lab, list)
                and len(lab) == 3
                and isinstance(lab[0], str)
                and isinstance(lab[1], str)
                and isinstance(lab[2], int)
                and not isinstance(lab[2], bool)
            ):
                raise _fail(f"labels[{i}] must be [string, string, integer]", source)

    poset = build_poset(elements, [tuple(c) for c in covers])
    labeling = normalize_labeling(poset, labels) if labels is not None else None
    return PosetDocument(name, poset, labeling)


def load_poset(path: str | Path) -> PosetDocument:
    path = Path(path)
    return parse_poset(path.read_text(encoding="utf-8"), source=str(path))


def render_poset(doc: PosetDocument) -> str:
    P = doc.poset
    data: dict = {}
    if doc.name:
        data["name"] = doc.name
    data["elements"] = list(P.names)
    data["covers"] = [[P.names[u], P.names[v]] for u, v in P.covers]
    if doc.labeling is not None:
        data["labels"] = [[P.names[u], P.names[v], doc.labeling[(u, v)]] for u, v in P.covers]
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"
