"""JSON wire formats.

Subsets travel as sorted label arrays, extended naturals as ints or ``"inf"``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .families import Family
from .foundations import FiniteMap, Universe, extnat, extnat_to_json
from .multifamilies import MultiFamily, MultiSet
from .natep import EpSequence, EpSet
from .topology import FiniteTopology


class FormatError(ValueError):
    """Malformed input document."""


def _universe(doc) -> Universe:
    labels = doc["labels"] if isinstance(doc, dict) else doc
    try:
        return Universe(tuple(labels))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad universe: {exc}") from exc


def _subset(U: Universe, labels) -> int:
    if not isinstance(labels, list):
        raise FormatError(f"a subset must be a list of labels, got {labels!r}")
    try:
        return U.mask(labels)
    except KeyError as exc:
        raise FormatError(str(exc)) from exc


def subset_to_json(U: Universe, S: int) -> list[str]:
    return U.members(S)


def universe_to_json(U: Universe) -> dict:
    return {"labels": list(U.labels)}


def universe_from_json(doc) -> Universe:
    return _universe(doc)


def family_to_json(F: Family) -> dict:
    U = F.universe
    return {"universe": list(U.labels), "members": [U.members(S) for S in F]}


def family_from_json(doc: dict) -> Family:
    try:
        U = _universe(doc["universe"])
        return Family(U, frozenset(_subset(U, s) for s in doc["members"]))
    except KeyError as exc:
        raise FormatError(f"family document lacks {exc}") from exc


def multifamily_to_json(M: MultiFamily, include_zero: bool = False) -> dict:
    U = M.universe
    values = [
        {"set": U.members(S), "value": extnat_to_json(v)}
        for S, v in enumerate(M.values())
        if include_zero or v != 0
    ]
    return {"universe": list(U.labels), "values": values}


def multifamily_from_json(doc: dict) -> MultiFamily:
    try:
        U = _universe(doc["universe"])
        mapping = {}
        for item in doc["values"]:
            mapping[_subset(U, item["set"])] = extnat(item["value"])
    except KeyError as exc:
        raise FormatError(f"multi-family document lacks {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc
    return MultiFamily.from_mapping(U, mapping)


def multiset_to_json(L: MultiSet) -> dict:
    return {
        "universe": list(L.universe.labels),
        "values": [{"element": x, "value": extnat_to_json(v)} for x, v in L.as_dict().items()],
    }


def multiset_from_json(doc: dict) -> MultiSet:
    try:
        U = _universe(doc["universe"])
        return MultiSet.from_mapping(U, {it["element"]: extnat(it["value"]) for it in doc["values"]})
    except KeyError as exc:
        raise FormatError(f"multi-set document lacks {exc}") from exc


def topology_to_json(T: FiniteTopology) -> dict:
    U = T.universe
    return {"universe": list(U.labels), "opens": [U.members(V) for V in sorted(T.opens)]}


def topology_from_json(doc: dict) -> FiniteTopology:
    try:
        U = _universe(doc["universe"])
        return FiniteTopology(U, frozenset(_subset(U, s) for s in doc["opens"]))
    except KeyError as exc:
        raise FormatError(f"topology document lacks {exc}") from exc


def map_to_json(f: FiniteMap) -> dict:
    return {"domain": list(f.domain.labels), "codomain": list(f.codomain.labels), "images": f.to_json()}


def epset_from_json(doc) -> EpSet:
    if isinstance(doc, str):
        text = doc.strip()
        if text.startswith("{"):
            return epset_from_json(json.loads(text))
        try:
            return EpSet.parse(text)
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    try:
        return EpSet(str(doc.get("prefix", "")), str(doc["pattern"]))
    except KeyError as exc:
        raise FormatError(f"ep-set document lacks {exc}") from exc
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def epset_to_json(S: EpSet) -> dict:
    return S.to_json()


def sequence_from_json(doc: dict) -> EpSequence:
    try:
        U = _universe(doc["universe"])
        return EpSequence.from_labels(U, doc.get("prefix", []), doc["pattern"])
    except KeyError as exc:
        raise FormatError(f"sequence document lacks {exc}") from exc
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def sequence_to_json(x: EpSequence) -> dict:
    return x.to_json()


def load_document(source: str) -> Any:
    """Parse a path to a JSON file, ``-`` for stdin, or inline JSON text."""
    import sys

    try:
        if source == "-":
            return json.load(sys.stdin)
        text = source.strip()
        if text.startswith("{") or text.startswith("["):
            return json.loads(text)
        return json.loads(Path(source).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {source!r}: {exc}") from exc


def to_jsonable(obj):
    """Make nested report values JSON-safe (INF -> "inf")."""
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj
