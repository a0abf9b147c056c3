"""JSON formats for semisimplicial sets (``.sst.json``), categories (``.cat.json``)
and degeneracy structures (``.deg.json``)."""
from __future__ import annotations

import json
import re
from pathlib import Path

from .bridge import DegeneracyStructure
from .catstruct import Precategory, ReflexiveTransitiveGraph, TransitiveGraph
from .report import PreconditionError, StructuralError
from .sscore import SemiSimplicialSet


class InputError(StructuralError):
    """Unreadable or malformed input file."""


def sst_to_dict(sst: SemiSimplicialSet) -> dict:
    """``{"top_level": N, "levels": [{"count": c}, {"simplices": [{"faces": [...]}, ...]}, ...]}``"""
    levels: list[dict] = [{"count": sst.count(0)}]
    for k in range(1, sst.top_level + 1):
        levels.append({"simplices": [{"faces": list(f)} for f in sst.level(k)]})
    return {"top_level": sst.top_level, "levels": levels}


def sst_from_dict(data: dict) -> SemiSimplicialSet:
    try:
        top = int(data["top_level"])
        levels = data["levels"]
        if len(levels) != top + 1:
            raise InputError(f"top_level {top} needs {top + 1} level records, got {len(levels)}")
        higher = [[s["faces"] for s in lvl["simplices"]] for lvl in levels[1:]]
        return SemiSimplicialSet(int(levels[0]["count"]), higher, top_level=top)
    except (KeyError, TypeError, ValueError, AttributeError, IndexError) as exc:
        raise InputError(f"malformed semisimplicial set: {exc!r}") from exc


def cat_to_dict(c: TransitiveGraph) -> dict:
    """``{"objects": n, "hom": {"a,b": k}, "comp": [[a, b, c, g, f, result], ...], "id": [...]}``"""
    out = {
        "objects": c.objects,
        "hom": {f"{a},{b}": k for (a, b), k in c.hom.items()},
        "comp": [[*key, v] for key, v in c.comp.items()],
    }
    if hasattr(c, "ids"):
        out["id"] = list(c.ids)
    return out


def cat_from_dict(data: dict, promote: bool = True) -> TransitiveGraph:
    """Read a composition table; with ``promote`` a lawful table with identities becomes a Precategory."""
    try:
        objects = int(data["objects"])
        hom = {}
        for key, k in data["hom"].items():
            a, b = key.split(",")
            hom[(int(a), int(b))] = int(k)
        comp = {}
        for row in data.get("comp", []):
            if len(row) != 6:
                raise InputError(f"composition row {row} needs 6 entries")
            comp[tuple(int(x) for x in row[:5])] = int(row[5])
        ids = data.get("id")
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"malformed category: {exc!r}") from exc
    try:
        if ids is None:
            return TransitiveGraph(objects, hom, comp)
        rtg = ReflexiveTransitiveGraph(objects, hom, comp, ids=tuple(ids))
    except PreconditionError as exc:
        raise InputError(str(exc)) from exc
    if promote:
        try:
            return Precategory.from_graph(rtg)
        except PreconditionError:
            return rtg
    return rtg


def deg_to_dict(d: DegeneracyStructure) -> dict:
    return d.to_dict()


def deg_from_dict(data: dict) -> DegeneracyStructure:
    try:
        return DegeneracyStructure.from_dict(data)
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed degeneracy structure: {exc!r}") from exc


def loads(text: str, source: str = "<input>") -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{source}: expected a JSON object at top level")
    return data


def read_json(path: str | Path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return loads(text, str(path))


_FLAT_LIST = re.compile(r"\[[^\[\]{}]*\]")
_FLAT_OBJECT = re.compile(r"\{[^{}\[\]]*(?:\[[^\[\]]*\][^{}\[\]]*)*\}")


def dumps(data: dict) -> str:
    """Indented JSON with innermost lists and objects kept on one line."""
    text = json.dumps(data, indent=2)
    for pattern in (_FLAT_LIST, _FLAT_OBJECT):
        text = pattern.sub(lambda m: json.dumps(json.loads(m.group(0))), text)
    return text + "\n"


def load_sst(path) -> SemiSimplicialSet:
    return sst_from_dict(read_json(path))


def load_category(path, promote: bool = True) -> TransitiveGraph:
    return cat_from_dict(read_json(path), promote)


def load_any(path):
    """Dispatch on the top-level keys: ``levels`` (set), ``objects`` (category) or ``s00``."""
    data = read_json(path)
    if "levels" in data:
        return sst_from_dict(data)
    if "objects" in data:
        return cat_from_dict(data)
    if "s00" in data:
        return deg_from_dict(data)
    raise InputError(f"{path}: not a semisimplicial set, category or degeneracy structure")
