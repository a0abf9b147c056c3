"""Translations between categorical presentations and semi-Segal sets.

The nerve places one 2-simplex over each commuting triangle and exactly one
filler over every compatible boundary at levels 3 and 4, so the Segal check
reads the same at every level.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .catstruct import (Precategory, ReflexiveTransitiveGraph, TransitiveGraph, check_associativity)
from .horns import (Horn, check_segal, enumerate_horns, enumerate_spines, fill_unique,
                    phi_inverse, spine_of)
from .report import CheckReport, PreconditionError, SegalViolation
from .sscore import SemiSimplicialSet, SimplexId, boundaries


def edge_ids(c: TransitiveGraph) -> dict[tuple[int, int, int], int]:
    """Edge id of each morphism (source, target, local id) in nerve(c)."""
    return {m: i for i, m in enumerate(c.morphisms())}


def nerve(c: TransitiveGraph, target_level: int = 2, check_laws: bool = True) -> SemiSimplicialSet:
    """Semisimplicial set of a transitive graph up to ``target_level``.

    Levels 3 and 4 need associativity; ``check_laws=False`` skips that check,
    which is how nerve-like sets of non-associative tables are built.
    """
    if not 1 <= target_level <= 4:
        raise PreconditionError(f"target level must be in 1..4, got {target_level}")
    if check_laws and target_level >= 3:
        assoc = getattr(c, "assoc", None) or check_associativity(c)
        if not assoc:
            raise PreconditionError("levels 3 and 4 need an associative composition",
                                    assoc.witness)
    ids = edge_ids(c)
    a1 = [(b, a) for a, b, _ in c.morphisms()]
    levels = [a1]
    if target_level >= 2:
        a2 = sorted(
            (ids[(b, cc, g)], ids[(a, cc, c.comp[(a, b, cc, g, f)])], ids[(a, b, f)])
            for a, b, cc, g, f in c.composable_pairs()
        )
        levels.append(a2)
    for k in range(3, target_level + 1):
        partial = SemiSimplicialSet(c.objects, levels, top_level=k)
        levels.append([bd.faces for bd in boundaries(partial, k)])
    return SemiSimplicialSet(c.objects, levels, top_level=target_level)


def local_ids(sst: SemiSimplicialSet) -> list[tuple[int, int, int]]:
    """(source, target, local id) of every edge; local ids follow edge id order."""
    seen: dict[tuple[int, int], int] = {}
    out = []
    for e in range(sst.count(1)):
        key = (sst.source(e), sst.target(e))
        m = seen.get(key, 0)
        seen[key] = m + 1
        out.append((key[0], key[1], m))
    return out


def extract_transitive_graph(sst: SemiSimplicialSet) -> TransitiveGraph:
    """Objects, morphisms and the composite read off the unique inner 2-horn fillers."""
    if sst.top_level < 2:
        raise PreconditionError("need at least level 2 to read off composition")
    loc = local_ids(sst)
    hom: dict[tuple[int, int], int] = {}
    for a, b, m in loc:
        hom[(a, b)] = max(hom.get((a, b), 0), m + 1)
    comp = {}
    for f in range(sst.count(1)):
        a, b, lf = loc[f]
        for g in sst.with_face(1, 1, b):
            _, cc, lg = loc[g]
            filler = fill_unique(sst, Horn(2, 1, (g, None, f)))
            comp[(a, b, cc, lg, lf)] = loc[filler.missing_face.index][2]
    return TransitiveGraph(sst.count(0), hom, comp)


def extract_category(sst: SemiSimplicialSet, d: "DegeneracyStructure | None" = None):
    """The richest presentation available: a Precategory when degeneracies are given."""
    tg = extract_transitive_graph(sst)
    if d is None:
        return tg
    ids, _ = identities_from_degeneracies(sst, d)
    return Precategory.from_graph(tg, ids)


def induced_isomorphism(a: SemiSimplicialSet, b: SemiSimplicialSet,
                        vertex_map: list[int], edge_map: list[int]) -> list[list[int]] | None:
    """Extend bijections on vertices and edges to a face-preserving bijection, if one exists.

    Each level is matched fiber by fiber; returns the level-wise maps or None.
    """
    if a.top_level != b.top_level:
        return None
    maps = [list(vertex_map), list(edge_map)]
    if sorted(vertex_map) != list(range(b.count(0))) or sorted(edge_map) != list(range(b.count(1))):
        return None
    if a.count(0) != b.count(0) or a.count(1) != b.count(1):
        return None
    for e in range(a.count(1)):
        if tuple(vertex_map[v] for v in a.faces_of(1, e)) != b.faces_of(1, edge_map[e]):
            return None
    for k in range(2, a.top_level + 1):
        if a.count(k) != b.count(k):
            return None
        prev = maps[k - 1]
        used: dict[tuple[int, ...], int] = {}
        level_map = []
        for s in range(a.count(k)):
            image_faces = tuple(prev[f] for f in a.faces_of(k, s))
            fib = b.fiber(k, image_faces)
            pos = used.get(image_faces, 0)
            if pos >= len(fib):
                return None
            used[image_faces] = pos + 1
            level_map.append(fib[pos])
        maps.append(level_map)
    return maps


def nerve_extract_isomorphism(sst: SemiSimplicialSet) -> list[list[int]] | None:
    """Level-wise isomorphism nerve(extract(sst)) -> sst, or None."""
    tg = extract_transitive_graph(sst)
    rebuilt = nerve(tg, sst.top_level, check_laws=False)
    ids = edge_ids(tg)
    edge_map_inv = [ids[m] for m in local_ids(sst)]   # sst edge -> rebuilt edge
    edge_map = [0] * len(edge_map_inv)
    for e, r in enumerate(edge_map_inv):
        edge_map[r] = e
    return induced_isomorphism(rebuilt, sst, list(range(sst.count(0))), edge_map)


def generalized_associator(sst: SemiSimplicialSet, h: Horn) -> SimplexId:
    """Face 023 of the unique filler of a 3-horn missing vertex 1.

    Cross-checked against the unique triangle over (x02, x23, x03) that the
    composites force.
    """
    if (h.level, h.missing) != (3, 1):
        raise PreconditionError(f"expected a horn of level 3 missing vertex 1, got {h}")
    x123, _, x013, x012 = h.faces
    x02 = sst.faces_of(2, x012)[1]
    x23 = sst.faces_of(2, x123)[0]
    x03 = sst.faces_of(2, x013)[1]
    forced = sst.fiber(2, (x23, x03, x02))
    filler = fill_unique(sst, h)
    if forced != [filler.missing_face.index]:
        raise SegalViolation(h, len(forced), "associator triangle disagrees with the horn filler")
    return filler.missing_face


def check_associativity_via_sst(sst: SemiSimplicialSet) -> CheckReport:
    """Level-3 Segal condition, reported next to associativity of the extracted table."""
    low = check_segal(sst, levels=[2])
    if not low:
        raise PreconditionError("level-2 Segal condition fails", low.witness)
    seg = check_segal(sst, levels=[3])
    assoc = check_associativity(extract_transitive_graph(sst))
    return CheckReport(seg.verdict, "associativity-via-sst", witness=seg.witness,
                       counts={"segal_level3": seg.verdict, "extracted_associativity": assoc.verdict,
                               "agree": seg.verdict == assoc.verdict, **seg.counts},
                       law="3-horns missing vertex 1 fill uniquely iff composition associates")


def check_pentagon_level(sst: SemiSimplicialSet) -> CheckReport:
    """Level-4 Segal condition, with the staged spine inverse reproducing every 4-horn."""
    if sst.top_level < 4:
        raise PreconditionError("need a 4-restricted set")
    low = check_segal(sst, levels=[2, 3])
    if not low:
        raise PreconditionError("Segal condition fails below level 4", low.witness)
    seg = check_segal(sst, levels=[4])
    if not seg:
        return CheckReport(False, "pentagon-level", seg.witness, dict(seg.counts),
                           law="4-horns missing vertex 1 fill uniquely")
    horns = 0
    for h in enumerate_horns(sst, 4, 1):
        horns += 1
        rebuilt = phi_inverse(sst, spine_of(sst, h))
        if rebuilt != h:
            return CheckReport(False, "pentagon-level",
                               {"horn": h.to_dict(), "staged": rebuilt.to_dict()},
                               {"horns": horns}, law="staged spine inverse reproduces each 4-horn")
    spines = sum(1 for _ in enumerate_spines(sst, 4))
    ok = spines == horns
    return CheckReport(ok, "pentagon-level", None if ok else {"horns": horns, "spines": spines},
                       {"horns": horns, "spines": spines, **seg.counts},
                       law="4-horns missing vertex 1 fill uniquely")


# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class DegeneracyStructure:
    """Degeneracies up to level 3 given as simplex ids.

    ``s00[x]`` is an edge x -> x; ``s10[e]``, ``s11[e]`` are triangles per
    edge; ``s20[t]``, ``s21[t]``, ``s22[t]`` are tetrahedra per triangle.
    Missing maps are None.
    """

    s00: tuple[int, ...]
    s10: tuple[int, ...] | None = None
    s11: tuple[int, ...] | None = None
    s20: tuple[int, ...] | None = None
    s21: tuple[int, ...] | None = None
    s22: tuple[int, ...] | None = None

    @property
    def level(self) -> int:
        if self.s10 is None or self.s11 is None:
            return 1
        if None in (self.s20, self.s21, self.s22):
            return 2
        return 3

    def to_dict(self) -> dict:
        return {k: (list(v) if v is not None else None) for k, v in self.__dict__.items()}

    @classmethod
    def from_dict(cls, data: dict) -> "DegeneracyStructure":
        def get(k):
            v = data.get(k)
            return tuple(int(i) for i in v) if v is not None else None
        return cls(get("s00"), get("s10"), get("s11"), get("s20"), get("s21"), get("s22"))


def degeneracy_boundary(sst: SemiSimplicialSet, d: DegeneracyStructure, name: str,
                        x: int) -> tuple[int, ...]:
    """The face array forced on the degenerate simplex ``name(x)`` by the face/degeneracy identities.

    For an edge e: a -> b and a triangle t with faces (x12, x02, x01):

        s10(e) = (e, e, s00(a))          s11(e) = (s00(b), e, e)
        s20(t) = (t, t, s10(x02), s10(x01))
        s21(t) = (s10(x12), t, t, s11(x01))
        s22(t) = (s11(x12), s11(x02), t, t)
    """
    if name == "s00":
        return (x, x)
    if name in ("s10", "s11"):
        b, a = sst.faces_of(1, x)
        return (x, x, d.s00[a]) if name == "s10" else (d.s00[b], x, x)
    x12, x02, x01 = sst.faces_of(2, x)
    if name == "s20":
        return (x, x, d.s10[x02], d.s10[x01])
    if name == "s21":
        return (d.s10[x12], x, x, d.s11[x01])
    if name == "s22":
        return (d.s11[x12], d.s11[x02], x, x)
    raise ValueError(name)


_LEVEL_OF = {"s00": 0, "s10": 1, "s11": 1, "s20": 2, "s21": 2, "s22": 2}


def validate_degeneracies(sst: SemiSimplicialSet, d: DegeneracyStructure) -> CheckReport:
    present = [n for n in _LEVEL_OF if getattr(d, n) is not None]
    top = max(_LEVEL_OF[n] for n in present) + 1 if present else 0
    if top > sst.top_level - 1:
        return CheckReport(False, "degeneracies", {"reason": f"structure of level {top} needs "
                                                             f"top_level >= {top + 1}"},
                           law="degeneracy boundaries follow the simplicial identities")
    if d.s00 is None or ((d.s20 or d.s21 or d.s22) is not None and (d.s10 is None or d.s11 is None)):
        return CheckReport(False, "degeneracies", {"reason": "lower degeneracies missing"},
                           law="degeneracy boundaries follow the simplicial identities")
    checked = 0
    for name in present:
        lvl = _LEVEL_OF[name]
        table = getattr(d, name)
        if len(table) != sst.count(lvl):
            return CheckReport(False, "degeneracies",
                               {"map": name, "reason": f"{len(table)} entries for {sst.count(lvl)} simplices"},
                               law="degeneracy boundaries follow the simplicial identities")
        for x, s in enumerate(table):
            checked += 1
            if not 0 <= s < sst.count(lvl + 1):
                return CheckReport(False, "degeneracies", {"map": name, "simplex": x, "reason": "dangling id"},
                                   law="degeneracy boundaries follow the simplicial identities")
            want = degeneracy_boundary(sst, d, name, x)
            got = sst.faces_of(lvl + 1, s)
            if got != want:
                return CheckReport(False, "degeneracies",
                                   {"map": name, "simplex": x, "expected_faces": list(want),
                                    "actual_faces": list(got)},
                                   {"checked": checked},
                                   law="degeneracy boundaries follow the simplicial identities")
    return CheckReport(True, "degeneracies", counts={"checked": checked, "level": d.level},
                       law="degeneracy boundaries follow the simplicial identities")


def _unique_over(sst: SemiSimplicialSet, d: DegeneracyStructure, name: str, x: int) -> int:
    want = degeneracy_boundary(sst, d, name, x)
    fib = sst.fiber(_LEVEL_OF[name] + 1, want)
    if len(fib) != 1:
        raise PreconditionError(f"{name}({x}) has {len(fib)} candidate simplices, expected 1",
                                {"map": name, "simplex": x, "candidates": fib})
    return fib[0]


def degeneracies_from_identities(c: ReflexiveTransitiveGraph,
                                 sst: SemiSimplicialSet | None = None) -> DegeneracyStructure:
    """Degeneracies on nerve(c) from the identity table of a precategory.

    The structure has level ``min(sst.top_level - 1, 3)``; ``sst`` defaults
    to the level-4 nerve.
    """
    if not isinstance(c, Precategory):
        c = Precategory.from_graph(c)
    if sst is None:
        sst = nerve(c, 4)
    level = min(sst.top_level - 1, 3)
    if level < 1:
        raise PreconditionError("degeneracies need top_level >= 2")
    ids = edge_ids(c)
    d = DegeneracyStructure(tuple(ids[(x, x, c.ids[x])] for x in range(c.objects)))
    if level >= 2:
        s10 = tuple(_unique_over(sst, d, "s10", e) for e in range(sst.count(1)))
        s11 = tuple(_unique_over(sst, d, "s11", e) for e in range(sst.count(1)))
        d = DegeneracyStructure(d.s00, s10, s11)
    if level >= 3:
        n2 = range(sst.count(2))
        d = DegeneracyStructure(d.s00, d.s10, d.s11,
                                tuple(_unique_over(sst, d, "s20", t) for t in n2),
                                tuple(_unique_over(sst, d, "s21", t) for t in n2),
                                tuple(_unique_over(sst, d, "s22", t) for t in n2))
    return d


def identities_from_degeneracies(sst: SemiSimplicialSet,
                                 d: DegeneracyStructure) -> tuple[tuple[int, ...], CheckReport]:
    """Identity table Id_x = s00(x), plus unit-law certificates read off s10 and s11.

    A triangle s10(f) witnesses f∘Id = f and s11(f) witnesses Id∘f = f.
    """
    report = validate_degeneracies(sst, d)
    if not report:
        raise PreconditionError("invalid degeneracy structure", report.witness)
    loc = local_ids(sst)
    ids = tuple(loc[e][2] for e in d.s00)
    if d.level >= 2:
        units = CheckReport(True, "units-from-degeneracies",
                            counts={"right_unitors": len(d.s10), "left_unitors": len(d.s11)},
                            law="s10 gives f∘Id = f, s11 gives Id∘f = f")
    else:
        units = CheckReport(True, "units-from-degeneracies", law="identity edges only",
                            notes=["level-1 structure carries no unitors"])
    return ids, units


def derive_outer_degeneracies(sst: SemiSimplicialSet, d: DegeneracyStructure) -> DegeneracyStructure:
    """Complete s20 and s22 from s00, s10, s11, s21 as the unique fillers of their boundaries."""
    if sst.top_level < 4:
        raise PreconditionError("outer degeneracies are derived on 4-restricted sets")
    if d.s10 is None or d.s11 is None or d.s21 is None:
        raise PreconditionError("need s00, s10, s11 and s21")
    partial = DegeneracyStructure(d.s00, d.s10, d.s11, None, d.s21, None)
    report = validate_degeneracies(sst, partial)
    if not report:
        raise PreconditionError("partial degeneracy structure is invalid", report.witness)
    n2 = range(sst.count(2))
    s20 = tuple(_unique_over(sst, partial, "s20", t) for t in n2)
    s22 = tuple(_unique_over(sst, partial, "s22", t) for t in n2)
    return DegeneracyStructure(d.s00, d.s10, d.s11, s20, d.s21, s22)


def search_degeneracies(sst: SemiSimplicialSet, level: int | None = None,
                        limit: int | None = None) -> list[DegeneracyStructure]:
    """Every valid degeneracy structure of the given level, by exhaustive search."""
    if level is None:
        level = min(sst.top_level - 1, 3)
    if not 1 <= level <= sst.top_level - 1:
        raise PreconditionError(f"cannot search level-{level} degeneracies on top_level {sst.top_level}")
    loops = [sst.edges_between(x, x) for x in range(sst.count(0))]
    found: list[DegeneracyStructure] = []

    def candidates(d, name, n):
        return [sst.fiber(_LEVEL_OF[name] + 1, degeneracy_boundary(sst, d, name, x)) for x in range(n)]

    def options(d, names, n) -> Iterator[DegeneracyStructure]:
        tables = {}
        for name in names:
            cands = candidates(d, name, n)
            if any(not c for c in cands):
                return
            tables[name] = cands
        choices = [product(*tables[name]) for name in names]
        for combo in product(*choices):
            yield DegeneracyStructure(**{**d.__dict__, **dict(zip(names, combo))})

    for s00 in product(*loops):
        d1 = DegeneracyStructure(tuple(s00))
        if level == 1:
            found.append(d1)
        else:
            for d2 in options(d1, ["s10", "s11"], sst.count(1)):
                if level == 2:
                    found.append(d2)
                else:
                    found.extend(options(d2, ["s20", "s21", "s22"], sst.count(2)))
        if limit is not None and len(found) >= limit:
            return found[:limit]
    return found
