"""Neutral edges, isomorphisms, completeness, univalence and degeneracy synthesis."""
from __future__ import annotations

from dataclasses import dataclass, field

from .bridge import (DegeneracyStructure, derive_outer_degeneracies, extract_category,
                     local_ids, validate_degeneracies)
from .catstruct import TransitiveGraph, is_iso_direct
from .horns import (Horn, HornFiller, check_segal, derive_inner_horn_filling, fill_outer_horn_neutral,
                    fill_unique, horn_fillers)
from .report import CheckReport, PreconditionError, SegalViolation
from .sscore import SemiSimplicialSet, compatible

READINGS = ("figure", "text")


@dataclass
class NeutralityEvidence:
    """Every outer 2-horn the edge is critical for has a unique filler, recorded here."""

    edge: int
    reading: str = "figure"
    right: dict[int, HornFiller] = field(default_factory=dict)
    left: dict[int, HornFiller] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return True

    def to_dict(self) -> dict:
        return {"edge": self.edge, "neutral": True, "reading": self.reading,
                "right_horns": len(self.right), "left_horns": len(self.left)}


@dataclass
class NeutralityRefutation:
    """An outer 2-horn on the edge whose filler count is not 1."""

    edge: int
    side: str
    horn: Horn
    filler_count: int

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"edge": self.edge, "neutral": False, "side": self.side,
                "horn": self.horn.to_dict(), "filler_count": self.filler_count}


def is_neutral(sst: SemiSimplicialSet, e: int, reading: str = "figure"):
    """Decide whether the edge ``e`` is neutral.

    Right side: for every h with the same source, the horn missing vertex 0
    with u01 = e, u02 = h has one filler.  Left side: for every g with the
    same target, the horn missing vertex 2 with u12 = e, u02 = g has one
    filler.  ``reading="text"`` puts e at u02 and g at u12 on the left side
    instead.  Results are memoized on the set.
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    if sst.top_level < 2:
        raise PreconditionError("neutrality needs level 2")
    cache = sst.memo.setdefault(("neutral", reading), {})
    if e in cache:
        return cache[e]
    a, b = sst.source(e), sst.target(e)
    ev = NeutralityEvidence(e, reading)
    result = ev
    for h in sst.with_face(1, 1, a):
        horn = Horn(2, 0, (None, h, e))
        fl = horn_fillers(sst, horn)
        if len(fl) != 1:
            result = NeutralityRefutation(e, "right", horn, len(fl))
            break
        ev.right[h] = fl[0]
    if result:
        for g in sst.with_face(1, 0, b):
            horn = Horn(2, 2, (e, g, None)) if reading == "figure" else Horn(2, 2, (g, e, None))
            fl = horn_fillers(sst, horn)
            if len(fl) != 1:
                result = NeutralityRefutation(e, "left", horn, len(fl))
                break
            ev.left[g] = fl[0]
    cache[e] = result
    return result


def neutral_edges(sst: SemiSimplicialSet, reading: str = "figure") -> list[int]:
    return [e for e in range(sst.count(1)) if is_neutral(sst, e, reading)]


def neutral_via_composition_maps(c: TransitiveGraph, a: int, b: int, f: int) -> bool:
    """f: a -> b is neutral iff precomposition and postcomposition with f are bijections."""
    n = c.objects
    for z in range(n):
        if c.hom_size(b, z) != c.hom_size(a, z):
            return False
        image = {c.comp[(a, b, z, g, f)] for g in range(c.hom_size(b, z))}
        if len(image) != c.hom_size(a, z):
            return False
    for w in range(n):
        if c.hom_size(w, a) != c.hom_size(w, b):
            return False
        image = {c.comp[(w, a, b, f, k)] for k in range(c.hom_size(w, a))}
        if len(image) != c.hom_size(w, b):
            return False
    return True


def is_iso(sst: SemiSimplicialSet, d: DegeneracyStructure, e: int) -> bool:
    """e: x -> y is an isomorphism when both outer 2-horns built with identities fill uniquely.

    (None, s00(x), e) asks for an inverse on one side, (e, s00(y), None) on
    the other.
    """
    x, y = sst.source(e), sst.target(e)
    left = horn_fillers(sst, Horn(2, 0, (None, d.s00[x], e)))
    right = horn_fillers(sst, Horn(2, 2, (e, d.s00[y], None)))
    return len(left) == 1 and len(right) == 1


def isomorphism_counts(sst: SemiSimplicialSet, d: DegeneracyStructure) -> dict[tuple[int, int], list[int]]:
    out: dict[tuple[int, int], list[int]] = {}
    for e in range(sst.count(1)):
        if is_iso(sst, d, e):
            out.setdefault((sst.source(e), sst.target(e)), []).append(e)
    return out


def check_univalence(sst: SemiSimplicialSet, d: DegeneracyStructure) -> CheckReport:
    """#isomorphisms x -> y is 1 when x == y and 0 otherwise."""
    isos = isomorphism_counts(sst, d)
    total = sum(map(len, isos.values()))
    for x in range(sst.count(0)):
        for y in range(sst.count(0)):
            got = isos.get((x, y), [])
            if len(got) != (1 if x == y else 0):
                return CheckReport(False, "univalence", {"source": x, "target": y, "isomorphisms": got},
                                   {"isomorphisms": total}, law="each object is isomorphic only to itself, uniquely")
    return CheckReport(True, "univalence", counts={"isomorphisms": total},
                       law="each object is isomorphic only to itself, uniquely")


def check_completeness(sst: SemiSimplicialSet, reading: str = "figure") -> CheckReport:
    """Each vertex has exactly one neutral edge pointing into it."""
    neutral = neutral_edges(sst, reading)
    into: dict[int, list[int]] = {}
    for e in neutral:
        into.setdefault(sst.target(e), []).append(e)
    for x in range(sst.count(0)):
        got = into.get(x, [])
        if len(got) != 1:
            return CheckReport(False, "completeness", {"vertex": x, "neutral_in_edges": got},
                               {"neutral_edges": len(neutral)},
                               law="exactly one neutral edge into each vertex")
    return CheckReport(True, "completeness", counts={"neutral_edges": len(neutral)},
                       law="exactly one neutral edge into each vertex")


def completeness_iff_univalence(sst: SemiSimplicialSet, d: DegeneracyStructure) -> CheckReport:
    """Cross-check completeness against univalence, edge by edge.

    Per edge, horn-neutrality, the horn isomorphism test and the direct
    inverse test on the extracted category must agree; the two global
    verdicts must agree too.
    """
    comp = check_completeness(sst)
    uni = check_univalence(sst, d)
    cat = extract_category(sst, d)
    loc = local_ids(sst)
    for e in range(sst.count(1)):
        n = bool(is_neutral(sst, e))
        i = is_iso(sst, d, e)
        direct = is_iso_direct(cat, *loc[e])
        if not n == i == direct:
            return CheckReport(False, "completeness-iff-univalence",
                               {"edge": e, "neutral": n, "iso_by_horns": i, "iso_direct": direct},
                               law="neutral edges are exactly the isomorphisms")
    ok = comp.verdict == uni.verdict
    return CheckReport(ok, "completeness-iff-univalence",
                       None if ok else {"complete": comp.verdict, "univalent": uni.verdict},
                       {"complete": comp.verdict, "univalent": uni.verdict, "edges_checked": sst.count(1)},
                       law="neutral edges are exactly the isomorphisms")


def check_truncation(sst: SemiSimplicialSet, n: int) -> CheckReport:
    """n = 0: at most one edge between any ordered pair of vertices.  n = 1: always true."""
    if n == 1:
        return CheckReport(True, "truncation", law="hom sets are sets",
                           notes=["every finite hom is a set"])
    if n != 0:
        raise PreconditionError("truncation level must be 0 or 1")
    for (tgt, src), edges in sorted(sst._fibers[1].items()) if sst.top_level >= 1 else []:
        if len(edges) > 1:
            return CheckReport(False, "truncation", {"source": src, "target": tgt, "edges": edges},
                               law="at most one edge between two vertices")
    return CheckReport(True, "truncation", law="at most one edge between two vertices")


def is_complete_semi_segal(sst: SemiSimplicialSet, n: int) -> CheckReport:
    """Segal, complete and n-truncated on an (n+2)-restricted set.

    These are exactly the nerves of posets (n = 0) and gaunt categories (n = 1).
    """
    if sst.top_level != n + 2:
        raise PreconditionError(f"need an {n + 2}-restricted set, got top_level {sst.top_level}")
    seg = check_segal(sst)
    comp = check_completeness(sst) if seg else CheckReport(False, "completeness", {"skipped": "not Segal"})
    trunc = check_truncation(sst, n)
    ok = bool(seg and comp and trunc)
    witness = None
    if not ok:
        witness = {r.check_name: r.witness for r in (seg, comp, trunc) if not r}
    return CheckReport(ok, "complete-semi-segal", witness,
                       {"segal": seg.verdict, "complete": comp.verdict, "truncated": trunc.verdict},
                       law="complete truncated semi-Segal set")


# ---------------------------------------------------------------------------
def _assert_horn(sst: SemiSimplicialSet, h: Horn) -> Horn:
    if not compatible(sst, h.level, h.faces):
        raise PreconditionError(f"constructed horn {h} is not compatible", h.to_dict())
    return h


def synthesize_degeneracies(sst: SemiSimplicialSet, target_level: int = 3) -> DegeneracyStructure:
    """Build degeneracies of level ``target_level`` (1..3) from neutral edges alone.

    For each vertex y take the unique neutral edge e: w -> y.  The neutral
    horn (None, e, e) gives the identity loop at y.  Unitor triangles come
    from 3-horns assembled around e, and s21 from a 4-horn whose faces are
    those unitor tetrahedra and an inner 3-horn filling; s20 and s22 are the
    unique simplices over their boundaries.
    """
    if not 1 <= target_level <= 3:
        raise PreconditionError("target level must be 1, 2 or 3")
    if sst.top_level < target_level + 1:
        raise PreconditionError(f"level-{target_level} degeneracies need top_level >= {target_level + 1}")
    seg = check_segal(sst)
    if not seg:
        raise PreconditionError("Segal condition fails", seg.witness)
    comp = check_completeness(sst)
    if not comp:
        raise PreconditionError("set is not complete", comp.witness)

    neutral_into: dict[int, int] = {}
    for e in neutral_edges(sst):
        neutral_into[sst.target(e)] = e

    s00, S00 = [], []
    for y in range(sst.count(0)):
        e = neutral_into[y]
        f = fill_unique(sst, Horn(2, 0, (None, e, e)))
        s00.append(f.missing_face.index)
        S00.append(f.top_cell.index)
    d = DegeneracyStructure(tuple(s00))
    if target_level == 1:
        return _checked(sst, d)

    n1 = sst.count(1)
    p_tri, S10_tet, s10 = [0] * n1, [0] * n1, [0] * n1
    q_tri, S11_tet, s11 = [0] * n1, [0] * n1, [0] * n1
    for g in range(n1):
        # s10(g) for g: y -> z, via the composite p of e: w -> y then g
        y = sst.source(g)
        e = neutral_into[y]
        p = fill_unique(sst, Horn(2, 1, (g, None, e))).top_cell.index
        p_tri[g] = p
        f = fill_outer_horn_neutral(sst, _assert_horn(sst, Horn(3, 0, (None, p, p, S00[y]))))
        s10[g], S10_tet[g] = f.missing_face.index, f.top_cell.index
    for fe in range(n1):
        # s11(f) for f: x -> y, via the lift q of f through e: w -> y
        y = sst.target(fe)
        e = neutral_into[y]
        q = fill_unique(sst, Horn(2, 2, (e, fe, None))).top_cell.index
        q_tri[fe] = q
        f = fill_unique(sst, _assert_horn(sst, Horn(3, 1, (S00[y], None, q, q))))
        s11[fe], S11_tet[fe] = f.missing_face.index, f.top_cell.index
    d = DegeneracyStructure(d.s00, tuple(s10), tuple(s11))
    if target_level == 2:
        return _checked(sst, d)

    s21 = []
    for t in range(sst.count(2)):
        g, _, fe = sst.faces_of(2, t)
        inner = derive_inner_horn_filling(sst, _assert_horn(sst, Horn(3, 2, (p_tri[g], t, None, q_tri[fe]))))
        T = inner.top_cell.index
        h4 = _assert_horn(sst, Horn(4, 1, (S10_tet[g], None, T, T, S11_tet[fe])))
        s21.append(fill_unique(sst, h4).missing_face.index)
    d = derive_outer_degeneracies(sst, DegeneracyStructure(d.s00, d.s10, d.s11, None, tuple(s21), None))
    return _checked(sst, d)


def _checked(sst: SemiSimplicialSet, d: DegeneracyStructure) -> DegeneracyStructure:
    report = validate_degeneracies(sst, d)
    if not report:
        raise SegalViolation(None, 0, f"synthesized degeneracies are invalid: {report.witness}")
    return d
