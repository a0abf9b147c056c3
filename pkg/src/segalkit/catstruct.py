"""Explicit categorical presentations with composition and identity tables.

Morphisms are numbered locally in each hom set: ``hom[(a, b)] = k`` means
hom(a, b) = {0, ..., k-1}.  Composition is a table keyed ``(a, b, c, g, f)``
for ``g: b -> c`` and ``f: a -> b``.

In a finite model every equality proof is unique, so the associator, the
pentagonator, the unitors and the identity triangles are checked properties
stored as CheckReports rather than data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .report import CheckReport, PreconditionError

CompKey = tuple[int, int, int, int, int]


@dataclass(frozen=True, eq=False)
class Graph:
    objects: int
    hom: dict[tuple[int, int], int]

    def __post_init__(self):
        clean = {(int(a), int(b)): int(k) for (a, b), k in self.hom.items() if k}
        for (a, b), k in clean.items():
            if not (0 <= a < self.objects and 0 <= b < self.objects) or k < 0:
                raise PreconditionError(f"bad hom entry {(a, b)}: {k}")
        object.__setattr__(self, "hom", dict(sorted(clean.items())))

    def hom_size(self, a: int, b: int) -> int:
        return self.hom.get((a, b), 0)

    def morphisms(self) -> Iterator[tuple[int, int, int]]:
        """(source, target, local id), lexicographically."""
        for (a, b), k in self.hom.items():
            for m in range(k):
                yield a, b, m

    def composable_pairs(self) -> Iterator[tuple[int, int, int, int, int]]:
        """(a, b, c, g, f) with f: a -> b, g: b -> c."""
        for a in range(self.objects):
            for b in range(self.objects):
                nf = self.hom_size(a, b)
                if not nf:
                    continue
                for c in range(self.objects):
                    ng = self.hom_size(b, c)
                    for f in range(nf):
                        for g in range(ng):
                            yield a, b, c, g, f

    def same_graph(self, other: "Graph") -> bool:
        return self.objects == other.objects and self.hom == other.hom


@dataclass(frozen=True, eq=False)
class TransitiveGraph(Graph):
    comp: dict[CompKey, int] = field(default_factory=dict)

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "comp", {tuple(int(x) for x in k): int(v)
                                          for k, v in sorted(self.comp.items())})
        report = check_well_formed(self)
        if not report:
            raise PreconditionError("composition table is not total", report.witness)

    def compose(self, a: int, b: int, c: int, g: int, f: int) -> int:
        return self.comp[(a, b, c, g, f)]

    def same_tables(self, other: "TransitiveGraph") -> bool:
        return self.same_graph(other) and self.comp == other.comp


@dataclass(frozen=True, eq=False)
class WildSemicategory(TransitiveGraph):
    """A transitive graph whose associativity has been verified.

    ``pentagon`` is derived: once associativity holds on a set, the pentagon
    of associativity proofs commutes trivially.
    """

    assoc: CheckReport | None = None
    pentagon: CheckReport | None = None

    @classmethod
    def from_graph(cls, tg: TransitiveGraph) -> "WildSemicategory":
        report = check_associativity(tg)
        if not report:
            raise PreconditionError("composition is not associative", report.witness)
        pent = CheckReport(True, "pentagon", law="coherence of the associator",
                           notes=["derived: equalities between morphisms in a set are unique"])
        return cls(tg.objects, tg.hom, tg.comp, assoc=report, pentagon=pent)


@dataclass(frozen=True, eq=False)
class ReflexiveTransitiveGraph(TransitiveGraph):
    ids: tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "ids", tuple(int(i) for i in self.ids))
        if len(self.ids) != self.objects:
            raise PreconditionError(f"identity table has {len(self.ids)} entries for "
                                    f"{self.objects} objects")
        for x, i in enumerate(self.ids):
            if not 0 <= i < self.hom_size(x, x):
                raise PreconditionError(f"identity of object {x} is not in hom({x},{x})", x)

    def same_tables(self, other) -> bool:
        ids_other = getattr(other, "ids", None)
        return super().same_tables(other) and self.ids == ids_other


@dataclass(frozen=True, eq=False)
class Precategory(ReflexiveTransitiveGraph):
    assoc: CheckReport | None = None
    units: CheckReport | None = None
    triangles: CheckReport | None = None

    @classmethod
    def from_graph(cls, rtg: TransitiveGraph, ids=None) -> "Precategory":
        ids = tuple(getattr(rtg, "ids", ()) if ids is None else ids)
        cand = ReflexiveTransitiveGraph(rtg.objects, rtg.hom, rtg.comp, ids=ids)
        assoc = check_associativity(cand)
        if not assoc:
            raise PreconditionError("composition is not associative", assoc.witness)
        units = check_units(cand)
        if not units:
            raise PreconditionError("identity laws fail", units.witness)
        pc = cls(rtg.objects, rtg.hom, rtg.comp, ids=ids, assoc=assoc, units=units)
        object.__setattr__(pc, "triangles", check_triangle_coherences(pc))
        return pc


@dataclass(frozen=True, eq=False)
class Poset(ReflexiveTransitiveGraph):
    prop: CheckReport | None = None
    univalence: CheckReport | None = None

    @classmethod
    def from_graph(cls, rtg: TransitiveGraph, ids=None) -> "Poset":
        ids = tuple(getattr(rtg, "ids", ()) if ids is None else ids)
        cand = ReflexiveTransitiveGraph(rtg.objects, rtg.hom, rtg.comp, ids=ids)
        prop = check_prop_homs(cand)
        if not prop:
            raise PreconditionError("some hom set has more than one element", prop.witness)
        pc = embed_truncated(cand)
        uni = check_gaunt(pc)
        if not uni:
            raise PreconditionError("distinct objects are isomorphic", uni.witness)
        return cls(rtg.objects, rtg.hom, rtg.comp, ids=ids, prop=prop, univalence=uni)


# ---------------------------------------------------------------------------
def check_well_formed(tg: TransitiveGraph) -> CheckReport:
    for a, b, c, g, f in tg.composable_pairs():
        r = tg.comp.get((a, b, c, g, f))
        if r is None or not 0 <= r < tg.hom_size(a, c):
            return CheckReport(False, "well-formed", witness={"a": a, "b": b, "c": c, "g": g, "f": f},
                               law="composition is total")
    extra = [k for k in tg.comp if not (tg.hom_size(k[0], k[1]) > k[4] and tg.hom_size(k[1], k[2]) > k[3])]
    if extra:
        return CheckReport(False, "well-formed", witness={"unexpected_entry": list(extra[0])},
                           law="composition is total")
    return CheckReport(True, "well-formed", law="composition is total")


def check_associativity(tg: TransitiveGraph) -> CheckReport:
    """h(gf) = (hg)f for every composable triple; witness is the first failure."""
    n = tg.objects
    checked = 0
    for a, b, c, g, f in tg.composable_pairs():
        gf = tg.comp[(a, b, c, g, f)]
        for d in range(n):
            for h in range(tg.hom_size(c, d)):
                checked += 1
                left = tg.comp[(a, c, d, h, gf)]
                right = tg.comp[(a, b, d, tg.comp[(b, c, d, h, g)], f)]
                if left != right:
                    return CheckReport(False, "associativity",
                                       witness={"objects": [a, b, c, d], "f": f, "g": g, "h": h,
                                                "h(gf)": left, "(hg)f": right},
                                       counts={"triples_checked": checked},
                                       law="associator h(gf) = (hg)f")
    return CheckReport(True, "associativity", counts={"triples_checked": checked},
                       law="associator h(gf) = (hg)f")


def check_units(pc: ReflexiveTransitiveGraph) -> CheckReport:
    """Left unitor Id∘f = f and right unitor f∘Id = f."""
    checked = 0
    for a, b, f in pc.morphisms():
        checked += 1
        left = pc.comp[(a, b, b, pc.ids[b], f)]
        if left != f:
            return CheckReport(False, "units", witness={"law": "left", "source": a, "target": b, "f": f,
                                                        "Id.f": left},
                               counts={"morphisms_checked": checked}, law="Id∘f = f and f∘Id = f")
        right = pc.comp[(a, a, b, f, pc.ids[a])]
        if right != f:
            return CheckReport(False, "units", witness={"law": "right", "source": a, "target": b, "f": f,
                                                        "f.Id": right},
                               counts={"morphisms_checked": checked}, law="Id∘f = f and f∘Id = f")
    return CheckReport(True, "units", counts={"morphisms_checked": checked},
                       law="Id∘f = f and f∘Id = f")


def check_triangle_coherences(pc: ReflexiveTransitiveGraph) -> CheckReport:
    """The three identity triangles relating unitors and associator.

    They hold automatically once associativity and the unit laws hold,
    because parallel equalities between elements of a set coincide.
    """
    assoc = getattr(pc, "assoc", None) or check_associativity(pc)
    units = getattr(pc, "units", None) or check_units(pc)
    if not (assoc and units):
        raise PreconditionError("identity triangles need associativity and unit laws first",
                                assoc.witness or units.witness)
    notes = [
        f"t{i}: derived, equalities in hom sets are unique" for i in (0, 1, 2)
    ]
    return CheckReport(True, "identity-triangles", law="unitor/associator triangles t0, t1, t2",
                       notes=notes)


def check_prop_homs(c: Graph) -> CheckReport:
    for (a, b), k in c.hom.items():
        if k > 1:
            return CheckReport(False, "prop-homs", witness={"source": a, "target": b, "size": k},
                               law="each hom set has at most one element")
    return CheckReport(True, "prop-homs", law="each hom set has at most one element")


def left_inverses(c: ReflexiveTransitiveGraph, a: int, b: int, f: int) -> list[int]:
    return [g for g in range(c.hom_size(b, a)) if c.comp[(a, b, a, g, f)] == c.ids[a]]


def right_inverses(c: ReflexiveTransitiveGraph, a: int, b: int, f: int) -> list[int]:
    return [g for g in range(c.hom_size(b, a)) if c.comp[(b, a, b, f, g)] == c.ids[b]]


def is_iso_direct(c: ReflexiveTransitiveGraph, a: int, b: int, f: int) -> bool:
    """f has a left inverse and a right inverse."""
    return bool(left_inverses(c, a, b, f)) and bool(right_inverses(c, a, b, f))


def isomorphisms(c: ReflexiveTransitiveGraph) -> list[tuple[int, int, int]]:
    return [(a, b, f) for a, b, f in c.morphisms() if is_iso_direct(c, a, b, f)]


def check_gaunt(c: ReflexiveTransitiveGraph) -> CheckReport:
    """For all x, y the number of isomorphisms x -> y is 1 if x == y, else 0."""
    counts: dict[tuple[int, int], list[int]] = {}
    for a, b, f in isomorphisms(c):
        counts.setdefault((a, b), []).append(f)
    for a in range(c.objects):
        for b in range(c.objects):
            isos = counts.get((a, b), [])
            want = 1 if a == b else 0
            if len(isos) != want:
                return CheckReport(False, "gaunt",
                                   witness={"source": a, "target": b, "isomorphisms": isos},
                                   counts={"isomorphisms": sum(map(len, counts.values()))},
                                   law="idtoiso is an equivalence")
    return CheckReport(True, "gaunt", counts={"isomorphisms": sum(map(len, counts.values()))},
                       law="idtoiso is an equivalence")


def embed_truncated(p: ReflexiveTransitiveGraph) -> Precategory:
    """View a preorder (hom sets of size <= 1) as a precategory."""
    prop = check_prop_homs(p)
    if not prop:
        raise PreconditionError("not a preorder", prop.witness)
    return Precategory.from_graph(p)


def forget_to_reflexive(pc: ReflexiveTransitiveGraph) -> ReflexiveTransitiveGraph:
    return ReflexiveTransitiveGraph(pc.objects, pc.hom, pc.comp, ids=pc.ids)


def semicategory_of(c: TransitiveGraph) -> TransitiveGraph:
    """Drop identities (and certificates), keeping only the composition table."""
    return TransitiveGraph(c.objects, c.hom, c.comp)
