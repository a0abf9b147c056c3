"""Horns, horn fillers, the Segal condition and spines."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .report import CheckReport, PreconditionError, SegalViolation
from .sscore import SemiSimplicialSet, SimplexId, compatible, compatible_tuples


@dataclass(frozen=True)
class Horn:
    """Faces of an n-simplex with the face opposite vertex ``missing`` left out."""

    level: int
    missing: int
    faces: tuple[int | None, ...]

    def __post_init__(self):
        if len(self.faces) != self.level + 1 or self.faces[self.missing] is not None:
            raise ValueError(f"malformed horn {self}")
        if any(f is None for i, f in enumerate(self.faces) if i != self.missing):
            raise ValueError(f"horn {self} has more than one absent face")

    @classmethod
    def of(cls, level: int, missing: int, **faces: int) -> "Horn":
        """``Horn.of(3, 1, d0=a, d2=b, d3=c)``"""
        arr: list[int | None] = [None] * (level + 1)
        for key, v in faces.items():
            arr[int(key[1:])] = v
        return cls(level, missing, tuple(arr))

    def completed(self, face: int) -> tuple[int, ...]:
        out = list(self.faces)
        out[self.missing] = face
        return tuple(out)  # type: ignore[return-value]

    @property
    def inner(self) -> bool:
        return 0 < self.missing < self.level

    def to_dict(self) -> dict:
        return {"level": self.level, "missing": self.missing, "faces": list(self.faces)}


class HornFiller(NamedTuple):
    missing_face: SimplexId
    top_cell: SimplexId


class Spine(NamedTuple):
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def worker_count() -> int:
    """Parallelism cap from SEGALKIT_THREADS; 0 or unset means auto."""
    raw = os.environ.get("SEGALKIT_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


# ---------------------------------------------------------------------------
def enumerate_horns(sst: SemiSimplicialSet, n: int, m: int) -> Iterator[Horn]:
    if not 2 <= n <= sst.top_level or not 0 <= m <= n:
        return
    present = [p for p in range(n + 1) if p != m]
    for faces in compatible_tuples(sst, n, present):
        yield Horn(n, m, faces)


def horn_fillers(sst: SemiSimplicialSet, h: Horn) -> list[HornFiller]:
    n, m = h.level, h.missing
    lower = sst.level(n - 1)
    anchor = 0 if m != 0 else 1
    fa = h.faces[anchor]
    if anchor < m:
        candidates = sst.with_face(n - 1, anchor, lower[fa][m - 1])
    else:
        # m == 0 < anchor == 1: d_0(faces[1]) == d_0(candidate)
        candidates = sst.with_face(n - 1, 0, lower[fa][0])
    out = []
    for cand in candidates:
        full = h.completed(cand)
        if not compatible(sst, n, full):
            continue
        for top in sst.fiber(n, full):
            out.append(HornFiller(SimplexId(n - 1, cand), SimplexId(n, top)))
    return out


def fill_unique(sst: SemiSimplicialSet, h: Horn) -> HornFiller:
    fillers = horn_fillers(sst, h)
    if len(fillers) != 1:
        raise SegalViolation(h, len(fillers))
    return fillers[0]


def _inner2(sst: SemiSimplicialSet, first: int, second: int) -> tuple[int, int]:
    """Unique filler of the inner 2-horn on edges ``first`` then ``second``.

    Returns (composite edge, triangle).
    """
    f = fill_unique(sst, Horn(2, 1, (second, None, first)))
    return f.missing_face.index, f.top_cell.index


def check_segal(sst: SemiSimplicialSet, exhaustive: bool = False,
                levels: Sequence[int] | None = None) -> CheckReport:
    """Every inner horn with missing vertex 1, at every level p >= 2, has exactly one filler."""
    if levels is None:
        levels = range(2, sst.top_level + 1)
    scanned = 0
    found = 0
    violations = 0
    witness = None
    for p in levels:
        horns = enumerate_horns(sst, p, 1)
        if exhaustive and worker_count() > 1:
            horns = list(horns)
            with ThreadPoolExecutor(max_workers=worker_count()) as pool:
                counts = list(pool.map(lambda h: len(horn_fillers(sst, h)), horns))
        else:
            counts = None
        for idx, h in enumerate(horns):
            c = counts[idx] if counts is not None else len(horn_fillers(sst, h))
            scanned += 1
            found += c
            if c != 1:
                violations += 1
                if witness is None:
                    witness = {"horn": h.to_dict(), "filler_count": c}
                if not exhaustive:
                    break
        if witness is not None and not exhaustive:
            break
    counts_out = {"horns_scanned": scanned, "fillers_found": found}
    if exhaustive:
        counts_out["violations"] = violations
    return CheckReport(witness is None, "segal", witness=witness, counts=counts_out,
                       law="contractible filling of inner horns missing vertex 1")


def check_all_inner_horns(sst: SemiSimplicialSet) -> CheckReport:
    """Brute force: every inner horn at every level has exactly one filler."""
    scanned = 0
    for n in range(2, sst.top_level + 1):
        for m in range(1, n):
            for h in enumerate_horns(sst, n, m):
                scanned += 1
                c = len(horn_fillers(sst, h))
                if c != 1:
                    return CheckReport(False, "inner-horns", {"horn": h.to_dict(), "filler_count": c},
                                       {"horns_scanned": scanned}, law="all inner horns fill uniquely")
    return CheckReport(True, "inner-horns", counts={"horns_scanned": scanned},
                       law="all inner horns fill uniquely")


# ---------------------------------------------------------------------------
def horn_subsimplex(sst: SemiSimplicialSet, h: Horn, keep: Sequence[int]) -> int:
    """Sub-simplex of a horn on vertex positions ``keep``, read off a present face."""
    keep = list(keep)
    for p in range(h.level + 1):
        if p in keep or p == h.missing:
            continue
        inner = [q - (q > p) for q in keep]
        return sst.subsimplex(h.level - 1, h.faces[p], inner)
    raise PreconditionError(f"positions {keep} are not covered by the horn {h}")


def spine_of(sst: SemiSimplicialSet, x: SimplexId | Horn) -> Spine:
    if isinstance(x, Horn):
        n = x.level
        verts = tuple(horn_subsimplex(sst, x, [i]) for i in range(n + 1))
        edges = tuple(horn_subsimplex(sst, x, [i, i + 1]) for i in range(n))
        return Spine(verts, edges)
    k, s = x
    if k == 0:
        return Spine((s,), ())
    verts = sst.vertices_of(k, s)
    edges = tuple(sst.subsimplex(k, s, [i, i + 1]) for i in range(k))
    return Spine(verts, edges)


def enumerate_spines(sst: SemiSimplicialSet, n: int) -> Iterator[Spine]:
    """All chains of n consecutive edges, lexicographic in the edge ids."""
    def extend(edges: list[int]) -> Iterator[Spine]:
        if len(edges) == n:
            verts = [sst.source(edges[0])] + [sst.target(e) for e in edges]
            yield Spine(tuple(verts), tuple(edges))
            return
        for e in sst.with_face(1, 1, sst.target(edges[-1])):
            edges.append(e)
            yield from extend(edges)
            edges.pop()

    if n == 0:
        for v in range(sst.count(0)):
            yield Spine((v,), ())
        return
    for e in range(sst.count(1)):
        yield from extend([e])


def phi_inverse(sst: SemiSimplicialSet, sp: Spine) -> Horn:
    """The unique horn missing vertex 1 whose spine is ``sp`` (2, 3 or 4 edges).

    Built by filling inner horns stage by stage; never searches over horns.
    """
    n = len(sp.edges)
    if n == 2:
        return Horn(2, 1, (sp.edges[1], None, sp.edges[0]))
    if n == 3:
        x01, x12, x23 = sp.edges
        _, x012 = _inner2(sst, x01, x12)
        x13, x123 = _inner2(sst, x12, x23)
        _, x013 = _inner2(sst, x01, x13)
        return Horn(3, 1, (x123, None, x013, x012))
    if n == 4:
        x01, x12, x23, x34 = sp.edges
        # tetrahedron 1234 first: its own spine, then the missing inner face
        x24, x234 = _inner2(sst, x23, x34)
        x13, x123 = _inner2(sst, x12, x23)
        x14, x124 = _inner2(sst, x12, x24)
        f = fill_unique(sst, Horn(3, 1, (x234, None, x124, x123)))
        x134, x1234 = f.missing_face.index, f.top_cell.index
        # then everything through vertex 0, triangles before tetrahedra
        _, x012 = _inner2(sst, x01, x12)
        _, x013 = _inner2(sst, x01, x13)
        _, x014 = _inner2(sst, x01, x14)
        x0123 = fill_unique(sst, Horn(3, 1, (x123, None, x013, x012))).top_cell.index
        x0134 = fill_unique(sst, Horn(3, 1, (x134, None, x014, x013))).top_cell.index
        x0124 = fill_unique(sst, Horn(3, 1, (x124, None, x014, x012))).top_cell.index
        return Horn(4, 1, (x1234, None, x0134, x0124, x0123))
    raise PreconditionError(f"phi_inverse needs a spine with 2..4 edges, got {n}")


def phi_inverse_by_search(sst: SemiSimplicialSet, sp: Spine) -> list[Horn]:
    """Oracle for phi_inverse: every horn missing vertex 1 with the given spine."""
    n = len(sp.edges)
    return [h for h in enumerate_horns(sst, n, 1) if spine_of(sst, h) == sp]


# ---------------------------------------------------------------------------
def derive_inner_horn_filling(sst: SemiSimplicialSet, h: Horn) -> HornFiller:
    """Fill a horn missing vertex 2 of a 3-simplex using only 1-horn fillers.

    Chain: the given pair (x03, x023) must be the filler of (x02, x23); fill
    (x01, x13) to get x013; then the horn missing vertex 1 with faces
    x123, x013, x012 yields the tetrahedron.
    """
    if (h.level, h.missing) != (3, 2):
        raise PreconditionError(f"expected a horn of level 3 missing vertex 2, got {h}")
    x123, x023, _, x012 = h.faces
    x12, x02, x01 = sst.faces_of(2, x012)
    x23, x13, _ = sst.faces_of(2, x123)
    _, check023 = _inner2(sst, x02, x23)
    if check023 != x023:
        raise SegalViolation(Horn(2, 1, (x23, None, x02)), 2,
                             "the horn's face 023 is not the unique composite filler")
    _, x013 = _inner2(sst, x01, x13)
    f = fill_unique(sst, Horn(3, 1, (x123, None, x013, x012)))
    if f.missing_face.index != x023:
        raise SegalViolation(h, 0, "filling the 1-horn did not reproduce face 023")
    result = HornFiller(SimplexId(2, x013), f.top_cell)
    direct = horn_fillers(sst, h)
    if direct != [result]:
        raise SegalViolation(h, len(direct), f"direct search found {direct}, derived {result}")
    return result


def fill_outer_horn_neutral(sst: SemiSimplicialSet, h: Horn, evidence=None) -> HornFiller:
    """Fill an outer 2- or 3-horn whose critical edge is neutral.

    The critical edge is x01 for a horn missing vertex 0 and x_{n-1,n} for a
    horn missing vertex n.  ``evidence`` may carry a precomputed neutrality
    result for that edge.
    """
    from .completeness import is_neutral

    n, m = h.level, h.missing
    if n not in (2, 3) or m not in (0, n):
        raise PreconditionError(f"expected an outer horn of level 2 or 3, got {h}")
    critical = horn_subsimplex(sst, h, [0, 1] if m == 0 else [n - 1, n])
    if evidence is None or getattr(evidence, "edge", None) != critical:
        evidence = is_neutral(sst, critical)
    if not evidence:
        raise PreconditionError(f"critical edge {critical} is not neutral", evidence)

    if n == 2:
        return fill_unique(sst, h)

    if m == 0:
        _, x023, x013, x012 = h.faces
        _, x02, x01 = sst.faces_of(2, x012)
        x23, x03, _ = sst.faces_of(2, x023)
        x12 = sst.faces_of(2, x012)[0]
        # neutral 2-horn on (x01, x03) must reproduce the given x013
        if fill_unique(sst, Horn(2, 0, (None, x03, x01))).top_cell.index != x013:
            raise SegalViolation(h, 0, "face 013 is not the neutral filler of (x01, x03)")
        _, x123 = _inner2(sst, x12, x23)
        f = derive_inner_horn_filling(sst, Horn(3, 2, (x123, x023, None, x012)))
        if f.missing_face.index != x013:
            raise SegalViolation(h, 0, "inner filling did not reproduce face 013")
        result = HornFiller(SimplexId(2, x123), f.top_cell)
    else:
        x123, x023, x013, _ = h.faces
        x23, x13, x12 = sst.faces_of(2, x123)
        x01 = sst.faces_of(2, x013)[2]
        x03 = sst.faces_of(2, x023)[1]
        if fill_unique(sst, Horn(2, 2, (x23, x03, None))).top_cell.index != x023:
            raise SegalViolation(h, 0, "face 023 is not the neutral filler of (x03, x23)")
        _, x012 = _inner2(sst, x01, x12)
        f = fill_unique(sst, Horn(3, 1, (x123, None, x013, x012)))
        if f.missing_face.index != x023:
            raise SegalViolation(h, 0, "inner filling did not reproduce face 023")
        result = HornFiller(SimplexId(2, x012), f.top_cell)

    direct = horn_fillers(sst, h)
    if direct != [result]:
        raise SegalViolation(h, len(direct), f"direct search found {direct}, derived {result}")
    return result
