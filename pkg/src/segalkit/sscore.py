"""Finite restricted semisimplicial sets.

A k-simplex (k >= 1) is stored as the tuple of its k+1 faces at level k-1,
where ``faces[i]`` is the face opposite vertex i.  Ids are dense per level.
"""
from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterator, NamedTuple, Sequence

from .report import CheckReport, StructuralError

MAX_LEVEL = 4


class SimplexId(NamedTuple):
    level: int
    index: int


class Boundary(NamedTuple):
    """A compatible (k+1)-tuple of (k-1)-simplices; the matching object of a k-simplex."""

    level: int
    faces: tuple[int, ...]


class SemiSimplicialSet:
    """Simplices of levels 0..top_level, immutable after construction.

    >>> s = SemiSimplicialSet(2, [[(1, 0)]])
    >>> s.count(1), s.faces_of(1, 0)
    (1, (1, 0))
    """

    def __init__(self, vertex_count: int, higher: Sequence[Sequence[Sequence[int]]] = (),
                 top_level: int | None = None):
        higher = [tuple(tuple(int(i) for i in f) for f in lvl) for lvl in higher]
        if top_level is None:
            top_level = len(higher)
        if not 0 <= top_level <= MAX_LEVEL:
            raise StructuralError(f"top_level must be in 0..{MAX_LEVEL}, got {top_level}")
        if len(higher) > top_level:
            raise StructuralError(f"{len(higher)} higher levels given for top_level {top_level}")
        if vertex_count < 0:
            raise StructuralError("negative vertex count")
        higher += [()] * (top_level - len(higher))
        self.top_level = top_level
        self.vertex_count = int(vertex_count)
        self._faces: tuple[tuple[tuple[int, ...], ...], ...] = ((),) + tuple(higher)
        self.memo: dict = {}

    # -- basic access -------------------------------------------------------
    def count(self, k: int) -> int:
        if k == 0:
            return self.vertex_count
        if 1 <= k <= self.top_level:
            return len(self._faces[k])
        return 0

    def faces_of(self, k: int, s: int) -> tuple[int, ...]:
        return self._faces[k][s]

    def face(self, k: int, s: int, i: int) -> int:
        return self._faces[k][s][i]

    def level(self, k: int) -> tuple[tuple[int, ...], ...]:
        return self._faces[k] if 1 <= k <= self.top_level else ()

    def source(self, e: int) -> int:
        return self._faces[1][e][1]

    def target(self, e: int) -> int:
        return self._faces[1][e][0]

    def edges_between(self, a: int, b: int) -> list[int]:
        return self.fiber(1, (b, a))

    def total_simplices(self) -> int:
        return sum(self.count(k) for k in range(self.top_level + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SemiSimplicialSet):
            return NotImplemented
        return (self.top_level, self.vertex_count, self._faces) == (
            other.top_level, other.vertex_count, other._faces)

    def __hash__(self) -> int:
        return hash((self.top_level, self.vertex_count, self._faces))

    def __repr__(self) -> str:
        counts = [self.count(k) for k in range(self.top_level + 1)]
        return f"SemiSimplicialSet(top_level={self.top_level}, counts={counts})"

    # -- indexes ------------------------------------------------------------
    @cached_property
    def _fibers(self) -> list[dict[tuple[int, ...], list[int]]]:
        out: list[dict[tuple[int, ...], list[int]]] = [{}]
        for k in range(1, self.top_level + 1):
            idx: dict[tuple[int, ...], list[int]] = {}
            for s, f in enumerate(self._faces[k]):
                idx.setdefault(f, []).append(s)
            out.append(idx)
        return out

    @cached_property
    def _by_face(self) -> list[dict[tuple[int, int], list[int]]]:
        out: list[dict[tuple[int, int], list[int]]] = [{}]
        for k in range(1, self.top_level + 1):
            idx: dict[tuple[int, int], list[int]] = {}
            for s, f in enumerate(self._faces[k]):
                for pos, v in enumerate(f):
                    idx.setdefault((pos, v), []).append(s)
            out.append(idx)
        return out

    def fiber(self, k: int, faces: Sequence[int]) -> list[int]:
        """Ids of the k-simplices whose face array is exactly ``faces``."""
        if not 1 <= k <= self.top_level:
            return []
        return list(self._fibers[k].get(tuple(faces), ()))

    def with_face(self, k: int, pos: int, value: int) -> list[int]:
        """Ids of the k-simplices whose face ``pos`` is ``value`` (sorted)."""
        if not 1 <= k <= self.top_level:
            return []
        return self._by_face[k].get((pos, value), [])

    # -- iterated faces -----------------------------------------------------
    def subsimplex(self, k: int, s: int, keep: Sequence[int]) -> int:
        """The sub-simplex of the k-simplex ``s`` spanned by the vertex positions ``keep``.

        ``keep`` is an increasing sequence of positions in 0..k.
        """
        keep = list(keep)
        drop = [p for p in range(k + 1) if p not in keep]
        level = k
        for p in reversed(drop):
            s = self._faces[level][s][p]
            level -= 1
        return s

    def vertices_of(self, k: int, s: int) -> tuple[int, ...]:
        if k == 0:
            return (s,)
        return tuple(self.subsimplex(k, s, [i]) for i in range(k + 1))


# ---------------------------------------------------------------------------
def compatible(sst: SemiSimplicialSet, k: int, faces: Sequence[int | None]) -> bool:
    """Pairwise compatibility of a (partial) face tuple for a k-simplex.

    Absent positions are ``None``; for k <= 1 every tuple is compatible.
    """
    if k < 2:
        return True
    lower = sst.level(k - 1)
    for j in range(1, k + 1):
        fj = faces[j]
        if fj is None:
            continue
        for i in range(j):
            fi = faces[i]
            if fi is not None and lower[fj][i] != lower[fi][j - 1]:
                return False
    return True


def first_incompatibility(sst: SemiSimplicialSet, k: int,
                          faces: Sequence[int | None]) -> tuple[int, int] | None:
    if k < 2:
        return None
    lower = sst.level(k - 1)
    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            fi, fj = faces[i], faces[j]
            if fi is not None and fj is not None and lower[fj][i] != lower[fi][j - 1]:
                return (i, j)
    return None


def compatible_tuples(sst: SemiSimplicialSet, k: int,
                      present: Sequence[int]) -> Iterator[tuple[int | None, ...]]:
    """All compatible assignments of (k-1)-simplices to the positions ``present``.

    Yields tuples of length k+1 with ``None`` at the absent positions, in
    lexicographic order of the present entries.
    """
    present = sorted(present)
    if not 1 <= k <= sst.top_level or not present:
        return
    n_lower = sst.count(k - 1)
    if k == 1:
        for combo in product(range(n_lower), repeat=len(present)):
            out: list[int | None] = [None, None]
            for p, v in zip(present, combo):
                out[p] = v
            yield tuple(out)
        return

    lower = sst.level(k - 1)
    anchor = present[0]
    rest = present[1:]
    cur: list[int | None] = [None] * (k + 1)

    def extend(idx: int) -> Iterator[tuple[int | None, ...]]:
        if idx == len(rest):
            yield tuple(cur)
            return
        j = rest[idx]
        fa = cur[anchor]
        # identity (anchor < j): d_anchor(faces[j]) == d_{j-1}(faces[anchor])
        for cand in sst.with_face(k - 1, anchor, lower[fa][j - 1]):
            ok = True
            for i in rest[:idx]:
                # i < j, both present
                if lower[cand][i] != lower[cur[i]][j - 1]:
                    ok = False
                    break
            if ok:
                cur[j] = cand
                yield from extend(idx + 1)
        cur[j] = None

    for first in range(n_lower):
        cur[anchor] = first
        yield from extend(0)
    cur[anchor] = None


# ---------------------------------------------------------------------------
def validate(sst: SemiSimplicialSet) -> CheckReport:
    """Check arity, face references and all identities d_i d_j = d_{j-1} d_i (i < j).

    Raises StructuralError on a dangling reference or wrong arity; identity
    violations are reported in the returned CheckReport.
    """
    for k in range(1, sst.top_level + 1):
        n_lower = sst.count(k - 1)
        for s, f in enumerate(sst.level(k)):
            if len(f) != k + 1:
                raise StructuralError(
                    f"simplex ({k},{s}) has {len(f)} faces, expected {k + 1}", (k, s))
            for i, v in enumerate(f):
                if not 0 <= v < n_lower:
                    raise StructuralError(
                        f"simplex ({k},{s}) face {i} references missing simplex ({k - 1},{v})",
                        (k, s))
    checked = 0
    for k in range(2, sst.top_level + 1):
        for s, f in enumerate(sst.level(k)):
            checked += 1
            bad = first_incompatibility(sst, k, f)
            if bad is not None:
                i, j = bad
                return CheckReport(
                    False, "validate",
                    witness={"simplex": [k, s], "i": i, "j": j},
                    counts={"simplices_checked": checked},
                    law="face identities d_i d_j = d_{j-1} d_i",
                )
    return CheckReport(True, "validate", counts={"simplices_checked": checked},
                       law="face identities d_i d_j = d_{j-1} d_i")


def boundaries(sst: SemiSimplicialSet, k: int) -> Iterator[Boundary]:
    """Every compatible (k+1)-tuple of (k-1)-simplices, lexicographically."""
    for faces in compatible_tuples(sst, k, range(k + 1)):
        yield Boundary(k, faces)  # type: ignore[arg-type]


def fillers_of(sst: SemiSimplicialSet, b: Boundary) -> list[SimplexId]:
    return [SimplexId(b.level, s) for s in sst.fiber(b.level, b.faces)]


def boundary_of(sst: SemiSimplicialSet, k: int, s: int) -> Boundary:
    return Boundary(k, sst.faces_of(k, s))
