"""Deterministic generators for small categories, semicategories and refuters."""
from __future__ import annotations

import random
from itertools import product

from .catstruct import Precategory, ReflexiveTransitiveGraph, TransitiveGraph
from .report import PreconditionError


def _preorder_category(n: int, rel: set[tuple[int, int]]) -> ReflexiveTransitiveGraph:
    hom = {(a, b): 1 for a, b in rel}
    comp = {(a, b, c, 0, 0): 0 for (a, b) in rel for (b2, c) in rel if b2 == b}
    return ReflexiveTransitiveGraph(n, hom, comp, ids=(0,) * n)


def _closure(n: int, rel: set[tuple[int, int]]) -> set[tuple[int, int]]:
    rel = set(rel) | {(x, x) for x in range(n)}
    for k in range(n):
        for i in range(n):
            if (i, k) in rel:
                for j in range(n):
                    if (k, j) in rel:
                        rel.add((i, j))
    return rel


def chain_poset(n: int) -> Precategory:
    """0 <= 1 <= ... <= n-1."""
    if n < 1:
        raise PreconditionError("a chain needs at least one object")
    return Precategory.from_graph(_preorder_category(n, {(a, b) for a in range(n) for b in range(a, n)}))


def terminal() -> Precategory:
    return chain_poset(1)


def discrete(n: int) -> Precategory:
    return Precategory.from_graph(_preorder_category(n, set(_closure(n, set()))))


def random_preorder(n: int, density: float, rng: random.Random, antisymmetric: bool = True):
    order = list(range(n))
    rng.shuffle(order)
    rel = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rel.add((order[i], order[j]))
            elif not antisymmetric and rng.random() < density / 2:
                rel.add((order[j], order[i]))
    return _closure(n, rel)


def random_poset(n: int, density: float = 0.3, seed: int = 0) -> Precategory:
    if not 0 <= density <= 1 or n < 1:
        raise PreconditionError("need n >= 1 and 0 <= density <= 1")
    rng = random.Random(seed)
    return Precategory.from_graph(_preorder_category(n, random_preorder(n, density, rng)))


def codiscrete(n: int = 2) -> Precategory:
    """Every pair of objects uniquely isomorphic: the smallest non-antisymmetric preorder."""
    return Precategory.from_graph(_preorder_category(n, {(a, b) for a in range(n) for b in range(n)}))


def preorder_cycle() -> Precategory:
    """0 and 1 isomorphic, both below 2: a preorder that is not antisymmetric."""
    return Precategory.from_graph(_preorder_category(3, _closure(3, {(0, 1), (1, 0), (1, 2)})))


def walking_iso() -> Precategory:
    return codiscrete(2)


def monoid_delooping(table: list[list[int]], unit: int | None = None) -> TransitiveGraph:
    """One object whose endomorphisms compose by ``table[g][f]`` (g after f).

    Returns a Precategory when a unit exists (found automatically if not
    given) and the table associates, else a bare TransitiveGraph.
    """
    k = len(table)
    if k == 0 or any(len(row) != k for row in table):
        raise PreconditionError("multiplication table must be square and non-empty")
    comp = {(0, 0, 0, g, f): int(table[g][f]) for g in range(k) for f in range(k)}
    tg = TransitiveGraph(1, {(0, 0): k}, comp)
    if unit is None:
        units = [u for u in range(k) if all(table[u][x] == x and table[x][u] == x for x in range(k))]
        unit = units[0] if units else None
    if unit is None:
        return tg
    try:
        return Precategory.from_graph(tg, (unit,))
    except PreconditionError:
        return ReflexiveTransitiveGraph(1, tg.hom, tg.comp, ids=(unit,))


GROUPS = {"v4": [[a ^ b for b in range(4)] for a in range(4)]}


def group_delooping(name_or_table) -> Precategory:
    """``"z<n>"`` for the cyclic group of order n, ``"v4"`` for the Klein group, or a table."""
    if isinstance(name_or_table, str):
        name = name_or_table.lower()
        if name in GROUPS:
            table = GROUPS[name]
        elif name.startswith("z") and name[1:].isdigit() and int(name[1:]) >= 1:
            k = int(name[1:])
            table = [[(a + b) % k for b in range(k)] for a in range(k)]
        else:
            raise PreconditionError(f"unknown group {name_or_table!r}")
    else:
        table = name_or_table
    c = monoid_delooping(table)
    if not isinstance(c, Precategory):
        raise PreconditionError("table is not a monoid")
    for g in range(len(table)):
        if not any(table[g][h] == c.ids[0] for h in range(len(table))):
            raise PreconditionError(f"element {g} has no inverse")
    return c


def _monoid(kind: str, k: int) -> list[list[int]]:
    if kind == "cyclic":
        return [[(a + b) % k for b in range(k)] for a in range(k)]
    if kind == "max":
        return [[max(a, b) for b in range(k)] for a in range(k)]
    if kind == "truncated":
        return [[min(a + b, k - 1) for b in range(k)] for a in range(k)]
    raise ValueError(kind)


MONOIDS = ("cyclic", "max", "truncated")


def random_category(n: int, k: int = 2, seed: int = 0, density: float | None = None,
                    antisymmetric: bool | None = None, monoid: str | None = None) -> Precategory:
    """A random preorder with a k-element commutative monoid on every non-empty hom.

    Composition multiplies monoid elements, so associativity and the unit
    laws are inherited from the monoid.  Cyclic monoids with k > 1 give
    non-trivial automorphisms; ``max`` and ``truncated`` only have the unit
    invertible, so they give gaunt categories exactly when the preorder is
    antisymmetric.
    """
    if n < 1 or k < 1:
        raise PreconditionError("need n >= 1 objects and k >= 1 morphisms per hom")
    rng = random.Random(seed)
    if density is None:
        density = min(1.0, 1.5 / n)
    if antisymmetric is None:
        antisymmetric = rng.random() < 0.7
    kind = monoid or rng.choice(MONOIDS)
    table = _monoid(kind, k)
    rel = random_preorder(n, density, rng, antisymmetric)
    hom = {(a, b): k for a, b in rel}
    comp = {}
    for (a, b), (b2, c) in product(sorted(rel), sorted(rel)):
        if b2 != b:
            continue
        for g, f in product(range(k), range(k)):
            comp[(a, b, c, g, f)] = table[g][f]
    return Precategory.from_graph(ReflexiveTransitiveGraph(n, hom, comp, ids=(0,) * n))


_SEMIGROUPS = {
    "null": lambda a, b, k: 0,
    "left-zero": lambda a, b, k: a,
    "right-zero": lambda a, b, k: b,
    "max": lambda a, b, k: max(a, b),
    "cyclic": lambda a, b, k: (a + b) % k,
}


def random_semicategory(n: int, k: int = 2, seed: int = 0, density: float | None = None) -> TransitiveGraph:
    """Random preorder shape with an associative, usually unit-less, semigroup on each hom.

    The diagonal relation is not forced, so objects may have empty
    endomorphism sets.
    """
    rng = random.Random(seed)
    if density is None:
        density = min(1.0, 1.5 / n)
    order = list(range(n))
    rng.shuffle(order)
    rel = {(x, x) for x in range(n) if rng.random() < 0.5}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rel.add((order[i], order[j]))
    # transitive closure without adding reflexive pairs
    changed = True
    while changed:
        changed = False
        for (a, b), (b2, c) in list(product(rel, rel)):
            if b == b2 and (a, c) not in rel:
                rel.add((a, c))
                changed = True
    mul = _SEMIGROUPS[rng.choice(sorted(_SEMIGROUPS))]
    hom = {(a, b): k for a, b in rel}
    comp = {}
    for (a, b), (b2, c) in product(sorted(rel), sorted(rel)):
        if b2 == b:
            for g, f in product(range(k), range(k)):
                comp[(a, b, c, g, f)] = mul(g, f, k)
    return TransitiveGraph(n, hom, comp)


def random_transitive_graph(n: int, seed: int = 0, max_hom: int = 2,
                            density: float = 0.5) -> TransitiveGraph:
    """Arbitrary (not necessarily associative) composition on a random transitive shape."""
    rng = random.Random(seed)
    rel = set()
    for a in range(n):
        for b in range(n):
            if rng.random() < density:
                rel.add((a, b))
    changed = True
    while changed:
        changed = False
        for (a, b), (b2, c) in list(product(rel, rel)):
            if b == b2 and (a, c) not in rel:
                rel.add((a, c))
                changed = True
    hom = {p: rng.randint(1, max_hom) for p in sorted(rel)}
    comp = {}
    for (a, b), (b2, c) in product(sorted(rel), sorted(rel)):
        if b2 == b:
            for g, f in product(range(hom[(b, c)]), range(hom[(a, b)])):
                comp[(a, b, c, g, f)] = rng.randrange(hom[(a, c)])
    return TransitiveGraph(n, hom, comp)


def nonassociative_magma() -> TransitiveGraph:
    """One object, two endomorphisms, no unit: (1∘0)∘0 = 1 but 1∘(0∘0) = 0."""
    table = [[1, 0], [0, 0]]   # g∘f = table[g][f]
    return monoid_delooping(table)


def standard_corpus() -> dict[str, Precategory]:
    """Named small categories used in sweeps: posets, deloopings and refuters."""
    out = {
        "terminal": terminal(),
        "chain2": chain_poset(2),
        "chain3": chain_poset(3),
        "discrete2": discrete(2),
        "walking-iso": walking_iso(),
        "codiscrete3": codiscrete(3),
        "preorder-cycle": preorder_cycle(),
        "z2": group_delooping("z2"),
        "z3": group_delooping("z3"),
        "max2": monoid_delooping(_monoid("max", 2)),
        "trunc3": monoid_delooping(_monoid("truncated", 3)),
    }
    for seed in range(4):
        out[f"random-poset-{seed}"] = random_poset(4, 0.4, seed)
        out[f"random-category-{seed}"] = random_category(3, 2, seed)
    return out


GENERATORS = {
    "chain-poset": chain_poset,
    "random-poset": random_poset,
    "group-delooping": group_delooping,
    "walking-iso": walking_iso,
    "random-category": random_category,
    "terminal": terminal,
    "codiscrete": codiscrete,
}
