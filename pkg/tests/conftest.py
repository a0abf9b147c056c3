"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the package's indexes and compatibility
helpers: they scan raw face tables and composition tables directly.
"""
from itertools import product

import pytest

from segalkit import corpus
from segalkit.bridge import nerve

CORPUS = corpus.standard_corpus()


def raw_compatible(sst, k, faces):
    """d_i(faces[j]) == d_{j-1}(faces[i]) for all i < j, read off the raw tables."""
    if k < 2:
        return True
    lower = [sst.faces_of(k - 1, f) for f in faces]
    return all(lower[j][i] == lower[i][j - 1] for j in range(k + 1) for i in range(j))


def brute_boundaries(sst, k):
    n = sst.count(k - 1)
    return [t for t in product(range(n), repeat=k + 1) if raw_compatible(sst, k, t)]


def brute_fillers(sst, horn):
    """(missing face, top cell) pairs found by scanning every top simplex."""
    out = []
    for s in range(sst.count(horn.level)):
        f = sst.faces_of(horn.level, s)
        if all(f[i] == horn.faces[i] for i in range(horn.level + 1) if i != horn.missing):
            out.append((f[horn.missing], s))
    return sorted(out)


def composable_chains(c, k):
    """Number of composable strings of k morphisms; the nerve has one k-simplex per string."""
    if k == 0:
        return c.objects
    total = 0

    def walk(obj, left):
        nonlocal total
        if left == 0:
            total += 1
            return
        for b in range(c.objects):
            for _ in range(c.hom_size(obj, b)):
                walk(b, left - 1)

    for a in range(c.objects):
        walk(a, k)
    return total


def brute_isos(c):
    """(a, b, f) with some g such that g∘f = id_a and f∘g = id_b."""
    out = []
    for a, b, f in c.morphisms():
        for g in range(c.hom_size(b, a)):
            if c.comp[(a, b, a, g, f)] == c.ids[a] and c.comp[(b, a, b, f, g)] == c.ids[b]:
                out.append((a, b, f))
                break
    return out


def is_antisymmetric(c):
    return all(not (c.hom_size(a, b) and c.hom_size(b, a))
               for a in range(c.objects) for b in range(c.objects) if a != b)


@pytest.fixture(scope="session")
def nerves4():
    return {name: nerve(c, 4) for name, c in CORPUS.items()}


@pytest.fixture
def chain3():
    return corpus.chain_poset(3)


@pytest.fixture
def z2():
    return corpus.group_delooping("z2")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
