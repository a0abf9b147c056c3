import pytest

from segalkit import corpus
from segalkit.bridge import nerve
from segalkit.report import StructuralError
from segalkit.sscore import (Boundary, SemiSimplicialSet, SimplexId, boundaries, boundary_of,
                             compatible, fillers_of, validate)

from conftest import CORPUS, brute_boundaries, raw_compatible


def test_chain3_nerve_is_valid(chain3):
    s = nerve(chain3, 4)
    report = validate(s)
    assert report.verdict
    # every higher simplex, checked independently
    for k in range(2, 5):
        for t in s.level(k):
            assert raw_compatible(s, k, t)


def test_single_vertex_is_valid():
    s = SemiSimplicialSet(1)
    assert validate(s).verdict
    assert s.top_level == 0
    assert list(boundaries(s, 1)) == []


def test_mismatched_triangle_faces_witness():
    # edges: 0: 0->1, 1: 1->2, 2: 0->2, 3: 2->2; with d0 = 3 the middle vertex is 2 for
    # face 0 but 1 for face 2, while the outer vertices agree
    s = SemiSimplicialSet(3, [[(1, 0), (2, 1), (2, 0), (2, 2)], [(3, 2, 0)]])
    report = validate(s)
    assert not report.verdict
    assert report.witness == {"simplex": [2, 0], "i": 0, "j": 2}


def test_dangling_face_is_structural_error():
    s = SemiSimplicialSet(2, [[(1, 0)], [(0, 0, 5)]])
    with pytest.raises(StructuralError) as err:
        validate(s)
    assert err.value.simplex == (2, 0)


def test_wrong_arity_is_structural_error():
    with pytest.raises(StructuralError):
        validate(SemiSimplicialSet(2, [[(1, 0, 0)]]))


def test_one_boundaries_are_all_vertex_pairs():
    s = SemiSimplicialSet(2, [[]])
    assert [b.faces for b in boundaries(s, 1)] == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_two_boundaries_empty_without_edges():
    s = SemiSimplicialSet(3, [[], []])
    assert list(boundaries(s, 2)) == []


SMALL = [(name, k) for name in sorted(CORPUS) for k in (1, 2, 3)
         if nerve(CORPUS[name], 3).count(k - 1) ** (k + 1) <= 200_000]


@pytest.mark.parametrize("name,k", SMALL)
def test_boundaries_match_brute_force(name, k):
    s = nerve(CORPUS[name], 3)
    got = [b.faces for b in boundaries(s, k)]
    assert got == brute_boundaries(s, k)          # same set, same lexicographic order
    assert len(got) == len(set(got))


def test_chain3_two_boundaries_count(chain3):
    s = nerve(chain3, 2)
    # composable edge triangles: every compatible (g, h, f) is a triple a<=b<=c
    # plus nothing else, because hom sets are singletons
    assert len(list(boundaries(s, 2))) == len(brute_boundaries(s, 2)) == 10


def test_boundaries_deterministic(z2):
    s = nerve(z2, 3)
    assert list(boundaries(s, 3)) == list(boundaries(s, 3))


def test_fillers_commuting_and_noncommuting(z2):
    s = nerve(z2, 2)
    # edges 0 = identity, 1 = g; g∘g = e commutes, g∘g = g does not
    assert fillers_of(s, Boundary(2, (1, 0, 1))) == [SimplexId(2, s.fiber(2, (1, 0, 1))[0])]
    assert fillers_of(s, Boundary(2, (1, 1, 1))) == []


def test_duplicate_filler_listed_twice():
    s = SemiSimplicialSet(2, [[(1, 0), (1, 1), (1, 0)], [(1, 2, 0), (1, 2, 0)]])
    assert len(fillers_of(s, boundary_of(s, 2, 0))) == 2


def test_every_simplex_boundary_is_compatible():
    for c in CORPUS.values():
        s = nerve(c, 3)
        for k in (2, 3):
            for t in s.level(k):
                assert compatible(s, k, t)


def test_subsimplex_and_vertices():
    s = nerve(corpus.chain_poset(4), 3)
    for t in range(s.count(3)):
        verts = s.vertices_of(3, t)
        assert list(verts) == sorted(verts)
        e = s.subsimplex(3, t, [1, 3])
        assert (s.source(e), s.target(e)) == (verts[1], verts[3])


def test_top_level_bounds():
    with pytest.raises(StructuralError):
        SemiSimplicialSet(1, top_level=5)
    with pytest.raises(StructuralError):
        SemiSimplicialSet(1, [[], []], top_level=1)
