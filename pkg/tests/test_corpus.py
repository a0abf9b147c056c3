import pytest

from segalkit import corpus
from segalkit.catstruct import Precategory, check_associativity, check_units
from segalkit.interchange import cat_to_dict
from segalkit.report import PreconditionError

from conftest import composable_chains


@pytest.mark.parametrize("seed", range(20))
def test_random_category_is_lawful_and_deterministic(seed):
    c = corpus.random_category(5, 2, seed)
    assert isinstance(c, Precategory)
    assert check_associativity(c).verdict and check_units(c).verdict
    assert cat_to_dict(c) == cat_to_dict(corpus.random_category(5, 2, seed))


@pytest.mark.parametrize("seed", range(20))
def test_random_semicategory_associates(seed):
    assert check_associativity(corpus.random_semicategory(4, 2, seed)).verdict


def test_chain_counts():
    c = corpus.chain_poset(3)
    assert [composable_chains(c, k) for k in range(5)] == [3, 6, 10, 15, 21]


def test_group_names():
    assert corpus.group_delooping("v4").hom == {(0, 0): 4}
    with pytest.raises(PreconditionError):
        corpus.group_delooping("q8")
    with pytest.raises(PreconditionError):
        corpus.group_delooping([[0, 0], [0, 1]])   # a monoid, but 0 has no inverse


def test_bad_parameters():
    with pytest.raises(PreconditionError):
        corpus.chain_poset(0)
    with pytest.raises(PreconditionError):
        corpus.random_poset(3, 1.5)
    with pytest.raises(PreconditionError):
        corpus.random_category(0, 2)


def test_magma_has_no_unit():
    m = corpus.nonassociative_magma()
    assert not hasattr(m, "ids")
    assert not check_associativity(m).verdict
