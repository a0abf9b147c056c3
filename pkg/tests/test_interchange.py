import json

import pytest

from segalkit import corpus
from segalkit.bridge import degeneracies_from_identities, nerve
from segalkit.interchange import (InputError, cat_from_dict, cat_to_dict, deg_from_dict, deg_to_dict,
                                  dumps, loads, sst_from_dict, sst_to_dict)

from conftest import CORPUS


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_sst_roundtrip(name):
    s = nerve(CORPUS[name], 3)
    assert sst_from_dict(loads(dumps(sst_to_dict(s)))) == s


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_category_roundtrip(name):
    c = CORPUS[name]
    back = cat_from_dict(loads(dumps(cat_to_dict(c))))
    assert back.same_tables(c)
    assert type(back).__name__ == "Precategory"


def test_semicategory_has_no_id_key():
    d = cat_to_dict(corpus.random_semicategory(3, 2, 1))
    assert "id" not in d
    assert cat_from_dict(d).same_tables(corpus.random_semicategory(3, 2, 1))


def test_sst_format_shape(chain3):
    d = sst_to_dict(nerve(chain3, 2))
    assert d["top_level"] == 2
    assert d["levels"][0] == {"count": 3}
    assert d["levels"][1]["simplices"][0] == {"faces": [0, 0]}


def test_category_format_shape(z2):
    d = cat_to_dict(z2)
    assert d == {"objects": 1, "hom": {"0,0": 2},
                 "comp": [[0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 1], [0, 0, 0, 1, 0, 1], [0, 0, 0, 1, 1, 0]],
                 "id": [0]}


def test_degeneracy_roundtrip(z2):
    d = degeneracies_from_identities(z2, nerve(z2, 4))
    assert deg_from_dict(json.loads(dumps(deg_to_dict(d)))) == d


def test_malformed_json_reports_position():
    with pytest.raises(InputError) as err:
        loads('{"top_level": 1,\n  "levels": [}', "x.sst.json")
    assert "line 2" in str(err.value) and "column" in str(err.value)


@pytest.mark.parametrize("payload", [
    {"top_level": 1},
    {"top_level": 1, "levels": [{"count": 1}]},
    {"top_level": 1, "levels": [{"count": 1}, {"simplices": [{"face": [0, 0]}]}]},
])
def test_malformed_sst(payload):
    with pytest.raises(InputError):
        sst_from_dict(payload)


@pytest.mark.parametrize("payload", [
    {"hom": {}},
    {"objects": 1, "hom": {"0-0": 1}},
    {"objects": 1, "hom": {"0,0": 1}, "comp": [[0, 0, 0, 0, 0]]},
    {"objects": 1, "hom": {"0,0": 2}, "comp": [[0, 0, 0, 0, 0, 0]]},
])
def test_malformed_category(payload):
    with pytest.raises(InputError):
        cat_from_dict(payload)


def test_non_object_top_level():
    with pytest.raises(InputError):
        loads("[1, 2]")
