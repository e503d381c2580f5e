import json

import pytest
from hypothesis import given, strategies as st

from binarytor import complexes as cx
from binarytor import relative as rel
from binarytor.fabricate import random_acyclic_binary, random_complex, random_rel_object
from binarytor.io import (DocumentError, bicomplex_from_document, dumps, format_scalar,
                          from_document, loads, map_from_document, map_to_document, parse_scalar,
                          to_document)
from binarytor.matrix import Matrix
from binarytor.relative import BaseChange, Identity, Power, ZeroSource
from binarytor.rings import GF, QQ, ZZ

F5 = GF(5)
seeds = st.integers(0, 10**6)


@pytest.mark.parametrize("ring,text,value", [
    (QQ, "-1/2", -0.5), (QQ, "3", 3), (F5, "7", 2), (F5, "-1", 4), (ZZ, 12, 12), (F5, "1/2", 3),
])
def test_parse_scalar(ring, text, value):
    assert parse_scalar(ring, text) == value


@pytest.mark.parametrize("ring,text", [(ZZ, "1/2"), (QQ, "x"), (QQ, True), (QQ, 1.5), (F5, "1/5")])
def test_parse_scalar_rejects(ring, text):
    with pytest.raises(DocumentError):
        parse_scalar(ring, text)


def test_format_scalar():
    assert [format_scalar(x) for x in (QQ.coerce(-3) / 6, 4, 0)] == ["-1/2", "4", "0"]


def test_example_document():
    doc = {"kind": "chain", "ring": "QQ", "lo": 0, "dims": [1, 2, 1],
           "d": {"1": [["1", "0"]], "2": [["0"], ["1"]]}}
    c = from_document(doc)
    assert c.dims == (1, 2, 1) and cx.validate(c) == [] and cx.is_acyclic(c)
    assert to_document(c) == doc


@given(st.sampled_from([QQ, F5, ZZ]), seeds)
def test_complex_round_trip(ring, seed):
    c = random_complex(ring, seed)
    assert cx.same_complex(loads(dumps(c)), c)
    b = random_acyclic_binary(ring, seed)
    assert loads(dumps(b)) == b


@given(st.sampled_from([Identity(QQ), Power(2, QQ), BaseChange(ZZ, F5), ZeroSource(QQ)]), seeds)
def test_rel_object_round_trip(F, seed):
    x = random_rel_object(F, seed)
    y = loads(dumps(x))
    assert rel.same_rel(x, y)
    assert json.loads(dumps(y)) == json.loads(dumps(x))


def test_map_round_trip():
    c = random_complex(QQ, 4)
    f = cx.identity_map(c)
    g = map_from_document(map_to_document(f), c, c)
    assert cx.same_map(f, g)


def test_bicomplex_document():
    row = {"kind": "chain", "ring": "QQ", "lo": 0, "dims": [1, 1], "d": {"1": [["1"]]}}
    doc = {"kind": "bicomplex", "ilo": 0, "rows": [row, row], "vertical": [{"0": [["1"]], "1": [["1"]]}]}
    cc = bicomplex_from_document(doc)
    assert cx.validate_bicomplex(cc) == []
    assert cx.is_acyclic(cx.total_complex(cc))


@pytest.mark.parametrize("doc,where", [
    ({"ring": "QQ"}, "missing field 'kind'"),
    ({"kind": "cube", "ring": "QQ"}, "unknown kind"),
    ({"kind": "chain", "ring": "Q7", "lo": 0, "dims": [1]}, "$.ring"),
    ({"kind": "chain", "ring": "QQ", "lo": 0, "dims": [-1]}, "$.dims[0]"),
    ({"kind": "chain", "ring": "QQ", "lo": 0, "dims": [1, 1], "d": {"2": [["1"]]}}, "outside"),
    ({"kind": "chain", "ring": "QQ", "lo": 0, "dims": [1, 1], "d": {"1": [["1", "2"]]}}, "$.d.1[0]"),
    ({"kind": "chain", "ring": "ZZ", "lo": 0, "dims": [1, 1], "d": {"1": [["1/2"]]}}, "$.d.1[0][0]"),
    ({"kind": "chain", "ring": "QQ", "lo": "0", "dims": [1]}, "$.lo"),
    ({"kind": "rel-object", "functor": "Nope(QQ)", "category": "B"}, "functor"),
])
def test_document_errors_name_the_location(doc, where):
    with pytest.raises(DocumentError) as e:
        from_document(doc)
    assert where in str(e.value)


def test_invalid_json_text():
    with pytest.raises((DocumentError, ValueError)):
        loads("{not json")
