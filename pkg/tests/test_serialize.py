import json

import pytest

from mysticum import serialize
from mysticum.mutation import Multimysticum
from mysticum.ranges import proof_witnesses, verify_all


@pytest.fixture(scope="module")
def small(fixture_m):
    return Multimysticum(fixture_m.base, fixture_m.layers[:5], fixture_m.interlayers[:4])


def test_document_shape(small):
    doc = serialize.report_document({"height": 4}, small)
    assert list(doc) == ["schema", "config", "counts", "fixedPart", "layers",
                         "interlayers", "ranges", "witnesses", "verdict"]
    assert doc["counts"]["fixed"] == {"steiner": 20, "cayley": 20, "plucker": 15,
                                      "salmon": 15, "meeting": 45}
    assert sum(l["pascal"] for l in doc["counts"]["layers"]) == 60 * 5
    assert len(doc["fixedPart"]["ladd"]) == len(doc["fixedPart"]["veronese"]) == 45
    assert doc["fixedPart"]["sextuple"]["params"] == ["0", "1", "2", "6", "7", "9"]


def test_values_are_exact_strings(small):
    text = serialize.dumps(serialize.multimysticum_to_dict(small))
    assert "." not in "".join(
        c for layer in json.loads(text)["layers"] for v in layer["pascals"].values() for c in v)


def test_round_trip_preserves_elements(small):
    back = serialize.multimysticum_from_dict(
        json.loads(serialize.dumps(serialize.multimysticum_to_dict(small))))
    assert back.height == small.height
    for a, b in zip(back.layers, small.layers):
        assert a.kirkmans == b.kirkmans and a.pascals == b.pascals
    for a, b in zip(back.interlayers, small.interlayers):
        assert a.elements == b.elements
    assert back.base.meeting == small.base.meeting


def test_round_trip_preserves_verdicts(small):
    back = serialize.multimysticum_from_dict(serialize.multimysticum_to_dict(small))
    before = verify_all(small, 3)
    after = verify_all(back, 3)
    assert [r.verdict for r in before.reports] == [r.verdict for r in after.reports]
    assert [r.coordinates for r in before.reports] == [r.coordinates for r in after.reports]
    assert [w.ok for w in proof_witnesses(small)] == [w.ok for w in proof_witnesses(back)]


def test_dumps_is_deterministic(small):
    s = verify_all(small, 2)
    a = serialize.dumps(serialize.report_document({"k": 1}, small, s, proof_witnesses(small)))
    b = serialize.dumps(serialize.report_document({"k": 1}, small, s, proof_witnesses(small)))
    assert a == b


def test_schema_checked():
    with pytest.raises(ValueError):
        serialize.loads('{"schema": "other/9"}')
