import json
from pathlib import Path

import pytest

from ybelab.algebra import Algebra
from ybelab.bundle import BundleError, bundle_for, emit_bundle, load_bundle, parse_bundle
from ybelab.field import Field
from ybelab.fixtures import nil2

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def _nil2_data():
    return json.loads((FIX / "nil2.json").read_text())


def test_load_nil2():
    b = load_bundle(FIX / "nil2.json")
    A = b.algebras["nil2"]
    assert isinstance(A, Algebra) and A.dim == 2
    assert A.same_as(nil2())
    assert set(b.maps) == {"P0", "id"} and "reg" in b.bimodules


@pytest.mark.parametrize("path", sorted(FIX.glob("*.json")), ids=lambda p: p.stem)
def test_round_trip_byte_identical(path):
    text = path.read_text()
    assert emit_bundle(load_bundle(path)) == text
    again = emit_bundle(parse_bundle(json.loads(text)))
    assert again == text


def test_bundle_for_round_trip():
    for f in (Field(0), Field(3)):
        b = bundle_for(nil2(f))
        text = emit_bundle(b)
        assert emit_bundle(parse_bundle(json.loads(text))) == text


def test_unrepresentable_scalar():
    data = _nil2_data()
    data["field"] = "F2"
    data["algebras"]["nil2"]["c"][0][0][0] = "1/2"
    with pytest.raises(BundleError) as err:
        parse_bundle(data)
    assert "not representable" in str(err.value)
    assert err.value.location == "algebras.nil2.c[0][0][0]"


def _error(data):
    with pytest.raises(BundleError) as err:
        parse_bundle(data)
    return err.value


def test_schema_and_key_errors():
    data = _nil2_data()
    data["schema"] = "algebra-bundle v9"
    assert _error(data).location == "schema"
    data = _nil2_data()
    del data["field"]
    assert "missing key 'field'" in str(_error(data))
    data = _nil2_data()
    data["algebras"]["nil2"]["extra"] = 1
    assert _error(data).location == "algebras.nil2.extra"
    data = _nil2_data()
    data["field"] = "F4"
    assert _error(data).location == "field"


def test_dimension_errors():
    data = _nil2_data()
    data["algebras"]["nil2"]["dim"] = 3
    assert _error(data).location.startswith("algebras.nil2.c")
    data = _nil2_data()
    data["algebras"]["nil2"]["dim"] = 0
    assert _error(data).location == "algebras.nil2.dim"
    data = _nil2_data()
    data["maps"]["id"]["matrix"] = [[1, 0]]
    assert _error(data).location.startswith("maps.id.matrix")


def test_reference_errors():
    data = _nil2_data()
    data["maps"]["id"]["source"] = "ghost"
    assert _error(data).location == "maps.id.source"
    data = _nil2_data()
    data["bimodules"]["reg"]["algebra"] = "ghost"
    assert _error(data).location == "bimodules.reg.algebra"


def test_structure_validation():
    data = _nil2_data()
    data["algebras"]["nil2"]["c"][1][1][0] = 1
    err = _error(data)
    assert err.location == "algebras.nil2" and "not associative" in str(err)
    assert parse_bundle(data, validate=False).algebras["nil2"].dim == 2


def test_file_errors(tmp_path):
    with pytest.raises(BundleError) as err:
        load_bundle(tmp_path / "missing.json")
    assert "cannot read" in str(err.value)
    bad = tmp_path / "bad.json"
    bad.write_text("{\n  \"field\": \n")
    with pytest.raises(BundleError) as err:
        load_bundle(bad)
    assert "invalid JSON" in str(err.value)
