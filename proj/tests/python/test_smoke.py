import json
import os

import pytest

import qbr

DATA = os.environ.get("QBR_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def data(name):
    return os.path.join(DATA, name)


def brute_units(r):
    one = r.one
    return [a for a in range(r.order)
            if any(r.mul(a, b) == one and r.mul(b, a) == one for b in range(r.order))]


def test_build_from_dict_and_file():
    z6 = qbr.ring({"kind": "zn", "n": 6})
    assert z6.order == 6
    assert z6.unital and z6.one == 1
    assert z6.mul(2, 3) == 0
    assert qbr.ring(data("m2f2.json")).order == 16


def test_sets_match_brute_force():
    for spec in ({"kind": "zn", "n": 12}, {"kind": "matrix", "size": 2, "base": {"kind": "zn", "n": 2}}):
        r = qbr.ring(spec)
        assert qbr.units(r) == brute_units(r)
        # Finite rings have no quasi-invertibles beyond the units.
        assert qbr.quasi_invertibles(r) == qbr.units(r)
    assert qbr.sets({"kind": "zn", "n": 6}, "qinv") == [1, 5]
    assert qbr.sets({"kind": "zn", "n": 6}, "idempotents") == [0, 1, 3, 4]


def test_quasi_inverse_is_a_partial_inverse():
    r = qbr.ring(data("m2f2.json"))
    for u in qbr.quasi_invertibles(r):
        v = qbr.quasi_inverse(r, u)
        assert r.mul(r.mul(u, v), u) == u
    assert qbr.quasi_inverse(r, 0) is None


def test_properties():
    r = qbr.ring(data("t2f3.json"))
    assert qbr.is_b_ring(r) and qbr.is_qb_ring(r) and qbr.is_exchange_ring(r)
    two_z4 = qbr.ring(data("two_z4.json"))
    assert not two_z4.unital
    assert qbr.is_qb_nonunital(two_z4)
    rep = qbr.check({"kind": "zn", "n": 4}, "semiprime")
    assert rep["checks"][0]["status"] == "fail"
    assert rep["exit_code"] == 1


def test_verify_suite():
    rep = qbr.verify({"kind": "zn", "n": 6}, "thm2.3", seed=3)
    assert rep["summary"]["fail"] == 0
    assert rep["summary"]["pass"] > 0
    assert "seconds" not in rep["checks"][0]
    assert [name for name, _ in qbr.suites()][0] == "thm2.3"


def test_jacobson():
    assert qbr.jacobson_normal_form("x y", 2) == "1"
    assert qbr.laurent_image("y^2 x + x", 3) == "t^-1 + t"
    assert qbr.laurent_image("1 - y x", 5) == "0"


def test_errors_carry_codes():
    with pytest.raises(qbr.Error) as e:
        qbr.ring({"kind": "zn"})
    assert e.value.code == "MalformedSpec"
    with pytest.raises(qbr.Error) as e:
        qbr.units(qbr.ring(data("two_z4.json")))
    assert e.value.code == "NonUnitalRing"
    with pytest.raises(qbr.Error):
        qbr.ring({"kind": "zn", "n": 6}).mul(6, 0)
    with pytest.raises(ValueError):
        qbr.verify({"kind": "zn", "n": 6}, "nope")


def test_reports_match_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema_path = os.path.join(os.path.dirname(__file__), "..", "..", "docs", "report_schema.json")
    with open(schema_path) as fh:
        schema = json.load(fh)
    jsonschema.validate(qbr.verify(data("t2f3.json"), "sec8"), schema)
    jsonschema.validate(qbr.check(data("two_z4.json"), "qb"), schema)
