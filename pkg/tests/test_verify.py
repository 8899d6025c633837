import dataclasses

import pytest

from dp1 import verify
from dp1.errors import FixtureMismatch
from dp1.exactnum import field_make
from dp1.fixtures import EX_5_2, FIXTURES, SEVEN_PRIMES, family_points, fixture_ids


@pytest.mark.parametrize("fid", fixture_ids())
def test_fixture(fid):
    rep = verify.verify_example(fid)
    assert rep.ok
    assert rep.status == ("PARTIAL" if FIXTURES[fid].partial else "PASS")


def test_seven_primes_cover_characteristics():
    assert [p for p, _, _ in SEVEN_PRIMES] == [3, 5, 7, 11, 13, 17, 19]
    for p, desc, _ in SEVEN_PRIMES:
        assert field_make(desc).characteristic == p


def test_family_points_shape():
    pts = family_points("a", "b", "c", "m", "u", "v")
    assert len(pts) == 8 and pts[6] == ("m", "1", "u")


def test_mismatch_raises_with_diff(monkeypatch):
    c78 = EX_5_2.curves[1]
    broken = dataclasses.replace(c78, equation=c78.equation.replace("31/12", "31/11"))
    fx = dataclasses.replace(EX_5_2, id="bad", curves=(broken,))
    monkeypatch.setitem(FIXTURES, "bad", fx)
    with pytest.raises(FixtureMismatch) as exc:
        verify.verify_example("bad")
    assert exc.value.diff == [{"monomial": "xy^2", "computed": "-31/12", "printed": "-31/11", "curve": "C78"}]
    assert not verify.verify_example("bad", strict=False).ok


def test_wrong_expected_count_fails(monkeypatch):
    fx = dataclasses.replace(FIXTURES["5.3:7"], id="bad", expected_count=11)
    monkeypatch.setitem(FIXTURES, "bad", fx)
    rep = verify.verify_example("bad", strict=False)
    assert rep.status == "FAIL" and "count 10 != 11" in rep.failures()


def test_unknown_fixture():
    with pytest.raises(KeyError):
        verify.verify_example("9.9")
