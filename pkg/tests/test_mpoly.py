import pytest
from hypothesis import given
from hypothesis import strategies as st

from dp1.errors import ParseError
from dp1.exactnum import field_make
from dp1.mpoly import Poly

V = ("a", "b", "c")


def test_parse_and_arith():
    p = Poly.parse("(a + b)^2", V)
    q = Poly.parse("a^2 + 2*a*b + b^2", V)
    assert p == q
    assert (p - q).is_zero()
    assert p.total_degree() == 2
    assert Poly.parse("a*b^3 - c", V).degree_in("b") == 3


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_evaluate_matches_python(x, y, z):
    F = field_make("q:101")
    p = Poly.parse("3*a^2*b - 7*c + a*b*c - 1", V)
    want = (3 * x * x * y - 7 * z + x * y * z - 1) % 101
    assert p.evaluate(F, {"a": x % 101, "b": y % 101, "c": z % 101}) == want


def test_substitute():
    p = Poly.parse("a^2 - b", V)
    s = p.substitute("b", Poly.parse("a^2", V))
    assert s.is_zero()


def test_rejects_unknown_names():
    with pytest.raises(ParseError):
        Poly.parse("a + d", V)
