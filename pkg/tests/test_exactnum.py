from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dp1.errors import DivisionByZero, NotPrime, ParseError, Reducible, SpecMismatch
from dp1.exactnum import extension_field, field_make, find_root, is_prime, roots

from conftest import FIELDS, FINITE, rng_for

fields = st.sampled_from(FIELDS).map(field_make)


@given(fields, st.integers(0, 2**32))
def test_field_axioms(F, seed):
    rng = rng_for(seed)
    a, b, c = (F.random(rng) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == F.zero
    if not F.is_zero(a):
        assert F.mul(a, F.inv(a)) == F.one


@given(fields, st.integers(0, 2**32))
def test_format_parse_roundtrip(F, seed):
    a = F.random(rng_for(seed))
    assert F.parse(F.format(a)) == a


@given(st.sampled_from(FINITE).map(field_make), st.integers(0, 2**32))
def test_frobenius_and_fermat(F, seed):
    a = F.random(rng_for(seed))
    assert F.pow(a, F.order) == a
    p = F.characteristic
    b = F.random(rng_for(seed + 1))
    assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))


def test_generator_relation_gf32():
    F = field_make("gf:2:x^5+x^2+1")
    a = F.parse("a")
    assert F.pow(a, 5) == F.add(F.pow(a, 2), F.one)
    assert F.order == 32
    # a is primitive
    assert len({F.pow(a, k) for k in range(31)}) == 31


def test_powers_as_written():
    F = field_make("gf:3:x^3+2x+1")
    assert F.parse("a^26") == F.one
    assert F.parse("a^13") == F.parse("2")


def test_rationals_exact():
    Q = field_make("QQ")
    x = Q.parse("-31/12")
    assert x == Fraction(-31, 12)
    assert Q.add(x, Fraction(31, 12)) == 0


def test_descriptor_errors():
    with pytest.raises(NotPrime):
        field_make("q:12")
    with pytest.raises(NotPrime):
        field_make("gf:4:x^2+x+1")
    with pytest.raises(Reducible):
        field_make("gf:2:x^2+1")
    with pytest.raises(ParseError):
        field_make("GF32")


def test_division_by_zero():
    for d in ("q:7", "gf:2:x^5+x^2+1", "QQ"):
        F = field_make(d)
        with pytest.raises(DivisionByZero):
            F.inv(F.zero)


def test_mixing_fields_rejected():
    a = field_make("q:7")(3)
    b = field_make("q:11")(3)
    with pytest.raises(SpecMismatch):
        _ = a + b


@given(st.integers(2, 5000))
def test_is_prime_matches_trial_division(n):
    assert is_prime(n) == all(n % k for k in range(2, int(n**0.5) + 1))


def test_extension_field_orders():
    for p, k in ((2, 4), (3, 2), (7, 2), (11, 2)):
        F = extension_field(p, k)
        assert F.order == p**k


@given(st.sampled_from(["q:101", "gf:7:x^2+6x+3", "gf:2:x^5+x^2+1"]).map(field_make), st.integers(0, 2**32))
def test_roots_of_product_of_linears(F, seed):
    rng = rng_for(seed)
    rs = {F.random(rng) for _ in range(3)}
    poly = [F.one]
    for r in rs:  # multiply by (x - r), coefficients low to high
        nxt = [F.zero] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = F.add(nxt[i + 1], c)
            nxt[i] = F.sub(nxt[i], F.mul(r, c))
        poly = nxt
    got = {x.raw for x in roots([F.element(c) for c in poly], F)}
    assert got == rs


def test_rational_roots():
    Q = field_make("QQ")
    # 2x^2 - 3x + 1 = (2x - 1)(x - 1)
    assert sorted(x.raw for x in roots([1, -3, 2], Q)) == [Fraction(1, 2), 1]
    assert find_root([1, 0, 1], Q) is None
