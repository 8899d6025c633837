import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dp1.errors import TypeMismatch
from dp1.picard import class_at, index_of, pairing, simple_roots
from dp1.weyl import (
    find_isometry,
    orbit,
    random_element,
    reflect,
    reflection_perm,
    simple_reflections,
    stabilizer_orbits,
)


def test_simple_reflections_preserve_pairing():
    for s in simple_reflections():
        assert s.is_bijection()
        assert s.preserves_pairing()
        assert s.then(s).is_identity()


@given(st.integers(0, 239), st.integers(0, 7))
def test_reflection_formula(i, k):
    r = simple_roots()[k]
    c = class_at(i)
    img = reflect(r, c)
    assert pairing(img, img) == -1
    assert reflect(r, img) == c
    assert index_of(img) == reflection_perm(r)(i)


def test_orbit_is_everything():
    assert len(orbit(0)) == 240
    assert sorted(orbit(137)) == list(range(240))


@given(st.integers(0, 2**32), st.integers(1, 40))
def test_random_words_are_isometries(seed, length):
    w = random_element(length, seed)
    assert w.preserves_pairing()
    assert w.commutes_with_partner()


@given(st.integers(0, 2**32), st.integers(1, 6))
def test_find_isometry_recovers_random_images(seed, size):
    rng = random.Random(seed)
    src = rng.sample(range(240), size)
    dst = random_element(30, rng).apply_set(src)
    perm = find_isometry(src, dst)
    assert perm is not None
    assert perm.preserves_pairing()
    assert perm.apply_set(src) == sorted(dst)


def test_find_isometry_type_mismatch():
    # (0, 1) pair to 0; pick a pair pairing to 1
    j = next(j for j in range(240) if pairing(class_at(0), class_at(j)) == 1)
    with pytest.raises(TypeMismatch):
        find_isometry([0, 1], [0, j])


def test_stabilizer_orbits_partition():
    orbs = stabilizer_orbits([0])
    flat = sorted(v for o in orbs for v in o)
    assert flat == list(range(240))
    # orbits of the stabilizer of a class are its pairing classes (plus itself)
    sizes = sorted(len(o) for o in orbs)
    assert sizes == [1, 1, 56, 56, 126]
