from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dp1.errors import NotExceptional, ParseError
from dp1.picard import (
    K,
    PicClass,
    class_at,
    degree_profile,
    e8_cartan,
    exceptional_classes,
    from_root,
    gram_matrix,
    index_of,
    pair_scan,
    pairing,
    partner,
    partner_indices,
    row_of,
    simple_roots,
    to_root,
    weight_matrix,
)

idx = st.integers(0, 239)


def test_table_rows():
    cs = exceptional_classes()
    assert len(cs) == 240 and len(set(cs)) == 240
    assert [n for _, n in sorted(Counter(row_of(c) for c in cs).items())] == [8, 28, 56, 56, 56, 28, 8]


@given(idx)
def test_self_pairing_and_canonical(i):
    c = class_at(i)
    assert pairing(c, c) == -1
    assert pairing(c, K) == -1


@given(idx)
def test_partner_is_involution_pairing_three(i):
    c = class_at(i)
    f = partner(c)
    assert pairing(c, f) == 3
    assert partner(f) == c
    assert index_of(f) == partner_indices()[i]


@given(idx, idx)
def test_partner_flips_zero_and_two(i, j):
    if i == j or partner_indices()[i] == j:
        return
    c, d = class_at(i), class_at(j)
    assert pairing(partner(c), d) == 2 - pairing(c, d)


@given(idx)
def test_negated_root_is_partner_root(i):
    c = class_at(i)
    assert -to_root(c) == to_root(partner(c))
    assert from_root(to_root(c)) == c


@given(idx)
def test_degree_profile(i):
    assert degree_profile(class_at(i)) == {0: 56, 1: 126, 2: 56, 3: 1}


def test_weight_matrix_symmetric_with_minus_one_diagonal():
    W = np.array(weight_matrix())
    assert (W == W.T).all()
    assert (np.diag(W) == -1).all()


def test_pair_scans():
    assert pair_scan(2, (2, 2)) == Counter({1: 240 * 56})
    assert pair_scan(1, (1, 1)) == Counter({60: 240 * 126})
    assert pair_scan(1, (1, 0)) == Counter({32: 240 * 126})


def test_simple_roots_give_e8_cartan():
    assert (gram_matrix(simple_roots()) == e8_cartan()).all()
    assert all(pairing(r, K) == 0 for r in simple_roots())


def test_parse_and_errors():
    assert PicClass.parse("3;2,1,1,1,1,1,1,0") == PicClass.of(3, [2, 1, 1, 1, 1, 1, 1])
    with pytest.raises(ParseError):
        PicClass.parse("3;a")
    with pytest.raises(NotExceptional):
        index_of(PicClass.of(1, [1]))
    with pytest.raises(NotExceptional):
        partner(PicClass.of(2))
