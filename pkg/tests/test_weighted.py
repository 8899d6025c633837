import pytest

from dp1.errors import HypothesisViolated
from dp1.exactnum import field_make
from dp1.weighted import discriminant, parametrization, surface_on, verify_weighted_example


def test_char7_beta1():
    rep = verify_weighted_example(p=7, beta=1)
    assert rep.ok and 1 <= rep.count <= 10
    assert rep.to_json()["status"] == "PARTIAL"


@pytest.mark.parametrize("p,beta", [(11, 2), (13, 1), (2, 1), (3, 1)])
def test_other_characteristics(p, beta):
    assert verify_weighted_example(p=p, beta=beta).ok


def test_excluded_cases():
    with pytest.raises(HypothesisViolated):
        verify_weighted_example(p=5)
    with pytest.raises(HypothesisViolated):
        verify_weighted_example(p=7, beta=7)
    # beta^2 + 11 beta - 1 = 0 mod 11 at beta = 10? 100 + 110 - 1 = 209 = 19 * 11
    assert discriminant(10) % 11 == 0
    with pytest.raises(HypothesisViolated):
        verify_weighted_example(p=11, beta=10)


def test_wrong_parameters_leave_surface():
    F = field_make("q:7")
    x, y = parametrization(F, 2, 3)  # 2^2 - 2 - 1 = 1 != 0
    assert surface_on(F, 1, x, y)
