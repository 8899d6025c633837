"""Worked example configurations with their printed curve equations.

Curve equations use explicit ``*`` between factors; ``a`` is the field
generator.  Each curve is tagged with the exceptional class whose plane
model it is, so the interpolated curve can be compared coefficient by
coefficient after canonical scaling.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .picard import PicClass


@dataclass(frozen=True)
class PrintedCurve:
    name: str
    cls: PicClass
    equation: str


@dataclass(frozen=True)
class ExampleFixture:
    id: str
    field: str
    points: tuple[tuple[str, str, str], ...]
    at: tuple[str, str, str] | None
    expected_count: int | None
    expected_ramified: bool | None
    curves: tuple[PrintedCurve, ...] = ()
    through_at: tuple[str, ...] = ()  # names of curves that must contain the point
    partial: bool = False
    note: str = ""


def _cubic(i: int, j: int) -> PicClass:
    """Cubic through all points but Q_i, singular at Q_j."""
    b = [1] * 8
    b[i - 1] = 0
    b[j - 1] = 2
    return PicClass.of(3, b)


def _c(text: str) -> PicClass:
    return PicClass.parse(text)


EX_5_1 = ExampleFixture(
    id="5.1",
    field="gf:2:x^5+x^2+1",
    points=(
        ("0", "1", "1"),
        ("0", "1", "a^19"),
        ("1", "0", "1"),
        ("1", "0", "a^5"),
        ("1", "1", "1"),
        ("a^20", "a^20", "a^16"),
        ("a^24", "a^25", "1"),
        ("a^30", "1", "a^5"),
    ),
    at=("0", "0", "1"),
    expected_count=16,
    expected_ramified=True,
    curves=(
        PrintedCurve("L1", _c("1;1,1"), "x"),
        PrintedCurve("L2", _c("1;0,0,1,1"), "y"),
        PrintedCurve("L3", _c("1;0,0,0,0,1,1"), "x - y"),
        PrintedCurve("L4", _c("1;0,0,0,0,0,0,1,1"), "y - a*x"),
        PrintedCurve(
            "C12",
            _cubic(1, 2),
            "x^3 + a^24*x^2*y + a^28*x^2*z + a^30*x*y^2 + a^9*x*y*z + a^26*x*z^2 + a^13*y^3 + a^6*y*z^2",
        ),
        PrintedCurve(
            "C34",
            _cubic(3, 4),
            "x^3 + a^12*x^2*y + a^4*x*y^2 + a^11*x*y*z + a^21*x*z^2 + y^3 + a^23*y^2*z + a^12*y*z^2",
        ),
        PrintedCurve(
            "C56",
            _cubic(5, 6),
            "x^3 + a^4*x^2*y + a^28*x^2*z + a^25*x*y^2 + a^20*x*y*z + a^26*x*z^2 + a^17*y^3 + a^9*y^2*z + a^29*y*z^2",
        ),
        PrintedCurve(
            "C78",
            _cubic(7, 8),
            "x^3 + a*x^2*y + a^28*x^2*z + a^17*x*y^2 + a^10*x*y*z + a^26*x*z^2 + a^16*y^3 + a^8*y^2*z + a^28*y*z^2",
        ),
        PrintedCurve(
            "C87",
            _cubic(8, 7),
            "x^3 + a^26*x^2*y + a^28*x^2*z + a^19*x*y^2 + a^10*x*y*z + a^26*x*z^2 + a^16*y^3 + a^8*y^2*z + a^28*y*z^2",
        ),
    ),
    through_at=("L1", "L2", "L3", "L4", "C12", "C34", "C56", "C78", "C87"),
)

EX_5_2 = ExampleFixture(
    id="5.2",
    field="QQ",
    points=(
        ("0", "1", "1"),
        ("0", "5", "3"),
        ("1", "0", "1"),
        ("-1", "0", "1"),
        ("1", "1", "1"),
        ("4", "4", "5"),
        ("-2", "2", "1"),
        ("2", "-2", "1"),
    ),
    at=("0", "0", "1"),
    expected_count=10,
    expected_ramified=True,
    curves=(
        PrintedCurve("L4", _c("1;0,0,0,0,0,0,1,1"), "x + y"),
        PrintedCurve(
            "C78",
            _cubic(7, 8),
            "x^3 - 3/4*x^2*y - 31/12*x*y^2 + 10/3*x*y*z - x*z^2 - y^3 + 8/3*y^2*z - 5/3*y*z^2",
        ),
        PrintedCurve(
            "C87",
            _cubic(8, 7),
            "x^3 + 13/4*x^2*y + 43/4*x*y^2 - 14*x*y*z - x*z^2 + 15*y^3 - 40*y^2*z + 25*y*z^2",
        ),
    ),
    through_at=("L4", "C78", "C87"),
)

# (p, field descriptor, (a, b, c, m, u, v))
SEVEN_PRIMES: tuple[tuple[int, str, tuple[str, ...]], ...] = (
    (3, "gf:3:x^3+2x+1", ("a", "a^20", "a^15", "a^8", "a^2", "a^12")),
    (5, "gf:5:x^2+4x+2", ("a^19", "a^11", "a^10", "a^21", "a^3", "a^14")),
    (7, "gf:7:x^2+6x+3", ("3", "a^45", "a^35", "a^4", "a^46", "a^9")),
    (11, "gf:11:x^2+7x+2", ("a^106", "a^94", "4", "a^62", "a^111", "a^6")),
    (13, "gf:13:x^2+12x+2", ("a^161", "a^156", "a^83", "a^94", "a^132", "a^146")),
    (17, "gf:17:x^2+16x+3", ("a^74", "a^166", "a^64", "a^24", "a^178", "a^250")),
    (19, "q:19", ("2", "2", "14", "8", "7", "12")),
)


def family_points(a, b, c, m, u, v) -> tuple[tuple[str, str, str], ...]:
    """Eight points with four lines through (0:0:1), as strings or field elements."""
    return (
        ("0", "1", "1"),
        ("0", "1", a),
        ("1", "0", "1"),
        ("1", "0", b),
        ("1", "1", "1"),
        ("1", "1", c),
        (m, "1", u),
        (m, "1", v),
    )


def _ex_5_3(p: int, desc: str, params: tuple[str, ...]) -> ExampleFixture:
    a, b, c, m, u, v = params
    return ExampleFixture(
        id=f"5.3:{p}",
        field=desc,
        points=family_points(a, b, c, m, u, v),
        at=("0", "0", "1"),
        expected_count=10,
        expected_ramified=True,
    )


EX_5_3 = {p: _ex_5_3(p, d, params) for p, d, params in SEVEN_PRIMES}

EX_5_4 = ExampleFixture(
    id="5.4",
    field="gf:3:x^3+2x+1",
    points=(
        ("1", "0", "1"),
        ("a^20", "0", "a^18"),
        ("a^6", "a^23", "a^2"),
        ("a^15", "a^19", "a^18"),
        ("0", "1", "1"),
        ("0", "2", "1"),
        ("a^9", "a^23", "2"),
        ("a^24", "a^7", "a^5"),
    ),
    at=("2", "0", "1"),
    expected_count=12,
    expected_ramified=False,
    curves=(
        PrintedCurve("L1", _c("1;1,1,0,0,0,0,0,0"), "y"),
        PrintedCurve("L2", _c("1;0,0,1,1,0,0,0,0"), "x + z - a^23*y"),
        PrintedCurve("C1", _c("2;1,0,1,0,1,1,1,0"), "x^2 + a^7*x*y + y^2 + 2*z^2"),
        PrintedCurve("C2", _c("2;1,0,0,1,1,1,0,1"), "x^2 + a^16*x*y + y^2 + 2*z^2"),
        PrintedCurve("C3", _c("2;0,1,1,0,1,0,1,1"), "x^2 + a^25*x*z + a^16*y^2 + a^11*y*z + a^15*z^2"),
        PrintedCurve(
            "C4", _c("2;0,1,0,1,0,1,1,1"), "x^2 + a^9*x*y + a^25*x*z + a^20*y^2 + a^6*y*z + a^15*z^2"
        ),
        PrintedCurve(
            "D1",
            _c("4;2,1,1,1,1,1,2,2"),
            "a^4*x^4 + a^11*x^3*y + a^12*x^3*z + a^24*x^2*y^2 + a^10*x^2*y*z + a^16*x^2*z^2"
            " + a^16*x*y^3 + a^21*x*y^2*z + a^17*x*y*z^2 + a^25*x*z^3 + a^6*y^4 + a^12*y^3*z"
            " + a^25*y*z^3 + a^19*z^4",
        ),
        PrintedCurve(
            "D2",
            _c("4;1,2,1,1,2,2,1,1"),
            "a^14*x^4 + x^3*y + a^16*x^3*z + a^4*x^2*y^2 + a^4*x^2*y*z + a^21*x^2*z^2"
            " + a^25*x*y^3 + a^16*x*y^2*z + a^12*x*y*z^2 + a^3*x*z^3 + a^5*y^4 + a^5*y^2*z^2"
            " + a^5*z^4",
        ),
        PrintedCurve(
            "D3",
            _c("4;1,1,2,1,1,2,1,2"),
            "a^21*x^4 + a^4*x^3*y + a^20*x^3*z + a^9*x^2*y^2 + a^19*x^2*y*z + a^3*x^2*z^2"
            " + a^21*x*y^3 + a^11*x*y^2*z + a^2*x*y*z^2 + a^7*x*z^3 + a^2*y^4 + a^17*y^3*z"
            " + a*y^2*z^2 + a^4*y*z^3 + a^23*z^4",
        ),
        PrintedCurve(
            "D4",
            _c("4;1,1,1,2,2,1,2,1"),
            "a^19*x^4 + a^22*x^3*y + a^18*x^3*z + a^20*x^2*y^2 + a^21*x^2*y*z + a*x^2*z^2"
            " + a^2*x*y^3 + a^20*x*y^2*z + a^10*x*y*z^2 + a^5*x*z^3 + a^23*y^4 + a^20*y^3*z"
            " + a^3*y^2*z^2 + a^7*y*z^3 + a^21*z^4",
        ),
        PrintedCurve(
            "G1",
            _c("5;2,2,2,2,2,1,1,2"),
            "a*x^5 + a^8*x^4*y + 2*x^4*z + a^21*x^3*y^2 + a^20*x^3*y*z + a^23*x^3*z^2"
            " + a^5*x^2*y^3 + a^25*x^2*y^2*z + a^22*x^2*y*z^2 + a^7*x^2*z^3 + a^25*x*y^4"
            " + a^12*x*y^3*z + 2*x*y^2*z^2 + a^25*x*y*z^3 + a^2*x*z^4 + a^21*y^5 + a^6*y^4*z"
            " + a^8*y^3*z^2 + a*y^2*z^3 + a^5*z^5",
        ),
        PrintedCurve(
            "G2",
            _c("5;2,2,2,2,1,2,2,1"),
            "a^4*x^5 + a^11*x^4*y + a^16*x^4*z + a^7*x^3*y^2 + a^16*x^3*y*z + x^3*z^2"
            " + a*x^2*y^3 + a^25*x^2*y^2*z + a^2*x^2*y*z^2 + a^10*x^2*z^3 + a^17*x*y^3*z"
            " + a^15*x*y^2*z^2 + a^8*x*y*z^3 + a^5*x*z^4 + a^14*y^5 + a^16*y^4*z"
            " + a^11*y^3*z^2 + a^10*y^2*z^3 + a^25*y*z^4 + a^8*z^5",
        ),
    ),
    through_at=("L1", "L2", "C1", "C2", "C3", "C4", "D1", "D2", "D3", "D4", "G1", "G2"),
)

EX_5_6 = ExampleFixture(
    id="5.6",
    field="q:7",
    points=(),
    at=None,
    expected_count=None,
    expected_ramified=False,
    partial=True,
    note="weighted model; incidence checks only",
)


FIXTURES: dict[str, ExampleFixture] = {
    "5.1": EX_5_1,
    "5.2": EX_5_2,
    **{f.id: f for f in EX_5_3.values()},
    "5.4": EX_5_4,
    "5.6": EX_5_6,
}


def fixture_ids() -> list[str]:
    return list(FIXTURES)
