"""Picard lattice of a degree-one del Pezzo surface.

A class is the integer 9-vector ``(a; b1..b8)`` standing for ``aL - sum(bi Ei)``.
The 240 exceptional classes are interned once and addressed by index 0..239
everywhere else in the package.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .errors import NotExceptional, ParseError

# the seven table rows (a; b) before permuting b
TABLE_ROWS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (0, (-1, 0, 0, 0, 0, 0, 0, 0)),
    (1, (1, 1, 0, 0, 0, 0, 0, 0)),
    (2, (1, 1, 1, 1, 1, 0, 0, 0)),
    (3, (2, 1, 1, 1, 1, 1, 1, 0)),
    (4, (2, 2, 2, 1, 1, 1, 1, 1)),
    (5, (2, 2, 2, 2, 2, 2, 1, 1)),
    (6, (3, 2, 2, 2, 2, 2, 2, 2)),
)


@dataclass(frozen=True, order=True)
class PicClass:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 9:
            raise ValueError("a Picard class has 9 coordinates")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, a: int, b: Sequence[int] = ()) -> "PicClass":
        b = tuple(b) + (0,) * (8 - len(b))
        return cls((a,) + b)

    @classmethod
    def parse(cls, text: str) -> "PicClass":
        try:
            head, _, tail = text.strip().partition(";")
            b = [int(x) for x in tail.split(",")] if tail.strip() else []
            if len(b) > 8:
                raise ValueError
            return cls.of(int(head), b)
        except ValueError as exc:
            raise ParseError(f"bad class {text!r}; expected 'a;b1,...,b8'") from exc

    @property
    def a(self) -> int:
        return self.coeffs[0]

    @property
    def b(self) -> tuple[int, ...]:
        return self.coeffs[1:]

    def __add__(self, other: "PicClass") -> "PicClass":
        return PicClass(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "PicClass") -> "PicClass":
        return PicClass(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "PicClass":
        return PicClass(tuple(-x for x in self.coeffs))

    def __rmul__(self, k: int) -> "PicClass":
        return PicClass(tuple(k * x for x in self.coeffs))

    def __str__(self) -> str:
        return f"{self.a};" + ",".join(str(x) for x in self.b)

    def __repr__(self) -> str:
        return f"PicClass({self})"


L = PicClass.of(1)
K = PicClass((-3,) + (-1,) * 8)


def E(i: int) -> PicClass:
    """The exceptional divisor over the i-th point, i in 1..8."""
    b = [0] * 8
    b[i - 1] = -1
    return PicClass.of(0, b)


def pairing(c1: PicClass, c2: PicClass) -> int:
    x, y = c1.coeffs, c2.coeffs
    return x[0] * y[0] - sum(x[i] * y[i] for i in range(1, 9))


def strict_transform_class(a: int, mults: Sequence[int]) -> PicClass:
    return PicClass.of(a, mults)


def is_exceptional(c: PicClass) -> bool:
    return pairing(c, c) == -1 and pairing(c, K) == -1


@lru_cache(maxsize=None)
def exceptional_classes() -> tuple[PicClass, ...]:
    out = []
    for a, b in TABLE_ROWS:
        row = sorted({PicClass((a,) + p) for p in permutations(b)}, key=lambda c: c.b)
        out.extend(row)
    return tuple(out)


def row_of(c: PicClass) -> int:
    """Index in TABLE_ROWS of the row the class belongs to."""
    return next(i for i, (a, _) in enumerate(TABLE_ROWS) if a == c.a)


@lru_cache(maxsize=None)
def _index_map() -> dict[PicClass, int]:
    return {c: i for i, c in enumerate(exceptional_classes())}


def index_of(c: PicClass) -> int:
    try:
        return _index_map()[c]
    except KeyError:
        raise NotExceptional(f"{c} is not an exceptional class") from None


def class_at(i: int) -> PicClass:
    return exceptional_classes()[i]


def _check(c: PicClass) -> None:
    if c not in _index_map():
        raise NotExceptional(f"{c} is not an exceptional class")


@lru_cache(maxsize=None)
def partner_indices() -> tuple[int, ...]:
    cs = exceptional_classes()
    return tuple(next(j for j, d in enumerate(cs) if pairing(c, d) == 3) for c in cs)


def partner(c: PicClass) -> PicClass:
    _check(c)
    # f = -2K - c has c.f = 3 and f.f = f.K = -1
    return PicClass(tuple(-2 * k - x for k, x in zip(K.coeffs, c.coeffs)))


def degree_profile(c: PicClass) -> dict[int, int]:
    """Histogram of pairings of ``c`` with the other 239 exceptional classes."""
    _check(c)
    h = Counter(pairing(c, d) for d in exceptional_classes() if d != c)
    return {k: h.get(k, 0) for k in (0, 1, 2, 3)}


def pair_scan(w: int, pattern: tuple[int, int]) -> Counter:
    """Over all ordered pairs (e1, e2) with e1.e2 = w, the distribution of
    #{f : e1.f = pattern[0], e2.f = pattern[1]}."""
    import numpy as np

    W = np.array(weight_matrix(), dtype=np.int64)
    # the diagonal is -1, so f never coincides with e1 or e2
    common = (W == pattern[0]).astype(np.int64) @ (W == pattern[1]).astype(np.int64).T
    return Counter(common[W == w].tolist())


# -- E8 roots


def to_root(c: PicClass) -> PicClass:
    _check(c)
    return c + K


def from_root(r: PicClass) -> PicClass:
    c = r - K
    _check(c)
    return c


def root_pairing(r1: PicClass, r2: PicClass) -> int:
    return -pairing(r1, r2)


def simple_roots() -> tuple[PicClass, ...]:
    """E1-E2, ..., E7-E8, L-E1-E2-E3 as lattice vectors."""
    roots = [E(i) - E(i + 1) for i in range(1, 8)]
    roots.append(L - E(1) - E(2) - E(3))
    return tuple(roots)


def gram_matrix(roots: Iterable[PicClass]):
    import numpy as np

    rs = list(roots)
    return np.array([[root_pairing(r, s) for s in rs] for r in rs], dtype=int)


E8_CARTAN_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7))


def e8_cartan():
    """Cartan matrix of E8 with the branch node attached to the third node."""
    import numpy as np

    m = 2 * np.eye(8, dtype=int)
    for i, j in E8_CARTAN_EDGES:
        m[i, j] = m[j, i] = -1
    return m


@lru_cache(maxsize=None)
def weight_matrix() -> tuple[tuple[int, ...], ...]:
    """Pairings between all exceptional classes, indexed canonically."""
    cs = exceptional_classes()
    return tuple(tuple(pairing(c, d) for d in cs) for c in cs)
