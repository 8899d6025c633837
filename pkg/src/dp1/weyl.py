"""Weyl group action on the 240 exceptional classes.

Group elements are never enumerated. They are words in the eight simple
reflections, stored as permutations of class indices.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotExceptional, TypeMismatch
from .picard import (
    K,
    PicClass,
    class_at,
    exceptional_classes,
    index_of,
    pairing,
    partner_indices,
    weight_matrix,
    simple_roots,
    to_root,
)

N = 240


def reflect(r: PicClass, c: PicClass) -> PicClass:
    """s_r(c) = c + (c.r) r; the intersection form is negative on roots."""
    k = pairing(c, r)
    return PicClass(tuple(x + k * y for x, y in zip(c.coeffs, r.coeffs)))


@dataclass(frozen=True)
class ClassPermutation:
    images: tuple[int, ...]

    @classmethod
    def identity(cls) -> "ClassPermutation":
        return cls(tuple(range(N)))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def apply(self, c: PicClass) -> PicClass:
        return class_at(self.images[index_of(c)])

    def apply_set(self, idx: Iterable[int]) -> list[int]:
        return sorted(self.images[i] for i in idx)

    def then(self, other: "ClassPermutation") -> "ClassPermutation":
        """First self, then other."""
        o = other.images
        return ClassPermutation(tuple(o[i] for i in self.images))

    def inverse(self) -> "ClassPermutation":
        inv = [0] * N
        for i, j in enumerate(self.images):
            inv[j] = i
        return ClassPermutation(tuple(inv))

    def is_identity(self) -> bool:
        return self.images == tuple(range(N))

    def is_bijection(self) -> bool:
        return sorted(self.images) == list(range(N))

    def preserves_pairing(self) -> bool:
        W = weight_matrix()
        im = self.images
        return all(W[im[i]][im[j]] == W[i][j] for i in range(N) for j in range(i, N))

    def commutes_with_partner(self) -> bool:
        p = partner_indices()
        return all(self.images[p[i]] == p[self.images[i]] for i in range(N))


@lru_cache(maxsize=None)
def reflection_perm(root: PicClass) -> ClassPermutation:
    return ClassPermutation(tuple(index_of(reflect(root, c)) for c in exceptional_classes()))


def simple_reflections() -> list[ClassPermutation]:
    return [reflection_perm(r) for r in simple_roots()]


@lru_cache(maxsize=None)
def positive_roots() -> tuple[PicClass, ...]:
    """One root from each pair {r, -r}."""
    seen, out = set(), []
    for c in exceptional_classes():
        r = to_root(c)
        if -r not in seen:
            seen.add(r)
            out.append(r)
    return tuple(out)


def random_word(length: int, rng: random.Random) -> list[int]:
    return [rng.randrange(8) for _ in range(length)]


def from_word(word: Sequence[int]) -> ClassPermutation:
    gens = simple_reflections()
    g = ClassPermutation.identity()
    for w in word:
        g = g.then(gens[w])
    return g


def random_element(length: int, seed: int | random.Random = 0) -> ClassPermutation:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return from_word(random_word(length, rng))


def orbit(start: int | PicClass, gens: Sequence[ClassPermutation] | None = None) -> list[int]:
    """Breadth-first orbit closure of one class index."""
    s = start if isinstance(start, int) else index_of(start)
    gens = simple_reflections() if gens is None else gens
    seen, frontier = {s}, [s]
    while frontier:
        nxt = []
        for i in frontier:
            for g in gens:
                j = g.images[i]
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(seen)


def stabilizer_generators(fixed: Iterable[int]) -> list[ClassPermutation]:
    """Reflections fixing every listed class; they generate the pointwise stabilizer."""
    cs = [class_at(i) for i in fixed]
    return [reflection_perm(r) for r in positive_roots() if all(pairing(c, r) == 0 for c in cs)]


def stabilizer_orbits(fixed: Iterable[int]) -> list[list[int]]:
    """Orbits on all 240 classes of the pointwise stabilizer of ``fixed``."""
    gens = stabilizer_generators(fixed)
    parent = list(range(N))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in enumerate(g.images):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(N):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


# -- isometry search


def weight_type(idx: Sequence[int]) -> list[int]:
    cs = [class_at(i) for i in idx]
    return sorted(pairing(cs[i], cs[j]) for i in range(len(cs)) for j in range(i + 1, len(cs)))


def _perm_from_basis(images: Sequence[PicClass]) -> ClassPermutation | None:
    total = [0] * 9
    for e in images:
        total = [x + y for x, y in zip(total, e.coeffs)]
    num = [t - k for t, k in zip(total, K.coeffs)]
    if any(x % 3 for x in num):
        return None
    l_img = PicClass(tuple(x // 3 for x in num))
    out = []
    for c in exceptional_classes():
        v = [c.a * x for x in l_img.coeffs]
        for bi, e in zip(c.b, images):
            v = [x - bi * y for x, y in zip(v, e.coeffs)]
        try:
            out.append(index_of(PicClass(tuple(v))))
        except NotExceptional:
            return None
    perm = ClassPermutation(tuple(out))
    return perm if perm.is_bijection() else None


def find_isometry(src: Sequence[int], dst: Sequence[int]) -> ClassPermutation | None:
    """A pairing-preserving permutation taking the set ``src`` onto ``dst``.

    Backtracks over the images e'_1..e'_8 of E_1..E_8.  At depth i the
    multiset of signatures (s.E_1, ..., s.E_i) over src must equal the
    multiset of (d.e'_1, ..., d.e'_i) over dst.  A class is fixed by its
    pairings with E_1..E_8, so at depth 8 the map sends src onto dst.
    """
    src, dst = sorted(set(src)), sorted(set(dst))
    if len(src) != len(dst) or weight_type(src) != weight_type(dst):
        raise TypeMismatch("source and target sets differ in weight pattern")
    cs = exceptional_classes()
    S = [cs[i] for i in src]
    basis = [cs[i] for i in range(8)]  # E1..E8 come first in canonical order
    s_cols = [[pairing(s, basis[k]) for s in S] for k in range(8)]
    # pairing table of dst classes against every class
    W = weight_matrix()
    d_rows = [W[i] for i in dst]
    chosen: list[int] = []

    def signatures(cols: list[list[int]]) -> Counter:
        return Counter(zip(*cols)) if cols else Counter()

    s_sigs = [signatures(s_cols[: k + 1]) for k in range(8)]

    def rec(depth: int, d_cols: list[list[int]]):
        if depth == 8:
            return _perm_from_basis([cs[j] for j in chosen])
        target = s_sigs[depth]
        for j in range(N):
            row = W[j]
            if any(row[k] != 0 for k in chosen):
                continue
            col = [r[j] for r in d_rows]
            if signatures(d_cols + [col]) != target:
                continue
            chosen.append(j)
            res = rec(depth + 1, d_cols + [col])
            if res is not None:
                return res
            chosen.pop()
        return None

    perm = rec(0, [])
    if perm is not None and perm.apply_set(src) != dst:
        return None
    return perm
