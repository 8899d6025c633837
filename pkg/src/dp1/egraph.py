"""Weighted intersection graph on the 240 exceptional classes and clique search.

Adjacency for an allowed weight set is one Python-int bitmask per vertex.
Maximum cliques use a branch-and-bound with a greedy colouring bound.  Near
the root of the search tree, the branching is done over orbits of the
pointwise stabilizer of the clique built so far (orbital branching).  This is
sound because every stabilizer preserves the adjacency masks.
"""
from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SearchExhausted
from .picard import partner_indices, weight_matrix
from .weyl import stabilizer_orbits

N = 240


@dataclass(frozen=True)
class ExcGraph:
    weights: tuple[tuple[int, ...], ...]

    def weight(self, i: int, j: int) -> int:
        return self.weights[i][j]

    def row_histogram(self, i: int) -> dict[int, int]:
        h = Counter(w for j, w in enumerate(self.weights[i]) if j != i)
        return {k: h.get(k, 0) for k in (0, 1, 2, 3)}

    def masks(self, allowed: Iterable[int]) -> tuple[int, ...]:
        return _masks(self.weights, frozenset(allowed))

    def as_array(self):
        import numpy as np

        return np.array(self.weights, dtype=np.int8)

    def is_clique(self, vertices: Sequence[int], allowed: Iterable[int]) -> bool:
        ok = set(allowed)
        vs = list(vertices)
        return len(set(vs)) == len(vs) and all(
            self.weights[vs[i]][vs[j]] in ok for i in range(len(vs)) for j in range(i + 1, len(vs))
        )


@lru_cache(maxsize=None)
def _masks(weights, allowed: frozenset) -> tuple[int, ...]:
    out = []
    for i in range(N):
        m = 0
        for j, w in enumerate(weights[i]):
            if j != i and w in allowed:
                m |= 1 << j
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def build_graph() -> ExcGraph:
    return ExcGraph(weight_matrix())


@dataclass(frozen=True)
class CliqueQuery:
    allowed: frozenset[int]
    mode: str = "max_size"  # max_size | find_one_of_size
    size: int | None = None
    orbit_depth: int = 3
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "allowed", frozenset(self.allowed))
        if not self.allowed or not self.allowed <= {0, 1, 2, 3}:
            raise ValueError("allowed must be a nonempty subset of {0,1,2,3}")
        if self.mode not in ("max_size", "find_one_of_size"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "find_one_of_size" and not self.size:
            raise ValueError("find_one_of_size needs a size")


@dataclass
class CliqueResult:
    size: int
    witness: list[int]
    nodes: int = 0
    found: bool = True
    tasks: int = 1


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def color_sort(adj: Sequence[int], P: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of the candidate mask ``P``.

    Returns vertices in non-decreasing colour order with their colours; the
    colour of the last vertex bounds the clique number of ``P``.
    """
    order, colors = [], []
    U, color = P, 0
    while U:
        color += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            U &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


class _Search:
    def __init__(self, adj, best: int, target: int | None):
        self.adj = adj
        self.best = best
        self.witness: list[int] = []
        self.target = target
        self.nodes = 0
        self.done = False

    def expand(self, R: list[int], P: int):
        self.nodes += 1
        adj = self.adj
        order, colors = color_sort(adj, P)
        for k in range(len(order) - 1, -1, -1):
            if self.done or len(R) + colors[k] <= self.best:
                return
            v = order[k]
            R.append(v)
            newP = P & adj[v]
            if newP:
                self.expand(R, newP)
            elif len(R) > self.best:
                self.best = len(R)
                self.witness = list(R)
                if self.target is not None and self.best >= self.target:
                    self.done = True
            R.pop()
            P &= ~(1 << v)


def _orbital_tasks(adj, allowed, depth: int) -> list[tuple[list[int], int]]:
    """Expand the first ``depth`` levels by stabilizer orbits.

    The graph is vertex-transitive, so level one is the single vertex 0.  A
    node (S, Cand) splits into one child per orbit O_i of Stab(S) on Cand,
    with child S + [rep_i] and candidates (Cand minus O_1..O_(i-1)) & N(rep_i).
    """
    frontier = [([0], adj[0])]
    for _ in range(max(0, depth - 1)):
        nxt = []
        for S, cand in frontier:
            if not cand:
                nxt.append((S, cand))
                continue
            orbs = []
            for o in stabilizer_orbits(S):
                m = 0
                for v in o:
                    if cand >> v & 1:
                        m |= 1 << v
                if m:
                    orbs.append((_bits(m)[0], m))
            removed = 0
            for rep, m in orbs:
                nxt.append((S + [rep], (cand & ~removed) & adj[rep]))
                removed |= m
        frontier = nxt
    return frontier


def _run_task(args):
    adj, S, cand, best, target = args
    s = _Search(adj, best, target)
    if not cand:
        if len(S) > best:
            s.best, s.witness = len(S), list(S)
    else:
        s.expand(list(S), cand)
    return s.best, s.witness, s.nodes


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DP1_JOBS", "1")))
    except ValueError:
        return 1


def max_clique(g: ExcGraph, q: CliqueQuery) -> CliqueResult:
    """Maximum clique (or one of a given size) using only allowed edge weights."""
    adj = g.masks(q.allowed)
    target = q.size if q.mode == "find_one_of_size" else None
    best0 = (target - 1) if target else 0
    tasks = _orbital_tasks(adj, q.allowed, q.orbit_depth)
    nodes = 0
    best, witness = best0, []
    if q.jobs > 1 and len(tasks) > 1:
        payload = [(adj, S, c, best0, target) for S, c in tasks]
        with ProcessPoolExecutor(max_workers=q.jobs) as ex:
            results = list(ex.map(_run_task, payload))
        # deterministic reduction in task order: first task reaching the max wins
        for b, w, n in results:
            nodes += n
            if b > best and w:
                best, witness = b, w
    else:
        for S, c in tasks:
            b, w, n = _run_task((adj, S, c, best, target))
            nodes += n
            if b > best and w:
                best, witness = b, w
                if target is not None and best >= target:
                    break
    witness = sorted(witness)
    if witness and not g.is_clique(witness, q.allowed):
        raise AssertionError("clique witness failed re-verification")
    found = bool(witness)
    return CliqueResult(len(witness) if found else 0, witness, nodes, found, len(tasks))


# -- K_n shapes


@dataclass(frozen=True)
class KnFailure:
    reason: str

    def __bool__(self):
        return False


def is_Kn(g: ExcGraph, vertices: Iterable[int]) -> int | KnFailure:
    """n if the set is n partner pairs with every other pairing equal to 1."""
    vs = sorted(set(vertices))
    if not vs:
        return KnFailure("empty set")
    p = partner_indices()
    S = set(vs)
    for v in vs:
        if p[v] not in S:
            return KnFailure(f"partner of vertex {v} missing")
    for i, a in enumerate(vs):
        for b in vs[i + 1 :]:
            if b != p[a] and g.weights[a][b] != 1:
                return KnFailure(f"vertices {a},{b} pair to {g.weights[a][b]}, expected 1")
    return len(vs) // 2


# -- extendability of {1,2}-cliques of size 11


@dataclass
class ExtendReport:
    samples: int
    extended: int
    counterexamples: list[list[int]] = field(default_factory=list)
    distinct: int = 0
    attempts: int = 0
    mode: str = "sampled"

    @property
    def ok(self) -> bool:
        return not self.counterexamples and self.extended == self.samples


def extensions(adj: Sequence[int], clique: Sequence[int]) -> int:
    m = (1 << N) - 1
    for v in clique:
        m &= adj[v]
    return m


def sample_clique(adj: Sequence[int], size: int, rng: random.Random, max_restarts: int = 10_000) -> tuple[list[int], int]:
    """Randomized greedy growth with bounded backtracking to a clique of ``size``."""
    for attempt in range(1, max_restarts + 1):
        R = [rng.randrange(N)]
        P = adj[R[0]]
        stack = []
        backtracks = 0
        while len(R) < size:
            cands = _bits(P)
            if not cands:
                if not stack or backtracks > 50:
                    break
                R, P = stack.pop()
                backtracks += 1
                continue
            v = rng.choice(cands)
            stack.append((list(R), P & ~(1 << v)))
            R = R + [v]
            P &= adj[v]
        if len(R) == size:
            return sorted(R), attempt
    raise SearchExhausted(f"could not sample a clique of size {size}")


def eleven_extends(g: ExcGraph, samples: int = 10_000, seed: int = 0, *, exhaustive: bool = False) -> ExtendReport:
    """Check that {1,2}-cliques of size 11 extend to size 12."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    adj = g.masks({1, 2})
    if exhaustive:
        return _eleven_exhaustive(g, adj)
    rng = random.Random(seed)
    rep = ExtendReport(samples=samples, extended=0)
    seen = set()
    for _ in range(samples):
        c, att = sample_clique(adj, 11, rng)
        rep.attempts += att
        if not g.is_clique(c, {1, 2}):
            raise AssertionError("sampled set is not a clique")
        seen.add(tuple(c))
        if extensions(adj, c):
            rep.extended += 1
        else:
            rep.counterexamples.append(c)
    rep.distinct = len(seen)
    return rep


def _eleven_exhaustive(g: ExcGraph, adj) -> ExtendReport:
    """Orbit-pruned enumeration of 11-cliques; reports any that are maximal.

    Orbital branching is applied at every level, so each orbit of 11-cliques
    under the Weyl group is visited at least once.  No runtime guarantee.
    """
    rep = ExtendReport(samples=0, extended=0, mode="exhaustive")

    def rec(S: list[int], cand: int):
        if len(S) == 11:
            rep.samples += 1
            if extensions(adj, S):
                rep.extended += 1
            else:
                rep.counterexamples.append(sorted(S))
            return
        _, colors = color_sort(adj, cand)
        if len(S) + (colors[-1] if colors else 0) < 11:
            return
        removed = 0
        for o in stabilizer_orbits(S):
            m = 0
            for v in o:
                if cand >> v & 1:
                    m |= 1 << v
            if not m:
                continue
            rep_v = _bits(m)[0]
            rec(S + [rep_v], (cand & ~removed) & adj[rep_v])
            removed |= m

    rec([0], adj[0])
    rep.distinct = rep.samples
    return rep
