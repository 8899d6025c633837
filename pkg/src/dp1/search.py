"""Seeded random search for configurations with many concurrent exceptional curves.

Modes
-----
``family``  eight points on four lines through P=(0:0:1), six free parameters.
``random``  eight random points; every rational point of the plane is scored.
``key2``    points built so that L1, L2, C1, C2, C3 pass through a chosen P,
            then every line through P is tried for R8 so that C4 does too.

Any record whose count exceeds the applicable theorem bound is flagged
CRITICAL and kept.
"""
from __future__ import annotations

import json
import os
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Iterator

from .exactnum import FieldSpec, field_make
from .linalg import nullspace
from .plane import (
    TEN_CLASSES,
    Configuration,
    PlaneCurve,
    PlanePoint,
    all_points,
    concurrency_count,
    condition_rows,
    exceptional_curve,
    general_position,
    interpolate,
    monomials,
    parse_point,
    points_of_line,
    second_intersection_conic_line,
)
from .fixtures import family_points


def theorem_bound(char: int, ramified: bool) -> int:
    if ramified:
        return 16 if char == 2 else 10
    return 12 if char == 3 else 10


@dataclass
class SearchRecord:
    field: str
    points: list[list[str]]
    P: list[str]
    count: int
    on_ramification: bool
    seed: int
    trial: int
    mode: str
    timestamp: float = 0.0
    critical: bool = False

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "SearchRecord":
        return cls(**json.loads(line))

    def configuration(self) -> tuple[Configuration, PlanePoint]:
        F = field_make(self.field)
        cfg = Configuration(F, tuple(parse_point(F, p) for p in self.points))
        return cfg, parse_point(F, self.P)


def reverify(rec: SearchRecord) -> bool:
    cfg, P = rec.configuration()
    if not general_position(cfg).ok:
        return False
    rep = concurrency_count(cfg, P)
    return rep.count == rec.count and rep.on_ramification == rec.on_ramification


@dataclass
class SearchConfig:
    field: str
    trials: int = 100
    target: int = 10
    seed: int = 0
    mode: str = "family"  # family | random | key2
    output: str | None = None
    require_unramified: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.mode not in ("family", "random", "key2"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass
class SearchSummary:
    records: list[SearchRecord] = field(default_factory=list)
    trials: int = 0
    general: int = 0
    best: int = 0
    best_unramified: int = 0
    critical: int = 0
    open_case: bool = False  # characteristic 5 off the ramification curve

    def to_json(self) -> dict:
        return {
            "open_case": self.open_case,
            "trials": self.trials,
            "general_position": self.general,
            "kept": len(self.records),
            "best": self.best,
            "best_unramified": self.best_unramified,
            "critical": self.critical,
        }


# --------------------------------------------------------------------------
# configuration generators


def _family_trial(F: FieldSpec, rng: random.Random):
    vals = [F.format(F.random_nonzero(rng)) for _ in range(6)]
    pts = [parse_point(F, p) for p in family_points(*vals)]
    return pts, [PlanePoint(F, (F.zero, F.zero, F.one))]


def _random_point(F: FieldSpec, rng: random.Random) -> PlanePoint:
    while True:
        c = (F.random(rng), F.random(rng), F.random(rng))
        if any(not F.is_zero(x) for x in c):
            return PlanePoint(F, c)


def _random_trial(F: FieldSpec, rng: random.Random):
    return [_random_point(F, rng) for _ in range(8)], None


def conic_pencil(F: FieldSpec, pts) -> list[list]:
    return nullspace(F, condition_rows(F, 2, [(p, 1) for p in pts]), len(monomials(2)))


def _combine(F, basis, lam, mu) -> PlaneCurve | None:
    c = tuple(F.add(F.mul(lam, a), F.mul(mu, b)) for a, b in zip(*basis))
    if all(F.is_zero(x) for x in c):
        return None
    return PlaneCurve(F, 2, c)


def _line_directions(F: FieldSpec, P: PlanePoint) -> list[PlanePoint]:
    """One point on each line through P, taken from a line missing P."""
    for ell in ((F.one, F.zero, F.zero), (F.zero, F.one, F.zero), (F.zero, F.zero, F.one)):
        L = PlaneCurve(F, 1, ell)
        if not L.contains(P):
            return points_of_line(L)
    raise AssertionError("unreachable")


def key2_candidates(F: FieldSpec, rng: random.Random) -> Iterator[tuple[list[PlanePoint], PlanePoint]]:
    """Octuples with L1, L2, C1, C2, C3 and C4 all through P.

    C1 and C2 are drawn from the pencil of conics through P, R1, R5, R6; R3,
    R4 come from a line through P, R7 from a second line, and R8 from every
    line through P in turn.  R2 is then the second point of the conic
    through P, R3, R5, R7, R8 on the line P R1.
    """
    P, R1, R5, R6 = (_random_point(F, rng) for _ in range(4))
    if len({P, R1, R5, R6}) < 4:
        return
    basis = conic_pencil(F, [P, R1, R5, R6])
    if len(basis) != 2:
        return
    C1 = _combine(F, basis, F.random(rng), F.random(rng))
    C2 = _combine(F, basis, F.random(rng), F.random(rng))
    if C1 is None or C2 is None or C1.same_curve(C2):
        return
    dirs = _line_directions(F, P)
    X2, X3 = rng.choice(dirs), rng.choice(dirs)
    R3 = second_intersection_conic_line(C1, P, X2)
    R4 = second_intersection_conic_line(C2, P, X2)
    R7 = second_intersection_conic_line(C1, P, X3)
    if None in (R3, R4, R7) or P in (R3, R4, R7):
        return
    for X4 in dirs:
        R8 = second_intersection_conic_line(C2, P, X4)
        if R8 is None or R8 in (P, R1, R3, R4, R5, R6, R7):
            continue
        try:
            C3 = interpolate(F, 2, [(q, 1) for q in (P, R3, R5, R7, R8)])
        except Exception:
            continue
        R2 = second_intersection_conic_line(C3, P, R1)
        if R2 is None or R2 == P or R2 in (R1, R3, R4, R5, R6, R7, R8):
            continue
        try:
            C4 = interpolate(F, 2, [(q, 1) for q in (R2, R4, R6, R7, R8)])
        except Exception:
            continue
        if C4.contains(P):
            yield [R1, R2, R3, R4, R5, R6, R7, R8], P


def _best_point(cfg: Configuration) -> tuple[PlanePoint, int, bool]:
    """Score every rational point of the plane by the number of exceptional curves."""
    from .picard import exceptional_classes

    F = cfg.field
    curves = [exceptional_curve(cfg, c) for c in exceptional_classes()]
    best = None
    for X in all_points(F):
        if X in cfg.points:
            continue
        n = sum(1 for c in curves if isinstance(c, PlaneCurve) and c.contains(X))
        if best is None or n > best[1]:
            best = (X, n)
    rep = concurrency_count(cfg, best[0])
    return best[0], rep.count, rep.on_ramification


def trial_rng(seed: int, trial: int) -> random.Random:
    """Per-trial generator, so results do not depend on how trials are split across workers."""
    return random.Random(f"{seed}:{trial}")


def _candidates(F: FieldSpec, mode: str, rng: random.Random):
    if mode == "key2":
        return list(key2_candidates(F, rng))
    if mode == "family":
        return [_family_trial(F, rng)]
    return [_random_trial(F, rng)]


def _run_trials(cfg: SearchConfig, trials: range) -> SearchSummary:
    F = field_make(cfg.field)
    out = SearchSummary()
    char = F.characteristic
    for trial in trials:
        out.trials += 1
        for pts, P in _candidates(F, cfg.mode, trial_rng(cfg.seed, trial)):
            conf = Configuration(F, tuple(pts))
            if len(set(pts)) < 8 or not general_position(conf).ok:
                continue
            out.general += 1
            if P is None:
                X, count, ram = _best_point(conf)
            else:
                X = P[0] if isinstance(P, list) else P
                rep = concurrency_count(conf, X)
                count, ram = rep.count, rep.on_ramification
            out.best = max(out.best, count)
            if not ram:
                out.best_unramified = max(out.best_unramified, count)
            critical = count > theorem_bound(char, ram) or count > 16
            if critical or (count >= cfg.target and not (cfg.require_unramified and ram)):
                out.records.append(
                    SearchRecord(
                        field=F.descriptor,
                        points=[p.to_strings() for p in pts],
                        P=X.to_strings(),
                        count=count,
                        on_ramification=ram,
                        seed=cfg.seed,
                        trial=trial,
                        mode=cfg.mode,
                        timestamp=time.time(),
                        critical=critical,
                    )
                )
                out.critical += critical
    return out


def _merge(parts: list[SearchSummary]) -> SearchSummary:
    out = SearchSummary()
    for s in parts:
        out.records.extend(s.records)
        out.trials += s.trials
        out.general += s.general
        out.best = max(out.best, s.best)
        out.best_unramified = max(out.best_unramified, s.best_unramified)
        out.critical += s.critical
    out.records.sort(key=lambda r: r.trial)
    return out


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("DP1_JOBS", "1")))
    except ValueError:
        return 1


def search(cfg: SearchConfig, jobs: int | None = None) -> SearchSummary:
    """Run the trials, in worker processes when jobs > 1; only this process writes output."""
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1:
        out = _run_trials(cfg, range(cfg.trials))
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [range(i, cfg.trials, jobs) for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            out = _merge(list(ex.map(_run_trials, [cfg] * jobs, chunks)))
    out.open_case = field_make(cfg.field).characteristic == 5
    if cfg.output:
        append_records(cfg.output, out.records)
    return out


def append_records(path: str, records: list[SearchRecord]) -> None:
    """Single-writer append, one record per line."""
    if not records:
        return
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "a", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")


def load_records(path: str) -> list[SearchRecord]:
    with open(path, encoding="utf-8") as fh:
        return [SearchRecord.from_json(line) for line in fh if line.strip()]


# --------------------------------------------------------------------------
# non-concurrency of the ten curves


@dataclass
class TenCurveReport:
    field: str
    mode: str
    trials: int = 0
    general: int = 0
    conditioned: int = 0  # configurations with L1, L2, C1..C4 through P
    events: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.events

    def to_json(self) -> dict:
        return {
            "field": self.field,
            "mode": self.mode,
            "trials": self.trials,
            "general_position": self.general,
            "conditioned": self.conditioned,
            "events": self.events,
            "ok": self.ok,
        }


def _l1_l2_meet(F, curves) -> PlanePoint | None:
    a, b = curves[0].coeffs, curves[1].coeffs
    x = F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1]))
    y = F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2]))
    z = F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))
    if all(F.is_zero(c) for c in (x, y, z)):
        return None
    return PlanePoint(F, (x, y, z))


def ten_curve_trials(
    field_desc: str, configs: int = 1000, seed: int = 0, mode: str = "random", max_attempts: int | None = None
) -> TenCurveReport:
    """Sample ``configs`` general-position octuples and record any common point of the ten curves.

    Two distinct lines meet once, so a common point of all ten curves can
    only be L1 ∩ L2; testing that point covers every point of the plane.
    In ``key2`` mode the octuples are built so that six of the ten curves
    already pass through a chosen P.
    """
    F = field_make(field_desc)
    rng = random.Random(seed)
    rep = TenCurveReport(F.descriptor, mode)
    cap = max_attempts if max_attempts is not None else 200 * configs
    while rep.general < configs and rep.trials < cap:
        rep.trials += 1
        if mode == "key2":
            batch = list(key2_candidates(F, rng))
        else:
            batch = [([_random_point(F, rng) for _ in range(8)], None)]
        for pts, P in batch:
            if rep.general >= configs or len(set(pts)) < 8:
                continue
            conf = Configuration(F, tuple(pts))
            if not general_position(conf).ok:
                continue
            rep.general += 1
            curves = [exceptional_curve(conf, c) for c in TEN_CLASSES]
            X = _l1_l2_meet(F, curves)
            if X is None:
                continue
            if mode == "key2":
                if X != P:
                    raise AssertionError("L1 and L2 should meet at the chosen point")
                rep.conditioned += 1
            if all(c.contains(X) for c in curves):
                rep.events.append({"points": [p.to_strings() for p in pts], "P": X.to_strings()})
    return rep
