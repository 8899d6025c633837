"""Exact plane geometry over any exact field.

Points and curves store raw field codes.  Curves are coefficient vectors
over the degree-d monomials in decreasing lexicographic order with x > y > z.

Two independent routes decide incidence with singularities:

* ``interpolate`` imposes multiplicity m at a point by shifting to the point
  in an affine chart and asking every Taylor coefficient of degree < m to
  vanish (Hasse derivatives, so it works in every characteristic);
* ``det_L`` / ``det_H`` build the derivative-row matrices verbatim, which
  the identity checks rely on.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BadArity,
    GeneralPositionError,
    HypothesisViolated,
    NoCurve,
    NotUnique,
    ParseError,
)
from .exactnum import FieldElement, FieldSpec, field_make
from .linalg import det, nullspace, rank
from .picard import E, PicClass, exceptional_classes, index_of, partner_indices

VARS = "xyz"


@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent triples of degree d, decreasing lex with x > y > z."""
    return tuple((i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1))


def monomial_name(e: Sequence[int]) -> str:
    out = ""
    for v, k in zip(VARS, e):
        if k == 1:
            out += v
        elif k > 1:
            out += f"{v}^{k}"
    return out or "1"


# --------------------------------------------------------------------------
# points


def raw_code(F: FieldSpec, v):
    """Strings and FieldElements are converted; anything else is taken as a raw code."""
    if isinstance(v, (str, FieldElement)):
        return F.coerce(v)
    if F.kind == "rational":
        return F.coerce(v)
    return v


@dataclass(frozen=True)
class PlanePoint:
    field: FieldSpec
    coords: tuple

    def __post_init__(self):
        F = self.field
        if len(self.coords) != 3:
            raise BadArity("a plane point has three coordinates")
        cs = tuple(raw_code(F, c) for c in self.coords)
        lead = next((c for c in cs if not F.is_zero(c)), None)
        if lead is None:
            raise ValueError("(0:0:0) is not a point")
        inv = F.inv(lead)
        object.__setattr__(self, "coords", tuple(F.mul(inv, c) for c in cs))

    @classmethod
    def make(cls, F: FieldSpec, x, y, z) -> "PlanePoint":
        return cls(F, (x, y, z))

    @property
    def chart(self) -> int:
        """Index of the first nonzero coordinate (which equals 1)."""
        return next(i for i, c in enumerate(self.coords) if not self.field.is_zero(c))

    def __str__(self):
        F = self.field
        return "(" + ":".join(F.format(c) for c in self.coords) + ")"

    def to_strings(self) -> list[str]:
        return [self.field.format(c) for c in self.coords]


def parse_point(F: FieldSpec, text: str | Sequence[str]) -> PlanePoint:
    if isinstance(text, str):
        parts = [p for p in re.split(r"[,:]", text.strip().strip("()")) if p.strip()]
    else:
        parts = list(text)
    if len(parts) != 3:
        raise ParseError(f"bad point {text!r}")
    return PlanePoint(F, tuple(F.parse(str(p)) for p in parts))


# --------------------------------------------------------------------------
# curves


@dataclass(frozen=True)
class PlaneCurve:
    field: FieldSpec
    degree: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != len(monomials(self.degree)):
            raise BadArity("coefficient vector has the wrong length")
        if all(self.field.is_zero(c) for c in self.coeffs):
            raise ValueError("the zero form is not a curve")

    def canonical(self) -> "PlaneCurve":
        F = self.field
        lead = next(c for c in self.coeffs if not F.is_zero(c))
        inv = F.inv(lead)
        return PlaneCurve(F, self.degree, tuple(F.mul(inv, c) for c in self.coeffs))

    def same_curve(self, other: "PlaneCurve") -> bool:
        return self.degree == other.degree and self.canonical().coeffs == other.canonical().coeffs

    def evaluate(self, p: PlanePoint | Sequence):
        F = self.field
        pt = p.coords if isinstance(p, PlanePoint) else p
        return F.dot(self.coeffs, monomial_values(F, pt, self.degree))

    def contains(self, p: PlanePoint) -> bool:
        return self.field.is_zero(self.evaluate(p))

    def multiplicity_at(self, p: PlanePoint, max_m: int | None = None) -> int:
        """Order of vanishing at p (0 if p is off the curve)."""
        F = self.field
        top = self.degree if max_m is None else max_m
        m = 0
        while m < top:
            rows = multiplicity_rows(F, self.degree, p, m + 1)
            if all(F.is_zero(F.dot(r, self.coeffs)) for r in rows):
                m += 1
            else:
                break
        return m

    def restrict_to_line(self, p: PlanePoint, q: PlanePoint) -> list:
        """Coefficients (in s^d, s^(d-1) t, ..., t^d) of the form on s p + t q."""
        F = self.field
        d = self.degree
        out = [F.zero] * (d + 1)
        for c, e in zip(self.coeffs, monomials(d)):
            if F.is_zero(c):
                continue
            poly = [c]  # in t, with s-degree = d - len + 1 implicit
            for k in range(3):
                lin = [p.coords[k], q.coords[k]]
                for _ in range(e[k]):
                    nxt = [F.zero] * (len(poly) + 1)
                    for i, a in enumerate(poly):
                        nxt[i] = F.add(nxt[i], F.mul(a, lin[0]))
                        nxt[i + 1] = F.add(nxt[i + 1], F.mul(a, lin[1]))
                    poly = nxt
            out = [F.add(x, y) for x, y in zip(out, poly)]
        return out

    def contains_line(self, p: PlanePoint, q: PlanePoint) -> bool:
        return all(self.field.is_zero(c) for c in self.restrict_to_line(p, q))

    def terms(self) -> dict[str, str]:
        F = self.field
        return {
            monomial_name(e): F.format(c)
            for e, c in zip(monomials(self.degree), self.coeffs)
            if not F.is_zero(c)
        }

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": self.terms()}

    def __str__(self):
        return " + ".join(f"({c})*{m}" if m != "1" else c for m, c in self.terms().items())

    @classmethod
    def from_json(cls, F: FieldSpec, obj: dict | str) -> "PlaneCurve":
        if isinstance(obj, str):
            obj = json.loads(obj)
        d = int(obj["degree"])
        names = {monomial_name(e): i for i, e in enumerate(monomials(d))}
        coeffs = [F.zero] * len(names)
        for k, v in obj["coeffs"].items():
            if k not in names:
                raise ParseError(f"{k!r} is not a degree-{d} monomial")
            coeffs[names[k]] = F.parse(str(v))
        return cls(F, d, tuple(coeffs))

    @classmethod
    def parse(cls, F: FieldSpec, text: str) -> "PlaneCurve":
        """Parse ``x^3 + a^24*x^2*y - 3/4*x*y^2`` style text (explicit ``*``)."""
        terms = _split_terms(text)
        if not terms:
            raise ParseError("empty curve")
        acc: dict[tuple[int, int, int], object] = {}
        d = None
        for sign, body in terms:
            coef = F.one
            exps = [0, 0, 0]
            for factor in body.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"([xyz])(?:\^(\d+))?", factor)
                if m:
                    exps[VARS.index(m.group(1))] += int(m.group(2) or 1)
                else:
                    coef = F.mul(coef, F.parse(factor.strip("()")))
            if sign < 0:
                coef = F.neg(coef)
            e = tuple(exps)
            if d is None:
                d = sum(e)
            elif sum(e) != d:
                raise ParseError("curve equation is not homogeneous")
            acc[e] = F.add(acc.get(e, F.zero), coef)
        coeffs = tuple(acc.get(e, F.zero) for e in monomials(d))
        return cls(F, d, coeffs)


def _split_terms(text: str) -> list[tuple[int, str]]:
    s = text.replace(" ", "")
    s = s.split("=")[0]
    out, depth, cur, sign = [], 0, "", 1
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and not cur.endswith(("^", "*", "/")):
            out.append((sign, cur))
            cur, sign = "", (1 if ch == "+" else -1)
            continue
        if ch in "+-" and depth == 0 and not cur:
            sign = 1 if ch == "+" else -1
            continue
        cur += ch
    if cur:
        out.append((sign, cur))
    return out


# --------------------------------------------------------------------------
# evaluation rows


def monomial_values(F: FieldSpec, pt: Sequence, d: int) -> list:
    x, y, z = pt
    px = [F.pow(x, k) for k in range(d + 1)]
    py = [F.pow(y, k) for k in range(d + 1)]
    pz = [F.pow(z, k) for k in range(d + 1)]
    return [F.mul(F.mul(px[i], py[j]), pz[k]) for i, j, k in monomials(d)]


def derivative_values(F: FieldSpec, pt: Sequence, d: int, var: str) -> list:
    """Entries of Mon_d^var evaluated at pt."""
    v = VARS.index(var)
    out = []
    for e in monomials(d):
        k = e[v]
        if k == 0:
            out.append(F.zero)
            continue
        e2 = list(e)
        e2[v] -= 1
        val = F.from_int(k)
        for c, ex in zip(pt, e2):
            if ex:
                val = F.mul(val, F.pow(c, ex))
        out.append(val)
    return out


def multiplicity_rows(F: FieldSpec, d: int, p: PlanePoint, m: int) -> list[list]:
    """Linear conditions for vanishing to order >= m at p.

    In the chart where coordinate c of p equals 1 the other two coordinates
    become p_i + s and p_j + t.  The coefficient of s^a t^b of a monomial
    is C(e_i, a) p_i^(e_i - a) C(e_j, b) p_j^(e_j - b).
    """
    c = p.chart
    i, j = [k for k in range(3) if k != c]
    pi, pj = p.coords[i], p.coords[j]
    rows = []
    for a in range(m):
        for b in range(m - a):
            row = []
            for e in monomials(d):
                ei, ej = e[i], e[j]
                if ei < a or ej < b:
                    row.append(F.zero)
                    continue
                val = F.from_int(comb(ei, a) * comb(ej, b))
                if not F.is_zero(val):
                    val = F.mul(val, F.mul(F.pow(pi, ei - a), F.pow(pj, ej - b)))
                row.append(val)
            rows.append(row)
    return rows


def condition_rows(F: FieldSpec, d: int, constraints: Iterable[tuple[PlanePoint, int]]) -> list[list]:
    rows = []
    for p, m in constraints:
        if m >= 1:
            rows.extend(multiplicity_rows(F, d, p, m))
    return rows


def interpolate(F: FieldSpec, d: int, constraints: Iterable[tuple[PlanePoint, int]], *, unique: bool = True) -> PlaneCurve:
    """A nonzero degree-d form with the requested multiplicities."""
    constraints = list(constraints)
    rows = condition_rows(F, d, constraints)
    n = len(monomials(d))
    basis = nullspace(F, rows, n) if rows else nullspace(F, [], n)
    if not basis:
        raise NoCurve(f"no degree-{d} curve satisfies the conditions")
    if unique and len(basis) > 1:
        raise NotUnique(len(basis))
    return PlaneCurve(F, d, tuple(basis[0])).canonical()


def solution_dimension(F: FieldSpec, d: int, constraints: Iterable[tuple[PlanePoint, int]]) -> int:
    rows = condition_rows(F, d, constraints)
    return len(monomials(d)) - (rank(F, rows) if rows else 0)


# --------------------------------------------------------------------------
# determinant matrices, built verbatim


def _raw(pts) -> list:
    return [p.coords if isinstance(p, PlanePoint) else tuple(p) for p in pts]


def matrix_M(F, pts):
    pts = _raw(pts)
    if len(pts) != 3:
        raise BadArity("M needs 3 points")
    return [monomial_values(F, p, 1) for p in pts]


def matrix_N(F, pts):
    pts = _raw(pts)
    if len(pts) != 6:
        raise BadArity("N needs 6 points")
    return [monomial_values(F, p, 2) for p in pts]


def matrix_L(F, pts):
    pts = _raw(pts)
    if len(pts) != 8:
        raise BadArity("L needs 8 points")
    rows = [monomial_values(F, p, 3) for p in pts]
    rows.append(derivative_values(F, pts[7], 3, "x"))
    rows.append(derivative_values(F, pts[7], 3, "z"))
    return rows


DEFAULT_DESIGNATION = ("x", "y", "z")


def matrix_H(F, pts, designations: Sequence[Sequence[str]] | None = None):
    """Rows Mon_4 at R1..R9, then the beta and gamma derivatives at R7, R8, R9.

    ``designations`` gives (alpha, beta, gamma) for R7, R8, R9.
    """
    pts = _raw(pts)
    if len(pts) != 9:
        raise BadArity("H needs 9 points")
    des = list(designations or [DEFAULT_DESIGNATION] * 3)
    if len(des) != 3 or any(sorted(t) != ["x", "y", "z"] for t in des):
        raise BadArity("H needs three (alpha, beta, gamma) permutations of x, y, z")
    rows = [monomial_values(F, p, 4) for p in pts]
    for p, (_, beta, gamma) in zip(pts[6:], des):
        rows.append(derivative_values(F, p, 4, beta))
        rows.append(derivative_values(F, p, 4, gamma))
    return rows


def det_M(F, pts):
    return det(F, matrix_M(F, pts))


def det_N(F, pts):
    return det(F, matrix_N(F, pts))


def det_L(F, pts):
    return det(F, matrix_L(F, pts))


def det_H(F, pts, designations=None):
    return det(F, matrix_H(F, pts, designations))


def curve_from_determinant(F: FieldSpec, d: int, rows: list[list]) -> PlaneCurve:
    """The form given by replacing the first row with Mon_d (Laplace expansion)."""
    n = len(monomials(d))
    if len(rows) != n:
        raise BadArity("need a square system")
    coeffs = []
    rest = rows[1:]
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rest]
        c = det(F, minor)
        coeffs.append(c if j % 2 == 0 else F.neg(c))
    return PlaneCurve(F, d, tuple(coeffs))


# --------------------------------------------------------------------------
# general position


@dataclass(frozen=True)
class Configuration:
    field: FieldSpec
    points: tuple[PlanePoint, ...]

    @classmethod
    def make(cls, F: FieldSpec, pts: Iterable) -> "Configuration":
        out = []
        for p in pts:
            out.append(p if isinstance(p, PlanePoint) else PlanePoint(F, tuple(p)))
        return cls(F, tuple(out))

    def to_json(self) -> dict:
        return {"field": self.field.descriptor, "points": [p.to_strings() for p in self.points]}

    @classmethod
    def from_json(cls, obj: dict | str) -> "Configuration":
        if isinstance(obj, str):
            obj = json.loads(obj)
        F = field_make(obj["field"])
        return cls(F, tuple(parse_point(F, p) for p in obj["points"]))


@dataclass(frozen=True)
class Violation:
    kind: str  # repeated | collinear | conic | singular_cubic
    indices: tuple[int, ...]
    method: str = ""

    def __str__(self):
        names = ",".join(f"P{i + 1}" for i in self.indices)
        extra = f" via {self.method}" if self.method else ""
        return f"{self.kind}: {names}{extra}"


@dataclass
class GPReport:
    ok: bool
    violation: Violation | None = None
    checked: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def singular_cubic_exists(F: FieldSpec, pts: Sequence[PlanePoint], i: int, *, method: str = "auto") -> tuple[bool, str]:
    """Is there a cubic through all points, singular at pts[i]?

    ``rank``: 7 simple conditions plus 3 for the double point, rank < 10.
    ``L``: the derivative-row determinant with pts[i] last; valid when its
    y coordinate is nonzero, by Euler's relation.
    """
    p = pts[i]
    if method == "auto":
        method = "L" if not F.is_zero(p.coords[1]) else "rank"
    if method == "L":
        if F.is_zero(p.coords[1]):
            raise HypothesisViolated("the L route needs y != 0 at the singular point")
        order = [q for k, q in enumerate(pts) if k != i] + [p]
        return F.is_zero(det_L(F, order)), "L"
    cons = [(q, 2 if k == i else 1) for k, q in enumerate(pts)]
    return rank(F, condition_rows(F, 3, cons)) < 10, "rank"


def general_position(cfg: Configuration, *, cubic_method: str = "auto") -> GPReport:
    F = cfg.field
    pts = cfg.points
    n = len(pts)
    rep = GPReport(ok=True, checked={"triples": 0, "sextuples": 0, "cubics": 0})
    for i, j in combinations(range(n), 2):
        if pts[i] == pts[j]:
            rep.ok, rep.violation = False, Violation("repeated", (i, j))
            return rep
    for tri in combinations(range(n), 3):
        rep.checked["triples"] += 1
        if F.is_zero(det_M(F, [pts[k] for k in tri])):
            rep.ok, rep.violation = False, Violation("collinear", tri)
            return rep
    for six in combinations(range(n), 6):
        rep.checked["sextuples"] += 1
        if F.is_zero(det_N(F, [pts[k] for k in six])):
            rep.ok, rep.violation = False, Violation("conic", six)
            return rep
    if n == 8:
        for i in range(8):
            rep.checked["cubics"] += 1
            bad, how = singular_cubic_exists(F, pts, i, method=cubic_method)
            if bad:
                rep.ok, rep.violation = False, Violation("singular_cubic", (i,), how)
                return rep
    return rep


def line_through(p: PlanePoint, q: PlanePoint) -> PlaneCurve:
    return interpolate(p.field, 1, [(p, 1), (q, 1)])


def unique_singular_cubic(points: Sequence[PlanePoint]) -> PlaneCurve:
    """The cubic through R1..R7 singular at R1, checked not to contain line R1R7."""
    if len(points) != 7:
        raise BadArity("need seven points R1..R7")
    F = points[0].field
    first6 = Configuration(F, tuple(points[:6]))
    gp = general_position(first6)
    if not gp.ok:
        raise HypothesisViolated(f"R1..R6 not in general position ({gp.violation})")
    r1, r7 = points[0], points[6]
    if r1 == r7:
        raise HypothesisViolated("R1 = R7")
    line = line_through(r1, r7)
    for k in range(1, 6):
        if line.contains(points[k]):
            raise HypothesisViolated(f"line R1R7 contains R{k + 1}")
    cubic = interpolate(F, 3, [(r1, 2)] + [(p, 1) for p in points[1:]])
    if cubic.contains_line(r1, r7):
        raise AssertionError("cubic contains line R1R7")
    return cubic


# --------------------------------------------------------------------------
# exceptional curves and concurrency


@dataclass(frozen=True)
class BlownUpPoint:
    index: int  # 1-based

    def __str__(self):
        return f"E{self.index}"


@lru_cache(maxsize=4096)
def exceptional_curve(cfg: Configuration, c: PicClass) -> PlaneCurve | BlownUpPoint:
    index_of(c)  # raises NotExceptional
    if c.a == 0:
        return BlownUpPoint(c.b.index(-1) + 1)
    cons = [(p, m) for p, m in zip(cfg.points, c.b) if m > 0]
    try:
        return interpolate(cfg.field, c.a, cons)
    except (NotUnique, NoCurve) as exc:
        gp = general_position(cfg)
        if not gp.ok:
            raise GeneralPositionError(gp.violation) from exc
        raise


@dataclass
class ConcurrencyReport:
    count: int
    classes: list[PicClass]
    on_ramification: bool
    warnings: list[str] = field(default_factory=list)

    def indices(self) -> list[int]:
        return [index_of(c) for c in self.classes]

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "on_ramification": self.on_ramification,
            "classes": [str(c) for c in self.classes],
            "warnings": self.warnings,
        }


def concurrency_count(cfg: Configuration, P: PlanePoint) -> ConcurrencyReport:
    """Exceptional classes whose curve passes through P.

    If P is one of the blown-up points Pi, Ei is counted together with every
    curve through Pi; tangency directions upstairs are not tracked.
    """
    warnings = []
    hit_point = next((k for k, q in enumerate(cfg.points) if q == P), None)
    if hit_point is not None:
        warnings.append(
            f"P equals configuration point P{hit_point + 1}; the count upstairs may differ"
        )
    out = []
    for c in exceptional_classes():
        curve = exceptional_curve(cfg, c)
        if isinstance(curve, BlownUpPoint):
            if hit_point is not None and curve.index == hit_point + 1:
                out.append(c)
        elif curve.contains(P):
            out.append(c)
    idx = {index_of(c) for c in out}
    partners = partner_indices()
    ram = any(partners[i] in idx for i in idx)
    return ConcurrencyReport(len(out), out, ram, warnings)


# the ten classes (two lines, four conics, four quartics) of the off-ramification construction
TEN_CLASSES: tuple[PicClass, ...] = tuple(
    PicClass.parse(s)
    for s in (
        "1;1,1,0,0,0,0,0,0",
        "1;0,0,1,1,0,0,0,0",
        "2;1,0,1,0,1,1,1,0",
        "2;1,0,0,1,1,1,0,1",
        "2;0,1,1,0,1,0,1,1",
        "2;0,1,0,1,0,1,1,1",
        "4;2,1,1,1,1,1,2,2",
        "4;1,2,1,1,2,2,1,1",
        "4;1,1,2,1,1,2,1,2",
        "4;1,1,1,2,2,1,2,1",
    )
)


def ten_curves(cfg: Configuration) -> list[PlaneCurve]:
    """L1, L2, C1..C4, D1..D4 for the configuration."""
    return [exceptional_curve(cfg, c) for c in TEN_CLASSES]


def common_points(curves: Sequence[PlaneCurve], candidates: Iterable[PlanePoint]) -> list[PlanePoint]:
    return [p for p in candidates if all(c.contains(p) for c in curves)]


def all_points(F: FieldSpec) -> Iterable[PlanePoint]:
    """Every point of the projective plane over a finite field."""
    one, zero = F.one, F.zero
    els = list(F.elements())
    for y in els:
        for z in els:
            yield PlanePoint(F, (one, y, z))
    for z in els:
        yield PlanePoint(F, (zero, one, z))
    yield PlanePoint(F, (zero, zero, one))


def points_of_line(line: PlaneCurve) -> list[PlanePoint]:
    """All points of a line over a finite field."""
    F = line.field
    a, b, c = line.coeffs  # a x + b y + c z
    out = []
    if not F.is_zero(c):
        # z = -(a x + b y)/c, (x:y) ranges over P^1
        cinv = F.neg(F.inv(c))
        for x, y in [(F.one, t) for t in F.elements()] + [(F.zero, F.one)]:
            z = F.mul(cinv, F.add(F.mul(a, x), F.mul(b, y)))
            out.append(PlanePoint(F, (x, y, z)))
    elif not F.is_zero(b):
        binv = F.neg(F.inv(b))
        for x, z in [(F.one, t) for t in F.elements()] + [(F.zero, F.one)]:
            y = F.mul(binv, F.mul(a, x))
            out.append(PlanePoint(F, (x, y, z)))
    else:
        for y, z in [(F.one, t) for t in F.elements()] + [(F.zero, F.one)]:
            out.append(PlanePoint(F, (F.zero, y, z)))
    return out


def second_intersection_conic_line(conic: PlaneCurve, p: PlanePoint, q: PlanePoint) -> PlanePoint | None:
    """For a conic through p, the other point on the line pq (q not on the conic required).

    Restricting to s p + t q gives A s^2 + B s t + C t^2 with A = conic(p) = 0,
    so the roots are t = 0 (the point p) and s/t = -C/B.
    """
    F = conic.field
    A, B, C = conic.restrict_to_line(p, q)
    if not F.is_zero(A):
        raise ValueError("conic does not pass through p")
    if F.is_zero(B) and F.is_zero(C):
        return None  # line is a component
    if F.is_zero(B):
        return p  # tangent at p
    s = F.neg(F.div(C, B))
    return PlanePoint(F, tuple(F.add(F.mul(s, a), b) for a, b in zip(p.coords, q.coords)))
