"""Incidence checks for a degree-one del Pezzo surface in P(2,3,1,1).

The surface is y^2 + (b+1) x y w + b y w^3 = x^3 + b x^2 w^2 - z^5 w, and
the curves are the images of (z:w) under

    x = s^2 z^2 + r s z w,    y = -s^3 z^3 + (r+1) s^2 z^2 w

with r^2 = r + 1 and (b + r^5) s^5 = 1.  Weights are 2 and 3 in x and y,
so both parametrizing forms are homogeneous in (z, w) of those degrees.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisViolated, RootNotFound
from .exactnum import FieldSpec, extension_field, roots

# bivariate forms in (z, w): dict (i, j) -> raw code for z^i w^j


def _badd(F, a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = F.add(out.get(k, F.zero), v)
    return {k: v for k, v in out.items() if not F.is_zero(v)}


def _bmul(F, a, b):
    out: dict = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = F.add(out.get(k, F.zero), F.mul(c1, c2))
    return {k: v for k, v in out.items() if not F.is_zero(v)}


def _bscale(F, c, a):
    return {k: F.mul(c, v) for k, v in a.items() if not F.is_zero(F.mul(c, v))}


def parametrization(F: FieldSpec, rho, sigma) -> tuple[dict, dict]:
    s2 = F.mul(sigma, sigma)
    s3 = F.mul(s2, sigma)
    x = {(2, 0): s2, (1, 1): F.mul(rho, sigma)}
    y = {(3, 0): F.neg(s3), (2, 1): F.mul(F.add(rho, F.one), s2)}
    return {k: v for k, v in x.items() if not F.is_zero(v)}, {k: v for k, v in y.items() if not F.is_zero(v)}


def surface_on(F: FieldSpec, beta, x: dict, y: dict) -> dict:
    """The defining form, lhs - rhs, pulled back along (x, y, z, w)."""
    z = {(1, 0): F.one}
    w = {(0, 1): F.one}
    b1 = F.add(beta, F.one)
    w2 = _bmul(F, w, w)
    w3 = _bmul(F, w2, w)
    lhs = _badd(F, _bmul(F, y, y), _bscale(F, b1, _bmul(F, _bmul(F, x, y), w)))
    lhs = _badd(F, lhs, _bscale(F, beta, _bmul(F, y, w3)))
    x2 = _bmul(F, x, x)
    z5 = {(5, 0): F.one}
    rhs = _badd(F, _bmul(F, x2, x), _bscale(F, beta, _bmul(F, x2, w2)))
    rhs = _badd(F, rhs, _bscale(F, F.neg(F.one), _bmul(F, z5, w)))
    return _badd(F, lhs, _bscale(F, F.neg(F.one), rhs))


def _affine_residual(F: FieldSpec, beta, rho, sigma, zs) -> bool:
    """The chart w = 1, where the curve is z -> (x(z), y(z)); checked pointwise."""
    for z in zs:
        x = F.add(F.mul(F.mul(sigma, sigma), F.mul(z, z)), F.mul(F.mul(rho, sigma), z))
        s2z2 = F.mul(F.mul(sigma, sigma), F.mul(z, z))
        y = F.add(F.neg(F.mul(F.mul(s2z2, sigma), z)), F.mul(F.add(rho, F.one), s2z2))
        lhs = F.add(F.add(F.mul(y, y), F.mul(F.add(beta, F.one), F.mul(x, y))), F.mul(beta, y))
        rhs = F.add(F.add(F.pow(x, 3), F.mul(beta, F.mul(x, x))), F.neg(F.pow(z, 5)))
        if not F.is_zero(F.sub(lhs, rhs)):
            return False
    return True


@dataclass
class WeightedReport:
    p: int
    beta: int
    descriptor: str = ""
    pairs: list[tuple[str, str]] = field(default_factory=list)
    on_surface: list[bool] = field(default_factory=list)
    through_q: list[bool] = field(default_factory=list)
    chart_check: list[bool] = field(default_factory=list)
    partial: bool = True

    @property
    def count(self) -> int:
        return len(self.pairs)

    @property
    def ok(self) -> bool:
        return (
            self.count > 0
            and self.count <= 10
            and all(self.on_surface)
            and all(self.through_q)
            and all(self.chart_check)
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "beta": self.beta,
            "field": self.descriptor,
            "pairs": [list(t) for t in self.pairs],
            "count": self.count,
            "on_surface": all(self.on_surface),
            "through_q": all(self.through_q),
            "chart_check": all(self.chart_check),
            "status": "PARTIAL" if self.ok else "FAIL",
        }


def discriminant(beta: int) -> int:
    return -(beta**5) * (beta * beta + 11 * beta - 1)


def _pairs(F: FieldSpec, beta) -> list[tuple]:
    out = []
    for r in roots([-1, -1, 1], F):  # r^2 - r - 1
        c = F.add(beta, F.pow(r.raw, 5))
        if F.is_zero(c):
            continue
        target = F.inv(c)
        for s in roots([F.element(F.neg(target)), 0, 0, 0, 0, 1], F):
            out.append((r.raw, s.raw))
    return out


def verify_weighted_example(p: int = 7, beta: int = 1, max_degree: int = 4) -> WeightedReport:
    """Locate every (rho, sigma) and check each curve lies on the surface and through Q.

    Extension degrees 1..max_degree are tried; the first field holding ten
    pairs is used, otherwise the one holding the most.
    """
    if p == 5:
        raise HypothesisViolated("characteristic 5 is excluded")
    if beta % p == 0 or discriminant(beta) % p == 0:
        raise HypothesisViolated(f"beta={beta} is degenerate in characteristic {p}")
    best = None
    for k in range(1, max_degree + 1):
        F = extension_field(p, k)
        prs = _pairs(F, F.from_int(beta))
        if best is None or len(prs) > len(best[1]):
            best = (F, prs)
        if len(prs) >= 10:
            break
    if best is None or not best[1]:
        raise RootNotFound(f"no (rho, sigma) found up to degree {max_degree}")
    F, prs = best
    b = F.from_int(beta)
    rep = WeightedReport(p=p, beta=beta, descriptor=F.descriptor)
    sample_z = list(F.elements())[:50] if F.order < 10**6 else [F.from_int(i) for i in range(50)]
    for r, s in prs:
        x, y = parametrization(F, r, s)
        rep.pairs.append((F.format(r), F.format(s)))
        rep.on_surface.append(not surface_on(F, b, x, y))
        # Q = (0:0:0:1) is the image of (z:w) = (0:1): every term of x, y carries z
        rep.through_q.append(all(i > 0 for i, _ in x) and all(i > 0 for i, _ in y))
        rep.chart_check.append(_affine_residual(F, b, r, s, sample_z))
    return rep
