"""Sparse multivariate polynomials with integer coefficients.

Only what the identity checks need: ring operations, evaluation over any
field, degrees and coefficient extraction.  Formulas are written as Python
expressions (``^`` accepted for powers) and parsed with :mod:`ast`.
"""
from __future__ import annotations

import ast
from typing import Mapping, Sequence

from .errors import ParseError
from .exactnum import FieldSpec


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple[int, ...], int] | None = None):
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    # -- constructors
    @classmethod
    def const(cls, vars, c: int) -> "Poly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars, name: str) -> "Poly":
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): 1})

    @classmethod
    def parse(cls, text: str, vars: Sequence[str]) -> "Poly":
        vars = tuple(vars)
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise ParseError(f"cannot parse polynomial {text!r}") from exc
        return _eval_ast(tree.body, vars)

    # -- arithmetic
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError("variable lists differ")
            return other
        return Poly.const(self.vars, int(other))

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return Poly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        t: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return Poly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.vars, other)
        return isinstance(other, Poly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=0)

    def coefficient(self, name: str, k: int) -> "Poly":
        """Coefficient of name^k, as a polynomial in the same variables."""
        i = self.vars.index(name)
        t = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                t[tuple(e2)] = c
        return Poly(self.vars, t)

    def evaluate(self, F: FieldSpec, values: Mapping[str, object]):
        """Evaluate at raw field codes; returns a raw code."""
        xs = [values[v] for v in self.vars]
        acc = F.zero
        cache: dict[tuple[int, int], object] = {}
        for e, c in self.terms.items():
            term = F.from_int(c)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in cache:
                        cache[key] = F.pow(xs[i], k)
                    term = F.mul(term, cache[key])
            acc = F.add(acc, term)
        return acc

    def substitute(self, name: str, value: "Poly") -> "Poly":
        i = self.vars.index(name)
        out = Poly(self.vars)
        powers: dict[int, Poly] = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = list(e)
            e2[i] = 0
            if k not in powers:
                powers[k] = value**k
            out = out + Poly(self.vars, {tuple(e2): c}) * powers[k]
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def _eval_ast(node, vars) -> Poly:
    if isinstance(node, ast.BinOp):
        left = _eval_ast(node.left, vars)
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ParseError("exponents must be integer literals")
            return left**node.right.value
        right = _eval_ast(node.right, vars)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        raise ParseError(f"unsupported operator {type(node.op).__name__}")
    if isinstance(node, ast.UnaryOp):
        inner = _eval_ast(node.operand, vars)
        if isinstance(node.op, ast.USub):
            return -inner
        if isinstance(node.op, ast.UAdd):
            return inner
        raise ParseError("unsupported unary operator")
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Poly.const(vars, node.value)
    if isinstance(node, ast.Name):
        if node.id not in vars:
            raise ParseError(f"unknown variable {node.id!r}")
        return Poly.var(vars, node.id)
    raise ParseError(f"unsupported syntax {ast.dump(node)}")
