"""Exact scalar fields: GF(p), GF(p^k) presented by an explicit modulus, and QQ.

Every field works on *raw codes*: plain ints for finite fields and
``fractions.Fraction`` for QQ.  An element of GF(p^k) with residue
``c_0 + c_1 a + ... + c_{k-1} a^{k-1}`` has code ``sum(c_i * p**i)``.
Codes are canonical, so equality of codes is equality of elements.  The
heavy modules (linear algebra, interpolation, determinants) run directly on
codes through the field's methods; :class:`FieldElement` wraps a code with
operator overloading for user-facing work.
"""
from __future__ import annotations

import random
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DivisionByZero, NotPrime, ParseError, Reducible, SpecMismatch

TABLE_LIMIT = 2**16
SCAN_LIMIT = 2**20


# --------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24 and overwhelmingly reliable above."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# polynomial text parsing, shared by field descriptors and element strings

_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_upoly(text: str, var: str) -> dict[int, int]:
    """Parse an integer-coefficient polynomial in one variable.

    Accepts ``3x^2``, ``3*x^2``, ``x``, ``-x^5+x^2+1`` and similar.
    Returns ``{exponent: coefficient}`` with zero coefficients dropped.
    """
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    out: dict[int, int] = {}
    pos = 0
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise ParseError(f"cannot parse {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        body = m.group(2)
        coef, exp = _parse_term(body, var, text)
        out[exp] = out.get(exp, 0) + sign * coef
    if pos != len(s):
        raise ParseError(f"cannot parse {text!r}")
    return {e: c for e, c in out.items() if c}


def _parse_term(body: str, var: str, text: str) -> tuple[int, int]:
    if var not in body:
        if not body.isdigit():
            raise ParseError(f"bad term {body!r} in {text!r}")
        return int(body), 0
    head, _, tail = body.partition(var)
    head = head.rstrip("*")
    coef = int(head) if head else 1
    if head and not head.isdigit():
        raise ParseError(f"bad coefficient {head!r} in {text!r}")
    if tail == "":
        return coef, 1
    if not tail.startswith("^") or not tail[1:].isdigit():
        raise ParseError(f"bad exponent {tail!r} in {text!r}")
    return coef, int(tail[1:])


def format_upoly(coeffs: Sequence[int], var: str) -> str:
    """Format low-to-high integer coefficients as ``x^5+x^2+1``."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        if e == 0:
            body = str(c)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if c == 1 else f"{c}{mono}"
        terms.append(body)
    return "+".join(terms) if terms else "0"


# --------------------------------------------------------------------------
# field classes


class FieldSpec:
    """Common interface. Subclasses fix ``kind``, ``p`` and ``modulus``."""

    kind: str
    p: int
    modulus: tuple[int, ...] | None = None
    degree: int = 1
    order: int | None = None
    descriptor: str
    zero: object
    one: object

    # equality and hashing follow the mathematical field, not the instance
    def _key(self):
        return (self.kind, self.p, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec({self.descriptor!r})"

    def __str__(self):
        return self.descriptor

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    # -- element construction
    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.coerce(value))

    def element(self, raw) -> "FieldElement":
        return FieldElement(self, raw)

    def coerce(self, value):
        """Turn an int, Fraction, str or FieldElement into a raw code."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise SpecMismatch(f"{value.field} vs {self}")
            return value.raw
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.div(self.from_int(value.numerator), self.from_int(value.denominator))
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    # -- derived arithmetic
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sub_scaled(self, row: Sequence, pivot: Sequence, factor) -> list:
        """``row - factor * pivot`` entrywise."""
        add, mul, neg = self.add, self.mul, self.neg
        nf = neg(factor)
        return [add(x, mul(nf, y)) for x, y in zip(row, pivot)]

    def scale(self, row: Sequence, factor) -> list:
        mul = self.mul
        return [mul(factor, x) for x in row]

    def dot(self, u: Sequence, v: Sequence):
        add, mul = self.add, self.mul
        acc = self.zero
        for x, y in zip(u, v):
            acc = add(acc, mul(x, y))
        return acc

    def random(self, rng: random.Random):
        raise NotImplementedError

    def random_nonzero(self, rng: random.Random):
        while True:
            x = self.random(rng)
            if not self.is_zero(x):
                return x

    def elements(self) -> Iterator:
        raise TypeError(f"{self} is infinite")


class PrimeField(FieldSpec):
    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.order = p
        self.descriptor = f"q:{p}"
        self.zero, self.one = 0, 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def sub_scaled(self, row, pivot, factor):
        p = self.p
        return [(x - factor * y) % p for x, y in zip(row, pivot)]

    def scale(self, row, factor):
        p = self.p
        return [factor * x % p for x in row]

    def dot(self, u, v):
        return sum(x * y for x, y in zip(u, v)) % self.p

    def parse(self, text: str) -> int:
        s = text.strip()
        try:
            if "/" in s:
                num, den = s.split("/")
                return self.div(self.from_int(int(num)), self.from_int(int(den)))
            return self.from_int(int(s))
        except ValueError as exc:
            raise ParseError(f"bad element {text!r} for {self}") from exc

    def format(self, a) -> str:
        return str(a)

    def random(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return iter(range(self.p))


class ExtensionField(FieldSpec):
    """GF(p^k) = GF(p)[x]/(modulus). ``modulus`` is monic, low-to-high."""

    kind = "extension"

    def __init__(self, p: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        mod = [c % p for c in modulus]
        while mod and mod[-1] == 0:
            mod.pop()
        if len(mod) < 2:
            raise Reducible("modulus must have degree >= 1")
        if mod[-1] != 1:
            raise ParseError("modulus must be monic")
        if not is_irreducible(mod, p):
            raise Reducible(f"{format_upoly(mod, 'x')} is reducible over GF({p})")
        self.p = p
        self.modulus = tuple(mod)
        self.degree = k = len(mod) - 1
        self.order = q = p**k
        self.descriptor = f"gf:{p}:{format_upoly(mod, 'x')}"
        self.zero, self.one = 0, 1
        self._pows = [p**i for i in range(k)]
        self.gen = self._from_digits(_upoly_rem([0, 1], mod, p)) if k > 1 else (-mod[0]) % p
        self._tables = False
        self._alpha_log = None
        if q <= TABLE_LIMIT:
            self._build_tables()

    # -- digit helpers
    def _digits(self, a: int) -> list[int]:
        p, out = self.p, []
        for _ in range(self.degree):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _from_digits(self, d: Sequence[int]) -> int:
        return sum((c % self.p) * w for c, w in zip(d, self._pows))

    def _slow_mul(self, a: int, b: int) -> int:
        p, mod, k = self.p, self.modulus, self.degree
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        return self._from_digits(_upoly_rem(prod, mod, p))

    def _slow_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self._from_digits([x + y for x, y in zip(self._digits(a), self._digits(b))])

    def _mul_by_x(self, a: int) -> int:
        d = [0] + self._digits(a)
        top = d.pop()
        if top:
            p = self.p
            d = [(c - top * m) % p for c, m in zip(d, self.modulus)]
        return self._from_digits(d)

    def _order_of(self, g: int) -> int:
        q1 = self.order - 1
        n = q1
        for r in prime_factors(q1):
            while n % r == 0 and self._slow_pow(g, n // r) == 1:
                n //= r
        return n

    def _slow_pow(self, a: int, n: int) -> int:
        result, base = 1, a
        while n:
            if n & 1:
                result = self._slow_mul(result, base)
            n >>= 1
            if n:
                base = self._slow_mul(base, base)
        return result

    def _build_tables(self):
        q = self.order
        q1 = q - 1
        alpha_primitive = self.gen != 0 and self._order_of(self.gen) == q1
        exp = [0] * (3 * q1 + 1)
        log = [0] * q
        if alpha_primitive:
            g, step = self.gen, self._mul_by_x if self.degree > 1 else None
        else:
            g = next(c for c in range(2, q) if self._order_of(c) == q1)
            step = None
        x = 1
        for i in range(q1):
            exp[i] = x
            log[x] = i
            x = step(x) if step else self._slow_mul(x, g)
        for i in range(q1, 3 * q1 + 1):
            exp[i] = exp[i - q1]
        zech = [-1] * q1
        for n in range(q1):
            s = self._slow_add(1, exp[n])
            zech[n] = log[s] if s else -1
        self._exp, self._log, self._zech = exp, log, zech
        self._q1 = q1
        self._half = q1 // 2 if self.p != 2 else 0
        self._tables = True
        if alpha_primitive:
            self._alpha_log = log

    # -- arithmetic on codes
    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        if not self._tables:
            return self._slow_add(a, b)
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        log = self._log
        la = log[a]
        z = self._zech[(log[b] - la) % self._q1]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a):
        if self.p == 2 or a == 0:
            return a
        if self._tables:
            return self._exp[self._log[a] + self._half]
        return self._from_digits([-c for c in self._digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._tables:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in {self}")
        if self._tables:
            return self._exp[self._q1 - self._log[a]]
        return self._slow_pow(a, self.order - 2)

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        if a == 0:
            return 1 if n == 0 else 0
        if self._tables:
            return self._exp[self._log[a] * n % self._q1]
        return self._slow_pow(a, n % (self.order - 1))

    def sub_scaled(self, row, pivot, factor):
        if not self._tables or factor == 0:
            return FieldSpec.sub_scaled(self, row, pivot, factor) if factor else list(row)
        exp, log = self._exp, self._log
        lf = log[factor] + self._half
        if self.p == 2:
            return [x ^ exp[lf + log[y]] if y else x for x, y in zip(row, pivot)]
        add = self.add
        return [add(x, exp[lf + log[y]]) if y else x for x, y in zip(row, pivot)]

    def power_of_gen(self, n: int) -> int:
        return self.pow(self.gen, n)

    # -- text
    def parse(self, text: str) -> int:
        s = text.replace(" ", "").replace("alpha", "a")
        if not s:
            raise ParseError("empty element")
        if "/" in s:
            num, den = s.split("/", 1)
            return self.div(self.parse(num), self.parse(den))
        terms = parse_upoly(s, "a") if s != "0" else {}
        acc = 0
        for e, c in terms.items():
            acc = self.add(acc, self.mul(self.from_int(c), self.pow(self.gen, e)))
        return acc

    def format(self, a) -> str:
        if a == 0:
            return "0"
        if self._alpha_log is not None:
            e = self._alpha_log[a]
            return "1" if e == 0 else ("a" if e == 1 else f"a^{e}")
        return format_upoly(self._digits(a), "a")

    def random(self, rng):
        return rng.randrange(self.order)

    def elements(self):
        return iter(range(self.order))


class RationalField(FieldSpec):
    kind = "rational"

    def __init__(self):
        self.p = 0
        self.order = None
        self.descriptor = "QQ"
        self.zero, self.one = Fraction(0), Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in QQ")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in QQ")
        return a / b

    def pow(self, a, n: int):
        if n < 0 and a == 0:
            raise DivisionByZero("inverse of 0 in QQ")
        return a**n

    def sub_scaled(self, row, pivot, factor):
        return [x - factor * y for x, y in zip(row, pivot)]

    def parse(self, text: str):
        try:
            return Fraction(text.replace(" ", ""))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}") from exc

    def format(self, a) -> str:
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def random(self, rng, bound: int = 50):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


QQ = RationalField()


class FieldElement:
    """An immutable element of a field, with the usual operators."""

    __slots__ = ("field", "raw")

    def __init__(self, field: FieldSpec, raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise SpecMismatch(f"{self.field} vs {other.field}")
            return other.raw
        if isinstance(other, (int, Fraction)):
            return self.field.coerce(other)
        return NotImplemented

    def _wrap(self, raw):
        return FieldElement(self.field, raw)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.raw, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.raw, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.raw))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.raw, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.raw, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.raw))

    def __neg__(self):
        return self._wrap(self.field.neg(self.raw))

    def __pow__(self, n: int):
        return self._wrap(self.field.pow(self.raw, n))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.raw))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, (int, Fraction)):
            return self.raw == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def __bool__(self):
        return not self.field.is_zero(self.raw)

    def __repr__(self):
        return f"{self.field.format(self.raw)} in {self.field.descriptor}"

    def __str__(self):
        return self.field.format(self.raw)


# --------------------------------------------------------------------------
# construction from descriptors


@lru_cache(maxsize=None)
def field_make(desc: str) -> FieldSpec:
    """Build a field from ``QQ``, ``q:<p>`` or ``gf:<p>:<monic poly in x>``."""
    s = desc.strip()
    if s == "QQ":
        return QQ
    parts = s.split(":")
    try:
        if parts[0] == "q" and len(parts) == 2:
            return PrimeField(int(parts[1]))
        if parts[0] == "gf" and len(parts) == 3:
            p = int(parts[1])
            if not is_prime(p):
                raise NotPrime(f"{p} is not prime")
            terms = parse_upoly(parts[2], "x")
            coeffs = [0] * (max(terms) + 1)
            for e, c in terms.items():
                coeffs[e] = c % p
            return ExtensionField(p, coeffs)
    except ValueError as exc:
        if isinstance(exc, (NotPrime, Reducible, ParseError)):
            raise
        raise ParseError(f"bad field descriptor {desc!r}") from exc
    raise ParseError(f"bad field descriptor {desc!r}")


@lru_cache(maxsize=None)
def extension_field(p: int, k: int) -> FieldSpec:
    """GF(p^k) by the first monic irreducible with primitive root (lexicographic)."""
    if k == 1:
        return PrimeField(p)
    fallback = None
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        if low[0] == 0:
            continue
        mod = low + [1]
        if not is_irreducible(mod, p):
            continue
        if fallback is None:
            fallback = mod
        if _x_is_primitive(mod, p):
            return ExtensionField(p, mod)
    return ExtensionField(p, fallback)


def _x_is_primitive(mod: list[int], p: int) -> bool:
    q1 = p ** (len(mod) - 1) - 1
    for r in prime_factors(q1):
        if _upoly_powmod([0, 1], q1 // r, mod, p) == [1]:
            return False
    return True


# --------------------------------------------------------------------------
# polynomials over GF(p) with int coefficients (irreducibility tests)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _upoly_mulmod(a, b, m, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _upoly_rem(prod, m, p)


def _upoly_powmod(a, n, m, p):
    result, base = [1], _upoly_rem(a, m, p)
    while n:
        if n & 1:
            result = _upoly_mulmod(result, base, m, p)
        n >>= 1
        if n:
            base = _upoly_mulmod(base, base, m, p)
    return _upoly_rem(result, m, p)


def _upoly_gcd(a, b, p):
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _upoly_rem(a, b, p)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """gcd(x^(p^i) - x, f) = 1 for i <= k/2 and x^(p^k) = x mod f."""
    f = _trim([c % p for c in modulus])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    xp = [0, 1]
    for i in range(1, k + 1):
        xp = _upoly_powmod(xp, p, f, p)
        if i <= k // 2:
            diff = list(xp) + [0] * max(0, 2 - len(xp))
            diff[1] = (diff[1] - 1) % p
            if len(_upoly_gcd(f, diff, p)) > 1:
                return False
    return xp == [0, 1]


# --------------------------------------------------------------------------
# polynomials over an arbitrary field, on raw codes (root finding)


def _ftrim(F, a):
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def _fdivmod(F, a, b):
    a = list(a)
    _ftrim(F, a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    quot = [F.zero] * max(0, len(a) - db)
    while a and len(a) - 1 >= db:
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - 1 - db
        quot[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, bc))
        _ftrim(F, a)
    return quot, a


def _fmulmod(F, a, b, m):
    if not a or not b:
        return []
    prod = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not F.is_zero(x):
            for j, y in enumerate(b):
                prod[i + j] = F.add(prod[i + j], F.mul(x, y))
    return _fdivmod(F, prod, m)[1]


def _fpowmod(F, a, n, m):
    result, base = [F.one], _fdivmod(F, a, m)[1]
    while n:
        if n & 1:
            result = _fmulmod(F, result, base, m)
        n >>= 1
        if n:
            base = _fmulmod(F, base, base, m)
    return _fdivmod(F, result, m)[1]


def _fgcd(F, a, b):
    a, b = _ftrim(F, list(a)), _ftrim(F, list(b))
    while b:
        a, b = b, _fdivmod(F, a, b)[1]
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(inv, c) for c in a]
    return a


def _horner(F, coeffs, x):
    acc = F.zero
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def _normalize_poly(coeffs, field):
    if field is None:
        for c in coeffs:
            if isinstance(c, FieldElement):
                field = c.field
                break
        else:
            raise TypeError("field required when coefficients are not FieldElements")
    raw = [field.coerce(c) for c in coeffs]
    _ftrim(field, raw)
    if not raw:
        raise ValueError("zero polynomial has every element as a root")
    return field, raw


def roots(coeffs: Sequence, field: FieldSpec | None = None, *, scan_limit: int = SCAN_LIMIT, seed: int = 0) -> list[FieldElement]:
    """All roots in ``field`` of the polynomial with low-to-high ``coeffs``."""
    F, f = _normalize_poly(coeffs, field)
    if len(f) == 1:
        return []
    if F.kind == "rational":
        return [F.element(r) for r in _rational_roots(f)]
    if F.order <= scan_limit:
        return [F.element(x) for x in F.elements() if F.is_zero(_horner(F, f, x))]
    x = [F.zero, F.one]
    xq = _fpowmod(F, x, F.order, f)
    xq = xq + [F.zero] * max(0, 2 - len(xq))
    xq[1] = F.sub(xq[1], F.one)
    g = _fgcd(F, f, _ftrim(F, xq))
    rng = random.Random(seed)
    found = [F.element(r) for r in _split_linear(F, g, rng)]
    return sorted(found, key=lambda e: e.raw)


def find_root(coeffs: Sequence, field: FieldSpec | None = None, *, scan_limit: int = SCAN_LIMIT, seed: int = 0) -> FieldElement | None:
    """One root (the smallest code) or None when the field has none."""
    F, f = _normalize_poly(coeffs, field)
    if len(f) == 1:
        return None
    if F.kind != "rational" and F.order <= scan_limit:
        for x in F.elements():
            if F.is_zero(_horner(F, f, x)):
                return F.element(x)
        return None
    rs = roots(f, F, scan_limit=scan_limit, seed=seed)
    return rs[0] if rs else None


def find_root_in_extensions(int_coeffs: Sequence[int], p: int, max_degree: int, **kw) -> tuple[FieldSpec, FieldElement] | None:
    """Search GF(p), GF(p^2), ... GF(p^max_degree) for a root."""
    for k in range(1, max_degree + 1):
        F = extension_field(p, k)
        r = find_root([F.from_int(c) for c in int_coeffs], F, **kw)
        if r is not None:
            return F, r
    return None


def _split_linear(F, g, rng):
    """Roots of a monic squarefree product of distinct linear factors."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [F.neg(F.div(g[0], g[1]))]
    while True:
        delta = F.random(rng)
        if F.p == 2:
            acc, term = [], [F.zero, delta]
            for _ in range(F.degree):
                acc = _fadd(F, acc, term)
                term = _fmulmod(F, term, term, g)
            h = _fgcd(F, g, acc)
        else:
            w = _fpowmod(F, [delta, F.one], (F.order - 1) // 2, g)
            w = w + [F.zero] * max(0, 1 - len(w))
            w[0] = F.sub(w[0], F.one)
            h = _fgcd(F, g, _ftrim(F, w))
        if 1 < len(h) < len(g):
            other = _fdivmod(F, g, h)[0]
            return _split_linear(F, h, rng) + _split_linear(F, other, rng)


def _fadd(F, a, b):
    n = max(len(a), len(b))
    a = list(a) + [F.zero] * (n - len(a))
    b = list(b) + [F.zero] * (n - len(b))
    return _ftrim(F, [F.add(x, y) for x, y in zip(a, b)])


def _rational_roots(f: list[Fraction]) -> list[Fraction]:
    from math import lcm

    den = lcm(*(c.denominator for c in f))
    ints = [int(c * den) for c in f]
    out = []
    while ints and ints[0] == 0:
        out.append(Fraction(0))
        ints.pop(0)
    if len(ints) <= 1:
        return sorted(set(out))
    lead, const = abs(ints[-1]), abs(ints[0])
    for num in _divisors(const):
        for d in _divisors(lead):
            for sgn in (1, -1):
                r = Fraction(sgn * num, d)
                if r not in out and sum(c * r**i for i, c in enumerate(ints)) == 0:
                    out.append(r)
    return sorted(out)


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def elements_of(field: FieldSpec, values: Iterable) -> list[FieldElement]:
    return [field(v) for v in values]
