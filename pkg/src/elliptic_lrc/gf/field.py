"""Finite fields F_{p^a} in a polynomial basis.

Elements are stored as integers: the element c_0 + c_1*X + ... + c_{a-1}*X^{a-1}
is encoded as ``c_0 + c_1*p + ... + c_{a-1}*p^{a-1}``. Ordering elements by this
integer is the canonical element order used throughout the package (0 first,
then 1, then the remaining elements by coefficient tuple).

All hot arithmetic goes through ``FieldSpec`` methods on these integers; the
``FieldElement`` wrapper exists for callers that want operator syntax.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from types import SimpleNamespace
from typing import Iterable, Sequence

import numpy as np

from ..errors import DegenerateAllZero, DivisionByZero, MixedFields, NotPrime, TooLarge

MAX_ORDER = 1 << 32
# log/exp tables are built only below this order; larger fields use polynomial arithmetic
TABLE_LIMIT = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over F_p (prime field only), used to vet the modulus ---

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _trim(list(f))
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) >= len(g):
        c = f[-1] * inv_lead % p
        shift = len(f) - len(g)
        for i, gc in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gc) % p
        _trim(f)
    return f


def _pmulmod(f: list[int], g: list[int], m: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fc in enumerate(f):
        if fc:
            for j, gc in enumerate(g):
                out[i + j] = (out[i + j] + fc * gc) % p
    return _pmod(out, m, p)


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial over F_p (low degree first)."""
    f = list(f)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    xpow = [0, 1]
    for _ in range(n // 2):
        # xpow <- xpow^p mod f
        acc = [1]
        base = xpow
        e = p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        xpow = acc
        diff = list(xpow) + [0] * max(0, 2 - len(xpow))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, a: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree a (c_0 compared first)."""
    for low in itertools.product(range(p), repeat=a):
        cand = low + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # cannot happen


@dataclass(frozen=True)
class FieldSpec:
    """The field F_p[X]/(modulus). Use :func:`field_create` for the canonical modulus."""

    p: int
    a: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.a < 1:
            raise ValueError("exponent a must be >= 1")
        if self.p ** self.a > MAX_ORDER:
            raise TooLarge(f"{self.p}^{self.a} exceeds 2^32")
        m = tuple(int(c) % self.p for c in self.modulus)
        if len(m) != self.a + 1 or m[-1] != 1:
            raise ValueError("modulus must be monic of degree a")
        if not _is_irreducible(m, self.p):
            raise ValueError("modulus is not irreducible")
        object.__setattr__(self, "modulus", m)

    # ------------------------------------------------------------------ basics
    @property
    def q(self) -> int:
        return self.p ** self.a

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, a={self.a}, modulus={list(self.modulus)})"

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    def to_coeffs(self, v: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.a):
            v, c = divmod(v, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.a:
            raise ValueError(f"at most {self.a} coefficients expected")
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def check(self, v: int) -> int:
        if not 0 <= v < self.q:
            raise ValueError(f"{v} is not an element encoding of F_{self.q}")
        return v

    # ----------------------------------------------------------------- tables
    @cached_property
    def _t(self) -> SimpleNamespace | None:
        q, p = self.q, self.p
        if q > TABLE_LIMIT:
            return None
        if q == 2:
            g = 1
        else:
            g = self._find_generator()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._slow_mul(v, g)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        zech = None
        if p != 2:
            # zech[n] = log(1 + g^n), or -1 when 1 + g^n = 0
            zech = [0] * (q - 1)
            for n in range(q - 1):
                w = exp[n]
                c0 = w % p
                s = w - c0 + (c0 + 1) % p
                zech[n] = log[s] if s else -1
        exp_np = np.array(exp, dtype=np.int64)
        log_np = np.array(log, dtype=np.int64)
        add_np = None
        if p != 2 and q <= 1024:
            xs = np.arange(q, dtype=np.int64)
            add_np = self._digit_add(xs[:, None], xs[None, :])
        return SimpleNamespace(g=g, exp=exp, log=log, zech=zech, exp_np=exp_np,
                               log_np=log_np, add_np=add_np,
                               minus_one_log=(q - 1) // 2 if p != 2 else 0)

    def _find_generator(self) -> int:
        order = self.q - 1
        factors = prime_factors(order)
        for g in range(2, self.q):
            if all(self._slow_pow(g, order // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group has no generator")  # cannot happen

    @property
    def generator(self) -> int:
        t = self._t
        return t.g if t is not None else self._find_generator()

    # ------------------------------------------------- polynomial-basis slow path
    def _slow_mul(self, u: int, v: int) -> int:
        p, a, m = self.p, self.a, self.modulus
        f, g = self.to_coeffs(u), self.to_coeffs(v)
        prod = [0] * (2 * a - 1)
        for i, fc in enumerate(f):
            if fc:
                for j, gc in enumerate(g):
                    if gc:
                        prod[i + j] = (prod[i + j] + fc * gc) % p
        for d in range(len(prod) - 1, a - 1, -1):
            c = prod[d]
            if c:
                for i in range(a):
                    prod[d - a + i] = (prod[d - a + i] - c * m[i]) % p
                prod[d] = 0
        return self.from_coeffs(prod[:a])

    def _slow_pow(self, u: int, e: int) -> int:
        acc, base = 1, u
        while e:
            if e & 1:
                acc = self._slow_mul(acc, base)
            base = self._slow_mul(base, base)
            e >>= 1
        return acc

    def _digit_add(self, x, y, sign: int = 1):
        p = self.p
        res = 0 * x + 0 * y
        pw = 1
        for _ in range(self.a):
            res = res + ((x // pw % p + sign * (y // pw % p)) % p) * pw
            pw *= p
        return res

    # ---------------------------------------------------------- scalar arithmetic
    def add(self, u: int, v: int) -> int:
        if self.p == 2:
            return u ^ v
        if u == 0:
            return v
        if v == 0:
            return u
        t = self._t
        if t is None:
            return self._digit_add(u, v)
        lu = t.log[u]
        z = t.zech[(t.log[v] - lu) % (self.q - 1)]
        if z < 0:
            return 0
        return t.exp[lu + z]

    def neg(self, u: int) -> int:
        if self.p == 2 or u == 0:
            return u
        t = self._t
        if t is None:
            return self._digit_add(0, u, -1)
        return t.exp[t.log[u] + t.minus_one_log]

    def sub(self, u: int, v: int) -> int:
        if self.p == 2:
            return u ^ v
        return self.add(u, self.neg(v))

    def mul(self, u: int, v: int) -> int:
        if u == 0 or v == 0:
            return 0
        t = self._t
        if t is None:
            return self._slow_mul(u, v)
        return t.exp[t.log[u] + t.log[v]]

    def inv(self, u: int) -> int:
        if u == 0:
            raise DivisionByZero("inverse of zero")
        t = self._t
        if t is None:
            return self._slow_pow(u, self.q - 2)
        return t.exp[(self.q - 1 - t.log[u]) % (self.q - 1)]

    def div(self, u: int, v: int) -> int:
        return self.mul(u, self.inv(v))

    def pow(self, u: int, e: int) -> int:
        if e < 0:
            u, e = self.inv(u), -e
        if e == 0:
            return 1
        if u == 0:
            return 0
        t = self._t
        if t is None:
            return self._slow_pow(u, e)
        return t.exp[t.log[u] * e % (self.q - 1)]

    def is_square(self, u: int) -> bool:
        if u == 0 or self.p == 2:
            return True
        return self.pow(u, (self.q - 1) // 2) == 1

    def sum(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def dot(self, us: Iterable[int], vs: Iterable[int]) -> int:
        acc = 0
        for u, v in zip(us, vs):
            if u and v:
                acc = self.add(acc, self.mul(u, v))
        return acc

    def quadratic_roots(self, c2: int, c1: int, c0: int) -> list[int]:
        """Roots of c2*y^2 + c1*y + c0 by exhaustive search, in element order."""
        if c2 == 0 and c1 == 0:
            if c0 == 0:
                raise DegenerateAllZero("0 = 0 has every element as a root")
            return []
        out = []
        for y in range(self.q):
            if self.add(self.mul(self.add(self.mul(c2, y), c1), y), c0) == 0:
                out.append(y)
        return out

    # ------------------------------------------------------ numpy vector paths
    def _require_tables(self):
        t = self._t
        if t is None:
            raise TooLarge(f"vectorized arithmetic needs q <= {TABLE_LIMIT}")
        return t

    def vadd(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.p == 2:
            return x ^ y
        t = self._require_tables()
        if t.add_np is not None:
            return t.add_np[x, y]
        return self._digit_add(x, y)

    def vneg(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.p == 2:
            return x
        return self._digit_add(np.zeros_like(x), x, -1)

    def vsub(self, x, y):
        if self.p == 2:
            return np.asarray(x, dtype=np.int64) ^ np.asarray(y, dtype=np.int64)
        return self.vadd(x, self.vneg(y))

    def vmul(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        t = self._require_tables()
        prod = t.exp_np[t.log_np[x] + t.log_np[y]]
        return np.where((x == 0) | (y == 0), 0, prod)

    def vinv(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise DivisionByZero("inverse of zero")
        t = self._require_tables()
        return t.exp_np[(self.q - 1 - t.log_np[x]) % (self.q - 1)]

    def vpoly(self, f, xs):
        """Evaluate the polynomial f (low degree first) at every entry of xs."""
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(f):
            acc = self.vadd(self.vmul(acc, xs), np.full_like(xs, c))
        return acc

    # ----------------------------------------------------------------- wrappers
    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise MixedFields("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.from_coeffs(value))
        return FieldElement(self, self.check(int(value)))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.q)]

    def to_dict(self) -> dict:
        return {"p": self.p, "a": self.a, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "FieldSpec":
        return cls(int(d["p"]), int(d["a"]), tuple(int(c) for c in d["modulus"]))


@lru_cache(maxsize=None)
def field_create(p: int, a: int) -> FieldSpec:
    """F_{p^a} with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if a < 1:
        raise ValueError("exponent a must be >= 1")
    if p ** a > MAX_ORDER:
        raise TooLarge(f"{p}^{a} exceeds 2^32")
    return FieldSpec(p, a, smallest_irreducible(p, a))


def field_of_order(q: int) -> FieldSpec:
    """F_q for a prime power q."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    a = 0
    n = q
    while n % p == 0:
        n //= p
        a += 1
    if n != 1:
        raise NotPrime(f"{q} is not a prime power")
    return field_create(p, a)


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldSpec with operator syntax."""

    spec: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.to_coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise MixedFields("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.spec, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.spec.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.spec.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.spec.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.spec.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.spec.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.spec.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.spec.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.spec.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __lt__(self, other: "FieldElement") -> bool:
        return self.value < other.value

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.value == 0:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("α" if i == 1 else f"α^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms)


def field_arith(op: str, *operands: FieldElement) -> FieldElement:
    """Dispatch one of add, sub, mul, div, inv, neg, pow on FieldElements."""
    if op == "pow":
        base, e = operands
        return base ** e
    specs = {x.spec for x in operands}
    if len(specs) != 1:
        raise MixedFields("operands belong to different fields")
    if op == "add":
        return operands[0] + operands[1]
    if op == "sub":
        return operands[0] - operands[1]
    if op == "mul":
        return operands[0] * operands[1]
    if op == "div":
        return operands[0] / operands[1]
    if op == "inv":
        return operands[0].inv()
    if op == "neg":
        return -operands[0]
    raise ValueError(f"unknown operation {op!r}")


def all_elements(spec: FieldSpec) -> list[FieldElement]:
    return spec.elements()


def solve_univariate_quadratic(c2: FieldElement, c1: FieldElement, c0: FieldElement) -> set[FieldElement]:
    spec = c2.spec
    if c1.spec != spec or c0.spec != spec:
        raise MixedFields("coefficients belong to different fields")
    return {FieldElement(spec, y) for y in spec.quadratic_roots(c2.value, c1.value, c0.value)}


def roots_of_unity(spec: FieldSpec, n: int) -> set[FieldElement]:
    return {FieldElement(spec, u) for u in unity_roots(spec, n)}


def unity_roots(spec: FieldSpec, n: int) -> list[int]:
    """Integer encodings of {u != 0 : u^n = 1}, in element order."""
    return [u for u in range(1, spec.q) if spec.pow(u, n) == 1]
