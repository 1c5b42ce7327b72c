"""Prime fields, explicit extension fields and the polynomial ring F_p[x].

Extension field elements are coefficient vectors reduced modulo a stored monic
irreducible polynomial; there are no log tables.  ``RingPoly`` is the
un-reduced ring F_p[x], used directly when a computation must be certified in
the ring rather than in a concrete extension.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    CharacteristicMismatch,
    CompositeCharacteristic,
    DivisionByZero,
    FieldMismatch,
    NotMonic,
    ReducibleModulus,
)

#: Degree of the zero polynomial.
NEG_INF = float("-inf")

# below this many coefficients schoolbook beats packing into big integers
_KRONECKER_THRESHOLD = 24

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division for n < 2**32, otherwise Miller-Rabin with the first twelve
    prime bases, which is exact for n < 3.3e24.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    if n < 1 << 32:
        for f in range(3, math.isqrt(n) + 1, 2):
            if n % f == 0:
                return False
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    c = n + 1
    while not is_prime(c):
        c += 1
    return c


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n in increasing order."""
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


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p**d; raises CompositeCharacteristic if q is not a prime power."""
    if q < 2:
        raise CompositeCharacteristic(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise CompositeCharacteristic(f"{q} is not a prime power")
    p = fs[0]
    d = 0
    while q > 1:
        q //= p
        d += 1
    return p, d


# ---------------------------------------------------------------------------
# coefficient-list helpers (little endian, reduced mod p)


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _kronecker_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    # pack into one integer per operand, let CPython's Karatsuba do the work
    bound = min(len(a), len(b)) * (p - 1) ** 2
    w = max(1, (bound.bit_length() + 7) // 8)
    A = int.from_bytes(b"".join(c.to_bytes(w, "little") for c in a), "little")
    B = int.from_bytes(b"".join(c.to_bytes(w, "little") for c in b), "little")
    n = len(a) + len(b) - 1
    raw = (A * B).to_bytes(w * n, "little")
    return [int.from_bytes(raw[i * w:(i + 1) * w], "little") % p for i in range(n)]


def _mul_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) >= _KRONECKER_THRESHOLD:
        return _trim(_kronecker_mul(a, b, p))
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim([c % p for c in out])


def _divmod_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _trim(r)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            off = i - db
            for j in range(db + 1):
                r[off + j] -= c * b[j]
    return _trim(q), _trim([c % p for c in r[:db]])


def _gcd_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod_coeffs(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _sub_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _powmod_coeffs(base: list[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _divmod_coeffs(base, mod, p)[1]
    while e:
        if e & 1:
            result = _divmod_coeffs(_mul_coeffs(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _divmod_coeffs(_mul_coeffs(base, base, p), mod, p)[1]
    return result


# ---------------------------------------------------------------------------


class RingPoly:
    """Element of F_p[x]: normalized little-endian coefficient tuple, no modulus."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        self.p = p
        self.coeffs = tuple(_trim([int(c) % p for c in coeffs]))

    @classmethod
    def _raw(cls, p: int, coeffs: list[int]) -> RingPoly:
        obj = cls.__new__(cls)
        obj.p = p
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, p: int) -> RingPoly:
        return cls._raw(p, [0, 1])

    @classmethod
    def constant(cls, p: int, c: int) -> RingPoly:
        return cls(p, [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _coerce(self, other) -> RingPoly:
        if isinstance(other, RingPoly):
            if other.p != self.p:
                raise CharacteristicMismatch(f"characteristics {self.p} and {other.p} differ")
            return other
        if isinstance(other, int):
            return RingPoly(self.p, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        p = self.p
        out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
        return RingPoly._raw(p, _trim(out))

    __radd__ = __add__

    def __neg__(self):
        return RingPoly._raw(self.p, [(-c) % self.p for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingPoly._raw(self.p, _sub_coeffs(self.coeffs, other.coeffs, self.p))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingPoly._raw(self.p, _mul_coeffs(self.coeffs, other.coeffs, self.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent in a polynomial ring")
        result = RingPoly._raw(self.p, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        q, r = _divmod_coeffs(self.coeffs, other.coeffs, self.p)
        return RingPoly._raw(self.p, q), RingPoly._raw(self.p, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other) -> RingPoly:
        """Quotient of an exact division; raises ArithmeticError on a remainder."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division is not exact")
        return q

    def __call__(self, point):
        return ring_eval(self, point)

    def __eq__(self, other):
        if isinstance(other, RingPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == RingPoly(self.p, [other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __getstate__(self):
        return (self.p, self.coeffs)

    def __setstate__(self, state):
        self.p, self.coeffs = state

    def __repr__(self):
        if not self.coeffs:
            return f"RingPoly(p={self.p}, 0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1 and mono:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return f"RingPoly(p={self.p}, {' + '.join(terms)})"


def ring_add(f: RingPoly, g: RingPoly) -> RingPoly:
    return f + g


def ring_mul(f: RingPoly, g: RingPoly) -> RingPoly:
    return f * g


def ring_degree(f: RingPoly):
    """Degree of f; ``NEG_INF`` for the zero polynomial."""
    return f.degree


def ring_gcd(f: RingPoly, g: RingPoly) -> RingPoly:
    """Monic gcd (zero if both inputs are zero)."""
    if f.p != g.p:
        raise CharacteristicMismatch(f"characteristics {f.p} and {g.p} differ")
    return RingPoly._raw(f.p, _gcd_coeffs(f.coeffs, g.coeffs, f.p))


def ring_eval(f: RingPoly, point):
    """Evaluate f at an integer (mod p) or at an element of a field of characteristic p."""
    if isinstance(point, FieldElement):
        if point.field.p != f.p:
            raise CharacteristicMismatch("evaluation point has a different characteristic")
        acc = point.field.zero
        for c in reversed(f.coeffs):
            acc = acc * point + c
        return acc
    acc = 0
    for c in reversed(f.coeffs):
        acc = (acc * point + c) % f.p
    return acc


def is_irreducible(f: RingPoly) -> bool:
    """Rabin's test: x^(p^d) = x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for primes r | d."""
    d = f.degree
    if d == NEG_INF or d < 1:
        return False
    if d == 1:
        return True
    p = f.p
    mod = f.coeffs
    if mod[-1] != 1:
        inv = pow(mod[-1], -1, p)
        mod = tuple(c * inv % p for c in mod)
    x = [0, 1]
    # frob[i] = x^(p^i) mod f
    frob = [x]
    for _ in range(d):
        frob.append(_powmod_coeffs(frob[-1], p, mod, p))
    if _sub_coeffs(frob[d], x, p):
        return False
    for r in prime_factors(d):
        h = _sub_coeffs(frob[d // r], x, p)
        if len(_gcd_coeffs(h, mod, p)) != 1:
            return False
    return True


def find_irreducible(p: int, d: int, seed: int = 0) -> RingPoly:
    """Monic irreducible polynomial of degree d over F_p.

    Candidates are drawn from ``random.Random(seed)``; the result is a pure
    function of (p, d, seed).
    """
    if not is_prime(p):
        raise CompositeCharacteristic(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be at least 1")
    rng = random.Random(f"irreducible:{p}:{d}:{seed}")
    while True:
        coeffs = [rng.randrange(p) for _ in range(d)] + [1]
        if d > 1 and coeffs[0] == 0:
            continue
        f = RingPoly._raw(p, coeffs)
        if is_irreducible(f):
            return f


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """F_p (d == 1) or F_p[x]/(modulus) with a monic irreducible modulus of degree d."""

    p: int
    d: int = 1
    modulus: tuple[int, ...] | None = None
    # (d - 1) rows: x^(d + t) mod modulus, used to fold products
    _fold: tuple[tuple[int, ...], ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.d > 1:
            mod = self.modulus
            rows = []
            cur = [(-c) % self.p for c in mod[:-1]]  # x^d
            for _ in range(self.d - 1):
                rows.append(tuple(cur))
                # multiply by x and reduce
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    cur = [(cur[i] - top * mod[i]) % self.p for i in range(self.d)]
            object.__setattr__(self, "_fold", tuple(rows))

    @property
    def order(self) -> int:
        return self.p ** self.d

    @property
    def zero(self) -> FieldElement:
        return FieldElement._raw(self, (0,) * self.d)

    @property
    def one(self) -> FieldElement:
        return FieldElement._raw(self, (1,) + (0,) * (self.d - 1))

    @property
    def gen(self) -> FieldElement:
        """The class of x in F_p[x]/(modulus)."""
        if self.d == 1:
            raise ValueError("a prime field has no adjoined generator")
        return FieldElement._raw(self, (0, 1) + (0,) * (self.d - 2))

    def __call__(self, value) -> FieldElement:
        """Constant embedding of an int, or an element from its coefficient vector."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, int):
            return FieldElement._raw(self, (value % self.p,) + (0,) * (self.d - 1))
        if isinstance(value, RingPoly):
            if value.p != self.p:
                raise CharacteristicMismatch("polynomial has a different characteristic")
            if self.d > 1:
                value = value % RingPoly._raw(self.p, list(self.modulus))
            elif value.degree > 0:
                raise ValueError("only constant polynomials embed into a prime field")
            value = value.coeffs
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.d:
            raise ValueError(f"expected at most {self.d} coefficients, got {len(coeffs)}")
        coeffs += [0] * (self.d - len(coeffs))
        return FieldElement._raw(self, tuple(coeffs))

    def from_int(self, index: int) -> FieldElement:
        """Element whose base-p digits (least significant first) are its coefficients."""
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} outside [0, {self.order})")
        coeffs = []
        for _ in range(self.d):
            index, r = divmod(index, self.p)
            coeffs.append(r)
        return FieldElement._raw(self, tuple(coeffs))

    def elements(self) -> Iterator[FieldElement]:
        for i in range(self.order):
            yield self.from_int(i)

    def random_element(self, rng: random.Random) -> FieldElement:
        return self.from_int(rng.randrange(self.order))

    def to_json(self) -> dict:
        return {"p": self.p, "d": self.d, "modulus": list(self.modulus) if self.modulus else None}

    @classmethod
    def from_json(cls, obj: dict) -> FieldSpec:
        p, d = int(obj["p"]), int(obj.get("d", 1))
        mod = obj.get("modulus")
        if d == 1:
            return make_prime_field(p)
        if mod is None:
            raise ValueError("extension field without modulus")
        return make_extension_field(p, RingPoly(p, mod))

    def __repr__(self):
        if self.d == 1:
            return f"FieldSpec(p={self.p})"
        return f"FieldSpec(p={self.p}, d={self.d}, modulus={list(self.modulus)})"

    # raw tuple arithmetic, shared by FieldElement and the batch code paths
    def _mul(self, a: tuple, b: tuple) -> tuple:
        p, d = self.p, self.d
        if d == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        res = prod[:d]
        for t, row in enumerate(self._fold):
            c = prod[d + t]
            if c:
                for j, r in enumerate(row):
                    res[j] += c * r
        return tuple(c % p for c in res)

    def _inv(self, a: tuple) -> tuple:
        p = self.p
        if self.d == 1:
            if a[0] == 0:
                raise DivisionByZero("inverse of zero")
            return (pow(a[0], -1, p),)
        # extended Euclid in F_p[x]
        r0, r1 = list(self.modulus), _trim(list(a))
        if not r1:
            raise DivisionByZero("inverse of zero")
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, r = _divmod_coeffs(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _sub_coeffs(s0, _mul_coeffs(q, s1, p), p)
        inv = pow(r1[0], -1, p)
        s = [c * inv % p for c in s1]
        return tuple(s + [0] * (self.d - len(s)))


def make_prime_field(p: int) -> FieldSpec:
    if not is_prime(p):
        raise CompositeCharacteristic(f"{p} is not prime")
    return FieldSpec(p, 1, None)


def make_extension_field(p: int, mu: RingPoly) -> FieldSpec:
    """F_p[x]/(mu); a degree-1 modulus yields the prime field itself."""
    if not is_prime(p):
        raise CompositeCharacteristic(f"{p} is not prime")
    if mu.p != p:
        raise CharacteristicMismatch("modulus has a different characteristic")
    if not mu.is_monic():
        raise NotMonic("modulus must be monic")
    if not is_irreducible(mu):
        raise ReducibleModulus(f"{mu} is reducible over F_{p}")
    if mu.degree == 1:
        return FieldSpec(p, 1, None)
    return FieldSpec(p, mu.degree, mu.coeffs)


class FieldElement:
    """Element of a ``FieldSpec``: immutable coefficient tuple of length d."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fieldspec: FieldSpec, coeffs: Sequence[int]):
        el = fieldspec(list(coeffs))
        self.field = el.field
        self.coeffs = el.coeffs

    @classmethod
    def _raw(cls, fieldspec: FieldSpec, coeffs: tuple) -> FieldElement:
        obj = cls.__new__(cls)
        obj.field = fieldspec
        obj.coeffs = coeffs
        return obj

    def _other(self, other) -> tuple:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.coeffs
        if isinstance(other, int):
            return (other % self.field.p,) + (0,) * (self.field.d - 1)
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        p = self.field.p
        return FieldElement._raw(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, b)))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        p = self.field.p
        return FieldElement._raw(self.field, tuple((x - y) % p for x, y in zip(self.coeffs, b)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.field.p
        return FieldElement._raw(self.field, tuple((-x) % p for x in self.coeffs))

    def __mul__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement._raw(self.field, self.field._mul(self.coeffs, b))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        return FieldElement._raw(self.field, self.field._inv(self.coeffs))

    def __truediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement._raw(self.field, self.field._mul(self.coeffs, self.field._inv(b)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = self.field.one
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, int):
            return self.coeffs == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_int(self) -> int:
        """Inverse of ``FieldSpec.from_int``."""
        v = 0
        for c in reversed(self.coeffs):
            v = v * self.field.p + c
        return v

    def to_poly(self) -> RingPoly:
        return RingPoly(self.field.p, self.coeffs)

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __getstate__(self):
        return (self.field, self.coeffs)

    def __setstate__(self, state):
        self.field, self.coeffs = state

    def __repr__(self):
        if self.field.d == 1:
            return f"F{self.field.p}({self.coeffs[0]})"
        return f"F{self.field.p}^{self.field.d}{list(self.coeffs)}"


def _check_same(a: FieldElement, b: FieldElement):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a + b


def fe_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a - b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return a * b


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_pow(a: FieldElement, e: int) -> FieldElement:
    return a ** e


# ---------------------------------------------------------------------------
# linear algebra over F_p


def row_echelon_mod_p(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over F_p; returns (nonzero rows, pivot columns)."""
    m = [[c % p for c in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(row_echelon_mod_p(rows, p)[1])


def nullspace_mod_p(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> list[list[int]]:
    """Basis of {v : M v = 0} over F_p."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_echelon_mod_p(rows, p) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# batched arithmetic on int64 arrays of shape (..., d)


def to_array(elements: Sequence[FieldElement]) -> np.ndarray:
    if not elements:
        return np.zeros((0, 1), dtype=np.int64)
    return np.array([e.coeffs for e in elements], dtype=np.int64)


def batch_add(F: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return (A + B) % F.p


def batch_sub(F: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return (A - B) % F.p


def batch_mul(F: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Elementwise product of broadcastable coefficient arrays."""
    p, d = F.p, F.d
    if d == 1:
        return (A * B) % p
    A, B = np.broadcast_arrays(A, B)
    prod = np.zeros(A.shape[:-1] + (2 * d - 1,), dtype=np.int64)
    for i in range(d):
        prod[..., i:i + d] += A[..., i:i + 1] * B
    prod %= p
    res = prod[..., :d] + prod[..., d:] @ np.array(F._fold, dtype=np.int64)
    return res % p


def encode_array(F: FieldSpec, A: np.ndarray) -> np.ndarray:
    """Integer index of every element (same convention as ``FieldElement.to_int``)."""
    weights = F.p ** np.arange(F.d, dtype=np.int64)
    return A @ weights
