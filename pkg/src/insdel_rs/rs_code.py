"""Reed-Solomon codes: specification, encoding and Lagrange interpolation."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

from .errors import DuplicatePoint, FieldMismatch, InvalidCode
from .finite_field import FieldElement, FieldSpec


@dataclass(frozen=True)
class RSCodeSpec:
    """[n, k] RS code over ``field`` with evaluation points ``alphas``."""

    field: FieldSpec
    n: int
    k: int
    alphas: tuple[FieldElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        if len(self.alphas) != self.n:
            raise InvalidCode(f"expected {self.n} evaluation points, got {len(self.alphas)}")
        if self.k < 1:
            raise InvalidCode("dimension must be at least 1")
        if not 2 * self.k - 1 <= self.n <= self.field.order:
            raise InvalidCode(f"need 2k-1 <= n <= q, got k={self.k}, n={self.n}, q={self.field.order}")
        for a in self.alphas:
            if a.field != self.field:
                raise FieldMismatch("evaluation point outside the code's field")
        if len(set(self.alphas)) != self.n:
            raise InvalidCode("evaluation points must be pairwise distinct")

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "k": self.k,
            "alphas": [a.to_json() for a in self.alphas],
        }

    @classmethod
    def from_json(cls, obj: dict) -> RSCodeSpec:
        F = FieldSpec.from_json(obj["field"])
        return cls(F, int(obj["n"]), int(obj["k"]), tuple(F(a) for a in obj["alphas"]))


@dataclass(frozen=True)
class MessagePoly:
    """Coefficients (f_0, ..., f_{k-1}) of a message polynomial of degree < k."""

    coeffs: tuple[FieldElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def k(self) -> int:
        return len(self.coeffs)

    def __call__(self, x: FieldElement) -> FieldElement:
        acc = x.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def key(self) -> tuple:
        return tuple(c.coeffs for c in self.coeffs)

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, F: FieldSpec, obj: list) -> MessagePoly:
        return cls(tuple(F(c) for c in obj))


class RateReport(NamedTuple):
    rate: Fraction
    delta: Fraction
    half_singleton_rhs: Fraction


def encode(code: RSCodeSpec, f: MessagePoly) -> list[FieldElement]:
    """Codeword (f(alpha_1), ..., f(alpha_n))."""
    if f.k != code.k:
        raise ValueError(f"message has {f.k} coefficients, code dimension is {code.k}")
    for c in f.coeffs:
        if c.field != code.field:
            raise FieldMismatch("message coefficient outside the code's field")
    return [f(a) for a in code.alphas]


def interpolate(points: Sequence[tuple[FieldElement, FieldElement]], k: int) -> MessagePoly:
    """Unique polynomial of degree < k through exactly k points (Lagrange)."""
    if len(points) != k:
        raise ValueError(f"need exactly {k} points, got {len(points)}")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicatePoint("interpolation nodes must be distinct")
    F = xs[0].field
    coeffs = [F.zero] * k
    for i, (xi, yi) in enumerate(points):
        # basis polynomial prod_{j != i} (x - x_j), built in the coefficient domain
        basis = [F.one]
        denom = F.one
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = [F.zero] + basis
            for t in range(len(basis) - 1):
                basis[t] = basis[t] - xj * basis[t + 1]
            denom = denom * (xi - xj)
        scale = yi / denom
        for t in range(k):
            coeffs[t] = coeffs[t] + scale * basis[t]
    return MessagePoly(tuple(coeffs))


def correction_radius(code: RSCodeSpec) -> int:
    return code.n - 2 * code.k + 1


def rate_report(code: RSCodeSpec) -> RateReport:
    rate = Fraction(code.k, code.n)
    delta = Fraction(correction_radius(code), code.n)
    return RateReport(rate, delta, (1 - delta) / 2)


def random_message(code: RSCodeSpec, rng: random.Random) -> MessagePoly:
    return MessagePoly(tuple(code.field.random_element(rng) for _ in range(code.k)))


def all_messages(code: RSCodeSpec) -> Iterator[MessagePoly]:
    F = code.field
    for idx in itertools.product(range(F.order), repeat=code.k):
        yield MessagePoly(tuple(F.from_int(i) for i in idx))
