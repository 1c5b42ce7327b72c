"""Ternary parity-check matrices with every four columns linearly independent.

Such a 2m x (3^m + 1)/2 matrix checks a code of minimum distance at least 5.
The columns are found by seeded backtracking: a new column is admissible when
it avoids the span of every three chosen columns.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from ..errors import PreconditionError, SearchExhausted
from ..finite_field import rank_mod_p

P = 3

# backtracking nodes per seeded column order before reshuffling
_NODE_BUDGET = 200_000
_RESTARTS = 50


@dataclass(frozen=True)
class ParityMatrix:
    """Row-major 2m x n matrix over F_3."""

    m: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, m: int, rows: list[list[int]]) -> ParityMatrix:
        return cls(m, tuple(tuple(int(x) % P for x in r) for r in rows))


def code_length(m: int) -> int:
    return (3**m + 1) // 2


def every_t_columns_independent(columns: Sequence[Sequence[int]], t: int = 4, p: int = P) -> bool:
    """Exhaustive rank check over all t-subsets (all columns if fewer than t)."""
    t = min(t, len(columns))
    return all(rank_mod_p(list(sub), p) == t for sub in itertools.combinations(columns, t))


def _canonical(v: Sequence[int]) -> tuple[int, ...] | None:
    for x in v:
        if x:
            inv = pow(x, -1, P)
            return tuple(c * inv % P for c in v)
    return None


def _new_forbidden(chosen: list[tuple[int, ...]], new: tuple[int, ...]) -> set:
    # lines spanned by `new` together with up to two chosen columns
    out = set()
    for t in range(3):
        for others in itertools.combinations(chosen, t):
            for coefs in itertools.product(range(1, P), repeat=t):
                s = list(new)
                for c, col in zip(coefs, others):
                    s = [(a + c * b) % P for a, b in zip(s, col)]
                line = _canonical(s)
                if line is not None:
                    out.add(line)
    return out


def _backtrack(order, n, budget):
    nodes = 0

    def rec(chosen, forbidden, start):
        nonlocal nodes
        nodes += 1
        if len(chosen) == n:
            return chosen
        if nodes > budget:
            return None
        for i in range(start, len(order)):
            v = order[i]
            if v in forbidden:
                continue
            found = rec(chosen + [v], forbidden | _new_forbidden(chosen, v), i + 1)
            if found:
                return found
        return None

    return rec([], set(), 0)


def construct_parity_check(m: int, seed: int = 0) -> ParityMatrix:
    if not 1 <= m <= 3:
        raise PreconditionError("m must be in 1..3 at this scale")
    r, n = 2 * m, code_length(m)
    lines = [v for v in itertools.product(range(P), repeat=r) if _canonical(v) == v]
    rng = random.Random(f"parity:{m}:{seed}")
    for _ in range(_RESTARTS):
        order = lines[:]
        rng.shuffle(order)
        cols = _backtrack(order, n, _NODE_BUDGET)
        if cols and every_t_columns_independent(cols):
            rows = tuple(tuple(c[i] for c in cols) for i in range(r))
            return ParityMatrix(m, rows)
    raise SearchExhausted(f"no {r} x {n} ternary matrix with 4-wise independent columns found")
