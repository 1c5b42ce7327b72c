"""LCS, insertion/deletion edit distance, and edit scripts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Any, Callable, Hashable, Iterator, Sequence, Union

from .errors import BudgetTooLarge, PositionOutOfRange

DEFAULT_ENUMERATION_CAP = 10**7


@dataclass(frozen=True)
class Delete:
    pos: int

    def to_json(self, encode_symbol=None) -> dict:
        return {"op": "del", "pos": self.pos}


@dataclass(frozen=True)
class Insert:
    pos: int
    sym: Any

    def to_json(self, encode_symbol: Callable[[Any], Any] | None = None) -> dict:
        sym = encode_symbol(self.sym) if encode_symbol else self.sym
        return {"op": "ins", "pos": self.pos, "sym": sym}


EditOp = Union[Delete, Insert]
EditScript = tuple  # tuple[EditOp, ...]


def lcs(s: Sequence[Hashable], t: Sequence[Hashable]) -> int:
    """Length of a longest common subsequence (two-row dynamic program)."""
    if len(t) > len(s):
        s, t = t, s
    if not t:
        return 0
    prev = [0] * (len(t) + 1)
    for a in s:
        cur = [0]
        for j, b in enumerate(t):
            if a == b:
                cur.append(prev[j] + 1)
            else:
                cur.append(cur[j] if cur[j] > prev[j + 1] else prev[j + 1])
        prev = cur
    return prev[-1]


def edit_distance(s: Sequence[Hashable], t: Sequence[Hashable]) -> int:
    """Minimum number of insertions plus deletions turning s into t."""
    return len(s) + len(t) - 2 * lcs(s, t)


def apply_edits(s: Sequence, script: Sequence[EditOp]) -> list:
    """Apply operations in order; positions refer to the current string."""
    out = list(s)
    for op in script:
        if isinstance(op, Delete):
            if not 0 <= op.pos < len(out):
                raise PositionOutOfRange(f"delete at {op.pos} in a string of length {len(out)}")
            del out[op.pos]
        elif isinstance(op, Insert):
            if not 0 <= op.pos <= len(out):
                raise PositionOutOfRange(f"insert at {op.pos} in a string of length {len(out)}")
            out.insert(op.pos, op.sym)
        else:
            raise TypeError(f"unknown edit operation {op!r}")
    return out


def count_edit_scripts(length: int, budget: int, alphabet_size: int) -> int:
    """Number of canonical scripts ``enumerate_edit_scripts`` would produce."""
    total = 0
    for b in range(budget + 1):
        for d in range(min(b, length) + 1):
            i = b - d
            m = length - d
            total += comb(length, d) * comb(m + i, i) * alphabet_size**i
    return total


def enumerate_edit_scripts(
    s: Sequence,
    budget: int,
    alphabet: Sequence,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[EditScript]:
    """Every canonical script with at most ``budget`` operations.

    Canonical form: deletions first, in decreasing position order (so each
    position is also an index into ``s``), then insertions left to right.
    Ordered by total size, then by number of deletions.
    """
    if budget < 0:
        raise ValueError("budget must be non-negative")
    alphabet = list(alphabet)
    n = len(s)
    size = count_edit_scripts(n, budget, len(alphabet))
    if size > cap:
        raise BudgetTooLarge(f"{size} scripts exceed the enumeration cap {cap}")
    for b in range(budget + 1):
        for d in range(min(b, n) + 1):
            i = b - d
            m = n - d
            for dels in itertools.combinations(range(n), d):
                del_ops = tuple(Delete(p) for p in reversed(dels))
                for gaps in itertools.combinations_with_replacement(range(m + 1), i):
                    for syms in itertools.product(alphabet, repeat=i):
                        ins_ops = tuple(Insert(g + t, a) for t, (g, a) in enumerate(zip(gaps, syms)))
                        yield del_ops + ins_ops


def script_to_json(script: Sequence[EditOp], encode_symbol=None) -> list[dict]:
    return [op.to_json(encode_symbol) for op in script]


def script_from_json(obj: list[dict], decode_symbol=None) -> EditScript:
    ops = []
    for item in obj:
        if item["op"] == "del":
            ops.append(Delete(int(item["pos"])))
        elif item["op"] == "ins":
            sym = decode_symbol(item["sym"]) if decode_symbol else item["sym"]
            ops.append(Insert(int(item["pos"]), sym))
        else:
            raise ValueError(f"unknown op {item['op']!r}")
    return tuple(ops)
