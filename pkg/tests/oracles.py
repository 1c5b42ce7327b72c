"""Reference implementations the package is checked against.

Each one is written from the definition, without reusing the package's
shortcuts.
"""

import itertools

from insdel_rs.constructions import span
from insdel_rs.finite_field import make_prime_field
from insdel_rs.rs_code import RSCodeSpec


def insdel_distance(s, t):
    """Direct recurrence over insertions and deletions, no LCS involved."""
    prev = list(range(len(t) + 1))
    for i in range(1, len(s) + 1):
        cur = [i] + [0] * len(t)
        for j in range(1, len(t) + 1):
            if s[i - 1] == t[j - 1]:
                cur[j] = prev[j - 1]
            else:
                cur[j] = 1 + min(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def sidon_by_grouping(basis):
    """Group all products of nonzero elements and compare the factor lines."""
    F = basis[0].field
    elems = [e for e in span(basis) if e]

    def line(e):
        return frozenset((e * c).coeffs for c in range(1, F.p))

    groups = {}
    for a in elems:
        for b in elems:
            groups.setdefault((a * b).coeffs, set()).add(frozenset((line(a), line(b))))
    return all(len(g) == 1 for g in groups.values())


def independent_combinations(vectors, p=3):
    """Every nontrivial F_p-combination of the coefficient vectors is nonzero."""
    for co in itertools.product(range(p), repeat=len(vectors)):
        if any(co):
            s = [sum(c * v[i] for c, v in zip(co, vectors)) % p for i in range(len(vectors[0]))]
            if not any(s):
                return False
    return True


def consecutive_code(p=7, n=5, k=2):
    """alpha = (1, ..., n) over F_p: the standard failing example."""
    F = make_prime_field(p)
    return RSCodeSpec(F, n, k, tuple(F(i) for i in range(1, n + 1)))
