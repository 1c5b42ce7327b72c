"""Non-singularity criterion for insdel correction.

For increasing index vectors I, J of length 2k-1 the matrix V_{I,J}(alpha) has
row r equal to

    (1, a_r, ..., a_r^(k-1), b_r, ..., b_r^(k-1)),   a_r = alpha_{I_r}, b_r = alpha_{J_r}.

If it is nonsingular for every pair agreeing on at most k-1 coordinates, no two
distinct codewords share a common subsequence of length 2k-1, and the code
corrects n-2k+1 insertions and deletions.

Index vectors are 1-based throughout, matching how codeword coordinates are
usually numbered.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .errors import (
    DegreeOverflow,
    DimensionTooLarge,
    IndexOutOfRange,
    LengthMismatch,
    PreconditionError,
)
from .finite_field import FieldElement, RingPoly
from .rs_code import RSCodeSpec

IncreasingVector = tuple  # tuple[int, ...], strictly increasing, 1-based
Monomial = tuple  # sorted ((variable, exponent), ...)
SymbolicPoly = dict  # {Monomial: int}

SYMBOLIC_MAX_K = 3


@dataclass
class VerificationReport:
    verdict: str
    pairs_checked: int
    first_failure: tuple[IncreasingVector, IncreasingVector] | None = None
    ms: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        ff = None
        if self.first_failure is not None:
            ff = {"I": list(self.first_failure[0]), "J": list(self.first_failure[1])}
        return {"verdict": self.verdict, "pairs_checked": self.pairs_checked, "first_failure": ff, "ms": self.ms}


# ---------------------------------------------------------------------------
# index vectors


def increasing_vectors(n: int, s: int) -> Iterator[IncreasingVector]:
    """All C(n, s) strictly increasing vectors over [1, n], lexicographic."""
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got s={s}, n={n}")
    return itertools.combinations(range(1, n + 1), s)


def agreement_count(I: Sequence[int], J: Sequence[int]) -> int:
    if len(I) != len(J):
        raise LengthMismatch(f"lengths {len(I)} and {len(J)} differ")
    return sum(1 for a, b in zip(I, J) if a == b)


def find_disjoint_pair(I: Sequence[int], J: Sequence[int]) -> tuple[int, int]:
    """Coordinates i != j (1-based) with I_i not in J and J_j not in I.

    Requires len >= 2 and no agreeing coordinate.  The coordinate whose entry is
    the smaller of I_1, J_1 is always a valid choice on its side.
    """
    if len(I) != len(J):
        raise LengthMismatch(f"lengths {len(I)} and {len(J)} differ")
    if len(I) < 2 or agreement_count(I, J) != 0:
        raise PreconditionError("need two vectors of length >= 2 that agree nowhere")
    sJ, sI = set(J), set(I)
    only_i = [c for c, v in enumerate(I, 1) if v not in sJ]
    only_j = [c for c, v in enumerate(J, 1) if v not in sI]
    if I[0] < J[0]:
        i = 1
        j = next((c for c in only_j if c != i), None)
        if j is not None:
            return i, j
    else:
        j = 1
        i = next((c for c in only_i if c != j), None)
        if i is not None:
            return i, j
    for i in only_i:
        for j in only_j:
            if i != j:
                return i, j
    raise PreconditionError("no disjoint pair exists")  # excluded by the hypotheses


def qualifying_pairs(n: int, k: int) -> Iterator[tuple[IncreasingVector, IncreasingVector]]:
    """Pairs I < J (lexicographic) of length 2k-1 agreeing on at most k-1 coordinates.

    (J, I) is skipped once (I, J) is listed: swapping the two column blocks
    changes the determinant by a sign only.
    """
    vecs = list(increasing_vectors(n, 2 * k - 1))
    for a, I in enumerate(vecs):
        for J in vecs[a + 1:]:
            if agreement_count(I, J) <= k - 1:
                yield I, J


# ---------------------------------------------------------------------------
# matrices and determinants


def build_matrix(alphas: Sequence, I: Sequence[int], J: Sequence[int], k: int) -> list[list]:
    """V_{I,J}(alpha) with entries in the domain of ``alphas`` (field or ring)."""
    s = 2 * k - 1
    if len(I) != s or len(J) != s:
        raise LengthMismatch(f"index vectors must have length {s}")
    n = len(alphas)
    for v in itertools.chain(I, J):
        if not 1 <= v <= n:
            raise IndexOutOfRange(f"index {v} outside [1, {n}]")
    one = alphas[0] ** 0
    rows = []
    for a, b in zip(I, J):
        x, y = alphas[a - 1], alphas[b - 1]
        row = [one]
        for e in range(1, k):
            row.append(x**e)
        for e in range(1, k):
            row.append(y**e)
        rows.append(row)
    return rows


def _det_field(M: list[list[FieldElement]]) -> FieldElement:
    # Gaussian elimination with exact inverses
    m = [list(r) for r in M]
    n = len(m)
    F = m[0][0].field
    det = F.one
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return F.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        pv = m[c][c]
        det = det * pv
        inv = pv.inverse()
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def _det_ring(M: list[list[RingPoly]]) -> RingPoly:
    # fraction-free Bareiss elimination; every division is exact in F_p[x]
    m = [list(r) for r in M]
    n = len(m)
    p = m[0][0].p
    sign = 1
    prev = RingPoly(p, [1])
    for c in range(n - 1):
        piv = next((r for r in range(c, n) if not m[r][c].is_zero()), None)
        if piv is None:
            return RingPoly(p, [])
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for r in range(c + 1, n):
            for t in range(c + 1, n):
                num = m[c][c] * m[r][t] - m[r][c] * m[c][t]
                m[r][t] = num if prev.degree == 0 and prev.coeffs == (1,) else num.divexact(prev)
            m[r][c] = RingPoly(p, [])
        prev = m[c][c]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _det_symbolic(M: list[list[SymbolicPoly]]) -> SymbolicPoly:
    # Leibniz expansion over all permutations
    n = len(M)
    out: SymbolicPoly = {}
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        terms = {(): sign}
        for r, c in enumerate(perm):
            terms = _poly_mul(terms, M[r][c])
            if not terms:
                break
        for mono, coef in terms.items():
            v = out.get(mono, 0) + coef
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def determinant(M: Sequence[Sequence]):
    """Exact determinant in the entry domain (field, F_p[x], or symbolic)."""
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("matrix must be square")
    e = M[0][0]
    if isinstance(e, FieldElement):
        return _det_field(M)
    if isinstance(e, RingPoly):
        return _det_ring(M)
    if isinstance(e, dict):
        return _det_symbolic(M)
    raise TypeError(f"unsupported entry type {type(e).__name__}")


def singular_k2(x1, x2, x3, y1, y2, y3) -> bool:
    """k = 2 test: the 3x3 matrix is singular iff (y1-y2)(x2-x3) = (y2-y3)(x1-x2)."""
    return (y1 - y2) * (x2 - x3) == (y2 - y3) * (x1 - x2)


# ---------------------------------------------------------------------------
# symbolic determinants


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _poly_mul(f: SymbolicPoly, g: SymbolicPoly) -> SymbolicPoly:
    out: SymbolicPoly = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = _mono_mul(m1, m2)
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _var_power(var: int, e: int) -> SymbolicPoly:
    return {((var, e),): 1} if e else {(): 1}


def symbolic_matrix(I: Sequence[int], J: Sequence[int], k: int) -> list[list[SymbolicPoly]]:
    """V_{I,J}(X) over Z[X_1, ..., X_n]."""
    return [
        [_var_power(a, 0)] + [_var_power(a, e) for e in range(1, k)] + [_var_power(b, e) for e in range(1, k)]
        for a, b in zip(I, J)
    ]


def symbolic_determinant(I: Sequence[int], J: Sequence[int], k: int) -> SymbolicPoly:
    """Integer-coefficient expansion of det V_{I,J}(X); monomials are sorted (var, exp) tuples."""
    if k > SYMBOLIC_MAX_K:
        raise DimensionTooLarge(f"symbolic expansion is limited to k <= {SYMBOLIC_MAX_K}")
    if len(I) != 2 * k - 1 or len(J) != 2 * k - 1:
        raise LengthMismatch(f"index vectors must have length {2 * k - 1}")
    return _det_symbolic(symbolic_matrix(I, J, k))


def substitute(poly: SymbolicPoly, alphas: Sequence[FieldElement]) -> FieldElement:
    """Evaluate a symbolic polynomial at X_v = alphas[v - 1]."""
    F = alphas[0].field
    acc = F.zero
    for mono, coef in poly.items():
        term = F(coef)
        for v, e in mono:
            term = term * alphas[v - 1] ** e
        acc = acc + term
    return acc


def unique_monomial(I: Sequence[int], J: Sequence[int], k: int) -> Monomial:
    """Monomial of det V_{I,J}(X) reached by exactly one permutation.

    Peels off rows i, j carrying X_{I_i}^(k-1) X_{J_j}^(k-1) and recurses on
    the remaining (2k-3)-square minor, where the pair still agrees on at most
    k-2 coordinates.
    """
    I, J = list(I), list(J)
    if agreement_count(I, J) > k - 1:
        raise PreconditionError("pair agrees on more than k-1 coordinates")
    mono: Monomial = ()
    while k > 1:
        agree = [c for c in range(len(I)) if I[c] == J[c]]
        if agree:
            j = agree[0]
            sJ = set(J)
            i = next(c for c in range(len(I)) if I[c] not in sJ)
        else:
            i, j = find_disjoint_pair(I, J)
            i, j = i - 1, j - 1
        mono = _mono_mul(mono, ((I[i], k - 1),))
        mono = _mono_mul(mono, ((J[j], k - 1),))
        I = [v for c, v in enumerate(I) if c not in (i, j)]
        J = [v for c, v in enumerate(J) if c not in (i, j)]
        k -= 1
    return tuple((v, e) for v, e in mono if e)


# ---------------------------------------------------------------------------
# exhaustive verification


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("INSDEL_RS_JOBS", "1")))
    except ValueError:
        return 1


def _chunks(count: int, jobs: int) -> list[tuple[int, int]]:
    # several chunks per worker so fail-fast does not wait on one long tail
    nchunks = max(1, min(count, jobs * 4))
    step = -(-count // nchunks)
    return [(a, min(a + step, count)) for a in range(0, count, step)]


def _scan(vecs, lo, hi, agree, is_singular, full):
    checked = 0
    failures = []
    for a in range(lo, hi):
        I = vecs[a]
        for J in vecs[a + 1:]:
            if agreement_count(I, J) != agree:
                continue
            checked += 1
            if is_singular(I, J):
                failures.append((I, J))
                if not full:
                    return checked, failures
    return checked, failures


class _FieldChecker:
    def __init__(self, alphas, k, fast_path):
        self.k = k
        self.fast = fast_path and k == 2
        self.alphas = alphas
        # powers[i][e] = alpha_{i+1}^e
        self.powers = [[a**e for e in range(k)] for a in alphas]

    def __call__(self, I, J):
        if self.fast:
            x1, x2, x3 = (self.alphas[i - 1] for i in I)
            y1, y2, y3 = (self.alphas[j - 1] for j in J)
            return singular_k2(x1, x2, x3, y1, y2, y3)
        k = self.k
        rows = [
            self.powers[a - 1][:k] + self.powers[b - 1][1:k]
            for a, b in zip(I, J)
        ]
        return _det_field(rows).is_zero()


class _RingChecker:
    def __init__(self, alphas, k, degree_bound):
        self.k = k
        self.degree_bound = degree_bound
        self.powers = [[a**e for e in range(k)] for a in alphas]

    def __call__(self, I, J):
        k = self.k
        rows = [self.powers[a - 1][:k] + self.powers[b - 1][1:k] for a, b in zip(I, J)]
        det = _det_ring(rows)
        if det.degree >= self.degree_bound:
            raise DegreeOverflow(
                f"det V_{{{I},{J}}} has degree {det.degree} >= bound {self.degree_bound}"
            )
        return det.is_zero()


def _scan_task(args):
    vecs, lo, hi, agree, checker, full = args
    return _scan(vecs, lo, hi, agree, checker, full)


def _run_verification(n, k, checker, full, jobs, deterministic) -> VerificationReport:
    # Scan order: pairs agreeing nowhere first, then agreement 1, ..., k-1;
    # lexicographic in (I, J) within each tier.  first_failure is the first
    # singular pair in this order, whatever the worker count.
    start = time.perf_counter()
    vecs = list(increasing_vectors(n, 2 * k - 1))
    checked, failures = 0, []
    if deterministic or jobs <= 1 or len(vecs) < 2:
        for agree in range(k):
            c, f = _scan(vecs, 0, len(vecs), agree, checker, full)
            checked += c
            failures.extend(f)
            if f and not full:
                break
    else:
        tasks = [
            (vecs, lo, hi, agree, checker, full)
            for agree in range(k)
            for lo, hi in _chunks(len(vecs), jobs)
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # results arrive in task order, so fail-fast stops at the same pair
            for c, f in pool.map(_scan_task, tasks):
                checked += c
                failures.extend(f)
                if f and not full:
                    pool.shutdown(cancel_futures=True)
                    break
    ms = int((time.perf_counter() - start) * 1000)
    return VerificationReport(
        verdict="fail" if failures else "pass",
        pairs_checked=checked,
        first_failure=failures[0] if failures else None,
        ms=ms,
        failures=failures if full else failures[:1],
    )


def count_qualifying_pairs(n: int, k: int) -> int:
    return sum(1 for _ in qualifying_pairs(n, k))


def verify_code(
    code: RSCodeSpec,
    full: bool = False,
    jobs: int | None = None,
    deterministic: bool = False,
    fast_path: bool = True,
) -> VerificationReport:
    """Check det V_{I,J}(alpha) != 0 for every qualifying pair (I, J).

    Fails fast at the first singular pair unless ``full`` is set.  With
    ``fast_path`` and k = 2 the cross-ratio identity replaces elimination.
    """
    jobs = default_jobs() if jobs is None else jobs
    if code.k == 1:
        # every V_{I,J} is the 1x1 matrix (1)
        return VerificationReport("pass", comb(code.n, 2) if code.n > 1 else 0)
    checker = _FieldChecker(code.alphas, code.k, fast_path)
    return _run_verification(code.n, code.k, checker, full, jobs, deterministic)


def verify_ring_code(
    alphas: Sequence[RingPoly],
    k: int,
    degree_bound: int,
    full: bool = False,
    jobs: int | None = None,
    deterministic: bool = False,
) -> VerificationReport:
    """Same criterion with evaluation points in F_p[gamma].

    Over F_q = F_p[gamma]/(mu) with deg mu = degree_bound, a determinant of
    degree below the bound vanishes in F_q iff it is the zero polynomial, so
    ring non-vanishing certifies the field code.  A determinant reaching the
    bound raises ``DegreeOverflow``.  The points must also be pairwise
    distinct: the qualifying pairs alone do not always expose a repeat.
    """
    jobs = default_jobs() if jobs is None else jobs
    n = len(alphas)
    # the pairwise differences alpha_j - alpha_i are the 2x2 Vandermonde
    # factors of the certificate; a repeat is reported as ((i,), (j,))
    seen = {}
    for j, a in enumerate(alphas, 1):
        if a.coeffs in seen:
            pair = ((seen[a.coeffs],), (j,))
            return VerificationReport("fail", 0, pair, failures=[pair])
        seen[a.coeffs] = j
    if k == 1:
        return VerificationReport("pass", comb(n, 2) if n > 1 else 0)
    checker = _RingChecker(list(alphas), k, degree_bound)
    return _run_verification(n, k, checker, full, jobs, deterministic)
