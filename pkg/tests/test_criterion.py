import itertools
import random
from math import comb

import pytest
import sympy

from insdel_rs.criterion import (
    agreement_count,
    build_matrix,
    count_qualifying_pairs,
    determinant,
    find_disjoint_pair,
    increasing_vectors,
    qualifying_pairs,
    singular_k2,
    substitute,
    symbolic_determinant,
    unique_monomial,
    verify_code,
    verify_ring_code,
)
from insdel_rs.errors import (
    DegreeOverflow,
    DimensionTooLarge,
    IndexOutOfRange,
    LengthMismatch,
    PreconditionError,
)
from insdel_rs.finite_field import RingPoly, make_prime_field
from insdel_rs.rs_code import RSCodeSpec

from oracles import consecutive_code


def as_ints(M):
    return [[e.to_int() for e in row] for row in M]


def sympy_det_mod(M, p):
    return int(sympy.Matrix(M).det()) % p


def test_increasing_vectors():
    assert len(list(increasing_vectors(5, 3))) == 10
    assert list(increasing_vectors(4, 4)) == [(1, 2, 3, 4)]
    assert list(increasing_vectors(3, 2)) == [(1, 2), (1, 3), (2, 3)]


def test_agreement_count():
    assert agreement_count((1, 2, 3), (1, 3, 4)) == 1
    assert agreement_count((1, 2, 3), (1, 2, 3)) == 3
    assert agreement_count((1, 3), (2, 4)) == 0
    with pytest.raises(LengthMismatch):
        agreement_count((1, 2), (1, 2, 3))


def test_find_disjoint_pair_examples():
    assert find_disjoint_pair((1, 3), (2, 4)) == (1, 2)
    i, j = find_disjoint_pair((2, 5), (1, 6))
    assert i != j and (2, 5)[i - 1] not in (1, 6) and (1, 6)[j - 1] not in (2, 5)
    with pytest.raises(PreconditionError):
        find_disjoint_pair((1,), (2,))
    with pytest.raises(PreconditionError):
        find_disjoint_pair((1, 2), (1, 3))


def test_find_disjoint_pair_exhaustive():
    checked = 0
    for n in range(2, 9):
        for s in range(2, min(4, n) + 1):
            vecs = list(increasing_vectors(n, s))
            for I in vecs:
                for J in vecs:
                    if agreement_count(I, J):
                        continue
                    i, j = find_disjoint_pair(I, J)
                    assert i != j
                    assert I[i - 1] not in J and J[j - 1] not in I
                    checked += 1
    assert checked > 1000


def test_build_matrix(f7):
    alphas = [f7(v) for v in range(1, 6)]
    M = build_matrix(alphas, (1, 2, 3), (2, 3, 4), 2)
    assert as_ints(M) == [[1, 1, 2], [1, 2, 3], [1, 3, 4]]
    assert as_ints(build_matrix(alphas, (4,), (2,), 1)) == [[1]]
    M3 = build_matrix(alphas, (1, 2, 3, 4, 5), (1, 2, 3, 4, 5), 3)
    assert all(row[0] == f7(1) for row in M3)
    with pytest.raises(IndexOutOfRange):
        build_matrix(alphas, (1, 2, 6), (2, 3, 4), 2)


def test_determinant_examples(f7):
    M = [[f7(v) for v in row] for row in [[1, 1, 2], [1, 2, 4], [1, 3, 6]]]
    assert determinant(M) == f7(0)
    M = [[f7(v) for v in row] for row in [[1, 1, 2], [1, 2, 4], [1, 3, 5]]]
    assert determinant(M) == f7(6)
    eye = [[f7(int(r == c)) for c in range(4)] for r in range(4)]
    assert determinant(eye) == f7(1)


@pytest.mark.parametrize("p", [7, 101])
def test_field_determinant_matches_sympy(p):
    F = make_prime_field(p)
    rng = random.Random(p)
    for _ in range(300):
        size = rng.randint(1, 6)
        ints = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
        if rng.random() < 0.2 and size > 1:
            ints[-1] = list(ints[0])
        assert determinant([[F(v) for v in r] for r in ints]).to_int() == sympy_det_mod(ints, p)


def test_ring_determinant_matches_sympy():
    p = 13
    x = sympy.Symbol("x")
    rng = random.Random(5)
    for _ in range(60):
        size = rng.randint(1, 5)
        M = [[RingPoly(p, [rng.randrange(p) for _ in range(rng.randint(0, 4))]) for _ in range(size)] for _ in range(size)]
        S = sympy.Matrix([[sum(c * x**i for i, c in enumerate(e.coeffs)) for e in row] for row in M])
        expect = sympy.Poly(S.det(), x, modulus=p)
        got = determinant(M)
        expect_coeffs = [int(c) % p for c in reversed(expect.all_coeffs())] if not expect.is_zero else []
        while expect_coeffs and expect_coeffs[-1] == 0:
            expect_coeffs.pop()
        assert list(got.coeffs) == expect_coeffs


def test_k2_identity_matches_determinant():
    F = make_prime_field(31)
    rng = random.Random(1)
    for _ in range(3000):
        v = [F(rng.randrange(31)) for _ in range(6)]
        M = [[F(1), v[r], v[r + 3]] for r in range(3)]
        assert singular_k2(*v) == determinant(M).is_zero()


def test_verify_consecutive_points_fails():
    rep = verify_code(consecutive_code(), deterministic=True)
    assert not rep.passed
    assert rep.first_failure == ((1, 2, 3), (2, 3, 4))
    assert rep.to_json()["first_failure"] == {"I": [1, 2, 3], "J": [2, 3, 4]}


def test_verify_boundary_n_equals_2k_minus_1(f7):
    code = RSCodeSpec(f7, 3, 2, (f7(1), f7(2), f7(4)))
    rep = verify_code(code)
    assert rep.passed and rep.pairs_checked == 0


def test_verify_k1_trivially_passes(f7):
    assert verify_code(RSCodeSpec(f7, 4, 1, tuple(f7(i) for i in range(4)))).passed


def test_pair_counts():
    # brute force over ordered pairs, halved
    for n, k in [(5, 2), (6, 2), (7, 3), (8, 2)]:
        vecs = list(increasing_vectors(n, 2 * k - 1))
        ordered = sum(1 for I in vecs for J in vecs if I != J and agreement_count(I, J) <= k - 1)
        assert count_qualifying_pairs(n, k) * 2 == ordered
    assert count_qualifying_pairs(14, 2) == 63063


@pytest.mark.parametrize("seed", range(4))
def test_fast_path_agrees_with_elimination(seed):
    rng = random.Random(seed)
    F = make_prime_field(13)
    alphas = tuple(F(a) for a in rng.sample(range(13), 7))
    code = RSCodeSpec(F, 7, 2, alphas)
    fast = verify_code(code, full=True, fast_path=True)
    slow = verify_code(code, full=True, fast_path=False)
    assert fast.verdict == slow.verdict
    assert fast.failures == slow.failures
    assert fast.pairs_checked == slow.pairs_checked


def test_symmetric_in_roles_of_i_and_j():
    F = make_prime_field(11)
    code = RSCodeSpec(F, 6, 2, tuple(F(a) for a in (0, 1, 3, 4, 7, 9)))
    for I, J in qualifying_pairs(6, 2):
        a = determinant(build_matrix(code.alphas, I, J, 2))
        b = determinant(build_matrix(code.alphas, J, I, 2))
        assert a.is_zero() == b.is_zero()


def test_parallel_matches_deterministic():
    code = consecutive_code(p=31, n=9)
    serial = verify_code(code, full=True, deterministic=True)
    par = verify_code(code, full=True, jobs=2)
    assert serial.failures == par.failures
    assert serial.pairs_checked == par.pairs_checked
    assert verify_code(code, jobs=2).first_failure == serial.first_failure


def test_verify_ring_code_examples():
    p = 2309
    alphas = [RingPoly(p, [-i, 1]) ** 3 for i in range(1, 6)]
    assert verify_ring_code(alphas, 2, degree_bound=100).verdict in ("pass", "fail")
    same = [RingPoly(p, [1, 1])] * 5
    assert not verify_ring_code(same, 2, degree_bound=100).passed
    with pytest.raises(DegreeOverflow):
        verify_ring_code(alphas, 2, degree_bound=3)


def test_ring_criterion_needs_distinctness_check():
    # a repeated point can hide from every qualifying pair
    F = make_prime_field(101)
    code = RSCodeSpec(F, 6, 2, tuple(F(a) for a in (3, 17, 29, 44, 58, 90)))
    hidden = 0
    for i, j in itertools.permutations(range(6), 2):
        pts = [RingPoly(101, [a.to_int()]) for a in code.alphas]
        pts[j] = pts[i]
        hidden += all(not determinant(build_matrix(pts, I, J, 2)).is_zero() for I, J in qualifying_pairs(6, 2))
        rep = verify_ring_code(pts, 2, degree_bound=10)
        assert not rep.passed
        assert rep.first_failure == ((min(i, j) + 1,), (max(i, j) + 1,))
    assert hidden > 0


def _to_sympy(poly, xs):
    out = 0
    for mono, c in poly.items():
        term = c
        for v, e in mono:
            term *= xs[v] ** e
        out += term
    return sympy.expand(out)


@pytest.mark.parametrize("k,n", [(2, 5), (3, 5)])
def test_symbolic_matches_sympy(k, n):
    xs = {v: sympy.Symbol(f"x{v}") for v in range(1, n + 1)}
    pairs = list(qualifying_pairs(n, k))
    rng = random.Random(k)
    for I, J in rng.sample(pairs, min(25, len(pairs))):
        M = sympy.Matrix([[xs[a] ** e for e in range(k)] + [xs[b] ** e for e in range(1, k)] for a, b in zip(I, J)])
        assert sympy.expand(M.det() - _to_sympy(symbolic_determinant(I, J, k), xs)) == 0


def test_symbolic_examples():
    poly = symbolic_determinant((1, 2, 3), (2, 3, 4), 2)
    assert poly and any(abs(c) == 1 for c in poly.values())
    assert symbolic_determinant((1,), (1,), 1) == {(): 1}
    assert symbolic_determinant((1, 2, 3), (1, 2, 3), 2) == {}
    with pytest.raises(DimensionTooLarge):
        symbolic_determinant(tuple(range(1, 8)), tuple(range(2, 9)), 4)


@pytest.mark.parametrize("k,n", [(2, 6), (3, 6)])
def test_unique_monomial_witness(k, n):
    for I, J in qualifying_pairs(n, k):
        poly = symbolic_determinant(I, J, k)
        mono = unique_monomial(I, J, k)
        assert abs(poly.get(mono, 0)) == 1, (I, J, mono)


def test_substitution_matches_field_determinant():
    F = make_prime_field(101)
    rng = random.Random(0)
    for _ in range(3):
        alphas = [F(a) for a in rng.sample(range(101), 6)]
        for I, J in qualifying_pairs(6, 2):
            assert substitute(symbolic_determinant(I, J, 2), alphas) == determinant(build_matrix(alphas, I, J, 2))


@pytest.mark.parametrize("q", [19, 23])
def test_criterion_matches_exhaustive_lcs(q):
    from insdel_rs.channel import adversary_search

    F = make_prime_field(q)
    rng = random.Random(q)
    seen = {True: 0, False: 0}
    for _ in range(60):
        code = RSCodeSpec(F, 5, 2, tuple(F(a) for a in rng.sample(range(q), 5)))
        passed = verify_code(code).passed
        if seen[passed] >= 2:
            continue
        seen[passed] += 1
        adv = adversary_search(code, cap=comb(q**2, 2))
        assert not adv.downgraded
        assert (adv.max_lcs <= 2) == passed
        if seen[True] == seen[False] == 2:
            break
    assert seen == {True: 2, False: 2}
