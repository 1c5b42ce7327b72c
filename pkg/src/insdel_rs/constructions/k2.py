"""Explicit [n, 2] codes over F_{3^(4m)} with n = (3^m + 1)/2.

The evaluation points are alpha = (s_1, ..., s_2m) * H for a Sidon-space basis
s and a ternary parity-check matrix H with every four columns independent.
Then any four distinct points are F_3-independent, and the Sidon property
rules out every singular 3x3 criterion matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import InvalidCode, PreconditionError
from ..finite_field import FieldElement, FieldSpec, to_array
from ..rs_code import RSCodeSpec
from .parity import ParityMatrix, code_length, construct_parity_check
from .sidon import SidonSpace, ambient_field, construct_sidon


@dataclass(frozen=True)
class K2Construction:
    code: RSCodeSpec
    sidon: SidonSpace
    parity: ParityMatrix


def evaluation_points(sidon: SidonSpace, H: ParityMatrix) -> list[FieldElement]:
    """alpha_j = sum_i s_i h_{i,j}."""
    F = sidon.field
    if len(H.rows) != sidon.dimension:
        raise PreconditionError("parity matrix height must equal the Sidon space dimension")
    alphas = []
    for col in H.columns():
        a = F.zero
        for s, h in zip(sidon.basis, col):
            if h:
                a = a + s * h
        alphas.append(a)
    return alphas


@lru_cache(maxsize=16)
def _build(m: int, seed: int, modulus_seed: int) -> K2Construction:
    F = ambient_field(m, modulus_seed)
    return build_k2(m, seed, F)


def build_k2(m: int, seed: int = 0, field: FieldSpec | None = None) -> K2Construction:
    if not 2 <= m <= 3:
        raise PreconditionError("m must be 2 or 3 (n = (3^m+1)/2 >= 3, |S| <= 3^6)")
    sidon = construct_sidon(m, seed, field)
    H = construct_parity_check(m, seed)
    alphas = evaluation_points(sidon, H)
    if len(set(alphas)) != len(alphas):
        raise InvalidCode("evaluation points collide")
    code = RSCodeSpec(sidon.field, code_length(m), 2, tuple(alphas))
    return K2Construction(code, sidon, H)


def construct_k2(m: int, seed: int = 0, modulus_seed: int = 0) -> RSCodeSpec:
    """[(3^m+1)/2, 2] code over F_{3^(4m)}; ``modulus_seed`` picks the field modulus."""
    return _build(m, seed, modulus_seed).code


def k2_construction(m: int, seed: int = 0, modulus_seed: int = 0) -> K2Construction:
    """Code together with the Sidon space and parity matrix it came from."""
    return _build(m, seed, modulus_seed)


_NONTRIVIAL_F3 = np.array([c for c in itertools.product(range(3), repeat=4) if any(c)], dtype=np.int64)


def four_wise_independent(alphas) -> tuple[bool, int]:
    """Every 4 distinct points F_3-independent, checked over all 80 nonzero combinations.

    Returns (holds, number of 4-subsets checked).
    """
    F = alphas[0].field
    if F.p != 3:
        raise PreconditionError("defined over characteristic 3")
    A = to_array(alphas)
    quads = np.array(list(itertools.combinations(range(len(alphas)), 4)), dtype=np.int64)
    if len(quads) == 0:
        return True, 0
    # (subsets, 80 combinations, d)
    sums = np.einsum("cj,qjd->qcd", _NONTRIVIAL_F3, A[quads]) % 3
    zero = ~sums.any(axis=2)
    return (not zero.any()), len(quads)
