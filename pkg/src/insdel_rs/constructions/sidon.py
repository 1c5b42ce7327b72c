"""Sidon spaces S = {u + u^p * gamma : u in F_{p^(2m)}} inside F_{p^(4m)}."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import PreconditionError, SearchExhausted, TooLargeToEnumerate
from ..finite_field import (
    FieldElement,
    FieldSpec,
    batch_mul,
    encode_array,
    find_irreducible,
    make_extension_field,
    nullspace_mod_p,
    rank_mod_p,
    to_array,
)

#: is_sidon refuses spaces with more elements than this.
MAX_ENUMERATED = 3**6

# gamma candidates tried before giving up
_MAX_GAMMA_CANDIDATES = 2000


@dataclass(frozen=True)
class SidonSpace:
    field: FieldSpec
    m: int
    gamma: FieldElement | None
    basis: tuple[FieldElement, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return self.field.p ** self.dimension


def ambient_field(m: int, seed: int = 0) -> FieldSpec:
    """F_{3^(4m)} with a seed-chosen irreducible modulus."""
    return make_extension_field(3, find_irreducible(3, 4 * m, seed))


def subfield_basis(F: FieldSpec, e: int) -> list[FieldElement]:
    """F_p-basis of the subfield F_{p^e}: the kernel of x -> x^(p^e) - x."""
    if F.d % e:
        raise PreconditionError(f"F_{F.p}^{e} is not a subfield of F_{F.p}^{F.d}")
    images = []
    for i in range(F.d):
        b = F.from_int(F.p**i)
        images.append((b ** (F.p**e) - b).coeffs)
    matrix = [[images[c][r] for c in range(F.d)] for r in range(F.d)]
    return [F(v) for v in nullspace_mod_p(matrix, F.p)]


def span(basis: Sequence[FieldElement]) -> list[FieldElement]:
    """All F_p-combinations of ``basis``, zero first."""
    F = basis[0].field
    out = []
    for co in itertools.product(range(F.p), repeat=len(basis)):
        e = F.zero
        for c, b in zip(co, basis):
            if c:
                e = e + b * c
        out.append(e)
    return out


def _line_representatives(basis: Sequence[FieldElement]) -> list[FieldElement]:
    # one nonzero element per F_p-line: coordinate vectors whose leading nonzero entry is 1
    F = basis[0].field
    reps = []
    for co in itertools.product(range(F.p), repeat=len(basis)):
        lead = next((c for c in co if c), 0)
        if lead != 1:
            continue
        e = F.zero
        for c, b in zip(co, basis):
            if c:
                e = e + b * c
        reps.append(e)
    return reps


def _normalize_lines(F: FieldSpec, A: np.ndarray) -> np.ndarray:
    """Scale each nonzero row so its first nonzero coefficient is 1."""
    nz = A != 0
    first = nz.argmax(axis=1)
    lead = A[np.arange(len(A)), first]
    inv = np.array([0] + [pow(c, -1, F.p) for c in range(1, F.p)], dtype=np.int64)
    return (A * inv[lead][:, None]) % F.p


def is_sidon(space: SidonSpace) -> bool:
    """Exhaustive Sidon check.

    Equivalent form used here: the products of unordered pairs of line
    representatives must lie on pairwise distinct F_p-lines.
    """
    basis = list(space.basis)
    F = space.field
    if F.p ** len(basis) > MAX_ENUMERATED:
        raise TooLargeToEnumerate(f"|S| = {F.p ** len(basis)} exceeds {MAX_ENUMERATED}")
    if rank_mod_p([b.coeffs for b in basis], F.p) != len(basis):
        raise PreconditionError("basis is not linearly independent over the prime field")
    reps = to_array(_line_representatives(basis))
    iu, ju = np.triu_indices(len(reps))
    prods = batch_mul(F, reps[iu], reps[ju])
    keys = encode_array(F, _normalize_lines(F, prods))
    return len(np.unique(keys)) == len(keys)


def construct_sidon(m: int, seed: int = 0, field: FieldSpec | None = None) -> SidonSpace:
    """Search F_{3^(4m)} minus F_{3^(2m)} in seed order for a gamma giving a Sidon space."""
    if m < 1:
        raise PreconditionError("m must be positive")
    F = field or ambient_field(m)
    if F.p != 3 or F.d != 4 * m:
        raise PreconditionError(f"ambient field must be F_3^{4 * m}")
    sub = subfield_basis(F, 2 * m)
    subfield = {e.coeffs for e in span(sub)}
    rng = random.Random(f"sidon:{m}:{seed}")
    tried = 0
    while tried < _MAX_GAMMA_CANDIDATES:
        gamma = F.random_element(rng)
        if gamma.coeffs in subfield:
            continue
        tried += 1
        space = SidonSpace(F, m, gamma, tuple(u + (u**3) * gamma for u in sub))
        if is_sidon(space):
            return space
    raise SearchExhausted(f"no gamma among {tried} candidates gives a Sidon space")
