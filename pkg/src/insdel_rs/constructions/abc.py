"""Evaluation points alpha_i = (gamma - i)^l in F_p(gamma), l = ((2k)!)^2.

The points are kept as polynomials in gamma over F_p.  Every criterion
determinant has degree at most l*k*(k-1) < k^2*l, the degree of the extension,
so checking non-vanishing in F_p[gamma] is exact and the degree-k^2*l
extension field never has to be built.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from ..errors import PreconditionError, WorkCapExceeded
from ..finite_field import RingPoly, is_prime, next_prime
from ..criterion import VerificationReport, verify_ring_code

#: k above this needs ``force=True`` (k = 3 already gives l = 518400).
WORK_CAP_K = 2


@dataclass(frozen=True)
class AbcParams:
    k: int
    ell: int
    p: int
    n: int

    @property
    def extension_degree(self) -> int:
        return self.k * self.k * self.ell

    def to_json(self) -> dict:
        return {"k": self.k, "ell": self.ell, "p": self.p, "n": self.n,
                "extension_degree": self.extension_degree}

    @classmethod
    def from_json(cls, obj: dict) -> AbcParams:
        params = cls(int(obj["k"]), int(obj["ell"]), int(obj["p"]), int(obj["n"]))
        params.check()
        return params

    def check(self):
        if not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")
        if self.ell != factorial(2 * self.k) ** 2:
            raise PreconditionError("ell must be ((2k)!)^2")
        if self.p <= self.extension_degree:
            raise PreconditionError("need p > k^2 * ell")
        if not 2 * self.k - 1 < self.n <= self.p:
            raise PreconditionError("need 2k-1 < n <= p")


def abc_params(k: int, n: int) -> AbcParams:
    """Smallest admissible prime: p > k^2 * l and p >= n."""
    if k < 1:
        raise PreconditionError("k must be positive")
    ell = factorial(2 * k) ** 2
    p = next_prime(max(k * k * ell, n - 1))
    params = AbcParams(k, ell, p, n)
    params.check()
    return params


def construct_abc(k: int, n: int, force: bool = False) -> tuple[AbcParams, list[RingPoly]]:
    if k > WORK_CAP_K and not force:
        raise WorkCapExceeded(f"k={k} gives l={factorial(2 * k) ** 2}; pass force=True to proceed")
    if not 2 * k - 1 < n:
        raise PreconditionError(f"need 2k-1 < n, got k={k}, n={n}")
    params = abc_params(k, n)
    p = params.p
    alphas = [RingPoly(p, [-i, 1]) ** params.ell for i in range(1, n + 1)]
    return params, alphas


def verify_abc(
    params: AbcParams,
    alphas: list[RingPoly],
    degree_bound: int | None = None,
    **kwargs,
) -> VerificationReport:
    """Criterion in F_p[gamma] with degree bound k^2 * l (overridable for testing)."""
    bound = params.extension_degree if degree_bound is None else degree_bound
    return verify_ring_code(alphas, params.k, bound, **kwargs)
