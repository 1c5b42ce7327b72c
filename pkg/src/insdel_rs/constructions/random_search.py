"""Las Vegas search for evaluation points: sample, verify, retry."""

from __future__ import annotations

import logging
import random

from ..criterion import verify_code
from ..errors import AttemptsExhausted, PreconditionError
from ..finite_field import FieldSpec, find_irreducible, make_extension_field, make_prime_field, prime_power
from ..rs_code import RSCodeSpec

log = logging.getLogger(__name__)


def field_of_order(q: int) -> FieldSpec:
    p, d = prime_power(q)
    if d == 1:
        return make_prime_field(p)
    return make_extension_field(p, find_irreducible(p, d, 0))


def random_construction(
    n: int,
    k: int,
    q: int,
    seed: int = 0,
    max_attempts: int = 10**5,
    stats: dict | None = None,
) -> RSCodeSpec:
    """Uniform random n-subsets of F_q until one passes ``verify_code``.

    ``random.Random(seed)`` drives the sampling.  If ``stats`` is given it
    receives the attempt count and the number of rejected samples.
    """
    if q < n:
        raise PreconditionError(f"need q >= n, got q={q}, n={n}")
    if not 2 * k - 1 <= n:
        raise PreconditionError(f"need 2k-1 <= n, got k={k}, n={n}")
    F = field_of_order(q)
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        alphas = tuple(F.from_int(i) for i in rng.sample(range(q), n))
        code = RSCodeSpec(F, n, k, alphas)
        if verify_code(code, jobs=1).passed:
            log.info("random construction n=%d k=%d q=%d: success after %d attempts", n, k, q, attempt)
            if stats is not None:
                stats.update(attempts=attempt, rejected=attempt - 1)
            return code
    if stats is not None:
        stats.update(attempts=max_attempts, rejected=max_attempts)
    raise AttemptsExhausted(
        f"no valid evaluation set in {max_attempts} attempts (n={n}, k={k}, q={q})",
        attempts=max_attempts,
        stats={"rejected": max_attempts},
    )
