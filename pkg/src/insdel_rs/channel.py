"""Adversarial insdel channel and the brute-force alignment decoder."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .errors import PreconditionError
from .finite_field import FieldElement, batch_mul, batch_sub, batch_add, encode_array, to_array
from .rs_code import MessagePoly, RSCodeSpec, all_messages, correction_radius, encode, interpolate, random_message
from .sequence_metrics import Delete, EditScript, Insert, apply_edits, edit_distance, lcs, script_to_json

DECODED = "decoded"
NO_CANDIDATE = "no_candidate"
AMBIGUOUS = "ambiguous"
TOO_SHORT = "too_short"

# alignments processed per numpy batch
_BATCH = 20_000


@dataclass
class DecodeResult:
    outcome: str
    message: MessagePoly | None = None
    distance: int | None = None
    candidates: tuple = ()
    candidates_examined: int = 0

    @property
    def ok(self) -> bool:
        return self.outcome == DECODED

    def to_json(self) -> dict:
        out = {"outcome": self.outcome, "candidates_examined": self.candidates_examined}
        if self.message is not None:
            out["message"] = self.message.to_json()
            out["ed"] = self.distance
        if self.candidates:
            out["candidates"] = [{"message": m.to_json(), "ed": d} for m, d in self.candidates]
        return out


def transmit(code: RSCodeSpec, f: MessagePoly, script: Sequence) -> list[FieldElement]:
    return apply_edits(encode(code, f), script)


def random_script(length: int, budget: int, rng: random.Random, sample_symbol) -> EditScript:
    """Between 0 and ``budget`` random insertions/deletions, each equally likely."""
    ops = []
    cur = length
    for _ in range(rng.randint(0, budget)):
        if cur > 0 and rng.random() < 0.5:
            ops.append(Delete(rng.randrange(cur)))
            cur -= 1
        else:
            ops.append(Insert(rng.randint(0, cur), sample_symbol(rng)))
            cur += 1
    return tuple(ops)


# ---------------------------------------------------------------------------
# decoder


def _windows(n: int, r: int, k: int, radius: int):
    """Admissible (received positions, code positions) pairs of increasing k-vectors.

    If ED(c, received) <= radius, an optimal alignment has at most ins_max
    unmatched received symbols and shifts every match by at most the
    insertion/deletion counts, so its first k matches lie in the first
    ins_max + k received positions inside these windows.
    """
    delta = n - r
    ins_max = (radius - delta) // 2
    del_max = (radius + delta) // 2
    prefix = min(r, ins_max + k)
    for apos in itertools.combinations(range(prefix), k):
        ranges = [range(max(0, a - ins_max), min(n - 1, a + del_max) + 1) for a in apos]
        yield from ((apos, cpos) for cpos in _increasing_product(ranges))


def _increasing_product(ranges, lo=0):
    if not ranges:
        yield ()
        return
    first, rest = ranges[0], ranges[1:]
    for c in first:
        if c < lo:
            continue
        for tail in _increasing_product(rest, c + 1):
            yield (c,) + tail


def _accept(received_keys, counts, need, radius, codeword_keys):
    # LCS is bounded by the multiset intersection; cheap rejection before the DP
    inter = sum((Counter(codeword_keys) & counts).values())
    if inter < need:
        return None
    d = edit_distance(codeword_keys, received_keys)
    return d if d <= radius else None


def _decode_scalar(code, received, radius, need):
    received_keys = [e.to_int() for e in received]
    counts = Counter(received_keys)
    seen = {}
    accepted = {}
    examined = 0
    for apos, cpos in _windows(code.n, len(received), code.k, radius):
        examined += 1
        msg = interpolate([(code.alphas[c], received[a]) for a, c in zip(apos, cpos)], code.k)
        key = msg.key()
        if key in seen:
            continue
        seen[key] = True
        cw = [e.to_int() for e in encode(code, msg)]
        d = _accept(received_keys, counts, need, radius, cw)
        if d is not None:
            accepted[key] = (msg, d)
    return accepted, examined


@lru_cache(maxsize=32)
def _k2_tables(code: RSCodeSpec):
    F = code.field
    A = to_array(code.alphas)
    inv = np.zeros((code.n, code.n, F.d), dtype=np.int64)
    for i in range(code.n):
        for j in range(i + 1, code.n):
            inv[i, j] = (code.alphas[j] - code.alphas[i]).inverse().coeffs
    return A, inv


def _decode_k2_batched(code, received, radius, need):
    F = code.field
    A, inv = _k2_tables(code)
    R = to_array(received)
    received_keys = [e.to_int() for e in received]
    rec_set = np.array(sorted(set(received_keys)), dtype=np.int64)
    counts = Counter(received_keys)
    align = np.array([a + c for a, c in _windows(code.n, len(received), 2, radius)], dtype=np.int64)
    examined = len(align)
    accepted = {}
    seen = set()
    for lo in range(0, examined, _BATCH):
        chunk = align[lo:lo + _BATCH]
        a1, a2, i1, i2 = chunk.T
        slope = batch_mul(F, batch_sub(F, R[a2], R[a1]), inv[i1, i2])
        f0 = batch_sub(F, R[a1], batch_mul(F, slope, A[i1]))
        cw = batch_add(F, f0[:, None, :], batch_mul(F, slope[:, None, :], A[None, :, :]))
        keys = encode_array(F, cw)
        hits = np.isin(keys, rec_set).sum(axis=1)
        for row in np.nonzero(hits >= need)[0]:
            mkey = (tuple(f0[row]), tuple(slope[row]))
            if mkey in seen:
                continue
            seen.add(mkey)
            cw_keys = keys[row].tolist()
            msg = MessagePoly((F(list(mkey[0])), F(list(mkey[1]))))
            d = _accept(received_keys, counts, need, radius, cw_keys)
            if d is not None:
                accepted[msg.key()] = (msg, d)
    return accepted, examined


def decode(code: RSCodeSpec, received: Sequence[FieldElement], radius: int | None = None,
           batched: bool = True) -> DecodeResult:
    """Find every message whose codeword is within ``radius`` insdels of ``received``.

    Candidates are interpolated from order-preserving k-alignments of
    received symbols with code coordinates; the result is ``decoded`` only if
    exactly one message is accepted.  With k = 2 and ``batched`` the
    alignments are processed as numpy arrays.
    """
    if radius is None:
        radius = correction_radius(code)
    if not 0 <= radius <= correction_radius(code):
        raise PreconditionError(f"radius must lie in [0, {correction_radius(code)}]")
    received = list(received)
    n, k, r = code.n, code.k, len(received)
    if r < k:
        return DecodeResult(TOO_SHORT)
    if abs(n - r) > radius:
        return DecodeResult(NO_CANDIDATE)
    need = -(-(n + r - radius) // 2)  # LCS needed for ED <= radius
    if k == 2 and batched:
        accepted, examined = _decode_k2_batched(code, received, radius, need)
    else:
        accepted, examined = _decode_scalar(code, received, radius, need)
    if not accepted:
        return DecodeResult(NO_CANDIDATE, candidates_examined=examined)
    if len(accepted) > 1:
        cands = tuple(sorted(accepted.values(), key=lambda md: md[0].key()))
        return DecodeResult(AMBIGUOUS, candidates=cands, candidates_examined=examined)
    (msg, d), = accepted.values()
    return DecodeResult(DECODED, msg, d, candidates_examined=examined)


# ---------------------------------------------------------------------------
# adversary


@dataclass
class AdversaryReport:
    mode: str
    downgraded: bool
    pairs_scanned: int
    max_lcs: int
    witness: tuple[MessagePoly, MessagePoly] | None
    threshold: int

    @property
    def passed(self) -> bool:
        return self.max_lcs <= self.threshold

    def to_json(self) -> dict:
        w = None
        if self.witness is not None:
            w = [m.to_json() for m in self.witness]
        return {
            "mode": self.mode,
            "downgraded": self.downgraded,
            "pairs_scanned": self.pairs_scanned,
            "max_lcs": self.max_lcs,
            "threshold": self.threshold,
            "verdict": "pass" if self.passed else "fail",
            "witness": w,
        }


def adversary_search(
    code: RSCodeSpec,
    mode: str = "exhaustive",
    cap: int = 10**5,
    samples: int = 10**4,
    seed: int = 0,
) -> AdversaryReport:
    """Largest LCS between distinct codewords; the code fails if it reaches 2k-1.

    Exhaustive mode scans all codeword pairs when there are at most ``cap`` of
    them and otherwise falls back to ``samples`` random pairs, flagging the
    downgrade in the report.
    """
    if mode not in ("exhaustive", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")
    threshold = 2 * code.k - 2
    total_msgs = code.field.order**code.k
    downgraded = False
    if mode == "exhaustive" and comb(total_msgs, 2) > cap:
        mode, downgraded = "sampled", True

    best, witness, scanned = -1, None, 0

    def keys(msg):
        return [e.to_int() for e in encode(code, msg)]

    if mode == "exhaustive":
        msgs = list(all_messages(code))
        words = [keys(m) for m in msgs]
        for a in range(len(msgs)):
            for b in range(a + 1, len(msgs)):
                scanned += 1
                v = lcs(words[a], words[b])
                if v > best:
                    best, witness = v, (msgs[a], msgs[b])
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            f = random_message(code, rng)
            g = random_message(code, rng)
            while g.key() == f.key():
                g = random_message(code, rng)
            scanned += 1
            v = lcs(keys(f), keys(g))
            if v > best:
                best, witness = v, (f, g)
    return AdversaryReport(mode, downgraded, scanned, max(best, 0), witness, threshold)


# ---------------------------------------------------------------------------
# simulation


def run_trials(code: RSCodeSpec, trials: int, budget: int, seed: int = 0,
               radius: int | None = None) -> Iterator[dict]:
    """Random message, random script of at most ``budget`` ops, decode; one record per trial."""
    if radius is None:
        radius = correction_radius(code)
    if budget > radius:
        raise PreconditionError(f"budget {budget} exceeds the decoding radius {radius}")
    rng = random.Random(seed)
    F = code.field
    for _ in range(trials):
        f = random_message(code, rng)
        script = random_script(code.n, budget, rng, F.random_element)
        cw = encode(code, f)
        received = apply_edits(cw, script)
        res = decode(code, received, radius)
        if res.outcome == DECODED and res.message.key() == f.key():
            outcome = "ok"
        elif res.outcome == AMBIGUOUS:
            outcome = "ambiguous"
        elif res.outcome == DECODED:
            outcome = "wrong"
        else:
            outcome = "no_candidate"
        yield {
            "message": f.to_json(),
            "script": script_to_json(script, lambda e: e.to_json()),
            "received": [e.to_json() for e in received],
            "outcome": outcome,
            "ed": edit_distance([e.to_int() for e in cw], [e.to_int() for e in received]),
        }
