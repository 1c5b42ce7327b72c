import random

import pytest

from insdel_rs.channel import (
    AMBIGUOUS,
    DECODED,
    NO_CANDIDATE,
    TOO_SHORT,
    adversary_search,
    decode,
    random_script,
    run_trials,
    transmit,
)
from insdel_rs.constructions import random_construction
from insdel_rs.errors import PreconditionError
from insdel_rs.finite_field import make_prime_field
from insdel_rs.rs_code import MessagePoly, RSCodeSpec, all_messages, encode, random_message
from insdel_rs.sequence_metrics import Delete, Insert, edit_distance, enumerate_edit_scripts

from oracles import consecutive_code


def keys(word):
    return [e.to_int() for e in word]


def test_transmit(k2_m2):
    rng = random.Random(0)
    f = random_message(k2_m2, rng)
    cw = encode(k2_m2, f)
    assert transmit(k2_m2, f, ()) == cw
    assert len(transmit(k2_m2, f, (Delete(0), Delete(2)))) == 3
    for _ in range(50):
        script = random_script(5, 2, rng, k2_m2.field.random_element)
        assert edit_distance(keys(cw), keys(transmit(k2_m2, f, script))) <= len(script) <= 2


def test_decode_identity_channel(k2_m2):
    rng = random.Random(1)
    for _ in range(10):
        f = random_message(k2_m2, rng)
        res = decode(k2_m2, encode(k2_m2, f), radius=0)
        assert res.outcome == DECODED and res.message == f and res.distance == 0


def test_decode_every_single_deletion(k2_m2):
    rng = random.Random(2)
    for _ in range(10):
        f = random_message(k2_m2, rng)
        for pos in range(5):
            res = decode(k2_m2, transmit(k2_m2, f, (Delete(pos),)))
            assert res.outcome == DECODED and res.message == f and res.distance == 1


def test_too_short_and_out_of_range(k2_m2):
    F = k2_m2.field
    assert decode(k2_m2, [F.one]).outcome == TOO_SHORT
    assert decode(k2_m2, [F.one] * 9).outcome == NO_CANDIDATE
    with pytest.raises(PreconditionError):
        decode(k2_m2, [F.one] * 5, radius=3)


def test_radius_zero_is_codeword_lookup():
    F = make_prime_field(11)
    code = RSCodeSpec(F, 5, 2, tuple(F(a) for a in (0, 1, 3, 7, 9)))
    book = {tuple(keys(encode(code, f))): f for f in all_messages(code)}
    rng = random.Random(3)
    for _ in range(200):
        word = [F(rng.randrange(11)) for _ in range(5)]
        if rng.random() < 0.5:
            word = encode(code, random_message(code, rng))
        res = decode(code, word, radius=0)
        hit = book.get(tuple(keys(word)))
        if hit is None:
            assert res.outcome == NO_CANDIDATE
        else:
            assert res.outcome == DECODED and res.message == hit


def test_negative_control_ambiguous(f7):
    code = consecutive_code()
    f = MessagePoly((f7(0), f7(1)))
    received = transmit(code, f, (Delete(0), Insert(4, f7(6))))
    assert keys(received) == [2, 3, 4, 5, 6]
    res = decode(code, received)
    assert res.outcome == AMBIGUOUS
    found = {m.key() for m, _ in res.candidates}
    assert f.key() in found and MessagePoly((f7(1), f7(1))).key() in found


def test_adversary_exhaustive(f7):
    rep = adversary_search(consecutive_code())
    assert not rep.passed and rep.max_lcs >= 3 and not rep.downgraded
    f, g = rep.witness
    assert f != g
    code = RSCodeSpec(f7, 4, 1, tuple(f7(i) for i in range(4)))
    rep = adversary_search(code)
    assert rep.passed and rep.max_lcs == 0 and rep.threshold == 0


def test_adversary_downgrade_is_reported(k2_m2):
    rep = adversary_search(k2_m2, samples=200)
    assert rep.downgraded and rep.mode == "sampled" and rep.pairs_scanned == 200
    assert rep.passed and rep.to_json()["downgraded"] is True


def test_adversary_on_verified_code_exhaustive():
    code = random_construction(5, 2, 31, seed=4)
    rep = adversary_search(code, cap=10**6)
    assert rep.mode == "exhaustive" and rep.max_lcs <= 2


@pytest.mark.parametrize("radius", [0, 1, 2])
def test_batched_agrees_with_scalar(k2_m2, radius):
    rng = random.Random(radius)
    F = k2_m2.field
    for _ in range(25):
        f = random_message(k2_m2, rng)
        script = random_script(5, 3, rng, F.random_element)
        received = transmit(k2_m2, f, script)
        a = decode(k2_m2, received, radius, batched=True)
        b = decode(k2_m2, received, radius, batched=False)
        assert a.outcome == b.outcome and a.message == b.message and a.distance == b.distance
        if len(script) <= radius:
            assert a.outcome == DECODED and a.message == f


def test_exhaustive_scripts_small(k2_m2):
    rng = random.Random(7)
    F = k2_m2.field
    extra = [F.random_element(rng) for _ in range(16)]
    for _ in range(2):
        f = random_message(k2_m2, rng)
        cw = encode(k2_m2, f)
        alphabet = list(dict.fromkeys(cw + extra))
        outputs = {}
        for script in enumerate_edit_scripts(cw, 2, alphabet):
            word = tuple(transmit(k2_m2, f, script))
            outputs.setdefault(word, script)
        for word in outputs:
            res = decode(k2_m2, list(word))
            assert res.outcome == DECODED and res.message == f


def test_decode_k3():
    F = make_prime_field(101)
    code = random_construction(7, 3, 101, seed=0)
    rng = random.Random(5)
    for _ in range(10):
        f = random_message(code, rng)
        script = random_script(7, 2, rng, F.random_element)
        res = decode(code, transmit(code, f, script))
        assert res.outcome == DECODED and res.message == f


def test_run_trials_records(k2_m2):
    recs = list(run_trials(k2_m2, 30, 2, seed=3))
    assert len(recs) == 30
    assert {r["outcome"] for r in recs} == {"ok"}
    assert all(0 <= r["ed"] <= 2 for r in recs)
    assert recs == list(run_trials(k2_m2, 30, 2, seed=3))
    with pytest.raises(PreconditionError):
        next(run_trials(k2_m2, 1, 3))


def test_decode_result_json(k2_m2):
    f = random_message(k2_m2, random.Random(0))
    out = decode(k2_m2, encode(k2_m2, f)).to_json()
    assert out["outcome"] == "decoded" and out["ed"] == 0 and out["message"] == f.to_json()
