import io
import struct

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_log_probs
from quran_phonetics.qpsl import MAGIC, QPSLFormatError, load_logits, read_qpsl, write_qpsl


def encode(levels):
    buf = io.BytesIO()
    write_qpsl(buf, levels)
    return buf.getvalue()


def test_layout_is_bit_exact():
    grid = np.array([[0.25, 0.75]], dtype=np.float32)
    raw = encode({"phonemes": grid})
    expected = MAGIC + bytes([1, 1, 8]) + b"phonemes" + struct.pack("<II", 1, 2) + struct.pack("<2f", 0.25, 0.75)
    assert raw == expected


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 6), st.integers(2, 5)), min_size=1, max_size=4), st.integers(0, 999))
def test_round_trip(shapes, seed):
    rng = np.random.default_rng(seed)
    levels = {f"level_{i}": random_log_probs(rng, T, V).astype(np.float32) for i, (T, V) in enumerate(shapes)}
    back = read_qpsl(io.BytesIO(encode(levels)))
    assert list(back) == list(levels)
    for k in levels:
        assert np.array_equal(back[k].astype(np.float32), levels[k])


def test_load_validates_rows():
    good = random_log_probs(np.random.default_rng(0), 3, 4)
    out = load_logits(io.BytesIO(encode({"phonemes": good})))
    assert out["phonemes"].steps == 3
    bad = good.copy()
    bad[1, 0] += 1.0
    with pytest.raises(ValueError, match="row 1"):
        load_logits(io.BytesIO(encode({"phonemes": bad})))
    fixed = load_logits(io.BytesIO(encode({"phonemes": bad})), renormalize=True)
    assert np.allclose(np.exp(fixed["phonemes"].values).sum(axis=1), 1.0)


@pytest.mark.parametrize(
    "mutate, msg",
    [
        (lambda b: b"QPSX" + b[4:], "bad magic"),
        (lambda b: b[:4] + bytes([9]) + b[5:], "version"),
        (lambda b: b[:-1], "truncated"),
        (lambda b: b + b"\x00", "trailing"),
        (lambda b: b[:3], "truncated"),
    ],
)
def test_format_errors(mutate, msg):
    raw = encode({"phonemes": np.zeros((2, 2), dtype=np.float32)})
    with pytest.raises(QPSLFormatError, match=msg):
        read_qpsl(io.BytesIO(mutate(raw)))


def test_duplicate_level_rejected():
    one = encode({"a": np.zeros((1, 2), dtype=np.float32)})
    body = one[6:]
    raw = MAGIC + bytes([1, 2]) + body + body
    with pytest.raises(QPSLFormatError, match="duplicate"):
        read_qpsl(io.BytesIO(raw))


def test_writer_rejects_bad_input():
    with pytest.raises(QPSLFormatError):
        encode({})
    with pytest.raises(QPSLFormatError):
        encode({"x" * 300: np.zeros((1, 2))})
    with pytest.raises(QPSLFormatError):
        encode({"a": np.zeros(3)})
