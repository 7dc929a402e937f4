import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quran_phonetics.ctc import LEVELS
from quran_phonetics.metrics import MetricInputError, corpus_per, per_report, phoneme_error_rate

seqs = st.lists(st.integers(0, 5), max_size=12)


def test_per_examples():
    ref = list("abcdefghij")
    assert phoneme_error_rate(ref, ref) == 0.0
    assert phoneme_error_rate(ref, []) == 1.0
    assert phoneme_error_rate(ref, list("abcdeXghij")) == 0.1
    with pytest.raises(MetricInputError):
        phoneme_error_rate([], ["a"])


@given(seqs.filter(bool), seqs, st.permutations(range(6)))
def test_per_invariant_under_relabeling(ref, hyp, perm):
    relabel = lambda s: [perm[x] for x in s]
    assert phoneme_error_rate(ref, hyp) == phoneme_error_rate(relabel(ref), relabel(hyp))


def test_corpus_level_aggregation():
    pairs = [("ab", "ab"), ("abcdefgh", "abcdefgX")]
    # 1 error over 10 reference tokens, not the mean of 0 and 1/8
    assert corpus_per(pairs) == 0.1


def test_injected_errors():
    rng = random.Random(0)
    pairs, edits, length = [], 0, 0
    for _ in range(50):
        ref = [rng.randrange(40) for _ in range(rng.randint(5, 30))]
        hyp = list(ref)
        k = rng.randint(0, 3)
        # substitutions at distinct positions with fresh symbols cost exactly 1 each
        for i in rng.sample(range(len(ref)), k):
            hyp[i] = 100 + i
        pairs.append((ref, hyp))
        edits += k
        length += len(ref)
    assert corpus_per(pairs) == edits / length


def test_report_average_is_unweighted():
    exact = [(["a"] * 100, ["a"] * 100)]
    pairs = {n: exact for n in LEVELS}
    report = per_report(pairs)
    assert all(v == 0.0 for v in report.values())
    pairs["phonemes"] = [(["a"] * 100, ["a"] * 89 + ["b"] * 11)]
    report = per_report(pairs)
    assert report["per_phonemes"] == 0.11
    assert report["average_per"] == pytest.approx(0.01, abs=1e-15)
    assert list(report) == [f"per_{n}" for n in LEVELS] + ["average_per"]


def test_report_errors():
    with pytest.raises(MetricInputError):
        per_report({})
    with pytest.raises(MetricInputError, match="ghonna"):
        per_report({"ghonna": []})
    with pytest.raises(MetricInputError, match="unknown level"):
        per_report({"pitch": [("a", "a")]})
