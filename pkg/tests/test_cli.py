import io
import json
import subprocess
import sys

import numpy as np
import pytest

from oracles import random_log_probs
from quran_phonetics.alphabet import PHONEMES
from quran_phonetics.cli import build_parser, main
from quran_phonetics.qpsl import write_qpsl
from quran_phonetics.synth import plain_window

CONFIG = "madd_monfasel_len = 4\nmadd_mottasel_len = 4\nmadd_mottasel_waqf = 4\nmadd_aared_len = 4\n"


def run(*argv):
    out = io.StringIO()
    code = main(list(map(str, argv)), out)
    return code, out.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


@pytest.fixture
def cfg(tmp_path):
    p = tmp_path / "m.cfg"
    p.write_text(CONFIG, encoding="utf-8")
    return p


def test_config_validate(tmp_path, cfg, capsys):
    assert run("config", "--validate", cfg) == (0, f"{cfg}: ok\n")
    bad = tmp_path / "bad.cfg"
    bad.write_text(CONFIG.replace("madd_aared_len = 4", "madd_aared_len = 2") + "madd_alleen_len = 6\n")
    code, _ = run("config", "--validate", bad)
    assert code == 2
    err = capsys.readouterr().err
    assert "madd_alleen_len > madd_aared_len" in err


def test_config_defaults_and_effective(cfg):
    code, text = run("config")
    assert code == 0 and "# madd_aared_len = <required" in text
    code, text = run("config", "--config", cfg)
    assert code == 0 and "madd_alleen_len = 4" in text


def test_phonetize_sura_112(cfg):
    code, text = run("phonetize", "--config", cfg, "--sura", 112, "--pause-end")
    assert code == 0
    recs = records(text)
    assert len(recs) == 4
    names = {p.value for p in PHONEMES}
    for r in recs:
        assert r["sura"] == 112
        assert set(r["phonemes"].split()) <= names


def test_sifat_column_is_parallel():
    code, text = run("sifat", "--sura", 1, "--ayat", "1-2")
    assert code == 0
    for r in records(text):
        assert len(r["sifat"].split()) == len(r["phonemes"].split())


def test_phonetize_join_and_context():
    code, text = run("phonetize", "--sura", 113, "--join", "--no-pause-end")
    assert code == 0
    (rec,) = records(text)
    assert rec["aya_span"] == [1, 5]


def test_eval_per_identical_and_noisy(tmp_path):
    code, text = run("sifat", "--sura", 112)
    ref = tmp_path / "ref.jsonl"
    ref.write_text(text, encoding="utf-8")
    code, text = run("eval-per", "--ref", ref, "--hyp", ref)
    assert code == 0
    (report,) = records(text)
    assert report["average_per"] == 0.0 and len(report) == 12
    assert text.count("0.000000") == 12

    recs = records(ref.read_text(encoding="utf-8"))
    first = recs[0]["phonemes"].split()
    recs[0]["phonemes"] = " ".join(first[1:])
    hyp = tmp_path / "hyp.jsonl"
    hyp.write_text("\n".join(json.dumps(r, ensure_ascii=False) for r in recs), encoding="utf-8")
    total = sum(len(r["phonemes"].split()) for r in records(ref.read_text(encoding="utf-8")))
    _, text = run("eval-per", "--ref", ref, "--hyp", hyp)
    (report,) = records(text)
    assert report["per_phonemes"] == round(1 / total, 6)


def test_match_and_verify(tmp_path, corpus):
    seg = tmp_path / "036.txt"
    seg.write_text(plain_window(corpus, 36, 0, 30) + "\n" + plain_window(corpus, 36, 30, 30) + "\n", encoding="utf-8")
    code, text = run("match", seg, "--sura", 36)
    assert code == 0
    recs = records(text)
    assert [r["start_word"] for r in recs[:2]] == [0, 30]
    assert list(recs[0]) == ["index", "ratio", "start_word", "word_count", "matched_text"]
    assert recs[-1]["missing"][0]["start_word"] == 60

    code, text = run("verify", tmp_path)
    assert code == 0
    summary = records(text)[-1]["summary"]
    assert summary["suras"] == 1 and summary["segments"] == 2 and summary["unmatched"] == 0


def test_decode(tmp_path):
    rng = np.random.default_rng(0)
    path = tmp_path / "x.qpsl"
    with open(path, "wb") as f:
        write_qpsl(f, {"phonemes": random_log_probs(rng, 8, 43), "ghonna": random_log_probs(rng, 8, 3)})
    code, text = run("decode", path)
    assert code == 0
    recs = records(text)
    assert [r["level"] for r in recs] == ["phonemes", "ghonna"]
    assert len(recs[0]["phonemes"].split()) == len(recs[0]["tokens"])


@pytest.mark.parametrize(
    "argv",
    [["phonetize", "--bogus"], [], ["match", "x.txt"], ["config", "--validate", "a", "--config", "b"], ["nope"]],
)
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 1
    assert capsys.readouterr().err.strip()


def test_data_errors(tmp_path, capsys):
    missing = tmp_path / "none.txt"
    assert run("match", missing, "--sura", 36)[0] == 2
    junk = tmp_path / "junk.qpsl"
    junk.write_bytes(b"nope")
    assert run("decode", junk)[0] == 2
    assert run("verify", tmp_path)[0] == 2
    bad = tmp_path / "bad.cfg"
    bad.write_text("madd_aared_len = 3\n")
    assert run("phonetize", "--config", bad, "--sura", 112)[0] == 2
    err = capsys.readouterr().err.strip().splitlines()
    assert len(err) == 4


def _flags(parser):
    return {s for a in parser._actions for s in a.option_strings}


def test_help_lists_every_flag():
    parser = build_parser()
    sub = next(a for a in parser._actions if a.choices and "phonetize" in a.choices)
    assert set(sub.choices) == {"phonetize", "sifat", "match", "verify", "decode", "eval-per", "config"}
    for name, p in sub.choices.items():
        text = p.format_help()
        for flag in _flags(p):
            assert flag in text, (name, flag)
        for a in p._actions:
            if a.option_strings and a.help is None:
                pytest.fail(f"{name} {a.option_strings} has no help text")


def test_deterministic_output():
    assert run("sifat", "--sura", 1) == run("sifat", "--sura", 1)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quran_phonetics", "config"], capture_output=True, text=True)
    assert proc.returncode == 0 and "rewaya = hafs" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "quran_phonetics", "--nope"], capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stderr.count("\n") == 1
