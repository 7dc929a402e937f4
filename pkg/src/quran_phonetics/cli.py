"""qps: phonetize, extract sifat, verify recitations, decode logits, score PER.

Exit status: 0 success, 1 usage error, 2 data or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Iterable, TextIO

from . import ctc, metrics, moshaf
from .corpus import CorpusError, QuranCorpus, bundled_uthmani, load_tanzil_file
from .phonetizer import PhonetizerInputError, PipelineError, UtteranceContext, phonetize
from .qpsl import QPSLFormatError, load_logits
from .sifat import SIFAT_FIELDS, SifatError, SifatVector, extract_sifat
from .tasmeea import MatcherState, TasmeeaError, TasmeeaParams, match_segments, missing_portions

DATA_ERRORS = (
    CorpusError,
    moshaf.ConfigError,
    PhonetizerInputError,
    PipelineError,
    SifatError,
    TasmeeaError,
    QPSLFormatError,
    ctc.CTCInputError,
    metrics.MetricInputError,
    OSError,
    UnicodeDecodeError,
    json.JSONDecodeError,
)


class DataError(Exception):
    pass


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class Ratio(float):
    """Float printed with exactly six decimals."""


def dump(record: dict) -> str:
    parts = []
    for k, v in record.items():
        val = f"{v:.6f}" if isinstance(v, Ratio) else json.dumps(v, ensure_ascii=False)
        parts.append(f"{json.dumps(k)}: {val}")
    return "{" + ", ".join(parts) + "}"


def emit(out: TextIO, records: Iterable[dict]) -> None:
    for r in records:
        out.write(dump(r) + "\n")


def _load_corpus(path: str | None) -> QuranCorpus:
    return load_tanzil_file(path) if path else bundled_uthmani()


def _load_attrs(path: str | None) -> moshaf.MoshafAttributes:
    if not path:
        return moshaf.reference_attributes()
    attrs = moshaf.parse_attributes(Path(path).read_text(encoding="utf-8"))
    problems = moshaf.validate_attributes(attrs)
    if problems:
        raise DataError(f"{path}: " + "; ".join(problems))
    return attrs


def _aya_range(span: str | None, count: int) -> tuple[int, int]:
    if not span:
        return 1, count
    try:
        if "-" in span:
            a, b = (int(x) for x in span.split("-", 1))
        else:
            a = b = int(span)
    except ValueError:
        raise UsageError(f"bad aya range {span!r}") from None
    if not 1 <= a <= b <= count:
        raise DataError(f"aya range {span} outside 1..{count}")
    return a, b


def _phoneme_records(args, with_sifat: bool) -> Iterable[dict]:
    corpus = _load_corpus(args.quran)
    attrs = _load_attrs(args.config)
    ctx = UtteranceContext(args.utterance_start, args.pause_end)
    suras = [args.sura] if args.sura else corpus.suras
    for sura in suras:
        verses = corpus.sura_verses(sura)
        if not verses:
            raise DataError(f"sura {sura} not in corpus")
        a, b = _aya_range(args.ayat, len(verses))
        chosen = [v for v in verses if a <= v.aya_index <= b]
        groups = [chosen] if args.join else [[v] for v in chosen]
        for group in groups:
            text = " ".join(v.text for v in group)
            seq = phonetize(text, attrs, ctx)
            rec = {
                "sura": sura,
                "aya_span": [group[0].aya_index, group[-1].aya_index],
                "context": ctx.label,
                "phonemes": " ".join(seq.names()),
            }
            if with_sifat:
                rec["sifat"] = " ".join(extract_sifat(seq, attrs).codes())
            yield rec


def cmd_phonetize(args, out):
    emit(out, _phoneme_records(args, with_sifat=False))


def cmd_sifat(args, out):
    emit(out, _phoneme_records(args, with_sifat=True))


def _params(args) -> TasmeeaParams:
    return TasmeeaParams(
        overlap_words=args.overlap,
        window_words=args.window,
        acceptance_ratio=args.acceptance,
        include_istiaatha=args.istiaatha,
        include_sadaka=args.sadaka,
    )


def _match_records(segments: list[str], sura: int, params: TasmeeaParams, corpus: QuranCorpus, extra: dict):
    results = match_segments(segments, sura, params, corpus, MatcherState())
    for i, r in enumerate(results):
        m = r.matched
        yield {
            **extra,
            "index": i,
            "ratio": Ratio(r.ratio),
            "start_word": None if m is None else m.start_word,
            "word_count": None if m is None else m.word_count,
            "matched_text": None if m is None else m.text,
        }
    yield {**extra, "missing": missing_portions(results, corpus, sura)}


def _read_segments(path: Path) -> list[str]:
    return [ln.strip() for ln in path.read_text(encoding="utf-8").splitlines() if ln.strip()]


def cmd_match(args, out):
    corpus = _load_corpus(args.quran)
    emit(out, _match_records(_read_segments(Path(args.segments)), args.sura, _params(args), corpus, {}))


def cmd_verify(args, out):
    corpus = _load_corpus(args.quran)
    params = _params(args)
    root = Path(args.directory)
    if not root.is_dir():
        raise DataError(f"{root}: not a directory")
    files = sorted(p for p in root.iterdir() if p.suffix == ".txt" and p.stem.isdigit() and len(p.stem) == 3)
    if not files:
        raise DataError(f"{root}: no NNN.txt segment files")
    summary = {"suras": 0, "segments": 0, "unmatched": 0, "missing_words": 0}
    for path in files:
        sura = int(path.stem)
        records = list(_match_records(_read_segments(path), sura, params, corpus, {"sura": sura}))
        emit(out, records)
        summary["suras"] += 1
        summary["segments"] += len(records) - 1
        summary["unmatched"] += sum(1 for r in records[:-1] if r["matched_text"] is None)
        summary["missing_words"] += sum(g["word_count"] for g in records[-1]["missing"])
    emit(out, [{"summary": summary}])


def cmd_decode(args, out):
    with open(args.logits, "rb") as f:
        levels = load_logits(f, renormalize=args.renormalize)
    from .alphabet import ID_TO_PHONEME

    for name, matrix in levels.items():
        tokens = ctc.greedy_decode(matrix)
        rec = {"level": name, "tokens": tokens}
        if name == "phonemes":
            bad = [t for t in tokens if t not in ID_TO_PHONEME]
            if bad:
                raise DataError(f"phonemes: token id {bad[0]} outside the phoneme inventory")
            rec["phonemes"] = " ".join(ID_TO_PHONEME[t].value for t in tokens)
        emit(out, [rec])


def _level_sequences(rec: dict, where: str) -> dict[str, list[str]]:
    """Token sequences per level from one record.

    Accepts explicit level keys (space-separated strings or lists) and a
    ``sifat`` field of compact codes, which is expanded into the ten levels.
    """
    seqs: dict[str, list[str]] = {}
    for name in ctc.LEVELS:
        if name in rec:
            v = rec[name]
            seqs[name] = v.split() if isinstance(v, str) else [str(x) for x in v]
    if "sifat" in rec:
        codes = rec["sifat"].split() if isinstance(rec["sifat"], str) else rec["sifat"]
        try:
            vectors = [SifatVector.from_code(c) for c in codes]
        except ValueError as e:
            raise DataError(f"{where}: {e}") from None
        for name in SIFAT_FIELDS:
            seqs.setdefault(name, [getattr(v, name) for v in vectors])
    if not seqs:
        raise DataError(f"{where}: record has no level fields")
    return seqs


def _read_records(path: str) -> list[dict]:
    out = []
    for n, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if line.strip():
            rec = json.loads(line)
            if not isinstance(rec, dict):
                raise DataError(f"{path}:{n}: expected a JSON object")
            out.append((n, rec))
    return out


def _record_key(rec: dict, fallback: int):
    if "id" in rec:
        return ("id", rec["id"])
    if "sura" in rec and "aya_span" in rec:
        return ("aya", rec["sura"], tuple(rec["aya_span"]))
    return ("line", fallback)


def cmd_eval_per(args, out):
    refs = _read_records(args.ref)
    hyps = _read_records(args.hyp)
    hyp_by_key = {}
    for i, (n, rec) in enumerate(hyps):
        hyp_by_key[_record_key(rec, i)] = (n, rec)
    pairs: dict[str, list] = {}
    for i, (n, ref) in enumerate(refs):
        key = _record_key(ref, i)
        if key not in hyp_by_key:
            raise DataError(f"{args.ref}:{n}: no hypothesis record for {key}")
        hn, hyp = hyp_by_key[key]
        r = _level_sequences(ref, f"{args.ref}:{n}")
        h = _level_sequences(hyp, f"{args.hyp}:{hn}")
        for name in r:
            pairs.setdefault(name, []).append((r[name], h.get(name, [])))
    if len(hyps) != len(refs):
        raise DataError(f"record count differs: {len(refs)} references, {len(hyps)} hypotheses")
    report = metrics.per_report(pairs)
    emit(out, [{k: Ratio(v) for k, v in report.items()}])


def cmd_config(args, out):
    if args.validate:
        attrs = moshaf.parse_attributes(Path(args.validate).read_text(encoding="utf-8"))
        problems = moshaf.validate_attributes(attrs)
        for p in problems:
            print(f"{args.validate}: {p}", file=sys.stderr)
        if problems:
            raise DataError(f"{args.validate}: {len(problems)} violation(s)")
        out.write(f"{args.validate}: ok\n")
        return
    if args.config:
        out.write(moshaf.render_attributes(_load_attrs(args.config)))
        return
    for name in moshaf.FIELD_NAMES:
        if name in moshaf.REQUIRED_FIELDS:
            choices = "|".join(map(str, moshaf.CHOICES[name]))
            out.write(f"# {name} = <required: {choices}>\n")
        elif name == "madd_alleen_len":
            out.write(f"# {name} = <defaults to madd_aared_len>\n")
        else:
            out.write(f"{name} = {getattr(moshaf.MoshafAttributes(), name)}\n")


def _add_text_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quran", help="Tanzil sura|aya|text file (default: bundled Uthmani text)")
    p.add_argument("--config", help="Moshaf attribute file (default: reference attributes, all madds 4)")
    p.add_argument("--sura", type=int, help="only this sura (default: all)")
    p.add_argument("--ayat", help="aya range inside the sura, e.g. 3 or 1-7")
    p.add_argument("--join", action="store_true", help="phonetize the selected ayat as one utterance")
    p.add_argument(
        "--pause-end",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="the utterance ends with a pause (waqf); default on",
    )
    p.add_argument(
        "--utterance-start",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="the text begins a new utterance; default on",
    )


def _add_match_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quran", help="Tanzil sura|aya|text file (default: bundled Uthmani text)")
    p.add_argument("--window", type=int, default=30, help="nominal window width in words (default 30)")
    p.add_argument("--overlap", type=int, default=6, help="allowed overlap in words (default 6)")
    p.add_argument("--acceptance", type=float, default=0.5, help="minimum similarity ratio (default 0.5)")
    p.add_argument("--istiaatha", action="store_true", help="first segment may be the isti'adha")
    p.add_argument("--sadaka", action="store_true", help="last segment may be sadaqa Allahu al-azim")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qps", description="Quran phonetic script tools")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("phonetize", help="Uthmani text to phoneme records")
    _add_text_options(p)
    p.set_defaults(func=cmd_phonetize)

    p = sub.add_parser("sifat", help="phoneme records with a sifat column")
    _add_text_options(p)
    p.set_defaults(func=cmd_sifat)

    p = sub.add_parser("match", help="match transcript segments against one sura")
    p.add_argument("segments", help="UTF-8 file, one segment per line")
    p.add_argument("--sura", type=int, required=True, help="sura number 1..114")
    _add_match_options(p)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("verify", help="match a directory of NNN.txt segment files")
    p.add_argument("directory", help="directory holding 001.txt .. 114.txt")
    _add_match_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decode", help="greedy CTC decoding of a QPSL logit file")
    p.add_argument("logits", help="QPSL binary file")
    p.add_argument("--renormalize", action="store_true", help="renormalize rows that are not log-probabilities")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("eval-per", help="phoneme error rate per level")
    p.add_argument("--ref", required=True, help="reference records (JSON lines)")
    p.add_argument("--hyp", required=True, help="hypothesis records (JSON lines)")
    p.set_defaults(func=cmd_eval_per)

    p = sub.add_parser("config", help="validate or print Moshaf attributes")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--validate", metavar="FILE", help="check a config file; exit 2 listing violations")
    g.add_argument("--config", metavar="FILE", help="print the effective attributes of a config file")
    p.set_defaults(func=cmd_config)
    return ap


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return 1
    try:
        args.func(args, out)
    except UsageError as e:
        print(f"qps {args.command}: {e}", file=sys.stderr)
        return 1
    except (DataError, *DATA_ERRORS) as e:
        print(f"qps {args.command}: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
