"""Command line interface.

One subcommand per analysis, all sharing `--alphabet`, `--format`, and
`--seed`. Reports go to standard output, diagnostics to standard error,
and identical invocations on identical files produce byte-identical
output. Exit codes: 0 success, 1 data error (unreadable file, malformed
alphabet spec, empty corpus), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from .alphabet import (
    Alphabet,
    LetterSequence,
    builtin_alphabet,
    builtin_names,
    load_alphabet,
    normalize,
    tokenize_words,
)
from .cipher import LanguageModel, hill_climb_solve, parse_cryptogram
from .errors import InputError
from .freq import (
    compare_tables,
    count_digrams,
    count_letters,
    positional_stats,
    rank_order,
    stability_curve,
)
from .markov import fit_transitions, generate, independence_test, to_vc_sequence
from .markov import entropy_estimates
from .stylometry import (
    ORATOR_THRESHOLD,
    POETRY_THRESHOLD,
    alberti_test,
    blocks_of,
    compass_of_variation,
    lipogram_scan,
    two_sample_proportion_test,
    vc_profile,
)
from .zipf import fit_power_law, word_rank_frequency

FORMATS = ("csv", "json", "text")


@dataclass
class RunConfig:
    """Everything one invocation needs; built from parsed arguments."""

    subcommand: str
    alphabet: str = "en"
    inputs: tuple[str, ...] = ()
    format: str = "text"
    seed: int = 0
    restarts: int = 20
    alpha: float = 0.01
    min_count: int = 5
    length_threshold: int = 90
    sizes: tuple[int, ...] = ()
    model: str | None = None
    out: str | None = None
    order: int = 1
    length: int = 0
    reference: str | None = None
    block_size: int = 1000
    vc_corpus: str | None = None
    random_samples: bool = False

    def __post_init__(self):
        if self.format not in FORMATS:
            raise InputError(f"unknown format {self.format!r}")
        if self.seed < 0:
            raise InputError("seed must be nonnegative")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path!r}: {exc.strerror or exc}") from None


def _resolve_alphabet(name_or_path: str) -> Alphabet:
    if name_or_path in builtin_names():
        return builtin_alphabet(name_or_path)
    if os.path.exists(name_or_path):
        return load_alphabet(_read_text(name_or_path))
    raise InputError(
        f"{name_or_path!r} is neither a builtin alphabet ({', '.join(builtin_names())}) "
        "nor a readable spec file"
    )


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _num(v: float) -> str:
    return f"{v:.12g}"


def _corpus(cfg: RunConfig, index: int = 0) -> LetterSequence:
    ab = _resolve_alphabet(cfg.alphabet)
    return normalize(_read_text(cfg.inputs[index]), ab, source=cfg.inputs[index])


# ---------------------------------------------------------------- count


def _cmd_count(cfg: RunConfig) -> str:
    seq = _corpus(cfg)
    table = count_letters(seq)
    ranks = rank_order(table)
    rank_of = {ch: i + 1 for i, ch in enumerate(ranks)}
    if cfg.format == "csv":
        lines = ["letter,count,proportion,rank"]
        for ch in table.alphabet.letters:
            lines.append(f"{ch},{table.counts[ch]},{table.proportion(ch):.6f},{rank_of[ch]}")
        return "\n".join(lines) + "\n"
    if cfg.format == "json":
        d = table.to_json_dict()
        d["rank_order"] = ranks
        return _json(d)
    lines = [f"letters: {table.total}"]
    for ch in ranks:
        lines.append(f"  {ch}  {table.counts[ch]:>8}  {table.proportion(ch):.6f}")
    lines.append("rank order: " + "".join(ranks))
    return "\n".join(lines) + "\n"


def _cmd_digrams(cfg: RunConfig) -> str:
    seq = _corpus(cfg)
    table = count_digrams(seq)
    if cfg.format == "csv":
        return table.to_csv()
    if cfg.format == "json":
        return _json(table.to_json_dict())
    lines = [f"digrams: {table.total}"]
    pairs = sorted(table.counts.items(), key=lambda kv: (-kv[1], kv[0]))
    for (a, b), n in pairs:
        lines.append(f"  {a}{b}  {n:>8}  {n / table.total:.6f}")
    return "\n".join(lines) + "\n"


def _distance_row(d) -> dict:
    return {
        "total_variation": d.total_variation,
        "chi_square": d.chi_square,
        "rank_correlation": d.rank_correlation,
    }


def _cmd_compare(cfg: RunConfig) -> str:
    a = count_letters(_corpus(cfg, 0))
    b = count_letters(_corpus(cfg, 1))
    d = compare_tables(a, b)
    if cfg.format == "csv":
        return (
            "total_variation,chi_square,rank_correlation\n"
            f"{_num(d.total_variation)},{_num(d.chi_square)},{_num(d.rank_correlation)}\n"
        )
    if cfg.format == "json":
        return _json(_distance_row(d))
    return (
        f"total variation:  {d.total_variation:.6f}\n"
        f"chi-square:       {_num(d.chi_square)}\n"
        f"rank correlation: {d.rank_correlation:.6f}\n"
    )


def _random_subsample_curve(seq: LetterSequence, sizes: list[int], seed: int):
    # seeded selection sampling; one substream per requested size keeps
    # each entry independent of the order sizes are asked in
    from .freq import compare_tables as _compare, count_letters as _count
    from .rng import substream

    full = _count(seq)
    if full.total == 0:
        raise InputError("empty corpus")
    out = []
    for k, size in enumerate(sizes):
        if size <= 0 or size > len(seq.symbols):
            raise InputError(f"sample size {size} not in 1..{len(seq.symbols)}")
        rng = substream(seed, k)
        pool = list(seq.symbols)
        n = len(pool)
        for i in range(size):
            j = i + rng.next_below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        sample = LetterSequence(seq.alphabet, "".join(pool[:size]), source=f"{seq.source} sample")
        out.append((size, _compare(_count(sample), full)))
    return out


def _cmd_stability(cfg: RunConfig) -> str:
    if not cfg.sizes:
        raise InputError("stability requires --sizes")
    seq = _corpus(cfg)
    if cfg.random_samples:
        curve = _random_subsample_curve(seq, list(cfg.sizes), cfg.seed)
    else:
        curve = stability_curve(seq, list(cfg.sizes))
    if cfg.format == "csv":
        lines = ["size,total_variation,chi_square,rank_correlation"]
        for size, d in curve:
            lines.append(
                f"{size},{_num(d.total_variation)},{_num(d.chi_square)},{_num(d.rank_correlation)}"
            )
        return "\n".join(lines) + "\n"
    if cfg.format == "json":
        return _json([{"size": s, **_distance_row(d)} for s, d in curve])
    lines = [f"corpus length: {len(seq)}"]
    for size, d in curve:
        lines.append(f"  prefix {size:>8}: total variation {d.total_variation:.6f}")
    return "\n".join(lines) + "\n"


def _cmd_positions(cfg: RunConfig) -> str:
    ab = _resolve_alphabet(cfg.alphabet)
    words = tokenize_words(_read_text(cfg.inputs[0]), ab, source=cfg.inputs[0])
    ps = positional_stats(words)
    sections = [
        ("initial", ps.initial.counts),
        ("final", ps.final.counts),
        ("second", ps.second.counts),
        ("penultimate", ps.penultimate.counts),
        ("double", ps.doubles),
    ]
    if cfg.format == "csv":
        lines = ["section,letter,count"]
        for name, counts in sections:
            for ch in ab.letters:
                lines.append(f"{name},{ch},{counts[ch]}")
        return "\n".join(lines) + "\n"
    if cfg.format == "json":
        return _json(
            {
                "words": ps.word_count,
                **{name: {ch: counts[ch] for ch in ab.letters} for name, counts in sections},
            }
        )
    lines = [f"words: {ps.word_count}"]
    for name, counts in sections:
        top = sorted(ab.letters, key=lambda ch: (-counts[ch], ab.index(ch)))[:5]
        shown = ", ".join(f"{ch}:{counts[ch]}" for ch in top)
        lines.append(f"  {name:<12} {shown}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- style


def _profile_row(p) -> dict:
    return {
        "vowel_count": p.vowel_count,
        "consonant_count": p.consonant_count,
        "vowel_share": p.vowel_share,
        "vowels_per_100": p.vowels_per_100,
    }


def _fmt_opt(v: float | None) -> str:
    return "" if v is None else f"{v:.6f}"


def _cmd_style_vc(cfg: RunConfig) -> str:
    p = vc_profile(_corpus(cfg))
    if cfg.format == "csv":
        return (
            "vowel_count,consonant_count,vowel_share,vowels_per_100\n"
            f"{p.vowel_count},{p.consonant_count},{_fmt_opt(p.vowel_share)},{_fmt_opt(p.vowels_per_100)}\n"
        )
    if cfg.format == "json":
        return _json(_profile_row(p))
    return (
        f"vowels:     {p.vowel_count}\n"
        f"consonants: {p.consonant_count}\n"
        f"vowel share:    {_fmt_opt(p.vowel_share) or 'undefined'}\n"
        f"vowels per 100: {_fmt_opt(p.vowels_per_100) or 'undefined'}\n"
    )


def _cmd_style_alberti(cfg: RunConfig) -> str:
    p = vc_profile(_corpus(cfg))
    v = alberti_test(p)
    share6 = f"{float(v.vowel_share):.6f}"
    if cfg.format == "csv":
        return (
            "vowel_share,poetry_threshold,above_poetry,orator_threshold,above_orator,label\n"
            f"{share6},{POETRY_THRESHOLD},{str(v.above_poetry_threshold).lower()},"
            f"{ORATOR_THRESHOLD},{str(v.above_orator_threshold).lower()},{v.label}\n"
        )
    if cfg.format == "json":
        return _json(
            {
                "vowel_share": float(v.vowel_share),
                "vowel_share_exact": str(v.vowel_share),
                "poetry_threshold": str(POETRY_THRESHOLD),
                "above_poetry_threshold": v.above_poetry_threshold,
                "orator_threshold": str(ORATOR_THRESHOLD),
                "above_orator_threshold": v.above_orator_threshold,
                "label": v.label,
            }
        )
    return (
        f"vowel share {share6} ({v.vowel_share})\n"
        f"  above poetry threshold {POETRY_THRESHOLD}: {'yes' if v.above_poetry_threshold else 'no'}\n"
        f"  above orator threshold {ORATOR_THRESHOLD}: {'yes' if v.above_orator_threshold else 'no'}\n"
        f"verdict: {v.label}\n"
    )


def _cmd_style_compare(cfg: RunConfig) -> str:
    pa = vc_profile(_corpus(cfg, 0))
    pb = vc_profile(_corpus(cfg, 1))
    z, p = two_sample_proportion_test(pa, pb)
    if cfg.format == "csv":
        return f"z,p_value\n{_num(z)},{_num(p)}\n"
    if cfg.format == "json":
        return _json({"z": z, "p_value": p})
    return f"z statistic: {_num(z)}\ntwo-sided p: {_num(p)}\n"


def _cmd_style_compass(cfg: RunConfig) -> str:
    seq = _corpus(cfg)
    profiles = blocks_of(seq, block_size=cfg.block_size)
    s = compass_of_variation(profiles)
    if cfg.format == "csv":
        return (
            "minimum,median,maximum,sample_count\n"
            f"{s.minimum:.6f},{s.median:.6f},{s.maximum:.6f},{s.sample_count}\n"
        )
    if cfg.format == "json":
        return _json(
            {
                "minimum": s.minimum,
                "median": s.median,
                "maximum": s.maximum,
                "sample_count": s.sample_count,
            }
        )
    return (
        f"vowels per 100 consonants over {s.sample_count} blocks of {cfg.block_size}:\n"
        f"  minimum {s.minimum:.6f}\n  median  {s.median:.6f}\n  maximum {s.maximum:.6f}\n"
    )


def _cmd_lipogram(cfg: RunConfig) -> str:
    if not cfg.reference:
        raise InputError("lipogram requires --reference")
    ab = _resolve_alphabet(cfg.alphabet)
    observed = count_letters(normalize(_read_text(cfg.inputs[0]), ab, source=cfg.inputs[0]))
    reference = count_letters(normalize(_read_text(cfg.reference), ab, source=cfg.reference))
    flags = lipogram_scan(observed, reference, alpha=cfg.alpha)
    rows = [
        {
            "letter": f.letter,
            "observed": f.observed,
            "expected": f.expected,
            "p_value": f.p_value,
        }
        for f in flags
    ]
    if cfg.format == "csv":
        lines = ["letter,observed,expected,p_value"]
        for r in rows:
            lines.append(f"{r['letter']},{r['observed']},{_num(r['expected'])},{_num(r['p_value'])}")
        return "\n".join(lines) + "\n"
    if cfg.format == "json":
        return _json(rows)
    if not rows:
        return "no letters flagged\n"
    lines = [f"{len(rows)} letter(s) flagged at alpha {_num(cfg.alpha)} (Bonferroni-corrected):"]
    for r in rows:
        lines.append(
            f"  {r['letter']}: observed {r['observed']}, expected {r['expected']:.1f}, "
            f"p {_num(r['p_value'])}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- markov


def _cmd_markov_test(cfg: RunConfig) -> str:
    seq = _corpus(cfg)
    if len(seq) < 2:
        raise InputError("markov test needs at least two letters")
    report = independence_test(fit_transitions(to_vc_sequence(seq)))
    d = report.to_json_dict()
    if cfg.format == "csv":
        keys = list(d)
        return ",".join(keys) + "\n" + ",".join(_num(d[k]) if isinstance(d[k], float) else str(d[k]) for k in keys) + "\n"
    if cfg.format == "json":
        return _json(d)
    return (
        f"chi-square: {_num(d['chi_square'])} (df {d['df']})\n"
        f"p-value:    {_num(d['p_value'])}\n"
        f"P(V->V) {d['p_vv']:.6f}  P(V->C) {d['p_vc']:.6f}\n"
        f"P(C->V) {d['p_cv']:.6f}  P(C->C) {d['p_cc']:.6f}\n"
    )


def _cmd_entropy(cfg: RunConfig) -> str:
    seq = _corpus(cfg)
    rep = entropy_estimates(count_letters(seq), count_digrams(seq))
    if cfg.format == "csv":
        return f"h0,h1,h2\n{_num(rep.h0)},{_num(rep.h1)},{_num(rep.h2)}\n"
    if cfg.format == "json":
        return _json({"h0": rep.h0, "h1": rep.h1, "h2": rep.h2})
    return (
        f"h0 (alphabet size):      {rep.h0:.6f} bits/letter\n"
        f"h1 (letter frequencies): {rep.h1:.6f} bits/letter\n"
        f"h2 (digram conditional): {rep.h2:.6f} bits/letter\n"
    )


def _cmd_generate(cfg: RunConfig) -> str:
    ab = _resolve_alphabet(cfg.alphabet)
    if (cfg.model is None) == (cfg.vc_corpus is None):
        raise InputError("generate requires exactly one of --model or --vc-corpus")
    if cfg.model is not None:
        model = LanguageModel.load(cfg.model, ab)
        out = generate(model, cfg.length, seed=cfg.seed, order=cfg.order)
        rendered = out.symbols
        mode = f"order-{cfg.order}"
    else:
        seq = normalize(_read_text(cfg.vc_corpus), ab, source=cfg.vc_corpus)
        if len(seq) < 2:
            raise InputError("vc corpus needs at least two letters")
        out = generate(fit_transitions(to_vc_sequence(seq)), cfg.length, seed=cfg.seed)
        rendered = out.states
        mode = "vc-chain"
    if cfg.format == "csv":
        return f"mode,order,length,seed,sequence\n{mode},{cfg.order},{cfg.length},{cfg.seed},{rendered}\n"
    if cfg.format == "json":
        return _json({"mode": mode, "length": cfg.length, "seed": cfg.seed, "sequence": rendered})
    return rendered + "\n"


def _cmd_zipf(cfg: RunConfig) -> str:
    ab = _resolve_alphabet(cfg.alphabet)
    words = tokenize_words(_read_text(cfg.inputs[0]), ab, source=cfg.inputs[0])
    rf = word_rank_frequency(words)
    try:
        fit = fit_power_law(rf, min_count=cfg.min_count)
    except InputError:
        fit = None
    if cfg.format == "csv":
        lines = ["rank,word,count"]
        for e in rf.entries:
            lines.append(f"{e.rank},{e.word},{e.count}")
        return "\n".join(lines) + "\n"
    if cfg.format == "json":
        return _json(
            {
                "entries": [{"rank": e.rank, "word": e.word, "count": e.count} for e in rf.entries],
                "fit": fit.to_json_dict() if fit else None,
            }
        )
    lines = [f"{len(rf.entries)} distinct words, {rf.total} tokens; top 10:"]
    for e in rf.entries[:10]:
        lines.append(f"  {e.rank:>4}  {e.word:<20} {e.count}")
    if fit:
        lines.append(
            f"fit: exponent {_num(fit.exponent)}, r^2 {fit.r_squared:.6f}, "
            f"{fit.points_used} points (count >= {cfg.min_count})"
        )
    else:
        lines.append(f"fit: not enough entries with count >= {cfg.min_count}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- cipher


def _cmd_solve(cfg: RunConfig) -> str:
    if not cfg.model:
        raise InputError("solve requires --model")
    ab = _resolve_alphabet(cfg.alphabet)
    model = LanguageModel.load(cfg.model, ab)
    cryptogram = parse_cryptogram(_read_text(cfg.inputs[0]), ab, source=cfg.inputs[0])
    report = hill_climb_solve(
        cryptogram,
        model,
        restarts=cfg.restarts,
        seed=cfg.seed,
        warning_threshold=cfg.length_threshold,
    )
    warning = (
        None
        if report.length_warning is None
        else {"length": report.length_warning.length, "threshold": report.length_warning.threshold}
    )
    key_string = report.best_key.target_string()
    if cfg.format == "csv":
        lines = [
            "field,value",
            f"best_score,{_num(report.best_score)}",
            f"restarts_run,{report.restarts_run}",
            f"length_warning,{'' if warning is None else warning['length']}",
            f"key,{key_string}",
            f"plaintext,{report.plaintext.symbols}",
        ]
        return "\n".join(lines) + "\n"
    if cfg.format == "json":
        return _json(
            {
                "best_score": report.best_score,
                "restarts_run": report.restarts_run,
                "length_warning": warning,
                "key": {ch: report.best_key.mapping[ch] for ch in ab.letters},
                "plaintext": report.plaintext.symbols,
            }
        )
    lines = [
        f"best score: {_num(report.best_score)} over {report.restarts_run} restarts",
        f"key (plain {''.join(ab.letters)}):",
        f"     cipher {key_string}",
        "plaintext:",
        report.plaintext.symbols,
    ]
    if warning is not None:
        lines.append(report.length_warning.message())
    return "\n".join(lines) + "\n"


def _cmd_train_model(cfg: RunConfig) -> str:
    if not cfg.out:
        raise InputError("train-model requires --out")
    seq = _corpus(cfg)
    if len(seq) == 0:
        raise InputError("empty corpus")
    model = LanguageModel.train(seq)
    upath, dpath = model.save(cfg.out)
    if cfg.format == "csv":
        return f"file,letters\n{upath},{model.unigram.total}\n{dpath},{model.digram.total}\n"
    if cfg.format == "json":
        return _json(
            {
                "unigram": upath,
                "digram": dpath,
                "letters": model.unigram.total,
                "digrams": model.digram.total,
            }
        )
    return f"wrote {upath} ({model.unigram.total} letters) and {dpath} ({model.digram.total} digrams)\n"


_HANDLERS = {
    "count": _cmd_count,
    "digrams": _cmd_digrams,
    "compare": _cmd_compare,
    "stability": _cmd_stability,
    "positions": _cmd_positions,
    "style vc": _cmd_style_vc,
    "style alberti": _cmd_style_alberti,
    "style compare": _cmd_style_compare,
    "style compass": _cmd_style_compass,
    "lipogram": _cmd_lipogram,
    "markov test": _cmd_markov_test,
    "entropy": _cmd_entropy,
    "generate": _cmd_generate,
    "zipf": _cmd_zipf,
    "solve": _cmd_solve,
    "train-model": _cmd_train_model,
}


def run(config: RunConfig) -> int:
    """Execute one subcommand; returns the process exit status."""
    handler = _HANDLERS[config.subcommand]
    sys.stdout.write(handler(config))
    return 0


# table-like commands default to csv, report-like commands to json,
# narrative ones to text; --format always overrides
_DEFAULT_FORMATS = {
    "count": "csv",
    "digrams": "csv",
    "stability": "csv",
    "positions": "csv",
    "lipogram": "csv",
    "zipf": "csv",
    "solve": "json",
    "markov test": "json",
    "entropy": "json",
}


def _add_common(p: argparse.ArgumentParser, command: str):
    p.add_argument("--alphabet", default="en", help="builtin name or spec file path")
    p.add_argument(
        "--format",
        default=_DEFAULT_FORMATS.get(command, "text"),
        choices=FORMATS,
    )
    p.add_argument("--seed", type=int, default=0, help="64-bit seed for randomized steps")


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--sizes must be a comma list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="letterlab",
        description="Letter counting, frequency cryptanalysis, stylometry, and text statistics.",
    )
    parser.add_argument("--version", action="version", version=f"letterlab {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, inputs=1, **kwargs):
        p = sub.add_parser(name, **kwargs)
        _add_common(p, name)
        for i in range(inputs):
            p.add_argument(f"input{i}" if inputs > 1 else "input", help="corpus file or - for stdin")
        return p

    add("count", help="letter frequency table with ranks")
    add("digrams", help="digram frequency table")
    add("compare", inputs=2, help="distance between two corpora's letter tables")

    p = add("stability", help="sample-size distance to the full-corpus table")
    p.add_argument("--sizes", type=_parse_sizes, required=True, help="comma list of prefix lengths")
    p.add_argument(
        "--random",
        dest="random_samples",
        action="store_true",
        help="draw seeded random subsamples instead of prefixes",
    )

    add("positions", help="word-position letter statistics")

    style = sub.add_parser("style", help="vowel/consonant stylometry")
    style_sub = style.add_subparsers(dest="style_command", required=True)

    p = style_sub.add_parser("vc", help="vowel/consonant profile")
    _add_common(p, "style vc")
    p.add_argument("input")
    p = style_sub.add_parser("alberti", help="poetry/orator threshold verdict")
    _add_common(p, "style alberti")
    p.add_argument("input")
    p = style_sub.add_parser("compare", help="two-sample vowel share z-test")
    _add_common(p, "style compare")
    p.add_argument("input0")
    p.add_argument("input1")
    p = style_sub.add_parser("compass", help="spread of vowels-per-100 over fixed blocks")
    _add_common(p, "style compass")
    p.add_argument("input")
    p.add_argument("--block-size", type=int, default=1000)

    p = add("lipogram", help="flag suspiciously underused letters")
    p.add_argument("--reference", required=True, help="reference corpus file")
    p.add_argument("--alpha", type=float, default=0.01)

    markov = sub.add_parser("markov", help="vowel/consonant chain analyses")
    markov_sub = markov.add_subparsers(dest="markov_command", required=True)
    p = markov_sub.add_parser("test", help="chi-square test of serial independence")
    _add_common(p, "markov test")
    p.add_argument("input")

    add("entropy", help="order-0/1/2 entropy estimates")

    p = sub.add_parser("generate", help="sample text from a fitted model")
    _add_common(p, "generate")
    p.add_argument("--model", help="model file prefix (from train-model)")
    p.add_argument("--vc-corpus", help="fit a V/C chain from this corpus instead")
    p.add_argument("--order", type=int, default=1, choices=(0, 1))
    p.add_argument("--length", type=int, required=True)

    p = add("zipf", help="word rank-frequency table and power-law fit")
    p.add_argument("--min-count", type=int, default=5)

    p = add("solve", help="break a monoalphabetic substitution cipher")
    p.add_argument("--model", required=True, help="model file prefix (from train-model)")
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--length-threshold", type=int, default=90)

    p = add("train-model", help="count unigram/digram tables into model CSV files")
    p.add_argument("--out", required=True, help="output file prefix")

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    sub = args.subcommand
    if sub == "style":
        sub = f"style {args.style_command}"
    elif sub == "markov":
        sub = f"markov {args.markov_command}"
    inputs = []
    for name in ("input", "input0", "input1"):
        if hasattr(args, name):
            inputs.append(getattr(args, name))
    kwargs = {}
    for cfg_name, arg_name in [
        ("alpha", "alpha"),
        ("min_count", "min_count"),
        ("restarts", "restarts"),
        ("sizes", "sizes"),
        ("model", "model"),
        ("out", "out"),
        ("order", "order"),
        ("length", "length"),
        ("reference", "reference"),
        ("block_size", "block_size"),
        ("vc_corpus", "vc_corpus"),
        ("length_threshold", "length_threshold"),
        ("random_samples", "random_samples"),
    ]:
        if hasattr(args, arg_name) and getattr(args, arg_name) is not None:
            kwargs[cfg_name] = getattr(args, arg_name)
    return RunConfig(
        subcommand=sub,
        alphabet=args.alphabet,
        inputs=tuple(inputs),
        format=args.format,
        seed=args.seed,
        **kwargs,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return run(_config_from_args(args))
    except InputError as exc:
        print(f"letterlab: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"letterlab: error: {exc}", file=sys.stderr)
        return 1


def entrypoint():
    sys.exit(main())
