"""Acceptance suite. Run with ``pytest tests/test_acceptance.py -s`` to see
one PASS/FAIL line per criterion."""
import itertools
import json
import random
import re
import time
from pathlib import Path

import numpy as np
import pytest

from lexisent import (
    AFINN_SCALE,
    ANEW_SCALE,
    Lexicon,
    ScoringScheme,
    build_index,
    DualStrength,
    collapse_dual,
    learning_curve,
    load_afinn,
    pearson,
    polarity_counts,
    porter_stem,
    scheme_sweep,
    score_text,
    score_texts,
    spearman,
    strip_phrases,
    tokenize,
)
from lexisent.cli import main
from lexisent.experiments import five_number_summary

from conftest import synthetic_texts
from oracles import collapse_by_rule, pearson_exact, sign, spearman_bruteforce
from porter_vectors import CURATED

ROOT = Path(__file__).resolve().parents[1]


def report(number, ok, detail):
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
    assert ok, detail


def test_1_bundled_lexicon_audit():
    t0 = time.perf_counter()
    lex = load_afinn()
    counts = polarity_counts(lex)
    removed = len(lex) - len(strip_phrases(lex))
    elapsed = time.perf_counter() - t0
    ok = len(lex) == 2477 and counts == (1598, 878, 1) and removed == 15 and elapsed < 1
    report(1, ok, f"{len(lex)} entries, (neg, pos, neutral) = {counts}, "
                  f"{removed} phrases, {elapsed:.3f}s")


def test_2_correlation_oracle():
    rng = random.Random(2)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(200):
        n = rng.randint(3, 50)
        # few distinct levels so ties are common
        levels = rng.randint(2, 8)
        x = [rng.randint(0, levels) + rng.choice([0, 0.5]) for _ in range(n)]
        y = [rng.gauss(0, 1) if rng.random() < 0.5 else float(rng.randint(-3, 3)) for _ in range(n)]
        for got, want in ((pearson(x, y), pearson_exact(x, y)),
                          (spearman(x, y), spearman_bruteforce(x, y))):
            if np.isnan(want):
                assert np.isnan(got)
            else:
                worst = max(worst, abs(got - want))
    elapsed = time.perf_counter() - t0
    report(2, worst <= 1e-10 and elapsed < 1,
           f"200 series, max |error| = {worst:.2e}, {elapsed:.3f}s")


def test_3_porter_conformance():
    t0 = time.perf_counter()
    misses = [(w, s, porter_stem(w)) for w, s in CURATED if porter_stem(w) != s]
    elapsed = time.perf_counter() - t0
    report(3, len(CURATED) >= 50 and not misses and elapsed < 1,
           f"{len(CURATED) - len(misses)}/{len(CURATED)} curated pairs agree, {elapsed:.3f}s"
           + (f", first miss {misses[0]}" if misses else ""))


def test_4_dual_collapse_exhaustive():
    pairs = list(itertools.product(range(1, 6), range(-5, 0)))
    bad = [(p, n) for p, n in pairs if collapse_dual(DualStrength(p, n)) != collapse_by_rule(p, n)]
    report(4, len(pairs) == 25 and not bad, f"{len(pairs) - len(bad)}/25 pairs agree")


def test_5_scorer_identities():
    rng = random.Random(5)
    vocab = [f"w{i}" for i in range(40)]
    t0 = time.perf_counter()
    failures = 0
    for _ in range(1000):
        scale = rng.choice([AFINN_SCALE, ANEW_SCALE])
        k = rng.randint(1, len(vocab))
        if scale is AFINN_SCALE:
            vals = {w: rng.randint(-5, 5) for w in rng.sample(vocab, k)}
        else:
            vals = {w: rng.choice([rng.randint(1, 9), round(rng.uniform(1, 9), 2)])
                    for w in rng.sample(vocab, k)}
        index = build_index(Lexicon("r", scale, vals))
        text = " ".join(rng.choice(vocab + ["x", "y"]) for _ in range(rng.randint(0, 25)))
        toks = tokenize(text)
        nu = scale.neutral
        mean = score_text(toks, index, ScoringScheme.MEAN).value
        total = score_text(toks, index, ScoringScheme.SUM).value
        quant = score_text(toks, index, ScoringScheme.QUANTIZED).value
        extreme = score_text(toks, index, ScoringScheme.EXTREME).value
        devs = [vals[t.text] - nu for t in toks if t.text in vals and vals[t.text] != nu]
        big = max((abs(d) for d in devs), default=0.0)
        tied = {sign(d) for d in devs if abs(d) == big} == {-1, 1}
        ok = (
            abs((total - nu) - (mean - nu) * len(toks)) <= 1e-12
            and quant == sign(mean - nu)
            and abs(extreme - nu) == (0.0 if tied else big)
        )
        failures += not ok
    elapsed = time.perf_counter() - t0
    report(5, failures == 0 and elapsed < 5,
           f"{1000 - failures}/1000 instances satisfy all identities, {elapsed:.3f}s")


def test_6_synthetic_end_to_end():
    t0 = time.perf_counter()
    lex = strip_phrases(load_afinn())
    texts = synthetic_texts(lex, 500, seed=20111)
    gold = score_texts(texts, build_index(lex), ScoringScheme.MEAN)
    sweep_p = scheme_sweep(texts, lex, gold=gold)[ScoringScheme.MEAN][0]
    sizes = [5, 50, 500, len(lex)]

    def run():
        return learning_curve(texts, lex, sizes, resamples=50, seed=2011, gold=gold)

    first, second = run(), run()
    reproducible = all(
        a.size == b.size
        and np.array_equal(a.pearson_samples, b.pearson_samples, equal_nan=True)
        and np.array_equal(a.spearman_samples, b.spearman_samples, equal_nan=True)
        for a, b in zip(first, second)
    )
    full = first[-1].pearson_samples
    zero_var = len(set(full)) == 1
    med_full = five_number_summary(full)[2]
    med_5 = five_number_summary(first[0].pearson_samples)[2]
    elapsed = time.perf_counter() - t0
    ok = (abs(sweep_p - 1.0) <= 1e-9 and reproducible and zero_var
          and med_full >= med_5 and elapsed < 10)
    report(6, ok, f"sweep Pearson {sweep_p!r}, reproducible={reproducible}, "
                  f"zero variance at full={zero_var}, median {med_5:.3f} (5) -> "
                  f"{med_full:.3f} (full), {elapsed:.2f}s")


REFERENCE_TARGETS = [".564", ".525", ".374", ".458", ".610", ".596", ".544", ".422", ".491",
                 ".616", "299", "0.49", "0.52", "0.81", "0.03"]


def test_7_table_layout_and_documented_targets(tmp_path, capsys):
    # stand-ins for the non-redistributable inputs, in the documented formats
    rng = random.Random(7)
    words = ["good", "bad", "love", "hate", "happy", "sad", "great", "awful"]
    pos, neg = words[0::2], words[1::2]
    rows = []
    for i in range(30):
        text = " ".join(rng.choice(words + ["the", "day"]) for _ in range(6))
        ratings = ",".join(str(rng.randint(1, 9)) for _ in range(10))
        rows.append(f"tw{i}\t{text}\t{ratings}\n")
    (tmp_path / "amt.tsv").write_text("".join(rows))
    (tmp_path / "anew.txt").write_text("".join(
        f"{w}\t{7.5 if w in pos else 2.5}\n" for w in words))
    (tmp_path / "gi_pos.txt").write_text("\n".join(pos[:2]) + "\n")
    (tmp_path / "gi_neg.txt").write_text("\n".join(neg[:2]) + "\n")
    (tmp_path / "of_pos.txt").write_text("\n".join(pos) + "\n")
    (tmp_path / "of_neg.txt").write_text("\n".join(neg) + "\n")
    (tmp_path / "ss.tsv").write_text("".join(
        f"tw{i}\t{rng.randint(1, 5)}\t{-rng.randint(1, 5)}\n" for i in range(30)))

    code = main([
        "eval", "--corpus", str(tmp_path / "amt.tsv"), "--gold-name", "AMT",
        "--lexicon", "My=builtin:afinn", "--lexicon", f"ANEW={tmp_path / 'anew.txt'}",
        "--scale", "-5:0:5", "--scale", "1:5:9",
        "--polarity-pos", f"GI={tmp_path / 'gi_pos.txt'}", "--polarity-neg", str(tmp_path / "gi_neg.txt"),
        "--polarity-pos", f"OF={tmp_path / 'of_pos.txt'}", "--polarity-neg", str(tmp_path / "of_neg.txt"),
        "--dual-column", f"SS={tmp_path / 'ss.tsv'}", "--out", str(tmp_path / "out"),
    ])
    stdout = capsys.readouterr().out
    pearson_block = stdout.split("Pearson\n")[1].split("\nSpearman")[0].splitlines()
    header = pearson_block[0].split()
    body = [line.split() for line in pearson_block[1:]]
    # upper triangle: row i lists its name then 5 - i values
    layout_ok = (
        code == 0
        and header == ["My", "ANEW", "GI", "OF", "SS"]
        and [r[0] for r in body] == ["AMT", "My", "ANEW", "GI", "OF"]
        and [len(r) - 1 for r in body] == [5, 4, 3, 2, 1]
        and all(re.fullmatch(r"-?\d\.\d{3}|n/a", c) for r in body for c in r[1:])
    )
    doc = json.loads((tmp_path / "out" / "correlations.json").read_text())
    layout_ok = layout_ok and doc["columns"] == ["AMT", "My", "ANEW", "GI", "OF", "SS"]

    readme = (ROOT / "README.md").read_text(encoding="utf-8")
    missing = [t for t in REFERENCE_TARGETS if t not in readme]
    report(7, layout_ok and not missing,
           f"table layout {'ok' if layout_ok else 'wrong'}; "
           f"reference targets missing from README: {missing or 'none'}")


def test_8_cli_determinism(tmp_path, capsys):
    lex = strip_phrases(load_afinn())
    texts = synthetic_texts(lex, 60, seed=8)
    (tmp_path / "c.tsv").write_text("".join(
        f"t{i}\t{t}\t{(i % 9) + 1},{((i * 7) % 9) + 1}\n" for i, t in enumerate(texts)))
    (tmp_path / "l.txt").write_text("good\t3\nbad\t-3\nhappy\t3\nsad\t-2\n")
    c = str(tmp_path / "c.tsv")
    commands = {
        "score": ["score", "--corpus", c, "--scheme", "all", "--format", "json"],
        "eval": ["eval", "--corpus", c, "--scheme", "all", "--lexicon", "builtin:afinn",
                 "--lexicon", str(tmp_path / "l.txt")],
        "compare": ["compare", "--lexicon", "builtin:afinn", "--lexicon", str(tmp_path / "l.txt"),
                    "--match", "stemmed", "--corpus", c],
        "curve": ["curve", "--corpus", c, "--sizes", "5,50,full", "--resamples", "10",
                  "--seed", "8"],
    }
    differing = []
    for name, argv in commands.items():
        runs = []
        for k in range(2):
            out = tmp_path / f"{name}{k}"
            code = main(argv + ["--out", str(out)])
            stdout = capsys.readouterr().out
            files = {p.name: p.read_bytes() for p in sorted(out.iterdir())}
            runs.append((code, stdout, files))
        if runs[0] != runs[1] or runs[0][0] != 0 or not runs[0][2]:
            differing.append(name)
    report(8, not differing, f"{len(commands) - len(differing)}/{len(commands)} commands "
                             "byte-identical across two runs")
