"""Command-line interface: ``lexisent score|eval|compare|curve``."""
from __future__ import annotations

import argparse
import io
import sys
from pathlib import Path

from . import reports
from ._validation import FormatError
from .compare import (
    intersect,
    intersection_csv,
    intersection_rank_correlation,
    intersection_sublexicons,
    sign_discrepancies,
)
from .corpus import (
    LabeledText,
    ScoreColumn,
    gold_column,
    load_corpus,
    load_dual_column,
    load_score_column,
)
from .experiments import (
    correlation_matrix,
    coverage,
    default_sizes,
    learning_curve,
    summarize_boxplot,
)
from .lexicon import (
    AFINN_SCALE,
    Lexicon,
    ValenceScale,
    load_afinn,
    load_polarity_lists,
    load_valence_list,
    strip_phrases,
)
from .matching import MatchStrategy, build_index
from .scoring import ScoringScheme, score_text
from .stats import is_defined, pearson, spearman
from .tokenize import tokenize

BUILTIN_AFINN = "builtin:afinn"
SCHEME_CHOICES = [s.value for s in ScoringScheme] + ["all"]


class UsageError(Exception):
    pass


def _split_named(value: str) -> tuple[str | None, str]:
    name, eq, path = value.partition("=")
    if eq and name and "/" not in name:
        return name, path
    return None, value


def _read_lines(path: str) -> list[str]:
    with open(path, encoding="utf-8", newline="") as fh:
        return fh.read().split("\n")


def _load_lexicons(args) -> list[Lexicon]:
    specs = args.lexicon or []
    scales = args.scale or []
    if len(scales) not in (0, 1, len(specs)):
        raise UsageError(f"got {len(scales)} --scale values for {len(specs)} --lexicon values")
    lexicons = []
    for i, spec in enumerate(specs):
        name, path = _split_named(spec)
        if path == BUILTIN_AFINN:
            lex = load_afinn()
            lexicons.append(lex if name is None else lex.restrict(lex, name))
            continue
        scale_text = scales[i] if len(scales) == len(specs) else (scales[0] if scales else None)
        scale = ValenceScale.parse(scale_text) if scale_text else AFINN_SCALE
        lexicons.append(
            load_valence_list(_read_lines(path), scale, name or Path(path).stem, source=path)
        )
    pos, neg = args.polarity_pos or [], args.polarity_neg or []
    if len(pos) != len(neg):
        raise UsageError("--polarity-pos and --polarity-neg must be given in pairs")
    for p, n in zip(pos, neg):
        name, p_path = _split_named(p)
        lexicons.append(load_polarity_lists(p_path, n, name or Path(p_path).stem))
    names = [lex.name for lex in lexicons]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        raise UsageError(f"lexicon names must be unique, repeated: {', '.join(dupes)}")
    return lexicons


def _schemes(value: str) -> list[ScoringScheme]:
    return list(ScoringScheme) if value == "all" else [ScoringScheme.coerce(value)]


def _load_corpus_file(path: str) -> list[LabeledText]:
    return load_corpus(_read_lines(path), source=path)


def _emit(args, files: dict[str, str], summary: str) -> None:
    """Write report files (all rendered up front) then the stdout summary."""
    wanted = {"csv": (".csv",), "json": (".json",), "both": (".csv", ".json")}[args.format]
    files = {k: v for k, v in files.items() if k.endswith(wanted)}
    reports.write_outputs(args.out, files)
    sys.stdout.write(summary)


# -- score ---------------------------------------------------------------------


def cmd_score(args) -> int:
    lexicons = _load_lexicons(args)
    if not lexicons:
        lexicons = [load_afinn()]
    if len(lexicons) != 1:
        raise UsageError("score takes exactly one lexicon")
    lex = strip_phrases(lexicons[0])
    index = build_index(lex, args.match)
    schemes = _schemes(args.scheme)

    if args.raw:
        lines = _read_lines(args.corpus)
        if lines and lines[-1] == "":
            lines.pop()
        items = [(str(i), text.rstrip("\r")) for i, text in enumerate(lines, start=1)]
    else:
        items = [(t.id, t.text) for t in _load_corpus_file(args.corpus)]

    rows = []
    for rid, text in items:
        toks = tokenize(text)
        for scheme in schemes:
            rows.append((rid, scheme.value, score_text(toks, index, scheme).value))

    if args.format == "json":
        text = reports.dumps([{"id": r, "scheme": s, "value": v} for r, s, v in rows])
    elif len(schemes) == 1:
        text = reports.csv_text((r, reports.fmt_float(v)) for r, _, v in rows)
    else:
        text = reports.csv_text((r, s, reports.fmt_float(v)) for r, s, v in rows)
    if args.out:
        name = "scores.json" if args.format == "json" else "scores.csv"
        reports.write_outputs(args.out, {name: text})
    else:
        sys.stdout.write(text)
    return 0


# -- eval ----------------------------------------------------------------------


def cmd_eval(args) -> int:
    corpus = _load_corpus_file(args.corpus)
    lexicons = _load_lexicons(args)
    if not lexicons and not args.column and not args.dual_column:
        lexicons = [load_afinn()]
    schemes = _schemes(args.scheme)

    columns: list[ScoreColumn] = []
    cov = {}
    for lex in lexicons:
        lex = strip_phrases(lex)
        index = build_index(lex, args.match)
        toks = [tokenize(t.text) for t in corpus]
        c = coverage(corpus, lex, args.match)
        cov[lex.name] = {
            "total_tokens": c.total_tokens, "unique_tokens": c.unique_tokens,
            "unique_matched": c.unique_matched, "lexicon_size": c.lexicon_size,
        }
        for scheme in schemes:
            name = lex.name if len(schemes) == 1 else f"{lex.name}:{scheme.value}"
            columns.append(ScoreColumn(name, [score_text(t, index, scheme).value for t in toks]))
    for spec in args.column or []:
        name, path = _split_named(spec)
        columns.append(load_score_column(_read_lines(path), corpus, name or Path(path).stem,
                                         source=path))
    for spec in args.dual_column or []:
        name, path = _split_named(spec)
        columns.append(load_dual_column(_read_lines(path), corpus, name or Path(path).stem,
                                        source=path))

    gold = gold_column(corpus, args.gold_name)
    names = [gold.name] + [c.name for c in columns]
    if len(set(names)) != len(names):
        raise UsageError(f"column names must be unique: {names}")
    report = correlation_matrix(gold, columns)

    meta = {"corpus_size": len(corpus), "match": MatchStrategy.coerce(args.match).value,
            "coverage": cov}
    files = {
        "correlations_pearson.csv": reports.matrix_csv(report, "pearson"),
        "correlations_spearman.csv": reports.matrix_csv(report, "spearman"),
        "correlations.json": reports.correlation_json(report, meta),
    }
    out = io.StringIO()
    out.write(f"texts: {len(corpus)}\n")
    for name, c in cov.items():
        out.write(
            f"{name}: {c['total_tokens']} tokens, {c['unique_tokens']} unique, "
            f"{c['unique_matched']} of {c['lexicon_size']} lexicon words hit\n"
        )
    out.write("\nPearson\n" + reports.table_layout(report, "pearson"))
    out.write("\nSpearman\n" + reports.table_layout(report, "spearman"))
    if report.undefined:
        out.write(f"\nundefined (constant) columns: {', '.join(report.undefined)}\n")
    _emit(args, files, out.getvalue())
    return 0


# -- compare -------------------------------------------------------------------


def cmd_compare(args) -> int:
    lexicons = _load_lexicons(args)
    if len(lexicons) != 2:
        raise UsageError(f"compare needs exactly two lexicons, got {len(lexicons)}")
    a, b = (strip_phrases(lex) for lex in lexicons)
    r = intersect(a, b, args.match)
    disc = sign_discrepancies(r)
    rho = intersection_rank_correlation(r) if len(r) >= 2 else float("nan")

    out = io.StringIO()
    out.write(f"{a.name}: {len(a)} words, {b.name}: {len(b)} words\n")
    if not len(r):
        out.write("empty intersection: the lexicons share no terms\n")
    else:
        out.write(f"intersection ({r.strategy.value}): {len(r)} terms\n")
    out.write(f"spearman: {reports.fmt_float(rho) or 'undefined'}\n")
    out.write(f"sign discrepancies: {len(disc)}")
    out.write((": " + ", ".join(disc) + "\n") if disc else "\n")

    extra = {"lexicon_a": a.name, "lexicon_b": b.name}
    if args.corpus and len(r):
        corpus = _load_corpus_file(args.corpus)
        gold = gold_column(corpus).values
        scheme = _schemes(args.scheme)[0]
        evals = {}
        for sub in intersection_sublexicons(a, b, args.match):
            index = build_index(sub, args.match)
            scores = [score_text(tokenize(t.text), index, scheme).value for t in corpus]
            evals[sub.name] = {"pearson": pearson(scores, gold), "spearman": spearman(scores, gold)}
            out.write(
                f"{sub.name} on corpus: pearson {reports.fmt_float(evals[sub.name]['pearson']) or 'undefined'}, "
                f"spearman {reports.fmt_float(evals[sub.name]['spearman']) or 'undefined'}\n"
            )
        extra["sublexicon_eval"] = {
            k: {s: (v if is_defined(v) else None) for s, v in d.items()} for k, d in evals.items()
        }
    files = {
        "intersection.csv": intersection_csv(r),
        "discrepancies.csv": intersection_csv(r, disc),
        "comparison.json": reports.comparison_json(r, disc, rho, extra),
    }
    _emit(args, files, out.getvalue())
    return 0


# -- curve ---------------------------------------------------------------------


def _parse_sizes(text: str | None, n_terms: int) -> list[int]:
    if not text:
        return default_sizes(n_terms)
    sizes = []
    for part in text.split(","):
        part = part.strip()
        sizes.append(n_terms if part == "full" else int(part))
    return sizes


def cmd_curve(args) -> int:
    corpus = _load_corpus_file(args.corpus)
    lexicons = _load_lexicons(args) or [load_afinn()]
    if len(lexicons) != 1:
        raise UsageError("curve takes exactly one lexicon")
    lex = strip_phrases(lexicons[0])
    sizes = _parse_sizes(args.sizes, len(lex))
    scheme = _schemes(args.scheme)
    if len(scheme) != 1:
        raise UsageError("curve takes a single scheme")
    points = learning_curve(corpus, lex, sizes, args.resamples, args.seed, args.match, scheme[0])

    meta = {"lexicon": lex.name, "lexicon_size": len(lex), "corpus_size": len(corpus),
            "seed": args.seed, "resamples": args.resamples,
            "match": MatchStrategy.coerce(args.match).value, "scheme": scheme[0].value}
    files = {
        "curve.csv": reports.curve_csv(points),
        "curve_summary.csv": reports.curve_summary_csv(points),
        "curve.json": reports.curve_json(points, meta),
    }
    out = io.StringIO()
    out.write(f"{'size':>6} {'pearson median':>15} {'spearman median':>16}\n")
    for p in points:
        try:
            summ = summarize_boxplot(p)
        except ValueError:
            summ = {"pearson": None, "spearman": None}
        cells = [f"{summ[s][2]:.4f}" if summ[s] else "n/a" for s in ("pearson", "spearman")]
        out.write(f"{p.size:>6} {cells[0]:>15} {cells[1]:>16}\n")
    _emit(args, files, out.getvalue())
    return 0


# -- parser --------------------------------------------------------------------


def _add_lexicon_args(p):
    g = p.add_argument_group("lexicons")
    g.add_argument("--lexicon", action="append", metavar="[NAME=]PATH",
                   help=f"term<TAB>valence file; repeatable. '{BUILTIN_AFINN}' is the bundled list")
    g.add_argument("--scale", action="append", metavar="MIN:NEUTRAL:MAX",
                   help="valence scale, once for all lexicons or once per --lexicon (default -5:0:5)")
    g.add_argument("--polarity-pos", action="append", metavar="[NAME=]PATH",
                   help="positive-word list, paired with --polarity-neg")
    g.add_argument("--polarity-neg", action="append", metavar="PATH")
    p.add_argument("--match", choices=[m.value for m in MatchStrategy], default="exact")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexisent", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="score texts with one lexicon")
    _add_lexicon_args(p)
    p.add_argument("--corpus", required=True, help="corpus TSV, or raw text lines with --raw")
    p.add_argument("--raw", action="store_true", help="input has one raw text per line")
    p.add_argument("--scheme", choices=SCHEME_CHOICES, default="mean")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", metavar="DIR", help="write scores.csv/json here instead of stdout")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("eval", help="correlation matrix of scorers against gold ratings")
    _add_lexicon_args(p)
    p.add_argument("--corpus", required=True)
    p.add_argument("--scheme", choices=SCHEME_CHOICES, default="mean")
    p.add_argument("--column", action="append", metavar="NAME=PATH",
                   help="external scores, id<TAB>value; repeatable")
    p.add_argument("--dual-column", action="append", metavar="NAME=PATH",
                   help="external dual strengths, id<TAB>pos<TAB>neg; repeatable")
    p.add_argument("--gold-name", default="gold")
    p.add_argument("--format", choices=["csv", "json", "both"], default="both")
    p.add_argument("--out", metavar="DIR", default=".")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compare", help="intersection and sign discrepancies of two lexicons")
    _add_lexicon_args(p)
    p.add_argument("--corpus", help="optionally score the corpus with both shared-term lexicons")
    p.add_argument("--scheme", choices=[s.value for s in ScoringScheme], default="mean")
    p.add_argument("--format", choices=["csv", "json", "both"], default="both")
    p.add_argument("--out", metavar="DIR", default=".")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("curve", help="resampled learning curve over lexicon size")
    _add_lexicon_args(p)
    p.add_argument("--corpus", required=True)
    p.add_argument("--sizes", help="comma-separated sizes, 'full' for the whole list "
                                   "(default: 5,10,20,50,... up to full)")
    p.add_argument("--resamples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scheme", choices=[s.value for s in ScoringScheme], default="mean")
    p.add_argument("--format", choices=["csv", "json", "both"], default="both")
    p.add_argument("--out", metavar="DIR", default=".")
    p.set_defaults(func=cmd_curve)
    return parser


def _glue_scales(argv: list[str]) -> list[str]:
    # "--scale -5:0:5" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for arg in it:
        if arg == "--scale":
            value = next(it, None)
            if value is not None and value.startswith("-"):
                out.append(f"--scale={value}")
                continue
            out.append(arg)
            if value is not None:
                out.append(value)
            continue
        out.append(arg)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_scales(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except (UsageError, FormatError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"lexisent {args.command}: error: {msg}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
