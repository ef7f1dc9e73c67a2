"""Command-line front end.

Every subcommand reads task-format files (``-`` for standard input) and
writes data to standard output or ``--output``; diagnostics go to standard
error.  Exit status is 0 on success, 1 for bad data and 2 for bad usage.
"""
import argparse
import sys

from . import assembly, predictor, scoring, synthgen, treebank
from .baseline import baseline_columns
from .corpus import BRACKETS, ENDS, STARTS, Corpus, Layout, read_corpus, sniff_width, write_corpus
from .encoding import (
    derive_boundaries,
    format_boundary_column,
    format_bracket_column,
    parse_boundary_column,
    parse_bracket_column,
    spans_from_tags,
    spans_to_tags,
    validate,
)
from .errors import ClauseError, EmptyCorpusError, TagSyntaxError

ENCODINGS = ("brackets", "starts", "ends", "boundaries")
_TARGET_ROLES = {
    "brackets": (BRACKETS,),
    "starts": (STARTS,),
    "ends": (ENDS,),
    "boundaries": (STARTS, ENDS),
    "all": (STARTS, ENDS, BRACKETS),
}


class UsageError(Exception):
    pass


def _column(text):
    if text.lower() == "none":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a column index: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("column indices are 0-based and non-negative")
    return value


def _read_lines(path):
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, encoding="utf-8", newline="") as f:
        return f.read().splitlines()


def _load(args, path, clauses, optional=False):
    """Read a corpus using the column flags.

    ``clauses`` maps column indices to clause roles.  With ``optional`` the
    clause columns are dropped from the layout when the file is too narrow
    to contain them.
    """
    lines = _read_lines(path)
    width = sniff_width(lines)
    clauses = {i: r for i, r in clauses.items() if i is not None}
    if optional:
        clauses = {i: r for i, r in clauses.items() if i < width}
    layout = Layout.from_columns(
        width=width, word=args.word_col, pos=args.pos_col, chunk=args.chunk_col, clauses=clauses
    )
    return read_corpus(lines, layout)


def _emit(args, text):
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _boundary_strings(flags, role):
    return format_boundary_column(flags, 1 if role == STARTS else 2)


def cmd_ingest(args):
    labels = frozenset(args.labels.split(",")) if args.labels else treebank.CLAUSE_LABELS
    sentences = []
    for path in args.files:
        text = "\n".join(_read_lines(path))
        sentences.extend(treebank.ingest(text, labels, args.dedupe_spans).sentences)
    if not sentences:
        raise EmptyCorpusError("no trees found in input")
    corpus = Corpus(tuple(sentences), treebank.INGEST_LAYOUT)
    _emit(args, write_corpus(corpus))


def _start_end_cols(args):
    start = args.start_col if args.start_col is not None else args.clause_col
    if start is None:
        raise UsageError("no start column given")
    end = args.end_col if args.end_col is not None else start + 1
    return start, end


def _assembled(args, corpus):
    policy = assembly.AssemblyPolicy(args.policy, args.add_sentence_clause)
    column = []
    for sentence in corpus:
        starts = parse_boundary_column(sentence.column(STARTS), 1)
        ends = parse_boundary_column(sentence.column(ENDS), 2)
        clauses = assembly.assemble(starts, ends, policy)
        column.append(format_bracket_column(spans_to_tags(clauses, len(sentence))))
    return column


def cmd_convert(args):
    if args.source == "brackets":
        corpus = _load(args, args.file, {args.clause_col: BRACKETS})
        tags = [parse_bracket_column(c) for c in corpus.column(BRACKETS)]
        for t in tags:
            spans_from_tags(t)  # raises on unbalanced sentences
        available = {BRACKETS: [format_bracket_column(t) for t in tags]}
        flags = [derive_boundaries(t) for t in tags]
        available[STARTS] = [_boundary_strings(s, STARTS) for s, _ in flags]
        available[ENDS] = [_boundary_strings(e, ENDS) for _, e in flags]
    else:
        start, end = _start_end_cols(args)
        corpus = _load(args, args.file, {start: STARTS, end: ENDS})
        available = {
            STARTS: [_boundary_strings(parse_boundary_column(c, 1), STARTS) for c in corpus.column(STARTS)],
            ENDS: [_boundary_strings(parse_boundary_column(c, 2), ENDS) for c in corpus.column(ENDS)],
        }
        if args.target == "brackets":
            available[BRACKETS] = _assembled(args, corpus)
    columns = {role: available[role] for role in _TARGET_ROLES[args.target]}
    out = corpus.with_annotations(columns, drop=corpus.layout.clause_roles)
    _emit(args, write_corpus(out))


def cmd_derive(args):
    args.source, args.target = "brackets", "all"
    cmd_convert(args)


def cmd_assemble(args):
    args.source, args.target = "boundaries", "brackets"
    cmd_convert(args)


def _sentence_lines(lines):
    """1-based line number on which each sentence starts."""
    starts = []
    previous_blank = True
    for n, line in enumerate(lines, 1):
        blank = not line.split()
        if not blank and previous_blank:
            starts.append(n)
        previous_blank = blank
    return starts


def cmd_validate(args):
    lines = _read_lines(args.file)
    corpus = _load(args, args.file, {args.clause_col: BRACKETS})
    first_lines = _sentence_lines(lines)
    bad = 0
    for k, (sentence, line) in enumerate(zip(corpus, first_lines)):
        try:
            report = validate(parse_bracket_column(sentence.column(BRACKETS)))
        except TagSyntaxError as exc:
            message, token = str(exc), None
        else:
            if report:
                continue
            message, token = report.message, report.position
        bad += 1
        where = f"sentence {k + 1} (line {line}"
        if token is not None and token < len(sentence):
            where += f", token line {line + token}"
        print(f"{where}): {message}", file=sys.stderr)
    print(f"{len(corpus)} sentences, {bad} invalid")
    return 1 if bad else 0


def cmd_baseline(args):
    corpus = _load(args, args.file, {args.clause_col: BRACKETS}, optional=True)
    columns = baseline_columns(corpus, _TARGET_ROLES[args.target])
    out = corpus.with_annotations(columns, drop=corpus.layout.clause_roles)
    _emit(args, write_corpus(out))


def cmd_train(args):
    corpus = _load(args, args.file, {args.clause_col: BRACKETS})
    model = predictor.train(corpus, args.target, smoothing=args.smoothing)
    _emit(args, predictor.save_model(model))


def _read_model(path, smoothing):
    return predictor.load_model(_read_lines(path), smoothing)


def cmd_predict(args):
    if not (args.starts_model or args.ends_model):
        raise UsageError("give --starts-model and/or --ends-model")
    corpus = _load(args, args.file, {args.clause_col: BRACKETS}, optional=True)
    columns = {}
    for role, path in ((STARTS, args.starts_model), (ENDS, args.ends_model)):
        if path:
            model = _read_model(path, args.smoothing)
            columns[role] = [_boundary_strings(f, role) for f in predictor.predict_corpus(model, corpus)]
    out = corpus.with_annotations(columns, drop=corpus.layout.clause_roles)
    _emit(args, write_corpus(out))


def cmd_score(args):
    pred_col = args.pred_col if args.pred_col is not None else args.clause_col
    gold = _load(args, args.gold, {args.clause_col: BRACKETS})
    pred = _load(args, args.pred, {pred_col: BRACKETS})
    scoring.check_alignment([s.words for s in gold], [s.words for s in pred])
    parts = (1, 2, 3) if args.part == "all" else (int(args.part),)
    lines = []
    for part in parts:
        counts = scoring.score_part(part, gold.column(BRACKETS), pred.column(BRACKETS))
        _, text = scoring.report(counts, args.beta)
        prefix = f"part {part}: " if len(parts) > 1 else ""
        if args.format in ("text", "both"):
            lines.append(prefix + text)
        if args.format in ("line", "both"):
            lines.append(scoring.machine_line(part, counts, args.beta))
    _emit(args, "\n".join(lines) + "\n")


def cmd_generate(args):
    config = synthgen.GeneratorConfig(
        sentences=args.sentences,
        max_len=args.max_len,
        max_depth=args.max_depth,
        allow_multi_boundary=args.multi_boundary,
        clause_density=args.density,
        seed=args.seed,
    )
    _emit(args, write_corpus(synthgen.generate(config)))


def _add_columns(p, clause=True):
    p.add_argument("--word-col", type=int, default=0, metavar="N")
    p.add_argument("--pos-col", type=_column, default=1, metavar="N")
    p.add_argument("--chunk-col", type=_column, default=2, metavar="N")
    if clause:
        p.add_argument("--clause-col", type=_column, default=3, metavar="N")


def _add_policy(p):
    p.add_argument("--policy", choices=assembly.POLICIES, default=assembly.STRICT)
    p.add_argument("--add-sentence-clause", action="store_true")
    p.add_argument("--start-col", type=_column, metavar="N", help="defaults to --clause-col")
    p.add_argument("--end-col", type=_column, metavar="N", help="defaults to the start column + 1")


def build_parser():
    parser = argparse.ArgumentParser(prog="clauseid", description="clause identification toolkit")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def command(name, func, help, clause=True):
        p = sub.add_parser(name, help=help)
        p.add_argument("-o", "--output", metavar="FILE")
        if clause is not None:
            _add_columns(p, clause)
        p.set_defaults(func=func)
        return p

    p = command("ingest", cmd_ingest, "treebank trees to task format", clause=None)
    p.add_argument("files", nargs="+")
    p.add_argument("--dedupe-spans", action="store_true")
    p.add_argument("--labels", help="comma-separated clause labels")

    p = command("convert", cmd_convert, "convert between clause encodings")
    p.add_argument("file")
    p.add_argument("--from", dest="source", choices=("brackets", "boundaries"), required=True)
    p.add_argument("--to", dest="target", choices=ENCODINGS, required=True)
    _add_policy(p)

    p = command("validate", cmd_validate, "check bracket balance")
    p.add_argument("file")

    p = command("derive", cmd_derive, "bracket column to start and end columns")
    p.add_argument("file")

    p = command("assemble", cmd_assemble, "start and end columns to bracket column")
    p.add_argument("file")
    _add_policy(p)

    p = command("baseline", cmd_baseline, "one whole-sentence clause per sentence")
    p.add_argument("file")
    p.add_argument("--to", dest="target", choices=ENCODINGS + ("all",), default="all")

    p = command("train", cmd_train, "train a start or end flag model")
    p.add_argument("file")
    p.add_argument("--target", choices=predictor.TARGETS, required=True)
    p.add_argument("--smoothing", type=float, default=1.0)

    p = command("predict", cmd_predict, "predict start and/or end flags")
    p.add_argument("file")
    p.add_argument("--starts-model", metavar="FILE")
    p.add_argument("--ends-model", metavar="FILE")
    p.add_argument("--smoothing", type=float, default=1.0)

    p = command("score", cmd_score, "precision, recall and F for one or all parts")
    p.add_argument("gold")
    p.add_argument("pred")
    p.add_argument("--part", choices=("1", "2", "3", "all"), default="3")
    p.add_argument("--pred-col", type=_column, metavar="N", help="defaults to --clause-col")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--format", choices=("text", "line", "both"), default="text")

    p = command("generate", cmd_generate, "random clause-annotated corpus", clause=None)
    p.add_argument("--sentences", type=int, default=100)
    p.add_argument("--max-len", type=int, default=20)
    p.add_argument("--max-depth", type=int, default=4)
    p.add_argument("--multi-boundary", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        status = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"clauseid {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (ClauseError, OSError) as exc:
        print(f"clauseid {args.command}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"clauseid {args.command}: {exc}", file=sys.stderr)
        return 1
    return status or 0


def main():
    sys.exit(run())
