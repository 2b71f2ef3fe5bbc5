# -*- coding: utf-8 -*-
"""Command line front end.

Every subcommand is a thin wrapper over one library operation.  Exit codes:
0 success, 1 usage error, 2 data error.  Report-producing commands (curve,
ngrams) write a delimited table and render a PNG figure next to it.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import data as pkgdata
from .analysis import analyze_token
from .corpus import (AnnotatedCorpus, CorpusError, read_corpus,
                     split_sentences, tokenize, write_corpus)
from .dialogue import DialogueError, answer, start_classification
from .evaluation import (EvaluationError, evaluate, learning_curve,
                         ngram_growth, perturb_unknowns, split_corpus,
                         tag_corpus)
from .inflection import (InflectionError, expand_full_form_lexicon,
                         generate_forms)
from .lexicon import LexiconError, format_entry, load_lexicon
from .tagger import (TaggerError, ablate_lexical, load_models, save_models,
                     tag_church, tag_varcontext, train_models)
from .tags import TagError, format_tag

DATA_ERRORS = (TagError, LexiconError, InflectionError, CorpusError,
               TaggerError, EvaluationError, DialogueError, OSError,
               ValueError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _read_input(args):
    if getattr(args, "infile", None):
        with open(args.infile, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _write_output(args, text):
    if getattr(args, "outfile", None):
        with open(args.outfile, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_lexicon(args, classes):
    path = getattr(args, "lexicon", None) or os.environ.get("MORPHY_LEXICON")
    if path:
        with open(path, encoding="utf-8") as fh:
            return load_lexicon(fh.read(), classes)
    return pkgdata.load_seed_lexicon()


def _load_models(args):
    path = getattr(args, "models", None) or os.environ.get("MORPHY_MODELS")
    if not path:
        raise SystemExit(_usage_error("a model file is required (--models "
                                      "or MORPHY_MODELS)"))
    with open(path, encoding="utf-8") as fh:
        return load_models(fh.read())


def _usage_error(message):
    sys.stderr.write(f"morphy: error: {message}\n")
    return 1


def _abbreviations(lex):
    return {e.root for e in lex.entries if e.pos == "ABK"}


# -- subcommand implementations ----------------------------------------------

def cmd_analyze(args):
    classes = pkgdata.load_default_paradigms()
    lex = _load_lexicon(args, classes)
    text = _read_input(args)
    out = []
    for token in tokenize(text, _abbreviations(lex)):
        analyses = analyze_token(token, lex, classes, sentence_initial=True)
        if not analyses:
            out.append(f"{token}\t?\t?\t?")
        for a in analyses:
            out.append(a.render(token))
    _write_output(args, "".join(line + "\n" for line in out))
    return 0


def cmd_generate(args):
    classes = pkgdata.load_default_paradigms()
    lex = _load_lexicon(args, classes)
    entries = [e for e in lex.entries if e.root == args.root]
    if args.pos:
        entries = [e for e in entries if e.pos == args.pos]
    if not entries:
        sys.stderr.write(f"morphy: no entry for root {args.root!r}\n")
        return 2
    out = []
    for e in entries:
        table = generate_forms(e, classes)
        for surface, tag in table.rows:
            out.append(f"{surface}\t{format_tag(tag)}\t{table.lemma}")
    _write_output(args, "".join(line + "\n" for line in out))
    return 0


def cmd_tag(args):
    classes = pkgdata.load_default_paradigms()
    lex = _load_lexicon(args, classes)
    models = _load_models(args)
    if models.kind != args.tagset:
        sys.stderr.write(
            f"morphy: model file is for the {models.kind} tag set\n")
        return 2
    text = _read_input(args)
    decode = tag_church if args.algo == "church" else tag_varcontext
    chunks = []
    for sentence in split_sentences(tokenize(text, _abbreviations(lex))):
        tagged = decode(sentence, models, lex, classes)
        for surface, tag in tagged.tokens:
            chunks.append(f"{surface}\t{format_tag(tag)}\n")
        chunks.append("\n")
    _write_output(args, "".join(chunks))
    return 0


def cmd_train(args):
    corpus = read_corpus(_read_input(args))
    models = train_models(corpus, args.tagset, n_max=args.n_max)
    _write_output(args, save_models(models))
    return 0


def cmd_eval(args):
    classes = pkgdata.load_default_paradigms()
    lex = _load_lexicon(args, classes)
    models = _load_models(args)
    if args.ablate_lexical:
        models = ablate_lexical(models)
    gold = read_corpus(_read_input(args))
    predicted = tag_corpus(gold, models, lex, classes, args.algo)
    report = evaluate(gold, predicted, models.kind)
    _write_output(args, report.render())
    return 0


def cmd_curve(args):
    from .plots import learning_curve_figure

    classes = pkgdata.load_default_paradigms()
    lex = _load_lexicon(args, classes)
    corpus = read_corpus(_read_input(args))
    sizes = [int(s) for s in args.sizes.split(",")]
    curves = {}
    lines = ["algo\ttagset\tsize\taccuracy"]
    for algo in (args.algo,) if args.algo else ("church", "varcontext"):
        for kind in (args.tagset,) if args.tagset else ("small", "large"):
            points = learning_curve(corpus, algo, kind, sizes,
                                    args.holdout, lex=lex, classes=classes)
            curves[f"{algo}/{kind}"] = points
            for size, acc in points:
                lines.append(f"{algo}\t{kind}\t{size}\t{acc!r}")
    _write_output(args, "".join(line + "\n" for line in lines))
    fig = args.figure or "learning_curve.png"
    learning_curve_figure(curves, fig)
    sys.stderr.write(f"figure written to {fig}\n")
    return 0


def cmd_perturb(args):
    classes = pkgdata.load_default_paradigms()
    lex = _load_lexicon(args, classes)
    corpus = read_corpus(_read_input(args))
    ffl = expand_full_form_lexicon(lex, classes)
    known = {s for s, _ in ffl.items()}
    suffix_model = None
    if args.models or os.environ.get("MORPHY_MODELS"):
        suffix_model = _load_models(args).suffix_model
    perturbed = perturb_unknowns(corpus, args.rate, args.seed, known=known,
                                 suffix_model=suffix_model)
    _write_output(args, write_corpus(perturbed))
    return 0


def cmd_ngrams(args):
    from .plots import ngram_growth_figure

    tokens = _read_input(args).split()
    checkpoints = [int(c) for c in args.checkpoints.split(",")] \
        if args.checkpoints else [len(tokens) // 4, len(tokens) // 2,
                                  3 * len(tokens) // 4, len(tokens)]
    table = ngram_growth(tokens, (2, 3, 4), checkpoints)
    lines = ["checkpoint\tn\tdistinct"]
    for cp, n, count in table:
        lines.append(f"{cp}\t{n}\t{count}")
    _write_output(args, "".join(line + "\n" for line in lines))
    fig = args.figure or "ngram_growth.png"
    ngram_growth_figure(table, fig)
    sys.stderr.write(f"figure written to {fig}\n")
    return 0


def cmd_lexicon_add(args):
    classes = pkgdata.load_default_paradigms()
    state = start_classification(args.pos, args.root)
    while not state.complete:
        q = state.pending
        sys.stdout.write(f"{q.text}\n")
        for i, alt in enumerate(q.alternatives, start=1):
            sys.stdout.write(f"  {i}: {alt}\n")
        sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            sys.stderr.write("morphy: input closed before completion\n")
            return 2
        try:
            choice = int(line.strip())
        except ValueError:
            sys.stderr.write("please answer with a number\n")
            continue
        try:
            state = answer(state, choice)
        except DialogueError as err:
            sys.stderr.write(f"{err}\n")
    entry = state.draft
    sys.stdout.write(f"{args.pos} klassifiziert!\n")
    table = generate_forms(entry, classes)
    for surface, tag in table.rows:
        sys.stdout.write(f"  {surface}\t{format_tag(tag)}\n")
    line = format_entry(entry)
    if args.lexicon:
        with open(args.lexicon, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")
        sys.stdout.write(f"appended to {args.lexicon}\n")
    else:
        sys.stdout.write(line + "\n")
    return 0


def cmd_expand(args):
    classes = pkgdata.load_default_paradigms()
    lex = _load_lexicon(args, classes)
    ffl = expand_full_form_lexicon(lex, classes)
    _write_output(args, ffl.dump())
    return 0


def cmd_serve(args):
    import uvicorn

    from .service import create_app

    classes = pkgdata.load_default_paradigms()
    lex = _load_lexicon(args, classes)
    data_dir = args.data_dir or os.environ.get("MORPHY_DATA_DIR") or "."
    models_path = args.models or os.environ.get("MORPHY_MODELS")
    app = create_app(lex, classes, data_dir=data_dir,
                     models_path=models_path)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


# -- argument wiring -----------------------------------------------------------

def build_parser():
    p = _Parser(prog="morphy",
                description="German morphology and part-of-speech tagging")
    sub = p.add_subparsers(dest="command", metavar="command")

    def common(sp, models=False, tagset=False, algo=False, seed=False):
        sp.add_argument("--in", dest="infile", metavar="FILE",
                        help="input file (default: stdin)")
        sp.add_argument("--out", dest="outfile", metavar="FILE",
                        help="output file (default: stdout)")
        sp.add_argument("--lexicon", metavar="FILE",
                        help="root lexicon (default: built-in seed lexicon)")
        if models:
            sp.add_argument("--models", metavar="FILE",
                            help="trained model file")
        if tagset:
            sp.add_argument("--tagset", choices=("small", "large"),
                            default="small")
        if algo:
            sp.add_argument("--algo", choices=("church", "varcontext"),
                            default="church")
        if seed:
            sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("analyze", help="morphological analysis per token")
    common(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("generate", help="print all forms of a root")
    common(sp)
    sp.add_argument("root")
    sp.add_argument("--pos", help="restrict to one part of speech")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("tag", help="tag running text")
    common(sp, models=True, tagset=True, algo=True)
    sp.set_defaults(func=cmd_tag)

    sp = sub.add_parser("train", help="train models from a corpus")
    common(sp, tagset=True)
    sp.add_argument("--n-max", type=int, default=3)
    sp.set_defaults(func=cmd_train)

    sp = sub.add_parser("eval", help="evaluate models against a gold corpus")
    common(sp, models=True, algo=True)
    sp.add_argument("--ablate-lexical", action="store_true",
                    help="use uniform lexical probabilities")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("curve", help="learning curve table and figure")
    common(sp, algo=False, tagset=False)
    sp.add_argument("--algo", choices=("church", "varcontext"))
    sp.add_argument("--tagset", choices=("small", "large"))
    sp.add_argument("--sizes", required=True,
                    help="comma-separated training sizes in tokens")
    sp.add_argument("--holdout", type=int, default=800,
                    help="holdout size in tokens (from the corpus end)")
    sp.add_argument("--figure", metavar="PNG",
                    help="figure path (default learning_curve.png)")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("perturb",
                        help="replace tokens with synthetic unknowns")
    common(sp, models=True, seed=True)
    sp.add_argument("--rate", type=float, default=0.02)
    sp.set_defaults(func=cmd_perturb)

    sp = sub.add_parser("ngrams", help="n-gram growth table and figure")
    common(sp)
    sp.add_argument("--checkpoints",
                    help="comma-separated prefix sizes in tokens")
    sp.add_argument("--figure", metavar="PNG",
                    help="figure path (default ngram_growth.png)")
    sp.set_defaults(func=cmd_ngrams)

    sp = sub.add_parser("lexicon-add",
                        help="classify a new word interactively")
    sp.add_argument("--lexicon", metavar="FILE",
                    help="lexicon file to append to")
    sp.add_argument("pos", help="word class (VER, SUB, ADJ, PRP, ...)")
    sp.add_argument("root", help="root (the infinitive for verbs)")
    sp.set_defaults(func=cmd_lexicon_add)

    sp = sub.add_parser("expand", help="dump the full-form lexicon")
    common(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("serve", help="start the HTTP service")
    sp.add_argument("--lexicon", metavar="FILE")
    sp.add_argument("--models", metavar="FILE")
    sp.add_argument("--data-dir", metavar="DIR")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.set_defaults(func=cmd_serve)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 1
    except DATA_ERRORS as err:
        sys.stderr.write(f"morphy: error: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
