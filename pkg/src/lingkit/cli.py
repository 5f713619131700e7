"""Command-line front door for the toolkit's batch tasks.

Usage summary (run ``lingkit <command> -h`` for details)::

    lingkit parse    --grammar FILE --strategy td|bu "sentence"
    lingkit sr       parse --grammar FILE [--trace] "sentence"
    lingkit pcfg     parse --grammar FILE "sentence"
    lingkit chunk    eval --cascade FILE --gold FILE
    lingkit chunk    rates --gold FILE [--threshold T]
    lingkit tag      train --corpus FILE --out FILE [--default-tag TAG]
    lingkit tag      eval --model FILE --gold FILE
    lingkit fsa      compile --regex R --out FILE [--dfa]
    lingkit fsa      simulate --machine FILE "input"
    lingkit classify train --data FILE --algorithm nb|gis|iis --out FILE
    lingkit classify predict --model FILE "token token ..."
    lingkit serve    --port N [--presets FILE] [--static DIR]

Exit status: 0 on success, 1 on a data error (bad file contents,
uncovered tokens, and the like), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chart as chart_mod
from . import chunk as chunk_mod
from . import fsa as fsa_mod
from . import service as service_mod
from . import tag as tag_mod
from .classify import (
    encode,
    read_corpus,
    select_features,
    train_maxent,
    train_naive_bayes,
)
from .classify.features import encode_corpus
from .classify.maxent import maxent_from_json
from .classify.naivebayes import naive_bayes_from_json
from .errors import LingkitError
from .grammar import parse_cfg, parse_pcfg
from .shiftreduce import sr_parse
from .tokens import read_tagged, whitespace_tokenize
from .tree import format_tree
from .viterbi import viterbi_parse


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
        if not text.endswith("\n"):
            handle.write("\n")


def cmd_parse(args) -> int:
    grammar = parse_cfg(_read(args.grammar))
    tokens = whitespace_tokenize(args.sentence)
    strategy = chart_mod.STRATEGIES[args.strategy]
    parses = chart_mod.parse(grammar, tokens, strategy)
    for tree in parses:
        print(format_tree(tree))
    if not parses:
        print("no parses found", file=sys.stderr)
    return 0


def cmd_sr(args) -> int:
    grammar = parse_cfg(_read(args.grammar))
    tokens = whitespace_tokenize(args.sentence)
    tree, trace = sr_parse(grammar, tokens)
    if args.trace:
        for entry in trace:
            print(entry)
    if tree is None:
        print("no parse", file=sys.stderr)
    else:
        print(format_tree(tree))
    return 0


def cmd_pcfg(args) -> int:
    grammar = parse_pcfg(_read(args.grammar))
    tokens = whitespace_tokenize(args.sentence)
    scored = viterbi_parse(grammar, tokens)
    if scored is None:
        print("no parse", file=sys.stderr)
        return 0
    print(f"{format_tree(scored.tree)}")
    print(f"p={scored.prob:.12g}")
    return 0


def cmd_chunk_eval(args) -> int:
    rules = chunk_mod.load_cascade(_read(args.cascade))
    gold = chunk_mod.read_gold_file(_read(args.gold))
    hits = 0
    n_gold = 0
    n_test = 0
    missed = []
    incorrect = []
    for index, sentence in enumerate(gold):
        test = chunk_mod.apply_cascade(chunk_mod.unchunk(sentence), rules)
        score = chunk_mod.score_chunks(sentence, test)
        gold_set, test_set = set(sentence.chunks), set(test.chunks)
        hits += len(gold_set & test_set)
        n_gold += len(gold_set)
        n_test += len(test_set)
        missed.extend((index, span) for span in score.missed)
        incorrect.extend((index, span) for span in score.incorrect)
    precision = hits / n_test if n_test else 1.0
    recall = hits / n_gold if n_gold else 1.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    print(f"precision: {precision:.4f}")
    print(f"recall:    {recall:.4f}")
    print(f"f1:        {f1:.4f}")
    print(f"missed ({len(missed)}):" + "".join(f" {i}:({a},{b})" for i, (a, b) in missed))
    print(f"incorrect ({len(incorrect)}):" + "".join(f" {i}:({a},{b})" for i, (a, b) in incorrect))
    return 0


def cmd_chunk_rates(args) -> int:
    gold = chunk_mod.read_gold_file(_read(args.gold))
    rates = chunk_mod.np_tag_rates(gold)
    for tag in sorted(rates):
        print(f"{tag}\t{rates[tag]:.4f}")
    try:
        rule = chunk_mod.high_rate_chunk_rule(rates, args.threshold)
        print(f"rule: {rule.patterns[0]}")
    except ValueError:
        print(f"rule: (no tag above {args.threshold})")
    return 0


def cmd_tag_train(args) -> int:
    corpus = [read_tagged(line) for line in _read(args.corpus).splitlines() if line.strip()]
    backoff = tag_mod.DefaultTagger(args.default_tag) if args.default_tag else None
    tagger = tag_mod.train_unigram(corpus, backoff)
    _write(
        args.out,
        json.dumps(
            {
                "kind": "unigram",
                "counts": tagger.counts_as_dict(),
                "default_tag": args.default_tag,
            },
            indent=2,
            sort_keys=True,
        ),
    )
    print(f"trained on {len(corpus)} sentences; model written to {args.out}")
    return 0


def _load_tagger(path: str) -> tag_mod.Tagger:
    data = json.loads(_read(path))
    if data.get("kind") != "unigram":
        raise LingkitError(f"unsupported tagger model kind {data.get('kind')!r}")
    counts = tag_mod.CondFreqDist()
    for word, tag_counts in data["counts"].items():
        for tag_name, count in tag_counts.items():
            counts[word].increment(tag_name, count)
    backoff = tag_mod.DefaultTagger(data["default_tag"]) if data.get("default_tag") else None
    return tag_mod.UnigramTagger(counts, backoff)


def cmd_tag_eval(args) -> int:
    tagger = _load_tagger(args.model)
    gold = [read_tagged(line) for line in _read(args.gold).splitlines() if line.strip()]
    accuracy = tag_mod.evaluate_tagger(tagger, gold)
    print(f"accuracy: {accuracy:.4f}")
    return 0


def cmd_fsa_compile(args) -> int:
    machine = fsa_mod.regex_to_nfa(args.regex)
    if args.dfa:
        machine = fsa_mod.nfa_to_dfa(machine)
    _write(args.out, fsa_mod.automaton_to_json(machine))
    kind = "dfa" if args.dfa else "nfa"
    print(f"{kind} with {len(machine.states)} states written to {args.out}")
    return 0


def cmd_fsa_simulate(args) -> int:
    machine = fsa_mod.automaton_from_json(_read(args.machine))
    accepted, trace = fsa_mod.simulate(machine, args.input)
    for pos, states in trace.steps:
        listing = ",".join(str(s) for s in sorted(states)) or "-"
        print(f"{pos}: {{{listing}}}")
    print("accepted" if accepted else "rejected")
    return 0


def cmd_classify_train(args) -> int:
    corpus = read_corpus(_read(args.data))
    vocabulary = select_features(corpus, count_cutoff=args.cutoff, budget=args.max_features)
    examples = encode_corpus(corpus, vocabulary)
    if args.algorithm == "nb":
        model = train_naive_bayes(examples, gamma=args.gamma)
        _write(args.out, model.to_json(vocabulary))
    else:
        model = train_maxent(
            examples, algorithm=args.algorithm, max_iter=args.max_iter, tol=args.tol
        )
        _write(args.out, model.to_json(vocabulary))
        print(
            f"converged after {model.iterations} iterations,"
            f" max violation {model.final_violation:.3g}"
        )
    print(f"model over {len(vocabulary)} features written to {args.out}")
    return 0


def cmd_classify_predict(args) -> int:
    data = json.loads(_read(args.model))
    if data.get("kind") == "naivebayes":
        model, vocabulary = naive_bayes_from_json(_read(args.model))
    elif data.get("kind") == "maxent":
        model, vocabulary = maxent_from_json(_read(args.model))
    else:
        raise LingkitError(f"unsupported model kind {data.get('kind')!r}")
    x = encode(args.text.split(), vocabulary)
    label, posterior = model.classify(x)
    scores = " ".join(f"{c}={posterior[c]:.6f}" for c in sorted(posterior))
    print(f"{label}\t{scores}")
    return 0


def cmd_serve(args) -> int:
    presets = None
    if args.presets:
        presets = service_mod.load_presets_file(_read(args.presets))
    service_mod.serve(args.port, presets, args.static)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lingkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="chart-parse a sentence, printing every parse")
    p.add_argument("--grammar", required=True)
    p.add_argument("--strategy", choices=["td", "bu"], default="bu")
    p.add_argument("sentence")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("sr", help="shift-reduce parsing")
    srsub = p.add_subparsers(dest="subcommand", required=True)
    q = srsub.add_parser("parse", help="greedy shift-reduce parse")
    q.add_argument("--grammar", required=True)
    q.add_argument("--trace", action="store_true")
    q.add_argument("sentence")
    q.set_defaults(func=cmd_sr)

    p = sub.add_parser("pcfg", help="probabilistic parsing")
    pcsub = p.add_subparsers(dest="subcommand", required=True)
    q = pcsub.add_parser("parse", help="highest-probability parse")
    q.add_argument("--grammar", required=True)
    q.add_argument("sentence")
    q.set_defaults(func=cmd_pcfg)

    p = sub.add_parser("chunk", help="chunking cascades")
    chsub = p.add_subparsers(dest="subcommand", required=True)
    q = chsub.add_parser("eval", help="score a cascade against a gold file")
    q.add_argument("--cascade", required=True)
    q.add_argument("--gold", required=True)
    q.set_defaults(func=cmd_chunk_eval)
    q = chsub.add_parser("rates", help="per-tag in-chunk rates and the derived rule")
    q.add_argument("--gold", required=True)
    q.add_argument("--threshold", type=float, default=0.5)
    q.set_defaults(func=cmd_chunk_rates)

    p = sub.add_parser("tag", help="taggers")
    tgsub = p.add_subparsers(dest="subcommand", required=True)
    q = tgsub.add_parser("train", help="train a unigram tagger")
    q.add_argument("--corpus", required=True)
    q.add_argument("--out", required=True)
    q.add_argument("--default-tag", default=None)
    q.set_defaults(func=cmd_tag_train)
    q = tgsub.add_parser("eval", help="token accuracy against a tagged file")
    q.add_argument("--model", required=True)
    q.add_argument("--gold", required=True)
    q.set_defaults(func=cmd_tag_eval)

    p = sub.add_parser("fsa", help="finite state automata")
    fssub = p.add_subparsers(dest="subcommand", required=True)
    q = fssub.add_parser("compile", help="regex to automaton JSON")
    q.add_argument("--regex", required=True)
    q.add_argument("--out", required=True)
    q.add_argument("--dfa", action="store_true", help="determinize before writing")
    q.set_defaults(func=cmd_fsa_compile)
    q = fssub.add_parser("simulate", help="run an automaton over an input")
    q.add_argument("--machine", required=True)
    q.add_argument("input")
    q.set_defaults(func=cmd_fsa_simulate)

    p = sub.add_parser("classify", help="text classification")
    clsub = p.add_subparsers(dest="subcommand", required=True)
    q = clsub.add_parser("train", help="train from a label<TAB>tokens file")
    q.add_argument("--data", required=True)
    q.add_argument("--algorithm", choices=["nb", "gis", "iis"], default="nb")
    q.add_argument("--out", required=True)
    q.add_argument("--cutoff", type=int, default=1)
    q.add_argument("--max-features", type=int, default=None)
    q.add_argument("--gamma", type=float, default=1.0)
    q.add_argument("--max-iter", type=int, default=100)
    q.add_argument("--tol", type=float, default=1e-4)
    q.set_defaults(func=cmd_classify_train)
    q = clsub.add_parser("predict", help="classify one document")
    q.add_argument("--model", required=True)
    q.add_argument("text")
    q.set_defaults(func=cmd_classify_predict)

    p = sub.add_parser("serve", help="run the chart session service")
    p.add_argument("--port", type=int, default=8420)
    p.add_argument("--presets", default=None)
    p.add_argument("--static", default=None, help="directory with the browser UI")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LingkitError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except FileNotFoundError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (json.JSONDecodeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
