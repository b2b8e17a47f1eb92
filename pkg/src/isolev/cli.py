"""Command-line surface: exact distances, distance matrices, isometry groups,
construction generators, and per-claim verification reports.

Exit codes: 0 success/claim passed, 1 claim failed (witnesses printed),
2 usage or input error, 3 capability error (degree or group size cap).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import verify as claims
from .constructs import (
    catalog,
    catalog_graph,
    encode_cubic_graph,
    lemma5_language,
    load_graph,
    prop4_language,
    theorem2_language,
    theorem3_language,
    theorem4_language,
    theorem5_language,
    theorem6_language,
    unary_language,
)
from .editdist import Weights, distance_matrix, lev
from .isomgroup import (
    BRUTE_MAX_DEGREE,
    DegreeTooLarge,
    GroupTooLarge,
    isometries,
    isometries_brute,
)
from .langlib import (
    EMPTY_WORD_TOKEN,
    Language,
    format_language,
    growth,
    load_language,
    save_language,
    _check_word,
)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPABILITY = 3

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rat(text: str) -> Fraction:
    if not _RAT_RE.match(text):
        raise ValueError(f"malformed rational {text!r}, expected P or P/Q")
    value = Fraction(text)
    return value


def _parse_word(token: str) -> str:
    word = "" if token == EMPTY_WORD_TOKEN else token
    _check_word(word)
    return word


def _weights(args) -> Weights:
    return Weights(_parse_rat(args.gamma), _parse_rat(args.theta))


def _rat_text(value: Fraction) -> str:
    return str(value)


def _rat_json(value: Fraction):
    return int(value) if value.denominator == 1 else str(value)


def _resolve_graph(token: str):
    path = Path(token)
    if path.exists():
        return load_graph(path)
    names = {entry.name for entry in catalog()}
    if token.lower() in names:
        return catalog_graph(token)
    raise ValueError(f"no such graph file or catalog name: {token!r}")


def _group_json(group) -> dict:
    return {
        "degree": group.degree,
        "order": str(group.order()),
        "generators": [list(g.images) for g in group.generators],
        "orbit_sizes": list(group.orbits().sizes()),
    }


def _cmd_dist(args) -> int:
    u = _parse_word(args.word1)
    v = _parse_word(args.word2)
    print(_rat_text(lev(u, v, _weights(args))))
    return EXIT_OK


def _cmd_matrix(args) -> int:
    lang = load_language(args.lang)
    matrix = distance_matrix(lang, _weights(args))
    if args.format == "json":
        payload = {
            "words": list(lang),
            "entries": [[_rat_json(x) for x in row] for row in matrix.entries],
        }
        print(json.dumps(payload))
    else:
        header = [w if w else EMPTY_WORD_TOKEN for w in lang]
        print("\t".join(header))
        for row in matrix.entries:
            print("\t".join(_rat_text(x) for x in row))
    return EXIT_OK


def _cmd_isom(args) -> int:
    lang = load_language(args.lang)
    matrix = distance_matrix(lang, _weights(args))
    if args.brute:
        if matrix.n > BRUTE_MAX_DEGREE:
            raise DegreeTooLarge(
                f"--brute supports at most {BRUTE_MAX_DEGREE} words, got {matrix.n}"
            )
        group = isometries_brute(matrix)
    else:
        group = isometries(matrix)
    print(json.dumps(_group_json(group)))
    return EXIT_OK


def _cmd_growth(args) -> int:
    lang = load_language(args.lang)
    print(growth(lang, args.n))
    return EXIT_OK


def _need(args, flag: str, family: str):
    value = getattr(args, flag)
    if value is None:
        raise ValueError(f"construct {family} requires --{flag.replace('_', '-')}")
    return value


def _build_family(args) -> Language:
    family = args.family
    if family == "lemma4":
        return encode_cubic_graph(_resolve_graph(_need(args, "graph", family)))
    if family == "theorem2":
        return theorem2_language(_resolve_graph(_need(args, "graph", family)))
    if family == "theorem3":
        names = _need(args, "graphs", family)
        graphs = [_resolve_graph(t) for t in names]
        depth = args.depth if args.depth is not None else len(graphs)
        return theorem3_language(graphs, depth)
    if family == "theorem4":
        depth = args.depth if args.depth is not None else 1
        return theorem4_language(args.k, depth)
    if family == "theorem5":
        names = _need(args, "graphs", family)
        if len(names) != 2:
            raise ValueError("construct theorem5 needs exactly two graphs")
        depth = args.depth if args.depth is not None else 1
        return theorem5_language(_resolve_graph(names[0]), _resolve_graph(names[1]), depth)
    if family == "lemma5":
        base = load_language(_need(args, "lang", family))
        depth = args.depth if args.depth is not None else 1
        return lemma5_language(base, depth)
    if family == "theorem6":
        return theorem6_language(args.layers)
    if family == "unary":
        return unary_language(_need(args, "lengths", family))
    if family == "prop4":
        return prop4_language(args.max)
    raise ValueError(f"unknown family {family!r}")


def _cmd_construct(args) -> int:
    lang = _build_family(args)
    if args.out:
        save_language(lang, args.out)
        lengths = sorted(set(lang.lengths()))
        print(f"wrote {args.out}: {len(lang)} words, lengths {lengths}, "
              f"alphabet {sorted(lang.alphabet)}")
    else:
        sys.stdout.write(format_language(lang))
    return EXIT_OK


def _cmd_verify(args) -> int:
    claim = args.claim
    theta = _parse_rat(args.theta)
    gamma = _parse_rat(args.gamma)
    if claim == "metric":
        report = claims.check_metric(gamma, theta, args.samples, args.max_len, args.seed)
    elif claim == "bounds":
        report = claims.check_bounds(gamma, theta, args.samples, args.max_len, args.seed)
    elif claim == "homothety":
        report = claims.check_homothety(args.samples, args.max_len, args.seed)
    elif claim == "prop3":
        report = claims.check_prop3(args.random, args.max_size, args.seed)
    elif claim == "prop4":
        report = claims.check_prop4(args.max)
    elif claim == "theorem1":
        lang = load_language(_need_verify(args, "lang", claim))
        report = claims.check_theorem1(lang, gamma, theta)
    elif claim == "lemma3":
        report = claims.check_lemma3(args.samples, theta, seed=args.seed)
    elif claim == "lemma4":
        report = claims.check_lemma4(args.graph)
    elif claim == "theorem2":
        report = claims.check_theorem2(args.graph or "k4", theta)
    elif claim == "theorem3":
        names = args.graphs or ["k4", "petersen"]
        graphs = [_resolve_graph(t) for t in names]
        depth = args.depth if args.depth is not None else len(graphs)
        report = claims.check_theorem3(graphs, depth, theta)
    elif claim == "theorem4":
        depth = args.depth if args.depth is not None else 1
        report = claims.check_theorem4(args.k, depth, theta)
    elif claim == "theorem5":
        names = args.graphs or ["k4", "k33"]
        if len(names) != 2:
            raise ValueError("verify theorem5 needs exactly two graphs")
        depth = args.depth if args.depth is not None else 1
        report = claims.check_theorem5(
            _resolve_graph(names[0]), _resolve_graph(names[1]), depth, theta
        )
    elif claim == "lemma5":
        base = load_language(args.lang) if args.lang else None
        depth = args.depth if args.depth is not None else 2
        report = claims.check_lemma5(base, depth, theta)
    elif claim == "theorem6":
        report = claims.check_theorem6(args.layers, theta)
    else:
        raise ValueError(f"unknown claim {claim!r}")
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(report.render())
    return EXIT_OK if report.passed else EXIT_CLAIM_FAILED


def _need_verify(args, flag: str, claim: str):
    value = getattr(args, flag)
    if value is None:
        raise ValueError(f"verify {claim} requires --{flag}")
    return value


_CLAIMS = (
    "metric",
    "bounds",
    "homothety",
    "prop3",
    "prop4",
    "theorem1",
    "lemma3",
    "lemma4",
    "theorem2",
    "theorem3",
    "theorem4",
    "theorem5",
    "lemma5",
    "theorem6",
)

_FAMILIES = (
    "lemma4",
    "theorem2",
    "theorem3",
    "theorem4",
    "theorem5",
    "lemma5",
    "theorem6",
    "unary",
    "prop4",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isolev",
        description="Exact generalized Levenshtein distances and isometry groups "
        "of finite languages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_weights(p):
        p.add_argument("--gamma", default="1", help="indel weight as P or P/Q (default 1)")
        p.add_argument("--theta", default="1", help="substitution weight as P or P/Q (default 1)")

    p = sub.add_parser("dist", help="distance between two words (<eps> = empty word)")
    p.add_argument("word1")
    p.add_argument("word2")
    add_weights(p)
    p.set_defaults(handler=_cmd_dist)

    p = sub.add_parser("matrix", help="pairwise distance matrix of a language file")
    p.add_argument("--lang", required=True)
    add_weights(p)
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("isom", help="isometry group of a language file, as JSON")
    p.add_argument("--lang", required=True)
    add_weights(p)
    p.add_argument("--brute", action="store_true",
                   help=f"use the exhaustive solver (at most {BRUTE_MAX_DEGREE} words)")
    p.set_defaults(handler=_cmd_isom)

    p = sub.add_parser("growth", help="count words of length at most N")
    p.add_argument("--lang", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_growth)

    p = sub.add_parser("construct", help="generate a language family")
    p.add_argument("family", choices=_FAMILIES)
    p.add_argument("--graph", help="graph file or catalog name (k4, k33, petersen, frucht)")
    p.add_argument("--graphs", nargs="+", help="graph files or catalog names")
    p.add_argument("--lang", help="base language file (lemma5)")
    p.add_argument("--depth", type=int, help="truncation depth")
    p.add_argument("--layers", type=int, default=1, help="layer count (theorem6)")
    p.add_argument("--k", type=int, default=2, help="alphabet size (theorem4)")
    p.add_argument("--max", type=int, default=3, help="largest run length (prop4)")
    p.add_argument("--lengths", nargs="+", type=int, help="word lengths (unary)")
    p.add_argument("--out", help="output language file (default: print to stdout)")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("verify", help="check one claim and report pass/fail")
    p.add_argument("claim", choices=_CLAIMS)
    add_weights(p)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--seed", type=int, default=claims.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=None, help="sample count for randomized checks")
    p.add_argument("--max-len", type=int, default=12, dest="max_len")
    p.add_argument("--random", type=int, default=20, help="random language count (prop3)")
    p.add_argument("--max-size", type=int, default=12, dest="max_size")
    p.add_argument("--max", type=int, default=6, help="largest run length (prop4)")
    p.add_argument("--lang", help="language file (theorem1, lemma5)")
    p.add_argument("--graph", help="graph file or catalog name")
    p.add_argument("--graphs", nargs="+", help="graph files or catalog names")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--layers", type=int, default=3)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(handler=_cmd_verify)

    return parser


_DEFAULT_SAMPLES = {
    "metric": 1000,
    "bounds": 1000,
    "homothety": 500,
    "lemma3": 200,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "samples", None) is None and getattr(args, "claim", None):
        args.samples = _DEFAULT_SAMPLES.get(args.claim, 200)
    try:
        return args.handler(args)
    except (DegreeTooLarge, GroupTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
