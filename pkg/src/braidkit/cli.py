"""Command-line interface.

Exit codes follow one contract across subcommands:

* 0: success, or a positive verdict (Equal / Found / Accept / all suites pass)
* 1: a conclusive negative verdict (NotEqual / Reject / search space
     exhausted without a hit)
* 2: inconclusive, a depth or size cap fired before the question settled
* 3: malformed input

File arguments also accept ``-`` for standard input, or an inline JSON
literal.  With ``--format json`` the payload is serialized with sorted
keys, so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bands import (
    BandError,
    Factorization,
    band_factorization,
    delta_squared_word,
    expand_word,
    parse_band_word,
)
from .hurwitz import MoveError, apply_sequence, find_path, move_from_int, orbit_explore
from .normalform import canonical_key, normal_form
from .planar import MapError, check_semiframe, map_from_json
from .rewriting import equivalence_class, hurwitz_path_positive
from .verify import DEFAULT_SEED, SUITE_NAMES, run_suites
from .words import WordError, conjugate, format_word, parse_word

InputError = (WordError, BandError, MoveError, MapError)


def _load_json_arg(arg: str):
    """A file path, ``-`` for stdin, or an inline JSON literal."""
    if arg == "-":
        return json.load(sys.stdin)
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(arg)


def _factorization_from_json(data) -> Factorization:
    if not isinstance(data, dict) or "strands" not in data or "factors" not in data:
        raise BandError("factorization JSON needs 'strands' and 'factors'")
    n = data["strands"]
    if not isinstance(n, int):
        raise BandError("'strands' must be an integer")
    return Factorization(n, tuple(parse_word(s, n) for s in data["factors"]))


def _moves_from_json(data):
    if not isinstance(data, list):
        raise MoveError("move sequence JSON must be an array of signed integers")
    return [move_from_int(v) for v in data]


def _emit(payload: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _search_exit(status: str, truncated: bool) -> int:
    if status == "found":
        return 0
    if truncated:
        return 2
    return 1


def cmd_nf(args) -> int:
    w = parse_word(args.word, args.strands)
    nf = normal_form(w)
    payload = {
        "strands": nf.n,
        "deltaPower": nf.delta_power,
        "factors": [[v + 1 for v in p] for p in nf.factors],
        "canonicalLength": nf.canonical_length,
        "key": canonical_key(w),
    }
    _emit(payload, payload["key"], args.format)
    return 0


def cmd_eq(args) -> int:
    k1 = canonical_key(parse_word(args.word1, args.strands))
    k2 = canonical_key(parse_word(args.word2, args.strands))
    same = k1 == k2
    _emit({"equal": same}, "equal" if same else "not equal", args.format)
    return 0 if same else 1


def cmd_conj(args) -> int:
    x = parse_word(args.word, args.strands)
    g = parse_word(args.conjugator, args.strands)
    out = conjugate(x, g)
    _emit({"strands": out.n, "word": format_word(out)}, format_word(out), args.format)
    return 0


def cmd_band_expand(args) -> int:
    w = parse_band_word(args.word, args.strands)
    out = expand_word(w)
    payload = {"strands": out.n, "band": str(w), "word": format_word(out)}
    _emit(payload, format_word(out), args.format)
    return 0


def cmd_delta2(args) -> int:
    out = delta_squared_word(args.strands)
    _emit({"strands": out.n, "word": format_word(out)}, format_word(out), args.format)
    return 0


def cmd_hurwitz_apply(args) -> int:
    f = _factorization_from_json(_load_json_arg(args.factorization))
    moves = _moves_from_json(_load_json_arg(args.moves))
    out = apply_sequence(f, moves)
    payload = out.as_dict()
    payload["productKey"] = out.product_key
    text = "\n".join(f"{i + 1}: {w}" for i, w in enumerate(payload["factors"]))
    _emit(payload, text, args.format)
    return 0


def cmd_hurwitz_path(args) -> int:
    f1 = _factorization_from_json(_load_json_arg(args.source))
    f2 = _factorization_from_json(_load_json_arg(args.target))
    res = find_path(f1, f2, args.depth_cap, args.size_cap)
    if res.status == "found":
        text = "found: " + " ".join(str(v) for v in res.as_dict()["moves"])
    elif res.status == "not_comparable":
        text = "not comparable: products differ"
    elif res.truncated:
        text = "not found (caps exhausted)"
    else:
        text = "not found (orbit exhausted)"
    _emit(res.as_dict(), text, args.format)
    if res.status == "not_comparable":
        return 1
    return _search_exit(res.status, res.truncated)


def cmd_orbit(args) -> int:
    f = _factorization_from_json(_load_json_arg(args.factorization))
    rep = orbit_explore(f, args.depth_cap, args.size_cap)
    payload = rep.as_dict()
    payload["depthCap"] = args.depth_cap
    payload["sizeCap"] = args.size_cap
    if not args.keys:
        del payload["keys"]
    depths = ",".join(str(c) for c in rep.depth_counts)
    text = f"visited={rep.visited} truncated={rep.truncated} depths={depths}"
    _emit(payload, text, args.format)
    return 2 if rep.truncated else 0


def cmd_rewrite_class(args) -> int:
    w = parse_band_word(args.word, args.strands)
    res = equivalence_class(w, size_cap=args.size_cap or 10**6)
    payload = res.as_dict()
    text = "\n".join([f"size={len(res.words)} truncated={res.truncated}"]
                     + [str(v) for v in res.words])
    _emit(payload, text, args.format)
    return 2 if res.truncated else 0


def cmd_positive_path(args) -> int:
    w1 = parse_band_word(args.word1, args.strands)
    w2 = parse_band_word(args.word2, args.strands)
    res = hurwitz_path_positive(w1, w2, size_cap=args.size_cap or 10**6)
    if res.status == "found":
        text = "found: " + " ".join(str(v) for v in res.as_dict()["moves"])
    elif res.status == "not_equal":
        text = "not equal (conclusive)"
    else:
        text = "inconclusive (size cap exhausted)"
    _emit(res.as_dict(), text, args.format)
    if res.status == "found":
        return 0
    return 2 if res.status == "inconclusive" else 1


def cmd_semiframe(args) -> int:
    m = map_from_json(_load_json_arg(args.map))
    verdict = check_semiframe(m)
    if verdict.accepted:
        pairs = " ".join(f"{c}:{i}" for c, i in sorted(verdict.witnesses.items()))
        text = f"accepted witnesses={pairs}"
    else:
        text = f"rejected: {verdict.reason}"
    _emit(verdict.as_dict(), text, args.format)
    return 0 if verdict.accepted else 1


def cmd_verify(args) -> int:
    names = args.suites or list(SUITE_NAMES)
    for name in names:
        if name not in SUITE_NAMES:
            raise BandError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    reports = run_suites(names, args.strands, args.seed, args.depth_cap, args.size_cap)
    hard_fail = any(not r["ok"] and not r["inconclusive"] for r in reports)
    inconclusive = any(r["inconclusive"] for r in reports)
    lines = []
    for r in reports:
        if r["ok"]:
            status = "PASS"
        elif r["inconclusive"]:
            status = "INCONCLUSIVE"
        else:
            status = "FAIL"
        line = f"{status} {r['suite']} (strands={r['strands']}, checks={r['checks']})"
        for msg in r["failures"]:
            line += f"\n  - {msg}"
        lines.append(line)
    payload = {"suites": reports, "ok": not hard_fail and not inconclusive}
    _emit(payload, "\n".join(lines), args.format)
    if hard_fail:
        return 1
    if inconclusive:
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidkit",
        description="Band-generator braid computations, Hurwitz moves, and semi-frame checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, strands=True):
        if strands:
            p.add_argument("--strands", type=int, default=3, help="strand count (default 3)")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--threads", type=int, default=1,
                       help="reserved; searches currently run sequentially")

    p = sub.add_parser("nf", help="Garside normal form of an Artin word")
    p.add_argument("word", help="signed generator indices, e.g. '1 2 -1'")
    common(p)
    p.set_defaults(fn=cmd_nf)

    p = sub.add_parser("eq", help="decide equality of two Artin words")
    p.add_argument("word1")
    p.add_argument("word2")
    common(p)
    p.set_defaults(fn=cmd_eq)

    p = sub.add_parser("conj", help="conjugate x by g (computes g^-1 x g)")
    p.add_argument("word")
    p.add_argument("conjugator")
    common(p)
    p.set_defaults(fn=cmd_conj)

    p = sub.add_parser("band-expand", help="expand a band word into Artin letters")
    p.add_argument("word", help="band letters 't:s', e.g. '3:1 2:1'")
    common(p)
    p.set_defaults(fn=cmd_band_expand)

    p = sub.add_parser("delta2", help="the full-twist word on n strands")
    common(p)
    p.set_defaults(fn=cmd_delta2)

    p = sub.add_parser("hurwitz-apply", help="apply a move sequence to a factorization")
    p.add_argument("factorization", help="JSON {strands, factors}; file, '-', or literal")
    p.add_argument("moves", help="JSON array of signed integers; file, '-', or literal")
    common(p, strands=False)
    p.set_defaults(fn=cmd_hurwitz_apply)

    p = sub.add_parser("hurwitz-path", help="search for a move sequence between factorizations")
    p.add_argument("source", help="JSON {strands, factors}; file, '-', or literal")
    p.add_argument("target", help="JSON {strands, factors}; file, '-', or literal")
    p.add_argument("--depth-cap", type=int, default=None)
    p.add_argument("--size-cap", type=int, default=None)
    common(p, strands=False)
    p.set_defaults(fn=cmd_hurwitz_path)

    p = sub.add_parser("orbit", help="breadth-first Hurwitz orbit of a factorization")
    p.add_argument("factorization", help="JSON {strands, factors}; file, '-', or literal")
    p.add_argument("--depth-cap", type=int, default=None)
    p.add_argument("--size-cap", type=int, default=None)
    p.add_argument("--keys", action="store_true", help="include visited keys in the payload")
    common(p, strands=False)
    p.set_defaults(fn=cmd_orbit)

    p = sub.add_parser("rewrite-class", help="relation-rewrite closure of a positive band word")
    p.add_argument("word")
    p.add_argument("--size-cap", type=int, default=None)
    common(p)
    p.set_defaults(fn=cmd_rewrite_class)

    p = sub.add_parser("positive-path", help="compile a relation path into Hurwitz moves")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--size-cap", type=int, default=None)
    common(p)
    p.set_defaults(fn=cmd_positive_path)

    p = sub.add_parser("semiframe", help="check the semi-frame face condition of a map")
    p.add_argument("map", help="map JSON; file, '-', or literal")
    common(p, strands=False)
    p.set_defaults(fn=cmd_semiframe)

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument("suites", nargs="*", metavar="suite",
                   help=f"any of: {', '.join(SUITE_NAMES)} (default: all)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--depth-cap", type=int, default=None)
    p.add_argument("--size-cap", type=int, default=None)
    common(p)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 3
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
