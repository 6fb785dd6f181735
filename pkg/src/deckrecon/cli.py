"""Command-line interface.

Every subcommand prints one JSON document on stdout; diagnostics go to
stderr.  Exit codes:

    0  success
    1  usage error (bad arguments or input files)
    2  invariant violation (a result contradicting a theorem: a bug signal)
    3  instance too large for a brute-force method
    4  verification failure (classify)
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from itertools import combinations_with_replacement
from pathlib import Path

from . import __version__
from .bounds import (exhaustive_reconstruction_number, predicate,
                     reconstruction_number_formula, tee)
from .deckset import (DECK_GUARD, Multiset, SubsetT, multiset_deck_value,
                      multiset_decks_equal, set_deck)
from .errors import (InstanceTooLargeError, InvariantViolationError,
                     VerificationFailureError)
from .spectral import distinguishing_number, wht
from .structure import (StandardParams, classify_pair, standard_pair,
                        standard_spectrum)
from .witness import build_witness, verify_witness, witness_blocks

FORMAT_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT, EXIT_TOO_LARGE, EXIT_VERIFY = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def multiset_doc(f: Multiset) -> dict:
    return {"n": f.dim, "counts": f.tolist()}


def set_doc(T: SubsetT) -> dict:
    return {"n": T.dim, "elements": list(T.members)}


def parse_document(doc) -> Multiset | SubsetT:
    """A MultisetFile ({n, counts}) or SetFile ({n, elements}) document."""
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int) or doc["n"] < 0:
        raise UsageError("expected an object with a non-negative integer 'n'")
    n = doc["n"]
    if "counts" in doc:
        counts = doc["counts"]
        if (not isinstance(counts, list) or len(counts) != 1 << n
                or not all(isinstance(c, int) and not isinstance(c, bool) and c >= 0
                           for c in counts)):
            raise UsageError(f"'counts' must be {1 << n} non-negative integers")
        return Multiset(n, counts)
    if "elements" in doc:
        elems = doc["elements"]
        if (not isinstance(elems, list)
                or not all(isinstance(e, int) and not isinstance(e, bool) and 0 <= e < 1 << n
                           for e in elems)):
            raise UsageError(f"'elements' must be integers in [0, {1 << n})")
        if len(set(elems)) != len(elems):
            raise UsageError("'elements' must be distinct")
        return SubsetT.of(n, elems)
    raise UsageError("document needs 'counts' or 'elements'")


def read_input(path: str) -> Multiset | SubsetT:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return parse_document(doc)


def _num(d):
    return "inf" if d == math.inf else int(d)


def _as_multiset(x) -> Multiset:
    return x.as_multiset() if isinstance(x, SubsetT) else x


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_formula(args) -> dict:
    if args.n < 1:
        raise UsageError("--n must be positive")
    r = reconstruction_number_formula(args.n)
    doc = {"n": args.n, "t": tee(args.n), "r": r}
    if args.table:
        doc["table"] = [{"k": k, "predicate": predicate(args.n, k), "k_le_r": k <= r}
                        for k in range(1, args.n + 3)]
    return doc


def _report_doc(rep) -> dict:
    return {
        "non_translate": rep.non_translate,
        "indist_level": _num(rep.indist_level),
        "distinguishing_number": _num(rep.distinguishing_number),
        "block_structure_ok": rep.block_structure_ok,
        "cross_check": rep.cross_check,
        "valid": rep.valid,
    }


def cmd_witness(args) -> dict:
    A, B = build_witness(args.n, args.k)
    rep = verify_witness(A, B, args.k, blocks=witness_blocks(args.n, args.k))
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "A.json").write_text(json.dumps(set_doc(A)) + "\n")
        (out / "B.json").write_text(json.dumps(set_doc(B)) + "\n")
    return {"n": args.n, "k": args.k, "A": set_doc(A), "B": set_doc(B),
            "report": _report_doc(rep)}


def _deck_distinguishing_number(f: Multiset, g: Multiset, max_k: int):
    for k in range(1, max_k + 1):
        if f.dim * (k - 1) > DECK_GUARD:
            raise InstanceTooLargeError(
                f"deck method needs dim*(k-1) <= {DECK_GUARD}; use --method fourier")
        if not multiset_decks_equal(f, g, k):
            return k
    return None


def cmd_distnum(args) -> dict:
    f, g = _as_multiset(read_input(args.a)), _as_multiset(read_input(args.b))
    if f.dim != g.dim:
        raise UsageError(f"inputs have dimensions {f.dim} and {g.dim}")
    max_k = args.max_k if args.max_k is not None else f.dim + 1
    doc = {"method": args.method, "n": f.dim}
    if args.method == "deck":
        d = _deck_distinguishing_number(f, g, max_k)
        if d is None and max_k >= f.dim + 1:
            # no deck differs up to dim + 1, so the pair must be translates
            d = distinguishing_number(f, g).number
        doc["distinguishing_number"] = None if d is None else _num(d)
        if d is None:
            doc["lower_bound"] = max_k + 1
        return doc
    d, w = distinguishing_number(f, g)
    if d != math.inf and d > max_k:
        doc.update(distinguishing_number=None, lower_bound=max_k + 1)
        return doc
    doc["distinguishing_number"] = _num(d)
    if w is not None:
        doc["witness"] = list(w.elements)
        doc["product_left"] = w.product_left
        doc["product_right"] = w.product_right
    return doc


def cmd_deck(args) -> dict:
    x = read_input(args.input)
    if isinstance(x, Multiset) and x.is_set():
        x = SubsetT.of(x.dim, x.support())
    if isinstance(x, SubsetT):
        if not 0 <= args.k <= len(x):
            raise UsageError(f"--k must lie in 0..{len(x)}")
        fp = set_deck(x, args.k)
        return {"kind": "set", "n": x.dim, "k": fp.k, "total": fp.total,
                "entries": fp.encode()}
    if args.k < 1:
        raise UsageError("--k must be positive for a multiset deck")
    if x.dim * (args.k - 1) > DECK_GUARD:
        raise InstanceTooLargeError(f"multiset deck needs dim*(k-1) <= {DECK_GUARD}")
    values = [[[0, *rest], multiset_deck_value(x, (0, *rest))]
              for rest in combinations_with_replacement(range(1 << x.dim), args.k - 1)]
    return {"kind": "multiset", "n": x.dim, "k": args.k, "values": values}


def cmd_wht(args) -> dict:
    f = _as_multiset(read_input(args.input))
    return {"n": f.dim, "spectrum": wht(f).tolist()}


def cmd_exhaustive(args) -> dict:
    res = exhaustive_reconstruction_number(args.n, workers=args.workers)
    formula = reconstruction_number_formula(args.n)
    if res.r != formula:
        raise InvariantViolationError(
            f"exhaustive r={res.r} disagrees with the formula value {formula}")
    return {"n": args.n, "r": res.r, "formula": formula, "class_count": res.class_count,
            "extremal_pairs": [[list(A.members), list(B.members), d]
                               for A, B, d in res.extremal_pairs]}


def _coeffs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(",") if c.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}") from exc


def cmd_standard(args) -> dict:
    try:
        p = StandardParams(args.k, args.a, args.b, args.coeffs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    f1, f2 = standard_pair(p)
    d, w = distinguishing_number(f1, f2)
    return {
        "k": p.k, "a": p.a, "b": p.b, "coeffs": list(p.coeffs),
        "f1": multiset_doc(f1), "f2": multiset_doc(f2),
        "spectrum_f1": standard_spectrum(p).tolist(),
        "spectrum_f2": standard_spectrum(p.swapped()).tolist(),
        "spectra_match_transform": (standard_spectrum(p) == wht(f1)
                                    and standard_spectrum(p.swapped()) == wht(f2)),
        "distinguishing_number": _num(d),
        "witness": list(w.elements) if w else None,
    }


def cmd_classify(args) -> dict:
    f1, f2 = _as_multiset(read_input(args.a)), _as_multiset(read_input(args.b))
    try:
        c = classify_pair(f1, f2)
    except ValueError as exc:
        raise VerificationFailureError(str(exc)) from exc
    return {"theta": {"dim_in": c.theta.dim_in, "dim_out": c.theta.dim_out,
                      "cols": list(c.theta.cols)},
            "z1": c.z1, "z2": c.z2,
            "params": {"k": c.params.k, "a": c.params.a, "b": c.params.b,
                       "coeffs": list(c.params.coeffs)},
            "verified": True}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="deckrecon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("formula", help="closed-form reconstruction number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="store_true", help="include the predicate table")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("witness", help="build and verify a lower-bound witness pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="directory for A.json and B.json")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("distnum", help="distinguishing number of two (multi)sets")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--method", choices=("fourier", "deck"), default="fourier")
    p.add_argument("--max-k", type=int, dest="max_k")
    p.set_defaults(func=cmd_distnum)

    p = sub.add_parser("deck", help="k-deck of a set (fingerprint) or multiset")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("wht", help="Walsh-Hadamard spectrum")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_wht)

    p = sub.add_parser("exhaustive", help="exhaustive reconstruction number, n <= 4")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int,
                   default=int(os.environ.get("DECKRECON_WORKERS", "1") or 1))
    p.set_defaults(func=cmd_exhaustive)

    p = sub.add_parser("standard", help="standard pair, spectra and distinguishing number")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--coeffs", type=_coeffs, required=True)
    p.set_defaults(func=cmd_standard)

    p = sub.add_parser("classify", help="classify a pair at distinguishing number k")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_classify)
    return parser


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        body = args.func(args)
    except UsageError as exc:
        print(f"deckrecon: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolationError as exc:
        print(f"deckrecon: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except InstanceTooLargeError as exc:
        print(f"deckrecon: instance too large: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except VerificationFailureError as exc:
        print(f"deckrecon: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"deckrecon: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = {"version": FORMAT_VERSION, "command": args.command, **body}
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
