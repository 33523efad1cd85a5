"""Command-line interface.

Exit status: 0 when every requested check passes, 1 on a verification
failure, 2 on a usage error, 3 on an internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import quotients
from .combinatorics import (Tableau, cocharge, descent_data, maj_comaj_range,
                            mu_cocharge_tableaux, phi, reading_word, rsk_insert)
from .errors import InternalInconsistency, InvalidArgument
from .frobenius import SchurSeries, compare_series, parse_formula, quotient_frobenius
from .polyring import DiagonalPolynomial
from .quotients import hilbert_table, parse_ideal
from .specht import aty_higher_specht, higher_specht, hook_higher_specht, specht_poly, straighten
from .verify import SUITES, default_workers

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _word(text: str) -> list[int]:
    text = text.strip()
    if " " in text or "," in text:
        return [int(v) for v in text.replace(",", " ").split()]
    return [int(ch) for ch in text]


def _ints(text: str | None) -> list[int] | None:
    if text is None:
        return None
    return [int(v) for v in text.replace(",", " ").split()]


def _poly_out(f: DiagonalPolynomial) -> dict:
    return {"n": f.n, "terms": f.to_json(), "text": str(f)}


# ------------------------------------------------------------- commands
def cmd_stats(args) -> tuple[dict, str, bool]:
    out: dict = {}
    lines = []
    if args.word:
        w = _word(args.word)
        c = cocharge(w)
        out["word"] = w
        out["cocharge"] = {"labels": list(c.labels), "subwords": list(c.subword_ids), "total": c.total}
        lines.append(f"cocharge {c.total}  labels {' '.join(map(str, c.labels))}")
    if args.tableau:
        T = Tableau.parse(args.tableau)
        out["tableau"] = T.to_json()
        out["kind"] = T.kind
        out["reading_word"] = list(reading_word(T))
        lines.append(f"tableau {T.literal()}  ({T.kind})")
        lines.append("reading word " + "".join(map(str, reading_word(T))) if T.n < 10
                     else "reading word " + " ".join(map(str, reading_word(T))))
        if T.is_standard():
            des, maj, nd = descent_data(T)
            out.update({"descents": sorted(des), "maj": maj, "des": nd,
                        "cocharge": cocharge(reading_word(T)).total})
            lines.append(f"Des {sorted(des)}  maj {maj}  des {nd}  cocharge {out['cocharge']}")
            if args.range:
                i, j = _ints(args.range)
                m, cm = maj_comaj_range(T, i, j)
                out["range"] = {"i": i, "j": j, "maj": m, "comaj": cm}
                lines.append(f"maj_{{{i},{j}}} {m}  comaj_{{{i},{j}}} {cm}")
            ks = [args.k] if args.k else list(range(1, T.n + 1))
            out["mu_cocharge"] = {}
            for k in ks:
                p = mu_cocharge_tableaux(T, k)
                out["mu_cocharge"][str(k)] = {"cc_tab": [list(r) for r in p.cc_tab],
                                              "cc_tab_prime": [list(r) for r in p.cc_tab_prime],
                                              "cc_mu": p.cc_mu, "cc_mu_prime": p.cc_mu_prime}
                lines.append(f"k={k}: ccTab {' / '.join(''.join(map(str, r)) for r in p.cc_tab)}"
                             f"  ccTab' {' / '.join(''.join(map(str, r)) for r in p.cc_tab_prime)}"
                             f"  cc_mu {p.cc_mu}  cc'_mu {p.cc_mu_prime}")
    if not out:
        raise UsageError("stats needs --word or --tableau")
    return out, "\n".join(lines), True


def cmd_rsk(args):
    T = rsk_insert(_word(args.word))
    return {"tableau": T.to_json()}, T.literal(), True


def cmd_phi(args):
    T = Tableau.parse(args.tableau)
    P = phi(T)
    return {"input": T.to_json(), "phi": P.to_json()}, P.literal(), True


def cmd_specht(args):
    T = Tableau.parse(args.tableau)
    F = specht_poly(T)
    out = {"tableau": T.to_json(), "F": _poly_out(F)}
    text = f"F_T = {F}"
    if args.straighten:
        e = straighten(T)
        out["straighten"] = e.to_json()
        text += "\n" + "\n".join(f"  {c:>4} * F[{U.literal()}]" for U, c in e.coeffs)
    return out, text, True


def cmd_higher_specht(args):
    T = Tableau.parse(args.T)
    if args.S and args.k:
        F = hook_higher_specht(T, Tableau.parse(args.S), args.k)
    elif args.S and args.aty:
        F = aty_higher_specht(T, Tableau.parse(args.S))
    elif args.c is not None:
        c = _ints(args.c)
        d = _ints(args.d) if args.d is not None else [0] * T.n
        F = higher_specht(T, c, d)
    else:
        raise UsageError("give --S with --k (hook), --S with --aty, or --c [--d]")
    return {"F": _poly_out(F)}, str(F), True


def cmd_ideal(args):
    I = parse_ideal(args.ideal)
    gens = [str(g) for g in I.generators]
    return {"ideal": I.label, "generators": gens}, "\n".join(gens), True


def cmd_hilbert(args):
    I = parse_ideal(args.ideal)
    table = hilbert_table(I, args.d1, args.d2)
    body = table.to_json()
    lines = [f"{I.label}: total {table.total}" + (" (certified support)" if table.certified else "")]
    lines += [f"  {k}: {v}" for k, v in body["dims"].items()]
    return body, "\n".join(lines), True


def _series(spec: str, args) -> SchurSeries:
    if spec.startswith("quotient:"):
        return quotient_frobenius(parse_ideal(spec.split(":", 1)[1]), args.d1, args.d2)
    return parse_formula(spec)


def cmd_frobenius(args):
    if args.compare:
        a, b = (_series(s, args) for s in args.compare)
        rep = compare_series(a, b, args.allow_swap)
        return rep.to_json(), rep.describe(), rep.equal
    if args.quotient:
        s = quotient_frobenius(parse_ideal(args.quotient), args.d1, args.d2)
    elif args.formula:
        s = parse_formula(args.formula)
    else:
        raise UsageError("frobenius needs --formula, --quotient or --compare")
    return {"series": s.to_json(), "text": s.render()}, s.render(), True


def cmd_verify(args):
    name = args.suite
    nums = args.params
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if name == "paper-examples":
        rep = SUITES[name]()
    elif name in ("hook-basis", "pk-basis"):
        if len(nums) != 2:
            raise UsageError(f"{name} needs n and k")
        if name == "hook-basis":
            rep = SUITES[name](nums[0], nums[1], workers=args.workers)
        else:
            rep = SUITES[name](nums[0], nums[1], window=args.window)
    else:
        if len(nums) != 1:
            raise UsageError(f"{name} needs n")
        rep = SUITES[name](nums[0])
    return rep.to_json(), rep.render(), rep.passed


COMMANDS = {
    "stats": cmd_stats, "rsk": cmd_rsk, "phi": cmd_phi, "specht": cmd_specht,
    "higher-specht": cmd_higher_specht, "ideal": cmd_ideal, "hilbert": cmd_hilbert,
    "frobenius": cmd_frobenius, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="higher-specht", description="Higher Specht polynomials and hook Garsia-Haiman modules.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $HIGHER_SPECHT_WORKERS or 1)")
    p.add_argument("--cache-dir", default=None, help="persist graded-piece dimensions here")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("stats", help="descents, maj, cocharge and mu-cocharge")
    s.add_argument("--word")
    s.add_argument("--tableau", help='rows bottom to top, e.g. "1 2 4 / 3 5 / 6 7"')
    s.add_argument("--k", type=int)
    s.add_argument("--range", help="i,j for maj_{i,j} and comaj_{i,j}")

    s = sub.add_parser("rsk", help="RSK insertion tableau of a word")
    s.add_argument("word")
    s = sub.add_parser("phi", help="the maj-to-cocharge bijection")
    s.add_argument("tableau")
    s = sub.add_parser("specht", help="Specht polynomial F_T")
    s.add_argument("tableau")
    s.add_argument("--straighten", action="store_true")

    s = sub.add_parser("higher-specht", help="F_T^{c,d}, hook F_T^S or one-variable F_T^S")
    s.add_argument("--T", required=True)
    s.add_argument("--S")
    s.add_argument("--k", type=int)
    s.add_argument("--aty", action="store_true", help="one-variable construction")
    s.add_argument("--c", help="x exponents in reading order")
    s.add_argument("--d", help="y exponents in reading order")

    s = sub.add_parser("ideal", help="list generators, e.g. hook(3,2)")
    s.add_argument("ideal")
    s = sub.add_parser("hilbert", help="bigraded Hilbert table of a quotient")
    s.add_argument("ideal")
    s.add_argument("--d1", type=int)
    s.add_argument("--d2", type=int)

    s = sub.add_parser("frobenius", help="Schur series from formulas or quotients")
    s.add_argument("--formula", help="stembridge:n,k | ccmu:n,k | ls:n | lscocharge:parts | nabla-e3")
    s.add_argument("--quotient", help="ideal label, e.g. hook(4,2)")
    s.add_argument("--compare", nargs=2, metavar=("A", "B"),
                   help="two formula specs; use quotient:LABEL for a quotient series")
    s.add_argument("--allow-swap", action="store_true")
    s.add_argument("--d1", type=int)
    s.add_argument("--d2", type=int)

    s = sub.add_parser("verify", help="run a named verification suite")
    s.add_argument("suite", help=", ".join(SUITES))
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("--window", type=int, default=None, help="pk-basis total-degree window (default n)")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required")
        if args.workers is None:
            args.workers = default_workers()
        if args.cache_dir:
            quotients.set_cache_dir(args.cache_dir)
        payload, text, ok = COMMANDS[args.command](args)
    except (UsageError, InvalidArgument, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
