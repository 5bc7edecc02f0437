"""Command-line interface: ``posetcalc <command> --input FILE [options]``.

Exit codes: 0 success, 1 invalid poset, 2 parse error, 3 labeling rejected,
4 an identity check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import abindex, poset as posetmod
from .chow import chow, gamma_expansion
from .data import fixture_path
from .document import PosetDocument, load_poset, parse_poset
from .errors import (
    InvalidPoset,
    MissingLabel,
    NegativeLabel,
    NotAnRLabeling,
    ParseError,
    PosetCalcError,
)
from .ncpoly import mask_members, render
from .polynomial import render_poly
from .rlabeling import SIGN_RULES, expsi_via_rlabeling, is_r_labeling
from .verify import run_checks

EXIT_INVALID_POSET = 1
EXIT_PARSE = 2
EXIT_LABELING = 3
EXIT_IDENTITY = 4

COMMANDS = (
    "validate", "mobius", "poincare", "charpoly", "psi", "expsi", "flag",
    "chow", "gamma", "rlabel-check", "rlabel-expand", "verify",
)


class LabelingRejected(Exception):
    pass


def _set_str(members) -> str:
    return "{" + ",".join(str(i) for i in members) + "}"


def _read_document(ref: str) -> PosetDocument:
    path = Path(ref)
    if not path.exists():
        bundled = fixture_path(path.stem)
        if path.suffix == ".poset" and bundled.is_file():
            return parse_poset(bundled.read_text(encoding="utf-8"), source=ref)
        raise ParseError(f"{ref}: no such file")
    return load_poset(path)


def _emit(args, text: str, structured) -> None:
    if args.format == "structured":
        print(json.dumps(structured, ensure_ascii=False, sort_keys=False))
    else:
        print(text)


def _poly_out(args, p, var: str) -> None:
    _emit(args, render_poly(p.coeffs, var), {"var": var, "coeffs": list(p.coeffs)})


def _nc_out(args, f) -> None:
    _emit(args, render(f), {"degree": f.degree, "terms": f.to_dict()})


def cmd_validate(args, doc: PosetDocument) -> int:
    P = doc.poset
    _emit(
        args,
        f"valid graded bounded poset: {len(P)} elements, {len(P.covers)} covers, rank {P.n}",
        {"name": doc.name, "elements": len(P), "covers": len(P.covers), "rank": P.n},
    )
    return 0


def cmd_mobius(args, doc: PosetDocument) -> int:
    P = doc.poset
    lower = P.index(args.lower) if args.lower is not None else P.bottom
    if args.upper is not None:
        targets = [P.index(args.upper)]
        posetmod.mobius(P, lower, targets[0])
    else:
        targets = [v for v in P.elements_by_rank() if P.leq(lower, v)]
    values = {P.names[w]: posetmod.mobius(P, lower, w) for w in targets}
    text = "\n".join(f"{P.names[lower]}\t{w}\t{m}" for w, m in values.items())
    _emit(args, text, {"lower": P.names[lower], "mobius": values})
    return 0


def cmd_poincare(args, doc):
    _poly_out(args, posetmod.poincare(doc.poset), "y")
    return 0


def cmd_charpoly(args, doc):
    _poly_out(args, posetmod.char_poly(doc.poset), "t")
    return 0


def cmd_psi(args, doc):
    method = args.method or "chains"
    P = doc.poset
    f = abindex.ab_index_tilde(P, method) if args.tilde else abindex.ab_index(P, method)
    _nc_out(args, f)
    return 0


def cmd_expsi(args, doc):
    method = args.method or "omega"
    P = doc.poset
    f = abindex.ex_ab_index_tilde(P, method) if args.tilde else abindex.ex_ab_index(P, method)
    _nc_out(args, f)
    return 0


def cmd_flag(args, doc):
    P = doc.poset
    alpha = abindex.flag_alpha(P)
    beta = abindex.flag_beta(P, alpha)
    rows = [(mask_members(mask), alpha.values[mask], beta.values[mask]) for mask in range(len(alpha.values))]
    rows.sort(key=lambda r: (len(r[0]), r[0]))
    text = "T\talpha\tbeta\n" + "\n".join(f"{_set_str(T)}\t{a}\t{b}" for T, a, b in rows)
    _emit(args, text, {"n": P.n, "rows": [{"T": T, "alpha": a, "beta": b} for T, a, b in rows]})
    return 0


def cmd_chow(args, doc):
    _poly_out(args, chow(doc.poset, args.augmented, args.method or "omega"), "x")
    return 0


def cmd_gamma(args, doc):
    g = gamma_expansion(doc.poset, args.augmented)
    d = g.top_degree
    lines = []
    for T, c in g.terms:
        k = bin(T).count("1")
        lines.append(f"{_set_str(mask_members(T))}\t{c}\tx^{k}(1+x)^{d - 2 * k}")
    lines.append(f"sum\t{g.expand()}")
    if g.has_negative():
        lines.append("note\tnegative gamma coefficients (flag h-vector not nonnegative)")
    _emit(args, "\n".join(lines), g.to_dict() | {"expanded": list(g.expand().coeffs)})
    return 0


def _labeling(doc: PosetDocument):
    if doc.labeling is None:
        raise LabelingRejected("document has no labels")
    return doc.labeling


def cmd_rlabel_check(args, doc):
    check = is_r_labeling(doc.poset, _labeling(doc))
    text = check.describe(doc.poset)
    witness = None
    if not check:
        u, w = check.witness
        witness = {"interval": [doc.poset.names[u], doc.poset.names[w]], "rising_chains": check.rising_chains}
    _emit(args, text, {"r_labeling": check.ok, "witness": witness})
    return 0 if check else EXIT_LABELING


def cmd_rlabel_expand(args, doc):
    f = expsi_via_rlabeling(doc.poset, _labeling(doc), args.sign_rule)
    _nc_out(args, f)
    return 0


def cmd_verify(args, doc):
    labeling = doc.labeling
    checks = run_checks(doc.poset, labeling)
    _emit(
        args,
        "\n".join(c.line() for c in checks),
        {"checks": [{"name": c.name, "ok": c.ok} for c in checks]},
    )
    return 0 if all(c.ok for c in checks) else EXIT_IDENTITY


HANDLERS = {
    "validate": cmd_validate,
    "mobius": cmd_mobius,
    "poincare": cmd_poincare,
    "charpoly": cmd_charpoly,
    "psi": cmd_psi,
    "expsi": cmd_expsi,
    "flag": cmd_flag,
    "chow": cmd_chow,
    "gamma": cmd_gamma,
    "rlabel-check": cmd_rlabel_check,
    "rlabel-expand": cmd_rlabel_expand,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="posetcalc",
        description="Invariants of finite graded bounded posets.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", "-i", required=True, help="poset document (JSON)")
    parser.add_argument("--method", help="computation route (psi: chains|beta|recursive; "
                                         "expsi: chains|omega|recursive|beta)")
    parser.add_argument("--augmented", action="store_true", help="augmented Chow polynomial")
    parser.add_argument("--tilde", action="store_true", help="bottom-anchored variant")
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--sign-rule", choices=SIGN_RULES, default="tiebreak",
                        help="comparison of signed labels for rlabel-expand")
    parser.add_argument("--lower", help="lower element for mobius (default: minimum)")
    parser.add_argument("--upper", help="upper element for mobius (default: all)")
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else 0
    try:
        doc = _read_document(args.input)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MissingLabel as exc:
        print(f"labeling rejected: {exc}", file=sys.stderr)
        return EXIT_LABELING
    except InvalidPoset as exc:
        print(f"invalid poset: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID_POSET
    try:
        return HANDLERS[args.command](args, doc)
    except (LabelingRejected, NotAnRLabeling, NegativeLabel, MissingLabel) as exc:
        print(f"labeling rejected: {exc}", file=sys.stderr)
        return EXIT_LABELING
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PosetCalcError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID_POSET


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
