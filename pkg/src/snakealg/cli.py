"""Command-line interface.

Exit codes: 0 success, 1 parse or usage error, 2 domain error, 3 oracle FAIL.
``--format machine`` prints one JSON object; all field elements appear as strings
produced by the field's printer.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import ideals, numtheory, oracle
from .algebra import convolve, from_terms
from .errors import InputError, SnakeError
from .fields import Field, make_field
from .grammar import format_heads, parse_element, print_element

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_ORACLE_FAIL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _element(field: Field, n: int, text: str):
    return from_terms(field, n, parse_element(field, n, text))


def _field(args) -> Field:
    return make_field(args.field)


def cmd_classify_field(args) -> tuple[dict, int]:
    f = _field(args)
    report = f.roots_of_phi3()
    simple, reason = ideals.is_s_simple(f, 3)
    doc: dict[str, Any] = {
        "field": str(f),
        "kind": f.kind.value,
        "characteristic": f.characteristic,
        "order": f.order if f.is_finite else "infinite",
        "phi3Roots": [str(r) for r in report.roots],
        "doubleRoot": report.double_root,
    }
    if f.is_finite and not f.is_extension:
        doc["splitClass"] = numtheory.classify_prime(f.p).value
    doc["sSimple3Heads"] = simple
    doc["reason"] = reason
    return doc, EXIT_OK


def cmd_s_simple(args) -> tuple[dict, int]:
    f = _field(args)
    simple, reason = ideals.is_s_simple(f, args.heads)
    roots = [str(r) for r in f.roots_of_phi3().roots] if args.heads == 3 else []
    return {"field": str(f), "heads": args.heads, "sSimple": simple, "roots": roots, "reason": reason}, EXIT_OK


def _ideal_doc(d: ideals.IdealDescriptor) -> dict:
    return {
        "generator": format_heads(d.generator),
        "root": None if d.root is None else str(d.root),
        "kind": d.kind.value,
        "provenance": d.provenance.value,
    }


def cmd_singular_ideals(args) -> tuple[dict, int]:
    f = _field(args)
    found = ideals.enumerate_singular_ideals(f, args.heads)
    return {
        "field": str(f),
        "heads": args.heads,
        "count": len(found),
        "ideals": [_ideal_doc(d) for d in found],
        "fullSingular": _ideal_doc(ideals.full_singular_ideal(f, args.heads)),
    }, EXIT_OK


def _element_doc(x) -> dict:
    return {
        "normalForm": print_element(x),
        "headValues": [str(a) for a in x.heads],
        "germ": str(sum(x.heads, x.field.zero)),
        "singular": ideals.is_singular(x),
    }


def cmd_normalize(args) -> tuple[dict, int]:
    f = _field(args)
    x = _element(f, args.heads, args.expr)
    return {"field": str(f), "heads": args.heads, **_element_doc(x)}, EXIT_OK


def cmd_conv(args) -> tuple[dict, int]:
    f = _field(args)
    x = convolve(_element(f, args.heads, args.lhs), _element(f, args.heads, args.rhs))
    return {"field": str(f), "heads": args.heads, **_element_doc(x)}, EXIT_OK


def cmd_is_singular(args) -> tuple[dict, int]:
    f = _field(args)
    x = _element(f, args.heads, args.expr)
    return {"field": str(f), "heads": args.heads, "singular": ideals.is_singular(x), "normalForm": print_element(x)}, EXIT_OK


def cmd_classify_singular(args) -> tuple[dict, int]:
    f = _field(args)
    x = _element(f, args.heads, args.expr)
    c = ideals.classify_singular(x)
    return {
        "field": str(f),
        "family": c.family.value,
        "k": str(c.k),
        "b": None if c.b is None else str(c.b),
        "delta": None if c.b is None else str(ideals.delta(c.b)),
    }, EXIT_OK


def cmd_ideal_member(args) -> tuple[dict, int]:
    f = _field(args)
    gen = _element(f, args.heads, args.generator)
    cand = _element(f, args.heads, args.candidate)
    witness = ideals.ideal_membership(cand, gen)
    return {
        "field": str(f),
        "heads": args.heads,
        "generator": format_heads(gen.heads),
        "candidate": format_heads(cand.heads),
        "member": witness is not None,
        "witness": None if witness is None else format_heads(witness),
    }, EXIT_OK


def cmd_oracle(args) -> tuple[dict, int]:
    f = _field(args)
    report = oracle.cross_check(f, args.heads)
    doc = {
        "field": str(f),
        "heads": args.heads,
        "exploratory": report.exploratory,
        "idealCount": report.ideal_count,
        "properIdealCount": report.proper_count,
        "properIdeals": [
            [format_heads(v) for v in ideal.vectors()] if args.list_members else len(ideal)
            for ideal in report.proper_ideals
        ],
        "checks": [{"name": c.name, "result": "PASS" if c.passed else "FAIL", "detail": c.detail} for c in report.checks],
        "result": "PASS" if report.passed else "FAIL",
    }
    return doc, EXIT_OK if report.passed else EXIT_ORACLE_FAIL


def cmd_classify_prime(args) -> tuple[dict, int]:
    roots = numtheory.phi3_roots_mod_p(args.p)
    return {"p": args.p, "class": numtheory.classify_prime(args.p).value, "phi3Roots": roots}, EXIT_OK


def cmd_phi3_roots(args) -> tuple[dict, int]:
    return {"p": args.p, "roots": numtheory.phi3_roots_mod_p(args.p)}, EXIT_OK


def cmd_factor_lemma(args) -> tuple[dict, int]:
    if args.b_max < 1:
        raise UsageError("--b-max must be at least 1")
    reports = [numtheory.factor_lemma_check(b) for b in range(1, args.b_max + 1)]
    failures = [r.b for r in reports if not r.all_congruent]
    return {
        "bMax": args.b_max,
        "checked": len(reports),
        "allCongruent": not failures,
        "failures": failures,
        "sample": [
            {"b": r.b, "value": r.value, "factors": [[q, k] for q, k in r.factors]} for r in reports[:5]
        ],
    }, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default=argparse.SUPPRESS)

    def heads_arg(p, choices=(2, 3)):
        p.add_argument("--heads", type=int, required=True, choices=choices)

    parser = _Parser(prog="snakealg", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: str, fn: Callable, help: str, field=True):
        p = sub.add_parser(name, help=help, parents=[common])
        if field:
            p.add_argument("--field", required=True)
        p.set_defaults(func=fn)
        return p

    verb("classify-field", cmd_classify_field, "field kind, characteristic and roots of T^2+T+1")
    heads_arg(verb("s-simple", cmd_s_simple, "decide S-simplicity"))
    heads_arg(verb("singular-ideals", cmd_singular_ideals, "list the singular ideals"))
    p = verb("normalize", cmd_normalize, "print an element in normal form")
    heads_arg(p)
    p.add_argument("--expr", required=True)
    p = verb("conv", cmd_conv, "convolve two elements")
    heads_arg(p)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p = verb("is-singular", cmd_is_singular, "test whether an element is singular")
    heads_arg(p)
    p.add_argument("--expr", required=True)
    p = verb("classify-singular", cmd_classify_singular, "classify a singular element (3 heads)")
    heads_arg(p, choices=(3,))
    p.add_argument("--expr", required=True)
    p = verb("ideal-member", cmd_ideal_member, "decide membership in a principal singular ideal")
    heads_arg(p)
    p.add_argument("--generator", required=True)
    p.add_argument("--candidate", required=True)
    p = verb("oracle", cmd_oracle, "brute-force ideal enumeration over a finite field")
    heads_arg(p, choices=tuple(oracle.ORACLE_HEADS))
    p.add_argument("--list-members", action="store_true", help="print every member of each proper ideal")

    nt = sub.add_parser("numtheory", help="number theory of T^2+T+1 modulo primes", parents=[common])
    ntsub = nt.add_subparsers(dest="nt_verb", required=True, parser_class=_Parser)
    q = ntsub.add_parser("classify-prime", parents=[common])
    q.add_argument("--p", type=int, required=True)
    q.set_defaults(func=cmd_classify_prime)
    q = ntsub.add_parser("phi3-roots", parents=[common])
    q.add_argument("--p", type=int, required=True)
    q.set_defaults(func=cmd_phi3_roots)
    q = ntsub.add_parser("factor-lemma", parents=[common])
    q.add_argument("--b-max", type=int, required=True)
    q.set_defaults(func=cmd_factor_lemma)
    return parser


def render_text(doc: dict, indent: str = "") -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(render_text(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                block = render_text(item, indent + "    ").splitlines()
                block[0] = f"{indent}  - {block[0].lstrip()}"
                lines.extend(block)
        elif isinstance(value, list):
            lines.append(f"{indent}{key}: {', '.join(map(str, value)) if value else '(none)'}")
        elif isinstance(value, bool):
            lines.append(f"{indent}{key}: {'yes' if value else 'no'}")
        else:
            lines.append(f"{indent}{key}: {'-' if value is None else value}")
    return "\n".join(lines)


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    fmt = getattr(args, "format", "text")
    try:
        doc, code = args.func(args)
    except (InputError, UsageError) as exc:
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_USAGE
    except SnakeError as exc:
        doc, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_DOMAIN
    if fmt == "machine":
        print(json.dumps(doc), file=out)
    else:
        print(render_text(doc), file=out if code in (EXIT_OK, EXIT_ORACLE_FAIL) else sys.stderr)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
