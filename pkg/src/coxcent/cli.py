"""coxcent: batch CLI for involution certificates and brute-force verification.

Subcommands: reduce, involution-nf, centralizer, verify.  A system is chosen
with --type NAME (catalog grammar: A<n>, B<n>, D<n>, E6|E7|E8, F4, H3|H4,
I2(<m>), Atilde<n>) or --matrix FILE, a UTF-8 JSON document
{"rank": n, "m": [[...]]} with 0 encoding an infinite bond.  Generators are
1-based in all input and output.

Exactly one JSON document goes to standard output; diagnostics go to standard
error.  Identical inputs produce byte-identical output: every set is emitted
sorted (generator subsets ascending, element lists ShortLex) and the
algorithms take deterministic tie-breaks.  Exit status is 0 iff no check
failed and no error occurred.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import matrix_for_name
from .finite import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    centralizer,
    enumerate_group,
    involution_classes,
    normalizer,
    verify_centralizer_certificate,
    verify_centralizer_is_normalizer,
)
from .group import CoxeterContext, shortlex_key, word_from_string, word_to_string
from .involution import (
    involution_certificate,
    is_involution,
    is_minus_one_type,
    longest_element,
)

_SUITES = ("prop1", "prop2", "main", "classes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxcent",
        description="Involution certificates and centralizer verification in Coxeter groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_word, needs_suite in (
        ("reduce", True, False),
        ("involution-nf", True, False),
        ("centralizer", True, False),
        ("verify", False, True),
    ):
        p = sub.add_parser(name)
        system = p.add_mutually_exclusive_group(required=True)
        system.add_argument("--type", dest="type_name", metavar="NAME")
        system.add_argument("--matrix", dest="matrix_file", metavar="FILE")
        if needs_word:
            p.add_argument("--word", required=True, metavar="INDICES",
                           help="whitespace-separated 1-based generator indices")
        if needs_suite:
            p.add_argument("--suite", required=True, choices=_SUITES)
        p.add_argument("--max-order", type=int, default=DEFAULT_ENUMERATION_CAP,
                       metavar="N", help="enumeration cap (default %(default)s)")
        p.add_argument("--json", action="store_true",
                       help="compact single-line JSON instead of indented")
    return parser


def _load_system(args, parser) -> tuple[CoxeterContext, str | dict]:
    if args.type_name is not None:
        try:
            matrix = matrix_for_name(args.type_name)
        except ValueError as exc:
            parser.error(str(exc))
        return CoxeterContext(matrix), args.type_name
    try:
        with open(args.matrix_file, encoding="utf-8") as fh:
            doc = json.load(fh)
        rank, m = doc["rank"], doc["m"]
        if len(m) != rank:
            raise ValueError(f"matrix has {len(m)} rows, declared rank {rank}")
        ctx = CoxeterContext(m)
    except (OSError, KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        parser.error(f"bad matrix file {args.matrix_file}: {exc}")
    return ctx, {"rank": rank, "m": [list(row) for row in ctx.matrix]}


def _parse_word(ctx, text, parser):
    try:
        word = word_from_string(text)
    except ValueError as exc:
        parser.error(str(exc))
    for s in word:
        if s >= ctx.rank:
            parser.error(f"bad generator index {s + 1!r}: rank is {ctx.rank}")
    return word


def _subset_out(subset) -> list[int]:
    return sorted(s + 1 for s in subset)


def _certificate_doc(cert) -> dict:
    return {
        "I": _subset_out(cert.subset),
        "u": word_to_string(cert.conjugator.word),
        "steps": [s + 1 for s in cert.steps],
    }


def _emit(doc, compact: bool) -> None:
    if compact:
        print(json.dumps(doc, separators=(",", ":")))
    else:
        print(json.dumps(doc, indent=2))


def cmd_reduce(ctx, system, word) -> tuple[dict, int]:
    el = ctx.element(word)
    doc = {
        "system": system,
        "input": word_to_string(word),
        "normal_form": word_to_string(el.word),
        "length": el.length,
        "right_descents": _subset_out(el.right_descents()),
        "left_descents": _subset_out(el.left_descents()),
    }
    return doc, 0


def cmd_involution_nf(ctx, system, word) -> tuple[dict, int]:
    el = ctx.element(word)
    if not is_involution(el):
        square = el * el
        return {
            "system": system,
            "error": "not an involution",
            "square_normal_form": word_to_string(square.word),
        }, 1
    cert = involution_certificate(el)
    u = cert.conjugator
    rho = longest_element(ctx, cert.subset)
    checks = {
        "minus_one_type": is_minus_one_type(ctx, cert.subset),
        "conjugation_exact": u * el * u.inverse() == rho,
    }
    doc = {
        "system": system,
        "w": word_to_string(el.word),
        "I": _subset_out(cert.subset),
        "u": word_to_string(u.word),
        "rho_I_word": word_to_string(rho.word),
        "steps": [s + 1 for s in cert.steps],
        "checks": checks,
    }
    return doc, 0 if all(checks.values()) else 1


def cmd_centralizer(ctx, system, word, cap) -> tuple[dict, int]:
    el = ctx.element(word)
    if not is_involution(el):
        square = el * el
        return {
            "system": system,
            "error": "not an involution",
            "square_normal_form": word_to_string(square.word),
        }, 1
    cert = involution_certificate(el)
    if not cert.verify(el):
        return {"system": system, "error": "certificate failed re-verification"}, 1
    try:
        group = enumerate_group(ctx, cap=cap)
    except EnumerationCapExceeded as exc:
        doc = {
            "system": system,
            "certificate": _certificate_doc(cert),
            "error": (
                f"enumeration cap of {exc.cap} exceeded; for infinite or large groups "
                "only the certificate (I, u) is available"
            ),
        }
        return doc, 1
    norm = normalizer(cert.subset, group)
    u = cert.conjugator
    u_inv = u.inverse()
    conjugated = sorted((u_inv * g * u for g in norm), key=shortlex_key)
    brute = centralizer(el, group)
    match = {e.word for e in conjugated} == brute.words()
    doc = {
        "system": system,
        "certificate": _certificate_doc(cert),
        "centralizer_order": len(conjugated),
        "centralizer_elements": [word_to_string(e.word) for e in conjugated],
        "via": "conjugated-normalizer",
        "brute_force_match": match,
    }
    return doc, 0 if match else 1


def _suite_prop1(ctx, group):
    failures = []
    involutions = [el for el in group if (el * el).is_identity]
    for el in involutions:
        cert = involution_certificate(el)
        if not cert.verify(el):
            failures.append({"instance": word_to_string(el.word),
                             "reason": "certificate failed verification"})
    return len(involutions), failures

def _suite_prop2(ctx, group):
    failures = []
    subsets = []
    n = ctx.rank
    for mask in range(1 << n):
        subset = frozenset(s for s in range(n) if mask >> s & 1)
        if is_minus_one_type(ctx, subset):
            subsets.append(subset)
    for subset in sorted(subsets, key=lambda x: (len(x), sorted(x))):
        if not verify_centralizer_is_normalizer(subset, group):
            failures.append({"instance": _subset_out(subset),
                             "reason": "centralizer of longest element != normalizer"})
    return len(subsets), failures

def _suite_main(ctx, group):
    failures = []
    involutions = [el for el in group if (el * el).is_identity]
    for el in involutions:
        if not verify_centralizer_certificate(el, group):
            failures.append({"instance": word_to_string(el.word),
                             "reason": "centralizer != conjugated normalizer"})
    return len(involutions), failures

def _suite_classes(ctx, group):
    failures = []
    classes = involution_classes(group)
    seen = set()
    for members, cert in classes:
        words = members.words()
        if words & seen:
            failures.append({"instance": word_to_string(members.elements[0].word),
                             "reason": "classes overlap"})
        seen |= words
        rho = longest_element(ctx, cert.subset)
        if rho not in members:
            failures.append({"instance": word_to_string(members.elements[0].word),
                             "reason": "class misses its certificate's longest element"})
    total_involutions = sum(1 for el in group if (el * el).is_identity)
    if sum(len(c) for c, _ in classes) != total_involutions:
        failures.append({"instance": "partition", "reason": "classes do not cover all involutions"})
    return len(classes), failures


def cmd_verify(ctx, system, suite, cap) -> tuple[dict, int]:
    try:
        group = enumerate_group(ctx, cap=cap)
    except EnumerationCapExceeded as exc:
        return {"system": system, "suite": suite,
                "error": f"enumeration cap of {exc.cap} exceeded"}, 1
    runner = {
        "prop1": _suite_prop1,
        "prop2": _suite_prop2,
        "main": _suite_main,
        "classes": _suite_classes,
    }[suite]
    checked, failures = runner(ctx, group)
    doc = {
        "system": system,
        "suite": suite,
        "instances_checked": checked,
        "failures": failures,
    }
    return doc, 0 if not failures else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    ctx, system = _load_system(args, parser)
    try:
        if args.command == "reduce":
            doc, code = cmd_reduce(ctx, system, _parse_word(ctx, args.word, parser))
        elif args.command == "involution-nf":
            doc, code = cmd_involution_nf(ctx, system, _parse_word(ctx, args.word, parser))
        elif args.command == "centralizer":
            doc, code = cmd_centralizer(
                ctx, system, _parse_word(ctx, args.word, parser), args.max_order
            )
        else:
            doc, code = cmd_verify(ctx, system, args.suite, args.max_order)
    except (ValueError, ArithmeticError) as exc:
        print(f"coxcent: {exc}", file=sys.stderr)
        return 1
    _emit(doc, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
