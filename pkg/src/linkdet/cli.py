"""``linkdet``: determinants, FH polynomials and spectra of signed planar graphs.

Exit codes: 0 ok, 2 unreadable input, 3 unmet precondition (disconnected
graph, missing rotation or involution block), 4 size limit exceeded, 5 two
computations disagree or a symmetry verdict fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    DisconnectedGraphError,
    DocumentError,
    LimitExceededError,
    MapError,
    PreconditionError,
)
from .fh import DEFAULT_LIMIT, det_via_fh, fh_explicit, fh_recursive, spectrum
from .graph import matrix_tree_signed, require_connected, signed_tree_count
from .io import GraphDocument, document_involution, load_document, parse_signs
from .kauffman import STATE_LIMIT, bracket_at_primitive8
from .planemap import link_components
from .symmetry import (
    analyze_involution,
    check_even_component_determinant,
    check_parity_law,
    is_centrally_symmetric_presentation,
)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_LIMIT, EXIT_MISMATCH = 0, 2, 3, 4, 5
METHODS = ("trees", "matrix", "fh", "bracket")
# The explicit polynomial can have up to 2^n terms.
POLY_LIMIT = 20


class Mismatch(Exception):
    def __init__(self, message, payload):
        super().__init__(message)
        self.payload = payload


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print("\n".join(lines))


def _check_size(n: int, limit: int | None, what: str):
    limit = POLY_LIMIT if limit is None else limit
    if n > limit:
        raise LimitExceededError(f"{what} of a graph with {n} edges is over the limit of {limit} edges")


def _determinant(method: str, doc: GraphDocument, limit: int) -> int:
    g = doc.graph()
    if method == "trees":
        return abs(signed_tree_count(g))
    if method == "matrix":
        return abs(matrix_tree_signed(g))
    if method == "fh":
        _check_size(len(g.edges), limit, "the FH polynomial")
        return det_via_fh(g)
    return bracket_at_primitive8(g, limit=STATE_LIMIT if limit is None else limit).abs_int()


def cmd_det(args, doc: GraphDocument) -> int:
    methods = METHODS if args.method == "all" else (args.method,)
    dets = {m: _determinant(m, doc, args.limit) for m in methods}
    agree = len(set(dets.values())) == 1
    payload = {"name": doc.name, "n_edges": len(doc.edges), "determinants": dets, "agree": agree}
    lines = [f"{m}\t{v}" for m, v in dets.items()]
    if not agree:
        raise Mismatch("methods disagree: " + ", ".join(lines), payload)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_poly(args, doc: GraphDocument) -> int:
    g = doc.graph()
    require_connected(g)
    _check_size(len(g.edges), args.limit, "the FH polynomial")
    forms = ("explicit", "recursive") if args.form == "both" else (args.form,)
    polys = {f: (fh_explicit(g) if f == "explicit" else fh_recursive(g, memoize=True)) for f in forms}
    texts = {f: str(p) for f, p in polys.items()}
    payload = {"name": doc.name, "form": args.form, "text": texts[forms[0]],
               "polynomial": polys[forms[0]].to_json()}
    if len(set(texts.values())) != 1:
        payload["texts"] = texts
        raise Mismatch("explicit and recursive forms differ", payload)
    _emit(args, payload, [texts[forms[0]]])
    return EXIT_OK


def cmd_spectrum(args, doc: GraphDocument) -> int:
    g = doc.graph()
    bit = None if args.restrict_first_bit == "none" else int(args.restrict_first_bit)
    limit = DEFAULT_LIMIT if args.limit is None else args.limit
    report = spectrum(g, restrict_first_bit=bit, limit=limit, signed=args.signed)
    payload = {"name": doc.name, **report.to_json()}
    lines = ["value\tcount"] + [f"{v}\t{c}" for v, c in report.counts.items()]
    if args.figure:
        from .plotting import plot_spectrum

        title = f"{doc.name}: {report.note()}" if doc.name else report.note()
        payload["figure"] = str(plot_spectrum(report, args.figure, title=title))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_components(args, doc: GraphDocument) -> int:
    require_connected(doc.graph())
    k = link_components(doc.plane_map())
    _emit(args, {"name": doc.name, "components": k}, [str(k)])
    return EXIT_OK


def cmd_symmetry(args, doc: GraphDocument) -> int:
    g = doc.graph()
    require_connected(g)
    med = doc.medial()
    doc.involution_block()
    inv = document_involution(doc, med)
    report = analyze_involution(med, inv)
    symmetric = is_centrally_symmetric_presentation(med, inv)
    verdicts = []
    if report.is_antipodal:
        verdicts.append(check_parity_law(med, inv))
        if symmetric and report.component_count % 2 == 0:
            verdicts.append(check_even_component_determinant(g, med, inv))
    payload = {
        "name": doc.name,
        "report": report.to_json(),
        "centrally_symmetric": symmetric,
        "verdicts": [v.to_json() for v in verdicts],
    }
    lines = [f"{k}\t{v}" for k, v in report.to_json().items() if k not in ("fixed", "violations")]
    lines += [f"violation\t{v}" for v in report.violations]
    lines.append(f"centrally_symmetric\t{symmetric}")
    for v in verdicts:
        lines.append(f"verdict\t{v.name}\t{'pass' if v.passed else 'FAIL'}")
        if "determinants" in v.details:
            lines += [f"det\t{m}\t{d}" for m, d in v.details["determinants"].items()]
    if not verdicts:
        lines.append("verdict\tnone applicable")
    if not all(v.passed for v in verdicts):
        raise Mismatch("a symmetry verdict failed", payload)
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("source", metavar="FILE|builtin:NAME",
                        help="graph document path, '-' for stdin, or builtin:NAME")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--limit", type=int, default=None,
                        help=f"largest edge count for exponential computations (defaults: spectrum {DEFAULT_LIMIT}, "
                             f"polynomial {POLY_LIMIT}, bracket state sum {STATE_LIMIT})")
    common.add_argument("--signs", help="override edge signs: '+-++' or '1,-1,1,1' (use --signs=-+ for a leading minus)")

    p = argparse.ArgumentParser(prog="linkdet", description=__doc__.splitlines()[0].split(": ", 1)[1])
    sub = p.add_subparsers(dest="command", required=True)
    d = sub.add_parser("det", parents=[common], help="link determinant")
    d.add_argument("--method", choices=METHODS + ("all",), default="all")
    q = sub.add_parser("poly", parents=[common], help="FH polynomial in canonical form")
    q.add_argument("--form", choices=("explicit", "recursive", "both"), default="explicit")
    s = sub.add_parser("spectrum", parents=[common], help="determinant value counts over all signatures")
    s.add_argument("--restrict-first-bit", choices=("0", "1", "none"), default="none")
    s.add_argument("--signed", action="store_true", help="count signed FH values instead of magnitudes")
    s.add_argument("--figure", metavar="PATH", help="also save a bar chart of the spectrum")
    sub.add_parser("components", parents=[common], help="number of link components (needs rotation)")
    sub.add_parser("symmetry", parents=[common], help="check the involution block (needs rotation and involution)")
    return p


COMMANDS = {
    "det": cmd_det,
    "poly": cmd_poly,
    "spectrum": cmd_spectrum,
    "components": cmd_components,
    "symmetry": cmd_symmetry,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = load_document(args.source)
        if args.signs is not None:
            doc = doc.with_signs(parse_signs(args.signs, len(doc.edges)))
        doc.graph()
    except (DocumentError, ValueError) as exc:
        print(f"linkdet: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return COMMANDS[args.command](args, doc)
    except Mismatch as exc:
        if args.json:
            print(json.dumps(exc.payload))
        print(f"linkdet: mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except LimitExceededError as exc:
        print(f"linkdet: {exc}; rerun with --limit N to allow more", file=sys.stderr)
        return EXIT_LIMIT
    except (DisconnectedGraphError, PreconditionError) as exc:
        print(f"linkdet: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (DocumentError, MapError) as exc:
        print(f"linkdet: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
