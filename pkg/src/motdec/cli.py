"""Command-line front end: ``motdec <command> descriptor.json [options]``.

Exit codes: 0 success, 1 invalid descriptor, 2 unsupported family or
resource cap, 3 failed verification or comparison.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import decomposition, lefschetz
from .decomposition import format_index, index_to_json, product_action, product_index_set
from .descriptor import load_descriptor
from .realization import compare, operators
from .realization.algebras import ConstructionError, build_realization
from .weights import DescriptorError, ResourceLimitError, UnsupportedFamilyError

EXIT_OK, EXIT_DESCRIPTOR, EXIT_UNSUPPORTED, EXIT_VERIFY = 0, 1, 2, 3


class VerificationFailure(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_decompose(args) -> None:
    desc = load_descriptor(args.descriptor)
    report = decomposition.decompose(desc, conjugate=args.conjugate)
    _emit(decomposition.json_report(report) if args.format == "json" else decomposition.markdown_report(report))


def cmd_lefschetz(args) -> None:
    report = lefschetz.lefschetz_report(load_descriptor(args.descriptor))
    _emit(lefschetz.json_report(report) if args.format == "json" else lefschetz.markdown_report(report))


def cmd_beauville(args) -> None:
    desc = load_descriptor(args.descriptor)
    table = decomposition.beauville_table(desc, args.codim, include_negative=args.all)
    j = args.codim
    if args.format == "json":
        payload = {
            "codim": j,
            "rows": [
                {"s": s, "degree": 2 * j - s, "classes": [index_to_json(xi) for xi in xis]}
                for s, xis in table.items()
            ],
        }
        _emit(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
        return
    lines = [f"# Beauville grading, codimension {j}", "", "| s | degree | summands |", "|---|---|---|"]
    for s, xis in table.items():
        body = " ⊕ ".join(f"R^{format_index(xi, desc)}" for xi in xis)
        lines.append(f"| {s} | {2 * j - s} | {body} |")
    _emit("\n".join(lines) + "\n")


def cmd_verify(args) -> None:
    report = operators.verify(build_realization(load_descriptor(args.descriptor)))
    _emit(operators.json_report(report) if args.format == "json" else operators.markdown_report(report))
    if not report.ok:
        raise VerificationFailure("relation verification failed")


def cmd_compare(args) -> None:
    result = compare.compare_predictions(load_descriptor(args.descriptor))
    _emit(compare.json_report(result) if args.format == "json" else compare.markdown_report(result))
    if not result.ok:
        raise VerificationFailure("; ".join(result.mismatches))


def cmd_product(args) -> None:
    try:
        dims = [int(x) for x in args.dims.split(",")]
        indices = product_index_set(dims)
    except ValueError as exc:
        raise DescriptorError(f"--dims: {exc}") from None
    if args.format == "json":
        payload = {"dims": dims, "count": len(indices),
                   "indices": [{"index": list(i), "action": product_action(i)} for i in indices]}
        _emit(json.dumps(payload, indent=2) + "\n")
        return
    lines = [f"# Product decomposition, dims {','.join(map(str, dims))}", "",
             "| index | total degree | [m] acts as |", "|---|---|---|"]
    lines += [f"| {i} | {sum(i)} | {product_action(i)} |" for i in indices]
    lines += ["", f"Total: {len(indices)} indices"]
    _emit("\n".join(lines) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="motdec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def with_descriptor(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("descriptor", help="descriptor JSON file")
        p.add_argument("--format", choices=("md", "json"), default="md")
        p.set_defaults(func=func)
        return p

    p = with_descriptor("decompose", cmd_decompose, "refined motivic decomposition")
    p.add_argument("--conjugate", action="store_true", help="complex-conjugate Fourier convention")
    with_descriptor("lefschetz", cmd_lefschetz, "generalized Lefschetz components")
    p = with_descriptor("beauville", cmd_beauville, "Beauville bigrading in one codimension")
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--all", action="store_true", help="keep rows with negative s")
    with_descriptor("verify-sp", cmd_verify, "check the operator relations exactly")
    with_descriptor("compare", cmd_compare, "cross-check character and combinatorial predictions")
    p = sub.add_parser("product", help="index set for a product of abelian schemes")
    p.add_argument("--dims", required=True, help="comma-separated relative dimensions")
    p.add_argument("--format", choices=("md", "json"), default="md")
    p.set_defaults(func=cmd_product)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DescriptorError as exc:
        print(f"motdec: invalid descriptor: {exc}", file=sys.stderr)
        return EXIT_DESCRIPTOR
    except (UnsupportedFamilyError, ResourceLimitError) as exc:
        print(f"motdec: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (VerificationFailure, ConstructionError, lefschetz.InternalConsistencyError) as exc:
        print(f"motdec: verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        print(f"motdec: {exc}", file=sys.stderr)
        return EXIT_DESCRIPTOR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
