"""linkctl: classify linkage moduli spaces and export their models.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import export, topology
from .cwcomplex import ArityMismatch, build_complex
from .geometry import NotAClosedSurface, NotACycle, perform_surgery
from .linkage import DEFAULT_EPSILON, LinkageError, make_linkage
from .partitions import PartitionError

LENGTHS_HELP = "comma-separated rational lengths, e.g. 1,1,1,1/100,2 (eps = epsilon)"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkctl",
        description="moduli spaces of planar polygonal linkages: "
        "cell complexes, polyhedral models, surface types",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify", help="surface type of the moduli space")
    classify.add_argument("lengths", help=LENGTHS_HELP)
    classify.add_argument("--format", choices=["text", "json"], default="text")
    classify.add_argument("-o", "--output", default=None, help="write to file instead of stdout")
    classify.add_argument("--epsilon", default=None, help="value for eps tokens (default 1/100)")

    complex_ = sub.add_parser("complex", help="export the cell complex as JSON")
    complex_.add_argument("lengths", help=LENGTHS_HELP)
    complex_.add_argument("--format", choices=["json"], default="json")
    complex_.add_argument("-o", "--output", default=None)
    complex_.add_argument("--epsilon", default=None)

    mesh = sub.add_parser("mesh", help="export the polyhedral model (pentagons only)")
    mesh.add_argument("lengths", help=LENGTHS_HELP)
    mesh.add_argument("--format", choices=["obj", "ply"], default="obj")
    mesh.add_argument("--triangulate", action="store_true", help="fan-triangulate faces")
    mesh.add_argument("-o", "--output", default=None)
    mesh.add_argument("--epsilon", default=None)

    sub.add_parser("tables", help="facet admissibility tables for the six standard pentagons")
    sub.add_parser("verify", help="check the six standard pentagons against their known types")
    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        export.write_output(text, output)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "tables":
            _emit(export.render_tables(), None)
            return 0
        if args.command == "verify":
            result = export.verify_all()
            _emit(result.render(), None)
            return 0 if result.ok else 1

        epsilon = (
            export.parse_rational(args.epsilon)
            if args.epsilon is not None
            else DEFAULT_EPSILON
        )
        linkage = make_linkage(export.parse_lengths(args.lengths, epsilon))
        if args.command == "classify":
            report = topology.classify_linkage(linkage)
            if args.format == "json":
                _emit(export.report_to_json(report, linkage), args.output)
            else:
                _emit(export.render_report(report, linkage), args.output)
            return 0
        if args.command == "complex":
            _emit(export.complex_to_json(build_complex(linkage)), args.output)
            return 0
        if args.command == "mesh":
            mesh = perform_surgery(linkage)
            _emit(export.export_mesh(mesh, args.format, args.triangulate), args.output)
            return 0
        raise AssertionError(f"unhandled command {args.command}")
    except (NotAClosedSurface, NotACycle, topology.NotClosed) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except (
        LinkageError,
        PartitionError,
        ArityMismatch,
        export.UnsupportedFormat,
        export.IoFailure,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
