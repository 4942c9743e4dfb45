import argparse
import logging
import sys
import time
from typing import List, Optional

from config import FLAGS
from services.bounds import comparison_frame, rpd_f0
from services.kuhnel import kuhnel_rpd
from services.logging import configure, log_run
from services.reference import check_fvector_table
from services.tower import build
from services.verification import run_checks, verify_certificate
from topology.complex import f_vector
from topology.errors import ComplexFileError, TopologyError
from topology.symmetry import quotient_rp
from ui.components import (
    format_fvector,
    render_build_summary,
    render_certificate_reports,
    render_comparison,
    render_verify_report,
)
from utils.parsing import read_any, read_tower, write_complex, write_tower

logger = logging.getLogger("app")


def cmd_build(args: argparse.Namespace) -> int:
    d = args.dim
    if not 0 <= d <= FLAGS.MAX_BUILD_DIM:
        logger.error("--dim must be between 0 and %d (MAX_BUILD_DIM)", FLAGS.MAX_BUILD_DIM)
        return 2
    started = time.perf_counter()
    tower = build(d, match_reference=FLAGS.MATCH_REFERENCE and not args.label_order)
    rpd = quotient_rp(tower.top)
    seconds = time.perf_counter() - started

    write_complex(args.out, rpd)
    if args.tower:
        write_tower(args.tower, tower)
    fv = f_vector(rpd)
    formula_ok = fv[0] == rpd_f0(d)
    reference = check_fvector_table(fv, d)
    print(render_build_summary(d, fv, formula_ok, reference, seconds))
    log_run("build", {"dim": d, "f": format_fvector(fv), "formula": formula_ok, "reference": reference})
    return 0 if formula_ok and reference != "mismatch" else 1


def cmd_verify(args: argparse.Namespace) -> int:
    parsed, tower = read_any(args.path)
    checks = args.checks.split(",") if args.checks else None
    report = run_checks(parsed.complex, checks, antipodal=parsed.antipodal, zmax=args.zmax, tower=tower)
    print(render_verify_report(report, label=args.path))
    log_run("verify", {"path": args.path, "status": "pass" if report.ok else "fail"})
    return 0 if report.ok else 1


def cmd_kuhnel(args: argparse.Namespace) -> int:
    rpd = kuhnel_rpd(args.dim)
    write_complex(args.out, rpd)
    fv = f_vector(rpd)
    print(f"Kühnel RP^{args.dim}: f={format_fvector(fv)}\ndim={args.dim}\nf={format_fvector(fv)}")
    log_run("kuhnel", {"dim": args.dim, "f": format_fvector(fv)})
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    upto = args.upto if args.upto is not None else args.dim
    if args.dim < 1 or upto < args.dim:
        logger.error("need 1 <= --dim <= --upto")
        return 2
    frame = comparison_frame(range(args.dim, upto + 1))
    print(render_comparison(frame))
    log_run("compare", {"dims": [args.dim, upto]})
    return 0


def cmd_tower(args: argparse.Namespace) -> int:
    tower = read_tower(args.path)
    reports = verify_certificate(tower)
    print(render_certificate_reports(reports))
    ok = all(r.ok for r in reports)
    log_run("tower", {"path": args.path, "levels": len(reports), "status": "pass" if ok else "fail"})
    return 0 if ok else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="cs sphere towers and small triangulations of RP^d")
    parser.add_argument("--log-level", default=None, help="overrides LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build Δ_d and optionally its sphere tower")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--out", required=True, help="ComplexFile for Δ_d")
    p.add_argument("--tower", default=None, help="also write the TowerFile here")
    p.add_argument("--label-order", action="store_true", help="orient W by label order only, without matching the reference f-vectors")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="run the verification suite on a ComplexFile or TowerFile")
    p.add_argument("path")
    p.add_argument("--checks", default=None, help="comma list of cs,4cycle,pm,links,hz,hgf2,cert")
    p.add_argument("--zmax", type=int, default=None, help="integral homology cap, overrides ZHOMOLOGY_MAX_DIM")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("kuhnel", help="write Kühnel's RP^d")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_kuhnel)

    p = sub.add_parser("compare", help="vertex bounds against the construction and Kühnel's")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--upto", type=int, default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("tower", help="verify the certificates of a TowerFile")
    p.add_argument("path")
    p.set_defaults(func=cmd_tower)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    configure(args.log_level)
    try:
        return args.func(args)
    except ComplexFileError as e:
        logger.error("malformed input: %s", e)
        return 2
    except TopologyError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return 1
    except ValueError as e:
        logger.error("%s", e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
