"""Text rendering for the command line: human lines first, then stable key=value lines."""
from typing import Dict, List, Sequence

import pandas as pd

from services.verification import CertificateReport, VerifyReport


def format_fvector(f: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in f) + ")"


def key_values(pairs: Dict[str, object]) -> str:
    return "\n".join(f"{k}={v}" for k, v in pairs.items())


def render_build_summary(d: int, fvector: Sequence[int], formula_ok: bool, reference: str, seconds: float) -> str:
    human = f"Δ_{d}: f={format_fvector(fvector)} built in {seconds:.2f}s"
    return human + "\n" + key_values(
        {
            "dim": d,
            "f": format_fvector(fvector),
            "formula": "ok" if formula_ok else "mismatch",
            "reference": reference,
            "seconds": f"{seconds:.2f}",
        }
    )


def render_verify_report(report: VerifyReport, label: str = "") -> str:
    lines: List[str] = []
    title = f"{label}: " if label else ""
    lines.append(f"{title}dim {report.dim}, f={format_fvector(report.fvector)}, χ={report.euler}")
    for r in report.results:
        mark = "PASS" if r.ok else "FAIL"
        lines.append(f"  [{mark}] {r.name}: {r.value}")
        for failure in r.failures:
            lines.append(f"         {failure}")
    lines.append("  (balls and spheres are certified up to homology, not PL type)")

    summary: Dict[str, object] = {
        "dim": report.dim,
        "f": format_fvector(report.fvector),
        "euler": report.euler,
    }
    for r in report.results:
        summary[r.name] = r.value if r.ok else f"fail:{r.value}"
    summary["reference"] = report.reference
    summary["status"] = "pass" if report.ok else "fail"
    return "\n".join(lines) + "\n" + key_values(summary)


def render_certificate_reports(reports: Sequence[CertificateReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"level {r.level}: " + ("ok" if r.ok else "FAILED " + ", ".join(r.failures)))
    passed = sum(1 for r in reports if r.ok)
    status = "pass" if passed == len(reports) else "fail"
    return "\n".join(lines) + "\n" + key_values({"cert": f"{passed}/{len(reports)}", "status": status})


def comparison_line(row: Dict[str, object]) -> str:
    bound = f"bound={row['bound']}"
    if not row.get("bound_in_range", True):
        bound += "(out of stated range d>=3)"
    return f"d={row['d']}  {bound}  ours={row['ours']}  kuhnel={row['kuhnel']}"


def render_comparison(frame: pd.DataFrame) -> str:
    lines = [comparison_line({"d": d, **row}) for d, row in frame.to_dict(orient="index").items()]
    return "\n".join(lines) + "\n\n" + frame.to_string()
