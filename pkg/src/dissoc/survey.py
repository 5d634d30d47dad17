"""Exhaustive verification of the bounds over all subcubic trees up to a given order.

A survey directory holds three files:

``survey.csv``
    one row per isomorphism class, ordered by (n, canonical code)
``extremal.json``
    one record per (n, psi) cell: the best count seen versus the sharp bound
``summary.json``
    the scoreboard (checks run / passed) and the equality-case comparison

Nothing time- or host-dependent is written, so reruns are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .bounds import phi_bound_checks
from .engine import lemma31_check, psi_phi
from .families import build_extremal, chain_closure
from .tree import Tree, canonical_code
from .treegen import DEFAULT_CEILING, GeneratorCeilingError, class_codes, tree_from_code

__all__ = [
    "report_passed",
    "SurveyRow",
    "ExtremalRecord",
    "SurveySummary",
    "SurveyFileError",
    "CSV_COLUMNS",
    "analyze_tree",
    "run_survey",
    "load_survey",
    "write_report",
]

log = logging.getLogger(__name__)

CSV_COLUMNS = (
    "n", "psi", "phi", "code",
    "lower_ok", "upper_ok", "thm32_ok", "cor_n_ok", "cor_psi_ok",
    "sharp_ok", "sharp_attained", "lemma31_ok",
)
CHECKS = ("lower", "upper", "thm32", "cor_n", "cor_psi", "sharp", "lemma31")

SURVEY_CSV = "survey.csv"
EXTREMAL_JSON = "extremal.json"
SUMMARY_JSON = "summary.json"


class SurveyFileError(RuntimeError):
    """A survey directory is missing files or holds unreadable ones."""


@dataclass(frozen=True)
class SurveyRow:
    n: int
    psi: int
    phi: int
    code: str
    lower_ok: bool
    upper_ok: bool
    thm32_ok: bool
    cor_n_ok: bool
    cor_psi_ok: bool
    sharp_ok: bool
    sharp_attained: bool
    lemma31_ok: bool
    lemma31_checked: int = field(default=0, compare=False)

    @property
    def ok(self) -> bool:
        return all(getattr(self, f"{c}_ok") for c in CHECKS)

    def csv_values(self) -> list[str]:
        out = []
        for col in CSV_COLUMNS:
            v = getattr(self, col)
            out.append(("true" if v else "false") if isinstance(v, bool) else str(v))
        return out


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    psi: int
    max_phi: int
    bound: int | None
    attained: bool
    attaining_codes: list[str]
    construction_match: bool

    def to_json(self) -> dict:
        d = asdict(self)
        d["max_phi"] = str(self.max_phi)
        d["bound"] = None if self.bound is None else str(self.bound)
        return d


@dataclass
class SurveySummary:
    max_n: int
    rows: int
    failures: int
    attainment_gaps: int
    equality_failures: int
    scoreboard: dict[str, dict[str, int]]
    equality: list[dict]

    @property
    def passed(self) -> bool:
        return not (self.failures or self.attainment_gaps or self.equality_failures)


def analyze_tree(t: Tree, code: bytes | None = None) -> SurveyRow:
    if code is None:
        code = canonical_code(t)
    psi, phi = psi_phi(t)
    rep = phi_bound_checks(t.n, psi, phi)
    checked, lemma_ok = lemma31_check(t)
    return SurveyRow(
        n=t.n,
        psi=psi,
        phi=phi,
        code=code.decode("ascii"),
        lower_ok=rep.lower_ok,
        upper_ok=rep.upper_ok,
        thm32_ok=rep.thm32_ok,
        cor_n_ok=rep.cor_n_ok,
        cor_psi_ok=rep.cor_psi_ok,
        sharp_ok=rep.sharp_ok,
        sharp_attained=rep.sharp_attained,
        lemma31_ok=lemma_ok,
        lemma31_checked=checked,
    )


def _analyze_code(code: bytes) -> SurveyRow:
    return analyze_tree(tree_from_code(code), code)


def _extremal_records(rows: list[SurveyRow]) -> list[ExtremalRecord]:
    cells: dict[tuple[int, int], list[SurveyRow]] = defaultdict(list)
    for r in rows:
        cells[(r.n, r.psi)].append(r)
    out = []
    for (n, psi), cell in sorted(cells.items()):
        max_phi = max(r.phi for r in cell)
        attaining = sorted(r.code for r in cell if r.phi == max_phi)
        bound = None
        built: set[str] = set()
        try:
            variants = build_extremal(n, psi)
        except ValueError:
            variants = []
        else:
            bound = variants[0][1].phi
            built = {canonical_code(t).decode("ascii") for t, _ in variants}
        out.append(
            ExtremalRecord(
                n=n,
                psi=psi,
                max_phi=max_phi,
                bound=bound,
                attained=bound is not None and max_phi == bound,
                attaining_codes=attaining,
                construction_match=bool(built & set(attaining)),
            )
        )
    return out


def _equality_cases(rows: list[SurveyRow], max_n: int) -> list[dict]:
    out = []
    for n in range(2, max_n + 1, 5):
        top = (4 * n + 2) // 5
        found = sorted(r.code for r in rows if r.n == n and r.psi == top)
        chain = sorted(c.decode("ascii") for c in chain_closure("K2", (n - 2) // 5))
        out.append({
            "n": n,
            "psi": top,
            "classes": found,
            "chain_classes": chain,
            "all_phi_one": all(r.phi == 1 for r in rows if r.n == n and r.psi == top),
            "match": found == chain,
        })
    return out


def _rows_csv(rows: list[SurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow(r.csv_values())
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def run_survey(max_n: int, out_path: str | Path, jobs: int = 1, ceiling: int = DEFAULT_CEILING) -> SurveySummary:
    """Check every bound on every subcubic tree of order 1..max_n and write the survey files."""
    if not 1 <= max_n <= ceiling:
        raise GeneratorCeilingError(f"max_n={max_n} outside 1..{ceiling}")
    codes = [c for n in range(1, max_n + 1) for c in class_codes(n, 3)]
    log.info("surveying %d classes up to n=%d", len(codes), max_n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_analyze_code, codes, chunksize=64))
    else:
        rows = [_analyze_code(c) for c in codes]
    # (n, code) order regardless of how the work was scheduled
    rows.sort(key=lambda r: (r.n, r.code))

    records = _extremal_records(rows)
    equality = _equality_cases(rows, max_n)
    scoreboard = {c: {"run": 0, "passed": 0} for c in CHECKS}
    for r in rows:
        for c in CHECKS:
            if c == "lemma31":
                continue
            scoreboard[c]["run"] += 1
            scoreboard[c]["passed"] += getattr(r, f"{c}_ok")
    scoreboard["lemma31"] = {
        "run": sum(r.lemma31_checked for r in rows),
        "passed": sum(r.lemma31_checked for r in rows if r.lemma31_ok),
    }
    scoreboard["attainment"] = {"run": len(records), "passed": sum(rec.attained for rec in records)}
    scoreboard["construction"] = {"run": len(records), "passed": sum(rec.construction_match for rec in records)}
    scoreboard["equality"] = {"run": len(equality), "passed": sum(e["match"] and e["all_phi_one"] for e in equality)}

    summary = SurveySummary(
        max_n=max_n,
        rows=len(rows),
        failures=sum(not r.ok for r in rows),
        attainment_gaps=sum(not (rec.attained and rec.construction_match) for rec in records),
        equality_failures=scoreboard["equality"]["run"] - scoreboard["equality"]["passed"],
        scoreboard=scoreboard,
        equality=equality,
    )
    out = Path(out_path)
    out.mkdir(parents=True, exist_ok=True)
    (out / SURVEY_CSV).write_text(_rows_csv(rows))
    (out / EXTREMAL_JSON).write_text(_dump([rec.to_json() for rec in records]))
    (out / SUMMARY_JSON).write_text(_dump(asdict(summary)))
    for r in rows:
        if not r.ok:
            bad = [c for c in CHECKS if not getattr(r, f"{c}_ok")]
            log.warning("n=%d psi=%d phi=%d code=%s violates %s", r.n, r.psi, r.phi, r.code, ",".join(bad))
    return summary


def load_survey(directory: str | Path) -> tuple[list[dict], list[dict], dict]:
    d = Path(directory)
    missing = [name for name in (SURVEY_CSV, EXTREMAL_JSON, SUMMARY_JSON) if not (d / name).is_file()]
    if missing:
        raise SurveyFileError(f"{d}: missing survey file(s): {', '.join(missing)}")
    try:
        with open(d / SURVEY_CSV, newline="") as fh:
            reader = csv.DictReader(fh)
            if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
                raise SurveyFileError(f"{d / SURVEY_CSV}: unexpected columns {reader.fieldnames}")
            rows = list(reader)
        records = json.loads((d / EXTREMAL_JSON).read_text())
        summary = json.loads((d / SUMMARY_JSON).read_text())
    except (OSError, json.JSONDecodeError, csv.Error) as exc:
        raise SurveyFileError(f"{d}: corrupt survey files ({exc})") from exc
    if not isinstance(records, list) or not isinstance(summary, dict) or "scoreboard" not in summary:
        raise SurveyFileError(f"{d}: corrupt survey files")
    return rows, records, summary


def write_report(directory: str | Path) -> str:
    """Human-readable per-cell table plus the theorem scoreboard."""
    rows, records, summary = load_survey(directory)
    classes: dict[tuple[int, int], int] = defaultdict(int)
    for r in rows:
        classes[(int(r["n"]), int(r["psi"]))] += 1

    def yn(b: bool) -> str:
        return "yes" if b else "NO"

    lines = [f"{'n':>3} {'psi':>4} {'classes':>8} {'max_phi':>10} {'bound':>10}  attained  construction"]
    for rec in records:
        lines.append(
            f"{rec['n']:>3} {rec['psi']:>4} {classes[(rec['n'], rec['psi'])]:>8} {rec['max_phi']:>10} "
            f"{rec['bound'] if rec['bound'] is not None else '-':>10}  {yn(rec['attained']):>8}  {yn(rec['construction_match']):>12}"
        )
    lines.append("")
    lines.append(f"scoreboard (max_n={summary['max_n']}, {summary['rows']} classes)")
    for name, sc in summary["scoreboard"].items():
        status = "ok" if sc["run"] == sc["passed"] else f"{sc['run'] - sc['passed']} FAILED"
        lines.append(f"  {name:<13} {sc['passed']:>6}/{sc['run']:<6} {status}")
    lines.append(
        f"violating rows: {summary['failures']}  attainment gaps: {summary['attainment_gaps']}  "
        f"equality mismatches: {summary['equality_failures']}"
    )
    return "\n".join(lines) + "\n"


def report_passed(directory: str | Path) -> bool:
    _, _, summary = load_survey(directory)
    return not (summary["failures"] or summary["attainment_gaps"] or summary["equality_failures"])
