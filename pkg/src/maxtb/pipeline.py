"""End-to-end certification of one diagram, and corpus reading."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .diagram import LinkDiagram, PDError, is_plus_adequate, mirror, parse_pd, predicted_tb, s_plus, writhe
from .front import FrontDiagram, front_of_diagram, front_to_pd, tb, validate_front
from .kauffman import DEFAULT_MAX_CROSSINGS, OracleLimitError, dubrovnik, kauffman_bound, max_a_coefficients
from .mondrian import IteratedMondrianDiagram, segment_violations
from .ruling import Ruling, verify_ruling

__all__ = ["CorpusRow", "PipelineReport", "read_corpus", "run_pipeline", "CERTIFIED", "FAILED", "INADEQUATE", "ERROR"]

CERTIFIED = "CERTIFIED"
FAILED = "FAILED"
INADEQUATE = "INADEQUATE"
ERROR = "ERROR"


@dataclass(frozen=True)
class CorpusRow:
    name: str
    pd: str
    mirror: bool = False
    expected_tb: Optional[int] = None
    error: Optional[str] = None

    def diagram(self) -> LinkDiagram:
        d = parse_pd(self.pd)
        return mirror(d) if self.mirror else d


def _truthy(v) -> bool:
    if isinstance(v, str):
        return v.strip().lower() in ("1", "true", "yes", "y")
    return bool(v)


def _row(data: dict, line: int) -> CorpusRow:
    name = str(data.get("name") or "row%d" % line)
    if "pd" not in data or not data["pd"]:
        return CorpusRow(name, "", error="row %d has no pd field" % line)
    exp = data.get("expected_tb")
    try:
        exp = int(exp) if exp not in (None, "") else None
    except (TypeError, ValueError):
        return CorpusRow(name, str(data["pd"]), error="row %d: expected_tb is not an integer" % line)
    return CorpusRow(name, str(data["pd"]), _truthy(data.get("mirror", False)), exp)


def read_corpus(path) -> list[CorpusRow]:
    """JSON lines ``{name, pd, mirror?, expected_tb?}`` or CSV with those columns.

    Rows that cannot be read come back with ``error`` set; the rest are unaffected.
    """
    text = Path(path).read_text() if not hasattr(path, "read") else path.read()
    rows = []
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    if first.startswith("{"):
        for n, line in enumerate(text.splitlines(), 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                rows.append(_row(json.loads(line), n))
            except json.JSONDecodeError as exc:
                rows.append(CorpusRow("row%d" % n, "", error="row %d: %s" % (n, exc.msg)))
        return rows
    reader = csv.DictReader(io.StringIO(text))
    for n, rec in enumerate(reader, 2):
        if rec.get(None):
            rows.append(CorpusRow(str(rec.get("name") or "row%d" % n), "",
                                  error="row %d has extra fields; quote the pd column" % n))
            continue
        rows.append(_row(rec, n))
    return rows


@dataclass
class PipelineReport:
    name: str
    status: str = ERROR
    adequate: Optional[bool] = None
    crossings: Optional[int] = None
    circles: Optional[int] = None
    writhe: Optional[int] = None
    tb: Optional[int] = None
    predicted_tb: Optional[int] = None
    kauffman_bound: Optional[int] = None
    top_coefficients_nonnegative: Optional[bool] = None
    expected_tb: Optional[int] = None
    ruling: Optional[dict] = None
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)
    front: Optional[FrontDiagram] = field(default=None, repr=False)
    mondrian: list = field(default_factory=list, repr=False)

    @property
    def ok(self) -> bool:
        return self.status == CERTIFIED

    def to_json(self, timing: bool = False) -> dict:
        out = {k: getattr(self, k) for k in (
            "name", "status", "adequate", "crossings", "circles", "writhe", "tb", "predicted_tb",
            "kauffman_bound", "top_coefficients_nonnegative", "expected_tb", "checks", "notes")}
        out["ruling_switches"] = len(self.ruling["switches"]) if self.ruling else None
        if timing:
            out["timing"] = {k: round(v, 4) for k, v in self.timing.items()}
        return out


def run_pipeline(d: LinkDiagram, name: str = "", oracle: bool = True, build: bool = True,
                 max_crossings: int = DEFAULT_MAX_CROSSINGS, expected_tb: Optional[int] = None) -> PipelineReport:
    """Construct the front, certify its ruling and compare tb with the Kauffman bound.

    The status is CERTIFIED only when every computed tb value agrees and
    every structural check passes.
    """
    rep = PipelineReport(name, expected_tb=expected_tb)
    clock = time.perf_counter
    t0 = clock()
    r = s_plus(d)
    rep.adequate = is_plus_adequate(r)
    rep.crossings = d.n
    rep.circles = r.num_circles
    rep.writhe = writhe(d)
    rep.predicted_tb = predicted_tb(d)
    rep.timing["state"] = clock() - t0
    poly = None
    if oracle:
        t0 = clock()
        try:
            poly = dubrovnik(d, max_crossings)
            rep.kauffman_bound = kauffman_bound(poly)
            rep.top_coefficients_nonnegative = all(c >= 0 for _, c in max_a_coefficients(poly))
        except OracleLimitError as exc:
            rep.notes.append("oracle skipped: %s" % exc)
        rep.timing["oracle"] = clock() - t0
    if not rep.adequate:
        rep.status = INADEQUATE
        rep.notes.append("diagram is not +adequate; no front constructed")
        return rep
    if build:
        t0 = clock()
        front, ims = front_of_diagram(d)
        rep.front, rep.mondrian = front, ims
        rep.timing["front"] = clock() - t0
        rep.tb = tb(front).tb
        t0 = clock()
        ruling = verify_ruling(front, range(front.num_crossings))
        rep.timing["ruling"] = clock() - t0
        rep.checks["ruling"] = bool(ruling)
        if isinstance(ruling, Ruling):
            rep.ruling = ruling.to_json()
            circles = sorted(e.circle for e in ruling.eyes)
            rep.checks["eyes_are_circles"] = len(circles) == rep.circles
        else:
            rep.notes.append("all-crossings switch set rejected: %s" % ruling.reason)
        rep.checks["front_valid"] = not validate_front(front)
        rep.checks["crossings_preserved"] = front.num_crossings == d.n
        rep.checks["mondrian_disjoint"] = all(not segment_violations(im.diagram) for im in ims)
        if poly is not None:
            rep.checks["front_isotopic"] = dubrovnik(front_to_pd(front), max_crossings) == poly
    values = [rep.predicted_tb] + [v for v in (rep.tb, rep.kauffman_bound, expected_tb) if v is not None]
    agree = len(set(values)) == 1
    rep.checks["tb_agree"] = agree
    if rep.top_coefficients_nonnegative is not None:
        rep.checks["top_coefficients_nonnegative"] = rep.top_coefficients_nonnegative
    rep.status = CERTIFIED if all(rep.checks.values()) else FAILED
    return rep
