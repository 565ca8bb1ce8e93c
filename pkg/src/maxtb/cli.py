"""Command line: ``maxtb check | build | oracle | render``.

Every subcommand reads a corpus (JSON lines or CSV with columns ``name``,
``pd``, ``mirror``, ``expected_tb``) or generates random positive braids
with ``--random N --seed S``, and prints one JSON object per row to stdout
in input order.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from . import __version__
from .diagram import PDError, diagram_json, is_plus_adequate, predicted_tb, s_plus
from .generators import braid_closure, random_positive_braid
from .kauffman import CACHE_ENV, DEFAULT_MAX_CROSSINGS, OracleLimitError, kauffman_report
from .pipeline import CERTIFIED, FAILED, INADEQUATE, CorpusRow, read_corpus, run_pipeline
from .render import render_front, render_mondrian, render_stages

__all__ = ["main", "build_parser"]


def _safe(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name) or "diagram"


def _random_corpus(n: int, seed: int) -> list[CorpusRow]:
    rng = random.Random(seed)
    rows = []
    for k in range(n):
        word, s = random_positive_braid(rng)
        d = braid_closure(word, s)
        rows.append(CorpusRow("braid%d_%s" % (k, ".".join(map(str, word))), d.to_pd()))
    return rows


def _check(row: CorpusRow, opts: dict) -> dict:
    d = row.diagram()
    r = s_plus(d)
    return {"name": row.name, "adequate": is_plus_adequate(r), "crossings": d.n,
            "circles": r.num_circles, "predicted_tb": predicted_tb(d)}, {}


def _oracle(row: CorpusRow, opts: dict):
    d = row.diagram()
    try:
        rep = kauffman_report(d, opts["max_crossings"])
    except OracleLimitError as exc:
        return {"name": row.name, "status": "SKIPPED", "notes": [str(exc)]}, {}
    out = {"name": row.name, "status": "OK", "kauffman_bound": rep.bound}
    out.update({k: v for k, v in rep.to_json().items() if k != "bound"})
    if row.expected_tb is not None and row.expected_tb != rep.bound:
        out["status"] = FAILED
    return out, {}


def _build(row: CorpusRow, opts: dict):
    d = row.diagram()
    rep = run_pipeline(d, row.name, oracle=opts["oracle"], max_crossings=opts["max_crossings"],
                       expected_tb=row.expected_tb)
    files = {}
    stem = _safe(row.name)
    if rep.front is not None:
        if opts.get("json"):
            files["%s.front.json" % stem] = json.dumps(rep.front.to_json(), sort_keys=True)
            if rep.ruling is not None:
                files["%s.ruling.json" % stem] = json.dumps(rep.ruling, sort_keys=True)
            if rep.mondrian:
                files["%s.mondrian.json" % stem] = json.dumps([m.to_json() for m in rep.mondrian], sort_keys=True)
        if opts.get("svg"):
            files["%s.svg" % stem] = _svg_for(rep)
    return rep.to_json(opts.get("timing", False)), files


def _svg_for(rep) -> str:
    if len(rep.mondrian) == 1:
        return render_stages(rep.mondrian[0], rep.front)
    return render_front(rep.front)


def _render(row: CorpusRow, opts: dict):
    d = row.diagram()
    rep = run_pipeline(d, row.name, oracle=False)
    stem = _safe(row.name)
    files = {}
    if rep.front is None:
        return {"name": row.name, "status": INADEQUATE, "notes": rep.notes}, files
    files["%s.front.svg" % stem] = render_front(rep.front)
    for k, m in enumerate(rep.mondrian):
        suffix = "" if len(rep.mondrian) == 1 else str(k)
        files["%s.mondrian%s.svg" % (stem, suffix)] = render_mondrian(m)
    files["%s.svg" % stem] = _svg_for(rep)
    return {"name": row.name, "status": "OK", "files": sorted(files)}, files


_COMMANDS = {"check": _check, "oracle": _oracle, "build": _build, "render": _render}


def _work(args):
    cmd, row, opts = args
    if row.error:
        return {"name": row.name, "status": "ERROR", "error": row.error}, {}
    try:
        return _COMMANDS[cmd](row, opts)
    except (PDError, ValueError) as exc:
        return {"name": row.name, "status": "ERROR", "error": str(exc)}, {}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxtb", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    helps = {
        "check": "adequacy and predicted tb per diagram",
        "build": "construct fronts, certify rulings, compare with the Kauffman bound",
        "oracle": "Dubrovnik polynomial and Kauffman bound per diagram",
        "render": "write SVG pictures of the construction",
    }
    for name, text in helps.items():
        s = sub.add_parser(name, help=text)
        s.add_argument("path", nargs="?", help="corpus file (JSON lines or CSV)")
        s.add_argument("--random", type=int, metavar="N", help="use N random positive braid closures instead")
        s.add_argument("--seed", type=int, default=0, help="seed for --random")
        s.add_argument("--jobs", type=int, default=1, help="worker processes")
        s.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS,
                       help="skip the polynomial above this many crossings (cache: $%s)" % CACHE_ENV)
        s.add_argument("--json", metavar="DIR", help="write per-diagram JSON artifacts here")
        s.add_argument("--svg", metavar="DIR", help="write SVG pictures here")
        s.add_argument("--timing", action="store_true", help="include timings in the report")
        if name == "build":
            s.add_argument("--no-oracle", action="store_true", help="skip the polynomial comparison")
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.random is not None:
        rows = _random_corpus(args.random, args.seed)
    elif args.path:
        try:
            rows = read_corpus(args.path)
        except OSError as exc:
            print("maxtb: %s" % exc, file=sys.stderr)
            return 2
    else:
        print("maxtb: give a corpus path or --random N", file=sys.stderr)
        return 2
    if args.command == "render" and not args.svg:
        args.svg = "."
    opts = {"max_crossings": args.max_crossings, "json": args.json, "svg": args.svg,
            "timing": args.timing, "oracle": not getattr(args, "no_oracle", False)}
    jobs = [(args.command, row, opts) for row in rows]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_work, jobs))
    else:
        results = [_work(j) for j in jobs]
    failed = 0
    for out, files in results:
        status = out.get("status")
        if status in ("ERROR", FAILED):
            failed += 1
        if args.command == "build" and status == INADEQUATE:
            print("maxtb: %s is not +adequate; skipped" % out["name"], file=sys.stderr)
        for fname, text in files.items():
            target = args.svg if fname.endswith(".svg") else args.json
            Path(target).mkdir(parents=True, exist_ok=True)
            (Path(target) / fname).write_text(text)
        print(json.dumps(out, sort_keys=True))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
