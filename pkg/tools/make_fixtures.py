"""Regenerate the vendored knot table from KnotInfo.

Development-time helper only; the package never imports database_knotinfo.

    pip install database_knotinfo
    python tools/make_fixtures.py
"""

import ast
import json
from pathlib import Path

from database_knotinfo import link_list

OUT = Path(__file__).resolve().parents[1] / "src" / "maxtb" / "data" / "knot_table.jsonl"

EXTRA = ["11n_34", "11n_42", "11n_95"]


def pd_text(raw):
    crossings = ast.literal_eval(raw)
    return " ".join("X[%s]" % ",".join(str(a) for a in x) for x in crossings)


def tb_pair(raw):
    # "[-7][-4]" -> [-7, -4]
    return [int(p) for p in raw.strip("[]").split("][")]


def main():
    rows = []
    for rec in link_list()[1:]:
        name = rec["name"]
        try:
            n = int(rec["crossing_number"])
        except (TypeError, ValueError):
            continue
        if not (0 < n <= 9 or name in EXTRA):
            continue
        rows.append({
            "name": name,
            "pd": pd_text(rec["pd_notation"]),
            "crossings": n,
            "alternating": rec["alternating"] == "Y",
            "positive": rec["positive"] == "Y",
            "adequate": rec["adequate"] == "Y",
            "tb_published": tb_pair(rec["thurston_bennequin_number"]),
            "kauffman_published": rec["kauffman_polynomial"].replace(" ", ""),
        })
    with OUT.open("w") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
    print("wrote %d rows to %s" % (len(rows), OUT))


if __name__ == "__main__":
    main()
