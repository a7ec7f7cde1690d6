"""Serialization of classification runs and single checks.

All output is deterministic for a fixed input: subgroup rows follow the
driver's sort order and no timestamps are written.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .classify import SubgroupResult, prediction
from .criteria import ConditionReport, Scenario
from .group import Group

CSV_COLUMNS = ["order", "generators", "d", "e", "f", "descendant", "quotient"]


def first_witness(report: ConditionReport):
    for label in report.required:
        v = report.verdicts[label]
        if v.witness is not None and not v.ok:
            return {"condition": label, **v.witness}
    return None


def subgroup_row(r: SubgroupResult) -> dict:
    return {
        "order": r.group.order,
        "generators": r.generator_strings,
        "conditions": {c: r.report.status(c) for c in ("d", "e", "f")},
        "descendant": r.descendant,
        "quotient": r.quotient.label,
        "witness": first_witness(r.report),
    }


def classification_report(
    s: Scenario,
    results: list[SubgroupResult],
    trivial_report: ConditionReport,
    subgroup_count: int,
) -> dict:
    descendants = [r for r in results if r.descendant]
    found = {r.group.elements: r.quotient for r in descendants}
    predicted = s.predict() if s.predict else []
    fmt = s.law.format
    return {
        "scenario": s.describe(),
        "base_conditions": s.base_report.to_json(),
        "ambient_order": s.ambient.order,
        "subgroup_count": subgroup_count,
        "self": {"order": 1, "conditions": {c: trivial_report.status(c) for c in ("d", "e", "f")},
                 "note": "H = {1} reproduces X itself and is not listed as a descendant"},
        "subgroups": [subgroup_row(r) for r in results],
        "descendants": [
            {"order": r.group.order, "generators": r.generator_strings, "quotient": r.quotient.label}
            for r in descendants
        ],
        "prediction": [
            {"l": l, "order": h.order, "generators": [fmt(g) for g in h.generators], "quotient": curve.label}
            for l, h, curve in predicted
        ],
        "theorem_match": found == prediction(s) if s.predict else None,
    }


def check_report(s: Scenario, h: Group, report: ConditionReport, quotient_label: str, subgroup_label: str) -> dict:
    fmt = h.law.format
    return {
        "scenario": s.describe(),
        "subgroup": {"spec": subgroup_label, "order": h.order, "generators": [fmt(g) for g in h.generators]},
        "conditions": report.to_json(),
        "descendant": report.overall,
        "quotient": quotient_label,
        "witness": first_witness(report),
    }


def dumps_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def classification_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in report["subgroups"]:
        c = row["conditions"]
        w.writerow([row["order"], " ".join(row["generators"]), c["d"], c["e"], c["f"],
                    str(row["descendant"]).lower(), row["quotient"]])
    return buf.getvalue()


def classification_markdown(report: dict) -> str:
    sc = report["scenario"]
    family, n = sc["family"], sc["param"]
    sym = "d" if family == "fermat" else "m"
    lines = [
        f"# Descendants of {family} with {sym} = {n}",
        "",
        f"Ambient group order {report['ambient_order']}, {report['subgroup_count']} subgroups checked.",
        "",
        "| l | \\|K_l\\| | K_l descendant | quotient | predicted |",
        "|---|---|---|---|---|",
    ]
    predicted = {p["order"]: p for p in report["prediction"]}
    found = {r["order"]: r for r in report["descendants"] if _is_k(r, predicted)}
    for l in range(2, n + 1):
        if n % l:
            continue
        pred = predicted.get(l * l)
        hit = found.get(l * l)
        lines.append(
            f"| {l} | {l * l} | {'yes' if hit else 'no'} | {hit['quotient'] if hit else '-'} | "
            f"{pred['quotient'] if pred else 'not a descendant'} |"
        )
    others = [r for r in report["descendants"] if not _is_k(r, predicted)]
    lines += ["", f"Descendant kernels other than K_l: {len(others)}.",
              f"Theorem match: {'yes' if report['theorem_match'] else 'NO'}.", ""]
    return "\n".join(lines)


def _is_k(row: dict, predicted: dict) -> bool:
    p = predicted.get(row["order"])
    return p is not None and p["generators"] == row["generators"]


def check_markdown(report: dict) -> str:
    lines = [f"# {report['scenario']['family']} ({report['scenario']['param']}), H = {report['subgroup']['spec']}", ""]
    lines += ["| condition | status |", "|---|---|"]
    for label, v in report["conditions"].items():
        lines.append(f"| {label} | {v['status']} |")
    lines += ["", f"Descendant: {'yes' if report['descendant'] else 'no'}; quotient {report['quotient']}."]
    if report["witness"]:
        lines.append(f"Witness: `{json.dumps(report['witness'], sort_keys=True)}`")
    return "\n".join(lines) + "\n"


def check_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    c = report["conditions"]
    w.writerow([report["subgroup"]["order"], " ".join(report["subgroup"]["generators"]),
                c.get("d", {}).get("status"), c.get("e", {}).get("status"), c.get("f", {}).get("status"),
                str(report["descendant"]).lower(), report["quotient"]])
    return buf.getvalue()


def load_schema(name: str) -> dict:
    text = resources.files("galois_descent").joinpath("schemas", name).read_text(encoding="utf-8")
    return json.loads(text)
