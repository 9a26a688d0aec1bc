"""Text renderings (markdown, csv, json) of verdicts and tables.

Every function returns a string ending in a newline; the CLI only prints.
csv column order is fixed here and nowhere else.
"""

from __future__ import annotations

import csv
import io
import json

from .residue import balanced as _bal
from .solutions import CTuple, ReductionWitness, Verdict

FORMAT_VERSION = "1"

MONOMIAL_KEY = "k"
DYNOMIAL_COLUMNS = ["N", "size", "reducibility", "roots", "witness_length", "witness"]
ENUM_COLUMNS = ["tuple", "status"]


def fmt_int(a: int, n: int, balanced: bool) -> str:
    return str(_bal(a, n) if balanced else a % n)


def fmt_tuple(t: CTuple, balanced: bool = False) -> str:
    return t.format(balanced)


def fmt_roots(roots, n: int, balanced: bool = False) -> str:
    vals = sorted(_bal(r, n) if balanced else r for r in roots)
    return "{" + ",".join(map(str, vals)) + "}"


def tuple_json(t: CTuple, balanced: bool = False) -> list[int]:
    return [_bal(a, t.modulus) if balanced else a for a in t.entries]


def witness_json(w: ReductionWitness, balanced: bool = False) -> dict:
    return {
        "rotation": w.rotation,
        "reflected": w.reflected,
        "left": tuple_json(w.left, balanced),
        "right": tuple_json(w.right, balanced),
    }


def verdict_json(v: Verdict, balanced: bool = False) -> dict:
    d = {"status": v.status, "source": v.source}
    if v.witness is not None:
        d["witness"] = witness_json(v.witness, balanced)
    return d


def envelope(command: str, inputs: dict, result, work_spent: int) -> str:
    doc = {
        "command": command,
        "inputs": inputs,
        "result": result,
        "work_spent": work_spent,
        "format_version": FORMAT_VERSION,
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _md(header, rows, align=None) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    align = align or ["r"] * len(header)

    def line(r):
        parts = [c.ljust(w) if a == "l" else c.rjust(w) for c, w, a in zip(r, widths, align)]
        return "| " + " | ".join(parts) + " |"

    sep = "|" + "|".join(
        ("-" * (w + 1) + ":") if a == "r" else (":" + "-" * (w + 1)) for w, a in zip(widths, align)
    ) + "|"
    return "\n".join([line(cells[0]), sep] + [line(r) for r in cells[1:]]) + "\n"


# check


def check_text(fmt: str, n: int, t: CTuple, verdict, balanced: bool) -> str:
    sign = verdict.sign.sign
    if fmt == "json":
        result = {
            "is_solution": verdict.is_solution,
            "sign": sign,
            "sign_ambiguous": verdict.sign.ambiguous,
        }
        return envelope("check", {"modulus": n, "tuple": tuple_json(t, balanced)}, result, 1)
    if fmt == "csv":
        return _csv(
            ["modulus", "tuple", "is_solution", "sign"],
            [[n, fmt_tuple(t, balanced), str(verdict.is_solution).lower(), "" if sign is None else sign]],
        )
    if not verdict.is_solution:
        return f"{fmt_tuple(t, balanced)} mod {n}: not a solution\n"
    pm = "+Id" if sign == 1 else "-Id"
    if verdict.sign.ambiguous:
        pm = "+Id = -Id"
    return f"{fmt_tuple(t, balanced)} mod {n}: solution, M = {pm} (sign {sign})\n"


# reduce


def reduce_text(fmt: str, n: int, t: CTuple, v: Verdict, spent: int, limit, balanced: bool) -> str:
    if fmt == "json":
        inputs = {"modulus": n, "tuple": tuple_json(t, balanced), "max_work": limit}
        return envelope("reduce", inputs, verdict_json(v, balanced), spent)
    w = v.witness
    if fmt == "csv":
        row = [n, fmt_tuple(t, balanced), v.status, v.source]
        row += [w.rotation, str(w.reflected).lower(), fmt_tuple(w.left, balanced), fmt_tuple(w.right, balanced)] if w else [""] * 4
        return _csv(["modulus", "tuple", "status", "source", "rotation", "reflected", "left", "right"], [row])
    head = f"{fmt_tuple(t, balanced)} mod {n}"
    if v.status == "unknown":
        return f"{head}: Unknown (work limit {limit} reached after {spent} candidate tests)\n"
    if v.status == "irreducible":
        return f"{head}: Irreducible ({spent} candidate tests)\n"
    lines = [
        f"{head}: Reducible",
        f"  transform: reflected={str(w.reflected).lower()} rotation={w.rotation}",
        f"  left:  {fmt_tuple(w.left, balanced)}",
        f"  right: {fmt_tuple(w.right, balanced)}",
    ]
    return "\n".join(lines) + "\n"


# enumerate


def enumerate_text(fmt: str, inputs: dict, items, spent: int, balanced: bool) -> str:
    """items: list of (CTuple, status or None)."""
    if fmt == "json":
        result = [
            {"tuple": tuple_json(t, balanced)} | ({} if s is None else {"status": s})
            for t, s in items
        ]
        return envelope("enumerate", inputs, result, spent)
    if fmt == "csv":
        return _csv(ENUM_COLUMNS, [[fmt_tuple(t, balanced), s or ""] for t, s in items])
    out = [fmt_tuple(t, balanced) + ("" if s in (None, "irreducible") else f"  [{s}]") for t, s in items]
    out.append(f"# {len(items)} tuple(s)")
    return "\n".join(out) + "\n"


# monomial table


def monomial_table_text(fmt: str, primes, rows, inputs: dict) -> str:
    if fmt == "json":
        result = {
            "columns": list(primes),
            "rows": [{"k": k, "sizes": [cells[p] for p in primes]} for k, cells in rows],
        }
        return envelope("monomial-table", inputs, result, 0)
    body = [[k] + ["" if cells[p] is None else cells[p] for p in primes] for k, cells in rows]
    if fmt == "csv":
        return _csv([MONOMIAL_KEY] + list(primes), body)
    return _md(["k \\ N"] + list(primes), body)


# dynomial table


def _witness_part(rec):
    v = rec.verdict
    return v.witness.right if v is not None and v.witness is not None else None


def dynomial_table_text(fmt: str, records, inputs: dict, spent: int, balanced: bool, published=None) -> str:
    """published: optional {N: "valid" | "invalid" | ""} from --verify-paper-witnesses."""
    if fmt == "json":
        result = []
        for rec in records:
            d = {
                "N": rec.modulus,
                "size": rec.size,
                "reducibility": rec.verdict.status,
                "source": rec.verdict.source,
                "roots": sorted(_bal(r, rec.modulus) if balanced else r for r in rec.quad_roots),
            }
            if rec.verdict.witness is not None:
                d["witness"] = witness_json(rec.verdict.witness, balanced)
            if published is not None:
                d["published_witness"] = published.get(rec.modulus, "")
            result.append(d)
        return envelope("dynomial2-table", inputs, result, spent)

    header = list(DYNOMIAL_COLUMNS) + (["published_witness"] if published is not None else [])
    rows = []
    for rec in records:
        part = _witness_part(rec)
        row = [
            rec.modulus,
            rec.size,
            rec.verdict.status,
            fmt_roots(rec.quad_roots, rec.modulus, balanced),
            "" if part is None else len(part),
            "" if part is None else fmt_tuple(part, balanced),
        ]
        if published is not None:
            row.append(published.get(rec.modulus, ""))
        rows.append(row)
    if fmt == "csv":
        return _csv(header, rows)
    for row in rows:
        # long parts are summarised in markdown; csv and json keep them whole
        s = row[5]
        if s and len(s) > 40:
            vals = s[1:-1].split(",")
            row[5] = "(" + ",".join(vals[:3]) + ",…," + ",".join(vals[-3:]) + ")"
    align = ["r", "r", "l", "l", "r", "l"] + (["l"] if published is not None else [])
    return _md(header, rows, align)
