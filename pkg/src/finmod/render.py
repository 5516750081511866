"""Byte-deterministic report rendering: aligned text, JSON lines, DOT."""

from __future__ import annotations

import json


def render_text(blocks) -> str:
    out = []
    for block in blocks:
        kind = block["kind"]
        if kind == "instance":
            out.append(f"instance: {block['label']}")
        elif kind == "classify":
            out.append(f"classification of {block['instance']}")
            rows = [["submodule", "prime", "1-absorbing", "2-absorbing", "witness"]]
            for r in block["rows"]:
                rows.append([
                    r["submodule"],
                    _yn(r["prime"]),
                    _yn(r["one_absorbing"]),
                    _yn(r["two_absorbing"]),
                    r["witness"] or "-",
                ])
            out.extend(_table(rows))
        elif kind == "rad":
            out.append(f"rad {block['input']} in {block['instance']} = {block['result']}")
        elif kind == "rad1":
            omega = ", ".join(block["omega"]) if block["omega"] else "(empty)"
            out.append(
                f"rad1 {block['input']} in {block['instance']}: omega = {{{omega}}}; result = {block['result']}"
            )
        elif kind == "witness":
            out.append(_witness_text(block))
        elif kind == "suite":
            rows = [["check", "instance", "status", "combos", "note"]]
            for c in block["cells"]:
                rows.append([
                    c["check"], c["instance"], c["status"], str(c["combos"]), c["note"] or "-",
                ])
            out.extend(_table(rows))
            s = block["summary"]
            out.append(
                f"suite: {s['pass']} pass, {s['fail']} fail, {s['skip']} skip, {s['error']} error"
            )
        elif kind == "counterexample":
            out.append(json.dumps(block["payload"], sort_keys=True))
        elif kind == "emit":
            out.append(f"wrote {block['path']}")
    return "\n".join(out) + "\n" if out else ""


def _witness_text(block) -> str:
    clauses = (
        f"abm in N: {_yn(block['abm_in_n'])}; "
        f"ab in (N:M)={block['residue']}: {_yn(block['ab_in_residue'])}; "
        f"m in N: {_yn(block['m_in_n'])}"
    )
    verdict = "refutes 1-absorbing" if block["refutes"] else "no refutation"
    return (
        f"witness a={block['a']} b={block['b']} m={block['m']} against {block['target']}: "
        f"{clauses} => {verdict}"
    )


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _table(rows) -> list:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for r in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return lines


def render_records(blocks) -> str:
    lines = []
    for block in blocks:
        kind = block["kind"]
        if kind == "classify":
            for r in block["rows"]:
                rec = dict(r)
                rec["action"] = "classify"
                rec["instance"] = block["instance"]
                lines.append(_record(rec))
        elif kind in ("rad", "rad1"):
            rec = {k: v for k, v in block.items() if k != "kind"}
            rec["action"] = kind
            lines.append(_record(rec))
        elif kind == "witness":
            rec = {k: v for k, v in block.items() if k != "kind"}
            rec["action"] = "witness"
            lines.append(_record(rec))
        elif kind == "suite":
            for c in block["cells"]:
                rec = dict(c)
                rec["action"] = "check"
                lines.append(_record(rec))
            summary = dict(block["summary"])
            summary["action"] = "suite-summary"
            lines.append(_record(summary))
        elif kind == "counterexample":
            rec = {"action": "counterexample"}
            rec.update(block["payload"])
            lines.append(_record(rec))
        elif kind == "emit":
            lines.append(_record({"action": "emit", "path": block["path"]}))
    return "\n".join(lines) + "\n" if lines else ""


def _record(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_dot(blocks) -> str:
    graphs = [b for b in blocks if b["kind"] == "classify"]
    return "\n".join(lattice_dot(b) for b in graphs)


def lattice_dot(block) -> str:
    """The submodule lattice as a Hasse digraph, nodes tagged by classification."""
    lines = ["digraph submodule_lattice {", "  rankdir=BT;",
             f'  label="{block["instance"]}";']
    for i, node in enumerate(block["nodes"]):
        lines.append(f'  n{i} [label="{node["name"]}\\n{node["tag"]}"];')
    for i, j in block["edges"]:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
