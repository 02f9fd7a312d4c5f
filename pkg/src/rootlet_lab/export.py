"""JSON, DOT, Markdown and CSV emitters. All output is deterministic."""
from __future__ import annotations

import csv
import io
import json
from importlib import resources

from . import affine
from .central import pairing_table
from .ideals import AbelianIdeal, Atlas
from .rootsys import CartanType, RootSystem, build

TABLE1_HEADER = ("i", "min(I(α_i)_max)", "min(I(α_i)_min)", "max(Δ⁺∖I(α_i)_max)")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def root_system_json(rs: RootSystem, numbering: str = "bourbaki") -> dict:
    return rs.to_json_dict(numbering)


def atlas_json(at: Atlas, numbering: str = "bourbaki") -> dict:
    rs = at.rs
    conv = lambda g: list(rs.to_numbering(g, numbering))
    ids = {I.mask: k for k, I in enumerate(at.ideals)}
    ideals = []
    for k, I in enumerate(at.ideals):
        entry = {
            "id": k,
            "roots": list(I.indices),
            "rootlet": conv(I.rootlet) if I.mask else None,
            "z": conv(I.z),
        }
        entry.update(I.minuscule.to_json_dict())
        ideals.append(entry)
    fibers = [
        {
            "mu": conv(mu),
            "members": [ids[I.mask] for I in f.members],
            "min": ids[f.min_ideal.mask],
            "max": ids[f.max_ideal.mask],
        }
        for mu, f in at.fibers.items()
    ]
    return {
        "type": rs.label,
        "numbering": numbering,
        "root_system": root_system_json(rs, numbering),
        "ideals": ideals,
        "fibers": fibers,
    }


def load_atlas(data: dict) -> Atlas:
    """Rebuild an :class:`Atlas` from :func:`atlas_json` output, checking every field."""
    rs = build(CartanType.parse(data["type"]))
    numbering = data.get("numbering", "bourbaki")
    back = lambda g: rs.from_numbering(tuple(g), numbering)
    ideals = []
    for entry in data["ideals"]:
        mask = sum(1 << k for k in entry["roots"])
        w = affine.element_from_json(rs, entry)
        I = AbelianIdeal(rs, mask, w)
        if affine.delta_one_inversions(rs, w).roots != I.roots:
            raise ValueError(f"ideal {entry['id']}: minuscule element does not match its roots")
        if mask and I.rootlet != back(entry["rootlet"]):
            raise ValueError(f"ideal {entry['id']}: stored rootlet is inconsistent")
        if I.z != back(entry["z"]):
            raise ValueError(f"ideal {entry['id']}: stored z is inconsistent")
        ideals.append(I)
    at = Atlas(rs, ideals)
    for f in data["fibers"]:
        fib = at.fibers[back(f["mu"])]
        if [at.ideals.index(I) for I in fib.members] != f["members"]:
            raise ValueError(f"fiber {f['mu']}: member list is inconsistent")
    return at


# DOT -------------------------------------------------------------------------


def _label(rs: RootSystem, I: AbelianIdeal, numbering: str) -> str:
    if not I.mask:
        return "∅"
    return " ".join(rs.format_root(g, numbering, "digits") for g in I.generators)


def _hasse_lines(rs: RootSystem, members, ids, numbering: str, indent: str) -> list[str]:
    lines = []
    for I in members:
        lines.append(f'{indent}n{ids[I.mask]} [label="{_label(rs, I, numbering)}"];')
    for I in members:
        for J in members:
            if len(J) == len(I) + 1 and I <= J:
                lines.append(f"{indent}n{ids[I.mask]} -> n{ids[J.mask]};")
    return lines


def hasse_dot(at: Atlas, numbering: str = "bourbaki") -> str:
    """Inclusion Hasse diagram of all abelian ideals; nodes labelled by generators."""
    ids = {I.mask: k for k, I in enumerate(at.ideals)}
    lines = [f'digraph "Ab({at.rs.label})" {{', "  rankdir=BT;", "  node [shape=box];"]
    lines += _hasse_lines(at.rs, at.ideals, ids, numbering, "  ")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fibers_dot(at: Atlas, numbering: str = "bourbaki") -> str:
    rs = at.rs
    ids = {I.mask: k for k, I in enumerate(at.ideals)}
    lines = [f'digraph "fibers({rs.label})" {{', "  rankdir=BT;", "  node [shape=box];"]
    for c, (mu, f) in enumerate(at.fibers.items()):
        lines.append(f"  subgraph cluster_{c} {{")
        lines.append(f'    label="rootlet {rs.format_root(mu, numbering, "digits")}";')
        lines += _hasse_lines(rs, f.members, ids, numbering, "    ")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fibers_json(at: Atlas, numbering: str = "bourbaki") -> dict:
    data = atlas_json(at, numbering)
    return {"type": data["type"], "numbering": numbering, "fibers": data["fibers"]}


# E8 pairing table (the table1 export) ---------------------------------------


def _table_lines(rs: RootSystem, numbering: str) -> list[tuple[str, str, str, str]]:
    out, last = [], None
    for row in pairing_table(rs, numbering):
        label = "" if row.index == last else str(row.index)
        last = row.index
        out.append(
            (label,)
            + tuple(
                rs.format_root(g, numbering, "digits")
                for g in (row.min_of_max, row.min_of_min, row.max_of_complement)
            )
        )
    return out


def _require_e8(rs: RootSystem) -> None:
    if rs.cartan_type != CartanType("E", 8):
        raise ValueError("the table1 export is only defined for E8")


def table1_markdown(rs: RootSystem, numbering: str = "paper") -> str:
    _require_e8(rs)
    lines = ["| " + " | ".join(TABLE1_HEADER) + " |", "|---|---|---|---|"]
    for cells in _table_lines(rs, numbering):
        lines.append("| " + " | ".join(c or " " for c in cells) + " |")
    return "\n".join(lines) + "\n"


def table1_csv(rs: RootSystem, numbering: str = "paper") -> str:
    _require_e8(rs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "min_I_max", "min_I_min", "max_complement_I_max"])
    idx = None
    for cells in _table_lines(rs, numbering):
        idx = cells[0] or idx
        writer.writerow([idx, *cells[1:]])
    return buf.getvalue()


def table1_reference() -> str:
    """Reference copy of the E8 pairing table, stored as Markdown."""
    return resources.files("rootlet_lab").joinpath("data/table1_e8.md").read_text(encoding="utf-8")
