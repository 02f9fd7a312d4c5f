"""Command-line driver.

Exit codes: 0 success, 1 usage or input error, 2 a verification check failed.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from collections import Counter
from pathlib import Path

from . import central, export, ideals, lattice, verify
from .rootsys import CartanType, RootSystem, build

USAGE, FAILED = 1, 2

_TERM = re.compile(r"^(\d*)\*?(?:alpha|α|a)_?(\d+)$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


# root syntax -----------------------------------------------------------------


def _term(rs: RootSystem, token: str, numbering: str) -> tuple[int, ...]:
    t = token.strip().replace(" ", "")
    if t in ("theta", "θ"):
        return rs.theta
    m = _TERM.match(t)
    if not m:
        raise UsageError(f"cannot read {token!r} as a root")
    coeff, i = int(m.group(1) or 1), int(m.group(2))
    if not 1 <= i <= rs.rank:
        raise UsageError(f"simple root index {i} out of range for {rs.label}")
    b = rs.simple_index_from_numbering(i, numbering)
    return tuple(coeff if k == b - 1 else 0 for k in range(rs.rank))


def _symbolic(rs: RootSystem, text: str, numbering: str) -> tuple[int, ...]:
    total = (0,) * rs.rank
    for token in text.split("+"):
        total = tuple(a + b for a, b in zip(total, _term(rs, token, numbering)))
    return total


def parse_roots(rs: RootSystem, args: list[str], numbering: str = "bourbaki") -> list[tuple[int, ...]]:
    """Read roots from the command line.

    A comma-separated list of ``rank`` integers is one root in coefficient form,
    as is a bare digit string of length ``rank``. Anything else is split on
    commas into symbolic roots such as ``theta``, ``α1`` or ``alpha1+2alpha2``.
    """
    out = []
    for arg in args:
        pieces = [p.strip() for p in arg.split(",")]
        if len(pieces) == rs.rank and all(re.fullmatch(r"-?\d+", p) for p in pieces):
            out.append(rs.from_numbering(tuple(int(p) for p in pieces), numbering))
        elif re.fullmatch(r"\d+", arg) and len(arg) == rs.rank:
            out.append(rs.from_numbering(tuple(int(c) for c in arg), numbering))
        else:
            out.extend(_symbolic(rs, p, numbering) for p in pieces if p)
    for g in out:
        if not rs.is_positive_root(g):
            raise UsageError(f"{rs.format_root(g, numbering)} is not a positive root of {rs.label}")
    return out


def name_root(rs: RootSystem, g, numbering: str = "bourbaki") -> str:
    if tuple(g) == rs.theta:
        return "θ"
    parts = []
    for i, a in enumerate(rs.to_numbering(g, numbering), start=1):
        if a:
            parts.append(f"{'' if a == 1 else a}α{i}")
    return "+".join(parts)


def _type(label: str) -> RootSystem:
    try:
        return build(CartanType.parse(label))
    except ValueError as e:
        raise UsageError(str(e)) from None


def _ideal(rs: RootSystem, roots, close: bool) -> ideals.AbelianIdeal:
    at = ideals.atlas(rs)
    mask = rs.mask_of(roots)
    if close:
        mask = rs.upper_closure(mask)
    try:
        return at.ideal(mask)
    except ValueError as e:
        hint = "" if close else " (use --close to add the missing larger roots)"
        raise UsageError(f"{e}{hint}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# commands --------------------------------------------------------------------


def cmd_enumerate(a) -> int:
    rs = _type(a.type)
    at = ideals.atlas(rs)
    sizes = Counter(len(f) for f in at.fibers.values())
    print(f"{len(at)} ideals, {len(at.fibers)} long-root fibers")
    print("fiber sizes: " + ", ".join(f"{k}x{v}" for k, v in sorted(sizes.items())))
    if a.out:
        Path(a.out).write_text(export.dumps(export.atlas_json(at, a.numbering)), encoding="utf-8")
    return 0


def cmd_verify(a) -> int:
    labels = [t for t in a.types if t != "all"]
    types = verify.all_types(8) if "all" in a.types or not labels else [_type(t).cartan_type for t in labels]
    reports = verify.verify(types, a.filter)
    if a.format == "json":
        data = [
            {"type": r.type_label, "checks": [vars(c) for c in r.checks]}
            for r in reports
        ]
        _emit(json.dumps(data, indent=2, ensure_ascii=False, default=list) + "\n", a.out)
    else:
        lines = [line for r in reports for line in r.lines()]
        n_fail = sum(c.status == verify.FAIL for r in reports for c in r.checks)
        lines.append(f"{len(reports)} types, {sum(len(r.checks) for r in reports)} checks, {n_fail} failed")
        text = "\n".join(lines) + "\n"
        if a.singletons:
            text += "\n" + verify.singleton_table(types)
        _emit(text, a.out)
    for r in reports:
        for c in r.checks:
            if c.status == verify.FAIL:
                print(f"counterexample: {json.dumps(c.counterexample, default=list, ensure_ascii=False)}", file=sys.stderr)
    return FAILED if any(r.failed for r in reports) else 0


def cmd_join(a) -> int:
    rs = _type(a.type)
    eta, beta = parse_roots(rs, [a.eta], a.numbering), parse_roots(rs, [a.beta], a.numbering)
    if len(eta) != 1 or len(beta) != 1:
        raise UsageError("join takes exactly two roots")
    res = lattice.join(rs, eta[0], beta[0])
    fmt = lambda g: rs.format_root(g, a.numbering)
    if a.format == "json":
        print(json.dumps({
            "join": list(rs.to_numbering(res.value, a.numbering)),
            "mode": res.mode,
            "bridge": None if res.bridge is None else list(rs.to_numbering(res.bridge, a.numbering)),
        }))
    elif res.bridge is not None:
        print(f"{fmt(res.value)} (bridge: {fmt(res.bridge)})")
    else:
        print(f"{fmt(res.value)} ({res.mode})")
    return 0


def cmd_rootlet(a) -> int:
    rs = _type(a.type)
    I = _ideal(rs, parse_roots(rs, a.roots, a.numbering), a.close)
    mu = I.rootlet
    print(f"{name_root(rs, mu, a.numbering)} = {rs.format_root(mu, a.numbering)}")
    return 0


def cmd_centralizer(a) -> int:
    rs = _type(a.type)
    I = _ideal(rs, parse_roots(rs, a.roots, a.numbering), a.close)
    prof = central.centraliser(rs, I)
    flags = [p for p, on in (("P1", prof.p1), ("P2", prof.p2), ("P3", prof.p3)) if on]
    if prof.self_centralising:
        head = "self-centralising; " + flags[-1]
    else:
        head = ", ".join(flags) if flags else "none of P1, P2, P3"
    print(head)
    key = lambda g: (sum(g) < 0, abs(sum(g)), g)
    print("root part: " + " ".join(rs.format_root(g, a.numbering, "digits") for g in sorted(prof.root_part, key=key)))
    print(f"toral dimension: {prof.toral_dim}")
    return 0


def cmd_export(a) -> int:
    rs = _type(a.type)
    what, fmt = a.what, a.format
    if what == "table1":
        if rs.cartan_type != CartanType("E", 8):
            raise UsageError("table1 is only defined for E8")
        num = a.numbering_given or "paper"
        writers = {"md": export.table1_markdown, "csv": export.table1_csv}
        if fmt not in writers:
            raise UsageError("table1 exports as md or csv")
        _emit(writers[fmt](rs, num), a.out)
        return 0
    at = ideals.atlas(rs)
    num = a.numbering_given or "bourbaki"
    writers = {
        ("hasse", "dot"): lambda: export.hasse_dot(at, num),
        ("fibers", "dot"): lambda: export.fibers_dot(at, num),
        ("fibers", "json"): lambda: export.dumps(export.fibers_json(at, num)),
        ("atlas", "json"): lambda: export.dumps(export.atlas_json(at, num)),
        ("hasse", "json"): lambda: export.dumps(export.atlas_json(at, num)),
    }
    if (what, fmt) not in writers:
        raise UsageError(f"cannot export {what} as {fmt}")
    _emit(writers[what, fmt](), a.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="rootlet-lab", description="Abelian ideals, rootlets and root-poset joins.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_numbering(sp, default="bourbaki"):
        sp.add_argument("--numbering", choices=("paper", "bourbaki"), default=default)
        return sp

    e = with_numbering(sub.add_parser("enumerate", help="build the atlas of abelian ideals"))
    e.add_argument("type")
    e.add_argument("--out")
    e.set_defaults(fn=cmd_enumerate)

    v = sub.add_parser("verify", help="run the verification battery")
    v.add_argument("types", nargs="*", default=["all"])
    v.add_argument("--filter", help="glob over check names")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--singletons", action="store_true", help="append the fiber-singleton table")
    v.add_argument("--out")
    v.set_defaults(fn=cmd_verify)

    j = with_numbering(sub.add_parser("join", help="least upper bound of two positive roots"))
    j.add_argument("type")
    j.add_argument("eta")
    j.add_argument("beta")
    j.add_argument("--format", choices=("text", "json"), default="text")
    j.set_defaults(fn=cmd_join)

    for name, fn, text in (
        ("rootlet", cmd_rootlet, "rootlet of an abelian ideal"),
        ("centralizer", cmd_centralizer, "centraliser profile of an abelian ideal"),
    ):
        c = with_numbering(sub.add_parser(name, help=text))
        c.add_argument("type")
        c.add_argument("roots", nargs="+")
        c.add_argument("--close", action="store_true", help="complete the roots to an upper ideal")
        c.set_defaults(fn=fn)

    x = sub.add_parser("export", help="write hasse, fibers, atlas or table1")
    x.add_argument("type")
    x.add_argument("what", choices=("hasse", "fibers", "atlas", "table1"))
    x.add_argument("format", nargs="?", choices=("dot", "json", "md", "csv"), default=None)
    x.add_argument("--format", dest="format_flag", choices=("dot", "json", "md", "csv"))
    x.add_argument("--numbering", dest="numbering_given", choices=("paper", "bourbaki"))
    x.add_argument("--out")
    x.set_defaults(fn=cmd_export)
    return p


_DEFAULT_FORMAT = {"hasse": "dot", "fibers": "dot", "atlas": "json", "table1": "md"}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "export":
        args.format = args.format or args.format_flag or _DEFAULT_FORMAT[args.what]
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"rootlet-lab: error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
