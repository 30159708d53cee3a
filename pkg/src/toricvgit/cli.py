"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 invalid model, 4 domain error.
Results go to stdout, diagnostics to stderr. ``--format machine`` prints one
``key=<json>`` line per field.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from toricvgit.cones import QCone, fmt_vector
from toricvgit.errors import DomainError, InvalidModelError, PreconditionError, ShapeError
from toricvgit.gitfan import (
    chamber_of,
    enumerate_chambers,
    fan_of_chamber,
    gale_dual,
    git_cone,
    in_corollary_domain,
    irrelevant_ideal,
    is_generic,
    moving_cone,
    nef_cone,
    point_semistable_for_character,
    separated_pair,
)
from toricvgit.grading import (
    DegreeMatrix,
    is_geometrically_semistable,
    is_semistable,
    monomic_relevant_generators,
    weight_cone,
)
from toricvgit.io import ParseError, load_fan, load_ring, parse_degree

EXIT_OK, EXIT_PARSE, EXIT_MODEL, EXIT_DOMAIN = 0, 2, 3, 4


class Report:
    """Ordered fields plus the human-readable rendering of a command's result."""

    def __init__(self):
        self.fields: list[tuple[str, object]] = []
        self.text: list[str] = []

    def field(self, key, value):
        self.fields.append((key, value))

    def say(self, line=""):
        self.text.append(line)

    def render(self, fmt: str) -> str:
        if fmt == "machine":
            return "".join(f"{k}={json.dumps(_plain(v), separators=(',', ':'))}\n" for k, v in self.fields)
        return "".join(line + "\n" for line in self.text)


def _plain(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    return v


def _cone_fields(c: QCone) -> dict:
    return {"rays": [list(r) for r in c.rays], "lineality": [list(v) for v in c.lineality], "dim": c.dim}


def _group_str(g: DegreeMatrix) -> str:
    return str(g.group)


def _degree_str(g: DegreeMatrix, i: int) -> str:
    d = g.degrees[i]
    s = fmt_vector(d.free)
    if d.torsion:
        s = s[:-1] + "; " + ",".join(str(t) for t in d.torsion) + ")"
    return s


def _monomials(g, supports) -> list[str]:
    return [g.monomial(s) for s in supports]


def _at(g: DegreeMatrix, text: str | None):
    if text is None:
        raise ParseError("--at is required for this command")
    return parse_degree(text, g)


def cmd_relevants(args) -> Report:
    g = load_ring(args.ring)
    bases = monomic_relevant_generators(g)
    rep = Report()
    rep.field("group", {"rank": g.rank, "torsion": list(g.group.torsion)})
    rep.field("variables", list(g.variable_names))
    rep.field("degrees", [list(d.free) for d in g.degrees])
    rep.field("torsion_degrees", [list(d.torsion) for d in g.degrees])
    rep.field("generators", [list(b.indices) for b in bases])
    rep.field("monomials", _monomials(g, bases))
    rep.say(f"group: {_group_str(g)}")
    rep.say("degrees: " + " ".join(f"{nm}={_degree_str(g, i)}" for i, nm in enumerate(g.variable_names)))
    rep.say(f"relevant generators ({len(bases)}): " + ", ".join(_monomials(g, bases)))
    return rep


def cmd_chambers(args) -> Report:
    g = load_ring(args.ring)
    rep = Report()
    if args.at is not None:
        a = _at(g, args.at)
        cone = git_cone(g, a)
        generic = is_generic(g, a)
        ideal = irrelevant_ideal(g, a)
        interior = in_corollary_domain(g, a)
        if not interior:
            print("note: degree lies on the boundary of the weight space; the GIT cone is the "
                  "intersection over all supports containing it", file=sys.stderr)
        rep.field("at", list(a.free))
        rep.field("cone", _cone_fields(cone))
        rep.field("generic", generic)
        rep.field("interior", interior)
        rep.field("irrelevant_ideal", [list(b.indices) for b in ideal])
        rep.say(f"GIT cone at {fmt_vector(a.free)}: {cone} (dim {cone.dim})")
        rep.say(f"generic: {'yes' if generic else 'no'}")
        rep.say("B = (" + ", ".join(_monomials(g, ideal)) + ")")
        return rep
    chambers = enumerate_chambers(g)
    rep.field("count", len(chambers))
    rep.field("chambers", [
        dict(_cone_fields(ch.cone),
             defining_bases=[list(b.indices) for b in ch.defining_bases],
             b_generators=[list(b.indices) for b in ch.b_generators],
             empty_virtual_facets=list(ch.unused_indices),
             sample_point=list(ch.sample_point))
        for ch in chambers
    ])
    rep.say(f"{len(chambers)} chamber{'s' if len(chambers) != 1 else ''}")
    for k, ch in enumerate(chambers, 1):
        rep.say(f"C{k}: {ch.cone}")
        rep.say("  defining bases: " + ", ".join(_monomials(g, ch.defining_bases)))
        rep.say("  B-generators: " + ", ".join(_monomials(g, ch.b_generators)))
        unused = [g.variable_names[i] for i in ch.unused_indices]
        rep.say("  I_empty: " + (", ".join(unused) if unused else "none"))
    return rep


def cmd_moving(args) -> Report:
    g = load_ring(args.ring)
    c = moving_cone(g)
    rep = Report()
    rep.field("cone", _cone_fields(c))
    rep.say(f"moving cone: {c} (dim {c.dim})")
    return rep


def _ring_and_fan(args):
    g = load_ring(args.ring)
    fan, _ = load_fan(args.fan)
    return g, fan


def cmd_nef(args) -> Report:
    g, fan = _ring_and_fan(args)
    c = nef_cone(g, fan)
    rep = Report()
    rep.field("cone", _cone_fields(c))
    rep.say(f"nef cone: {c} (dim {c.dim})")
    return rep


def cmd_gale(args) -> Report:
    fan, names = load_fan(args.fan)
    g = gale_dual(fan, names)
    rep = Report()
    rep.field("group", {"rank": g.rank, "torsion": list(g.group.torsion)})
    rep.field("variables", list(g.variable_names))
    rep.field("degrees", [list(d.free) for d in g.degrees])
    rep.field("torsion_degrees", [list(d.torsion) for d in g.degrees])
    rep.say(f"group: {_group_str(g)}")
    rep.say("degrees: " + " ".join(f"{nm}={_degree_str(g, i)}" for i, nm in enumerate(g.variable_names)))
    return rep


def cmd_fan_of_chamber(args) -> Report:
    g, fan = _ring_and_fan(args)
    a = _at(g, args.at)
    ch = chamber_of(g, a)
    model = fan_of_chamber(g, ch, fan)
    rep = Report()
    rep.field("chamber", _cone_fields(ch.cone))
    rep.field("max_cones", [list(c) for c in model.max_cones])
    rep.field("unused_rays", list(model.unused_rays))
    rep.say(f"chamber: {ch.cone}")
    rep.say(f"maximal cones ({len(model.max_cones)}):")
    for c in model.max_cones:
        rep.say("  " + ", ".join(g.variable_names[i] for i in c) + ": "
                + " ".join(fmt_vector(model.rays[i]) for i in c))
    unused = [g.variable_names[i] for i in model.unused_rays]
    rep.say("unused rays: " + (", ".join(unused) if unused else "none"))
    return rep


def cmd_separated(args) -> Report:
    g = load_ring(args.ring)
    f, h = g.parse_monomial(args.f), g.parse_monomial(args.h)
    sep = separated_pair(g, f, h)
    d = weight_cone(g, f).intersect(weight_cone(g, h)).dim
    rep = Report()
    rep.field("separated", sep)
    rep.field("intersection_dim", d)
    rep.say(f"{'separated' if sep else 'not separated'} (intersection dim {d})")
    return rep


def cmd_semistable(args) -> Report:
    g = load_ring(args.ring)
    if args.support is None:
        raise ParseError("--support is required for this command")
    x = g.parse_monomial(args.support)
    a = _at(g, args.at)
    ss = point_semistable_for_character(g, x, a)
    rep = Report()
    rep.field("support", list(x.indices))
    rep.field("at", list(a.free))
    rep.field("semistable", ss)
    rep.field("orbit_cone_contains", is_semistable(g, x, a))
    rep.field("geometrically_semistable", is_geometrically_semistable(g, x, a))
    rep.say(f"point with nonzero coordinates {g.monomial(x)} at {fmt_vector(a.free)}: "
            f"{'semistable' if ss else 'not semistable'}")
    return rep


def cmd_plot(args) -> Report:
    from toricvgit.svg import render_chambers

    g = load_ring(args.ring)
    doc = render_chambers(g)
    rep = Report()
    if args.out:
        Path(args.out).write_text(doc)
        rep.field("out", str(args.out))
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        rep.text.append(doc.rstrip("\n"))
        rep.field("svg", doc)
    return rep


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricvgit", description="Variation of GIT for torus actions on affine space.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, ring=True, fan=False):
        sp = sub.add_parser(name, help=help)
        if ring:
            sp.add_argument("ring", help="ring description file")
        if fan:
            sp.add_argument("fan", help="fan description file")
        sp.add_argument("--format", choices=("human", "machine"), default="human")
        sp.set_defaults(func=func)
        return sp

    add("relevants", cmd_relevants, "monomic relevant generators")
    sp = add("chambers", cmd_chambers, "chambers, or the GIT cone at a degree")
    sp.add_argument("--at", help="degree, e.g. 2,1 or 1;1 for a torsion residue")
    add("moving", cmd_moving, "moving cone")
    add("nef", cmd_nef, "nef cone of a fan", fan=True)
    add("gale", cmd_gale, "grading Gale dual to a fan", ring=False, fan=True)
    sp = add("fan-of-chamber", cmd_fan_of_chamber, "fan of the chamber at a generic degree", fan=True)
    sp.add_argument("--at", help="generic degree inside the chamber")
    sp = add("separated", cmd_separated, "whether two relevant monomials glue separatedly")
    sp.add_argument("f")
    sp.add_argument("h")
    sp = add("semistable", cmd_semistable, "semistability of a point for a character")
    sp.add_argument("--support", help="variables not vanishing at the point, e.g. x,w")
    sp.add_argument("--at", help="degree of the character")
    sp = add("plot", cmd_plot, "SVG picture of a rank-2 chamber decomposition")
    sp.add_argument("--out", help="output path (stdout if omitted)")
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        rep = args.func(args)
    except (ParseError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidModelError as exc:
        print(f"invalid model: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except (DomainError, PreconditionError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(rep.render(args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
