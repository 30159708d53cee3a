"""Reading ring and fan description files.

Both formats are TOML documents. A ring file::

    variables = ["x", "y", "z", "w"]
    degrees = [[1, 0], [1, 0], [1, 1], [0, 1]]
    torsion_degrees = [[0], [1], [1], [0]]   # only when group.torsion is nonempty

    [group]
    rank = 2
    torsion = []

A fan file::

    lattice_dim = 2
    rays = [[1, 0], [0, 1], [-1, -1], [1, 1]]
    max_cones = [[1, 2], [0, 2], [1, 3], [0, 3]]
    variables = ["x", "y", "z", "w"]          # optional

Ray ``i`` of a fan belongs to variable ``i`` of the Gale dual ring.
"""
from __future__ import annotations

import sys
from pathlib import Path

from toricvgit.errors import ShapeError, VGITError
from toricvgit.gitfan import Fan
from toricvgit.grading import DegreeMatrix
from toricvgit.lattice import FgAbelianGroup

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = ["ParseError", "load_ring", "load_fan", "parse_ring", "parse_fan", "parse_degree"]


class ParseError(VGITError):
    """Malformed input file; the message carries the file and field location."""


def _load(path) -> tuple[str, dict]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"{path}: cannot read file ({exc.strerror})") from exc
    try:
        return str(path), tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _int_list(value, where: str, length: int | None = None) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ParseError(f"{where}: expected a list of integers")
    if length is not None and len(value) != length:
        raise ParseError(f"{where}: expected {length} integers, got {len(value)}")
    return value


def _table(doc, key, where):
    if key not in doc:
        raise ParseError(f"{where}: missing field '{key}'")
    return doc[key]


def parse_ring(doc: dict, where: str = "<ring>") -> DegreeMatrix:
    """Build a grading from a parsed ring document (raises ParseError or InvalidModelError)."""
    group_doc = _table(doc, "group", where)
    if not isinstance(group_doc, dict):
        raise ParseError(f"{where}: [group] must be a table")
    rank = _table(group_doc, "rank", f"{where}: group")
    if not isinstance(rank, int) or rank < 0:
        raise ParseError(f"{where}: group.rank must be a nonnegative integer")
    torsion = _int_list(group_doc.get("torsion", []), f"{where}: group.torsion")
    try:
        group = FgAbelianGroup(rank, tuple(torsion))
    except ShapeError as exc:
        raise ParseError(f"{where}: group: {exc}") from exc

    degrees = _table(doc, "degrees", where)
    if not isinstance(degrees, list) or not degrees:
        raise ParseError(f"{where}: degrees must be a nonempty list")
    n = len(degrees)
    names = doc.get("variables")
    if names is None:
        from toricvgit.grading import default_names
        names = list(default_names(n))
    if not isinstance(names, list) or not all(isinstance(s, str) and s for s in names):
        raise ParseError(f"{where}: variables must be a list of nonempty strings")
    if len(names) != n:
        raise ParseError(f"{where}: {len(names)} variables but {n} degrees")
    tdeg = doc.get("torsion_degrees")
    if torsion and tdeg is None:
        raise ParseError(f"{where}: torsion_degrees required when group.torsion is nonempty")
    if tdeg is None:
        tdeg = [[] for _ in range(n)]
    if not isinstance(tdeg, list) or len(tdeg) != n:
        raise ParseError(f"{where}: torsion_degrees must list one entry per variable")
    elems = []
    for i, (f, t) in enumerate(zip(degrees, tdeg)):
        f = _int_list(f, f"{where}: degrees[{i}]", rank)
        t = _int_list(t, f"{where}: torsion_degrees[{i}]", len(torsion))
        elems.append(group.element(f, t))
    try:
        return DegreeMatrix(group, tuple(names), tuple(elems))
    except ShapeError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def parse_fan(doc: dict, where: str = "<fan>") -> tuple[Fan, list[str] | None]:
    """Build a fan (and optional variable names) from a parsed fan document."""
    d = _table(doc, "lattice_dim", where)
    if not isinstance(d, int) or d < 1:
        raise ParseError(f"{where}: lattice_dim must be a positive integer")
    rays = _table(doc, "rays", where)
    if not isinstance(rays, list) or not rays:
        raise ParseError(f"{where}: rays must be a nonempty list")
    rays = [tuple(_int_list(r, f"{where}: rays[{i}]", d)) for i, r in enumerate(rays)]
    cones = doc.get("max_cones", [])
    if not isinstance(cones, list):
        raise ParseError(f"{where}: max_cones must be a list of index lists")
    cones = [tuple(_int_list(c, f"{where}: max_cones[{i}]")) for i, c in enumerate(cones)]
    names = doc.get("variables")
    if names is not None:
        if not isinstance(names, list) or len(names) != len(rays) or not all(isinstance(s, str) for s in names):
            raise ParseError(f"{where}: variables must name each ray")
    try:
        return Fan(d, tuple(rays), tuple(cones)), names
    except ShapeError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def load_ring(path) -> DegreeMatrix:
    where, doc = _load(path)
    return parse_ring(doc, where)


def load_fan(path) -> tuple[Fan, list[str] | None]:
    where, doc = _load(path)
    return parse_fan(doc, where)


def parse_degree(text: str, g: DegreeMatrix):
    """Parse ``"2,1"`` (free part) or ``"1;1"`` (free part; torsion residues)."""
    free, _, tors = text.partition(";")
    try:
        f = [int(x) for x in free.split(",") if x.strip()]
        t = [int(x) for x in tors.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"--at {text!r}: expected comma-separated integers") from exc
    if len(f) != g.rank:
        raise ParseError(f"--at {text!r}: expected {g.rank} coordinates")
    if t and len(t) != len(g.group.torsion):
        raise ParseError(f"--at {text!r}: expected {len(g.group.torsion)} torsion residues")
    return g.group.element(f, t)
