"""Domain types for points, blocks, schemas and designs, plus the text
exchange format.

A point is a tuple of coordinates.  Each coordinate is either a residue
(an int, reduced modulo the axis modulus) or a fixed symbol (a short
string such as ``inf`` or ``a``).  Symbols are fixed points of every
shift: developing or rotating a design never moves them.

All types here are immutable value objects; they can be shared freely.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

Coord = int | str
Point = tuple[Coord, ...]
Block = frozenset  # frozenset[Point]

KINDS = (
    "GDP",
    "GDD",
    "PBD",
    "HGDD",
    "SCHGDD",
    "IHGDD",
    "SCIHGDD",
    "IGDP-H",
    "IGDD-H",
    "IGDP-G",
    "IGDD-G",
    "SCGDP",
    "SCGDD",
    "SCGDP-STAR",
)

# Kinds whose eligible pairs must be covered exactly once (design strength).
EXACT_KINDS = frozenset(
    {"GDD", "PBD", "HGDD", "SCHGDD", "IHGDD", "SCIHGDD", "IGDD-H", "IGDD-G", "SCGDD"}
)
HOLEY_KINDS = frozenset({"HGDD", "SCHGDD", "IHGDD", "SCIHGDD"})
INCOMPLETE_KINDS = frozenset(
    {"IHGDD", "SCIHGDD", "IGDP-H", "IGDD-H", "IGDP-G", "IGDD-G"}
)


class FormatError(ValueError):
    """Raised on malformed exchange documents; carries a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def coord_key(c: Coord) -> tuple:
    # residues sort before symbols, per the canonical ordering
    if isinstance(c, int):
        return (0, c, "")
    return (1, 0, c)


def point_key(p: Point) -> tuple:
    return tuple(coord_key(c) for c in p)


def block_key(b: Block) -> tuple:
    return tuple(sorted((point_key(p) for p in b)))


def sort_points(points: Iterable[Point]) -> list[Point]:
    return sorted(points, key=point_key)


def sort_blocks(blocks: Iterable[Block]) -> list[Block]:
    return sorted(blocks, key=block_key)


@dataclass(frozen=True)
class Axis:
    """One coordinate position: a modulus, extra fixed symbols, or both."""

    modulus: int | None = None
    symbols: tuple[str, ...] = ()

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 1:
            raise ValueError("axis modulus must be >= 1")
        if self.modulus is None and not self.symbols:
            raise ValueError("axis needs a modulus or symbols")

    def valid(self, c: Coord) -> bool:
        if isinstance(c, int):
            return self.modulus is not None and 0 <= c < self.modulus
        return c in self.symbols

    def domain(self) -> list[Coord]:
        vals: list[Coord] = list(range(self.modulus)) if self.modulus else []
        vals.extend(self.symbols)
        return vals


@dataclass(frozen=True)
class CyclicClaim:
    """The permutation a design claims invariance under.

    Either a coordinate shift (``+step`` on ``axis``, reduced modulo that
    axis) of orbit length ``length``, or an explicit permutation given as
    point cycles (``axis is None``).  ``layer`` carries the structural
    parameters (h, g, t, m) a holey claim declares, when any.
    """

    length: int
    axis: int | None = None
    step: int = 1
    perm: tuple[tuple[Point, ...], ...] | None = None
    layer: tuple[tuple[str, int], ...] = ()

    def layer_params(self) -> dict[str, int]:
        return dict(self.layer)

    def mapping(self) -> dict[Point, Point] | None:
        if self.perm is None:
            return None
        m: dict[Point, Point] = {}
        for cyc in self.perm:
            for i, p in enumerate(cyc):
                m[p] = cyc[(i + 1) % len(cyc)]
        return m

    def apply(self, p: Point, axes: Sequence[Axis], _m=None) -> Point:
        if self.axis is None:
            m = _m if _m is not None else self.mapping()
            return m.get(p, p)
        c = p[self.axis]
        if isinstance(c, str):
            return p
        mod = axes[self.axis].modulus
        return p[: self.axis] + ((c + self.step) % mod,) + p[self.axis + 1 :]

    def apply_block(self, b: Block, axes: Sequence[Axis], _m=None) -> Block:
        return frozenset(self.apply(p, axes, _m) for p in b)


def with_layer(claim: CyclicClaim, **params: int) -> CyclicClaim:
    layer = tuple(sorted({**claim.layer_params(), **params}.items()))
    return replace(claim, layer=layer)


@dataclass(frozen=True)
class GroupType:
    """Multiset of group sizes, rendered ``g1^u1 g2^u2 ...``."""

    parts: tuple[tuple[int, int], ...]  # (size, count), size-descending

    @classmethod
    def of_sizes(cls, sizes: Iterable[int]) -> "GroupType":
        counts: dict[int, int] = {}
        for s in sizes:
            counts[s] = counts.get(s, 0) + 1
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @property
    def point_count(self) -> int:
        return sum(s * c for s, c in self.parts)

    def __str__(self) -> str:
        return " ".join(f"{s}^{c}" for s, c in self.parts)


@dataclass(frozen=True)
class Schema:
    kind: str
    axes: tuple[Axis, ...]
    groups: tuple[frozenset, ...]
    holes: tuple[frozenset, ...] | None = None
    hole_set: frozenset | None = None  # the Y set of incomplete kinds
    cyclic: CyclicClaim | None = None
    star_t: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        # canonical ordering makes schema equality independent of input order
        object.__setattr__(
            self,
            "groups",
            tuple(sorted(self.groups, key=lambda g: point_key(min(g, key=point_key)))),
        )
        if self.holes is not None:
            object.__setattr__(
                self,
                "holes",
                tuple(sorted(self.holes, key=lambda h: point_key(min(h, key=point_key)))),
            )

    @property
    def points(self) -> frozenset:
        return frozenset().union(*self.groups) if self.groups else frozenset()

    @property
    def group_type(self) -> GroupType:
        return GroupType.of_sizes(len(g) for g in self.groups)

    def group_index(self) -> dict[Point, int]:
        idx: dict[Point, int] = {}
        for i, g in enumerate(self.groups):
            for p in g:
                idx[p] = i
        return idx

    def hole_index(self) -> dict[Point, int]:
        idx: dict[Point, int] = {}
        if self.holes:
            for i, h in enumerate(self.holes):
                for p in h:
                    idx[p] = i
        return idx


@dataclass(frozen=True)
class Design:
    schema: Schema
    base_blocks: tuple[Block, ...]
    provenance: str = ""

    @property
    def n_base_blocks(self) -> int:
        return len(self.base_blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Design):
            return NotImplemented
        return (
            self.schema == other.schema
            and frozenset(self.base_blocks) == frozenset(other.base_blocks)
        )

    def __hash__(self) -> int:
        return hash((self.schema, frozenset(self.base_blocks)))


# ---------------------------------------------------------------------------
# Exchange format
# ---------------------------------------------------------------------------

_POINT_RE = re.compile(r"\(([^()]*)\)")


def _parse_coord(tok: str, lineno: int) -> Coord | None:
    tok = tok.strip()
    if tok in ("*", "-"):  # wildcard in patterns, untouched coordinate in DEV
        return None
    if re.fullmatch(r"-?\d+", tok):
        return int(tok)
    if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
        return tok
    raise FormatError(f"bad coordinate token {tok!r}", lineno)


def _parse_pattern(text: str, lineno: int) -> tuple[Coord | None, ...]:
    return tuple(_parse_coord(t, lineno) for t in text.split(","))


def _check_point(p: Point, axes: Sequence[Axis], lineno: int) -> Point:
    if len(p) != len(axes):
        raise FormatError(f"point arity {len(p)} != {len(axes)} axes", lineno)
    for c, ax in zip(p, axes):
        if not ax.valid(c):
            if isinstance(c, int):
                raise FormatError(f"residue {c} out of range for axis", lineno)
            raise FormatError(f"unknown symbol {c!r} for axis", lineno)
    return p


def _expand_pattern(pat: tuple, axes: Sequence[Axis], lineno: int) -> list[Point]:
    if len(pat) != len(axes):
        raise FormatError(f"pattern arity {len(pat)} != {len(axes)} axes", lineno)
    points = [()]
    for c, ax in zip(pat, axes):
        vals = ax.domain() if c is None else [c]
        points = [p + (v,) for p in points for v in vals]
    return [_check_point(p, axes, lineno) for p in points]


def _parse_cycles(text: str, lineno: int) -> tuple[tuple[Point, ...], ...]:
    cycles = []
    for m in re.finditer(r"\(([^()]*)\)", text):
        pts = []
        for tok in m.group(1).split():
            c = _parse_coord(tok, lineno)
            if c is None:
                raise FormatError("wildcard not allowed in PERM", lineno)
            pts.append((c,))
        if len(pts) > 1:
            cycles.append(tuple(pts))
    if not cycles:
        raise FormatError("empty permutation", lineno)
    return tuple(cycles)


def _parse_kv(parts: list[str], lineno: int) -> dict[str, str]:
    kv = {}
    for part in parts:
        if "=" not in part:
            raise FormatError(f"expected key=value, got {part!r}", lineno)
        k, v = part.split("=", 1)
        kv[k] = v
    return kv


def parse_design(text: str) -> Design:
    """Parse an exchange-format document into a Design.

    DEV segments are expanded (with de-duplication) and, when the design
    carries a cyclic claim, blocks are reduced to canonical orbit
    representatives.  No design-validity checking happens here.
    """
    from . import orbits  # local import: orbits depends on core types only

    lines = text.splitlines()
    kind: str | None = None
    axes: list[Axis] = []
    groups: list[tuple[str, list]] = []
    holes: list[tuple[str, list]] = []
    holey_tokens: list[tuple[str, int]] = []
    star_t: int | None = None
    cyc_kv: dict[str, str] | None = None
    cyc_is_perm = False
    perm_pi: tuple | None = None
    # segments of (base blocks, rule); rule None = identity
    segments: list[dict] = [{"blocks": [], "rule": None}]
    header_seen = False

    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not header_seen:
            if line != "%DESIGN v1":
                raise FormatError("missing %DESIGN v1 header", lineno)
            header_seen = True
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "KIND":
            if rest not in KINDS:
                raise FormatError(f"unknown kind {rest!r}", lineno)
            kind = rest
        elif word == "AXIS":
            m = re.fullmatch(r"(?:mod\s+(\d+))?\s*(?:sym\s+([\w,\s]+))?", rest)
            if not m or (m.group(1) is None and m.group(2) is None):
                raise FormatError(f"bad AXIS line {rest!r}", lineno)
            mod = int(m.group(1)) if m.group(1) else None
            syms = tuple(s.strip() for s in m.group(2).split(",")) if m.group(2) else ()
            axes.append(Axis(mod, syms))
        elif word == "CYCLIC":
            parts = rest.split()
            if parts and parts[0] == "perm":
                cyc_is_perm = True
                parts = parts[1:]
            cyc_kv = _parse_kv(parts, lineno)
        elif word == "GROUP":
            gid, _, pats = rest.partition(":")
            groups.append((gid.strip(), [(p, lineno) for p in _POINT_RE.findall(pats)]))
        elif word == "HOLE":
            hid, _, pats = rest.partition(":")
            holes.append((hid.strip(), [(p, lineno) for p in _POINT_RE.findall(pats)]))
        elif word == "HOLEY":
            for tok in _POINT_RE.findall(rest):
                holey_tokens.append(("pat", tok, lineno))
            for tok in re.sub(r"\([^()]*\)", " ", rest).split():
                holey_tokens.append(("gid", tok, lineno))
        elif word == "STAR":
            star_t = int(_parse_kv(rest.split(), lineno)["t"])
        elif word == "BASE":
            pts = [_parse_pattern(p, lineno) for p in _POINT_RE.findall(rest)]
            if len(pts) < 2:
                raise FormatError("BASE needs at least two points", lineno)
            if any(None in p for p in pts):
                raise FormatError("wildcard not allowed in BASE", lineno)
            segments[-1]["blocks"].append((frozenset(pts), lineno))
        elif word == "DEV":
            kv = _parse_kv(rest.split(), lineno)
            sh = _parse_pattern(kv["shift"].strip("()"), lineno)
            md = _parse_pattern(kv["mod"].strip("()"), lineno)
            shifts = tuple(None if c is None else int(c) for c in sh)
            moduli = tuple(None if c is None else int(c) for c in md)
            segments[-1]["rule"] = orbits.DevelopmentRule(shifts=shifts, moduli=moduli)
            segments.append({"blocks": [], "rule": None})
        elif word == "PERM":
            which, _, cyc = rest.partition(" ")
            cycles = _parse_cycles(cyc, lineno)
            if which == "dev":
                segments[-1]["rule"] = orbits.DevelopmentRule(
                    shifts=(), moduli=(), perm=cycles
                )
                segments.append({"blocks": [], "rule": None})
            elif which == "pi":
                perm_pi = cycles
            else:
                raise FormatError(f"unknown PERM kind {which!r}", lineno)
        elif word == "TYPE":
            pass  # informational; group type is derived from GROUP lines
        else:
            raise FormatError(f"unknown directive {word!r}", lineno)

    if kind is None:
        raise FormatError("missing KIND")
    if not axes:
        raise FormatError("missing AXIS lines")
    axes_t = tuple(axes)

    claim = None
    if cyc_kv is not None:
        layer = tuple(
            sorted((k, int(v)) for k, v in cyc_kv.items() if k in ("h", "g", "t", "m"))
        )
        if cyc_is_perm:
            if perm_pi is None:
                raise FormatError("CYCLIC perm requires a PERM pi line")
            claim = CyclicClaim(
                length=int(cyc_kv["len"]), axis=None, perm=perm_pi, layer=layer
            )
        else:
            claim = CyclicClaim(
                length=int(cyc_kv["len"]),
                axis=int(cyc_kv["axis"]),
                step=int(cyc_kv.get("step", "1")),
                layer=layer,
            )
            if claim.axis >= len(axes_t) or axes_t[claim.axis].modulus is None:
                raise FormatError("CYCLIC axis is not a residue axis")

    def expand_sets(named, what):
        out = []
        for name, pats in named:
            pts: set = set()
            for pat_text, lineno in pats:
                pts.update(_expand_pattern(_parse_pattern(pat_text, lineno), axes_t, lineno))
            if not pts:
                raise FormatError(f"empty {what} {name!r}")
            out.append((name, frozenset(pts)))
        return out

    group_sets = expand_sets(groups, "group")
    hole_sets = expand_sets(holes, "hole")

    hole_set = None
    if holey_tokens:
        pts: set = set()
        gids = {name: s for name, s in group_sets}
        for kind_tok, tok, lineno in holey_tokens:
            if kind_tok == "gid":
                if tok not in gids:
                    raise FormatError(f"HOLEY names unknown group {tok!r}", lineno)
                pts.update(gids[tok])
            else:
                pts.update(_expand_pattern(_parse_pattern(tok, lineno), axes_t, lineno))
        hole_set = frozenset(pts)

    # expand DEV segments, validate residue ranges, then deduplicate
    blocks: set = set()
    for seg in segments:
        seg_blocks = []
        for b, lineno in seg["blocks"]:
            seg_blocks.append(frozenset(_check_point(p, axes_t, lineno) for p in b))
        rule = seg["rule"]
        if rule is None:
            blocks.update(seg_blocks)
        else:
            blocks.update(orbits.develop(seg_blocks, rule, axes_t))

    base: list
    if claim is not None:
        base = orbits.canonical_reps(blocks, claim, axes_t)
    else:
        base = sort_blocks(blocks)

    schema = Schema(
        kind=kind,
        axes=axes_t,
        groups=tuple(s for _, s in group_sets),
        holes=tuple(s for _, s in hole_sets) or None,
        hole_set=hole_set,
        cyclic=claim,
        star_t=star_t,
    )
    return Design(schema=schema, base_blocks=tuple(base))


def _fmt_coord(c: Coord) -> str:
    return str(c)


def _fmt_point(p: Point) -> str:
    return "(" + ",".join(_fmt_coord(c) for c in p) + ")"


def _fmt_block(b: Block) -> str:
    return " ".join(_fmt_point(p) for p in sort_points(b))


def serialize_design(d: Design) -> str:
    """Serialize a Design deterministically (groups, holes and blocks in
    canonical order, base blocks fully expanded)."""
    s = d.schema
    out = ["%DESIGN v1", f"KIND {s.kind}", f"TYPE {s.group_type}"]
    if s.cyclic is not None:
        c = s.cyclic
        layer = "".join(f" {k}={v}" for k, v in c.layer)
        if c.axis is None:
            out.append(f"CYCLIC perm len={c.length}{layer}")
        else:
            step = f" step={c.step}" if c.step != 1 else ""
            out.append(f"CYCLIC axis={c.axis} len={c.length}{step}{layer}")
    for ax in s.axes:
        parts = []
        if ax.modulus is not None:
            parts.append(f"mod {ax.modulus}")
        if ax.symbols:
            parts.append("sym " + ",".join(ax.symbols))
        out.append("AXIS " + " ".join(parts))
    for i, g in enumerate(sorted(s.groups, key=lambda g: point_key(min(g, key=point_key)))):
        out.append(f"GROUP g{i}: " + " ".join(_fmt_point(p) for p in sort_points(g)))
    if s.holes:
        for i, h in enumerate(sorted(s.holes, key=lambda h: point_key(min(h, key=point_key)))):
            out.append(f"HOLE h{i}: " + " ".join(_fmt_point(p) for p in sort_points(h)))
    if s.hole_set:
        out.append("HOLEY " + " ".join(_fmt_point(p) for p in sort_points(s.hole_set)))
    if s.star_t is not None:
        out.append(f"STAR t={s.star_t}")
    if s.cyclic is not None and s.cyclic.axis is None:
        cyc = " ".join(
            "(" + " ".join(_fmt_coord(p[0]) for p in c) + ")" for c in s.cyclic.perm
        )
        out.append(f"PERM pi {cyc}")
    for b in sort_blocks(d.base_blocks):
        out.append("BASE " + _fmt_block(b))
    return "\n".join(out) + "\n"
