"""Certification that a Design satisfies every defining property of its
declared kind: group/hole pair semantics, cyclic invariance, hole-set
exemptions, the star condition, window (h-perfect) structure, and
optimality counts.

All failures are collected as violations in a Verdict; nothing raises
for design-level problems.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from . import orbits
from .core import Block, Design, Point, sort_points
from .bounds import j_star


@dataclass
class Violation:
    rule: str
    witness: object
    message: str

    def __str__(self) -> str:
        return f"[{self.rule}] {self.message} (witness: {self.witness})"


@dataclass
class Verdict:
    ok: bool
    violations: list[Violation] = field(default_factory=list)
    base_blocks: int = 0
    developed_blocks: int = 0
    covered_pairs: int = 0

    def summary(self) -> str:
        state = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return (
            f"{state}; base={self.base_blocks} developed={self.developed_blocks}"
            f" pairs={self.covered_pairs}"
        )


def pair_census(blocks) -> Counter:
    """Multiset of unordered point pairs covered by the given blocks."""
    census: Counter = Counter()
    for b in blocks:
        pts = sort_points(b)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                census[(pts[i], pts[j])] += 1
    return census


def _star_exempt(p: Point, q: Point, t: int, w: int) -> bool:
    a, x = p[0], p[1]
    b, y = q[0], q[1]
    if not (isinstance(a, int) and isinstance(b, int)) or a >= t or b >= t or a == b:
        return False
    return (y - x) % w in (1, w - 1)


def verify(d: Design) -> Verdict:  # noqa: C901 - one dispatch table, kept together
    """Check the full defining property set of d's declared kind over the
    fully developed block multiset."""
    s = d.schema
    v = Verdict(ok=True)
    bad = v.violations
    kind = s.kind

    points = s.points
    gi = s.group_index()
    # structural: groups partition the points they claim; disjointness
    total = sum(len(g) for g in s.groups)
    if total != len(points):
        bad.append(Violation("groups-partition", None, "groups overlap"))

    hi = s.hole_index() if s.holes else None
    if s.holes is not None:
        hole_total = sum(len(h) for h in s.holes)
        hole_union = frozenset().union(*s.holes)
        if hole_total != len(hole_union) or hole_union != points:
            bad.append(Violation("holes-partition", None, "holes do not partition the points"))
        # constant group intersection per hole
        for k, h in enumerate(s.holes):
            sizes = {len(h & g) for g in s.groups}
            if len(sizes) != 1:
                bad.append(
                    Violation("hole-group-meet", k, "hole meets groups in unequal sizes")
                )
    elif kind in ("HGDD", "SCHGDD", "IHGDD", "SCIHGDD"):
        bad.append(Violation("holes-missing", None, f"{kind} requires holes"))

    Y = s.hole_set
    if kind in ("IHGDD", "SCIHGDD", "IGDP-G", "IGDD-G"):
        if Y is None:
            bad.append(Violation("hole-set-missing", None, f"{kind} requires a hole set"))
        else:
            covered_groups = [g for g in s.groups if g & Y]
            if any(not (g <= Y) for g in covered_groups):
                bad.append(
                    Violation("hole-set-groups", None, "hole set is not a union of groups")
                )
    if kind in ("IGDP-H", "IGDD-H"):
        if Y is None:
            bad.append(Violation("hole-set-missing", None, f"{kind} requires a hole set"))
        else:
            meets = {len(Y & g) for g in s.groups}
            if len(meets) != 1:
                bad.append(
                    Violation(
                        "hole-set-layer", None, "hole set meets groups in unequal sizes"
                    )
                )
    if kind == "SCGDP-STAR" and s.star_t is None:
        bad.append(Violation("star-missing", None, "SCGDP-STAR requires STAR t"))
    if kind == "PBD" and any(len(g) != 1 for g in s.groups):
        bad.append(Violation("pbd-groups", None, "PBD groups must be singletons"))

    # cyclic claim: fixes groups, permutes holes within classes
    claim = s.cyclic
    if claim is not None:
        m = claim.mapping()
        for k, g in enumerate(s.groups):
            if frozenset(claim.apply(p, s.axes, m) for p in g) != g:
                bad.append(Violation("cyclic-groups", k, "permutation moves a group"))
        if s.holes:
            imgs = []
            hole_list = list(s.holes)
            for k, h in enumerate(hole_list):
                img = frozenset(claim.apply(p, s.axes, m) for p in h)
                if img not in hole_list:
                    bad.append(Violation("cyclic-holes", k, "permutation breaks a hole"))
                    imgs.append(k)
                else:
                    imgs.append(hole_list.index(img))
            # orbit classes of holes
            seen: set[int] = set()
            classes = 0
            for k in range(len(hole_list)):
                if k in seen:
                    continue
                classes += 1
                cur = k
                while cur not in seen:
                    seen.add(cur)
                    cur = imgs[cur]
            want_m = claim.layer_params().get("m")
            if want_m is not None and classes != want_m:
                bad.append(
                    Violation(
                        "cyclic-hole-classes",
                        classes,
                        f"holes fall in {classes} orbit classes, claimed {want_m}",
                    )
                )
        if Y is not None:
            if frozenset(claim.apply(p, s.axes, m) for p in Y) != Y:
                bad.append(Violation("cyclic-hole-set", None, "permutation moves the hole set"))

    # base blocks: membership, orbits, expansion
    for b in d.base_blocks:
        for p in b:
            if p not in gi:
                bad.append(Violation("point-outside-groups", p, "block point in no group"))
                v.ok = False
                v.base_blocks = len(d.base_blocks)
                return v
    if claim is not None:
        for b in d.base_blocks:
            try:
                n = orbits.orbit_length(b, claim, s.axes)
            except ValueError as e:
                bad.append(Violation("orbit", sort_points(b), str(e)))
                continue
            if n != claim.length and all(
                len(b & g) <= 1 for g in s.groups
            ):
                bad.append(
                    Violation(
                        "short-orbit", sort_points(b), f"transverse base block has orbit {n}"
                    )
                )

    try:
        developed = orbits.expand_design_blocks(d.base_blocks, claim, s.axes)
    except ValueError as e:
        bad.append(Violation("orbit", None, str(e)))
        v.ok = False
        v.base_blocks = len(d.base_blocks)
        return v
    dev_counter = Counter(developed)
    for b, c in dev_counter.items():
        if c > 1:
            bad.append(
                Violation("duplicate-block", sort_points(b), f"developed block appears x{c}")
            )

    census = pair_census(developed)

    w_len = claim.length if claim is not None else 1
    star_t = s.star_t

    def classify(p: Point, q: Point) -> str:
        """required multiplicity class: '0', '1', or '01' (at most one)."""
        if gi[p] == gi[q]:
            return "0"
        if kind in ("HGDD", "SCHGDD", "IHGDD", "SCIHGDD"):
            if hi is not None and hi.get(p) == hi.get(q):
                return "0"
            if kind in ("IHGDD", "SCIHGDD") and Y and p in Y and q in Y:
                return "0"
            return "1"
        if kind in ("IGDP-H", "IGDD-H", "IGDP-G", "IGDD-G"):
            if Y and p in Y and q in Y:
                return "0"
            return "1" if kind in ("IGDD-H", "IGDD-G") else "01"
        if kind in ("GDD", "SCGDD", "PBD"):
            return "1"
        if kind == "SCGDP-STAR" and star_t is not None and _star_exempt(p, q, star_t, w_len):
            return "0"
        return "01"

    # forbidden / overfull pairs straight off the census
    for (p, q), c in census.items():
        cls = classify(p, q)
        if cls == "0" and c > 0:
            rule = "within-group-pair" if gi[p] == gi[q] else "exempt-pair-covered"
            if kind == "SCGDP-STAR" and gi[p] != gi[q] and star_t and _star_exempt(p, q, star_t, w_len):
                rule = "star-pair-covered"
            bad.append(Violation(rule, (p, q), f"pair covered x{c}, must be uncovered"))
        elif c > 1:
            bad.append(Violation("pair-overcovered", (p, q), f"pair covered x{c}"))

    # exact kinds: every eligible pair must actually be covered
    if kind in (
        "GDD",
        "SCGDD",
        "PBD",
        "HGDD",
        "SCHGDD",
        "IHGDD",
        "SCIHGDD",
        "IGDD-H",
        "IGDD-G",
    ):
        pts = sort_points(points)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                p, q = pts[i], pts[j]
                if classify(p, q) == "1" and census.get((p, q), 0) != 1:
                    bad.append(
                        Violation(
                            "pair-uncovered",
                            (p, q),
                            f"pair covered x{census.get((p, q), 0)}, must be exactly 1",
                        )
                    )

    v.ok = not bad
    v.base_blocks = len(d.base_blocks)
    v.developed_blocks = len(developed)
    v.covered_pairs = len(census)
    return v


def window(h: int, w: int) -> frozenset:
    return frozenset(x + y * w for x in range(w // 2 + 1) for y in range(h))


def check_h_perfect(d: Design, h: int, w: int) -> Verdict:
    """Check that every base block of an hw-cyclic incomplete design can
    be anchored so its other offsets fall in {x+yw : 0<=x<=w//2, 0<=y<h}."""
    s = d.schema
    v = Verdict(ok=True)
    claim = s.cyclic
    if s.kind not in ("IGDP-H", "IGDD-H"):
        v.ok = False
        v.violations.append(Violation("kind", s.kind, "h-perfect applies to layered IGDPs"))
        return v
    if claim is None or claim.axis is None or claim.step != 1 or claim.length != h * w:
        v.ok = False
        v.violations.append(
            Violation("claim", claim, f"needs a unit-step shift claim of length {h * w}")
        )
        return v
    win = window(h, w)
    ax = claim.axis
    n = claim.length
    for b in d.base_blocks:
        pts = sort_points(b)
        zs = [p[ax] for p in pts]
        if any(isinstance(z, str) for z in zs):
            v.violations.append(Violation("h-perfect", pts, "symbol on the shift axis"))
            continue
        if not any(
            all((z - anchor) % n in win for z in zs) for anchor in zs
        ):
            v.violations.append(
                Violation("h-perfect", pts, "no anchoring puts offsets in the window")
            )
    v.ok = not v.violations
    v.base_blocks = len(d.base_blocks)
    return v


def gdp_parameters(d: Design) -> tuple[int, int, int]:
    """(u, v, w) of a w-cyclic GDP of type (vw)^u; raises if the design
    does not have that shape."""
    s = d.schema
    if s.kind not in ("GDP", "GDD", "SCGDP", "SCGDD", "SCGDP-STAR"):
        raise ValueError(f"not a group divisible packing kind: {s.kind}")
    sizes = {len(g) for g in s.groups}
    if len(sizes) != 1:
        raise ValueError(f"not uniform group type: {s.group_type}")
    size = sizes.pop()
    w = s.cyclic.length if s.cyclic is not None else 1
    if size % w != 0:
        raise ValueError(f"cycle length {w} does not divide group size {size}")
    return len(s.groups), size // w, w


def assert_optimal(d: Design) -> Verdict:
    """verify(d) plus the base-block count matching the refined bound for
    its (u, v, w)."""
    try:
        u, vv, w = gdp_parameters(d)
    except ValueError as e:
        return Verdict(ok=False, violations=[Violation("kind", d.schema.kind, str(e))])
    verdict = verify(d)
    if any(len(b) != 3 for b in d.base_blocks):
        verdict.violations.append(Violation("block-size", None, "optimality check is for 3-GDPs"))
    target = j_star(u, vv, w).J_star
    if len(d.base_blocks) != target:
        verdict.violations.append(
            Violation(
                "suboptimal",
                len(d.base_blocks),
                f"{len(d.base_blocks)} base blocks, refined bound is {target}",
            )
        )
    verdict.ok = not verdict.violations
    return verdict
