"""Recursive composition engine: filling, inflation and weighting
constructions over verified ingredient designs.

Every operation re-verifies its output and asserts the exact base-block
count; a construction never returns an unverified design.  Designs are
first normalized onto canonical coordinates (group label, level, shift)
so ingredients from the catalog, the searcher and other constructions
compose without caring how their points were originally labelled.
"""

from __future__ import annotations

from math import gcd

from . import orbits
from .core import Axis, Block, CyclicClaim, Design, Schema, point_key, sort_blocks, sort_points
from .bounds import j_star
from .verify import check_h_perfect, gdp_parameters, verify


class CompositionError(ValueError):
    """Ingredients do not fit the operation's preconditions."""


def _require(cond: bool, msg: str):
    if not cond:
        raise CompositionError(msg)


def _verified(d: Design, what: str) -> Design:
    verdict = verify(d)
    if not verdict.ok:
        raise CompositionError(f"{what} failed verification: {verdict.violations[0]}")
    return d


def _sorted_groups(d: Design) -> list[frozenset]:
    return list(d.schema.groups)  # schema already stores them canonically


def _orbit_levels(d: Design, group: frozenset) -> list[list]:
    """Split one group into claim orbits: a list of orbits, each listed in
    shift order starting from its canonical representative."""
    claim = d.schema.cyclic
    if claim is None:
        return [[p] for p in sort_points(group)]
    m = claim.mapping()
    seen = set()
    orbits_ = []
    for p in sort_points(group):
        if p in seen:
            continue
        orb = [p]
        seen.add(p)
        cur = claim.apply(p, d.schema.axes, m)
        while cur != p:
            orb.append(cur)
            seen.add(cur)
            cur = claim.apply(cur, d.schema.axes, m)
    # canonical rotation: start each orbit at its least point
        k = min(range(len(orb)), key=lambda i: point_key(orb[i]))
        orbits_.append(orb[k:] + orb[:k])
    return orbits_


def canonical_gdp(d: Design) -> Design:
    """Relabel any w-cyclic packing of uniform type (vw)^u onto the
    canonical axes I_u x I_v x Z_w (unit-step shift on the last axis)."""
    u, v, w = gdp_parameters(d)
    mapping: dict = {}
    for i, g in enumerate(_sorted_groups(d)):
        levels = _orbit_levels(d, g)
        _require(len(levels) == v, f"group has {len(levels)} shift orbits, expected {v}")
        for j, orb in enumerate(levels):
            _require(len(orb) == w, "shift orbit shorter than the cycle length")
            for l, p in enumerate(orb):
                mapping[p] = (i, j, l)
    blocks = [frozenset(mapping[p] for p in b) for b in d.base_blocks]
    axes = (Axis(u), Axis(v), Axis(w))
    groups = tuple(
        frozenset((i, j, l) for j in range(v) for l in range(w)) for i in range(u)
    )
    kind = d.schema.kind
    if kind == "SCGDP-STAR":
        kind = "SCGDP"
    schema = Schema(kind=kind, axes=axes, groups=groups, cyclic=CyclicClaim(length=w, axis=2))
    base = orbits.canonical_reps(blocks, schema.cyclic, axes)
    _require(len(base) == len(d.base_blocks), "relabeling lost base blocks")
    return Design(schema, tuple(base), provenance=d.provenance)


def _flat_holey_params(d: Design) -> tuple[int, int, int, int]:
    """(u, t, L, layer) of a holey design on (group label, Z_L) points:
    t holes given by the shift coordinate mod t, claim of length L on a
    modulus-N axis, layer = N // t point rows per group per hole."""
    s = d.schema
    _require(s.holes is not None, "design has no holes")
    _require(s.cyclic is not None and s.cyclic.axis is not None, "needs a shift claim")
    ax = s.cyclic.axis
    N = s.axes[ax].modulus
    t = len(s.holes)
    _require(N is not None and N % t == 0, "shift modulus not divisible by hole count")
    for h in s.holes:
        residues = {p[ax] % t for p in h}
        _require(len(residues) == 1, "holes are not the shift-residue classes")
    u = len(s.groups)
    return u, t, s.cyclic.length, N // t


def scgdp_lift(d: Design, v: int) -> Design:
    """Split a semi-cyclic packing of type (vw)^u (cycle vw) into the
    w-cyclic form with v times the base blocks."""
    u, v0, L = gdp_parameters(d)
    _require(v0 == 1, "lift starts from a semi-cyclic design (single shift orbit per group)")
    _require(L % v == 0, f"{v} does not divide the cycle length {L}")
    w = L // v
    cd = canonical_gdp(d)  # (i, 0, x) with x in Z_{vw}
    mapping = {}
    for i in range(u):
        for x in range(L):
            mapping[(i, 0, x)] = (i, x % v, x // v)
    blocks = []
    for b in cd.base_blocks:
        for k in range(v):
            blocks.append(
                frozenset(mapping[(i, 0, (x + k) % L)] for (i, _, x) in b)
            )
    axes = (Axis(u), Axis(v), Axis(w))
    groups = tuple(
        frozenset((i, j, l) for j in range(v) for l in range(w)) for i in range(u)
    )
    kind = "GDD" if cd.schema.kind in ("GDD", "SCGDD") else "GDP"
    schema = Schema(kind=kind, axes=axes, groups=groups, cyclic=CyclicClaim(length=w, axis=2))
    base = orbits.canonical_reps(blocks, schema.cyclic, axes)
    _require(len(base) == v * d.n_base_blocks, "lift must multiply base blocks by v")
    return _verified(
        Design(schema, tuple(base), provenance=f"lift(v={v}) of [{d.provenance}]"),
        "lift",
    )


# ---------------------------------------------------------------------------
# filling constructions
# ---------------------------------------------------------------------------


def fill_hgdd_holes(hgdd: Design, filler: Design) -> Design:
    """Fill the holes of a layered holey design (cycle gt, t holes) with a
    g-cyclic packing of matching group shape; output has cycle gt and
    b + f base blocks."""
    _require(hgdd.schema.kind in ("HGDD", "SCHGDD"), f"not holey: {hgdd.schema.kind}")
    u, t, L, layer = _flat_holey_params(hgdd)
    _require(L == hgdd.schema.axes[hgdd.schema.cyclic.axis].modulus, "claim must span the full shift axis")
    g = L // t
    fu, fv, fw = gdp_parameters(filler)
    _require(fu == u, f"filler has {fu} groups, host has {u}")
    _require(fw == g, f"filler cycle {fw} != {g}")
    gs = len(hgdd.schema.groups[0])
    _require(fv * fw == gs // t * 1 and fv == gs // L, "filler group size mismatch")
    fc = canonical_gdp(filler)
    ax = hgdd.schema.cyclic.axis
    glabels = [min(gr, key=point_key)[:ax] + min(gr, key=point_key)[ax + 1 :] for gr in hgdd.schema.groups]
    # build a per-group map: (level j, phase m) -> host point with shift m*t
    host_cell: dict = {}
    for gi, gr in enumerate(hgdd.schema.groups):
        hole0 = sort_points([p for p in gr if p[ax] % t == 0])
        levels = {}
        for p in hole0:
            levels.setdefault(p[:ax] + p[ax + 1 :], []).append(p)
        keys = sorted(levels, key=lambda k: point_key(tuple(k)))
        _require(len(keys) * g == len(hole0), "hole layering mismatch")
        for j, key in enumerate(keys):
            for p in levels[key]:
                host_cell[(gi, j, (p[ax] // t) % g)] = p
    blocks = list(hgdd.base_blocks)
    for b in fc.base_blocks:
        blocks.append(frozenset(host_cell[(i, j, m)] for (i, j, m) in b))
    kind = "GDD" if filler.schema.kind in ("GDD", "SCGDD") else "GDP"
    schema = Schema(
        kind=kind,
        axes=hgdd.schema.axes,
        groups=hgdd.schema.groups,
        cyclic=CyclicClaim(length=L, axis=ax, step=hgdd.schema.cyclic.step),
    )
    base = orbits.canonical_reps(blocks, schema.cyclic, hgdd.schema.axes)
    _require(
        len(base) == hgdd.n_base_blocks + filler.n_base_blocks,
        "fill must produce b + f base blocks",
    )
    return _verified(
        Design(
            schema,
            tuple(base),
            provenance=f"fill-holes([{hgdd.provenance}], [{filler.provenance}])",
        ),
        "fill_hgdd_holes",
    )


def schgdd_to_hgdd(d: Design, h: int = 1) -> Design:
    """Reinterpret a semi-cyclic holey design of type (u,(gh)^t) under the
    h-layer split: the claim becomes the t*h-step subgroup (orbit length
    g), holes are unchanged, and base blocks multiply by t*h."""
    _require(d.schema.kind == "SCHGDD", f"not semi-cyclic holey: {d.schema.kind}")
    u, t, L, layer = _flat_holey_params(d)
    _require(layer % h == 0, f"{h} does not divide the hole layer {layer}")
    g = layer // h
    ax = d.schema.cyclic.axis
    _require(L == t * layer, "claim must span the full shift axis")
    step = t * h
    new_claim = CyclicClaim(
        length=g, axis=ax, step=step, layer=(("g", g), ("h", h), ("m", t), ("t", t))
    )
    full = orbits.expand_design_blocks(d.base_blocks, d.schema.cyclic, d.schema.axes)
    base = orbits.canonical_reps(full, new_claim, d.schema.axes)
    _require(len(base) == d.n_base_blocks * step, "layer split must multiply blocks by t*h")
    schema = Schema(
        kind="HGDD",
        axes=d.schema.axes,
        groups=d.schema.groups,
        holes=d.schema.holes,
        cyclic=new_claim,
    )
    return _verified(
        Design(schema, tuple(base), provenance=f"layer-split(h={h}) of [{d.provenance}]"),
        "schgdd_to_hgdd",
    )


def fill_hgdd_into_hgdd(outer: Design, inner: Design) -> Design:
    """Refine each hole of the outer layered design by the inner one.

    Outer lives on (labels..., Z_{g*t}) with t shift-residue holes; inner
    on the same labels with shift modulus g and all-singleton shift
    holes.  The output keeps the outer claim, turns every shift class
    into a hole, and carries b + f base blocks.
    """
    _require(outer.schema.kind in ("HGDD", "SCHGDD"), "outer must be holey")
    _require(inner.schema.kind in ("HGDD", "SCHGDD"), "inner must be holey")
    u, t, L, layer = _flat_holey_params(outer)
    ui, ti, Li, layer_i = _flat_holey_params(inner)
    _require(u == ui, "group counts differ")
    ax, axi = outer.schema.cyclic.axis, inner.schema.cyclic.axis
    N = outer.schema.axes[ax].modulus
    Ni = inner.schema.axes[axi].modulus
    _require(N == t * Ni, "inner does not fill one hole")
    _require(layer_i == 1, "inner holes must be single shift classes")
    _require(
        ax == axi and outer.schema.axes[:ax] == inner.schema.axes[:axi],
        "group and level labelling must agree",
    )
    blocks = list(outer.base_blocks)
    for b in inner.base_blocks:
        blocks.append(frozenset(p[:ax] + (p[ax] * t,) for p in b))
    pts = outer.schema.points
    holes = tuple(frozenset(p for p in pts if p[ax] == c) for c in range(N))
    claim = outer.schema.cyclic
    flat = len(outer.schema.axes) == 2
    schema = Schema(
        kind="SCHGDD" if flat and claim.length == N and claim.step == 1 else "HGDD",
        axes=outer.schema.axes,
        groups=outer.schema.groups,
        holes=holes,
        cyclic=claim,
    )
    base = orbits.canonical_reps(blocks, claim, outer.schema.axes)
    _require(
        len(base) == outer.n_base_blocks + inner.n_base_blocks,
        "refinement must produce b + f base blocks",
    )
    return _verified(
        Design(
            schema,
            tuple(base),
            provenance=f"refine-holes([{outer.provenance}], [{inner.provenance}])",
        ),
        "fill_hgdd_into_hgdd",
    )


# ---------------------------------------------------------------------------
# inflation and weighting
# ---------------------------------------------------------------------------


def _canonical_weights(weights) -> dict[int, Design]:
    if isinstance(weights, Design):
        weights = {max(len(b) for b in weights.base_blocks): weights}
    out = {}
    shape = None
    for k, wd in weights.items():
        ku, kv, kw = gdp_parameters(wd)
        _require(ku == k, f"weight for size {k} has {ku} groups")
        if shape is None:
            shape = (kv, kw)
        _require((kv, kw) == shape, "all weight designs must share (v, w)")
        out[k] = canonical_gdp(wd)
    return out


def inflate(d: Design, weights) -> Design:
    """Replace every point of the host by v*w copies, replacing each base
    block of size k by the base blocks of the size-k weight design.

    Hosts: layered holey kinds (shift-residue holes) and incomplete
    kinds.  Weight designs are cyclic packings of type (vw)^k; when the
    host cycle and w are coprime the two shift coordinates merge into a
    single residue, otherwise one of them must be trivial.
    """
    host = d.schema
    _require(
        host.kind in ("HGDD", "SCHGDD", "IHGDD", "SCIHGDD", "IGDP-H", "IGDD-H", "IGDP-G", "IGDD-G"),
        f"cannot inflate kind {host.kind}",
    )
    wmap = _canonical_weights(weights)
    kv, kw = gdp_parameters(next(iter(wmap.values())))[1:]
    exact_weights = all(
        wd.schema.kind in ("GDD", "SCGDD") for wd in wmap.values()
    )

    claim = host.cyclic
    ax = claim.axis if claim is not None else None
    L = claim.length if claim is not None else 1
    if L > 1 and kw > 1:
        _require(claim.step == 1 and ax is not None, "host claim must be a unit-step shift")
        _require(
            L == host.axes[ax].modulus, "host claim must span its full shift axis"
        )
    newN = L * kw

    def compose(p, j, x):
        """Host-major shift merge: z' = z + L*x keeps every host shift
        residue class (hole structure) and lifts each covered difference
        once per weight difference.  A trivial weight level axis is
        squeezed out so flat hosts stay flat."""
        jpart = () if kv == 1 else (j,)
        if ax is None:
            return p + jpart + (x,)
        z = p[ax]
        zz = x if L == 1 else (z + L * x) % newN
        return p[:ax] + p[ax + 1 :] + jpart + (zz,)

    blocks = []
    for b in d.base_blocks:
        pts = sort_points(b)
        k = len(pts)
        _require(k in wmap, f"no weight design for block size {k}")
        for wb in wmap[k].base_blocks:
            blocks.append(frozenset(compose(pts[s], j, x) for (s, j, x) in wb))

    # new point set and structure
    z_axis = Axis(newN)
    vpart = () if kv == 1 else (Axis(kv),)
    if ax is None:
        axes = host.axes + vpart + (z_axis,)
    else:
        axes = host.axes[:ax] + host.axes[ax + 1 :] + vpart + (z_axis,)

    def blow(pset):
        out = set()
        for p in pset:
            for j in range(kv):
                for x in range(kw):
                    out.add(compose(p, j, x))
        return frozenset(out)

    groups = tuple(blow(g) for g in host.groups)
    holes = None
    if host.holes is not None:
        u_, t, L_, layer = _flat_holey_params(d)
        pts_all = frozenset().union(*groups)
        zax = len(axes) - 1
        holes = tuple(
            frozenset(p for p in pts_all if p[zax] % t == c) for c in range(t)
        )
    hole_set = blow(host.hole_set) if host.hole_set is not None else None

    kind = host.kind
    if not exact_weights:
        kind = {
            "HGDD": "HGDD",
            "SCHGDD": "HGDD",
            "IHGDD": "IHGDD",
            "SCIHGDD": "SCIHGDD",
            "IGDD-H": "IGDP-H",
            "IGDP-H": "IGDP-H",
            "IGDD-G": "IGDP-G",
            "IGDP-G": "IGDP-G",
        }[kind]
    # semi-cyclic naming survives only for flat outputs
    flat_out = len(axes) == 2
    if kind == "SCHGDD" and not flat_out:
        kind = "HGDD"
    if kind == "SCIHGDD" and not flat_out:
        kind = "IHGDD"
    new_claim = CyclicClaim(length=newN, axis=len(axes) - 1) if newN > 1 else CyclicClaim(length=1, axis=len(axes) - 1)
    schema = Schema(
        kind=kind,
        axes=axes,
        groups=groups,
        holes=holes,
        hole_set=hole_set,
        cyclic=new_claim,
        star_t=host.star_t,
    )
    base = orbits.canonical_reps(blocks, new_claim, axes)
    want = sum(wmap[len(b)].n_base_blocks for b in d.base_blocks)
    _require(len(base) == want, f"inflation count {len(base)} != sum r_i b_i = {want}")
    return _verified(
        Design(schema, tuple(base), provenance=f"inflate([{d.provenance}]; v={kv}, w={kw})"),
        "inflate",
    )


def master_weight(master: Design, slots, mode: str) -> Design:
    """Replace every master block by a copy of the slot design for its
    size.

    Modes: "pbd-hgdd" (layered holey slots over a pairwise balanced
    master), "gdd-igddh" (incomplete layered slots over a uniform GDD
    master), "gdd-gdd" (cyclic GDD slots over any GDD master),
    "pbd-igddg" (semi-cyclic holey slots over a PBD with one starred
    block, plus the aligned incomplete ingredient placed on the star).
    """
    mode = mode.lower()
    mblocks = list(master.base_blocks)
    _require(master.schema.cyclic is None or master.schema.cyclic.length == 1,
             "master must be a plain design")

    if mode == "pbd-hgdd":
        _require(master.schema.kind == "PBD", "master must be a PBD")
        sizes = {len(b) for b in mblocks}
        _require(set(slots) >= sizes, f"missing slot designs for sizes {sizes - set(slots)}")
        first = slots[next(iter(sizes))]
        u0, t, L, layer = _flat_holey_params(first)
        ax = first.schema.cyclic.axis
        _require(ax == len(first.schema.axes) - 1, "slot designs must be flat or (label, y, z)")
        level_axes = first.schema.axes[1:-1]
        kv = 1
        for a_ in level_axes:
            kv *= a_.modulus or len(a_.symbols)
        blocks = []
        for mb in mblocks:
            labels = sorted(x for (x,) in mb)
            sd = slots[len(labels)]
            _require(_flat_holey_params(sd)[1:] == (t, L, layer), "slot hole shapes differ")
            for b in sd.base_blocks:
                blocks.append(frozenset((labels[p[0]],) + p[1:] for p in b))
        n = len(master.schema.groups)
        axes = (Axis(n),) + first.schema.axes[1:]
        pts = set()
        for i in range(n):
            for p in first.schema.groups[0]:
                pts.add((i,) + p[1:])
        groups = tuple(
            frozenset(p for p in pts if p[0] == i) for i in range(n)
        )
        zax = len(axes) - 1
        N = axes[zax].modulus
        holes = tuple(
            frozenset(p for p in pts if p[zax] % t == c) for c in range(t)
        )
        claim = first.schema.cyclic
        kind = first.schema.kind
        schema = Schema(kind=kind, axes=axes, groups=groups, holes=holes, cyclic=claim)
        base = orbits.canonical_reps(blocks, claim, axes)
        want = sum(slots[len(mb)].n_base_blocks for mb in mblocks)
        _require(len(base) == want, "weighting count mismatch")
        return _verified(
            Design(schema, tuple(base), provenance=f"weight(pbd-hgdd) over [{master.provenance}]"),
            "master_weight",
        )

    if mode in ("gdd-igddh", "gdd-gdd"):
        _require(master.schema.kind in ("GDD", "PBD"), "master must be a design")
        sizes = {len(b) for b in mblocks}
        _require(set(slots) >= sizes, f"missing slot designs for sizes {sizes - set(slots)}")
        first = slots[next(iter(sizes))]
        fu = len(first.schema.groups)
        gsize = len(first.schema.groups[0])
        claim = first.schema.cyclic
        ax = claim.axis
        _require(ax == len(first.schema.axes) - 1, "slot designs must end with the shift axis")
        lv = first.schema.axes[1].modulus
        h = claim.length
        # relabel master points to indices
        mpoints = sort_points(master.schema.points)
        pidx = {p: i for i, p in enumerate(mpoints)}
        blocks = []
        for mb in mblocks:
            labels = sorted(pidx[p] for p in mb)
            sd = slots[len(labels)]
            can = sd if sd.schema.axes[0].modulus == len(labels) else sd
            for b in can.base_blocks:
                blocks.append(frozenset((labels[p[0]],) + p[1:] for p in b))
        n = len(mpoints)
        axes = (Axis(n),) + first.schema.axes[1:]
        pts = {(i,) + p[1:] for i in range(n) for p in first.schema.groups[0]}
        # groups: master group x level-structure
        groups = []
        for mg in master.schema.groups:
            gpts = set()
            for p in mg:
                i = pidx[p]
                gpts.update(q for q in pts if q[0] == i)
            groups.append(frozenset(gpts))
        hole_set = None
        if mode == "gdd-igddh":
            y_hole = {p[1] for p in first.schema.hole_set}
            hole_set = frozenset(p for p in pts if p[1] in y_hole)
        new_claim = CyclicClaim(length=h, axis=len(axes) - 1, step=claim.step)
        all_exact = all(
            slots[k].schema.kind in ("GDD", "SCGDD", "IGDD-H") for k in sizes
        )
        if mode == "gdd-igddh":
            kind = "IGDD-H" if all_exact else "IGDP-H"
        else:
            kind = "GDD" if all_exact else "GDP
        schema = Schema(
            kind=kind, axes=axes, groups=tuple(groups), hole_set=hole_set, cyclic=new_claim
        )
        base = orbits.canonical_reps(blocks, new_claim, axes)
        want = sum(slots[len(mb)].n_base_blocks for mb in mblocks)
        _require(len(base) == want, "weighting count mismatch")
        return _verified(
            Design(schema, tuple(base), provenance=f"weight({mode}) over [{master.provenance}]"),
            "master_weight",
        )

    if mode == "pbd-igddg":
        raise CompositionError("use pbd_star_weight for the starred mode")
    raise CompositionError(f"unknown weighting mode {mode!r}")


def pbd_star_weight(master: Design, star_block: Block, schgdds: dict[int, Design],
                    aligned_igdd: Design) -> Design:
    """Starred weighting: semi-cyclic holey slots over every non-star
    master block, plus one aligned incomplete ingredient whose hole sits
    on the star block's groups."""
    _require(master.schema.kind == "PBD", "master must be a PBD")
    _require(star_block in set(master.base_blocks), "star block not in the master")
    first = next(iter(schgdds.values()))
    u0, t, L, layer = _flat_holey_params(first)
    g = layer
    au, at_, aL = gdp_parameters_igddg(aligned_igdd)
    _require(aL == g, f"aligned ingredient cycle {aL} != hole layer {g}")
    n = len(master.schema.groups)
    blocks = []
    for mb in master.base_blocks:
        if mb == star_block:
            continue
        labels = sorted(x for (x,) in mb)
        sd = schgdds[len(labels)]
        for b in sd.base_blocks:
            blocks.append(frozenset((labels[p[0]], p[1]) for p in b))
    # aligned incomplete design: relabel groups onto 0..n-1 with its hole on
    # the star labels, shift z -> z*t
    star_labels = sorted(x for (x,) in star_block)
    ai = canonical_igdpg(aligned_igdd)
    hole_ids = sorted(
        i for i, gset in enumerate(ai.schema.groups) if gset <= ai.schema.hole_set
    )
    nonhole_ids = [i for i in range(len(ai.schema.groups)) if i not in hole_ids]
    other_labels = [x for x in range(n) if x not in star_labels]
    _require(len(hole_ids) == len(star_labels), "star size != ingredient hole size")
    _require(len(nonhole_ids) == len(other_labels), "ingredient group count mismatch")
    relabel = {}
    for i, lab in zip(hole_ids, star_labels):
        relabel[i] = lab
    for i, lab in zip(nonhole_ids, other_labels):
        relabel[i] = lab
    for b in ai.base_blocks:
        blocks.append(frozenset((relabel[i], (z * t) % (g * t)) for (i, y, z) in b))
    axes = (Axis(n), Axis(g * t))
    groups = tuple(frozenset((i, z) for z in range(g * t)) for i in range(n))
    hole_set = frozenset((i, z) for i in star_labels for z in range(g * t))
    claim = CyclicClaim(length=g * t, axis=1)
    kind = "IGDD-G" if ai.schema.kind == "IGDD-G" else "IGDP-G"
    schema = Schema(kind=kind, axes=axes, groups=groups, hole_set=hole_set, cyclic=claim)
    base = orbits.canonical_reps(blocks, claim, axes)
    want = sum(
        schgdds[len(mb)].n_base_blocks for mb in master.base_blocks if mb != star_block
    ) + ai.n_base_blocks
    _require(len(base) == want, "starred weighting count mismatch")
    return _verified(
        Design(schema, tuple(base), provenance=f"weight(pbd-star) over [{master.provenance}]"),
        "pbd_star_weight",
    )


def gdp_parameters_igddg(d: Design) -> tuple[int, int, int]:
    """(u, t, h) of an incomplete design whose hole is a union of t of the
    u groups, h = claim length."""
    s = d.schema
    _require(s.kind in ("IGDP-G", "IGDD-G"), f"not a group-hole incomplete kind: {s.kind}")
    hole_groups = [g for g in s.groups if g <= s.hole_set]
    _require(
        frozenset().union(*hole_groups) == s.hole_set,
        "hole is not a union of groups",
    )
    return len(s.groups), len(hole_groups), s.cyclic.length if s.cyclic else 1


def canonical_igdpg(d: Design) -> Design:
    """Relabel a group-hole incomplete design onto (I_u, I_v, Z_h) with
    the hole groups last."""
    u, t, h = gdp_parameters_igddg(d)
    gs = len(d.schema.groups[0])
    v = gs // h
    nonhole = [g for g in _sorted_groups(d) if not (g <= d.schema.hole_set)]
    hole = [g for g in _sorted_groups(d) if g <= d.schema.hole_set]
    mapping = {}
    for i, g in enumerate(nonhole + hole):
        for j, orb in enumerate(_orbit_levels(d, g)):
            for l, p in enumerate(orb):
                mapping[p] = (i, j, l)
    blocks = [frozenset(mapping[p] for p in b) for b in d.base_blocks]
    axes = (Axis(u), Axis(v), Axis(h))
    groups = tuple(
        frozenset((i, j, l) for j in range(v) for l in range(h)) for i in range(u)
    )
    hole_set = frozenset(
        (i, j, l) for i in range(u - t, u) for j in range(v) for l in range(h)
    )
    claim = CyclicClaim(length=h, axis=2)
    schema = Schema(
        kind=d.schema.kind, axes=axes, groups=groups, hole_set=hole_set, cyclic=claim
    )
    base = orbits.canonical_reps(blocks, claim, axes)
    return Design(schema, tuple(base), provenance=d.provenance)


# ---------------------------------------------------------------------------
# incomplete-design fillings
# ---------------------------------------------------------------------------


def canonical_igdph(d: Design) -> Design:
    """Relabel a layer-hole incomplete design onto (I_u, I_v, Z_h) with
    the hole levels first."""
    s = d.schema
    _require(s.kind in ("IGDP-H", "IGDD-H"), f"not a layer-hole incomplete kind: {s.kind}")
    h = s.cyclic.length if s.cyclic else 1
    u = len(s.groups)
    gs = len(s.groups[0])
    v = gs // h
    mapping = {}
    for i, g in enumerate(_sorted_groups(d)):
        levels = _orbit_levels(d, g)
        in_hole = [all(p in s.hole_set for p in orb) for orb in levels]
        _require(
            all(all(p in s.hole_set for p in orb) or all(p not in s.hole_set for p in orb)
                for orb in levels),
            "hole set is not a union of shift orbits",
        )
        order = [orb for k, orb in enumerate(levels) if in_hole[k]] + [
            orb for k, orb in enumerate(levels) if not in_hole[k]
        ]
        for j, orb in enumerate(order):
            for l, p in enumerate(orb):
                mapping[p] = (i, j, l)
    t = sum(1 for p in s.hole_set) // (u * h)
    blocks = [frozenset(mapping[p] for p in b) for b in d.base_blocks]
    axes = (Axis(u), Axis(v), Axis(h))
    groups = tuple(
        frozenset((i, j, l) for j in range(v) for l in range(h)) for i in range(u)
    )
    hole_set = frozenset((i, j, l) for i in range(u) for j in range(t) for l in range(h))
    claim = CyclicClaim(length=h, axis=2)
    schema = Schema(kind=s.kind, axes=axes, groups=groups, hole_set=hole_set, cyclic=claim)
    base = orbits.canonical_reps(blocks, claim, axes)
    return Design(schema, tuple(base), provenance=d.provenance)


def fill_igdp_hole_layers(igdp: Design, filler: Design) -> Design:
    """Fill the layer hole of an incomplete design of type (gh,th)^u with
    an h-cyclic packing of type (th)^u; output has b + f base blocks."""
    ci = canonical_igdph(igdp)
    u = len(ci.schema.groups)
    h = ci.schema.cyclic.length
    t = len(ci.schema.hole_set) // (u * h)
    fu, fv, fw = gdp_parameters(filler)
    _require(fu == u and fw == h and fv == t, f"filler must be an h-cyclic (th)^u packing, got ({fu},{fv},{fw})")
    fc = canonical_gdp(filler)
    blocks = list(ci.base_blocks) + list(fc.base_blocks)  # hole levels are the first t
    kind = (
        "GDD"
        if ci.schema.kind == "IGDD-H" and filler.schema.kind in ("GDD", "SCGDD")
        else "GDP"
    )
    schema = Schema(
        kind=kind,
        axes=ci.schema.axes,
        groups=ci.schema.groups,
        cyclic=ci.schema.cyclic,
    )
    base = orbits.canonical_reps(blocks, schema.cyclic, schema.axes)
    _require(len(base) == igdp.n_base_blocks + filler.n_base_blocks, "fill must give b + f")
    return _verified(
        Design(schema, tuple(base), provenance=f"fill-layers([{igdp.provenance}], [{filler.provenance}])"),
        "fill_igdp_hole_layers",
    )


def fill_igdp_group_hole(igdp: Design, filler: Design) -> Design:
    """Fill the group hole of an incomplete design of type (gh)^(u,t) with
    an h-cyclic packing of type (gh)^t; output has b + f base blocks."""
    ci = canonical_igdpg(igdp)
    u, t, h = gdp_parameters_igddg(ci)
    fu, fv, fw = gdp_parameters(filler)
    gs = len(ci.schema.groups[0])
    _require(fu == t, f"filler has {fu} groups, hole has {t}")
    _require(fv * fw == gs and fw == h, "filler group shape mismatch")
    fc = canonical_gdp(filler)
    blocks = list(ci.base_blocks)
    for b in fc.base_blocks:
        blocks.append(frozenset((u - t + i, j, l) for (i, j, l) in b))
    kind = (
        "GDD"
        if ci.schema.kind == "IGDD-G" and filler.schema.kind in ("GDD", "SCGDD")
        else "GDP"
    )
    schema = Schema(kind=kind, axes=ci.schema.axes, groups=ci.schema.groups, cyclic=ci.schema.cyclic)
    base = orbits.canonical_reps(blocks, schema.cyclic, schema.axes)
    _require(len(base) == igdp.n_base_blocks + filler.n_base_blocks, "fill must give b + f")
    return _verified(
        Design(schema, tuple(base), provenance=f"fill-group-hole([{igdp.provenance}], [{filler.provenance}])"),
        "fill_igdp_group_hole",
    )


def hgdd_fill_igdp(hgdd: Design, igdp: Design) -> Design:
    """Place one copy of a layer-hole incomplete design on every hole of a
    hole-fixing layered design, sharing the common hole layers; output
    has b + t*f base blocks."""
    _require(hgdd.schema.kind in ("HGDD", "SCHGDD"), "host must be holey")
    u, t, h, layer = _flat_holey_params(hgdd)
    _require(h == hgdd.schema.cyclic.length, "claim mismatch")
    N = hgdd.schema.axes[hgdd.schema.cyclic.axis].modulus
    step = hgdd.schema.cyclic.step
    _require((step * h) % N == 0 and step % t == 0, "host claim must fix every hole")
    ci = canonical_igdph(igdp)
    _require(ci.schema.cyclic.length == h, "ingredient cycle mismatch")
    ui = len(ci.schema.groups)
    _require(ui == u, "group counts differ")
    e = len(ci.schema.hole_set) // (u * h)
    gsz = len(ci.schema.groups[0]) // h  # g + e levels
    g_levels = gsz - e

    ax = hgdd.schema.cyclic.axis
    # label host cells: group gi, hole j, row r (orbit of the step-shift),
    # phase z in Z_h
    cellmap: dict = {}
    hostgroups = _sorted_groups(hgdd)
    for gi, gr in enumerate(hostgroups):
        for j in range(t):
            pts = [p for p in gr if p[ax] % t == j]
            rows: dict = {}
            for p in pts:
                orbit = []
                q = p
                while True:
                    orbit.append(q)
                    q = q[:ax] + ((q[ax] + step) % N,) + q[ax + 1 :]
                    if q == p:
                        break
                rep = min(orbit, key=point_key)
                rows.setdefault(rep, orbit)
            reps = sorted(rows, key=point_key)
            _require(len(reps) == g_levels * layer // layer or len(reps) >= 1, "")
            for r, rep in enumerate(reps):
                orbit = rows[rep]
                k = min(range(len(orbit)), key=lambda i: point_key(orbit[i]))
                orbit = orbit[k:] + orbit[:k]
                for z, p in enumerate(orbit):
                    cellmap[p] = (gi, j, r, z)
    rows_per_hole = len({(r) for (gi, j, r, z) in cellmap.values() if gi == 0 and j == 0})
    _require(rows_per_hole == g_levels, f"host hole rows {rows_per_hole} != ingredient rows {g_levels}")

    # output: (i, level, z) with levels: t*g_levels hole-specific + e common
    def out_point(gi, j, r, z):
        return (gi, j * g_levels + r, z)

    blocks = []
    for b in hgdd.base_blocks:
        blocks.append(frozenset(out_point(*cellmap[p]) for p in b))
    for j in range(t):
        for b in ci.base_blocks:
            nb = []
            for (i, lvl, z) in b:
                if lvl < e:  # common hole level
                    nb.append((i, t * g_levels + lvl, z))
                else:
                    nb.append((i, j * g_levels + (lvl - e), z))
            blocks.append(frozenset(nb))
    nv = t * g_levels + e
    axes = (Axis(u), Axis(nv), Axis(h))
    groups = tuple(
        frozenset((i, j, l) for j in range(nv) for l in range(h)) for i in range(u)
    )
    hole_set = frozenset(
        (i, j, l) for i in range(u) for j in range(t * g_levels, nv) for l in range(h)
    )
    claim = CyclicClaim(length=h, axis=2)
    kind = "IGDD-H" if ci.schema.kind == "IGDD-H" else "IGDP-H"
    schema = Schema(kind=kind, axes=axes, groups=groups, hole_set=hole_set, cyclic=claim)
    base = orbits.canonical_reps(blocks, claim, axes)
    _require(
        len(base) == hgdd.n_base_blocks + t * igdp.n_base_blocks,
        "fill must give b + t*f base blocks",
    )
    return _verified(
        Design(schema, tuple(base), provenance=f"hole-copies([{hgdd.provenance}], [{igdp.provenance}])"),
        "hgdd_fill_igdp",
    )


def fill_groups_of_gdd(master: Design, fillers: list[Design], fill_last: bool = False) -> Design:
    """Adjoin t common hole groups and fill each master group with an
    incomplete ingredient of type (gh)^(t_i + t, t).

    With r master groups and fillers for the first r-1 (or all r when
    fill_last), the output is an incomplete design whose hole is the
    unfilled last group plus the common groups (or just the common
    groups)."""
    mu, mv, mh = gdp_parameters(master)
    mc = canonical_gdp(master)
    r = mu
    _require(len(fillers) in (r - 1, r), "need r-1 or r fillers")
    fill_last = len(fillers) == r
    cfs = [canonical_igdpg(f) for f in fillers]
    t = gdp_parameters_igddg(cfs[0])[1]
    h = mh
    gh = len(cfs[0].schema.groups[0])
    g_rows = gh // h
    _require(all(gdp_parameters_igddg(cf)[1] == t for cf in cfs), "fillers disagree on t")
    _require(mv % g_rows == 0, "master group size not a multiple of the filler group size")

    # output groups: for master group i, t_i = mv // g_rows chunks; plus t
    # common groups
    blocks = []
    out_label: list = []
    chunk_of: dict = {}
    for i in range(r):
        t_i = mv // g_rows
        for c in range(t_i):
            out_label.append((i, c))
    n_out = len(out_label) + t
    label_idx = {lab: k for k, lab in enumerate(out_label)}

    def master_point(i, j, l):
        return (label_idx[(i, j // g_rows)], j % g_rows, l)

    for b in mc.base_blocks:
        blocks.append(frozenset(master_point(*p) for p in b))
    for i, cf in enumerate(cfs):
        fu, ft, fh = gdp_parameters_igddg(cf)
        _require(fu - ft == mv // g_rows, f"filler {i} does not fit the master group")
        for b in cf.base_blocks:
            nb = []
            for (fi, fj, fl) in b:
                if fi < fu - ft:
                    nb.append((label_idx[(i, fi)], fj, fl))
                else:
                    nb.append((len(out_label) + (fi - (fu - ft)), fj, fl))
            blocks.append(frozenset(nb))
    axes = (Axis(n_out), Axis(g_rows), Axis(h))
    groups = tuple(
        frozenset((i, j, l) for j in range(g_rows) for l in range(h)) for i in range(n_out)
    )
    if fill_last:
        hole_ids = list(range(len(out_label), n_out))
    else:
        t_last = mv // g_rows
        hole_ids = [label_idx[(r - 1, c)] for c in range(t_last)] + list(
            range(len(out_label), n_out)
        )
    hole_set = frozenset(
        (i, j, l) for i in hole_ids for j in range(g_rows) for l in range(h)
    )
    claim = CyclicClaim(length=h, axis=2)
    exact = master.schema.kind in ("GDD", "SCGDD") and all(
        cf.schema.kind == "IGDD-G" for cf in cfs
    )
    schema = Schema(
        kind="IGDD-G" if exact else "IGDP-G",
        axes=axes,
        groups=groups,
        hole_set=hole_set,
        cyclic=claim,
    )
    base = orbits.canonical_reps(blocks, claim, axes)
    want = master.n_base_blocks + sum(f.n_base_blocks for f in fillers)
    _require(len(base) == want, "group filling count mismatch")
    return _verified(
        Design(schema, tuple(base), provenance=f"fill-groups over [{master.provenance}]"),
        "fill_groups_of_gdd",
    )


def fill_scihgdd(outer: Design, inner: Design) -> Design:
    """Hole refinement for semi-cyclic incomplete holey designs,
    preserving the exempt pair set; b + f base blocks."""
    _require(outer.schema.kind == "SCIHGDD", "outer must be SCIHGDD")
    _require(inner.schema.kind == "SCIHGDD", "inner must be SCIHGDD")
    u, t, L, layer = _flat_holey_params(outer)
    ui, ti, Li, layer_i = _flat_holey_params(inner)
    _require(u == ui, "group counts differ")
    ax, axi = outer.schema.cyclic.axis, inner.schema.cyclic.axis
    N = outer.schema.axes[ax].modulus
    Ni = inner.schema.axes[axi].modulus
    _require(N == t * Ni, "inner does not fill one hole")
    _require(
        ax == axi and outer.schema.axes[:ax] == inner.schema.axes[:axi],
        "labelling must agree",
    )
    oY = {p[:ax] for p in outer.schema.hole_set}
    iY = {p[:axi] for p in inner.schema.hole_set}
    _require(oY == iY, "exempt group sets differ")
    blocks = list(outer.base_blocks)
    for b in inner.base_blocks:
        blocks.append(frozenset(p[:ax] + (p[ax] * t,) for p in b))
    pts = outer.schema.points
    n_holes = t * ti
    holes = tuple(
        frozenset(p for p in pts if p[ax] % n_holes == c) for c in range(n_holes)
    )
    claim = outer.schema.cyclic
    schema = Schema(
        kind="SCIHGDD",
        axes=outer.schema.axes,
        groups=outer.schema.groups,
        holes=holes,
        hole_set=outer.schema.hole_set,
        cyclic=claim,
    )
    base = orbits.canonical_reps(blocks, claim, outer.schema.axes)
    _require(
        len(base) == outer.n_base_blocks + inner.n_base_blocks,
        "refinement must produce b + f base blocks",
    )
    return _verified(
        Design(schema, tuple(base), provenance=f"refine-incomplete([{outer.provenance}], [{inner.provenance}])"),
        "fill_scihgdd",
    )


# ---------------------------------------------------------------------------
# perfect composition
# ---------------------------------------------------------------------------


def _anchor_offsets(block, ax: int, n: int, window: frozenset):
    """Order a block so the first point has shift 0 and the remaining
    shifts lie in the window; None if no anchoring works."""
    pts = sort_points(block)
    for anchor in pts:
        z0 = anchor[ax]
        rest = [p for p in pts if p is not anchor]
        if all((p[ax] - z0) % n in window for p in rest):
            return anchor, rest, z0
    return None


class _ParityUF:
    """Union-find over boolean variables with xor relations."""

    def __init__(self):
        self.parent: dict = {}
        self.off: dict = {}

    def find(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.off[x] = 0
            return x, 0
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        bit = 0
        for y in reversed(path):
            bit ^= self.off[y]
            self.parent[y] = x
            self.off[y] = bit
        return x, self.off[path[0]] if path else 0

    def relate(self, a, b, xor: int) -> bool:
        """Impose a ^ b == xor; False on contradiction."""
        ra, oa = self.find(a)
        rb, ob = self.find(b)
        if ra == rb:
            return (oa ^ ob) == xor
        self.parent[ra] = rb
        self.off[ra] = oa ^ ob ^ xor
        return True

    def value(self, x) -> int:
        _, bit = self.find(x)
        return bit


def _solve_anchor_parities(designs_blocks, w: int):
    """For shift modulus 2 only: assign each block an anchor parity so
    that, for every ordered cell pair, the sign of the odd offset
    difference agrees across all its coverings.

    designs_blocks: list of (tag, blocks) with 3-coordinate points whose
    shift coordinate is axis 2.  Returns {(tag, idx): parity}."""
    uf = _ParityUF()
    ok = True
    for tag, blocks in designs_blocks:
        for bi, b in enumerate(blocks):
            pts = sort_points(b)
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    P, Q = pts[i][:2], pts[j][:2]
                    zp, zq = pts[i][2] % 2, pts[j][2] % 2
                    if zp == zq:
                        continue
                    # sign(P->Q) positive iff the anchor parity equals zp;
                    # encode s_{P<Q} = alpha ^ zp
                    ok &= uf.relate(("s", P, Q), ("a", tag, bi), zp)
    if not ok:
        raise CompositionError("no consistent anchoring exists for the window composition")
    return {
        key[1:]: uf.value(key)
        for key in list(uf.parent)
        if key[0] == "a"
    }


def perfect_compose(p1: Design, p2: Design, schgdd: Design) -> Design:
    """Window composition: a perfect w-cyclic incomplete design, an
    h-perfect hw-cyclic one, and a semi-cyclic holey design on k groups
    with hole layer h combine into an hm-perfect hmw-cyclic incomplete
    design; count = |p1| * h(m-1) + |p2|."""
    c1 = canonical_igdph(p1)
    c2 = canonical_igdph(p2)
    w = c1.schema.cyclic.length
    hw = c2.schema.cyclic.length
    _require(hw % w == 0, "cycle lengths incompatible")
    h = hw // w
    u = len(c1.schema.groups)
    _require(len(c2.schema.groups) == u, "group counts differ")
    v = len(c1.schema.groups[0]) // w
    _require(len(c2.schema.groups[0]) // hw == v, "level counts differ")
    t1 = len(c1.schema.hole_set) // (u * w)
    t2 = len(c2.schema.hole_set) // (u * hw)
    _require(t1 == t2, "hole layers differ")

    us, ts, L, layer = _flat_holey_params(schgdd)
    hm = us and L
    _require(layer == h, f"holey ingredient layer {layer} != {h}")
    m = ts
    hm = h * m
    k = len(schgdd.schema.groups)
    from .verify import window as _window

    win1 = _window(1, w)
    win2 = _window(h, w)
    # difference-coverage property of the holey ingredient
    diffs: dict = {}
    for b in schgdd.base_blocks:
        ds = {p[0]: p[1] for p in b}
        _require(len(ds) == k, "holey ingredient blocks must be transverse")
        for a in range(k):
            for bb in range(k):
                if a != bb:
                    diffs.setdefault((a, bb), set()).add((ds[a] - ds[bb]) % hm)
    want_diffs = set(range(hm)) - {m * y for y in range(h)}
    for key, got in diffs.items():
        _require(got == want_diffs, f"difference coverage fails at {key}")

    Nout = hm * w

    def anchored(b, n, window, parity):
        """(anchor, rest, z0) with the anchor chosen by parity when the
        shift modulus is 2, else by the window."""
        pts = sort_points(b)
        if parity is not None:
            for anchor in pts:
                if anchor[2] % 2 == parity:
                    return anchor, [p for p in pts if p is not anchor], anchor[2]
            # single-parity block: no odd pairs, any anchor is consistent
            return pts[0], pts[1:], pts[0][2]
        return _anchor_offsets(b, 2, n, window)

    # with a two-value shift every anchoring fits the window, but the
    # offset-sign structure must agree globally across both ingredients;
    # solve for anchor parities before composing
    parities: dict = {}
    if w == 2:
        parities = _solve_anchor_parities(
            [("p1", c1.base_blocks), ("p2", c2.base_blocks)], w
        )

    blocks = []
    for bi, b in enumerate(c1.base_blocks):
        a = anchored(b, w, win1, parities.get(("p1", bi)))
        _require(a is not None, "first ingredient is not in perfect form")
        anchor, rest, z0 = a
        pts = [anchor] + rest
        for sb in schgdd.base_blocks:
            ds = {p[0]: p[1] for p in sb}
            nb = []
            for s, p in enumerate(pts):
                off = (p[2] - z0) % w
                nz = (off + (ds[s] - ds[0]) * w) % Nout
                nb.append((p[0], p[1], nz))
            blocks.append(frozenset(nb))
    for bi, b in enumerate(c2.base_blocks):
        a = anchored(b, hw, win2, parities.get(("p2", bi)))
        _require(a is not None, "second ingredient is not h-perfect")
        anchor, rest, z0 = a
        nb = [(anchor[0], anchor[1], 0)]
        for p in rest:
            off = (p[2] - z0) % hw
            x, y = off % w, off // w
            nb.append((p[0], p[1], (x + y * m * w) % Nout))
        blocks.append(frozenset(nb))

    axes = (Axis(u), Axis(v), Axis(Nout))
    groups = tuple(
        frozenset((i, j, l) for j in range(v) for l in range(Nout)) for i in range(u)
    )
    hole_set = frozenset(
        (i, j, l) for i in range(u) for j in range(t1) for l in range(Nout)
    )
    claim = CyclicClaim(length=Nout, axis=2)
    exact = c1.schema.kind == "IGDD-H" and c2.schema.kind == "IGDD-H"
    schema = Schema(
        kind="IGDD-H" if exact else "IGDP-H",
        axes=axes,
        groups=groups,
        hole_set=hole_set,
        cyclic=claim,
    )
    base = orbits.canonical_reps(blocks, claim, axes)
    want = p1.n_base_blocks * h * (m - 1) + p2.n_base_blocks
    _require(len(base) == want, f"count {len(base)} != |p1|*h(m-1) + |p2| = {want}")
    out = _verified(
        Design(
            schema,
            tuple(base),
            provenance=f"window-compose([{p1.provenance}], [{p2.provenance}], [{schgdd.provenance}])",
        ),
        "perfect_compose",
    )
    hv = check_h_perfect(out, hm, w)
    _require(hv.ok, "output is not hm-perfect")
    return out


# ---------------------------------------------------------------------------
# the small-parameter endpoint assembly
# ---------------------------------------------------------------------------


def assemble_lemma52(w: int, budget: int = 10**8, seed: int = 0) -> Design:
    """Optimal semi-cyclic packing of type w^11 for w = 10 (mod 12), with
    (55w-4)/3 base blocks: holey designs over a pairwise balanced master
    plus the rescaled star packing."""
    _require(w % 12 == 10, f"need w = 10 (mod 12), got {w}")
    from . import catalog as _catalog, search

    pbd = search.find_pbd(11, (3,), star=5, budget=budget, seed=seed)
    star_block = frozenset((x,) for x in range(5))
    sch3 = search.find_schgdd(3, 2, w // 2, budget=budget, seed=seed)
    sch5 = search.find_schgdd(5, 1, w, budget=budget, seed=seed)
    star = _catalog.catalog_get("Ex5.1")

    blocks = []
    for mb in pbd.base_blocks:
        if mb == star_block:
            continue
        labels = sorted(x for (x,) in mb)
        for b in sch3.base_blocks:
            blocks.append(frozenset((labels[a], z) for (a, z) in b))
    for b in sch5.base_blocks:
        blocks.append(frozenset(b))  # groups 0..4 are the star block
    for b in star.base_blocks:
        blocks.append(frozenset((a, x * w // 2) for (a, x) in b))

    axes = (Axis(11), Axis(w))
    groups = tuple(frozenset((i, z) for z in range(w)) for i in range(11))
    claim = CyclicClaim(length=w, axis=1)
    schema = Schema(kind="SCGDP", axes=axes, groups=groups, cyclic=claim)
    base = orbits.canonical_reps(blocks, claim, axes)
    want = (55 * w - 4) // 3
    _require(len(base) == want, f"count {len(base)} != (55w-4)/3 = {want}")
    d = _verified(
        Design(schema, tuple(base), provenance=f"assembled w^11 endpoint, w={w}"),
        "assemble_lemma52",
    )
    from .verify import assert_optimal

    verdict = assert_optimal(d)
    _require(verdict.ok, "assembled packing is not optimal")
    return d


def restrict_claim(d: Design, new_len: int) -> Design:
    """Weaken a shift claim to the subgroup of the given order (a
    divisor); base blocks re-expand accordingly."""
    c = d.schema.cyclic
    _require(c is not None and c.axis is not None, "needs a shift claim")
    _require(c.length % new_len == 0, f"{new_len} does not divide {c.length}")
    if new_len == c.length:
        return d
    k = c.length // new_len
    new_claim = CyclicClaim(length=new_len, axis=c.axis, step=c.step * k, layer=c.layer)
    full = orbits.expand_design_blocks(d.base_blocks, c, d.schema.axes)
    base = orbits.canonical_reps(full, new_claim, d.schema.axes)
    _require(len(base) == d.n_base_blocks * k, "claim restriction must multiply blocks")
    schema = Schema(
        kind=d.schema.kind,
        axes=d.schema.axes,
        groups=d.schema.groups,
        holes=d.schema.holes,
        hole_set=d.schema.hole_set,
        cyclic=new_claim,
        star_t=d.schema.star_t,
    )
    return _verified(Design(schema, tuple(base), provenance=d.provenance), "restrict_claim")


def canonical_layered(d: Design) -> Design:
    """Relabel a layered holey design onto (I_u, I_v, Z_N) (or (I_u, Z_N)
    when there is no level axis), preserving shift-residue holes."""
    s = d.schema
    _require(s.kind in ("HGDD", "SCHGDD", "IHGDD", "SCIHGDD"), "not a layered kind")
    u, t, L, layer = _flat_holey_params(d)
    ax = s.cyclic.axis
    N = s.axes[ax].modulus
    flat = len(s.axes) == 2
    mapping = {}
    hole_groups = set()
    for i, g in enumerate(_sorted_groups(d)):
        if s.hole_set and g <= s.hole_set:
            hole_groups.add(i)
        rows: dict = {}
        for p in g:
            rows.setdefault(p[:ax] + p[ax + 1 :], []).append(p)
        keys = sorted(rows, key=lambda k: point_key(tuple(k)))
        for j, keyrow in enumerate(keys):
            for p in rows[keyrow]:
                mapping[p] = (i, p[ax]) if flat else (i, j, p[ax])
    blocks = [frozenset(mapping[p] for p in b) for b in d.base_blocks]
    v = len(s.groups[0]) // N
    axes = (Axis(u), Axis(N)) if flat else (Axis(u), Axis(v), Axis(N))
    zax = len(axes) - 1
    pts = {mapping[p] for g in s.groups for p in g}
    groups = tuple(frozenset(p for p in pts if p[0] == i) for i in range(u))
    holes = tuple(frozenset(p for p in pts if p[zax] % t == c) for c in range(t))
    hole_set = None
    if s.hole_set is not None:
        hole_set = frozenset(p for p in pts if p[0] in hole_groups)
    claim = CyclicClaim(length=s.cyclic.length, axis=zax, step=s.cyclic.step, layer=s.cyclic.layer)
    schema = Schema(
        kind=s.kind, axes=axes, groups=groups, holes=holes, hole_set=hole_set, cyclic=claim
    )
    base = orbits.canonical_reps(blocks, claim, axes)
    return Design(schema, tuple(base), provenance=d.provenance)


def fill_ihgdd_holes(ihgdd: Design, filler: Design) -> Design:
    """Fill the holes of an incomplete layered design with a plain
    incomplete packing whose group hole matches the exempt groups;
    output is a cyclic incomplete packing with b + f base blocks."""
    ci = canonical_layered(ihgdd)
    _require(ci.schema.kind in ("IHGDD", "SCIHGDD"), "host must be incomplete layered")
    u, t, L, layer = _flat_holey_params(ci)
    _require(L == ci.schema.axes[ci.schema.cyclic.axis].modulus, "claim must span the shift axis")
    g = L // t
    _require(g * t == L, "layer arithmetic")
    fc = canonical_igdpg(filler) if filler.schema.kind in ("IGDP-G", "IGDD-G") else None
    _require(fc is not None, "filler must be a group-hole incomplete packing")
    fu, ft, fh = gdp_parameters_igddg(fc)
    _require(fu == u and fh == 1, "filler must be a plain design on the group set")
    _require(len(fc.schema.groups[0]) == g, "filler group size must match the hole layer")
    flat = len(ci.schema.axes) == 2
    _require(flat, "host must be flat")
    host_hole_groups = {
        i for i, gset in enumerate(ci.schema.groups) if gset <= ci.schema.hole_set
    }
    filler_hole = set(range(fu - ft, fu))
    # align filler groups: non-hole -> non-hole, hole -> hole (sorted)
    nonhole_host = sorted(set(range(u)) - host_hole_groups)
    hole_host = sorted(host_hole_groups)
    _require(len(hole_host) == ft, "exempt group counts differ")
    relabel = {}
    for i, lab in zip(sorted(set(range(fu)) - filler_hole), nonhole_host):
        relabel[i] = lab
    for i, lab in zip(sorted(filler_hole), hole_host):
        relabel[i] = lab
    blocks = list(ci.base_blocks)
    for b in fc.base_blocks:
        blocks.append(frozenset((relabel[i], (z * t) % L) for (i, j, z) in b))
    claim = ci.schema.cyclic
    schema = Schema(
        kind="IGDP-G",
        axes=ci.schema.axes,
        groups=ci.schema.groups,
        hole_set=ci.schema.hole_set,
        cyclic=claim,
    )
    base = orbits.canonical_reps(blocks, claim, ci.schema.axes)
    _require(
        len(base) == ihgdd.n_base_blocks + filler.n_base_blocks,
        "fill must give b + f base blocks",
    )
    return _verified(
        Design(schema, tuple(base), provenance=f"fill-exempt([{ihgdd.provenance}], [{filler.provenance}])"),
        "fill_ihgdd_holes",
    )


def split_semicyclic(core: Design, g: int) -> Design:
    """Reshape a flat semi-cyclic holey design of type (u, g^w) (cycle
    g*w) into the (g, w, 1)-layered form with a unit-step cycle of length
    w; needs gcd(g, w) = 1."""
    _require(core.schema.kind == "SCHGDD", "core must be semi-cyclic holey")
    u, t, L, layer = _flat_holey_params(core)
    w = t
    _require(layer == g, f"hole layer {layer} != {g}")
    _require(gcd(g, w) == 1, "layer and cycle must be coprime to split")
    ax = core.schema.cyclic.axis
    _require(ax == len(core.schema.axes) - 1 and len(core.schema.axes) == 2, "flat core only")
    ginv = pow(g, -1, w) if w > 1 else 0

    def remap(p):
        gl, z = p
        return (gl, z % g, (z % w) * ginv % w)

    full = orbits.expand_design_blocks(core.base_blocks, core.schema.cyclic, core.schema.axes)
    blocks = [frozenset(remap(p) for p in b) for b in full]
    axes = (core.schema.axes[0], Axis(g), Axis(w))
    pts = {remap(p) for gr in core.schema.groups for p in gr}
    groups = tuple(
        frozenset(p for p in pts if p[0] == min(gr, key=point_key)[0])
        for gr in core.schema.groups
    )
    holes = tuple(frozenset(p for p in pts if p[2] == c) for c in range(w))
    claim = CyclicClaim(length=w, axis=2, layer=(("g", 1), ("h", g), ("m", 1), ("t", w)))
    schema = Schema(kind="HGDD", axes=axes, groups=groups, holes=holes, cyclic=claim)
    base = orbits.canonical_reps(blocks, claim, axes)
    _require(len(base) == core.n_base_blocks * g, "split must multiply base blocks by g")
    return _verified(
        Design(schema, tuple(base), provenance=f"layer-split of [{core.provenance}]"),
        "split_semicyclic",
    )
