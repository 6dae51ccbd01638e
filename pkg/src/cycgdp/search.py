"""Backtracking oracle: maximum cyclic packings on small instances and
existence search for small ingredient designs.

Everything works at the orbit level: points collapse to point-orbits,
pairs to pair-orbits, and candidate base blocks are canonical orbit
representatives (first point anchored at shift 0).  Certified maxima are
true maxima for the instance; the branch-and-bound uses only generic
counting arguments (capacity and degree-parity of the leftover pair
graph), never the bound formulas it is used to check.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from itertools import combinations, product
from random import Random

from .core import Axis, CyclicClaim, Design, Schema
from .verify import verify

sys.setrecursionlimit(100000)


class NotFoundError(Exception):
    """Exhaustive search proved no such design exists at this size."""


class BudgetExceededError(Exception):
    """Search hit the node budget; the outcome is inconclusive."""


class _Budget(Exception):
    pass


class _Found(Exception):
    pass


@dataclass
class SearchResult:
    best: Design | None
    certified_max: int | None
    nodes_explored: int
    time: float


class _Engine:
    """Shared exact-cover / maximum-packing backtracker over pair-orbits.

    mode "exact": cover every orbit exactly once (no skips).
    mode "pack": maximize block count (triples only); skips allowed,
    pruned by capacity and leftover-parity bounds.
    """

    def __init__(
        self,
        n_orbits,
        cand_orbits,
        orbit_points=None,
        n_points=0,
        multi=True,
        dpar=None,
        two_diffs=False,
    ):
        self.n_orbits = n_orbits
        self.cand_orbits = cand_orbits
        self.orbit_cands = [[] for _ in range(n_orbits)]
        for c, orbs in enumerate(cand_orbits):
            for o in orbs:
                self.orbit_cands[o].append(c)
        self.orbit_points = orbit_points
        self.multi = multi
        # leftover difference-sum parity: every block covers differences
        # summing to 0 mod 2 (x2 + x3 + (x3 - x2)), so when the shift
        # modulus is even the leftover's parity is fixed at the root
        self.dpar = dpar
        self.two_diffs = two_diffs
        self.status = bytearray(n_orbits)
        self.dead = [0] * len(cand_orbits)
        self.cnt = [len(self.orbit_cands[o]) for o in range(n_orbits)]
        self.U = n_orbits
        if orbit_points is not None:
            self.free = [0] * n_points
            for pts in orbit_points:
                for p in pts:
                    self.free[p] += 1
            self.odd = sum(1 for f in self.free if f % 2 == 1)
            self.S = sum(f // 2 for f in self.free)
        self.nodes = 0
        self.budget = 10**8
        self.sel: list[int] = []
        self.best = -1
        self.best_sel: list[int] = []

    # -- state updates ----------------------------------------------------
    def _close(self, o: int, st: int):
        self.status[o] = st
        self.U -= 1
        for c in self.orbit_cands[o]:
            self.dead[c] += 1
            if self.dead[c] == 1:
                for o2 in self.cand_orbits[c]:
                    self.cnt[o2] -= 1
        if self.orbit_points is not None:
            for p in self.orbit_points[o]:
                f = self.free[p]
                if f % 2 == 0:
                    self.S -= 1
                    self.odd += 1
                else:
                    self.odd -= 1
                self.free[p] = f - 1

    def _open(self, o: int):
        self.status[o] = 0
        self.U += 1
        for c in self.orbit_cands[o]:
            self.dead[c] -= 1
            if self.dead[c] == 0:
                for o2 in self.cand_orbits[c]:
                    self.cnt[o2] += 1
        if self.orbit_points is not None:
            for p in self.orbit_points[o]:
                f = self.free[p]
                if f % 2 == 1:  # count was even before the close
                    self.S += 1
                    self.odd -= 1
                else:
                    self.odd += 1
                self.free[p] = f + 1

    def _place(self, c: int):
        for o in self.cand_orbits[c]:
            self._close(o, 1)
        self.sel.append(c)

    def _unplace(self, c: int):
        self.sel.pop()
        for o in self.cand_orbits[c]:
            self._open(o)

    # -- bound ------------------------------------------------------------
    def _min_leftover(self) -> int:
        U, odd = self.U, self.odd
        if odd > 0:
            lo = (odd + 1) // 2
            return lo + ((U - lo) % 3)
        r = U % 3
        if r == 0:
            # empty leftover needs parity 0; otherwise a triangle
            return 0 if self.dpar in (None, 0) else 3
        if r == 1:
            return 4
        if not self.multi:
            return 5
        # a lone parallel pair over two shift values has parity 1
        if self.two_diffs and self.dpar == 0:
            return 5
        return 2

    def _bound(self) -> int:
        cap = (self.U - self._min_leftover()) // 3
        if cap < 0:
            cap = 0
        deg = self.S // 3
        return len(self.sel) + min(cap, deg)

    # -- searches ----------------------------------------------------------
    def _pick(self) -> int:
        best_o, best_c = -1, 1 << 30
        status = self.status
        cnt = self.cnt
        for o in range(self.n_orbits):
            if status[o] == 0 and cnt[o] < best_c:
                best_o, best_c = o, cnt[o]
                if best_c <= 1:
                    break
        return best_o

    def exact(self, rng: Random | None = None) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget
        if self.U == 0:
            return True
        o = self._pick()
        if self.cnt[o] == 0:
            return False
        cands = [c for c in self.orbit_cands[o] if self.dead[c] == 0]
        if rng is not None:
            rng.shuffle(cands)
        for c in cands:
            self._place(c)
            if self.exact(rng):
                return True
            self._unplace(c)
        return False

    def pack(self, target: int | None, exhaust: bool, rng: Random | None = None):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget
        if len(self.sel) > self.best:
            self.best = len(self.sel)
            self.best_sel = list(self.sel)
            if target is not None and self.best >= target and not exhaust:
                raise _Found
        if self.U == 0 or self._bound() <= self.best:
            return
        o = self._pick()
        cands = [c for c in self.orbit_cands[o] if self.dead[c] == 0]
        if rng is not None:
            rng.shuffle(cands)
        for c in cands:
            self._place(c)
            self.pack(target, exhaust, rng)
            self._unplace(c)
        # leave o uncovered forever
        self._close(o, 2)
        self.pack(target, exhaust, rng)
        self._open(o)


# ---------------------------------------------------------------------------
# w-cyclic packings of type (vw)^u
# ---------------------------------------------------------------------------


def _uvw_universe(u: int, v: int, w: int):
    """Pair-orbit index and candidate list for I_u x I_v x Z_w."""
    n_points = u * v
    pair_idx: dict[tuple, int] = {}
    orbit_points: list[tuple[int, int]] = []
    for p1 in range(n_points):
        for p2 in range(p1 + 1, n_points):
            if p1 // v == p2 // v:
                continue
            for d in range(w):
                pair_idx[(p1, p2, d)] = len(orbit_points)
                orbit_points.append((p1, p2))
    cands: list[tuple] = []
    cand_orbits: list[tuple] = []
    for i1, i2, i3 in combinations(range(u), 3):
        for j1, j2, j3 in product(range(v), repeat=3):
            p1, p2, p3 = i1 * v + j1, i2 * v + j2, i3 * v + j3
            for x2 in range(w):
                for x3 in range(w):
                    cands.append((p1, p2, p3, x2, x3))
                    cand_orbits.append(
                        (
                            pair_idx[(p1, p2, x2)],
                            pair_idx[(p1, p3, x3)],
                            pair_idx[(p2, p3, (x3 - x2) % w)],
                        )
                    )
    return len(orbit_points), orbit_points, n_points, cands, cand_orbits


def _uvw_design(u: int, v: int, w: int, sel_blocks, provenance: str) -> Design:
    axes = (Axis(u), Axis(v), Axis(w))
    groups = tuple(
        frozenset((i, j, l) for j in range(v) for l in range(w)) for i in range(u)
    )
    kind = "SCGDP" if v == 1 and w > 1 else "GDP"
    schema = Schema(
        kind=kind, axes=axes, groups=groups, cyclic=CyclicClaim(length=w, axis=2)
    )
    blocks = []
    for p1, p2, p3, x2, x3 in sel_blocks:
        blocks.append(
            frozenset(
                ((p1 // v, p1 % v, 0), (p2 // v, p2 % v, x2), (p3 // v, p3 % v, x3))
            )
        )
    from .core import sort_blocks

    return Design(schema=schema, base_blocks=tuple(sort_blocks(blocks)), provenance=provenance)


def _find_at_least(make_engine, t: int, budget: int, seed: int, restarts: int = 6, parallel=None):
    """Try to find a packing of at least t blocks.

    Returns (selection or None, proven_impossible, nodes_used).  A
    perfect target (3t = U) runs as a skip-free exact cover; a slack-2
    target over an even-parity universe decomposes into exact covers,
    one per possible leftover parallel pair; everything else runs as a
    target-bounded pack search.  Any attempt that exhausts its space
    without hitting the budget is a proof of impossibility.
    """
    nodes = 0
    probe = make_engine()
    slack = probe.U - 3 * t

    if slack == 2 and probe.odd == 0 and probe.multi and parallel:
        # a packing of t blocks leaves exactly 2 orbits uncovered, and the
        # leftover pair graph must have even degrees: the two leftovers
        # are parallel orbits between one point-orbit pair.  The caller
        # passes one representative per equivalence class of leftovers.
        for o1, o2 in parallel:
            eng = make_engine()
            eng.budget = budget - nodes
            eng._close(o1, 2)
            eng._close(o2, 2)
            try:
                ok = eng.exact(None)
            except _Budget:
                nodes += eng.nodes
                return None, False, nodes
            nodes += eng.nodes
            if ok:
                return list(eng.sel), False, nodes
        return None, True, nodes

    attempt = 0
    while nodes < budget:
        eng = make_engine()
        eng.budget = min(50000 << attempt, budget - nodes)
        rng = Random((seed << 8) + attempt) if attempt > 0 else None
        try:
            if slack == 0:
                ok = eng.exact(rng)
                nodes += eng.nodes
                if ok:
                    return list(eng.sel), False, nodes
                return None, True, nodes
            eng.best = t - 1
            eng.pack(t, False, rng)
            nodes += eng.nodes
            return None, True, nodes  # full space explored, nothing >= t
        except _Found:
            nodes += eng.nodes
            return list(eng.best_sel), False, nodes
        except _Budget:
            nodes += eng.nodes
            attempt += 1
    return None, False, nodes  # inconclusive


def max_packing(
    u: int,
    v: int,
    w: int,
    target: int | None = None,
    exhaust: bool = False,
    budget: int = 10**8,
    seed: int = 0,
) -> SearchResult:
    """Maximum w-cyclic 3-packing of type (vw)^u, counted in base blocks.

    With exhaust, the search proves the maximum (subject to the budget)
    and sets certified_max.  With target, stops at the first packing of
    that size.  The strategy descends from the counting bound: each
    failed level is a completed refutation, so the first level with a
    packing is the certified maximum.
    """
    if u < 3:
        raise ValueError("need u >= 3")
    t0 = time.time()
    n_orbits, orbit_points, n_points, cands, cand_orbits = _uvw_universe(u, v, w)
    # canonical slack-2 leftovers: all parallel pairs are equivalent under
    # group/level relabelings, shift-translations and negation, so one
    # representative per difference gap is enough
    n_pairs = n_orbits // w if w else 0
    dpar = (n_pairs * (w * (w - 1) // 2)) % 2 if w % 2 == 0 else None
    base_orbits = [o for o, pts in enumerate(orbit_points) if pts == (0, v)]
    # slack-2 leftover representatives {0, g}, filtered by the parity the
    # leftover must carry when the shift modulus is even
    parallel = [
        (base_orbits[0], base_orbits[g])
        for g in range(1, w // 2 + 1)
        if w >= 2 and (dpar is None or g % 2 == dpar)
    ]

    def make_engine():
        return _Engine(
            n_orbits,
            cand_orbits,
            orbit_points,
            n_points,
            multi=(w >= 2),
            dpar=dpar,
            two_diffs=(w == 2),
        )

    ub = make_engine()._bound()
    nodes_total = 0
    best_sel: list[int] | None = None
    best_size = -1
    certified = False

    if target is not None and not exhaust:
        sel, refuted, nodes_total = _find_at_least(make_engine, target, budget, seed, parallel=parallel)
        if sel is not None:
            best_sel, best_size = sel, len(sel)
            certified = best_size >= ub
        elif refuted:
            raise NotFoundError(f"no packing of {target} base blocks exists (max < {target})")
        else:
            raise BudgetExceededError(f"budget {budget} exhausted (inconclusive)")
    else:
        t = ub
        clean_descent = True
        while t >= 0:
            sel, refuted, used = _find_at_least(make_engine, t, budget - nodes_total, seed, parallel=parallel)
            nodes_total += used
            if sel is not None:
                best_sel, best_size = sel, len(sel)
                certified = clean_descent
                break
            if refuted:
                t -= 1
                continue
            clean_descent = False
            break
        if best_sel is None or (exhaust and not certified):
            # fall back to the single full branch-and-bound
            eng = make_engine()
            eng.budget = budget - nodes_total
            if best_sel is not None:
                # seed the incumbent so only better packings are explored
                eng.best = best_size
                eng.best_sel = list(best_sel)
            try:
                eng.pack(None, True, None)
                certified = True
            except _Budget:
                if exhaust:
                    raise BudgetExceededError(
                        f"budget {budget} exhausted at {nodes_total + eng.nodes} nodes"
                    )
            nodes_total += eng.nodes
            best_sel, best_size = eng.best_sel, eng.best

    design = _uvw_design(
        u, v, w, [cands[c] for c in best_sel or []], f"search: max_packing({u},{v},{w}) seed={seed}"
    )
    res = SearchResult(
        best=design,
        certified_max=best_size if certified else None,
        nodes_explored=nodes_total,
        time=time.time() - t0,
    )
    verdict = verify(design)
    if not verdict.ok:
        raise AssertionError(f"search produced an invalid packing: {verdict.summary()}")
    return res


# ---------------------------------------------------------------------------
# ingredient designs
# ---------------------------------------------------------------------------


def _exact_with_restarts(make_engine, budget: int, seed: int):
    """Run an exact-cover engine with seeded restarts on an escalating
    node-budget schedule.

    Returns (engine, ok, nodes, complete).  ok False from a completed
    (non-budget) exhaustion proves nonexistence.
    """
    total_nodes = 0
    attempt = 0
    while total_nodes < budget:
        eng = make_engine()
        slice_budget = min(50000 << attempt, budget - total_nodes)
        eng.budget = slice_budget
        rng = Random((seed << 8) + attempt) if attempt > 0 else None
        try:
            ok = eng.exact(rng)
            total_nodes += eng.nodes
            return eng, ok, total_nodes, True
        except _Budget:
            total_nodes += eng.nodes
            attempt += 1
    raise BudgetExceededError(f"budget {budget} exhausted (inconclusive)")


def find_gdd(
    group_sizes: list[int],
    sizes: tuple[int, ...] = (3,),
    forced_blocks: list[frozenset] | None = None,
    budget: int = 10**8,
    seed: int = 0,
    points: list | None = None,
    groups: list[frozenset] | None = None,
) -> Design:
    """Plain (1-cyclic) GDD with the given group sizes and block sizes.

    Points are 1-tuples; pass explicit ``points``/``groups`` to control
    labels.  Forced blocks are pre-placed (the star block of a PBD).
    """
    if groups is None:
        labels = points or list(range(sum(group_sizes)))
        pts = [(x,) for x in labels]
        groups = []
        at = 0
        for gs in group_sizes:
            groups.append(frozenset(pts[at : at + gs]))
            at += gs
    else:
        groups = [frozenset(g) for g in groups]
    gidx = {}
    for i, g in enumerate(groups):
        for p in g:
            gidx[p] = i
    from .core import sort_points

    plist = sort_points(gidx)
    pnum = {p: i for i, p in enumerate(plist)}

    pair_idx: dict[tuple, int] = {}
    for a, b in combinations(range(len(plist)), 2):
        if gidx[plist[a]] != gidx[plist[b]]:
            pair_idx[(a, b)] = len(pair_idx)

    def block_orbs(blk_nums):
        return tuple(pair_idx[p] for p in combinations(sorted(blk_nums), 2))

    cands, cand_orbits = [], []
    for k in sizes:
        for blk in combinations(range(len(plist)), k):
            gs = [gidx[plist[x]] for x in blk]
            if len(set(gs)) != k:
                continue
            try:
                orbs = block_orbs(blk)
            except KeyError:
                continue
            cands.append(blk)
            cand_orbits.append(orbs)

    forced_nums = [tuple(sorted(pnum[p] for p in b)) for b in (forced_blocks or [])]

    def make_engine():
        eng = _Engine(len(pair_idx), cand_orbits)
        for blk in forced_nums:
            for o in block_orbs(blk):
                eng._close(o, 1)
        return eng

    eng, ok, nodes, complete = _exact_with_restarts(make_engine, budget, seed)
    if not ok:
        raise NotFoundError(
            f"no GDD of type {GroupTypeStr(group_sizes)} with block sizes {sizes}"
        )
    blocks = [frozenset(plist[x] for x in blk) for blk in (forced_nums + [cands[c] for c in eng.sel])]
    kind = "PBD" if all(gs == 1 for gs in group_sizes) else "GDD"
    ints = [p[0] for p in plist if isinstance(p[0], int)]
    syms = tuple(sorted(p[0] for p in plist if isinstance(p[0], str)))
    axes = (Axis(max(ints) + 1 if ints else None, syms),)
    schema = Schema(kind=kind, axes=axes, groups=tuple(groups))
    from .core import sort_blocks

    return Design(
        schema=schema,
        base_blocks=tuple(sort_blocks(blocks)),
        provenance=f"search: {kind} {GroupTypeStr(group_sizes)} sizes={sizes} seed={seed}",
    )


def GroupTypeStr(sizes) -> str:
    from .core import GroupType

    return str(GroupType.of_sizes(sizes))


def find_pbd(
    u: int, sizes: tuple[int, ...], star: int | None = None, budget: int = 10**8, seed: int = 0
) -> Design:
    """PBD(u, sizes) with an optional single distinguished block of size
    ``star`` placed on {0..star-1}."""
    forced = [frozenset((x,) for x in range(star))] if star else None
    return find_gdd([1] * u, sizes=sizes, forced_blocks=forced, budget=budget, seed=seed)


def find_schgdd(u: int, g: int, t: int, budget: int = 10**8, seed: int = 0) -> Design:
    """Semi-cyclic 3-HGDD of type (u, g^t) by orbit-level exact cover."""
    gt = g * t
    pair_idx: dict[tuple, int] = {}
    for a, b in combinations(range(u), 2):
        for d in range(gt):
            if d % t == 0:
                continue
            pair_idx[(a, b, d)] = len(pair_idx)
    cands, cand_orbits = [], []
    for a, b, c in combinations(range(u), 3):
        for d2 in range(gt):
            if d2 % t == 0:
                continue
            for d3 in range(gt):
                if d3 % t == 0 or (d3 - d2) % t == 0:
                    continue
                cands.append((a, b, c, d2, d3))
                cand_orbits.append(
                    (
                        pair_idx[(a, b, d2)],
                        pair_idx[(a, c, d3)],
                        pair_idx[(b, c, (d3 - d2) % gt)],
                    )
                )

    def make_engine():
        return _Engine(len(pair_idx), cand_orbits)

    eng, ok, nodes, complete = _exact_with_restarts(make_engine, budget, seed)
    if not ok:
        raise NotFoundError(f"no 3-SCHGDD of type ({u},{g}^{t}) (exhaustive)")
    axes = (Axis(u), Axis(gt))
    groups = tuple(frozenset((i, z) for z in range(gt)) for i in range(u))
    holes = tuple(
        frozenset((i, j + k * t) for i in range(u) for k in range(g)) for j in range(t)
    )
    claim = CyclicClaim(length=gt, axis=1, layer=(("g", g), ("h", 1), ("m", 1), ("t", t)))
    blocks = [
        frozenset(((a, 0), (b, d2), (c, d3))) for (a, b, c, d2, d3) in (cands[i] for i in eng.sel)
    ]
    from .core import sort_blocks

    d = Design(
        schema=Schema(kind="SCHGDD", axes=axes, groups=groups, holes=holes, cyclic=claim),
        base_blocks=tuple(sort_blocks(blocks)),
        provenance=f"search: 3-SCHGDD ({u},{g}^{t}) seed={seed}",
    )
    verdict = verify(d)
    if not verdict.ok:
        raise AssertionError(f"searched SCHGDD fails verification: {verdict.summary()}")
    return d


def find_cyclic_gdd(
    u: int, v: int, w: int, budget: int = 10**8, seed: int = 0
) -> Design:
    """w-cyclic 3-GDD of type (vw)^u by orbit-level exact cover."""
    n_orbits, orbit_points, n_points, cands, cand_orbits = _uvw_universe(u, v, w)

    def make_engine():
        return _Engine(n_orbits, cand_orbits)

    eng, ok, nodes, complete = _exact_with_restarts(make_engine, budget, seed)
    if not ok:
        raise NotFoundError(f"no w-cyclic 3-GDD of type ({v * w})^{u} with w={w}")
    d = _uvw_design(u, v, w, [cands[c] for c in eng.sel], f"search: GDD ({v*w})^{u} w={w} seed={seed}")
    kind = "SCGDD" if v == 1 and w > 1 else "GDD"
    d = Design(
        schema=Schema(
            kind=kind,
            axes=d.schema.axes,
            groups=d.schema.groups,
            cyclic=d.schema.cyclic,
        ),
        base_blocks=d.base_blocks,
        provenance=d.provenance,
    )
    verdict = verify(d)
    if not verdict.ok:
        raise AssertionError(f"searched GDD fails verification: {verdict.summary()}")
    return d


def find_cyclic_gdp(
    u: int, v: int, w: int, target: int, budget: int = 10**8, seed: int = 0
) -> Design:
    """w-cyclic 3-GDP of type (vw)^u with at least ``target`` base blocks."""
    res = max_packing(u, v, w, target=target, budget=budget, seed=seed)
    if res.best is None or res.best.n_base_blocks < target:
        raise NotFoundError(
            f"no w-cyclic 3-GDP of type ({v * w})^{u} with {target} base blocks found"
        )
    return res.best


def find_design(kind: str, budget: int = 10**8, seed: int = 0, **params) -> Design:
    """Dispatch by kind keyword: GDD, PBD, SCHGDD, CYC-GDD, CYC-GDP."""
    if kind == "GDD":
        return find_gdd(params["group_sizes"], params.get("sizes", (3,)), budget=budget, seed=seed)
    if kind == "PBD":
        return find_pbd(params["u"], tuple(params["sizes"]), params.get("star"), budget, seed)
    if kind == "SCHGDD":
        return find_schgdd(params["u"], params["g"], params["t"], budget, seed)
    if kind == "CYC-GDD":
        return find_cyclic_gdd(params["u"], params["v"], params["w"], budget, seed)
    if kind == "CYC-GDP":
        return find_cyclic_gdp(
            params["u"], params["v"], params["w"], params["target"], budget, seed
        )
    raise ValueError(f"unknown search kind {kind!r}")


def find_cyclic_igdd(
    u: int, v: int, w: int, t: int, budget: int = 10**8, seed: int = 0
) -> Design:
    """w-cyclic 3-IGDD of type (vw, tw)^u: the hole meets every group in
    its first t shift orbits; both-in-hole pairs are exempt."""
    n_points = u * v
    pair_idx: dict[tuple, int] = {}
    orbit_points: list[tuple[int, int]] = []
    for p1 in range(n_points):
        for p2 in range(p1 + 1, n_points):
            if p1 // v == p2 // v:
                continue
            if p1 % v < t and p2 % v < t:
                continue  # both in the hole
            for d in range(w):
                pair_idx[(p1, p2, d)] = len(orbit_points)
                orbit_points.append((p1, p2))
    cands, cand_orbits = [], []
    for i1, i2, i3 in combinations(range(u), 3):
        for j1, j2, j3 in product(range(v), repeat=3):
            p1, p2, p3 = i1 * v + j1, i2 * v + j2, i3 * v + j3
            if sum(1 for j in (j1, j2, j3) if j < t) >= 2:
                continue
            for x2 in range(w):
                for x3 in range(w):
                    cands.append((p1, p2, p3, x2, x3))
                    cand_orbits.append(
                        (
                            pair_idx[(p1, p2, x2)],
                            pair_idx[(p1, p3, x3)],
                            pair_idx[(p2, p3, (x3 - x2) % w)],
                        )
                    )

    def make_engine():
        return _Engine(len(pair_idx), cand_orbits)

    eng, ok, nodes, complete = _exact_with_restarts(make_engine, budget, seed)
    if not ok:
        raise NotFoundError(f"no w-cyclic 3-IGDD of type ({v*w},{t*w})^{u} with w={w}")
    axes = (Axis(u), Axis(v), Axis(w))
    groups = tuple(
        frozenset((i, j, l) for j in range(v) for l in range(w)) for i in range(u)
    )
    hole = frozenset((i, j, l) for i in range(u) for j in range(t) for l in range(w))
    schema = Schema(
        kind="IGDD-H",
        axes=axes,
        groups=groups,
        hole_set=hole,
        cyclic=CyclicClaim(length=w, axis=2),
    )
    blocks = [
        frozenset(((p1 // v, p1 % v, 0), (p2 // v, p2 % v, x2), (p3 // v, p3 % v, x3)))
        for (p1, p2, p3, x2, x3) in (cands[c] for c in eng.sel)
    ]
    from .core import sort_blocks

    d = Design(
        schema=schema,
        base_blocks=tuple(sort_blocks(blocks)),
        provenance=f"search: IGDD ({v*w},{t*w})^{u} w={w} seed={seed}",
    )
    verdict = verify(d)
    if not verdict.ok:
        raise AssertionError(f"searched IGDD fails verification: {verdict.summary()}")
    return d


def find_hole_fixing_hgdd(u: int, g: int, t: int, budget: int = 10**8, seed: int = 0) -> Design:
    """Holey design of type (u, g^t) whose claim is the step-t shift of
    orbit length g: the cycle fixes every hole."""
    gt = g * t
    pair_idx: dict[tuple, int] = {}
    for a, b in combinations(range(u), 2):
        for z1 in range(t):
            for d in range(gt):
                if d % t == 0:
                    continue
                pair_idx[(a, b, z1, d)] = len(pair_idx)

    def key(a, b, za, zb):
        return (a, b, za % t, (zb - za) % gt)

    cands, cand_orbits = [], []
    for a, b, c in combinations(range(u), 3):
        for z1 in range(t):
            for z2 in range(gt):
                if (z2 - z1) % t == 0:
                    continue
                for z3 in range(gt):
                    if (z3 - z1) % t == 0 or (z3 - z2) % t == 0:
                        continue
                    cands.append((a, b, c, z1, z2, z3))
                    cand_orbits.append(
                        (
                            pair_idx[key(a, b, z1, z2)],
                            pair_idx[key(a, c, z1, z3)],
                            pair_idx[key(b, c, z2, z3)],
                        )
                    )

    def make_engine():
        return _Engine(len(pair_idx), cand_orbits)

    eng, ok, nodes, complete = _exact_with_restarts(make_engine, budget, seed)
    if not ok:
        raise NotFoundError(f"no hole-fixing cyclic 3-HGDD of type ({u},{g}^{t})")
    axes = (Axis(u), Axis(gt))
    groups = tuple(frozenset((i, z) for z in range(gt)) for i in range(u))
    holes = tuple(
        frozenset((i, j + k * t) for i in range(u) for k in range(g)) for j in range(t)
    )
    claim = CyclicClaim(
        length=g, axis=1, step=t, layer=(("g", g), ("h", 1), ("m", t), ("t", t))
    )
    blocks = [
        frozenset(((a, z1), (b, z2), (c, z3)))
        for (a, b, c, z1, z2, z3) in (cands[i] for i in eng.sel)
    ]
    from .core import sort_blocks

    d = Design(
        schema=Schema(kind="HGDD", axes=axes, groups=groups, holes=holes, cyclic=claim),
        base_blocks=tuple(sort_blocks(blocks)),
        provenance=f"search: hole-fixing 3-HGDD ({u},{g}^{t}) seed={seed}",
    )
    verdict = verify(d)
    if not verdict.ok:
        raise AssertionError(f"searched HGDD fails verification: {verdict.summary()}")
    return d
