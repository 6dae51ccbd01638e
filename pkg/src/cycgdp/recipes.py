"""The recipe registry: named multi-step builds, each consuming verified
ingredients from the catalog, the direct builders, or the searcher.

Each recipe is registered with a gating status: RUNNABLE means every
ingredient is shipped or searchable at desk scale; INGREDIENT-GATED
means some ingredient exists only as external data (most often the
small incomplete families imported from prior work) and must be
supplied as a file.  run_recipe raises IngredientGatedError with the
missing ingredient's description in the gated cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import catalog as _catalog
from . import construct as C
from . import direct, search
from .bounds import exists_schgdd, j_star
from .core import Design
from .verify import assert_optimal


class IngredientGatedError(RuntimeError):
    """The recipe needs an externally supplied ingredient file."""


@dataclass(frozen=True)
class Recipe:
    tag: str
    summary: str
    params: str
    status: str
    run: Callable[..., Design] | None


RECIPES: dict[str, Recipe] = {}


def _reg(tag, summary, params, status, run=None):
    RECIPES[tag] = Recipe(tag, summary, params, status, run)


def run_recipe(tag: str, **params) -> Design:
    if tag not in RECIPES:
        raise KeyError(f"unknown recipe {tag!r}; known: {sorted(RECIPES)}")
    r = RECIPES[tag]
    if r.run is None:
        raise IngredientGatedError(f"{tag}: {r.status}")
    return r.run(**params)


def recipe_report() -> list[tuple[str, str, str]]:
    """(tag, status, summary) for every registered recipe."""
    return [(r.tag, r.status, r.summary) for r in sorted(RECIPES.values(), key=lambda r: r.tag)]


# --------------------------------------------------------------------------
# shared ingredient resolvers (catalog -> direct -> search)
# --------------------------------------------------------------------------


def _opt_gdp(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    """Optimal w-cyclic packing of type (vw)^u at desk scale."""
    target = j_star(u, v, w).J_star
    routes = {
        (8, 1, 2): "C.1",
        (8, 1, 3): "C.3:u=8",
        (14, 1, 3): "C.3:u=14",
        (8, 5, 3): "C.4:u=8",
        (14, 5, 3): "C.4:u=14",
    }
    if (u, v, w) in routes:
        return _catalog.catalog_get(routes[(u, v, w)])
    if u == 8 and v == 1 and w % 6 == 2 and w >= 8:
        return direct.family_c("C5", w=w)
    if u == 8 and v == 1 and w % 12 == 10:
        return direct.family_c("C6", w=w)
    if u == 8 and v == 1 and w % 6 == 5:
        return direct.family_c("C7", w=w)
    if u == 14 and v == 1 and w % 6 == 5:
        return direct.family_c("C8", w=w)
    if u == 11 and v == 1 and w % 12 == 10:
        return C.assemble_lemma52(w, budget=budget, seed=seed)
    return search.find_cyclic_gdp(u, v, w, target=target, budget=budget, seed=seed)


def _layered(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    """(v,w,1)-cyclic layered holey design of type (u, v^w): a flat
    semi-cyclic core inflated by a plain GDD when needed."""
    if (u, v, w) == (5, 3, 3):
        return _catalog.catalog_get("Ex3.2")
    if (u, v, w) == (8, 3, 3):
        return _catalog.catalog_get("L3.14:u=8")
    if exists_schgdd(u, 1, w) == "YES":
        core = search.find_schgdd(u, 1, w, budget=budget, seed=seed)
        if v == 1:
            return core
        return C.inflate(core, {3: search.find_gdd([v] * 3, budget=budget, seed=seed)})
    # nontrivial split v = g * h over an existing semi-cyclic core
    from math import gcd as _gcd

    for g in range(2, v + 1):
        if v % g == 0 and _gcd(g, w) == 1 and exists_schgdd(u, g, w) == "YES":
            core = search.find_schgdd(u, g, w, budget=budget, seed=seed)
            host = C.split_semicyclic(core, g)
            h = v // g
            if h == 1:
                return host
            return C.inflate(host, {3: search.find_gdd([h] * 3, budget=budget, seed=seed)})
    raise IngredientGatedError(
        f"no desk-scale route to a (v,w,1)-cyclic layered design of type ({u},{v}^{w})"
    )


def _pbd_345(u: int, budget=10**8, seed=0) -> Design:
    return search.find_pbd(u, (3, 4), star=5, budget=budget, seed=seed)


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

_WC_NOTE = (
    "INGREDIENT-GATED: needs the externally published small incomplete "
    "families (2-cyclic 3-IGDDs of type (2v,2)^k) supplied as files"
)


def _r_lift(design: Design | None = None, catalog_id: str | None = None, v: int = 1) -> Design:
    d = design if design is not None else _catalog.catalog_get(catalog_id)
    return C.scgdp_lift(d, v)


_reg(
    "L2.5-lift",
    "split a semi-cyclic packing of type (vw)^u into its w-cyclic form",
    "design|catalog_id, v",
    "RUNNABLE",
    _r_lift,
)


def _r_l310(u: int, g: int, t: int, budget=10**8, seed=0) -> Design:
    if not (u % 3 in (0, 1) and t % 2 == 1 and t >= 3):
        raise ValueError("needs u = 0,1 (mod 3) and odd t >= 3")
    core = search.find_schgdd(u, 1, t, budget=budget, seed=seed)
    if g == 1:
        return core
    return C.inflate(core, {3: search.find_gdd([g] * 3, budget=budget, seed=seed)})


_reg(
    "L3.10",
    "layered holey design of type (u, g^t) for u = 0,1 (mod 3), odd t",
    "u, g, t",
    "RUNNABLE (desk u, t)",
    _r_l310,
)


def _r_l311(u: int, g: int, t: int, h: int = 1, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or u < 8:
        raise ValueError("needs u = 2 (mod 6), u >= 8")
    if exists_schgdd(u, g, t) != "YES":
        raise IngredientGatedError(
            f"no semi-cyclic core of type ({u},{g}^{t}) exists or it is undecided"
        )
    core = search.find_schgdd(u, g, t, budget=budget, seed=seed)
    if h == 1:
        return core
    return C.inflate(core, {3: search.find_gdd([h] * 3, budget=budget, seed=seed)})


_reg(
    "L3.11",
    "layered holey design of type (u, (gh)^t) for u = 2 (mod 6)",
    "u, g, t, h",
    "RUNNABLE (desk u, t; core existence checked first)",
    _r_l311,
)


def _r_l314(u: int, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or u < 8:
        raise ValueError("needs u = 2 (mod 6), u >= 8")
    if u == 8:
        return _catalog.catalog_get("L3.14:u=8")
    pbd = _pbd_345(u, budget, seed)
    g33 = search.find_gdd([3] * 3, budget=budget, seed=seed)
    slots = {5: _catalog.catalog_get("Ex3.2")}
    for k in (3, 4):
        slots[k] = C.inflate(search.find_schgdd(k, 1, 3, budget=budget, seed=seed), {3: g33})
    return C.master_weight(pbd, slots, "pbd-hgdd")


_reg(
    "L3.14u14",
    "layered holey design of type (u, 3^3) for u = 2 (mod 6)",
    "u",
    "RUNNABLE (u in {8, 14, 20})",
    _r_l314,
)


def _r_l319(u: int, g: int, t: int, budget=10**8, seed=0) -> Design:
    # cycle split 3*g*t -> (3, gt, 1) via the step-3 subgroup; needs
    # gcd(3, t) = 1 so the holes stay in one orbit class
    if t % 3 == 0:
        raise ValueError("needs gcd(3, t) = 1")
    if exists_schgdd(u, 3 * g, t) != "YES":
        raise IngredientGatedError(f"no semi-cyclic core of type ({u},{3*g}^{t})")
    core = search.find_schgdd(u, 3 * g, t, budget=budget, seed=seed)
    full = C.orbits.expand_design_blocks(core.base_blocks, core.schema.cyclic, core.schema.axes)
    from .core import CyclicClaim, Schema

    claim = CyclicClaim(length=g * t, axis=1, step=3)
    base = C.orbits.canonical_reps(full, claim, core.schema.axes)
    schema = Schema(
        kind="HGDD",
        axes=core.schema.axes,
        groups=core.schema.groups,
        holes=core.schema.holes,
        cyclic=claim,
    )
    return C._verified(Design(schema, tuple(base), provenance=f"cycle-split of [{core.provenance}]"), "L3.19")


_reg(
    "L3.19",
    "layered design of type (u, (3g)^t) with a cycle-3 split of the shift",
    "u, g, t (gcd(3,t)=1)",
    "RUNNABLE (desk)",
    _r_l319,
)


def _r_l320(u: int, g: int, t: int, budget=10**8, seed=0) -> Design:
    if not (g % 6 == 3 and t % 6 == 3):
        raise ValueError("needs g = t = 3 (mod 6)")
    if t == 3:
        host = _r_l314(u, budget, seed)
        if g > 3:
            host = C.inflate(host, {3: search.find_gdd([g // 3] * 3, budget=budget, seed=seed)})
        return host
    outer = _r_l311(u, 3, t // 3, h=g, budget=budget, seed=seed)
    inner = _r_l320(u, g, 3, budget=budget, seed=seed)
    return C.fill_hgdd_into_hgdd(C.canonical_layered(outer), C.canonical_layered(inner))


_reg(
    "L3.20",
    "layered design of type (u, g^t) for g = t = 3 (mod 6) by hole refinement",
    "u, g, t",
    "RUNNABLE (desk)",
    _r_l320,
)


def _r_l321(t: int, budget=10**8, seed=0) -> Design:
    if t % 2 == 0 or t < 3:
        raise ValueError("needs odd t >= 3")
    fac = []
    n, p = t, 3
    while n > 1:
        while n % p == 0:
            fac.append(p)
            n //= p
        p += 2
    d = direct.scihgdd_8_2_prime(fac[0])
    done = fac[0]
    for q in fac[1:]:
        w = C.inflate(d, {3: search.find_cyclic_gdd(3, 1, q, budget=budget, seed=seed)})
        d = C.fill_scihgdd(w, direct.scihgdd_8_2_prime(q))
        done *= q
    assert done == t
    return d


_reg(
    "L3.21",
    "semi-cyclic incomplete design of type (8, 2, 1^t) for odd t",
    "t",
    "RUNNABLE",
    _r_l321,
)

for _tag, _summary in (
    ("L4.7", "incomplete design of type (vw,w)^11 for v = 1,5 (mod 6), w = 10 (mod 12)"),
    ("L4.11", "incomplete design of type (2v,2)^u for u = 2 (mod 12)"),
    ("L4.12", "incomplete design of type (vw,w)^u for u = 2 (mod 12), w = 10 (mod 12)"),
    ("L4.13", "incomplete design of type (6v,6)^u for u = 2 (mod 12)"),
    ("L4.14", "2-cycle view of the type (6v,6)^u incomplete design"),
):
    _reg(_tag, _summary, "u, v, w", _WC_NOTE)


def _r_l48(w: int, budget=10**8, seed=0) -> Design:
    if w % 2 != 0:
        raise ValueError("needs even w")
    n, wodd = 0, w
    while wodd % 2 == 0:
        n += 1
        wodd //= 2
    if n <= 3:
        core = _catalog.catalog_get(f"A.1:h={2 ** (n - 1)}")
    else:
        sch = search.find_schgdd(3, 2, 2 ** (n - 2), budget=budget, seed=seed)
        core = C.perfect_compose(
            _catalog.catalog_get("A.1:h=1"), _catalog.catalog_get("A.1:h=2"), sch
        )
    if wodd == 1:
        return core
    return C.inflate(core, {3: search.find_cyclic_gdd(3, 1, wodd, budget=budget, seed=seed)})


_reg(
    "L4.8",
    "incomplete design of type (2w,w)^8 for even w (window composition)",
    "w",
    "RUNNABLE (desk w)",
    _r_l48,
)


def _r_l49(v: int, w: int, budget=10**8, seed=0) -> Design:
    if v == 2:
        return _r_l48(w, budget, seed)
    host = search.find_hole_fixing_hgdd(8, w, v - 1, budget=budget, seed=seed)
    return C.hgdd_fill_igdp(host, _r_l48(w, budget, seed))


_reg(
    "L4.9",
    "incomplete design of type (vw,w)^8 for even w, v = 1,2 (mod 3)",
    "v, w",
    "RUNNABLE (small v, w)",
    _r_l49,
)


def _r_l410(u: int, v: int = 2, budget=10**8, seed=0) -> Design:
    if v == 2:
        if u == 8:
            return _catalog.catalog_get("A.1:h=2")
        if u in (4, 6, 14):
            return _catalog.catalog_get(f"A.2:u={u}")
        raise IngredientGatedError(
            "u >= 20 needs the externally published type (8,4)^5 ingredient"
        )
    host = search.find_hole_fixing_hgdd(u, 4, v - 1, budget=budget, seed=seed)
    return C.hgdd_fill_igdp(host, _r_l410(u, 2, budget, seed))


_reg(
    "L4.10",
    "incomplete design of type (4v,4)^u for u = 2 (mod 6)",
    "u, v",
    "RUNNABLE (u in {4,6,8,14}); INGREDIENT-GATED (u >= 20)",
    _r_l410,
)


def _r_l415(u: int, v: int, s: int = 1, budget=10**8, seed=0) -> Design:
    if u not in (8, 14) or s not in (1, 5) or v != 6 + s:
        raise IngredientGatedError(
            "only the first step (v = 6 + s) is desk-scale; larger v needs "
            "two-hole layered hosts supplied as files"
        )
    a3 = _catalog.catalog_get(f"A.3:({u},{s})")
    weights = {
        3: search.find_cyclic_gdd(3, 1, 3, budget=budget, seed=seed),
        u - 2: search.find_cyclic_gdp(
            u - 2, 1, 3, target=j_star(u - 2, 1, 3).J_star, budget=budget, seed=seed
        ),
    }
    return C.inflate(a3, weights)


_reg(
    "L4.15",
    "3-cycle incomplete packing of type (3v,3s)^u for u in {8,14}, s in {1,5}",
    "u, v, s",
    "RUNNABLE (v = 6+s); INGREDIENT-GATED (larger v)",
    _r_l415,
)


def _r_l416(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    if u not in (8, 14) or v != 7 or w % 6 != 5:
        raise IngredientGatedError(
            "only v = 7 is desk-scale; larger v needs two-hole layered hosts"
        )
    a3 = _catalog.catalog_get(f"A.3:({u},1)")
    weights = {
        3: search.find_cyclic_gdd(3, 1, w, budget=budget, seed=seed),
        u - 2: search.find_cyclic_gdp(
            u - 2, 1, w, target=j_star(u - 2, 1, w).J_star, budget=budget, seed=seed
        ),
    }
    return C.inflate(a3, weights)


_reg(
    "L4.16",
    "w-cycle incomplete packing of type (vw,w)^u for u in {8,14}, w = 5 (mod 6)",
    "u, v, w",
    "RUNNABLE (v = 7, small w); INGREDIENT-GATED (larger v)",
    _r_l416,
)


def _r_l425(u: int) -> Design:
    return direct.igdd_2_u5(u)


_reg(
    "L4.25",
    "2-cycle incomplete design of type 2^(u,5) for u = 8 (mod 12)",
    "u",
    "RUNNABLE",
    _r_l425,
)


def _r_l426(u: int, t: int = 14, budget=10**8, seed=0) -> Design:
    if t != 14:
        raise IngredientGatedError(
            "t = 11 needs the externally published type 2^(7,3) ingredient"
        )
    if u % 12 != 2 or u < 38:
        raise ValueError("needs u = 2 (mod 12), u >= 38")
    master = search.find_cyclic_gdd((u - 2) // 12, 12, 2, budget=budget, seed=seed)
    b2 = _catalog.catalog_get("B.2")
    return C.fill_groups_of_gdd(master, [b2] * ((u - 2) // 12 - 1))


_reg(
    "L4.26",
    "2-cycle incomplete design of type 2^(u,t), t in {11,14}",
    "u, t",
    "RUNNABLE (t=14, u=38); INGREDIENT-GATED (t=11)",
    _r_l426,
)

_reg(
    "L4.27",
    "incomplete design of type (vw)^(u,11) for u = 11 (mod 12)",
    "u, v, w",
    _WC_NOTE + " via the type 2^(u,11) chain",
)


def _r_l428(u: int, budget=10**8, seed=0) -> Design:
    if u in (8, 14):
        return _catalog.catalog_get(f"B.3:u={u}")
    if u % 6 != 2 or u < 20:
        raise ValueError("needs u = 2 (mod 6), u >= 8")
    master = search.find_cyclic_gdd((u - 2) // 6, 6, 4, budget=budget, seed=seed)
    b3 = _catalog.catalog_get("B.3:u=8")
    return C.fill_groups_of_gdd(master, [b3] * ((u - 2) // 6 - 1))


_reg(
    "L4.28",
    "4-cycle incomplete design of type 4^(u,2) for u = 2 (mod 6)",
    "u",
    "RUNNABLE (u in {8,14,20})",
    _r_l428,
)


def _r_l429(u: int, budget=10**8, seed=0) -> Design:
    if u % 12 != 2 or u < 14:
        raise ValueError("needs u = 2 (mod 12), u >= 14")
    master = search.find_cyclic_gdd((u - 2) // 4, 4, 6, budget=budget, seed=seed)
    b4 = _catalog.catalog_get("B.4")
    return C.fill_groups_of_gdd(master, [b4] * ((u - 2) // 4 - 1))


_reg(
    "L4.29",
    "6-cycle incomplete design of type 6^(u,6) for u = 2 (mod 12)",
    "u",
    "RUNNABLE (u = 14)",
    _r_l429,
)


def _r_l430(u: int, budget=10**8, seed=0) -> Design:
    return C.restrict_claim(_r_l429(u, budget, seed), 2)


_reg(
    "L4.30",
    "2-cycle view of the type 6^(u,6) incomplete design",
    "u",
    "RUNNABLE (u = 14)",
    _r_l430,
)


def _r_l431(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    if u % 12 == 8 and u >= 20 and w == 2:
        base = direct.igdd_2_u5(u)
        if v == 1:
            return base
        return C.inflate(base, {3: search.find_gdd([v] * 3, budget=budget, seed=seed)})
    raise IngredientGatedError(
        "desk scale covers u = 8 (mod 12) with w = 2; other branches need "
        "large holey ingredients"
    )


_reg(
    "L4.31",
    "incomplete design of type (vw)^(u,5)",
    "u, v, w",
    "RUNNABLE (u = 8 mod 12, w = 2); INGREDIENT-GATED otherwise",
    _r_l431,
)


def _r_l432(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or u < 20 or v % 2 == 0 or w % 2 == 0 or w < 3:
        raise ValueError("needs u = 2 (mod 6) >= 20 and odd v, w >= 3")
    ih = _r_l321(v * w, budget, seed)
    gdd24 = search.find_gdd([2] * 4, budget=budget, seed=seed)
    from .core import Schema

    # a pairing design on 8 points doubles as a point-hole incomplete
    # packing: singleton groups, the hole being one of its pair groups
    ig8 = Design(
        Schema(
            kind="IGDP-G",
            axes=gdd24.schema.axes,
            groups=tuple(frozenset({p}) for p in sorted(gdd24.schema.points)),
            hole_set=gdd24.schema.groups[0],
        ),
        gdd24.base_blocks,
        provenance="pairing design as a point-hole packing",
    )
    small = C.fill_ihgdd_holes(ih, ig8)
    master = search.find_cyclic_gdd((u - 2) // 6, 6 * v, w, budget=budget, seed=seed)
    return C.fill_groups_of_gdd(master, [small] * ((u - 2) // 6 - 1))


_reg(
    "L4.32",
    "w-cycle incomplete packing of type (vw)^(u,8) for u = 2 (mod 6) >= 20",
    "u, v, w",
    "RUNNABLE (small odd v, w)",
    _r_l432,
)


def _r_l433(u: int) -> Design:
    if u < 68 or u % 12 != 8:
        raise ValueError("the partition-built branch needs u = 8 (mod 12), u >= 68")
    return direct.igdd_2_u5(u)


_reg(
    "L4.33",
    "partition-built branch of the type 2^(u,5) family",
    "u >= 68",
    "RUNNABLE",
    _r_l433,
)


# --------------------------------------------------------------------------
# endpoint pipelines (optimal packings of type (vw)^u)
# --------------------------------------------------------------------------


def _check_optimal(d: Design) -> Design:
    verdict = assert_optimal(d)
    if not verdict.ok:
        raise AssertionError(f"pipeline output not optimal: {verdict.violations[0]}")
    return d


def _r_l52(w: int, budget=10**8, seed=0) -> Design:
    return C.assemble_lemma52(w, budget=budget, seed=seed)


_reg(
    "L5.2",
    "optimal semi-cyclic packing of type w^11 for w = 10 (mod 12)",
    "w",
    "RUNNABLE (desk w)",
    _r_l52,
)


def _r_l53(u: int, v: int = 1, w: int = 10, budget=10**8, seed=0) -> Design:
    if v == 1 and u == 11:
        return _r_l52(w, budget, seed)
    raise IngredientGatedError(
        "v > 1 or u >= 23 needs the (vw,w)^11 chain built on the externally "
        "published 2-cyclic 3-IGDDs of type (2v,2)^k"
    )


_reg(
    "L5.3",
    "optimal packing of type (vw)^u for u = 11 (mod 12), w = 10 (mod 12)",
    "u, v, w",
    "RUNNABLE (u=11, v=1); " + _WC_NOTE,
    _r_l53,
)


def _r_l54(u: int, v: int = 1, w: int = 6, budget=10**8, seed=0) -> Design:
    if w % 12 != 6 or u % 12 != 2:
        raise ValueError("needs u = 2 (mod 12) and w = 6 (mod 12)")
    if v != 1:
        raise IngredientGatedError(
            "v >= 3 needs a 2-cyclic 3-IGDD of type (2v,2)^3 (external file) "
            "to build the type (6v,6)^u ingredient"
        )
    if w != 6:
        raise IngredientGatedError("w >= 18 additionally needs a large layered host")
    ig = _r_l429(u, budget, seed)
    filler = search.find_cyclic_gdp(6, 1, 6, target=j_star(6, 1, 6).J_star, budget=budget, seed=seed)
    return _check_optimal(C.fill_igdp_group_hole(ig, filler))


_reg(
    "L5.4",
    "optimal packing of type (6v)^u for u = 2 (mod 12), w = 6 (mod 12)",
    "u, v, w",
    "RUNNABLE (v=1, w=6, u=14); INGREDIENT-GATED (v>=3: 2-cyclic (2v,2)^k files)",
    _r_l54,
)


def _r_l55(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or w % 6 != 1 or v % 6 == 0:
        raise ValueError("needs u = 2 (mod 6), w = 1 (mod 6), v not 0 (mod 6)")
    filler = search.find_cyclic_gdp(u, v, 1, target=j_star(u, v, 1).J_star, budget=budget, seed=seed)
    if w == 1:
        return _check_optimal(filler)
    host = _layered(u, v, w, budget, seed)
    return _check_optimal(C.fill_hgdd_holes(C.canonical_layered(host), filler))


_reg(
    "L5.5",
    "optimal packing of type (vw)^u for u = 2 (mod 6), w = 1 (mod 6)",
    "u, v, w",
    "RUNNABLE (desk u, v, w)",
    _r_l55,
)


def _r_l56(u: int, v: int = 3, w: int = 2, budget=10**8, seed=0) -> Design:
    if u % 12 != 2 or v % 6 != 3 or w % 12 != 2:
        raise ValueError("needs u = 2 (mod 12), v = 3 (mod 6), w = 2 (mod 12)")
    if v != 3 or w != 2:
        raise IngredientGatedError(
            "v >= 9 or w >= 14 needs the type (6v,6)^u chain built on external files"
        )
    ig = C.restrict_claim(_r_l429(u, budget, seed), 2)
    filler = search.find_cyclic_gdp(6, 3, 2, target=j_star(6, 3, 2).J_star, budget=budget, seed=seed)
    return _check_optimal(C.fill_igdp_group_hole(ig, filler))


_reg(
    "L5.6",
    "optimal packing of type (2v)^u for u = 2 (mod 12), v = 3 (mod 6)",
    "u, v, w",
    "RUNNABLE (v=3, w=2, u=14); INGREDIENT-GATED (larger v, w)",
    _r_l56,
)


def _r_l57(u: int, v: int = 1, w: int = 2, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or w % 6 != 2 or v % 3 == 0:
        raise ValueError("needs u = 2 (mod 6), w = 2 (mod 6), v = 1,2 (mod 3)")
    if u == 8 and v == 1:
        return _check_optimal(_opt_gdp(8, 1, w, budget, seed))
    if u == 14 and (v, w) == (1, 2):
        b2 = _catalog.catalog_get("B.2")
        d = C.canonical_gdp(
            Design(
                b2.schema.__class__(
                    kind="SCGDP",
                    axes=b2.schema.axes,
                    groups=b2.schema.groups,
                    cyclic=b2.schema.cyclic,
                ),
                b2.base_blocks,
                provenance=b2.provenance + " viewed as a packing",
            )
        )
        return _check_optimal(d)
    raise IngredientGatedError(
        "other branches need type (vw,w)^u or 2^(u,14) chains on external files"
    )


_reg(
    "L5.7",
    "optimal packing of type (vw)^u for u = 2 (mod 6), w = 2 (mod 6)",
    "u, v, w",
    "RUNNABLE (u=8 v=1; u=14 v=1 w=2); INGREDIENT-GATED otherwise",
    _r_l57,
)


def _r_l58(v: int, w: int, budget=10**8, seed=0) -> Design:
    if w % 6 != 2 or v % 3 == 0 or v < 2:
        raise ValueError("needs w = 2 (mod 6) and v = 1,2 (mod 3), v >= 2")
    ig = _r_l49(v, w, budget, seed)
    filler = _opt_gdp(8, 1, w, budget, seed)
    return _check_optimal(C.fill_igdp_hole_layers(ig, filler))


_reg(
    "L5.8",
    "optimal packing of type (vw)^8 for even w = 2 (mod 6), v >= 2",
    "v, w",
    "RUNNABLE (small v, w)",
    _r_l58,
)


def _r_l59(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or v % 6 != 3 or w % 6 != 3:
        raise ValueError("needs u = 2 (mod 6) and v = w = 3 (mod 6)")
    host = _r_l320(u, v, w, budget, seed) if w % 6 == 3 else None
    filler = search.find_cyclic_gdp(u, v, 1, target=j_star(u, v, 1).J_star, budget=budget, seed=seed)
    return _check_optimal(C.fill_hgdd_holes(C.canonical_layered(host), filler))


_reg(
    "L5.9",
    "optimal packing of type (vw)^u for u = 2 (mod 6), v = w = 3 (mod 6)",
    "u, v, w",
    "RUNNABLE (desk)",
    _r_l59,
)


def _r_l510(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    host = _layered(u, v, w, budget, seed)
    filler = search.find_cyclic_gdp(u, v, 1, target=j_star(u, v, 1).J_star, budget=budget, seed=seed)
    return _check_optimal(C.fill_hgdd_holes(C.canonical_layered(host), filler))


_reg(
    "L5.10",
    "optimal packing of type (vw)^u by filling a layered host with a plain packing",
    "u, v, w",
    "RUNNABLE (desk u, v, w)",
    _r_l510,
)


def _r_l511(u: int, v: int = 1, w: int = 4, budget=10**8, seed=0) -> Design:
    if w % 12 != 4 or v % 3 == 0:
        raise ValueError("needs w = 4 (mod 12) and v = 1,2 (mod 3)")
    if w != 4 or u not in (8, 14):
        raise IngredientGatedError("w >= 16 or u >= 20 needs larger hosts")
    b3 = _catalog.catalog_get(f"B.3:u={u}")
    base = Design(
        b3.schema.__class__(
            kind="SCGDP", axes=b3.schema.axes, groups=b3.schema.groups, cyclic=b3.schema.cyclic
        ),
        b3.base_blocks,
        provenance=b3.provenance + " viewed as a packing",
    )
    if v == 1:
        return _check_optimal(C.canonical_gdp(base))
    ig = _r_l410(u, v, budget, seed)
    return _check_optimal(C.fill_igdp_hole_layers(ig, base))


_reg(
    "L5.11",
    "optimal packing of type (4v)^u for u = 2 (mod 6), w = 4 (mod 12)",
    "u, v, w",
    "RUNNABLE (u in {8,14}, w=4, small v); INGREDIENT-GATED otherwise",
    _r_l511,
)


def _r_l512(u: int, v: int, w: int = 3, budget=10**8, seed=0) -> Design:
    if u not in (8, 14) or w % 6 != 3 or v % 6 not in (1, 5):
        raise IngredientGatedError(
            "desk scale covers u in {8,14}; u >= 20 needs the (3v)^(u,8) chain"
        )
    if w == 3 and v in (1, 5):
        return _check_optimal(_opt_gdp(u, v, 3, budget, seed))
    if w == 3 and v == 7:
        ig = _r_l415(u, 7, 1, budget, seed)
        filler = _opt_gdp(u, 1, 3, budget, seed)
        return _check_optimal(C.fill_igdp_hole_layers(ig, filler))
    raise IngredientGatedError("w >= 9 needs a large layered host at desk scale")


_reg(
    "L5.12",
    "optimal packing of type (3v)^u for u in {8,14}, v = 1,5 (mod 6)",
    "u, v, w",
    "RUNNABLE (w=3, v in {1,5,7}); INGREDIENT-GATED otherwise",
    _r_l512,
)


def _r_l513(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or v % 6 != 5 or w % 6 != 5:
        raise ValueError("needs u = 2 (mod 6) and v = w = 5 (mod 6)")
    core = search.find_schgdd(u, 1, v * w, budget=budget, seed=seed)
    pairs = search.find_gdd([2] * (u // 2), budget=budget, seed=seed)
    filler = Design(
        pairs.schema.__class__(
            kind="GDP",
            axes=pairs.schema.axes,
            groups=tuple(frozenset({p}) for p in sorted(pairs.schema.points)),
        ),
        pairs.base_blocks,
        provenance="pairing design as a point packing",
    )
    flat = C.fill_hgdd_holes(C.canonical_layered(core), filler)
    return _check_optimal(C.scgdp_lift(flat, v))


_reg(
    "L5.13",
    "optimal packing of type (vw)^u for u = 2 (mod 6), v = w = 5 (mod 6)",
    "u, v, w",
    "RUNNABLE (desk vw)",
    _r_l513,
)


def _r_l514(u: int, v: int = 1, w: int = 10, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or w % 12 != 10 or v % 3 == 0:
        raise ValueError("needs u = 2 (mod 6), w = 10 (mod 12), v = 1,2 (mod 3)")
    if u == 8 and v == 1:
        return _check_optimal(direct.family_c("C6", w=w))
    if u == 8 and v >= 2:
        ig = _r_l49(v, w, budget, seed)
        filler = direct.family_c("C6", w=w)
        return _check_optimal(C.fill_igdp_hole_layers(ig, filler))
    raise IngredientGatedError("u >= 14 branches need external incomplete families")


_reg(
    "L5.14",
    "optimal packing of type (vw)^8 for w = 10 (mod 12)",
    "u, v, w",
    "RUNNABLE (u=8, small v); INGREDIENT-GATED (u >= 14)",
    _r_l514,
)


def _r_l515(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or v % 6 not in (2, 4) or w % 6 != 5:
        raise ValueError("needs u = 2 (mod 6), v = 2,4 (mod 6), w = 5 (mod 6)")
    pbd = search.find_pbd(2 * u + 1, (3,), star=5, budget=budget, seed=seed)
    # delete one point away from the starred block: {3,5*}-design of type 2^u
    victim = (2 * u,)
    groups, blocks = [], []
    for b in pbd.base_blocks:
        if victim in b:
            rest = frozenset(p for p in b if p != victim)
            if len(rest) == 2:
                groups.append(rest)
                continue
        blocks.append(b)
    from .core import Schema, Axis

    master = Design(
        Schema(kind="GDD", axes=(Axis(2 * u),), groups=tuple(groups)),
        tuple(blocks),
        provenance="point-deleted pairwise design",
    )
    m = v * w // 2
    slots = {
        3: C.canonical_gdp(search.find_cyclic_gdd(3, m // w, w, budget=budget, seed=seed)),
        5: C.canonical_gdp(
            search.find_cyclic_gdp(5, m // w, w, target=j_star(5, m // w, w).J_star, budget=budget, seed=seed)
        ),
    }
    out = C.master_weight(master, slots, "gdd-gdd")
    return _check_optimal(C.canonical_gdp(out))


_reg(
    "L5.15",
    "optimal packing of type (vw)^u for v = 2,4 (mod 6), w = 5 (mod 6)",
    "u, v, w",
    "RUNNABLE (desk u, v, w)",
    _r_l515,
)


def _r_l516(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    if u % 6 != 2 or v % 6 != 3 or w % 6 != 5:
        raise ValueError("needs u = 2 (mod 6), v = 3 (mod 6), w = 5 (mod 6)")
    host = _layered(u, v, w, budget, seed)
    filler = search.find_cyclic_gdp(u, v, 1, target=j_star(u, v, 1).J_star, budget=budget, seed=seed)
    return _check_optimal(C.fill_hgdd_holes(C.canonical_layered(host), filler))


_reg(
    "L5.16",
    "optimal packing of type (vw)^u for v = 3 (mod 6), w = 5 (mod 6)",
    "u, v, w",
    "RUNNABLE (desk)",
    _r_l516,
)


def _r_l517(u: int, v: int = 1, w: int = 5, budget=10**8, seed=0) -> Design:
    if u not in (8, 14) or v % 6 != 1 or w % 6 != 5:
        raise IngredientGatedError("u >= 20 needs the (vw)^(u,8) chain at scale")
    if v == 1:
        return _check_optimal(_opt_gdp(u, 1, w, budget, seed))
    if v == 7:
        ig = _r_l416(u, 7, w, budget, seed)
        filler = _opt_gdp(u, 1, w, budget, seed)
        return _check_optimal(C.fill_igdp_hole_layers(ig, filler))
    raise IngredientGatedError("v >= 13 needs two-hole layered hosts")


_reg(
    "L5.17",
    "optimal packing of type (vw)^u for u in {8,14}, v = 1 (mod 6), w = 5 (mod 6)",
    "u, v, w",
    "RUNNABLE (v in {1,7}, desk w); INGREDIENT-GATED otherwise",
    _r_l517,
)


def _r_l518(u: int, v: int, w: int, budget=10**8, seed=0) -> Design:
    """Dispatcher: route (u, v, w) to the matching pipeline at desk scale."""
    if u * v * w <= 48 and u <= 5:
        return _check_optimal(
            search.find_cyclic_gdp(u, v, w, target=j_star(u, v, w).J_star, budget=budget, seed=seed)
        )
    if u % 6 == 2:
        rw = w % 6
        if rw == 1:
            return _r_l55(u, v, w, budget, seed)
        if rw == 2:
            return _r_l57(u, v, w, budget, seed) if v == 1 else _r_l58(v, w, budget, seed)
        if rw == 3:
            return _r_l59(u, v, w, budget, seed) if v % 6 == 3 else _r_l512(u, v, w, budget, seed)
        if rw == 4:
            return _r_l511(u, v, w, budget, seed)
        if rw == 5:
            if v % 6 in (2, 4):
                return _r_l515(u, v, w, budget, seed)
            if v % 6 == 5:
                return _r_l513(u, v, w, budget, seed)
            if v % 6 == 3:
                return _r_l516(u, v, w, budget, seed)
            return _r_l517(u, v, w, budget, seed)
        if rw == 0:
            return _r_l54(u, v, w, budget, seed)
    if u == 11 and w % 12 == 10:
        return _r_l53(u, v, w, budget, seed)
    raise IngredientGatedError(
        f"no desk-scale pipeline registered for (u, v, w) = ({u}, {v}, {w})"
    )


_reg(
    "L5.18",
    "full-range dispatcher: optimal packing of type (vw)^u",
    "u, v, w",
    "RUNNABLE (desk parameters); INGREDIENT-GATED otherwise",
    _r_l518,
)
