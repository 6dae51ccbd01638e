"""Embedded, versioned base-block data: every explicit finite design the
library ships, each with its expected base-block count.

Entries live as exchange-format files under ``data/``; set the
CYCGDP_CATALOG_DIR environment variable to load from another directory.
Loading parses, expands and verifies the entry; results are cached.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from ..core import Design, parse_design
from ..verify import Verdict, check_h_perfect, verify


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    filename: str
    expected_base_blocks: int
    summary: str
    notes: str = ""
    h_perfect: tuple[int, int] | None = None  # (h, w) window to check


ENTRIES: dict[str, CatalogEntry] = {}


def _reg(id, filename, expected, summary, notes="", h_perfect=None):
    ENTRIES[id] = CatalogEntry(id, filename, expected, summary, notes, h_perfect)


_reg("Ex3.2", "ex3_2", 60, "(3,3,1)-cyclic 3-HGDD of type (5,3^3)")
_reg("Ex3.15", "ex3_15", 18, "3-SCIHGDD of type (8,2,1^3)")
_reg("Ex5.1", "ex5_1", 32, "3-SCGDP* of type 2^(11,5)")
_reg("L3.14:u=8", "l3_14_u8", 168, "(3,3,1)-cyclic 3-HGDD of type (8,3^3)")
_reg(
    "A.1:h=1",
    "a1_h1",
    56,
    "perfect 2-cyclic 3-IGDD of type (4,2)^8",
    h_perfect=(1, 2),
)
_reg(
    "A.1:h=2",
    "a1_h2",
    112,
    "2-perfect 4-cyclic 3-IGDD of type (8,4)^8",
    h_perfect=(2, 2),
)
_reg(
    "A.1:h=4",
    "a1_h4",
    224,
    "4-perfect 8-cyclic 3-IGDD of type (16,8)^8",
    h_perfect=(4, 2),
)
_reg("A.2:u=4", "a2_u4", 24, "4-cyclic 3-IGDD of type (8,4)^4")
_reg("A.2:u=6", "a2_u6", 60, "4-cyclic 3-IGDD of type (8,4)^6")
_reg("A.2:u=14", "a2_u14", 364, "4-cyclic 3-IGDD of type (8,4)^14")
_reg(
    "A.3:(8,1)",
    "a3_u8_s1",
    416,
    "{3,6}-IGDD of type (7,1)^8",
    notes="size-6 blocks partition the points outside the hole",
)
_reg(
    "A.3:(8,5)",
    "a3_u8_s5",
    864,
    "{3,6}-IGDD of type (11,5)^8",
    notes="size-6 blocks partition the points outside the hole",
)
_reg(
    "A.3:(14,1)",
    "a3_u14_s1",
    1309,
    "{3,12}-IGDD of type (7,1)^14",
    notes="size-12 blocks partition the points outside the hole",
)
_reg(
    "A.3:(14,5)",
    "a3_u14_s5",
    2765,
    "{3,12}-IGDD of type (11,5)^14",
    notes="size-12 blocks partition the points outside the hole",
)
_reg("B.1:u=20", "b1_u20", 120, "2-cyclic 3-IGDD of type 2^(20,5)")
_reg("B.1:u=32", "b1_u32", 324, "2-cyclic 3-IGDD of type 2^(32,5)")
_reg("B.1:u=44", "b1_u44", 624, "2-cyclic 3-IGDD of type 2^(44,5)")
_reg(
    "B.1:u=56",
    "b1_u56",
    1020,
    "2-cyclic 3-IGDD of type 2^(56,5)",
    notes="ten second-coordinate parities reconstructed by solving the "
    "difference census; the printed table double-covers six difference "
    "classes under every relabeling",
)
_reg("B.2", "b2", 60, "2-cyclic 3-IGDD of type 2^(14,2)")
_reg("B.3:u=8", "b3_u8", 36, "4-cyclic 3-IGDD of type 4^(8,2)")
_reg("B.3:u=14", "b3_u14", 120, "4-cyclic 3-IGDD of type 4^(14,2)")
_reg("B.4", "b4", 28, "6-cyclic 3-IGDD of type 6^(6,2)")
_reg(
    "B.5",
    "b5",
    180,
    "2-cyclic 3-IGDD of type 2^(26,11)",
    notes="developed under an explicit order-10 permutation; the 2-cyclic "
    "structure is its fifth power",
)
_reg("C.1", "c1", 17, "3-SCGDP of type 2^8 (17 = refined bound)")
_reg("C.2:u=11", "ex5_1", 32, "3-SCGDP* of type 2^(11,5) (same data as Ex5.1)")
_reg("C.2:u=14", "c2_u14", 56, "3-SCGDP* of type 2^(14,5)")
_reg("C.3:u=8", "c3_u8", 26, "3-SCGDP of type 3^8 (26 = refined bound)")
_reg("C.3:u=14", "c3_u14", 88, "3-SCGDP of type 3^14 (88 = refined bound)")
_reg(
    "C.4:u=8",
    "c4_u8",
    693,
    "3-cyclic 3-GDP of type 15^8 (693 = refined bound)",
    notes="level blocks reuse one fixed small GDD of type 2^4, found by search",
)
_reg(
    "C.4:u=14",
    "c4_u14",
    2263,
    "3-cyclic 3-GDP of type 15^14 (2263 = refined bound)",
    notes="level blocks reuse one fixed small GDD of type 2^7, found by search",
)

_cache: dict[str, Design] = {}


def _data_text(filename: str) -> str:
    override = os.environ.get("CYCGDP_CATALOG_DIR")
    if override:
        with open(os.path.join(override, filename + ".design")) as f:
            return f.read()
    return (
        resources.files(__package__).joinpath("data").joinpath(filename + ".design")
    ).read_text()


def catalog_ids() -> list[str]:
    return sorted(ENTRIES)


def catalog_get(id: str, verified: bool = True) -> Design:
    """Load, expand and (by default) verify a catalog entry."""
    if id not in ENTRIES:
        raise KeyError(f"unknown catalog id {id!r}; known: {catalog_ids()}")
    if id in _cache:
        return _cache[id]
    e = ENTRIES[id]
    d = parse_design(_data_text(e.filename))
    d = Design(d.schema, d.base_blocks, provenance=f"catalog:{id}")
    if d.n_base_blocks != e.expected_base_blocks:
        raise AssertionError(
            f"catalog {id}: {d.n_base_blocks} base blocks, expected {e.expected_base_blocks}"
        )
    if verified:
        verdict = verify(d)
        if not verdict.ok:
            raise AssertionError(
                f"catalog {id} fails verification: "
                + "; ".join(str(x) for x in verdict.violations[:3])
            )
        if e.h_perfect is not None:
            hv = check_h_perfect(d, *e.h_perfect)
            if not hv.ok:
                raise AssertionError(f"catalog {id} fails the h-perfect window check")
    _cache[id] = d
    return d


def catalog_verify_all() -> dict[str, tuple[bool, int, str]]:
    """Verify every entry; returns id -> (ok, base_blocks, message)."""
    report = {}
    for id in catalog_ids():
        e = ENTRIES[id]
        try:
            d = parse_design(_data_text(e.filename))
            verdict = verify(d)
            ok = verdict.ok and d.n_base_blocks == e.expected_base_blocks
            msg = verdict.summary()
            if d.n_base_blocks != e.expected_base_blocks:
                msg += f"; count {d.n_base_blocks} != expected {e.expected_base_blocks}"
            if ok and e.h_perfect is not None:
                hv = check_h_perfect(d, *e.h_perfect)
                ok = hv.ok
                msg += "; window ok" if hv.ok else "; window FAILED"
        except Exception as exc:  # parse errors are reported, not raised
            ok, msg = False, f"error: {exc}"
            d = None
        report[id] = (ok, d.n_base_blocks if d else 0, msg)
    return report
