"""Exact bound arithmetic and existence predicates for parameter triples.

All arithmetic is exact (Python ints / Fractions); the nested floors are
evaluated innermost first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def johnson_bound(u: int, v: int, w: int, k: int = 3, lam: int = 1) -> int:
    """Nested-floor upper bound on the number of codewords, evaluated
    innermost floor first with exact integer arithmetic."""
    if not (u >= k > lam >= 1) or v < 1 or w < 1:
        raise ValueError(f"need u >= k > lambda >= 1 and v,w >= 1, got {(u, v, w, k, lam)}")
    acc = (v * w * (u - lam)) // (k - lam)
    for i in range(lam - 1, 0, -1):
        acc = (v * w * (u - i) * acc) // (k - i)
    return (u * v * acc) // k


# The five refinement branches, tested independently for diagnostics.
_CASES = (
    ("A", lambda u, v, w: v % 2 == 1 and w % 4 == 0 and u == 3),
    ("B", lambda u, v, w: v % 2 == 1 and w % 4 == 2 and u % 12 in (3, 6, 7, 10)),
    ("C", lambda u, v, w: (v * w) % 12 == 6 and w % 4 == 2 and u % 12 in (2, 11)),
    ("D", lambda u, v, w: ((u - 1) * v * v * w) % 6 == 4 and u % 3 == 2),
    ("E", lambda u, v, w: w == 2 and (u * (u - 1) * v * v) % 12 == 8),
)


@dataclass(frozen=True)
class BoundReport:
    u: int
    v: int
    w: int
    k: int
    lam: int
    J: int
    J_star: int
    exception_cases: tuple[str, ...]
    perfect_size: Fraction
    perfect_exists: bool

    @property
    def exception_case(self) -> str | None:
        return self.exception_cases[0] if self.exception_cases else None


def perfect_size(u: int, v: int, w: int, k: int = 3, lam: int = 1) -> Fraction:
    """Codeword count of a perfect code; non-integral means perfect is
    impossible."""
    num = 1
    for i in range(lam + 1):
        num *= u - i
    den = 1
    for i in range(lam + 1):
        den *= k - i
    return Fraction(v ** (lam + 1) * w**lam * num, den)


def perfect_predicate(u: int, v: int, w: int) -> bool:
    """Necessary and sufficient conditions for a perfect code at k=3,
    lambda=1."""
    if u == 3:
        return w % 2 == 1 or (w % 2 == 0 and v % 2 == 0)
    return (
        ((u - 1) * v * w) % 2 == 0
        and (u * (u - 1) * v * w) % 3 == 0
        and not (u % 4 in (2, 3) and w % 4 == 2 and v % 2 == 1)
    )


def j_star(u: int, v: int, w: int) -> BoundReport:
    """Refined bound for k=3, lambda=1: the Johnson value, minus one when
    any of the five congruence exception branches fires."""
    if u < 3 or v < 1 or w < 1:
        raise ValueError(f"need u >= 3 and v,w >= 1, got {(u, v, w)}")
    J = johnson_bound(u, v, w, 3, 1)
    cases = tuple(tag for tag, pred in _CASES if pred(u, v, w))
    return BoundReport(
        u=u,
        v=v,
        w=w,
        k=3,
        lam=1,
        J=J,
        J_star=J - 1 if cases else J,
        exception_cases=cases,
        perfect_size=perfect_size(u, v, w, 3, 1),
        perfect_exists=perfect_predicate(u, v, w),
    )


YES, NO, UNKNOWN = "YES", "NO", "UNKNOWN"


def exists_perfect_3d_ooc(u: int, v: int, w: int) -> str:
    return YES if perfect_predicate(u, v, w) else NO


def exists_gdd_gtw(g: int, t: int, w: int) -> str:
    """3-GDD of type g^t w^1."""
    ok = (
        (t >= 3 or (t == 2 and w == g))
        and w <= g * (t - 1)
        and (g * (t - 1) + w) % 2 == 0
        and (g * t) % 2 == 0
        and (g * g * t * (t - 1) + 2 * g * t * w) % 6 == 0
    )
    return YES if ok else NO


_PBD456_EXCEPTIONS = {7, 8, 9, 10, 11, 12, 14, 15, 18, 19, 23}


def exists_pbd_456(u: int) -> str:
    return YES if u >= 4 and u not in _PBD456_EXCEPTIONS else NO


def exists_schgdd(u: int, g: int, t: int) -> str:
    """3-SCHGDD of type (u, g^t); three-valued (open cases -> UNKNOWN)."""
    if not (
        u >= 3
        and t >= 3
        and ((t - 1) * (u - 1) * g) % 2 == 0
        and ((t - 1) * u * (u - 1) * g) % 6 == 0
    ):
        return NO
    if u % 12 in (3, 7) and g % 2 == 1 and t % 4 == 2:
        return NO
    if u == 3 and g % 2 == 1 and t % 2 == 0:
        return NO
    if u == 3 and t == 3 and g % 2 == 0:
        return NO
    if (u, g, t) in ((5, 1, 4), (6, 1, 3)):
        return NO
    if t == 8 and (
        (g % 2 == 1 and u % 6 in (1, 3) and u >= 7) or (g % 6 == 3 and u % 6 == 5)
    ):
        return UNKNOWN
    if u % 12 in (1, 9) and g % 2 == 1 and t % 4 == 2:
        return UNKNOWN
    if u % 6 == 5 and u >= 11 and (
        (g % 6 == 3 and t % 4 == 2) or (g % 6 in (1, 5) and t % 12 == 10)
    ):
        return UNKNOWN
    return YES


def exists_hgdd_gtw(u: int, g: int, t: int, w: int) -> str:
    """3-HGDD of type (u, g^t w^1)."""
    if u < 3:
        return NO
    if t == 2:
        return YES if g == w else NO
    ok = (
        t >= 3
        and 0 <= w <= g * (t - 1)
        and (g * t * (u - 1)) % 2 == 0
        and ((u - 1) * (w - g)) % 2 == 0
        and (g * t * u * (u - 1) * (g * (t - 1) - w)) % 3 == 0
    )
    return YES if ok else NO


def exists_g_cyclic_hgdd(u: int, g: int, t: int) -> str:
    """g-cyclic 3-HGDD of type (u, g^t)."""
    ok = (
        u >= 3
        and t >= 3
        and ((t - 1) * (u - 1) * g) % 2 == 0
        and (t * (t - 1) * u * (u - 1) * g) % 6 == 0
        and not (u == 3 and t == 3 and g % 2 == 0)
    )
    return YES if ok else NO


_FAMILIES = {
    "perfect-3d-ooc": exists_perfect_3d_ooc,
    "3-gdd-gtw": exists_gdd_gtw,
    "pbd-456": exists_pbd_456,
    "3-schgdd": exists_schgdd,
    "3-hgdd": exists_hgdd_gtw,
    "g-cyclic-3-hgdd": exists_g_cyclic_hgdd,
}


def existence_predicates(family: str, **params: int) -> str:
    """Three-valued existence verdict for one of the known predicate
    families."""
    try:
        fn = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; known: {sorted(_FAMILIES)}")
    return fn(**params)
