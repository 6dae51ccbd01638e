"""Group actions on blocks: development rules, orbits, and canonical
orbit representatives.

A development rule shifts residue coordinates by fixed steps; symbols
never move.  An explicit generator permutation (given as point cycles)
is supported for the one catalog entry that needs it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .core import Axis, Block, CyclicClaim, Point, block_key, sort_blocks


@dataclass(frozen=True)
class DevelopmentRule:
    """Additive shift pattern with per-coordinate steps and moduli, or an
    explicit generator permutation (``perm`` as point cycles)."""

    shifts: tuple[int | None, ...]
    moduli: tuple[int | None, ...]
    perm: tuple[tuple[Point, ...], ...] | None = None

    def axis_orders(self) -> list[int]:
        orders = []
        for s, m in zip(self.shifts, self.moduli):
            if s is None or m is None:
                orders.append(1)
            else:
                orders.append(m // gcd(s, m))
        return orders

    @property
    def order(self) -> int:
        if self.perm is not None:
            n = 1
            for cyc in self.perm:
                n = n * len(cyc) // gcd(n, len(cyc))
            return n
        n = 1
        for o in self.axis_orders():
            n *= o
        return n


def _shift_point(p: Point, deltas: Sequence[int], moduli: Sequence[int | None]) -> Point:
    out = []
    for c, d, m in zip(p, deltas, moduli):
        if isinstance(c, str) or d == 0:
            out.append(c)
        else:
            out.append((c + d) % m)
    return tuple(out)


def develop(blocks: Iterable[Block], rule: DevelopmentRule, axes: Sequence[Axis]) -> set:
    """All translates of the given blocks under the full shift group of
    ``rule``, deduplicated.  Symbols are fixed."""
    blocks = list(blocks)
    if rule.perm is not None:
        mapping: dict[Point, Point] = {}
        for cyc in rule.perm:
            for i, p in enumerate(cyc):
                mapping[p] = cyc[(i + 1) % len(cyc)]
        out: set = set()
        for b in blocks:
            cur = b
            for _ in range(rule.order):
                out.add(cur)
                cur = frozenset(mapping.get(p, p) for p in cur)
        return out

    if any(
        s is not None and m is not None and (axes[i].modulus is None or m > axes[i].modulus)
        for i, (s, m) in enumerate(zip(rule.shifts, rule.moduli))
    ):
        raise ValueError("development modulus exceeds axis modulus")
    if len(rule.shifts) and blocks:
        arity = len(next(iter(next(iter(blocks)))))
        if arity != len(rule.shifts):
            raise ValueError("rule arity does not match point arity")

    orders = rule.axis_orders()
    out = set()
    for b in blocks:
        combos = [()]
        for s, m, o in zip(rule.shifts, rule.moduli, orders):
            step = 0 if s is None else s
            combos = [c + (k * step,) for c in combos for k in range(o)]
        for deltas in combos:
            out.add(frozenset(_shift_point(p, deltas, rule.moduli) for p in b))
    return out


def block_orbit(block: Block, claim: CyclicClaim, axes: Sequence[Axis]) -> list:
    """The orbit of a block under the claimed permutation, in application
    order starting from the block itself."""
    m = claim.mapping()
    orbit = [block]
    cur = claim.apply_block(block, axes, m)
    while cur != block:
        orbit.append(cur)
        if len(orbit) > claim.length:
            raise ValueError("orbit exceeds claimed cycle length")
        cur = claim.apply_block(cur, axes, m)
    return orbit


def orbit_length(block: Block, claim: CyclicClaim, axes: Sequence[Axis]) -> int:
    """Smallest s >= 1 with pi^s(block) = block; divides the cycle length."""
    n = len(block_orbit(block, claim, axes))
    if claim.length % n != 0:
        raise ValueError("orbit length does not divide cycle length")
    return n


def canonical_rep(block: Block, claim: CyclicClaim, axes: Sequence[Axis]) -> Block:
    """Lexicographically least translate of the block under the claim."""
    return min(block_orbit(block, claim, axes), key=block_key)


def canonical_reps(blocks: Iterable[Block], claim: CyclicClaim, axes: Sequence[Axis]) -> list:
    """Reduce a block collection to one canonical representative per
    orbit (blocks from the same orbit merge)."""
    reps = {canonical_rep(b, claim, axes) for b in blocks}
    return sort_blocks(reps)


def orbit_reps(blocks: Iterable[Block], claim: CyclicClaim, axes: Sequence[Axis]) -> list:
    """One canonical representative per orbit of a pi-closed block set.

    Errors if the input is not closed under the claimed permutation or
    contains duplicates (spec'd strictness; use canonical_reps to reduce
    arbitrary collections).
    """
    blocks = list(blocks)
    bset = set(blocks)
    if len(bset) != len(blocks):
        raise ValueError("duplicate blocks in input")
    m = claim.mapping()
    for b in blocks:
        if claim.apply_block(b, axes, m) not in bset:
            raise ValueError("block set is not closed under the claimed permutation")
    return canonical_reps(bset, claim, axes)


def expand_design_blocks(
    base_blocks: Iterable[Block], claim: CyclicClaim | None, axes: Sequence[Axis]
) -> list:
    """Fully develop base blocks under the claim (identity when no claim).

    Returns the multiset as a list; duplicates, if any, indicate invalid
    base blocks and are left for the verifier to flag.
    """
    if claim is None:
        return list(base_blocks)
    out: list = []
    for b in base_blocks:
        orb = block_orbit(b, claim, axes)
        reps = claim.length // len(orb)
        out.extend(orb * reps)
    return out
