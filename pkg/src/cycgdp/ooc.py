"""Conversion between cyclic group divisible packings and optical
orthogonal codewords, plus the definition-level correlation checker.

A codeword is a u x v x w binary array of weight 3 with at most one
pulse per spatial plane; it is stored sparsely as its three (i, j, l)
pulse positions.  One codeword corresponds to one base block.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Design
from .verify import Verdict, Violation, verify


@dataclass(frozen=True)
class Codeword:
    shape: tuple[int, int, int]  # (u, v, w)
    pulses: frozenset  # frozenset[(i, j, l)]

    @property
    def weight(self) -> int:
        return len(self.pulses)

    def shifted(self, tau: int) -> frozenset:
        u, v, w = self.shape
        return frozenset((i, j, (l + tau) % w) for (i, j, l) in self.pulses)


def gdp_to_ooc(d: Design) -> list[Codeword]:
    """One codeword per base block of a verified cyclic packing."""
    from .construct import canonical_gdp
    from .verify import gdp_parameters

    verdict = verify(d)
    if not verdict.ok:
        raise ValueError(f"design fails verification: {verdict.summary()}")
    u, v, w = gdp_parameters(d)
    cd = canonical_gdp(d)
    return [Codeword((u, v, w), frozenset(b)) for b in cd.base_blocks]


def correlation_check(code: list[Codeword], lam: int = 1) -> Verdict:
    """Exhaustive auto- and cross-correlation evaluation.

    Auto: same codeword, every shift not divisible by the time length.
    Cross: distinct codewords, every shift.  Also checks weight and the
    one-pulse-per-plane restriction.
    """
    v = Verdict(ok=True)
    if not code:
        return v
    shape = code[0].shape
    u, vv, w = shape
    for idx, c in enumerate(code):
        if c.shape != shape:
            v.violations.append(Violation("shape", idx, f"codeword shape {c.shape} != {shape}"))
            v.ok = False
            return v
        if c.weight != 3:
            v.violations.append(Violation("weight", idx, f"weight {c.weight} != 3"))
        planes = [i for (i, j, l) in c.pulses]
        if len(set(planes)) != len(planes):
            v.violations.append(Violation("am-opp", idx, "two pulses in one spatial plane"))
    for ai, a in enumerate(code):
        for tau in range(1, w):
            corr = len(a.pulses & a.shifted(tau))
            if corr > lam:
                v.violations.append(
                    Violation("auto-correlation", (ai, tau), f"auto-correlation {corr} > {lam}")
                )
    for ai, a in enumerate(code):
        for bi in range(ai + 1, len(code)):
            b = code[bi]
            for tau in range(w):
                corr = len(a.pulses & b.shifted(tau))
                if corr > lam:
                    v.violations.append(
                        Violation(
                            "cross-correlation",
                            (ai, bi, tau),
                            f"cross-correlation {corr} > {lam}",
                        )
                    )
    v.ok = not v.violations
    v.base_blocks = len(code)
    return v


def ooc_to_gdp(code: list[Codeword]) -> Design:
    """Inverse conversion: base blocks from pulse supports, with the
    correlation property checked first."""
    from .core import Axis, CyclicClaim, Schema, sort_blocks
    from . import orbits

    verdict = correlation_check(code, 1)
    if not verdict.ok:
        raise ValueError(f"code fails the correlation check: {verdict.violations[0]}")
    if not code:
        raise ValueError("empty code has no shape; supply at least one codeword")
    u, v, w = code[0].shape
    axes = (Axis(u), Axis(v), Axis(w))
    claim = CyclicClaim(length=w, axis=2)
    groups = tuple(
        frozenset((i, j, l) for j in range(v) for l in range(w)) for i in range(u)
    )
    blocks = orbits.canonical_reps([frozenset(c.pulses) for c in code], claim, axes)
    kind = "SCGDP" if v == 1 and w > 1 else "GDP"
    d = Design(
        Schema(kind=kind, axes=axes, groups=groups, cyclic=claim),
        tuple(sort_blocks(blocks)),
        provenance="imported code",
    )
    vv = verify(d)
    if not vv.ok:
        raise ValueError(f"imported design fails verification: {vv.summary()}")
    return d


def orbit_signature(d: Design):
    """Canonical orbit-representative set after relabeling; equal
    signatures mean the same packing up to representative choice."""
    from .construct import canonical_gdp

    return frozenset(canonical_gdp(d).base_blocks)


# --- sparse text format ----------------------------------------------------


def serialize_code(code: list[Codeword], two_d: bool = False) -> str:
    if not code:
        raise ValueError("cannot serialize an empty code without a shape")
    u, v, w = code[0].shape
    if two_d and v != 1:
        raise ValueError("the flattened 2-D view needs v = 1")
    lines = [f"%OOC v1 u={u} v={v} w={w}" + (" two-d" if two_d else "")]
    for c in code:
        pulses = sorted(c.pulses)
        if two_d:
            lines.append("CW " + " ".join(f"{i},{l}" for (i, j, l) in pulses))
        else:
            lines.append("CW " + " ".join(f"{i},{j},{l}" for (i, j, l) in pulses))
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> list[Codeword]:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("%OOC v1"):
        raise ValueError("missing %OOC v1 header")
    header = dict(
        kv.split("=") for kv in lines[0].split()[2:] if "=" in kv
    )
    u, v, w = int(header["u"]), int(header["v"]), int(header["w"])
    two_d = "two-d" in lines[0]
    out = []
    for ln in lines[1:]:
        if not ln.startswith("CW "):
            raise ValueError(f"bad line {ln!r}")
        pulses = set()
        for tok in ln[3:].split():
            parts = [int(x) for x in tok.split(",")]
            if two_d:
                i, l = parts
                pulses.add((i, 0, l))
            else:
                i, j, l = parts
                pulses.add((i, j, l))
        out.append(Codeword((u, v, w), frozenset(pulses)))
    return out
