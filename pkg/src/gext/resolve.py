"""Minimal graded free resolutions and Betti statistics.

Built by iterated syzygy computation: prune the module, take minimal
generators of the syzygies of each differential's columns, repeat.
Because every column set is a minimal generating set, the syzygy
generators have no unit entries and the resolution is minimal by
construction.  Over a quotient ring resolutions can be infinite, so a
length cap is mandatory there.
"""

from __future__ import annotations

from .free import FreeModule, GradedMatrix
from .gmod import GradedModule, prune
from .groebner import INF, MINUS_INF, minimal_generators, syzygies
from .ring import AlgebraError


class FreeResolution:
    """Chain F_cap -> ... -> F_1 -> F_0 (-> M -> 0), minimal."""

    __slots__ = ("module", "free_modules", "differentials", "complete",
                 "length_cap")

    def __init__(self, module, free_modules, differentials, complete,
                 length_cap):
        self.module = module              # the (pruned) augmentation target
        self.free_modules = free_modules  # [F_0, F_1, ...]
        self.differentials = differentials
        self.complete = complete
        self.length_cap = length_cap

    @property
    def length(self) -> int:
        return len(self.differentials)

    @property
    def minimal(self) -> bool:
        return True

    def twists(self, i: int):
        """Betti degrees a_{i,j}; empty beyond the computed range."""
        if 0 <= i < len(self.free_modules):
            return self.free_modules[i].twists
        return ()

    def __repr__(self):
        ranks = " <- ".join(str(f.rank) for f in self.free_modules)
        tail = "" if self.complete else f" (capped at {self.length_cap})"
        return f"FreeResolution({ranks}{tail})"


def free_resolution(module: GradedModule, length_cap=None) -> FreeResolution:
    if module.ring.is_quotient and length_cap is None:
        raise AlgebraError(
            "a length cap is required over a quotient ring (resolutions "
            "may be infinite)")
    pruned, _ = prune(module)
    free_modules = [pruned.cover]
    differentials = []
    cols = [c for c in pruned.presentation.columns]
    src = pruned.presentation.source
    complete = False
    while True:
        if not cols:
            complete = True
            break
        if length_cap is not None and len(differentials) >= length_cap:
            break
        differentials.append(
            GradedMatrix(src, free_modules[-1], cols, check=False))
        free_modules.append(src)
        syz = syzygies(cols, ambient=free_modules[-2])
        _, cols = minimal_generators(syz.columns, ambient=src)
        src = FreeModule(module.ring, tuple(c.degree() for c in cols))
    return FreeResolution(pruned, free_modules, differentials, complete,
                          length_cap)


class BettiTable:
    """Multiplicities of Betti degrees with the max/min conventions."""

    def __init__(self, resolution: FreeResolution):
        self.resolution = resolution
        self.entries: dict = {}
        for i in range(len(resolution.free_modules)):
            for a in resolution.twists(i):
                key = (i, a)
                self.entries[key] = self.entries.get(key, 0) + 1

    @property
    def pd(self):
        """Projective dimension; only meaningful for complete resolutions."""
        indices = [i for (i, _) in self.entries]
        if not indices:
            return MINUS_INF
        return max(indices)

    def betti(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def max_degree(self, i: int):
        """a-bar_i: max degree of minimal generators of the i-th syzygy."""
        degs = [a for (k, a) in self.entries if k == i]
        return max(degs) if degs else MINUS_INF

    def min_degree(self, i: int):
        """a-under_i: min degree, +inf when empty."""
        degs = [a for (k, a) in self.entries if k == i]
        return min(degs) if degs else INF

    def degrees(self, i: int):
        """Betti degrees at homological index i, with multiplicity."""
        return sorted(a for (k, a), b in self.entries.items() if k == i
                      for _ in range(b))

    def grid(self) -> str:
        """Conventional layout: rows are degree - index, columns index."""
        if not self.entries:
            return "0"
        imax = max(i for (i, _) in self.entries)
        slopes = [a - i for (i, a) in self.entries]
        lines = ["      " + "".join(f"{i:>6}" for i in range(imax + 1))]
        for s in range(min(slopes), max(slopes) + 1):
            row = [f"{s:>6}"]
            for i in range(imax + 1):
                b = self.entries.get((i, s + i), 0)
                row.append(f"{b if b else '.':>6}")
            lines.append("".join(row))
        return "\n".join(lines)


def betti_stats(resolution: FreeResolution) -> BettiTable:
    return BettiTable(resolution)


def hilbert_numerator(resolution: FreeResolution) -> dict:
    """Numerator of the Hilbert series over (1-t)^nvars, as degree->coeff.

    Valid for complete resolutions over the base polynomial ring.
    """
    out: dict[int, int] = {}
    sign = 1
    for f in resolution.free_modules:
        for a in f.twists:
            out[a] = out.get(a, 0) + sign
        sign = -sign
    return {e: c for e, c in out.items() if c}
