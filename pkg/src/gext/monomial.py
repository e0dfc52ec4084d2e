"""Packed-integer monomials with the graded reverse lexicographic order.

A monomial in n+1 variables is stored as a single Python int.  The low
bytes hold the *complemented* exponents 127 - e_j (variable j in byte j),
and everything above byte n holds the total degree.  Two payoffs:

  * numeric comparison of packed values IS grevlex (degree field first,
    then the complemented exponents from the last variable down), and
  * divisibility is a masked subtraction: a | b iff no byte of the
    exponent field of a - b borrows.

Exponents are capped at 127 so the guard bit of each byte stays clean.
"""

from __future__ import annotations

import itertools

_W = 8          # bits per exponent byte
_CAP = 127      # max exponent per variable


class ExponentOverflow(OverflowError):
    pass


class MonomialContext:
    """Encoding tables for a fixed number of variables."""

    __slots__ = ("nvars", "one", "_expmask", "_guards", "_degshift")

    def __init__(self, nvars: int):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        self._degshift = _W * nvars
        self.one = sum(_CAP << (_W * j) for j in range(nvars))
        self._expmask = (1 << self._degshift) - 1
        self._guards = sum(0x80 << (_W * j) for j in range(nvars))

    def encode(self, exponents) -> int:
        exponents = tuple(exponents)
        if len(exponents) != self.nvars:
            raise ValueError("wrong number of exponents")
        packed = 0
        total = 0
        for j, e in enumerate(exponents):
            if e < 0:
                raise ValueError("negative exponent")
            if e > _CAP:
                raise ExponentOverflow(f"exponent {e} exceeds {_CAP}")
            packed += (_CAP - e) << (_W * j)
            total += e
        return (total << self._degshift) | packed

    def decode(self, m: int):
        return tuple(_CAP - ((m >> (_W * j)) & 0xFF) for j in range(self.nvars))

    def degree(self, m: int) -> int:
        return m >> self._degshift

    def mul(self, a: int, b: int) -> int:
        r = a + b - self.one
        if r & self._guards:
            raise ExponentOverflow("exponent overflow in product")
        return r

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial a divides monomial b."""
        return not (((a & self._expmask) - (b & self._expmask)) & self._guards)

    def quotient(self, b: int, a: int) -> int:
        """b / a, assuming a divides b."""
        return b - a + self.one

    def lcm(self, a: int, b: int) -> int:
        ea = self.decode(a)
        eb = self.decode(b)
        return self.encode(tuple(map(max, ea, eb)))

    def variable(self, j: int) -> int:
        return self.encode(tuple(1 if i == j else 0 for i in range(self.nvars)))

    def support(self, m: int):
        """Indices of variables with positive exponent."""
        e = self.decode(m)
        return frozenset(j for j, x in enumerate(e) if x)

    def monomials_of_degree(self, d: int):
        """All packed monomials of total degree d, in a fixed order."""
        if d < 0:
            return
        n = self.nvars
        for bars in itertools.combinations(range(d + n - 1), n - 1):
            exps = []
            prev = -1
            for b in bars:
                exps.append(b - prev - 1)
                prev = b
            exps.append(d + n - 2 - prev)
            yield self.encode(exps)


_contexts: dict[int, MonomialContext] = {}


def context(nvars: int) -> MonomialContext:
    ctx = _contexts.get(nvars)
    if ctx is None:
        ctx = _contexts[nvars] = MonomialContext(nvars)
    return ctx
