"""Presentations, minimal free resolutions, Betti tables, Hilbert data.

A module is the cokernel of a graded map rels: F1 -> F0 = gens. Resolutions
are built minimal by construction: the presentation is first reduced by unit
elimination and column pruning, then each kernel is replaced by a minimal
homogeneous generating set (weakly increasing degree + Nakayama), so no map
in the chain carries a nonzero constant entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .groebner import minimal_generators, syzygies
from .modules import GradedFreeModule, GradedMap
from .rings import AlgebraError, Polynomial

MINUS_INFINITY = float("-inf")


@dataclass
class Presentation:
    """coker(rels: F1 -> gens), all data homogeneous."""

    gens: GradedFreeModule
    rels: GradedMap
    cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def free(cls, ring, degrees):
        gens = GradedFreeModule(ring, tuple(degrees))
        return cls(gens, GradedMap.zero(GradedFreeModule(ring, ()), gens))

    @property
    def ring(self):
        return self.gens.ring

    def validate(self):
        if self.rels.target != self.gens:
            raise AlgebraError("relation map must land in the generator module")
        self.rels.validate()
        return self


@dataclass
class FreeResolution:
    """modules[0] <- modules[1] <- ... with maps[i]: modules[i+1] -> modules[i]."""

    modules: list
    maps: list
    minimal: bool = True

    @property
    def length(self):
        return len(self.maps)


@dataclass
class BettiTable:
    entries: dict

    def regularity(self):
        if not self.entries:
            return MINUS_INFINITY
        return max(j - i for (i, j) in self.entries)

    def column(self, i):
        return {j: v for (ii, j), v in self.entries.items() if ii == i}


def minimize_presentation(pres):
    """Isomorphic presentation with no unit relation entries and with the
    relation columns a minimal generating set of the relation submodule."""
    pres.validate()
    ring = pres.ring
    gen_degrees = list(pres.gens.degrees)
    col_degrees = list(pres.rels.source.degrees)
    cols = [list(col) for col in pres.rels.columns()]

    def find_unit():
        for j, col in enumerate(cols):
            for i, p in enumerate(col):
                if not p.is_zero() and p.is_constant():
                    return i, j
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        i, j = hit
        pivot = cols[j]
        inv = ring.cinv(pivot[i].constant_value())
        pivot = [p.scale(inv) for p in pivot]
        for k in range(len(cols)):
            if k == j:
                continue
            factor = cols[k][i]
            if factor.is_zero():
                continue
            cols[k] = [a - factor * b for a, b in zip(cols[k], pivot)]
        del cols[j]
        del col_degrees[j]
        for col in cols:
            del col[i]
        del gen_degrees[i]

    keep = [j for j, col in enumerate(cols) if any(not p.is_zero() for p in col)]
    cols = [cols[j] for j in keep]
    col_degrees = [col_degrees[j] for j in keep]

    gens = GradedFreeModule(ring, tuple(gen_degrees))
    if cols:
        raw = GradedMap.from_columns(GradedFreeModule(ring, tuple(col_degrees)), gens, cols)
        rels = minimal_generators(raw)
    else:
        rels = GradedMap.zero(GradedFreeModule(ring, ()), gens)
    return Presentation(gens, rels)


def minimal_free_resolution(pres):
    """Minimal free resolution of coker(pres), cached on the presentation."""
    if "resolution" in pres.cache:
        return pres.cache["resolution"]
    reduced = minimize_presentation(pres)
    ring = pres.ring
    modules = [reduced.gens]
    maps = []
    if reduced.gens.rank and reduced.rels.source.rank:
        maps.append(reduced.rels)
        modules.append(reduced.rels.source)
        while True:
            sz = minimal_generators(syzygies(maps[-1]))
            if sz.source.rank == 0:
                break
            maps.append(sz)
            modules.append(sz.source)
            assert len(maps) <= ring.num_vars, "Hilbert syzygy bound exceeded"
    for m in maps:
        for row in m.matrix:
            for p in row:
                assert p.is_zero() or not p.is_constant(), "resolution is not minimal"
    res = FreeResolution(modules=modules, maps=maps, minimal=True)
    betti = BettiTable(
        entries={
            (i, j): mod.degrees.count(j)
            for i, mod in enumerate(modules)
            for j in sorted(set(mod.degrees))
        }
    )
    pres.cache["resolution"] = (res, betti)
    pres.cache["minimized"] = reduced
    return res, betti


def betti_table(pres):
    return minimal_free_resolution(pres)[1]


def module_regularity(betti):
    """max(j - i) over the Betti table; minus-infinity sentinel for the zero module."""
    return betti.regularity()


def hilbert_function(pres, d):
    """dim of the degree-d piece, exact in every degree via the resolution."""
    res, _ = minimal_free_resolution(pres)
    return sum((-1) ** i * mod.strand_dimension(d) for i, mod in enumerate(res.modules))


def _binomial_poly(n, a):
    """Coefficients of d -> C(n + d - a, n) as a polynomial in d."""
    coeffs = [Fraction(1)]
    for j in range(1, n + 1):
        shift = Fraction(j - a)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k] += c * shift
            nxt[k + 1] += c
        coeffs = nxt
    fact = Fraction(math.factorial(n))
    return [c / fact for c in coeffs]


def hilbert_polynomial(pres):
    """Coefficient tuple (ascending) of the Hilbert polynomial, exact rationals."""
    if "hilbert_poly" in pres.cache:
        return pres.cache["hilbert_poly"]
    res, _ = minimal_free_resolution(pres)
    n = pres.ring.dim
    coeffs = [Fraction(0)] * (n + 1)
    for i, mod in enumerate(res.modules):
        sign = (-1) ** i
        for a in mod.degrees:
            for k, c in enumerate(_binomial_poly(n, a)):
                coeffs[k] += sign * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    out = tuple(coeffs)
    pres.cache["hilbert_poly"] = out
    return out


def evaluate_hilbert_polynomial(coeffs, d):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * d + c
    if acc.denominator != 1:
        raise AlgebraError(f"Hilbert polynomial value at {d} is not an integer: {acc}")
    return int(acc)


@dataclass
class HilbertData:
    function: dict
    polynomial: tuple

    def polynomial_value(self, d):
        return evaluate_hilbert_polynomial(self.polynomial, d)


def hilbert_data(pres, window=None):
    """Hilbert function over a degree window plus the Hilbert polynomial.

    Default window: [min generator degree - 2, module regularity + n + 2].
    """
    res, betti = minimal_free_resolution(pres)
    poly = hilbert_polynomial(pres)
    if window is None:
        if betti.entries:
            lo = min(j for (_, j) in betti.entries) - 2
            hi = betti.regularity() + pres.ring.dim + 2
        else:
            lo, hi = 0, 0
        window = (lo, hi)
    lo, hi = window
    func = {d: hilbert_function(pres, d) for d in range(lo, hi + 1)}
    return HilbertData(function=func, polynomial=poly)


def default_verification_window(pres):
    _, betti = minimal_free_resolution(pres)
    if not betti.entries:
        return (0, 0)
    lo = min(j for (_, j) in betti.entries) - 2
    hi = betti.regularity() + pres.ring.dim + 2
    return (lo, hi)


def verify_strand_exactness(pres, window=None):
    """Assert the cached resolution is a resolution of coker(pres):
    consecutive composites vanish identically, strand ranks are exact at
    homological positions >= 1, and the degree-d cokernel dimensions match
    the original presentation on the window."""
    res, _ = minimal_free_resolution(pres)
    if window is None:
        window = default_verification_window(pres)
    lo, hi = window
    for a, b in zip(res.maps, res.maps[1:]):
        assert a.compose(b).is_zero(), "consecutive maps do not compose to zero"
    orig_gens = pres.gens
    orig_rels = pres.rels
    for d in range(lo, hi + 1):
        ranks = [m.strand_matrix(d).rank() for m in res.maps]
        dims = [m.strand_dimension(d) for m in res.modules]
        for i in range(1, len(res.modules)):
            incoming = ranks[i] if i < len(ranks) else 0
            kernel = dims[i] - ranks[i - 1]
            assert kernel == incoming, (
                f"resolution not exact at position {i}, degree {d}"
            )
        expected = orig_gens.strand_dimension(d) - orig_rels.strand_matrix(d).rank()
        got = dims[0] - (ranks[0] if ranks else 0)
        assert got == expected, f"cokernel dimension mismatch in degree {d}"
    return True
