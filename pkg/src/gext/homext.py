"""Graded Hom and Ext modules, and extraction of actual homomorphisms.

Hom(M, N) is the kernel of the induced map Hom(F0, N) -> Hom(F1, N) for a
presentation F1 -> F0 -> M, using Hom(+_k R(-a_k), N) = +_k N(a_k); the
grading is by degrees of maps, so the degree-d component is the space of
degree-d homomorphisms.  Ext^m is kernel-modulo-image one step further
along a minimal resolution of M.
"""

from __future__ import annotations

from .free import FreeModule, GradedMatrix, ModuleElement
from .gmod import GradedModule, ModuleMap, subquotient, zero_module
from .groebner import ModuleComputation, syzygies
from .resolve import free_resolution
from .ring import AlgebraError, NotHomogeneous, RingMismatch


def hom_of_free(free: FreeModule, module: GradedModule) -> GradedModule:
    """Hom(+_k R(-a_k), N) = +_k N(a_k), generators flattened as k*nb + i."""
    ring = module.ring
    nb = module.cover.rank
    twists = []
    for a in free.twists:
        twists.extend(b - a for b in module.generator_degrees)
    tgt = FreeModule(ring, tuple(twists))
    cols = []
    src_twists = []
    for k, a in enumerate(free.twists):
        for rel in module.relations:
            cols.append(ModuleElement(
                tgt, {(k * nb + i, m): c for (i, m), c in rel.data.items()}))
            src_twists.append(rel.degree() - a)
    src = FreeModule(ring, tuple(src_twists))
    return GradedModule(GradedMatrix(src, tgt, cols, check=False))


def induced_columns(phi: GradedMatrix, module: GradedModule,
                    hom_tgt: GradedModule):
    """Columns of Hom(phi, N): Hom(target(phi), N) -> Hom(source(phi), N),
    one per generator of hom_of_free(phi.target, N), landing in
    hom_tgt = hom_of_free(phi.source, N)."""
    nb = module.cover.rank
    cover = hom_tgt.cover
    cols = []
    for k in range(phi.target.rank):
        entries = [phi.entry(k, l) for l in range(phi.source.rank)]
        for i in range(nb):
            data = {}
            for l, f in enumerate(entries):
                for m, c in f.terms.items():
                    data[(l * nb + i, m)] = c
            cols.append(ModuleElement(cover, data))
    return cols


class HomModule:
    """Hom_R(M, N) with anchors back to matrices F0(M) -> F0(N)."""

    def __init__(self, underlying: GradedModule, source: GradedModule,
                 target: GradedModule, anchors):
        self.underlying = underlying
        self.source = source
        self.target = target
        self.anchors = anchors  # cover elements of hom_of_free(F0(M), N)


class ExtModule:
    def __init__(self, underlying: GradedModule, index: int,
                 source: GradedModule, target: GradedModule):
        self.underlying = underlying
        self.index = index
        self.source = source
        self.target = target


def hom_module(source: GradedModule, target: GradedModule) -> HomModule:
    if source.ring != target.ring:
        raise RingMismatch("Hom of modules over different rings")
    hom_f0 = hom_of_free(source.cover, target)
    cover0 = hom_f0.cover
    pres = source.presentation
    if pres.source.rank == 0:
        gens = [cover0.basis_element(j) for j in range(cover0.rank)]
    else:
        hom_f1 = hom_of_free(pres.source, target)
        delta = induced_columns(pres, target, hom_f1)
        gens = _kernel_generators(delta, hom_f1, cover0)
    underlying, anchors = subquotient(gens, hom_f0.relations, cover0)
    return HomModule(underlying, source, target, anchors)


def _kernel_generators(delta_cols, hom_next: GradedModule, cover0: FreeModule):
    """Generators in cover0 of the kernel of the induced map."""
    k = len(delta_cols)
    combined = delta_cols + list(hom_next.relations)
    if not combined:
        return [cover0.basis_element(j) for j in range(cover0.rank)]
    syz = syzygies(combined, ambient=hom_next.cover)
    out = []
    for c in syz.columns:
        data = {(i, m): v for (i, m), v in c.data.items() if i < k}
        el = ModuleElement(cover0, data)
        if not el.is_zero():
            out.append(el)
    return out


def ext_module(m: int, source: GradedModule, target: GradedModule) -> ExtModule:
    """Ext^m_R(M, N); the resolution of M is computed through degree m+1."""
    if source.ring != target.ring:
        raise RingMismatch("Ext of modules over different rings")
    ring = source.ring
    if m < 0:
        return ExtModule(zero_module(ring), m, source, target)
    res = free_resolution(source, length_cap=m + 1)
    if m >= len(res.free_modules):
        return ExtModule(zero_module(ring), m, source, target)
    f_m = res.free_modules[m]
    if f_m.rank == 0:
        return ExtModule(zero_module(ring), m, source, target)
    hom_m = hom_of_free(f_m, target)
    cover = hom_m.cover
    if m < len(res.differentials):
        d_next = res.differentials[m]
        hom_next = hom_of_free(d_next.source, target)
        delta = induced_columns(d_next, target, hom_next)
        gens = _kernel_generators(delta, hom_next, cover)
    else:
        gens = [cover.basis_element(j) for j in range(cover.rank)]
    rels = list(hom_m.relations)
    if m >= 1:
        d_m = res.differentials[m - 1]
        rels += induced_columns(d_m, target, hom_m)
    underlying, _ = subquotient(gens, rels, cover)
    return ExtModule(underlying, m, source, target)


def homomorphism_from(hom: HomModule, coords) -> ModuleMap:
    """The ModuleMap selected by coefficients over the Hom generators."""
    ring = hom.source.ring
    coords = list(coords)
    if len(coords) != len(hom.anchors):
        raise AlgebraError(
            f"expected {len(hom.anchors)} coordinates, got {len(coords)}")
    element = None
    for c, anchor in zip(coords, hom.anchors):
        piece = anchor.poly_mul(ring.polynomial(c))
        element = piece if element is None else element + piece
    if element is None or element.is_zero():
        return ModuleMap.zero(hom.source, hom.target)
    if not element.is_homogeneous():
        raise NotHomogeneous("coordinates select an inhomogeneous element")
    d = element.degree()
    nb = hom.target.cover.rank
    src = FreeModule(ring, tuple(a + d for a in hom.source.generator_degrees))
    cols = []
    for k in range(hom.source.cover.rank):
        data = {(flat % nb, m): c for (flat, m), c in element.data.items()
                if flat // nb == k}
        cols.append(ModuleElement(hom.target.cover, data))
    mat = GradedMatrix(src, hom.target.cover, cols, check=False)
    return ModuleMap(hom.source, hom.target, mat, degree=d)


def express_in_generators(gens, ambient: FreeModule, elements, rels=()):
    """Coordinates of each element over gens, modulo span(rels) and the
    quotient ideal.

    Returns one coefficient dict {(gen index, monomial): coeff} per
    element; raises if an element is not in the span.
    """
    comp = ModuleComputation(ambient, gens, rels=rels, track=True)
    comp.run()
    out = []
    for v in elements:
        coeffs = comp.express(v)
        if coeffs is None:
            raise AlgebraError("element not in the span of the generators")
        out.append(coeffs)
    return out
