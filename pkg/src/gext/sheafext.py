"""Truncation bounds and global Ext / sheaf cohomology algorithms.

The key identity: for r at least the truncation bound, the graded pieces
of Ext^m_R(M_{>=r}, N) in degrees >= e compute the global extension
modules Ext^m(X; M~, N~(v)) for v >= e, where X = Proj(R).  Sheaf
cohomology is the M = R case.  The bound uses Betti degree statistics of
the restriction of scalars _S N.
"""

from __future__ import annotations

from .free import FreeModule, GradedMatrix, ModuleElement
from .gmod import (GradedModule, ModuleMap, direct_sum, graded_component,
                   image_of, kernel_of_map, prune, restrict_scalars,
                   ring_module, subquotient, submodule_equals, truncate_module,
                   zero_module)
from .groebner import INF, MINUS_INF
from .homext import (HomModule, express_in_generators, ext_module, hom_module,
                     homomorphism_from)
from .resolve import BettiTable, betti_stats, free_resolution
from .ring import AlgebraError, Ring, RingMismatch

_s_stats_cache: dict = {}


def s_betti(module: GradedModule) -> BettiTable:
    """Betti table of the restriction of scalars _S N (cached)."""
    cached = _s_stats_cache.get(module)
    if cached is None:
        res = free_resolution(restrict_scalars(module))
        cached = _s_stats_cache[module] = betti_stats(res)
    return cached


def module_dim(module: GradedModule):
    """Krull dimension via the Hilbert numerator of the S-resolution."""
    bt = s_betti(module)
    if not bt.entries:
        return MINUS_INF
    numer: dict[int, int] = {}
    for (i, a), b in bt.entries.items():
        numer[a] = numer.get(a, 0) + (b if i % 2 == 0 else -b)
    nvars = module.ring.nvars
    coeffs = {e: c for e, c in numer.items() if c}
    order = 0
    while order <= nvars and coeffs:
        if sum(coeffs.values()) != 0:
            break
        items = sorted(coeffs.items())
        out: dict[int, int] = {}
        acc = 0
        for e in range(items[0][0], items[-1][0] + 1):
            acc += coeffs.get(e, 0)
            if acc:
                out[e] = acc
        coeffs = out
        order += 1
    return nvars - order


class TruncationBound:
    """Theorem-1 truncation bound, with the inputs echoed for inspection."""

    __slots__ = ("r", "r_weak", "m", "e", "n", "ell", "pd", "abar")

    def __init__(self, r, r_weak, m, e, n, ell, pd, abar):
        self.r = r
        self.r_weak = r_weak  # the printed Algorithm-3.1 line (omits "- i")
        self.m = m
        self.e = e
        self.n = n
        self.ell = ell
        self.pd = pd
        self.abar = abar      # {i: abar_i(_S N)} over the index window

    def __repr__(self):
        return f"TruncationBound(r={self.r}, m={self.m}, e={self.e})"


def truncation_bound(m: int, e: int, module: GradedModule) -> TruncationBound:
    """r such that Ext^m_R(M_{>=r}, N)_{>=e} computes the global Ext sum."""
    n = module.ring.nvars - 1
    bt = s_betti(module)
    dim_n = module_dim(module)
    ell = min(dim_n, m)
    pd = bt.pd
    lo = n - ell if ell != MINUS_INF else INF
    abar = {}
    if pd != MINUS_INF and lo != INF:
        for i in range(int(lo), int(pd) + 1):
            abar[i] = bt.max_degree(i)
    if abar:
        r = max(a - i for i, a in abar.items()) - e - m + 1
        r_weak = max(abar.values()) - e - m + 1
    else:
        r = MINUS_INF
        r_weak = MINUS_INF
    return TruncationBound(r, r_weak, m, e, n, ell, pd, abar)


def vanishing_bound(m: int, module: GradedModule):
    """v0 with H^m(X, N~(v)) = 0 for all v >= v0 (Lemma vanishing)."""
    if m <= 0:
        raise AlgebraError("vanishing bound requires m >= 1")
    n = module.ring.nvars - 1
    abar = s_betti(module).max_degree(n - m)
    if abar == MINUS_INF:
        return MINUS_INF
    return abar - n


def corollary_bound(m: int, source: GradedModule, target: GradedModule):
    """Least e satisfying both inequality families of the Corollary.

    Uses abar of _S N and aunder of the R-resolution of M through
    homological degree m.
    """
    if source.ring != target.ring:
        raise RingMismatch("modules over different rings")
    n = target.ring.nvars - 1
    bt_n = s_betti(target)
    ell = min(module_dim(target), m)
    if ell == MINUS_INF or m < 0:
        return MINUS_INF
    cap = max(m, 0)
    res_m = free_resolution(source, length_cap=cap)
    bt_m = betti_stats(res_m)
    best = MINUS_INF
    for u in range(0, int(ell) + 1):
        under = bt_m.min_degree(m - u)
        v1 = bt_n.max_degree(n - u) - under - n
        best = max(best, v1)
        if u != 1:
            v2 = bt_n.max_degree(n - u + 1) - under - n
            best = max(best, v2)
    return best


def global_ext_sum(m: int, e: int, source: GradedModule,
                   target: GradedModule) -> GradedModule:
    """Algorithm 3.1: the graded module +_{v>=e} Ext^m(X; M~, N~(v))."""
    if source.ring != target.ring:
        raise RingMismatch("modules over different rings")
    ring = source.ring
    if m < 0:
        return zero_module(ring)
    if module_dim(source) <= 0:
        return zero_module(ring)  # Remark dim0 (includes the zero module)
    if module_dim(target) == MINUS_INF:
        return zero_module(ring)
    tb = truncation_bound(m, e, target)
    if tb.pd != MINUS_INF and tb.pd >= tb.n - tb.ell:
        source = truncate_module(source, int(tb.r))
    ext = ext_module(m, source, target)
    result = truncate_module(ext.underlying, e)
    pruned, _ = prune(result)
    return pruned


def global_ext(m: int, source: GradedModule, target: GradedModule):
    """Algorithm 3.2: (dimension, basis) of the k-vector space
    Ext^m(X; M~, N~)."""
    return graded_component(global_ext_sum(m, 0, source, target), 0)


def sheaf_cohomology_sum(m: int, e: int, module: GradedModule) -> GradedModule:
    """Algorithm 3.3: +_{v>=e} H^m(X, N~(v)) via the identity (EH)."""
    return global_ext_sum(m, e, ring_module(module.ring), module)


def sheaf_cohomology(m: int, module: GradedModule):
    """Algorithm 3.4: (dimension, basis) of H^m(X, N~)."""
    return graded_component(sheaf_cohomology_sum(m, 0, module), 0)


class ExtensionResult:
    __slots__ = ("module", "iota", "phi", "verified", "truncated")

    def __init__(self, module, iota, phi, verified, truncated):
        self.module = module        # E
        self.iota = iota            # N -> E
        self.phi = phi              # E -> M'
        self.verified = verified    # (ker iota = 0, im iota = ker phi, im phi = M')
        self.truncated = truncated  # M'


def extension_setup(source: GradedModule, target: GradedModule):
    """(M', P, K, alpha, Hom(K, N)) for the Yoneda construction: M' is the
    truncation of M at the m=1 bound, P its free cover, K = image of the
    presentation with inclusion alpha: K -> P."""
    if source.ring != target.ring:
        raise RingMismatch("modules over different rings")
    ring = source.ring
    tb = truncation_bound(1, 0, target)
    m_tr = source if tb.r == MINUS_INF else truncate_module(source, int(tb.r))
    p_free = GradedModule(GradedMatrix.zero(FreeModule(ring, ()), m_tr.cover))
    mu = ModuleMap(
        GradedModule(GradedMatrix.zero(FreeModule(ring, ()),
                                       m_tr.presentation.source)),
        p_free, m_tr.presentation, check=False)
    kmod, alpha = image_of(mu)
    morphisms = hom_module(kmod, target)
    return m_tr, p_free, kmod, alpha, morphisms


def degree_zero_hom_coords(hom: HomModule):
    """Coordinate vectors for a basis of the degree-0 component of a Hom
    module, each usable as `coords` for homomorphismFrom."""
    ring = hom.source.ring
    _, basis = graded_component(hom.underlying, 0)
    out = []
    for (t, mono) in basis:
        coords = [ring.zero()] * len(hom.anchors)
        coords[t] = _mono_poly(ring, mono)
        out.append(coords)
    return out


def _mono_poly(ring, mono):
    from .ring import Polynomial
    return Polynomial(ring, {mono: 1})


def class_is_split(hom: HomModule, alpha: ModuleMap, coords) -> bool:
    """True iff the selected theta: K -> N extends to P along alpha, i.e.
    its class in Ext^1(M', N) vanishes."""
    from .groebner import groebner_basis
    from .homext import hom_of_free
    ring = hom.source.ring
    target = hom.target
    nb = target.cover.rank
    hom_f0 = hom_of_free(hom.source.cover, target)
    cover = hom_f0.cover
    restr = []
    for j in range(alpha.target.cover.rank):
        entries = [alpha.matrix.entry(j, k)
                   for k in range(alpha.matrix.source.rank)]
        for i in range(nb):
            data = {}
            for k, f in enumerate(entries):
                for mo, c in f.terms.items():
                    data[(k * nb + i, mo)] = c
            el = ModuleElement(cover, data)
            if not el.is_zero():
                restr.append(el)
    gb = groebner_basis(restr + list(hom_f0.relations), ambient=cover)
    element = None
    for c, anchor in zip(coords, hom.anchors):
        piece = anchor.poly_mul(ring.polynomial(c))
        element = piece if element is None else element + piece
    if element is None or element.is_zero():
        return True
    return gb.reduce(element).is_zero()


def nonsplit_extension_coords(source: GradedModule, target: GradedModule):
    """Coords of a degree-0 theta with nonzero Ext^1 class, or None."""
    _, _, _, alpha, morphisms = extension_setup(source, target)
    for coords in degree_zero_hom_coords(morphisms):
        if not class_is_split(morphisms, alpha, coords):
            return coords
    return None


def yoneda_extension(source: GradedModule, target: GradedModule,
                     coords) -> ExtensionResult:
    """Materialize 0 -> N -> E -> M_{>=r} -> 0 from a degree-0 element of
    Hom(K, N), K the kernel of the free cover of M_{>=r} (pushout of
    theta and the inclusion alpha: K -> P)."""
    ring = source.ring
    m_tr, p_free, kmod, alpha, morphisms = extension_setup(source, target)
    theta = homomorphism_from(morphisms, coords)
    if theta.degree != 0:
        raise AlgebraError("theta must have degree 0")
    dsum = direct_sum(p_free, target)
    p = p_free.cover.rank
    psi_cols = []
    for t in range(kmod.cover.rank):
        data = dict(alpha.matrix.columns[t].data)
        neg = -theta.matrix.columns[t]
        for (i, mo), c in neg.data.items():
            data[(p + i, mo)] = c
        psi_cols.append(ModuleElement(dsum.cover, data))
    gens = [dsum.cover.basis_element(j) for j in range(dsum.cover.rank)]
    rels = list(dsum.relations) + psi_cols
    emod, gelts = subquotient(gens, rels, dsum.cover)
    coeffs = express_in_generators(
        gelts, dsum.cover,
        [dsum.cover.basis_element(p + i) for i in range(target.cover.rank)],
        rels=rels)
    iota_cols = [ModuleElement(emod.cover, dict(c)) for c in coeffs]
    iota = ModuleMap(target, emod,
                     GradedMatrix(FreeModule(ring, target.generator_degrees),
                                  emod.cover, iota_cols, check=False))
    phi_cols = []
    for g in gelts:
        data = {(j, mo): c for (j, mo), c in g.data.items() if j < p}
        phi_cols.append(ModuleElement(m_tr.cover, data))
    phi = ModuleMap(emod, m_tr,
                    GradedMatrix(FreeModule(ring, emod.generator_degrees),
                                 m_tr.cover, phi_cols, check=False))
    ker_iota, _ = kernel_of_map(iota)
    v1 = ker_iota.is_zero()
    _, im_iota_incl = image_of(iota)
    _, ker_phi_incl = kernel_of_map(phi)
    v2 = submodule_equals(im_iota_incl, ker_phi_incl)
    _, im_phi_incl = image_of(phi)
    v3 = submodule_equals(im_phi_incl, ModuleMap.identity(m_tr))
    verified = (v1, v2, v3)
    if not all(verified):
        raise AlgebraError(f"extension verification failed: {verified}")
    return ExtensionResult(emod, iota, phi, verified, m_tr)


def cotangent_module(ring: Ring):
    """(Omega, OmegaDual) from the conormal sequence: Omega is the kernel
    of the Euler map modulo the Jacobian columns of the quotient
    generators; OmegaDual = Hom(Omega, R)."""
    nv = ring.nvars
    euler_free = GradedModule(GradedMatrix.zero(
        FreeModule(ring, ()), FreeModule(ring, (1,) * nv)))
    rmod = ring_module(ring)
    euler = ModuleMap(
        euler_free, rmod,
        GradedMatrix.from_entries(ring, [[ring.variable(j) for j in range(nv)]],
                                  (0,), source_twists=(1,) * nv))
    kmod, incl = kernel_of_map(euler)
    jac = []
    fcover = euler_free.cover
    for f in ring.quotient:
        base_f = ring.base.polynomial(f)
        data = {}
        for j in range(nv):
            df = base_f.derivative(j)
            for mo, c in df.terms.items():
                data[(j, mo)] = c
        vec = ModuleElement(fcover, data).reduced()
        if not vec.is_zero():
            jac.append(vec)
    cols = list(kmod.presentation.columns)
    twists = list(kmod.presentation.source.twists)
    if jac:
        coeffs = express_in_generators(list(incl.matrix.columns), fcover, jac)
        for c, vec in zip(coeffs, jac):
            el = ModuleElement(kmod.cover, dict(c))
            cols.append(el)
            twists.append(vec.degree())
    pres = GradedMatrix(FreeModule(ring, tuple(twists)), kmod.cover, cols,
                        check=False)
    omega, _ = prune(GradedModule(pres))
    omega_dual = hom_module(omega, rmod).underlying
    return omega, omega_dual
