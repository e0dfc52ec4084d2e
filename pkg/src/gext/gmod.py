"""Finitely generated graded modules presented as cokernels.

A GradedModule is the cokernel of a GradedMatrix; its generators are the
basis vectors of the matrix target ("cover").  Subobjects are immediately
re-presented as cokernels through `subquotient`, which computes minimal
generators and minimal relations with the Groebner engine.
"""

from __future__ import annotations

from .free import FreeModule, GradedMatrix, ModuleElement
from .groebner import (GroebnerBasis, MINUS_INF, groebner_basis,
                       minimal_generators, syzygies)
from .ring import AlgebraError, Ring, RingMismatch


class GradedModule:
    """Cokernel of a presentation matrix between graded free modules."""

    __slots__ = ("presentation", "_gb")

    def __init__(self, presentation: GradedMatrix):
        self.presentation = presentation
        self._gb = None

    @property
    def ring(self) -> Ring:
        return self.presentation.ring

    @property
    def cover(self) -> FreeModule:
        return self.presentation.target

    @property
    def generator_degrees(self):
        return self.presentation.target.twists

    @property
    def relations(self):
        return self.presentation.columns

    def relations_gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = groebner_basis(self.presentation.columns,
                                      ambient=self.cover)
        return self._gb

    def is_zero(self) -> bool:
        if self.cover.rank == 0:
            return True
        gb = self.relations_gb()
        return all(gb.reduce(self.cover.basis_element(j)).is_zero()
                   for j in range(self.cover.rank))

    def contains_in_relations(self, v: ModuleElement) -> bool:
        return self.relations_gb().reduce(v).is_zero()

    def __repr__(self):
        return (f"GradedModule(generators {list(self.generator_degrees)}, "
                f"{self.presentation.source.rank} relations over {self.ring!r})")

    def __eq__(self, other):
        return (isinstance(other, GradedModule)
                and self.presentation.target == other.presentation.target
                and self.presentation.source == other.presentation.source
                and all(a == b for a, b in zip(self.presentation.columns,
                                               other.presentation.columns)))

    def __hash__(self):
        return hash((self.presentation.target, self.presentation.source))


def free_module_of(ring: Ring, twists) -> GradedModule:
    target = FreeModule(ring, twists)
    return GradedModule(GradedMatrix.zero(FreeModule(ring, ()), target))


def ring_module(ring: Ring) -> GradedModule:
    """R as a module over itself."""
    return free_module_of(ring, (0,))


def zero_module(ring: Ring) -> GradedModule:
    return free_module_of(ring, ())


def cokernel(matrix: GradedMatrix) -> GradedModule:
    return GradedModule(matrix)


class ModuleMap:
    """Degree-d map between graded modules, given on generators.

    The matrix runs between the free covers; for d != 0 its source twists
    are the source generator degrees shifted by d so homogeneity checks
    stay degreewise exact.  Well-definedness (relations map into
    relations) is certified at construction.
    """

    __slots__ = ("source", "target", "matrix", "degree")

    def __init__(self, source: GradedModule, target: GradedModule,
                 matrix: GradedMatrix, degree: int = 0, check: bool = True):
        if source.ring != target.ring:
            raise RingMismatch("source and target over different rings")
        expected = tuple(a + degree for a in source.generator_degrees)
        if matrix.target != target.cover or matrix.source.twists != expected:
            raise AlgebraError("matrix does not match source/target covers")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.degree = degree
        if check:
            gb = target.relations_gb()
            for rel in source.relations:
                shifted = ModuleElement(matrix.source, rel.data)
                if not gb.reduce(matrix.apply(shifted)).is_zero():
                    raise AlgebraError(
                        "map is not well defined: a source relation does not "
                        "land in the target relations")

    @classmethod
    def zero(cls, source: GradedModule, target: GradedModule, degree: int = 0):
        src = FreeModule(source.ring,
                         tuple(a + degree for a in source.generator_degrees))
        return cls(source, target, GradedMatrix.zero(src, target.cover),
                   degree=degree, check=False)

    @classmethod
    def identity(cls, module: GradedModule):
        return cls(module, module, GradedMatrix.identity(module.cover),
                   check=False)

    def apply_to_cover(self, v: ModuleElement) -> ModuleElement:
        """Image in target.cover of a cover element of the source."""
        if v.ambient != self.source.cover:
            raise RingMismatch("element not in the source cover")
        return self.matrix.apply(ModuleElement(self.matrix.source, v.data))

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if other.target != self.source:
            raise RingMismatch("maps do not compose")
        cols = [self.apply_to_cover(
            ModuleElement(self.source.cover, c.data))
            for c in other.matrix.columns]
        src = FreeModule(self.source.ring,
                         tuple(a + self.degree + other.degree
                               for a in other.source.generator_degrees))
        mat = GradedMatrix(src, self.target.cover,
                           [ModuleElement(self.target.cover, c.data)
                            for c in cols], check=False)
        return ModuleMap(other.source, self.target, mat,
                         degree=self.degree + other.degree, check=False)

    def is_zero(self) -> bool:
        gb = self.target.relations_gb()
        return all(gb.reduce(c).is_zero() for c in self.matrix.columns)

    def __repr__(self):
        return (f"ModuleMap(degree {self.degree}, "
                f"{self.target.cover.rank}x{self.matrix.source.rank})")


# -- the central re-presentation helper -----------------------------------------

def subquotient(gens, rels, ambient: FreeModule):
    """Present (span(gens) + span(rels)) / span(rels) as a cokernel.

    Returns (module, generator_elements): generator_elements[k] is the
    element of `ambient` representing the k-th generator of the module.
    Both the generators and the relation columns are minimalized.
    """
    ring = ambient.ring
    gens = list(gens)
    rels = list(rels)
    _, gmin = minimal_generators(gens, rels=rels, ambient=ambient)
    if not gmin:
        return zero_module(ring), []
    gfree = FreeModule(ring, tuple(g.degree() for g in gmin))
    syz = syzygies(gmin + rels, ambient=ambient)
    proj = []
    k = len(gmin)
    for c in syz.columns:
        data = {(i, m): v for (i, m), v in c.data.items() if i < k}
        el = ModuleElement(gfree, data)
        if not el.is_zero():
            proj.append(el)
    _, relmin = minimal_generators(proj, ambient=gfree)
    src = FreeModule(ring, tuple(c.degree() for c in relmin))
    pres = GradedMatrix(src, gfree, relmin, check=False)
    return GradedModule(pres), gmin


# -- operations ------------------------------------------------------------------

def prune(module: GradedModule):
    """Minimal presentation plus the isomorphism back to `module`."""
    cover = module.cover
    gens = [cover.basis_element(j) for j in range(cover.rank)]
    pruned, gelts = subquotient(gens, module.relations, cover)
    if not gelts:
        mat = GradedMatrix.zero(FreeModule(module.ring, ()), cover)
        return pruned, ModuleMap(pruned, module, mat, check=False)
    src = FreeModule(module.ring, pruned.generator_degrees)
    mat = GradedMatrix(src, cover, gelts, check=False)
    return pruned, ModuleMap(pruned, module, mat, check=False)


def truncate_module(module: GradedModule, r: int) -> GradedModule:
    """Presentation of the truncation M_{>=r}."""
    degs = module.generator_degrees
    if not degs or r <= min(degs):
        return module
    ring = module.ring
    cover = module.cover
    ctx = ring.ctx
    gens = []
    for j, a in enumerate(degs):
        if a >= r:
            gens.append(cover.basis_element(j))
        else:
            for m in ctx.monomials_of_degree(r - a):
                gens.append(ModuleElement(cover, {(j, m): 1}))
    truncated, _ = subquotient(gens, module.relations, cover)
    return truncated


def twist(module: GradedModule, v: int) -> GradedModule:
    """M(v), with M(v)_e = M_{e+v}; generator degrees drop by v."""
    if v == 0:
        return module
    ring = module.ring
    src = FreeModule(ring, tuple(b - v for b in module.presentation.source.twists))
    tgt = FreeModule(ring, tuple(a - v for a in module.generator_degrees))
    cols = [ModuleElement(tgt, c.data) for c in module.presentation.columns]
    return GradedModule(GradedMatrix(src, tgt, cols, check=False))


def direct_sum(a: GradedModule, b: GradedModule) -> GradedModule:
    if a.ring != b.ring:
        raise RingMismatch("direct sum over different rings")
    ring = a.ring
    tgt = FreeModule(ring, a.generator_degrees + b.generator_degrees)
    src = FreeModule(ring, a.presentation.source.twists
                     + b.presentation.source.twists)
    off = a.cover.rank
    cols = [ModuleElement(tgt, c.data) for c in a.presentation.columns]
    cols += [ModuleElement(tgt, {(j + off, m): v for (j, m), v in c.data.items()})
             for c in b.presentation.columns]
    return GradedModule(GradedMatrix(src, tgt, cols, check=False))


def kernel_of_map(f: ModuleMap):
    """(K, inclusion K -> source(f))."""
    cols = list(f.matrix.columns)
    k = len(cols)
    combined = cols + list(f.target.relations)
    syz = syzygies(combined, ambient=f.target.cover)
    scover = f.source.cover
    pre = []
    for c in syz.columns:
        data = {(i, m): v for (i, m), v in c.data.items() if i < k}
        el = ModuleElement(scover, data)
        if not el.is_zero():
            pre.append(el)
    kernel, gelts = subquotient(pre, f.source.relations, scover)
    if not gelts:
        mat = GradedMatrix.zero(FreeModule(f.source.ring, ()), scover)
        return kernel, ModuleMap(kernel, f.source, mat, check=False)
    src = FreeModule(f.source.ring, kernel.generator_degrees)
    mat = GradedMatrix(src, scover, gelts, check=False)
    return kernel, ModuleMap(kernel, f.source, mat, check=False)


def image_of(f: ModuleMap):
    """(image re-presented, inclusion image -> target(f))."""
    cols = [c for c in f.matrix.columns if not c.is_zero()]
    img, gelts = subquotient(cols, f.target.relations, f.target.cover)
    if not gelts:
        mat = GradedMatrix.zero(FreeModule(f.target.ring, ()), f.target.cover)
        return img, ModuleMap(img, f.target, mat, check=False)
    src = FreeModule(f.target.ring, img.generator_degrees)
    mat = GradedMatrix(src, f.target.cover, gelts, check=False)
    return img, ModuleMap(img, f.target, mat, check=False)


def submodule_equals(a: ModuleMap, b: ModuleMap) -> bool:
    """True iff two inclusions into a common target have equal images."""
    if a.target != b.target:
        raise RingMismatch("submodules live in different targets")
    rels = list(a.target.relations)
    cover = a.target.cover
    acols = [ModuleElement(cover, c.data) for c in a.matrix.columns]
    bcols = [ModuleElement(cover, c.data) for c in b.matrix.columns]
    gb_b = groebner_basis(bcols + rels, ambient=cover)
    if not all(gb_b.reduce(c).is_zero() for c in acols):
        return False
    gb_a = groebner_basis(acols + rels, ambient=cover)
    return all(gb_a.reduce(c).is_zero() for c in bcols)


# -- Hilbert data ----------------------------------------------------------------

def graded_component(module: GradedModule, d: int):
    """(dimension, basis of (generator index, packed monomial) pairs)."""
    cover = module.cover
    if cover.rank == 0:
        return 0, []
    ring = module.ring
    ctx = ring.ctx
    gb = module.relations_gb()
    qleads = [lead for lead, _ in ring.quotient_groebner()]
    by_comp: dict[int, list] = {}
    for (j, lead) in gb.lead_terms():
        by_comp.setdefault(j, []).append(lead)
    basis = []
    for j, a in enumerate(module.generator_degrees):
        e = d - a
        if e < 0:
            continue
        leads = by_comp.get(j, ())
        for m in ctx.monomials_of_degree(e):
            if any(ctx.divides(q, m) for q in qleads):
                continue
            if any(ctx.divides(l, m) for l in leads):
                continue
            basis.append((j, m))
    return len(basis), basis


def hilbert_function(module: GradedModule, d: int) -> int:
    return graded_component(module, d)[0]


def restrict_scalars(module: GradedModule) -> GradedModule:
    """View a module over R = S/I as a module over S."""
    ring = module.ring
    if not ring.is_quotient:
        return module
    base = ring.base
    tgt = FreeModule(base, module.generator_degrees)
    cols = [ModuleElement(tgt, c.data) for c in module.presentation.columns]
    src_twists = list(module.presentation.source.twists)
    for f in ring.quotient:
        d = f.degree()
        for j, a in enumerate(module.generator_degrees):
            cols.append(ModuleElement(
                tgt, {(j, m): c for m, c in f.terms.items()}))
            src_twists.append(a + d)
    src = FreeModule(base, tuple(src_twists))
    return GradedModule(GradedMatrix(src, tgt, cols, check=False))


def krull_dim(module: GradedModule):
    """Krull dimension of the support; MINUS_INF for the zero module.

    Computed as n+1 minus the vanishing order at t=1 of the Hilbert-series
    numerator read off a finite S-free resolution of the restriction of
    scalars.
    """
    from .resolve import free_resolution, hilbert_numerator
    m = restrict_scalars(module)
    pruned, _ = prune(m)
    if pruned.cover.rank == 0:
        return MINUS_INF
    res = free_resolution(pruned)
    numer = hilbert_numerator(res)
    nvars = module.ring.nvars
    order = 0
    coeffs = dict(numer)
    while order <= nvars:
        if sum(coeffs.values()) != 0:
            break
        # synthetic division by (1 - t)
        items = sorted(coeffs.items())
        out: dict[int, int] = {}
        acc = 0
        for e in range(items[0][0], items[-1][0] + 1):
            acc += coeffs.get(e, 0)
            if acc:
                out[e] = acc
        # quotient of p(t) by (1-t) is sum_{e} (sum_{k<=e} c_k) t^e, minus
        # the top cancelling term; the loop above yields it directly when
        # p(1) = 0 (the final accumulated value is then zero).
        out.pop(items[-1][0] + 1, None)
        coeffs = out
        order += 1
    return nvars - order
