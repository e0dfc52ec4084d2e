"""Graded modules: Hilbert functions, truncation, twist, kernels, dimension."""

from gext import (direct_sum, free_module_of, graded_component,
                  hilbert_function, image_of, kernel_of_map, krull_dim,
                  prune, ring_module, submodule_equals, truncate_module,
                  twist, zero_module)
from gext.free import GradedMatrix
from gext.gmod import ModuleMap, cokernel, restrict_scalars
from gext.groebner import MINUS_INF

from oracles import module_component_dim, monomial_exponents

P = 32003


def test_free_module_hilbert(p2_ring):
    F = free_module_of(p2_ring, (0, -1))
    for d in range(5):
        want = (len(monomial_exponents(3, d)) +
                len(monomial_exponents(3, d + 1)))
        assert hilbert_function(F, d) == want


def test_hilbert_matches_dense_oracle(quartic_cokernel):
    for d in range(7):
        assert hilbert_function(quartic_cokernel, d) == \
            module_component_dim(quartic_cokernel, d)


def test_hilbert_matches_dense_oracle_quotient(del_pezzo_g):
    for d in range(6):
        assert hilbert_function(del_pezzo_g, d) == \
            module_component_dim(del_pezzo_g, d)


def test_quartic_hilbert_values(quartic_cokernel):
    # the rational quartic curve has hilbert polynomial 4d + 1
    assert [hilbert_function(quartic_cokernel, d) for d in range(6)] == \
        [1, 4, 9, 13, 17, 21]


def test_graded_component_basis_size(quartic_cokernel):
    for d in range(5):
        dim, basis = graded_component(quartic_cokernel, d)
        assert dim == len(basis) == hilbert_function(quartic_cokernel, d)


def test_truncate_hilbert(quartic_cokernel):
    t = truncate_module(quartic_cokernel, 2)
    for d in range(6):
        want = hilbert_function(quartic_cokernel, d) if d >= 2 else 0
        assert hilbert_function(t, d) == want


def test_truncate_below_generators_is_identity(quartic_cokernel):
    t = truncate_module(quartic_cokernel, 0)
    assert t.generator_degrees == quartic_cokernel.generator_degrees


def test_twist_shifts_hilbert(quartic_cokernel):
    tw = twist(quartic_cokernel, 3)
    for d in range(-3, 4):
        assert hilbert_function(tw, d) == \
            hilbert_function(quartic_cokernel, d + 3)


def test_direct_sum_hilbert_additive(quartic_cokernel, quartic_base):
    F = free_module_of(quartic_base, (1,))
    s = direct_sum(quartic_cokernel, F)
    for d in range(5):
        assert hilbert_function(s, d) == \
            hilbert_function(quartic_cokernel, d) + hilbert_function(F, d)


def test_prune_canonicalizes_zero(p2_ring):
    # coker of a unit entry is zero
    m = cokernel(GradedMatrix.from_entries(p2_ring, [["1"]], (0,)))
    pruned, _ = prune(m)
    assert pruned.is_zero()
    assert pruned == zero_module(p2_ring)


def test_prune_preserves_hilbert(quartic_cokernel, quartic_base):
    # redundant presentation: extra generator equal to x * gen
    ring = quartic_base
    mat = GradedMatrix.from_entries(
        ring,
        [["x*y-w*z", "y^3-x*z^2", "x", "0"],
         ["0", "0", "-1", "w"]],
        (0, 1))
    m = cokernel(mat)
    pruned, back = prune(m)
    for d in range(5):
        assert hilbert_function(pruned, d) == hilbert_function(m, d)
    assert len(pruned.generator_degrees) <= len(m.generator_degrees)


def test_kernel_image_exactness(quartic_base):
    """rank-nullity degreewise: dim ker_d + dim im_d = dim source_d."""
    ring = quartic_base
    F = free_module_of(ring, (0, 0))
    G = free_module_of(ring, (-1,))
    mat = GradedMatrix.from_entries(ring, [["x", "y"]], (-1,),
                                    source_twists=(0, 0))
    f = ModuleMap(F, G, mat)
    ker, _ = kernel_of_map(f)
    im, _ = image_of(f)
    for d in range(5):
        assert (hilbert_function(ker, d) + hilbert_function(im, d)
                == hilbert_function(F, d))


def test_kernel_elements_map_to_zero(del_pezzo_ring):
    ring = del_pezzo_ring
    F = free_module_of(ring, (0,))
    G = free_module_of(ring, (-1,))
    mat = GradedMatrix.from_entries(ring, [["w"]], (-1,), source_twists=(0,))
    f = ModuleMap(F, G, mat)
    ker, inclusion = kernel_of_map(f)
    composed = f.compose(inclusion)
    assert composed.is_zero()


def test_submodule_equals_detects_equality(p2_ring):
    ring = p2_ring
    F = free_module_of(ring, (0,))
    a = ModuleMap(free_module_of(ring, (1, 1)), F,
                  GradedMatrix.from_entries(ring, [["x", "y"]], (0,)))
    b = ModuleMap(free_module_of(ring, (1, 1)), F,
                  GradedMatrix.from_entries(ring, [["x+y", "y"]], (0,)))
    c = ModuleMap(free_module_of(ring, (1,)), F,
                  GradedMatrix.from_entries(ring, [["x"]], (0,)))
    assert submodule_equals(a, b)
    assert not submodule_equals(a, c)


def test_restrict_scalars_hilbert(elliptic_ring):
    Rm = ring_module(elliptic_ring)
    s_mod = restrict_scalars(Rm)
    assert not s_mod.ring.is_quotient
    for d in range(6):
        assert hilbert_function(s_mod, d) == hilbert_function(Rm, d)


def test_krull_dim_known_values(quartic_base, quartic_cokernel,
                                quartic_ring, elliptic_ring, del_pezzo_ring):
    assert krull_dim(ring_module(quartic_base)) == 4
    assert krull_dim(quartic_cokernel) == 2          # curve in P^3
    assert krull_dim(ring_module(quartic_ring)) == 2
    assert krull_dim(ring_module(elliptic_ring)) == 2
    assert krull_dim(ring_module(del_pezzo_ring)) == 3  # surface in P^4
    assert krull_dim(zero_module(quartic_base)) == MINUS_INF


def test_krull_dim_finite_length(p2_ring):
    # k = S/(x,y,z) has dimension 0
    mat = GradedMatrix.from_entries(p2_ring, [["x", "y", "z"]], (0,))
    assert krull_dim(cokernel(mat)) == 0
