"""Exponent lattices, extension indices, and inseparable degrees."""

import pytest

from gradedinv.toric import (
    ExponentLattice,
    extension_index,
    inseparable_degree,
    lattice_of_monomial_algebra,
)


def test_hnf_canonicalization():
    L1 = ExponentLattice([(2, 0), (0, 2), (2, 2)], 2)
    L2 = ExponentLattice([(0, 2), (2, 0)], 2)
    assert L1 == L2
    assert L1.rank == 2


def test_membership():
    L = lattice_of_monomial_algebra([(2, 0), (0, 2)])
    assert L.contains((4, 2))
    assert not L.contains((1, 1))


def test_full_lattice_from_quadric_monomials():
    # x^2, xy, y^2: differences give (1,-1), index 2 in Z^2
    L = lattice_of_monomial_algebra([(2, 0), (1, 1), (0, 2)])
    full = lattice_of_monomial_algebra([(1, 0), (0, 1)])
    assert L.is_sublattice_of(full)
    assert extension_index(L, full) == 2


def test_cubic_monomial_algebra_index():
    # k[x^3, x^2 y, y^3]: lattice of index 3 in Z^2 (same as the full cubic
    # Veronese lattice, so the pinch-point inclusion is birational)
    L_A = lattice_of_monomial_algebra([(3, 0), (2, 1), (0, 3)])
    L_B = lattice_of_monomial_algebra([(3, 0), (2, 1), (1, 2), (0, 3)])
    full = lattice_of_monomial_algebra([(1, 0), (0, 1)])
    assert extension_index(L_A, full) == 3
    assert extension_index(L_B, full) == 3
    assert L_A == L_B
    assert extension_index(L_A, L_B) == 1


def test_extension_index_even_sublattice():
    L_A = lattice_of_monomial_algebra([(2, 0), (0, 2)])
    full = lattice_of_monomial_algebra([(1, 0), (0, 1)])
    assert extension_index(L_A, full) == 4


def test_extension_index_requires_containment():
    L_A = lattice_of_monomial_algebra([(3, 0), (0, 3)])
    L_B = lattice_of_monomial_algebra([(2, 0), (0, 2)])
    with pytest.raises(ValueError):
        extension_index(L_A, L_B)


def test_inseparable_degree_even_sublattice():
    L_A = lattice_of_monomial_algebra([(2, 0), (0, 2)])
    full = lattice_of_monomial_algebra([(1, 0), (0, 1)])
    # index 4 = 2^2: all inseparable at p = 2, all separable at p = 3
    assert inseparable_degree(L_A, full, 2) == 4
    assert inseparable_degree(L_A, full, 3) == 1


def test_inseparable_degree_quadric_slot():
    L_A = lattice_of_monomial_algebra([(2, 0), (0, 2)])
    L_B = lattice_of_monomial_algebra([(2, 0), (1, 1), (0, 2)])
    assert extension_index(L_A, L_B) == 2
    assert inseparable_degree(L_A, L_B, 2) == 2
    assert inseparable_degree(L_A, L_B, 3) == 1


def test_inseparable_degree_divides_index():
    L_A = lattice_of_monomial_algebra([(6, 0), (0, 1)])
    full = lattice_of_monomial_algebra([(1, 0), (0, 1)])
    assert extension_index(L_A, full) == 6
    assert inseparable_degree(L_A, full, 2) == 2
    assert inseparable_degree(L_A, full, 3) == 3
    assert inseparable_degree(L_A, full, 5) == 1


def test_lattice_operations():
    L = lattice_of_monomial_algebra([(1, 1)])
    M = lattice_of_monomial_algebra([(1, -1)])
    S = L.sum(M)
    assert S.rank == 2
    assert S.contains((2, 0))
    assert not S.contains((1, 0))
    assert L.scaled(3).contains((3, 3))
    assert not L.scaled(3).contains((1, 1))
