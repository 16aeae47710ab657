"""Free resolutions, Betti tables, depth, canonical modules, singular loci."""

import random

import pytest

from gradedinv.core import QQ, GF, GradedPolyRing, GradedQuotientPresentation, free_presentation
from gradedinv.hilbert import hilbert_series, krull_dimension, multiplicity
from gradedinv.resolution import (
    a_invariant,
    betti_table,
    canonical_module,
    cm_certificate_by_parameters,
    depth,
    embedding_dimension,
    is_cohen_macaulay,
    is_r1,
    linear_system_of_parameters,
    minimal_free_resolution,
    projective_dimension,
    regularity,
    singular_locus_dimension,
)


def _hypersurface():
    R = GradedPolyRing(QQ, ("x", "y", "z"))
    x, y, z = R.gens()
    return GradedQuotientPresentation(R, [x**3 + y**3 + z**3], asserted_domain=True)


def _quadric():
    R = GradedPolyRing(QQ, ("x", "y", "z"))
    x, y, z = R.gens()
    return GradedQuotientPresentation(R, [z**2 - x * y], asserted_domain=True)


def _twisted_cubic():
    R = GradedPolyRing(QQ, ("a", "b", "c", "d"))
    a, b, c, d = R.gens()
    return GradedQuotientPresentation(
        R, [b**2 - a * c, b * c - a * d, c**2 - b * d], asserted_domain=True
    )


def _pinch(n=3):
    R = GradedPolyRing(QQ, ("u", "v", "w"))
    u, v, w = R.gens()
    return GradedQuotientPresentation(R, [v**n - u ** (n - 1) * w], asserted_domain=True)


def test_hypersurface_betti():
    bt = betti_table(_hypersurface())
    assert bt.beta(0, 0) == 1
    assert bt.beta(1, 3) == 1
    assert bt.projective_dimension() == 1
    assert bt.regularity() == 2


def test_twisted_cubic_betti():
    bt = betti_table(_twisted_cubic())
    assert bt.beta(0, 0) == 1
    assert bt.beta(1, 2) == 3
    assert bt.beta(2, 3) == 2
    assert bt.projective_dimension() == 2
    assert bt.regularity() == 1


def test_depth_and_cm():
    R = GradedPolyRing(QQ, ("x", "y"))
    x, y = R.gens()
    A = GradedQuotientPresentation(R, [x**2, x * y])
    assert projective_dimension(A) == 2
    assert depth(A) == 0
    assert not is_cohen_macaulay(A)
    assert is_cohen_macaulay(_twisted_cubic())
    assert is_cohen_macaulay(_pinch())


def test_resolution_is_exact_and_minimal():
    res = minimal_free_resolution(_twisted_cubic())
    assert res.is_minimal()
    assert res.check_exactness_composition()


def test_a_invariants_via_canonical_module():
    assert a_invariant(_hypersurface()) == 0
    assert a_invariant(_quadric()) == -1
    assert a_invariant(free_presentation(QQ, ("x", "y"))) == -2
    assert a_invariant(free_presentation(QQ, ("x", "y"), (2, 2))) == -4
    assert a_invariant(_twisted_cubic()) == -1


def test_pinch_point_a_invariant_family():
    for n in (2, 3, 4, 5):
        assert a_invariant(_pinch(n)) == n - 3
        assert multiplicity(_pinch(n)) == n


def test_canonical_module_of_gorenstein_is_cyclic():
    omega = canonical_module(_hypersurface())
    assert len(omega.generator_degrees) == 1


def test_a_plus_dim_le_reg_with_equality_iff_cm():
    for A in (_hypersurface(), _quadric(), _twisted_cubic(), _pinch(4)):
        a = a_invariant(A)
        d = krull_dimension(A)
        r = regularity(A)
        assert a + d <= r
        if is_cohen_macaulay(A):
            assert a + d == r


def test_alternating_betti_sum_equals_hilbert_numerator():
    for A in (_hypersurface(), _quadric(), _twisted_cubic(), _pinch(5)):
        bt = betti_table(A)
        assert bt.alternating_numerator() == hilbert_series(A).numerator


def test_embedding_dimension():
    assert embedding_dimension(_twisted_cubic()) == 4
    R = GradedPolyRing(QQ, ("x", "y"))
    x, y = R.gens()
    # a linear relation drops the embedding dimension
    A = GradedQuotientPresentation(R, [x - y])
    assert embedding_dimension(A) == 1


def test_singular_locus_and_r1():
    assert singular_locus_dimension(_quadric()) == 0
    assert is_r1(_quadric())
    assert singular_locus_dimension(_pinch()) == 1
    assert not is_r1(_pinch())
    free = free_presentation(QQ, ("x", "y"))
    assert singular_locus_dimension(free) == -1
    assert is_r1(free)


def test_r1_requires_domain_assertion():
    R = GradedPolyRing(QQ, ("x", "y"))
    x, y = R.gens()
    A = GradedQuotientPresentation(R, [x * y])  # not asserted a domain
    with pytest.raises(ValueError):
        is_r1(A)


def test_linear_sop_and_parameter_certificate():
    rng = random.Random(11)
    tc = _twisted_cubic()
    sop = linear_system_of_parameters(tc, rng)
    assert len(sop) == krull_dimension(tc)
    assert cm_certificate_by_parameters(tc, random.Random(11))
    R = GradedPolyRing(QQ, ("x", "y"))
    x, y = R.gens()
    not_cm = GradedQuotientPresentation(R, [x**2, x * y])
    assert not cm_certificate_by_parameters(not_cm, random.Random(11))


def test_parameter_certificate_agrees_with_resolution_route():
    for A in (_hypersurface(), _quadric(), _twisted_cubic(), _pinch(4)):
        assert cm_certificate_by_parameters(A, random.Random(3)) == is_cohen_macaulay(A)


def test_char_p_resolution():
    R = GradedPolyRing(GF(2), ("x", "y", "z"))
    x, y, z = R.gens()
    A = GradedQuotientPresentation(R, [z**2 - x * y], asserted_domain=True)
    assert a_invariant(A) == -1
    assert is_cohen_macaulay(A)
    assert is_r1(A)
