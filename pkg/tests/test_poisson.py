import pytest

from monodef.cohomology import cohomology
from monodef.deformation import DeformationJet, first_order_classes, lift_to_order
from monodef.errors import JetInvalid, NotSymmetricCapable, OrderTooLow
from monodef.poisson import (check_poisson, check_symmetric, induced_poisson_bracket,
                             quasiclassical_limit)


def test_check_symmetric(dual, dual2, z2, klein, m2):
    assert check_symmetric(dual) and check_symmetric(dual2)
    assert check_symmetric(z2) and check_symmetric(klein)
    with pytest.raises(NotSymmetricCapable):
        check_symmetric(m2)


def test_zero_is_poisson(dual2, klein):
    for m in (dual2, klein):
        assert check_poisson(m, m.zero(2)).ok


def test_symmetric_pi_fails_skew(dual2, rng):
    c = dual2.random_cochain(2, rng)
    pi = c + dual2.sym_conjugate(c, 1)
    report = check_poisson(dual2, pi)
    assert not report.skew_ok and report.skew_defect == pi * dual2.field(2)


def test_non_derivation_detected(dual2, rng):
    c = dual2.random_cochain(2, rng)
    pi = c - dual2.sym_conjugate(c, 1)
    assert not check_poisson(dual2, pi).ok


def test_limit_of_trivial_and_symmetric_jets(dual2):
    assert quasiclassical_limit(DeformationJet.trivial(dual2, 2)).is_zero()
    # mu_1 = mu is symmetric; (mu, mu, 0) is the valid jet mu(1 + t)
    j = DeformationJet(dual2, (dual2.mu(), dual2.mu(), dual2.zero(2)))
    assert quasiclassical_limit(j).is_zero()


def test_limit_needs_order_two(dual2):
    with pytest.raises(OrderTooLow):
        quasiclassical_limit(DeformationJet.trivial(dual2, 1))
    bad = DeformationJet(dual2, (dual2.mu(), dual2.basis_cochain(2, 5), dual2.zero(2)))
    with pytest.raises(JetInvalid):
        quasiclassical_limit(bad)


def test_limit_of_lifted_jets_is_poisson(dual2):
    nonzero = 0
    for j in first_order_classes(dual2)[1]:
        out = lift_to_order(j, 2)
        if not out.complete:
            continue
        pi = quasiclassical_limit(out.jet)
        report = check_poisson(dual2, pi)
        assert report.ok
        nonzero += not pi.is_zero()
    assert nonzero >= 1


def test_induced_bracket(dual2, klein):
    j = lift_to_order(first_order_classes(dual2)[1][2], 2).jet
    pi = quasiclassical_limit(j)
    assert induced_poisson_bracket(dual2, pi) == pi
    assert induced_poisson_bracket(klein, klein.zero(2)).is_zero()
    with pytest.raises(ValueError):
        induced_poisson_bracket(dual2, dual2.mu())


def test_klein_second_cocycles_are_symmetric(klein):
    """Every valid mu_1 on the Klein model is flip-invariant, so its skew part vanishes."""
    report = cohomology(klein, 2)
    assert report.dim_H == 0
    from monodef.cohomology import cocycle_basis
    for v in cocycle_basis(klein, 2):
        c = klein.from_vector(2, v)
        assert klein.sym_conjugate(c, 1) == c
