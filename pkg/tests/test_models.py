import numpy as np
import pytest

from monodef.errors import (CounitLawFailed, DegreeOverflow, ModelMismatch, NotAssociative,
                            NotCoassociative, NotSymmetricCapable, OverlappingPlacements,
                            UnitLawFailed)
from monodef.fields import QQ
from monodef.models import (AlgebraPresentation, BialgebraPresentation, build_algebra_model,
                            build_bialgebra_model)
from monodef.presets import (cyclic_group_algebra, klein_group_algebra, matrix_algebra,
                             sweedler_algebra, truncated_polynomial)
from monodef.tensors import basis_tensor, tensor_concat


def test_dimensions():
    assert build_algebra_model(truncated_polynomial(1)).cochain_dim(2) == 8
    assert build_algebra_model(matrix_algebra(2)).cochain_dim(1) == 16
    assert build_bialgebra_model(cyclic_group_algebra(2)).cochain_dim(2) == 4
    assert build_bialgebra_model(klein_group_algebra()).cochain_dim(3) == 64


def test_unit_law_failure():
    p = truncated_polynomial(1)
    bad = AlgebraPresentation(p.field, 2, p.basis_names, p.mul, QQ.array([0, 1], (2,)))
    with pytest.raises(UnitLawFailed):
        build_algebra_model(bad)


def test_non_associative_detected():
    # e0 unit, e1*e1 = e2, e2*e1 = e1, everything else from the unit: (e1 e1) e1 = e1 but
    # e1 (e1 e1) = e1 e2 = 0
    F = QQ
    mul = F.zeros((3, 3, 3))
    for i in range(3):
        mul[0, i, i] = mul[i, 0, i] = F(1)
    mul[1, 1, 2] = F(1)
    mul[2, 1, 1] = F(1)
    bad = AlgebraPresentation(F, 3, ("1", "a", "b"), mul, F.array([1, 0, 0], (3,)))
    with pytest.raises(NotAssociative) as info:
        build_algebra_model(bad)
    assert info.value.triple == (1, 1, 1)


def test_bad_coproduct():
    p = cyclic_group_algebra(2)
    comul = p.comul.copy()
    comul[1] = basis_tensor(QQ, (2, 2), (1, 0))   # Delta(g) = g (x) e
    with pytest.raises((NotCoassociative, CounitLawFailed)):
        build_bialgebra_model(BialgebraPresentation(p.algebra, comul, p.counit))


def test_unit_and_associativity_laws(any_model):
    m = any_model
    mu, eta = m.mu(), m.eta()
    assert m.substitute(mu, [(1, eta)]) == m.identity()
    assert m.substitute(mu, [(0, eta)]) == m.identity()
    assert m.substitute(mu, [(1, mu)]) == m.substitute(mu, [(0, mu)])


def test_substitute_into_identity(any_model, rng):
    for k in range(4):
        c = any_model.random_cochain(k, rng)
        assert any_model.substitute(any_model.identity(), [(0, c)]) == c


def test_substitute_dual_numbers(dual):
    mu = dual.mu()
    assoc = dual.substitute(mu, [(0, mu)]).payload
    assert all(x == 0 for x in assoc[1, 0, 1])      # mu(mu(x,1),x) = x*x = 0
    assert list(assoc[1, 0, 0]) == [0, 1]           # mu(mu(x,1),1) = x


def test_substitute_group_like(z2):
    g = QQ.array([0, 1], (2,))
    c = z2.from_vector(2, tensor_concat(g, g).reshape(-1))
    out = z2.substitute(c, [(0, z2.mu())])
    assert np.array_equal(out.payload, basis_tensor(QQ, (2, 2, 2), (1, 1, 1)))


def test_substitute_multilinear(any_model, rng):
    m = any_model
    a, b, c = m.random_cochain(2, rng), m.random_cochain(1, rng), m.random_cochain(1, rng)
    s = QQ(3) if m.field == QQ else m.field(3)
    lhs = m.substitute(a, [(1, b * s + c)])
    assert lhs == m.substitute(a, [(1, b)]) * s + m.substitute(a, [(1, c)])


def test_placements_order_independent(any_model, rng):
    m = any_model
    a, b, c = m.random_cochain(3, rng), m.random_cochain(2, rng), m.random_cochain(1, rng)
    assert m.substitute(a, [(0, b), (2, c)]) == m.substitute(a, [(2, c), (0, b)])


def test_placement_errors(dual, rng):
    a, b = dual.random_cochain(2, rng), dual.random_cochain(2, rng)
    with pytest.raises(OverlappingPlacements):
        dual.substitute(a, [(0, b), (1, b)])
    with pytest.raises(DegreeOverflow):
        dual.substitute(a, [(3, b)])


def test_model_mismatch(dual, z2):
    with pytest.raises(ModelMismatch):
        dual.substitute(dual.mu(), [(0, z2.mu())])


def test_sym_conjugate(dual, z2, rng):
    assert dual.sym_conjugate(dual.mu(), 1) == dual.mu()
    e_g = z2.from_vector(2, [0, 1, 0, 0])
    assert z2.sym_conjugate(e_g, 1) == z2.from_vector(2, [0, 0, 1, 0])
    c = dual.random_cochain(3, rng)
    assert dual.sym_conjugate(dual.sym_conjugate(c, 2), 2) == c


def test_sym_conjugate_requires_symmetry(m2):
    with pytest.raises(NotSymmetricCapable):
        m2.sym_conjugate(m2.mu(), 1)
    sweedler = build_bialgebra_model(sweedler_algebra())
    assert not sweedler.symmetric_capable


def test_evaluate_at_unit(dual, z2, rng):
    c = dual.random_cochain(2, rng)
    assert dual.evaluate_at_unit(c) is c
    assert list(z2.evaluate_at_unit(z2.from_vector(2, [0, 0, 0, 1])).to_vector()) == [1]
    assert list(z2.evaluate_at_unit(z2.from_vector(2, [1, 0, -1, 0])).to_vector()) == [0]


def test_fingerprint_stable(dual):
    again = build_algebra_model(truncated_polynomial(1))
    assert again.fingerprint == dual.fingerprint
    other = build_algebra_model(truncated_polynomial(2))
    assert other.fingerprint != dual.fingerprint
