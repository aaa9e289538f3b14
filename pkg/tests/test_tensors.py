import numpy as np
import pytest

from monodef.fields import QQ
from monodef.presets import cyclic_group_algebra, matrix_algebra
from monodef.tensors import (SlotLinearMap, apply_to_slots, as_tensor, basis_tensor, flatten,
                             permute_slots, tensor_concat, unflatten)


def vec(*xs):
    return as_tensor([QQ(x) for x in xs], (len(xs),))


def test_concat_with_scalar_one():
    t = vec(1, 2)
    assert np.array_equal(tensor_concat(as_tensor([QQ(1)], ()), t), t)


def test_concat_basis_vectors():
    e1, e2 = vec(1, 0), vec(0, 1)
    assert np.array_equal(tensor_concat(e1, e2), basis_tensor(QQ, (2, 2), (0, 1)))


def test_concat_bilinear():
    t = tensor_concat(vec(1, 1), vec(1, 0))
    assert flatten(t) == [1, 0, 1, 0]


def test_identity_map_leaves_tensor():
    t = unflatten((2, 2, 2), [QQ(i) for i in range(8)])
    ident = SlotLinearMap(1, 1, as_tensor([QQ(int(i == j)) for i in range(2) for j in range(2)], (2, 2)))
    for slot in range(3):
        assert np.array_equal(apply_to_slots(t, slot, ident), t)


def test_associativity_in_both_orders():
    m = matrix_algebra(2).mul
    # (ab)c and a(bc) as maps A^3 -> A, obtained by contracting m into m
    left = apply_to_slots(m, 0, SlotLinearMap(1, 2, np.moveaxis(m, -1, 0)))
    right = apply_to_slots(m, 1, SlotLinearMap(1, 2, np.moveaxis(m, -1, 0)))
    assert np.array_equal(left, right)


def test_group_like_coproduct():
    delta = cyclic_group_algebra(2).comul
    g = vec(0, 1)
    out = apply_to_slots(g, 0, SlotLinearMap(1, 2, delta))
    assert np.array_equal(out, basis_tensor(QQ, (2, 2), (1, 1)))


def test_permute_slots():
    t = unflatten((2, 2), [QQ(i) for i in range(4)])
    assert np.array_equal(permute_slots(t, (0, 1)), t)
    sym = unflatten((2, 2), [QQ(x) for x in (1, 2, 2, 5)])
    assert np.array_equal(permute_slots(sym, (1, 0)), sym)
    assert np.array_equal(permute_slots(basis_tensor(QQ, (2, 2), (0, 1)), (1, 0)),
                          basis_tensor(QQ, (2, 2), (1, 0)))


def test_permute_composition():
    t = unflatten((2, 3, 4), [QQ(i) for i in range(24)])
    p, q = (2, 0, 1), (1, 2, 0)
    both = permute_slots(permute_slots(t, p), q)
    assert np.array_equal(both, permute_slots(t, tuple(p[q[a]] for a in range(3))))


def test_flatten_contract(rng):
    v = [QQ(rng.randint(-5, 5)) for _ in range(12)]
    assert flatten(unflatten((2, 3, 2), v)) == v
    # index (2,1), 1-based, is flat position 3
    assert flatten(basis_tensor(QQ, (2, 2), (1, 0))).index(1) + 1 == 3
    assert flatten(QQ.zeros((2, 2))) == [0, 0, 0, 0]


def test_shape_errors():
    with pytest.raises(ValueError):
        unflatten((2, 2), [QQ(1)] * 3)
