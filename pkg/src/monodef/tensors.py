"""
Dense multi-index tensors stored as numpy object arrays of exact scalars.

Index order is lexicographic with the leftmost index slowest, which is the
order numpy uses for ``reshape(-1)``; serialization relies on it.
Slots are 0-based here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class TensorError(ValueError):
    pass


@dataclass(frozen=True)
class SlotLinearMap:
    """A linear map ``(F^d)^{in_arity} -> (F^d)^{out_arity}``.

    ``coefficients[a_1..a_in, b_1..b_out]`` is the coefficient of
    ``e_b`` in the image of ``e_a``.
    """
    in_arity: int
    out_arity: int
    coefficients: np.ndarray

    def __post_init__(self):
        if self.coefficients.ndim != self.in_arity + self.out_arity:
            raise TensorError("coefficient tensor does not match the declared arities")


def as_tensor(values, shape) -> np.ndarray:
    out = np.empty(int(np.prod(shape, dtype=int)), dtype=object)
    out[:] = list(values)
    return out.reshape(tuple(shape))


def tensor_concat(a: np.ndarray, b: np.ndarray, field=None) -> np.ndarray:
    """Outer product, indices of ``a`` first."""
    out = np.multiply.outer(a, b)
    if not isinstance(out, np.ndarray):
        out = as_tensor([out], ())
    return field.reduce_array(out) if field is not None else out


def apply_to_slots(t: np.ndarray, slot: int, m: SlotLinearMap, field=None) -> np.ndarray:
    """Feed axes ``slot .. slot+in_arity-1`` of ``t`` through ``m``.

    The consumed axes are replaced in place by the ``out_arity`` output axes.
    """
    k = m.in_arity
    if slot < 0 or slot + k > t.ndim:
        raise TensorError(f"slot {slot} with arity {k} overflows a {t.ndim}-axis tensor")
    out = np.tensordot(t, m.coefficients, axes=(list(range(slot, slot + k)), list(range(k))))
    if not isinstance(out, np.ndarray):
        out = as_tensor([out], ())
    n_out = m.out_arity
    if n_out:
        first_out = out.ndim - n_out
        out = np.moveaxis(out, list(range(first_out, out.ndim)), list(range(slot, slot + n_out)))
    return field.reduce_array(out) if field is not None else out


def permute_slots(t: np.ndarray, perm, n_inputs=None) -> np.ndarray:
    """Reorder input axes so that axis ``a`` of the result is axis ``perm[a]`` of ``t``.

    Axes past ``n_inputs`` (an output axis) stay put. Applying ``p`` then
    ``q`` equals applying the single permutation ``a -> p[q[a]]``.
    """
    n = t.ndim if n_inputs is None else n_inputs
    perm = list(perm)
    if sorted(perm) != list(range(n)):
        raise TensorError(f"{perm} is not a permutation of {n} input axes")
    return np.transpose(t, perm + list(range(n, t.ndim)))


def flatten(t: np.ndarray) -> list:
    return list(t.reshape(-1))


def unflatten(shape, vector) -> np.ndarray:
    size = int(np.prod(shape, dtype=int))
    if len(vector) != size:
        raise TensorError(f"vector of length {len(vector)} does not fit shape {tuple(shape)}")
    return as_tensor(vector, shape)


def basis_tensor(field, shape, index) -> np.ndarray:
    t = field.zeros(shape)
    t[tuple(index)] = field.one
    return t


def slotwise_product(s: np.ndarray, block: np.ndarray, offset: int, mul: np.ndarray, field=None):
    """Multiply ``s`` on the right by ``block`` inside the algebra ``A^{(x)n}``.

    ``block`` covers the consecutive factors starting at ``offset``;
    ``mul[x, y, z]`` are the structure constants of ``A``.
    """
    j = block.ndim
    n = s.ndim
    if offset < 0 or offset + j > n:
        raise TensorError("block does not fit")
    out = np.tensordot(s, block, axes=0)
    # axes now: s_0..s_{n-1}, b_0..b_{j-1}; each step consumes one s-axis
    # and the leading b-axis and appends the product axis
    for t in range(j):
        out = np.tensordot(out, mul, axes=([offset + t, n], [0, 1]))
        out = np.moveaxis(out, -1, offset + t)
    return field.reduce_array(out) if field is not None else out
