"""
Computable monoidal functors and their cochains.

Two presentations are supported.

* ``AlgebraModel``: the functor ``A (x) -`` for a finite-dimensional
  algebra ``A``. A k-cochain is a multilinear map ``A^{(x)k} -> A`` with
  payload shape ``(d,)*k + (d,)``; the last axis is the output.
* ``BialgebraModel``: the forgetful functor on modules over a bialgebra
  ``H``. A k-cochain is an element of ``H^{(x)k}`` acting on
  ``M_1 (x) ... (x) M_k``; payload shape ``(d,)*k``. Feeding a tensor
  product ``M_a (x) ... (x) M_b`` into one slot spreads that slot with an
  iterated coproduct.

All argument positions in placements are 0-based positions in the result.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import tensors
from .errors import (CounitLawFailed, DegreeOverflow, ModelMismatch,
                     NotAssociative, NotBialgebraMorphism, NotCoassociative,
                     NotSymmetricCapable, OverlappingPlacements, UnitLawFailed)
from .fields import Field
from .tensors import SlotLinearMap


def _first_nonzero(arr):
    nz = np.argwhere(arr != 0)
    return tuple(int(x) for x in nz[0]) if len(nz) else None


@dataclass(frozen=True, eq=False)
class AlgebraPresentation:
    field: Field
    dim: int
    basis_names: tuple
    mul: np.ndarray     # mul[i, j, k]: coefficient of e_k in e_i e_j
    unit: np.ndarray

    def to_document(self):
        F = self.field
        return {
            "field": F.to_json(),
            "kind": "algebra",
            "dim": self.dim,
            "basis": list(self.basis_names),
            "mul": _nested(self.mul, F),
            "unit": [F.format(x) for x in self.unit],
        }


@dataclass(frozen=True, eq=False)
class BialgebraPresentation:
    algebra: AlgebraPresentation
    comul: np.ndarray   # comul[i, j, k]: coefficient of e_j (x) e_k in Delta(e_i)
    counit: np.ndarray

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def basis_names(self):
        return self.algebra.basis_names

    def to_document(self):
        doc = self.algebra.to_document()
        F = self.field
        doc["kind"] = "bialgebra"
        doc["comul"] = _nested(self.comul, F)
        doc["counit"] = [F.format(x) for x in self.counit]
        return doc


def _nested(arr, F):
    def fmt(x):
        return [fmt(y) for y in x] if isinstance(x, list) else F.format(x)
    return fmt(arr.tolist())


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


class Cochain:
    """A degree-k cochain of a model; a vector in ``C^k``."""

    __slots__ = ("model", "degree", "payload")
    __hash__ = None

    def __init__(self, model, degree, payload):
        payload = np.asarray(payload, dtype=object)
        if payload.shape != model.payload_shape(degree):
            raise ValueError(
                f"payload shape {payload.shape} does not match degree {degree} "
                f"(expected {model.payload_shape(degree)})")
        self.model = model
        self.degree = degree
        self.payload = payload

    def _check(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if other.model is not self.model and other.model.fingerprint != self.model.fingerprint:
            raise ModelMismatch("cochains belong to different models")
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return True

    def _new(self, payload):
        return Cochain(self.model, self.degree, self.model.field.reduce_array(payload))

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._new(self.payload + other.payload)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._new(self.payload - other.payload)

    def __neg__(self):
        return self._new(-self.payload)

    def __mul__(self, scalar):
        if isinstance(scalar, Cochain):
            return NotImplemented
        return self._new(self.payload * self.model.field(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if other.model is not self.model and other.model.fingerprint != self.model.fingerprint:
            return False
        return other.degree == self.degree and bool(np.all(self.payload == other.payload))

    def is_zero(self):
        return bool(np.all(self.payload == 0))

    def to_vector(self):
        return tensors.flatten(self.payload)

    def __repr__(self):
        return f"Cochain(degree={self.degree}, model={self.model.name!r}, nnz={int(np.count_nonzero(self.payload != 0))})"


class CochainModel:
    """Common interface of the two presentations."""

    kind: str
    presentation: object

    def __init__(self, presentation, name=None):
        self.presentation = presentation
        self.field = presentation.field
        self.dim = presentation.dim
        self.basis_names = tuple(presentation.basis_names)
        self.name = name or self.kind
        self._cache = {}

    @cached_property
    def fingerprint(self):
        doc = canonical_json(self.presentation.to_document())
        return hashlib.sha256(doc.encode("utf-8")).hexdigest()

    # -- cochain spaces -------------------------------------------------
    def payload_shape(self, k):
        raise NotImplementedError

    def cochain_dim(self, k):
        return int(np.prod(self.payload_shape(k), dtype=int))

    def zero(self, k):
        return Cochain(self, k, self.field.zeros(self.payload_shape(k)))

    def basis_cochain(self, k, flat_index):
        t = self.field.zeros(self.payload_shape(k))
        t.reshape(-1)[flat_index] = self.field.one
        return Cochain(self, k, t)

    def from_vector(self, k, vector):
        F = self.field
        return Cochain(self, k, tensors.unflatten(self.payload_shape(k), [F(x) for x in vector]))

    def random_cochain(self, k, rng, density=1.0):
        F = self.field
        vals = [F.random_element(rng) if rng.random() < density else F.zero
                for _ in range(self.cochain_dim(k))]
        return self.from_vector(k, vals)

    def own(self, c):
        if c.model is not self and c.model.fingerprint != self.fingerprint:
            raise ModelMismatch(f"cochain does not belong to model {self.name!r}")
        return c

    # -- structure --------------------------------------------------------
    def mu(self):
        raise NotImplementedError

    def eta(self):
        raise NotImplementedError

    def identity(self):
        """The degree-1 identity cochain."""
        raise NotImplementedError

    @property
    def symmetric_capable(self):
        raise NotImplementedError

    def unit_monoid_model(self):
        """Model whose complex is the classical complex of f_* applied to the unit."""
        raise NotImplementedError

    # -- the substitution primitive --------------------------------------
    def _layout(self, outer, placements):
        """Validate placements; return (N, [(k_p, slot_p, inner_p)])."""
        self.own(outer)
        placements = sorted(((int(k), self.own(c)) for k, c in placements), key=lambda kc: kc[0])
        n = outer.degree + sum(c.degree - 1 for _, c in placements)
        if n < 0:
            raise DegreeOverflow(f"result degree {n} is negative")
        layout = []
        prev_end = 0
        shift = 0
        for k, c in placements:
            if k < prev_end:
                raise OverlappingPlacements(f"block at position {k} overlaps the previous block")
            end = k + c.degree
            if end > n:
                raise DegreeOverflow(f"block at position {k} of degree {c.degree} runs past {n}")
            layout.append((k, k - shift, c))
            shift += c.degree - 1
            prev_end = end
        return n, layout

    def substitute(self, outer, placements):
        """Insert inner cochains into argument positions of ``outer``.

        ``placements`` is a sequence of ``(k_p, inner_p)``; ``inner_p`` takes
        result arguments ``k_p .. k_p + deg(inner_p) - 1`` and its value
        enters one slot of ``outer``. Placements are stably sorted by
        position, so only degree-0 inners sharing a position depend on the
        listed order. No sign is applied.
        """
        raise NotImplementedError

    def compose1(self, a, b):
        """``a`` after ``b`` for degree-1 cochains."""
        return self.substitute(a, [(0, b)])

    def sym_conjugate(self, c, i):
        """Conjugate by the symmetry on the adjacent slots ``i, i+1`` (1-based)."""
        self.own(c)
        if not self.symmetric_capable:
            raise NotSymmetricCapable(f"model {self.name!r} is not symmetric")
        if not 1 <= i < c.degree:
            raise ValueError(f"slot pair ({i}, {i + 1}) out of range for degree {c.degree}")
        return Cochain(self, c.degree, np.swapaxes(c.payload, i - 1, i))

    def evaluate_at_unit(self, c):
        raise NotImplementedError


class AlgebraModel(CochainModel):
    kind = "algebra"

    def __init__(self, presentation: AlgebraPresentation, name=None):
        super().__init__(presentation, name)
        self.mul = presentation.mul
        self.unit = presentation.unit

    def payload_shape(self, k):
        return (self.dim,) * (k + 1)

    def mu(self):
        return Cochain(self, 2, self.mul)

    def eta(self):
        return Cochain(self, 0, self.unit)

    def identity(self):
        F = self.field
        return Cochain(self, 1, tensors.as_tensor(
            [F(int(i == j)) for i in range(self.dim) for j in range(self.dim)], (self.dim, self.dim)))

    @cached_property
    def symmetric_capable(self):
        return bool(np.all(self.mul == np.swapaxes(self.mul, 0, 1)))

    def unit_monoid_model(self):
        return self

    def substitute(self, outer, placements):
        n, layout = self._layout(outer, placements)
        out = outer.payload
        for k, slot, inner in reversed(layout):
            # precomposition: outer slot value o comes from inner(x_1..x_j)[o]
            j = inner.degree
            pre = SlotLinearMap(1, j, np.moveaxis(inner.payload, -1, 0))
            out = tensors.apply_to_slots(out, slot, pre)
        return Cochain(self, n, self.field.reduce_array(out))

    def evaluate_at_unit(self, c):
        return self.own(c)


class BialgebraModel(CochainModel):
    kind = "bialgebra"

    def __init__(self, presentation: BialgebraPresentation, name=None):
        super().__init__(presentation, name)
        self.mul = presentation.algebra.mul
        self.unit = presentation.algebra.unit
        self.comul = presentation.comul
        self.counit = presentation.counit

    def payload_shape(self, k):
        return (self.dim,) * k

    def unit_tensor(self, k):
        key = ("unit", k)
        if key not in self._cache:
            t = tensors.as_tensor([self.field.one], ())
            for _ in range(k):
                t = tensors.tensor_concat(t, self.unit, self.field)
            self._cache[key] = t
        return self._cache[key]

    def mu(self):
        return Cochain(self, 2, self.unit_tensor(2))

    def eta(self):
        return Cochain(self, 0, self.unit_tensor(0))

    def identity(self):
        return Cochain(self, 1, self.unit_tensor(1))

    @cached_property
    def symmetric_capable(self):
        return bool(np.all(self.comul == np.swapaxes(self.comul, 1, 2)))

    def coproduct_power(self, j):
        """Coefficients of the iterated coproduct ``H -> H^{(x)j}``; ``j = 0`` is the counit."""
        key = ("copow", j)
        if key not in self._cache:
            F = self.field
            if j == 0:
                t = self.counit
            elif j == 1:
                t = tensors.as_tensor([F(int(a == b)) for a in range(self.dim) for b in range(self.dim)],
                                      (self.dim, self.dim))
            else:
                prev = self.coproduct_power(j - 1)
                t = tensors.apply_to_slots(prev, 1, SlotLinearMap(1, 2, self.comul), F)
            self._cache[key] = t
        return self._cache[key]

    def substitute(self, outer, placements):
        n, layout = self._layout(outer, placements)
        F = self.field
        if np.all(outer.payload == self.unit_tensor(outer.degree)):
            # spread(1) is the unit of H^{(x)n}; the result is the plain tensor product
            out = tensors.as_tensor([F.one], ())
            pos = 0
            for k, slot, inner in layout:
                for _ in range(k - pos):
                    out = tensors.tensor_concat(out, self.unit)
                out = tensors.tensor_concat(out, inner.payload)
                pos = k + inner.degree
            for _ in range(n - pos):
                out = tensors.tensor_concat(out, self.unit)
            return Cochain(self, n, F.reduce_array(out))
        spread = outer.payload
        for k, slot, inner in reversed(layout):
            j = inner.degree
            if j != 1:
                spread = tensors.apply_to_slots(spread, slot, SlotLinearMap(1, j, self.coproduct_power(j)), F)
        out = spread
        for k, slot, inner in layout:
            j = inner.degree
            if j == 0:
                out = F.reduce_array(out * inner.payload[()])
            elif not np.all(inner.payload == self.unit_tensor(j)):
                out = tensors.slotwise_product(out, inner.payload, k, self.mul, F)
        return Cochain(self, n, F.reduce_array(out))

    @cached_property
    def _base_model(self):
        F = self.field
        pres = AlgebraPresentation(F, 1, ("1",), F.array([1], (1, 1, 1)), F.array([1], (1,)))
        return AlgebraModel(pres, name=f"{self.name}@unit")

    def unit_monoid_model(self):
        return self._base_model

    def evaluate_at_unit(self, c):
        """Collapse with the counit on every factor; the image is a scalar cochain of the base field."""
        self.own(c)
        t = c.payload
        for _ in range(c.degree):
            t = tensors.apply_to_slots(t, 0, SlotLinearMap(1, 0, self.counit))
        value = self.field.reduce(t[()] if isinstance(t, np.ndarray) else t)
        base = self._base_model
        return Cochain(base, c.degree, self.field.array([value], base.payload_shape(c.degree)))


# -- validation -------------------------------------------------------------

def validate_algebra(p: AlgebraPresentation):
    F, d, m, u = p.field, p.dim, p.mul, p.unit
    if m.shape != (d, d, d) or u.shape != (d,):
        raise ValueError("structure tensors have the wrong shape")
    left = np.tensordot(m, m, axes=([2], [0]))                        # (e_i e_j) e_k
    right = np.moveaxis(np.tensordot(m, m, axes=([2], [1])), 2, 0)   # e_i (e_j e_k)
    defect = F.reduce_array(left - right)
    bad = _first_nonzero(defect)
    if bad is not None:
        i, j, k, _ = bad
        raise NotAssociative(i, j, k, [F.format(x) for x in defect[i, j, k]])
    eye = np.array([[F(int(a == b)) for b in range(d)] for a in range(d)], dtype=object)
    lu = F.reduce_array(np.tensordot(u, m, axes=([0], [0])))   # [i, o] = u * e_i
    ru = F.reduce_array(np.tensordot(u, m, axes=([0], [1])))   # [i, o] = e_i * u
    for side, mat in (("left", lu), ("right", ru)):
        for i in range(d):
            if any(x != y for x, y in zip(mat[i], eye[i])):
                raise UnitLawFailed(side, i)


def validate_bialgebra(p: BialgebraPresentation):
    validate_algebra(p.algebra)
    F, d = p.field, p.dim
    c, e = p.comul, p.counit
    m, u = p.algebra.mul, p.algebra.unit
    if c.shape != (d, d, d) or e.shape != (d,):
        raise ValueError("costructure tensors have the wrong shape")
    lhs = F.reduce_array(tensors.apply_to_slots(c, 1, SlotLinearMap(1, 2, c)))   # (D x id) D
    rhs = F.reduce_array(tensors.apply_to_slots(c, 2, SlotLinearMap(1, 2, c)))   # (id x D) D
    for i in range(d):
        diff = F.reduce_array(lhs[i] - rhs[i])
        if np.any(diff != 0):
            raise NotCoassociative(i, [F.format(x) for x in diff.reshape(-1)])
    eye = np.array([[F(int(a == b)) for b in range(d)] for a in range(d)], dtype=object)
    left = F.reduce_array(tensors.apply_to_slots(c, 1, SlotLinearMap(1, 0, e)))   # (eps x id) D
    right = F.reduce_array(tensors.apply_to_slots(c, 2, SlotLinearMap(1, 0, e)))  # (id x eps) D
    for side, mat in (("left", left), ("right", right)):
        for i in range(d):
            if np.any(mat[i] != eye[i]):
                raise CounitLawFailed(side, i)
    # Delta(e_i e_j) = Delta(e_i) Delta(e_j)
    delta_of_product = F.reduce_array(np.tensordot(m, c, axes=([2], [0])))          # [i,j,a,b]
    for i in range(d):
        for j in range(d):
            prod = tensors.slotwise_product(c[i], c[j], 0, m, F)
            if np.any(F.reduce_array(prod - delta_of_product[i, j]) != 0):
                raise NotBialgebraMorphism("comultiplication", (i, j))
    if np.any(F.reduce_array(np.tensordot(u, c, axes=([0], [0])) - np.multiply.outer(u, u)) != 0):
        raise NotBialgebraMorphism("comultiplication", ("unit",))
    eps_prod = F.reduce_array(np.tensordot(m, e, axes=([2], [0])))
    if np.any(F.reduce_array(eps_prod - np.multiply.outer(e, e)) != 0):
        bad = _first_nonzero(F.reduce_array(eps_prod - np.multiply.outer(e, e)))
        raise NotBialgebraMorphism("counit", bad)
    if F.reduce(np.dot(u, e) - F.one) != 0:
        raise NotBialgebraMorphism("counit", ("unit",))


def build_algebra_model(p: AlgebraPresentation, name=None) -> AlgebraModel:
    validate_algebra(p)
    return AlgebraModel(p, name)


def build_bialgebra_model(p: BialgebraPresentation, name=None) -> BialgebraModel:
    validate_bialgebra(p)
    return BialgebraModel(p, name)
