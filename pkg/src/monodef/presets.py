"""Standard presentations used by the bundled documents and the test suites."""

from __future__ import annotations

import itertools

import numpy as np

from .fields import QQ, GF
from .models import (AlgebraPresentation, BialgebraPresentation,
                     build_algebra_model, build_bialgebra_model)


def _tensor(field, shape, entries):
    t = field.zeros(shape)
    for idx, v in entries.items():
        t[idx] = field(v)
    return t


def truncated_polynomial(nvars=1, field=QQ, names="xyzw"):
    """``k[x_1..x_n] / (x_1^2, ..., x_n^2)`` on the square-free monomial basis."""
    exps = sorted(itertools.product((0, 1), repeat=nvars), key=lambda e: (sum(e), [-x for x in e]))
    index = {e: i for i, e in enumerate(exps)}
    d = len(exps)
    mul = {}
    for a, b in itertools.product(exps, repeat=2):
        c = tuple(x + y for x, y in zip(a, b))
        if max(c, default=0) <= 1:
            mul[index[a], index[b], index[c]] = 1
    basis = tuple("".join(n for n, e in zip(names, ex) if e) or "1" for ex in exps)
    unit = _tensor(field, (d,), {(index[(0,) * nvars],): 1})
    return AlgebraPresentation(field, d, basis, _tensor(field, (d, d, d), mul), unit)


def matrix_algebra(n=2, field=QQ):
    """Full matrix algebra on elementary matrices ``E_ij`` in row-major order."""
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}
    d = n * n
    mul = {}
    for (i, j), (k, l) in itertools.product(idx, repeat=2):
        if j == k:
            mul[idx[i, j], idx[k, l], idx[i, l]] = 1
    unit = _tensor(field, (d,), {(idx[i, i],): 1 for i in range(n)})
    basis = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    return AlgebraPresentation(field, d, basis, _tensor(field, (d, d, d), mul), unit)


def group_algebra(elements, product, field=QQ, names=None):
    """Group algebra with group-like coproduct ``g -> g (x) g``.

    ``product(a, b)`` returns the group product; ``elements[0]`` must be the
    identity.
    """
    elements = list(elements)
    index = {g: i for i, g in enumerate(elements)}
    d = len(elements)
    mul = {(index[a], index[b], index[product(a, b)]): 1
           for a, b in itertools.product(elements, repeat=2)}
    comul = {(i, i, i): 1 for i in range(d)}
    alg = AlgebraPresentation(field, d, tuple(names or map(str, elements)),
                              _tensor(field, (d, d, d), mul), _tensor(field, (d,), {(0,): 1}))
    return BialgebraPresentation(alg, _tensor(field, (d, d, d), comul),
                                 field.array([1] * d, (d,)))


def cyclic_group_algebra(n, field=QQ):
    names = ["e", "g"] + [f"g{k}" for k in range(2, n)]
    return group_algebra(range(n), lambda a, b: (a + b) % n, field, names[:n])


def klein_group_algebra(field=QQ):
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return group_algebra(elems, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2),
                         field, ["e", "a", "b", "ab"])


def sweedler_algebra(field=QQ):
    """Sweedler's four-dimensional Hopf algebra on the basis 1, g, x, gx.

    ``g^2 = 1``, ``x^2 = 0``, ``xg = -gx``, ``g`` group-like and
    ``Delta(x) = x (x) 1 + g (x) x``. Neither semisimple nor cosemisimple,
    so its cochain complex is not trivial in positive degree.
    """
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    index = {e: i for i, e in enumerate(elems)}
    mul = {}
    for (a, b), (c, e) in itertools.product(elems, repeat=2):
        # g^a x^b g^c x^e = (-1)^(bc) g^(a+c) x^(b+e)
        if b + e <= 1:
            mul[index[a, b], index[c, e], index[(a + c) % 2, b + e]] = (-1) ** (b * c)
    comul = {}
    for a in (0, 1):
        comul[index[a, 0], index[a, 0], index[a, 0]] = 1
        comul[index[a, 1], index[a, 1], index[a, 0]] = 1
        comul[index[a, 1], index[(a + 1) % 2, 0], index[a, 1]] = 1
    alg = AlgebraPresentation(field, 4, ("1", "g", "x", "gx"),
                              _tensor(field, (4, 4, 4), mul), _tensor(field, (4,), {(0,): 1}))
    return BialgebraPresentation(alg, _tensor(field, (4, 4, 4), comul),
                                 _tensor(field, (4,), {(0,): 1, (1,): 1}))


# name -> (builder, description); these are the models of the acceptance suites
STANDARD = {
    "dual_numbers": (lambda: build_algebra_model(truncated_polynomial(1), "Q[x]/(x^2)"),
                     "Q[x]/(x^2)"),
    "dual_numbers_2": (lambda: build_algebra_model(truncated_polynomial(2), "Q[x,y]/(x^2,y^2)"),
                       "Q[x,y]/(x^2,y^2)"),
    "matrix_2": (lambda: build_algebra_model(matrix_algebra(2), "M2(Q)"), "M2(Q)"),
    "group_z2": (lambda: build_bialgebra_model(cyclic_group_algebra(2), "Q[Z/2]"), "Q[Z/2]"),
    "group_klein": (lambda: build_bialgebra_model(klein_group_algebra(), "Q[Z/2xZ/2]"),
                    "Q[Z/2 x Z/2]"),
    "group_z3_f5": (lambda: build_bialgebra_model(cyclic_group_algebra(3, GF(5)), "F5[Z/3]"),
                    "F5[Z/3]"),
}


def standard_model(name):
    return STANDARD[name][0]()
