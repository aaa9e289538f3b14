"""Cocycles, coboundaries and cohomology of a model."""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex_ops import differential
from .errors import NotACocycle
from .linalg import Matrix, kernel_basis, quotient_representatives, rank, solve_linear

DEFAULT_MAX_DEGREE = 4


@dataclass
class CohomologyReport:
    degree: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_H: int
    representatives: list = field(default_factory=list)

    def to_json(self):
        from .io import cochain_to_json
        return {
            "degree": self.degree,
            "dim_cocycles": self.dim_cocycles,
            "dim_coboundaries": self.dim_coboundaries,
            "dim_H": self.dim_H,
            "representatives": [cochain_to_json(c) for c in self.representatives],
        }


def differential_matrix(model, k) -> Matrix:
    """Matrix of ``d: C^k -> C^{k+1}`` on the lexicographic bases (cached per model)."""
    key = ("dmat", k)
    if key not in model._cache:
        columns = [differential(model.basis_cochain(k, j)).to_vector()
                   for j in range(model.cochain_dim(k))]
        model._cache[key] = Matrix.from_columns(model.field, columns, model.cochain_dim(k + 1))
    return model._cache[key]


def cocycle_basis(model, k):
    key = ("Z", k)
    if key not in model._cache:
        model._cache[key] = kernel_basis(differential_matrix(model, k))
    return model._cache[key]


def coboundary_spanning_set(model, k):
    if k == 0:
        return []
    D = differential_matrix(model, k - 1)
    return [[D.entries[i * D.cols + j] for i in range(D.rows)] for j in range(D.cols)]


def cohomology(model, k) -> CohomologyReport:
    key = ("H", k)
    if key not in model._cache:
        n = model.cochain_dim(k)
        Z = cocycle_basis(model, k)
        B = coboundary_spanning_set(model, k)
        dim_b = rank(differential_matrix(model, k - 1)) if k > 0 else 0
        reps = quotient_representatives(B, Z, n, model.field)
        model._cache[key] = CohomologyReport(
            k, len(Z), dim_b, len(reps), [model.from_vector(k, v) for v in reps])
    return model._cache[key]


def is_coboundary(c):
    """A preimage of ``c`` under ``d`` or ``None``."""
    model = c.model
    defect = differential(c)
    if not defect.is_zero():
        raise NotACocycle(defect)
    if c.degree == 0:
        raise ValueError("degree-0 cochains have no preimage space")
    x = solve_linear(differential_matrix(model, c.degree - 1), c.to_vector())
    return None if x is None else model.from_vector(c.degree - 1, x)


def class_coordinates(c):
    """Coordinates of the class of cocycle ``c`` in the basis of :func:`cohomology` representatives."""
    model = c.model
    k = c.degree
    report = cohomology(model, k)
    if report.dim_H == 0:
        return []
    B = coboundary_spanning_set(model, k)
    reps = [r.to_vector() for r in report.representatives]
    cols = reps + B
    x = solve_linear(Matrix.from_columns(model.field, cols, model.cochain_dim(k)), c.to_vector())
    if x is None:
        raise NotACocycle(differential(c))
    return x[:len(reps)]
