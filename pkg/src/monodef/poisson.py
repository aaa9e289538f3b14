"""Symmetric and Poisson functor checks, and the quasi-classical limit."""

from __future__ import annotations

from dataclasses import dataclass

from .deformation import check_jet
from .errors import JetInvalid, NotSymmetricCapable, OrderTooLow


@dataclass
class PoissonReport:
    skew_ok: bool
    jacobi_ok: bool
    derivation_ok: bool
    skew_defect: object
    jacobi_defect: object
    derivation_defect: object

    @property
    def ok(self):
        return self.skew_ok and self.jacobi_ok and self.derivation_ok

    def to_json(self):
        from .io import cochain_to_json
        return {
            "skew_ok": self.skew_ok,
            "jacobi_ok": self.jacobi_ok,
            "derivation_ok": self.derivation_ok,
            "defects": {
                "skew": cochain_to_json(self.skew_defect),
                "jacobi": cochain_to_json(self.jacobi_defect),
                "derivation": cochain_to_json(self.derivation_defect),
            },
        }


def check_symmetric(model) -> bool:
    if not model.symmetric_capable:
        raise NotSymmetricCapable(f"model {model.name!r} is neither commutative nor cocommutative")
    mu = model.mu()
    return model.sym_conjugate(mu, 1) == mu


def check_poisson(model, pi) -> PoissonReport:
    if not check_symmetric(model):
        raise NotSymmetricCapable("multiplication is not compatible with the symmetry")
    model.own(pi)
    if pi.degree != 2:
        raise ValueError("a Poisson structure is a degree-2 cochain")
    mu = model.mu()
    sub = model.substitute
    sym = model.sym_conjugate
    skew = pi + sym(pi, 1)
    pi_after = sub(pi, [(1, pi)])                     # pi(Id (x) pi)
    jacobi = pi_after - sub(pi, [(0, pi)]) - sym(pi_after, 1)
    derivation = sub(pi, [(1, mu)]) - sub(mu, [(0, pi)]) - sym(sub(mu, [(1, pi)]), 1)
    return PoissonReport(skew.is_zero(), jacobi.is_zero(), derivation.is_zero(),
                         skew, jacobi, derivation)


def quasiclassical_limit(jet):
    """Antisymmetrized first-order term ``mu_1 - sigma mu_1 sigma``."""
    if jet.order < 2:
        raise OrderTooLow("the quasi-classical limit needs a jet valid to order 2")
    verdict = check_jet(jet.truncate(2))
    if not verdict.valid:
        raise JetInvalid(verdict.first_failure, verdict.defect)
    model = jet.model
    if not check_symmetric(model):
        raise NotSymmetricCapable("multiplication is not compatible with the symmetry")
    mu1 = jet.terms[1]
    return mu1 - model.sym_conjugate(mu1, 1)


def induced_poisson_bracket(model, pi):
    """The bracket on the monoid obtained by evaluating ``pi`` at the unit object."""
    report = check_poisson(model, pi)
    if not report.ok:
        raise ValueError("pi does not satisfy the Poisson axioms")
    return model.evaluate_at_unit(pi)
