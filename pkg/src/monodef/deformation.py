"""
Order-by-order deformation theory of the multiplication ``mu``.

A deformation jet ``(mu_0, ..., mu_n)`` with ``mu_0 = mu`` is valid when
for each ``1 <= k <= n``

    sum_{i+j=k} mu_i(Id (x) mu_j) = sum_{i+j=k} mu_i(mu_j (x) Id).

Gauge jets ``(phi_0 = Id, phi_1, ...)`` of degree-1 cochains form a group
under convolution and act on deformation jets by
``mu~ = phi mu (phi (x) phi)^{-1}`` truncated at the jet's order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import class_coordinates, cohomology, differential_matrix
from .complex_ops import differential
from .errors import IdentityViolation, InternalCocycleFailure, JetInvalid, ModelMismatch, WrongBase
from .linalg import solve_linear


def _check_models(*jets):
    m = jets[0].model
    for j in jets[1:]:
        if j.model is not m and j.model.fingerprint != m.fingerprint:
            raise ModelMismatch("jets belong to different models")
    return m


@dataclass(frozen=True, eq=False)
class DeformationJet:
    model: object
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            self.model.own(t)
            if t.degree != 2:
                raise ValueError("deformation terms are degree-2 cochains")

    @property
    def order(self):
        return len(self.terms) - 1

    @classmethod
    def trivial(cls, model, order):
        return cls(model, (model.mu(),) + tuple(model.zero(2) for _ in range(order)))

    def truncate(self, order):
        return DeformationJet(self.model, self.terms[:order + 1])

    def extend(self, term):
        return DeformationJet(self.model, self.terms + (term,))

    def __eq__(self, other):
        return (isinstance(other, DeformationJet) and len(self.terms) == len(other.terms)
                and all(a == b for a, b in zip(self.terms, other.terms)))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class GaugeJet:
    model: object
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            self.model.own(t)
            if t.degree != 1:
                raise ValueError("gauge terms are degree-1 cochains")
        if self.terms and self.terms[0] != self.model.identity():
            raise WrongBase("a gauge jet must start with the identity")

    @property
    def order(self):
        return len(self.terms) - 1

    @classmethod
    def neutral(cls, model, order):
        return cls(model, (model.identity(),) + tuple(model.zero(1) for _ in range(order)))

    def __eq__(self, other):
        return (isinstance(other, GaugeJet) and len(self.terms) == len(other.terms)
                and all(a == b for a, b in zip(self.terms, other.terms)))

    __hash__ = None


@dataclass
class JetVerdict:
    valid: bool
    first_failure: int | None = None
    defect: object = None


@dataclass
class ObstructionResult:
    cocycle: object
    is_cocycle_verified: bool
    class_coordinates: list
    liftable: bool
    lift_term: object = None

    def to_json(self):
        from .io import cochain_to_json
        F = self.cocycle.model.field
        return {
            "cocycle": cochain_to_json(self.cocycle),
            "is_cocycle_verified": self.is_cocycle_verified,
            "class_coordinates": [F.format(x) for x in self.class_coordinates],
            "liftable": self.liftable,
            "lift_term": cochain_to_json(self.lift_term) if self.lift_term is not None else None,
        }


def associativity_defect(jet, k):
    """``sum_{i+j=k} mu_i(Id (x) mu_j) - mu_i(mu_j (x) Id)``."""
    model = jet.model
    mus = jet.terms
    total = model.zero(3)
    for i in range(k + 1):
        a, b = mus[i], mus[k - i]
        total = total + model.substitute(a, [(1, b)]) - model.substitute(a, [(0, b)])
    return total


def check_jet(jet) -> JetVerdict:
    if jet.terms[0] != jet.model.mu():
        raise WrongBase("mu_0 differs from the model's multiplication")
    for k in range(1, jet.order + 1):
        defect = associativity_defect(jet, k)
        if not defect.is_zero():
            return JetVerdict(False, k, defect)
    return JetVerdict(True)


def _require_valid(jet):
    verdict = check_jet(jet)
    if not verdict.valid:
        raise JetInvalid(verdict.first_failure, verdict.defect)


def first_order_classes(model):
    """Degree-2 cohomology with each representative packaged as an order-1 jet."""
    report = cohomology(model, 2)
    jets = []
    for rep in report.representatives:
        jet = DeformationJet(model, (model.mu(), rep))
        _require_valid(jet)
        jets.append(jet)
    return report, jets


def obstruction_cocycle(jet):
    """The degree-3 cochain that ``d mu_{n+1}`` must equal for a lift to exist."""
    model = jet.model
    n = jet.order
    mus = jet.terms
    total = model.zero(3)
    for j in range(1, n + 1):
        a, b = mus[n + 1 - j], mus[j]
        total = total + model.substitute(a, [(1, b)]) - model.substitute(a, [(0, b)])
    return total


def obstruction(jet) -> ObstructionResult:
    _require_valid(jet)
    model = jet.model
    o = obstruction_cocycle(jet)
    if not differential(o).is_zero():
        raise InternalCocycleFailure("obstruction cochain is not a cocycle")
    x = solve_linear(differential_matrix(model, 2), o.to_vector())
    dim_h3 = cohomology(model, 3).dim_H
    if x is not None:
        return ObstructionResult(o, True, [model.field.zero] * dim_h3, True, model.from_vector(2, x))
    return ObstructionResult(o, True, class_coordinates(o), False, None)


@dataclass
class LiftOutcome:
    jet: DeformationJet
    blocked: ObstructionResult | None = None

    @property
    def complete(self):
        return self.blocked is None


def lift_to_order(jet, target_order) -> LiftOutcome:
    """Extend ``jet`` one order at a time; stop at the first non-vanishing obstruction."""
    _require_valid(jet)
    current = jet
    while current.order < target_order:
        res = obstruction(current)
        if not res.liftable:
            return LiftOutcome(current, res)
        current = current.extend(res.lift_term)
    return LiftOutcome(current, None)


# -- gauge group -----------------------------------------------------------

def gauge_compose(f, g) -> GaugeJet:
    """``(f g)_k = sum_{i+j=k} f_i o g_j``."""
    model = _check_models(f, g)
    if f.order != g.order:
        raise ValueError("gauge jets of different orders")
    terms = []
    for k in range(f.order + 1):
        total = model.zero(1)
        for i in range(k + 1):
            total = total + model.compose1(f.terms[i], g.terms[k - i])
        terms.append(total)
    return GaugeJet(model, terms)


def gauge_inverse(f) -> GaugeJet:
    model = f.model
    inv = [model.identity()]
    for k in range(1, f.order + 1):
        total = model.zero(1)
        for i in range(1, k + 1):
            total = total - model.compose1(f.terms[i], inv[k - i])
        inv.append(total)
    return GaugeJet(model, inv)


def _act_term(model, phi, mus, new, k):
    """Order-k term of the transformed jet given the lower transformed terms ``new``."""
    total = model.zero(2)
    for i in range(k + 1):
        total = total + model.substitute(phi[i], [(0, mus[k - i])])
    for i in range(k):
        for j1 in range(k - i + 1):
            j2 = k - i - j1
            total = total - model.substitute(new[i], [(0, phi[j1]), (1, phi[j2])])
    return total


def gauge_act(f, jet) -> DeformationJet:
    model = _check_models(f, jet)
    if f.order < jet.order:
        raise ValueError("gauge jet is shorter than the deformation jet")
    new = []
    for k in range(jet.order + 1):
        new.append(_act_term(model, f.terms, jet.terms, new, k))
    return DeformationJet(model, new)


def are_equivalent(jet_a, jet_b, order=None):
    """A gauge jet carrying ``jet_a`` to ``jet_b`` up to ``order``, or ``None``.

    Solves for ``phi_k`` one order at a time, always taking the particular
    solution with free variables zero. Earlier choices are never revisited,
    so ``None`` means that this greedy sequence got stuck; it is conclusive
    whenever degree-2 cohomology vanishes or the mismatch already occurs at
    the first order.
    """
    model = _check_models(jet_a, jet_b)
    order = min(jet_a.order, jet_b.order) if order is None else order
    if order > min(jet_a.order, jet_b.order):
        raise ValueError("order exceeds the jets' orders")
    _require_valid(jet_a.truncate(order))
    _require_valid(jet_b.truncate(order))
    mus = jet_a.terms
    phi = [model.identity()]
    new = [_act_term(model, phi, mus, [], 0)]
    D1 = differential_matrix(model, 1)
    for k in range(1, order + 1):
        # with phi_k = 0; a nonzero phi_k adds -d(phi_k)
        base = _act_term(model, phi + [model.zero(1)], mus, new, k)
        x = solve_linear(D1, (base - jet_b.terms[k]).to_vector())
        if x is None:
            return None
        phi.append(model.from_vector(1, x))
        new.append(_act_term(model, phi, mus, new, k))
        if new[k] != jet_b.terms[k]:
            raise IdentityViolation(f"gauge solve did not reproduce order {k}")
    return GaugeJet(model, phi)
