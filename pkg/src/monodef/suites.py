"""
Seeded randomized identity suites.

Each suite returns ``(passed, checked, first_failure)``; the CLI ``verify``
command and the acceptance tests both run them.
"""

from __future__ import annotations

import random

from .complex_ops import (brace, cup, cup_via_brace, differential,
                          differential_via_brace, pre_jacobi_defect)
from .deformation import GaugeJet, DeformationJet, gauge_act, gauge_compose, gauge_inverse

DEFAULT_SEED = 1729

# (outer degree, inner degrees, second-level inner degrees); the first two
# are single-inner patterns, the rest have two inners on one side
PRE_JACOBI_PATTERNS = [
    (2, (2,), (1,)),
    (1, (2,), (2,)),
    (2, (1, 1), (2,)),
    (2, (2,), (1, 1)),
    (3, (0, 2), (1,)),
    (2, (2, 0), (1, 0)),
]


class SuiteResult:
    def __init__(self, name):
        self.name = name
        self.checked = 0
        self.failures = []

    @property
    def passed(self):
        return not self.failures

    def record(self, ok, what):
        self.checked += 1
        if not ok and len(self.failures) < 5:
            self.failures.append(what)

    def to_json(self):
        return {"passed": self.passed, "checked": self.checked, "failures": self.failures}


def unit_and_associativity(model):
    res = SuiteResult("unit_and_associativity")
    mu, eta, ident = model.mu(), model.eta(), model.identity()
    res.record(model.substitute(mu, [(1, eta)]) == ident, "right unit")
    res.record(model.substitute(mu, [(0, eta)]) == ident, "left unit")
    res.record(model.substitute(mu, [(1, mu)]) == model.substitute(mu, [(0, mu)]), "associativity")
    return res


def d_squared(model, rng, degrees, samples):
    res = SuiteResult("d_squared")
    for k in degrees:
        for s in range(samples):
            c = model.random_cochain(k, rng)
            res.record(differential(differential(c)).is_zero(), f"degree {k} sample {s}")
    return res


def dual_differential(model, rng, degrees, samples):
    res = SuiteResult("dual_differential")
    for k in degrees:
        if k == 0:
            continue
        for s in range(samples):
            c = model.random_cochain(k, rng)
            res.record(differential(c) == differential_via_brace(c), f"degree {k} sample {s}")
    return res


def cup_coherence(model, rng, samples, max_degree=2):
    res = SuiteResult("cup_coherence")
    for s in range(samples):
        i, j = rng.randint(0, max_degree), rng.randint(0, max_degree)
        a, b = model.random_cochain(i, rng), model.random_cochain(j, rng)
        res.record(cup(a, b) == cup_via_brace(a, b), f"degrees ({i},{j}) sample {s}")
    return res


def random_pre_jacobi_triple(model, rng, pattern):
    a_deg, b_degs, c_degs = pattern
    return (model.random_cochain(a_deg, rng),
            [model.random_cochain(j, rng) for j in b_degs],
            [model.random_cochain(j, rng) for j in c_degs])


def pre_jacobi(model, rng, samples):
    res = SuiteResult("pre_jacobi")
    for s in range(samples):
        pattern = PRE_JACOBI_PATTERNS[s % len(PRE_JACOBI_PATTERNS)]
        a, bs, cs = random_pre_jacobi_triple(model, rng, pattern)
        res.record(pre_jacobi_defect(a, bs, cs).is_zero(), f"pattern {pattern} sample {s}")
    return res


def unit_evaluation(model, rng, samples, max_degree=2):
    """Evaluation at the unit object commutes with d, cup and brace."""
    res = SuiteResult("unit_evaluation")
    ev = model.evaluate_at_unit
    for s in range(samples):
        i, j = rng.randint(0, max_degree), rng.randint(0, max_degree)
        a, b = model.random_cochain(i, rng), model.random_cochain(j, rng)
        res.record(ev(differential(a)) == differential(ev(a)), f"d, degree {i}, sample {s}")
        res.record(ev(cup(a, b)) == cup(ev(a), ev(b)), f"cup, degrees ({i},{j}), sample {s}")
        i = max(i, 1)
        a = model.random_cochain(i, rng)
        res.record(ev(brace(a, [b])) == brace(ev(a), [ev(b)]), f"brace, degrees ({i},{j}), sample {s}")
    return res


def random_gauge(model, rng, order):
    return GaugeJet(model, [model.identity()] + [model.random_cochain(1, rng) for _ in range(order)])


def gauge_laws(model, rng, samples, order=3):
    res = SuiteResult("gauge_laws")
    neutral = GaugeJet.neutral(model, order)
    for s in range(samples):
        f, g, h = (random_gauge(model, rng, order) for _ in range(3))
        res.record(gauge_compose(gauge_compose(f, g), h) == gauge_compose(f, gauge_compose(g, h)),
                   f"associativity sample {s}")
        res.record(gauge_compose(f, neutral) == f and gauge_compose(neutral, f) == f,
                   f"neutral sample {s}")
        inv = gauge_inverse(f)
        res.record(gauge_compose(f, inv) == neutral and gauge_compose(inv, f) == neutral,
                   f"inverse sample {s}")
        jet = DeformationJet(model, [model.mu()] + [model.random_cochain(2, rng) for _ in range(order)])
        res.record(gauge_act(f, gauge_act(g, jet)) == gauge_act(gauge_compose(f, g), jet),
                   f"action sample {s}")
    return res


def run_all(model, seed=DEFAULT_SEED, max_degree=3, samples=10):
    rng = random.Random(seed)
    degrees = range(max_degree + 1)
    return [
        unit_and_associativity(model),
        d_squared(model, rng, degrees, samples),
        dual_differential(model, rng, degrees, samples),
        cup_coherence(model, rng, samples),
        pre_jacobi(model, rng, samples),
        unit_evaluation(model, rng, samples),
        gauge_laws(model, rng, max(1, samples // 2)),
    ]
