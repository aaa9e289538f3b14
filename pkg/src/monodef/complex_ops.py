"""
Differential, cup product, braces and the Gerstenhaber bracket.

Everything is assembled from ``model.substitute``. Brace signs are
``(-1)^{sum_p (j_p - 1) k_p}`` where ``k_p`` is the number of result
arguments in front of the p-th inner cochain.

Sign dictionary: for ``k >= 1`` the differential here is
``(-1)^{k-1}`` times the classical Hochschild coboundary, and in degree 0
it is the classical one. Cocycles, coboundaries and cohomology agree with
the classical conventions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ModelMismatch


def _same_model(*cochains):
    m = cochains[0].model
    for c in cochains[1:]:
        if c.model is not m and c.model.fingerprint != m.fingerprint:
            raise ModelMismatch("cochains belong to different models")
    return m


@dataclass(frozen=True)
class SignedBraceTerm:
    placements: tuple
    sign: int


def brace_degree(i, degrees):
    return i + sum(j - 1 for j in degrees)


def placement_tuples(i, degrees):
    """Admissible non-overlapping placements, lexicographic in ``(k_1, .., k_r)``."""
    n = brace_degree(i, degrees)
    r = len(degrees)
    if n < 0:
        return
    # smallest room needed by the blocks from p onwards
    tail = [0] * (r + 1)
    for p in range(r - 1, -1, -1):
        tail[p] = tail[p + 1] + degrees[p]

    def rec(p, start, acc):
        if p == r:
            yield tuple(acc)
            return
        for k in range(start, n - tail[p] + 1):
            acc.append(k)
            yield from rec(p + 1, k + degrees[p], acc)
            acc.pop()

    yield from rec(0, 0, [])


def brace_terms(i, degrees):
    for ks in placement_tuples(i, degrees):
        e = sum((j - 1) * k for j, k in zip(degrees, ks))
        yield SignedBraceTerm(ks, -1 if e % 2 else 1)


def brace(outer, inners):
    """``outer o (inner_1, ..., inner_r)``: signed sum over all placements."""
    inners = list(inners)
    model = _same_model(outer, *inners)
    degrees = [c.degree for c in inners]
    n = brace_degree(outer.degree, degrees)
    if not inners:
        return outer
    total = model.zero(n)
    for term in brace_terms(outer.degree, degrees):
        piece = model.substitute(outer, list(zip(term.placements, inners)))
        total = total + piece if term.sign > 0 else total - piece
    return total


def cup(a, b):
    """Cup product ``(-1)^{ij} mu(a (x) b)``."""
    model = _same_model(a, b)
    val = model.substitute(model.mu(), [(0, a), (a.degree, b)])
    return -val if (a.degree * b.degree) % 2 else val


def cup_via_brace(a, b):
    model = _same_model(a, b)
    val = brace(model.mu(), [a, b])
    return -val if a.degree % 2 else val


def differential(c):
    """The Hochschild differential, written out term by term."""
    model = c.model
    mu = model.mu()
    k = c.degree
    if k == 0:
        return model.substitute(mu, [(1, c)]) - model.substitute(mu, [(0, c)])
    first = model.substitute(mu, [(1, c)])
    total = first if (k - 1) % 2 == 0 else -first
    for i in range(1, k + 1):
        term = model.substitute(c, [(i - 1, mu)])
        total = total + term if (i + k - 1) % 2 == 0 else total - term
    return total + model.substitute(mu, [(0, c)])


def differential_via_brace(c):
    """``mu o c - (-1)^{k-1} c o mu``; agrees with :func:`differential` for ``k >= 1``."""
    if c.degree == 0:
        raise ValueError("the brace form of the differential is stated for k >= 1")
    mu = c.model.mu()
    left = brace(mu, [c])
    right = brace(c, [mu])
    return left - right if (c.degree - 1) % 2 == 0 else left + right


def bracket(a, b):
    _same_model(a, b)
    if a.degree < 1 or b.degree < 1:
        raise ValueError("the bracket is defined for degrees >= 1")
    left = brace(a, [b])
    right = brace(b, [a])
    if ((a.degree + 1) * (b.degree + 1)) % 2:
        return left + right
    return left - right


def jacobi_splits(r, s):
    """Ways to distribute ``s`` ordered inputs around and into ``r`` ordered blocks.

    Yields ``((start_1, stop_1), ..., (start_r, stop_r))`` with
    ``0 <= start_1 <= stop_1 <= start_2 <= ... <= stop_r <= s``; block p
    absorbs inputs ``start_p .. stop_p - 1``.
    """
    def rec(p, lo, acc):
        if p == r:
            yield tuple(acc)
            return
        for start in range(lo, s + 1):
            for stop in range(start, s + 1):
                acc.append((start, stop))
                yield from rec(p + 1, stop, acc)
                acc.pop()

    yield from rec(0, 0, [])


def pre_jacobi_rhs(a, bs, cs):
    model = _same_model(a, *bs, *cs)
    n = brace_degree(brace_degree(a.degree, [b.degree for b in bs]), [c.degree for c in cs])
    total = model.zero(n)
    for split in jacobi_splits(len(bs), len(cs)):
        items = []
        pos = 0
        exponent = 0
        skip = False
        for b, (start, stop) in zip(bs, split):
            items.extend(cs[pos:start])
            exponent += (b.degree - 1) * sum(c.degree - 1 for c in cs[:start])
            group = cs[start:stop]
            if brace_degree(b.degree, [c.degree for c in group]) < 0:
                skip = True
                break
            items.append(brace(b, group))
            pos = stop
        if skip:
            continue
        items.extend(cs[pos:])
        term = brace(a, items)
        total = total - term if exponent % 2 else total + term
    return total


def pre_jacobi_defect(a, bs, cs):
    """``(a o bs) o cs`` minus the expanded right-hand side; identically zero."""
    bs, cs = list(bs), list(cs)
    lhs = brace(brace(a, bs), cs)
    return lhs - pre_jacobi_rhs(a, bs, cs)
