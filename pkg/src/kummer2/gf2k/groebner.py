"""Buchberger's algorithm (graded-lex) and colength of zero-dimensional ideals."""

from __future__ import annotations

import math
from itertools import product

from .multipoly import MultiPoly, grlex_key

INFINITE = math.inf
MAX_COLENGTH_VARIABLES = 3


def _lt(terms):
    return max(terms, key=grlex_key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub_mono(F, p, q_terms, shift, c):
    """p -= c * x^shift * q, in place on dict p."""
    for e, v in q_terms.items():
        e2 = tuple(a + b for a, b in zip(e, shift))
        w = p.get(e2, 0) ^ F.mul(v, c)
        if w:
            p[e2] = w
        else:
            p.pop(e2, None)


def _monic(F, terms):
    lead = terms[_lt(terms)]
    inv = F.inv(lead)
    return {e: F.mul(v, inv) for e, v in terms.items()}


def _reduce(F, terms, basis):
    """Full normal form of ``terms`` modulo ``basis`` (list of (lm, monic dict))."""
    p = dict(terms)
    rem = {}
    while p:
        lt = _lt(p)
        c = p[lt]
        for lm, g in basis:
            if _divides(lm, lt):
                shift = tuple(a - b for a, b in zip(lt, lm))
                _sub_mono(F, p, g, shift, c)
                break
        else:
            rem[lt] = c
            del p[lt]
    return rem


def groebner_basis(gens):
    """Reduced Groebner basis under graded-lex order.

    S-pairs are processed first-in first-out in the order they are created,
    skipping pairs with coprime leading monomials.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    F, variables = gens[0].field, gens[0].variables
    for g in gens:
        g._check(gens[0])
    basis = []
    for g in gens:
        r = _reduce(F, g.terms, basis)
        if r:
            r = _monic(F, r)
            basis.append((_lt(r), r))
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        lm_i, gi = basis[i]
        lm_j, gj = basis[j]
        lcm = tuple(max(a, b) for a, b in zip(lm_i, lm_j))
        if all(a == 0 or b == 0 for a, b in zip(lm_i, lm_j)):
            continue
        s = {}
        _sub_mono(F, s, gi, tuple(a - b for a, b in zip(lcm, lm_i)), 1)
        _sub_mono(F, s, gj, tuple(a - b for a, b in zip(lcm, lm_j)), 1)
        r = _reduce(F, s, basis)
        if r:
            r = _monic(F, r)
            basis.append((_lt(r), r))
            n = len(basis) - 1
            pairs.extend((k, n) for k in range(n))
    # minimalize, then inter-reduce
    minimal = []
    for idx, (lm, g) in enumerate(basis):
        if any(_divides(lm2, lm) and (lm2 != lm or k < idx)
               for k, (lm2, _) in enumerate(basis) if k != idx):
            continue
        minimal.append((lm, g))
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = [b for k, b in enumerate(minimal) if k != idx]
        tail = {e: v for e, v in g.items() if e != lm}
        tail = _reduce(F, tail, others)
        tail[lm] = 1
        reduced.append((lm, tail))
    reduced.sort(key=lambda b: grlex_key(b[0]))
    return [MultiPoly(F, variables, g) for _, g in reduced]


def leading_monomial(p: MultiPoly):
    return _lt(p.terms)


def normal_form(p: MultiPoly, basis) -> MultiPoly:
    F = p.field
    b = [(_lt(g.terms), _monic(F, g.terms)) for g in basis if not g.is_zero()]
    return MultiPoly(F, p.variables, _reduce(F, p.terms, b))


def standard_monomials(basis, nvars: int):
    """Monomials outside the leading-term ideal, or ``None`` if there are infinitely many."""
    lms = [leading_monomial(g) for g in basis]
    if any(sum(m) == 0 for m in lms):
        return []  # unit ideal
    bounds = []
    for i in range(nvars):
        pure = [m[i] for m in lms if m[i] > 0 and sum(m) == m[i]]
        if not pure:
            return None
        bounds.append(min(pure))
    return [e for e in product(*(range(b) for b in bounds))
            if not any(_divides(m, e) for m in lms)]


def ideal_colength(gens):
    """Dimension of k[x_1..x_n]/(gens) over the coefficient field, or ``INFINITE``."""
    gens = list(gens)
    if not gens:
        return INFINITE
    nvars = len(gens[0].variables)
    if nvars > MAX_COLENGTH_VARIABLES:
        raise ValueError(f"colength supports at most {MAX_COLENGTH_VARIABLES} variables")
    basis = groebner_basis(gens)
    if not basis:
        return INFINITE
    std = standard_monomials(basis, nvars)
    if std is None:
        return INFINITE
    return len(std)


def tjurina_number(f: MultiPoly):
    """Colength of (f, df/dx_1, ..., df/dx_n)."""
    return ideal_colength([f] + [f.diff(v) for v in f.variables])
