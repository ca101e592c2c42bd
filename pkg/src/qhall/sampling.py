"""Seeded random symmetric elements for identity checks."""

from __future__ import annotations

import itertools
import random
from typing import List, Sequence, Tuple

from .coha import CohaElem, CohaSeriesElem
from .kha import KhaElem
from .quiver import Quiver, dimvec
from .symfun import LaurentPoly, MultiPoly, TruncSeries, VarSpec, _add_into, monomial_symmetric, sym_keys, sym_key_of


def _coeff(rng: random.Random, lo=-3, hi=3):
    c = 0
    while c == 0:
        c = rng.randint(lo, hi)
    return c


def random_poly(rng: random.Random, gamma, max_degree: int, terms: int = 3) -> MultiPoly:
    """Random symmetric polynomial of degree at most ``max_degree`` (never zero)."""
    spec = VarSpec(dimvec(gamma))
    keys = [k for d in range(max_degree + 1) for k in sym_keys(spec, d)]
    picked = rng.sample(keys, min(terms, len(keys)))
    out = MultiPoly.zero(spec)
    for k in sorted(picked):
        out = out + monomial_symmetric(spec, k).scale(_coeff(rng))
    return out


def laurent_keys(spec: VarSpec, lo: int, hi: int) -> List[Tuple[int, ...]]:
    """Sorted representatives of symmetric Laurent monomials with exponents in ``[lo, hi]``."""
    keys = set()
    for e in itertools.product(range(lo, hi + 1), repeat=spec.nvars):
        keys.add(sym_key_of(spec, e))
    return sorted(keys, reverse=True)


def monomial_symmetric_laurent(spec: VarSpec, key) -> LaurentPoly:
    per_group = []
    for grp in spec.groups():
        part = [key[k] for k in grp]
        per_group.append(sorted(set(itertools.permutations(part))))
    terms = {}
    for combo in itertools.product(*per_group):
        terms[tuple(x for blk in combo for x in blk)] = 1
    return LaurentPoly(spec, terms, _trusted=True)


def random_laurent(rng: random.Random, gamma, lo: int = -2, hi: int = 2, terms: int = 3) -> LaurentPoly:
    spec = VarSpec(dimvec(gamma))
    keys = laurent_keys(spec, lo, hi)
    picked = rng.sample(keys, min(terms, len(keys)))
    out = {}
    for k in sorted(picked):
        c = _coeff(rng)
        for e, v in monomial_symmetric_laurent(spec, k).terms.items():
            _add_into(out, e, c * v)
    return LaurentPoly(spec, out)


def random_coha(rng, q: Quiver, gamma, max_degree: int = 3, terms: int = 3) -> CohaElem:
    return CohaElem(q, dimvec(gamma), random_poly(rng, gamma, max_degree, terms))


def random_series(rng, q: Quiver, gamma, order: int, terms: int = 3) -> CohaSeriesElem:
    p = random_poly(rng, gamma, max(order - 1, 0), terms)
    return CohaSeriesElem(q, dimvec(gamma), p.truncate(order))


def random_kha(rng, q: Quiver, gamma, lo: int = -2, hi: int = 2, terms: int = 3) -> KhaElem:
    return KhaElem(q, dimvec(gamma), random_laurent(rng, gamma, lo, hi, terms))


def grades_upto(gmax: Sequence[int], positive: bool = False) -> List[Tuple[int, ...]]:
    out = [tuple(g) for g in itertools.product(*(range(m + 1) for m in gmax))]
    if positive:
        out = [g for g in out if any(g)]
    return out
