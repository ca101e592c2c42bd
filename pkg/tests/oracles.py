"""Independent reference implementations built on sympy rational functions.

Nothing here uses the shuffle engine or the polynomial kernel of the package;
results are converted to term dicts only for comparison.
"""

import itertools
from fractions import Fraction

import sympy as sp


def _symbols(prefix, n):
    return sp.symbols(f"{prefix}0:{max(n, 1)}")[:n]


def _to_terms(expr, gens):
    poly = sp.Poly(sp.expand(expr), *gens)
    out = {}
    for mon, c in poly.terms():
        c = sp.Rational(c)
        if c != 0:
            out[tuple(mon)] = int(c) if c.q == 1 else Fraction(int(c.p), int(c.q))
    return out


def one_vertex_product(m, f1_terms, g1, f2_terms, g2):
    """Loop-quiver product with kernel ``(x'' - x')^{m-1}`` over all shuffles.

    ``f1_terms``/``f2_terms`` map exponent tuples to coefficients.  Returns a
    term dict over ``g1 + g2`` variables.
    """
    n = g1 + g2
    if n == 0:
        c = Fraction(f1_terms.get((), 0)) * Fraction(f2_terms.get((), 0))
        return {(): c.numerator if c.denominator == 1 else c} if c else {}
    xs = _symbols("x", n)
    total = sp.Integer(0)
    for prim in itertools.combinations(range(n), g1):
        dbl = [s for s in range(n) if s not in prim]
        xp = [xs[s] for s in prim]
        xd = [xs[s] for s in dbl]
        f1 = sum(sp.Rational(c.numerator, c.denominator) * sp.Mul(*[v ** e for v, e in zip(xp, ex)])
                 for ex, c in ((e, Fraction(c)) for e, c in f1_terms.items()))
        f2 = sum(sp.Rational(c.numerator, c.denominator) * sp.Mul(*[v ** e for v, e in zip(xd, ex)])
                 for ex, c in ((e, Fraction(c)) for e, c in f2_terms.items()))
        ker = sp.Integer(1)
        for a in xp:
            for b in xd:
                ker *= (b - a) ** (m - 1)
        total += f1 * f2 * ker
    total = sp.cancel(sp.together(total))
    num, den = sp.fraction(total)
    assert sp.Poly(den, *xs).is_ground, "shuffle sum is not a polynomial"
    return _to_terms(num / den, list(xs))
