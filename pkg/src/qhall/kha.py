"""The K-theoretic Hall algebra on symmetric Laurent polynomials.

The product kernel is

    prod_{i,j} (1 - z'_i / z''_j)^{a_ij} / prod_i (1 - z'_i / z''_i).

Since ``1 - z'/z'' = (z'' - z') / z''`` this is the cohomological kernel in
the ``z`` variables times a monomial in ``z''``, so the same shuffle engine
applies.  On the series side ``1 - e^{x'-x''} = (x'' - x') u(x'' - x')`` with
the unit series ``u(t) = (1 - e^{-t}) / t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from fractions import Fraction
from typing import Dict, List, Tuple

from .coha import (
    CohaElem,
    CohaSeriesElem,
    Layout,
    QuiverMismatchError,
    SymmetryError,
    coha_mul_series,
    product_terms,
)
from .quiver import DimensionError, Quiver, dimvec
from .symfun import (
    LaurentPoly,
    TruncSeries,
    VarSpec,
    _add_into,
    _mul_terms,
    compose_linear,
    difference,
    laurent_to_series,
    uni_pow,
)


@dataclass(frozen=True, eq=False)
class KhaElem:
    quiver: Quiver
    gamma: Tuple[int, ...]
    laurent: LaurentPoly

    def __post_init__(self):
        g = self.quiver.check_grade(self.gamma)
        object.__setattr__(self, "gamma", g)
        if self.laurent.spec.gamma != g:
            raise DimensionError(f"Laurent spec {self.laurent.spec.gamma} does not match grade {g}")
        if not self.laurent.is_symmetric():
            raise SymmetryError(f"element of grade {g} is not symmetric: {self.laurent}")

    @classmethod
    def one(cls, q: Quiver) -> "KhaElem":
        return cls.const(q, q.zero(), 1)

    @classmethod
    def const(cls, q: Quiver, gamma, c=1) -> "KhaElem":
        g = dimvec(gamma)
        return cls(q, g, LaurentPoly.const(VarSpec(g), c))

    @classmethod
    def power_sum(cls, q: Quiver, gamma, k: int, c=1) -> "KhaElem":
        """``c * sum z_{i,a}^k`` over all variables."""
        spec = VarSpec(dimvec(gamma))
        terms = {}
        for v in range(spec.nvars):
            e = [0] * spec.nvars
            e[v] = k
            _add_into(terms, tuple(e), c)
        return cls(q, spec.gamma, LaurentPoly(spec, terms))

    @property
    def spec(self) -> VarSpec:
        return self.laurent.spec

    def _same(self, other):
        if self.quiver != other.quiver:
            raise QuiverMismatchError("elements belong to different quivers")
        if self.gamma != other.gamma:
            raise DimensionError(f"grades differ: {self.gamma} vs {other.gamma}")

    def __add__(self, other):
        self._same(other)
        return KhaElem(self.quiver, self.gamma, self.laurent + other.laurent)

    def __sub__(self, other):
        self._same(other)
        return KhaElem(self.quiver, self.gamma, self.laurent - other.laurent)

    def __neg__(self):
        return KhaElem(self.quiver, self.gamma, -self.laurent)

    def scale(self, c) -> "KhaElem":
        return KhaElem(self.quiver, self.gamma, self.laurent.scale(c))

    def __mul__(self, other):
        if isinstance(other, KhaElem):
            return kha_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, KhaElem):
            return NotImplemented
        return self.quiver == other.quiver and self.gamma == other.gamma and self.laurent == other.laurent

    def __hash__(self):
        return hash((self.quiver, self.gamma, self.laurent))

    def is_zero(self) -> bool:
        return self.laurent.is_zero()

    def __repr__(self):
        return f"KhaElem({self.gamma}: {self.laurent})"


def z_shift(q: Quiver, lay: Layout) -> Dict:
    """Monomial in ``z''`` turning the cohomological kernel into the K-theoretic one."""
    spec = lay.spec
    e = [0] * spec.nvars
    n = q.vertex_count
    for j in range(n):
        k = lay.g1[j] - sum(q.arrows[i][j] * lay.g1[i] for i in range(n))
        for a in range(lay.g2[j]):
            e[lay.p2(j, a)] = k
    return {tuple(e): 1}


def kha_mul(f1: KhaElem, f2: KhaElem) -> KhaElem:
    """Shuffle product in the K-theoretic Hall algebra."""
    if f1.quiver != f2.quiver:
        raise QuiverMismatchError("operands belong to different quivers")
    q = f1.quiver
    lay = Layout(f1.gamma, f2.gamma)
    lay, terms = product_terms(q, f1.gamma, f2.gamma, None, None, cls=LaurentPoly,
                               f1=f1.laurent, f2=f2.laurent, extra=z_shift(q, lay))
    return KhaElem(q, lay.gamma, LaurentPoly(lay.spec, terms, _trusted=True))


def chern(f: KhaElem, order: int) -> CohaSeriesElem:
    """Substitute ``z -> e^x`` and truncate below total degree ``order``."""
    return CohaSeriesElem(f.quiver, f.gamma, laurent_to_series(f.laurent, order))


def unit_coeffs(n: int) -> List:
    """Coefficients of ``u(t) = (1 - e^{-t}) / t``."""
    return [Fraction((-1) ** k, factorial(k + 1)) if k else 1 for k in range(n)]


def unit_correction(q: Quiver, lay: Layout, order: int) -> Dict:
    """``prod u(x''_j - x'_i)^{a_ij - delta_ij}`` over cross pairs, below ``order``."""
    spec = lay.spec
    u = unit_coeffs(order)
    powers = {}
    out = {(0,) * spec.nvars: 1}
    for i, j, pa, pb in lay.cross_pairs():
        e = q.arrows[i][j] - (1 if i == j else 0)
        if e == 0:
            continue
        if e not in powers:
            powers[e] = uni_pow(u, e, order)
        s = compose_linear(powers[e], difference(spec, pb, pa), order)
        out = _mul_terms(out, s.terms, order)
    return out


def kha_mul_series(s1, s2) -> CohaSeriesElem:
    """Product with kernel ``prod (1 - e^{x'-x''})^{a_ij} / prod (1 - e^{x'-x''})``.

    Precision follows :func:`qhall.coha.coha_mul_series`.
    """
    q = s1.quiver
    return coha_mul_series(s1, s2, extra_fn=lambda lay, order: unit_correction(q, lay, order))
