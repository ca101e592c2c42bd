"""The cohomological Hall algebra of a quiver as a shuffle algebra.

An element of grade ``gamma`` is a polynomial in ``x_{i,a}`` (``a`` up to
``gamma^i``) symmetric within each vertex group.  The product of
``f1 in H_{g1}`` and ``f2 in H_{g2}`` sums, over one shuffle per vertex,

    f1(x') f2(x'') prod_{i,j} (x''_j - x'_i)^{a_ij} / prod_i (x''_i - x'_i).

Same-vertex poles only occur at vertices without loops.  For those we
multiply every term by the Vandermonde of the combined variables, sum the
resulting polynomials and divide the Vandermonde back out exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import linalg
from .quiver import (
    DimensionError,
    PreconditionError,
    Quiver,
    add,
    check_psi,
    delta_fn,
    dimvec,
    euler_form,
    form_value,
    is_nonnegative,
    psi_standard_matrix,
)
from .symfun import (
    LaurentPoly,
    MultiPoly,
    TruncSeries,
    VarSpec,
    _add_into,
    _mul_terms,
    compose_linear,
    difference,
    divide_by_differences,
    monomial_symmetric,
    sym_coordinates,
    sym_keys,
    uni_pow,
)

INF = float("inf")


class QuiverMismatchError(ValueError):
    pass


class ResourceError(RuntimeError):
    """Requested bounds exceed the documented desk-scale limits."""


class SymmetryError(ValueError):
    """An element is not symmetric within its vertex groups."""


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True, eq=False)
class CohaElem:
    quiver: Quiver
    gamma: Tuple[int, ...]
    poly: MultiPoly

    def __post_init__(self):
        g = self.quiver.check_grade(self.gamma)
        object.__setattr__(self, "gamma", g)
        if self.poly.spec.gamma != g:
            raise DimensionError(f"polynomial spec {self.poly.spec.gamma} does not match grade {g}")
        if not self.poly.is_symmetric():
            raise SymmetryError(f"element of grade {g} is not symmetric: {self.poly}")

    @classmethod
    def one(cls, q: Quiver) -> "CohaElem":
        return cls.const(q, q.zero(), 1)

    @classmethod
    def const(cls, q: Quiver, gamma, c=1) -> "CohaElem":
        g = dimvec(gamma)
        return cls(q, g, MultiPoly.const(VarSpec(g), c))

    @classmethod
    def power_sum(cls, q: Quiver, gamma, k: int, c=1) -> "CohaElem":
        """``c * sum_a x_{i,a}^k`` summed over every vertex group."""
        spec = VarSpec(dimvec(gamma))
        p = MultiPoly.zero(spec)
        for v in range(spec.nvars):
            e = [0] * spec.nvars
            e[v] = k
            p = p + MultiPoly(spec, {tuple(e): c})
        return cls(q, spec.gamma, p)

    @property
    def spec(self) -> VarSpec:
        return self.poly.spec

    def _same(self, other: "CohaElem"):
        if self.quiver != other.quiver:
            raise QuiverMismatchError("elements belong to different quivers")
        if self.gamma != other.gamma:
            raise DimensionError(f"grades differ: {self.gamma} vs {other.gamma}")

    def __add__(self, other):
        self._same(other)
        return CohaElem(self.quiver, self.gamma, self.poly + other.poly)

    def __sub__(self, other):
        self._same(other)
        return CohaElem(self.quiver, self.gamma, self.poly - other.poly)

    def __neg__(self):
        return CohaElem(self.quiver, self.gamma, -self.poly)

    def scale(self, c) -> "CohaElem":
        return CohaElem(self.quiver, self.gamma, self.poly.scale(c))

    def __mul__(self, other):
        if isinstance(other, CohaElem):
            return coha_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, CohaElem):
            return NotImplemented
        return self.quiver == other.quiver and self.gamma == other.gamma and self.poly == other.poly

    def __hash__(self):
        return hash((self.quiver, self.gamma, self.poly))

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def truncate(self, order: int) -> "CohaSeriesElem":
        return CohaSeriesElem(self.quiver, self.gamma, self.poly.truncate(order))

    def __repr__(self):
        return f"CohaElem({self.gamma}: {self.poly})"


@dataclass(frozen=True, eq=False)
class CohaSeriesElem:
    """Element of the completed algebra, known below total degree ``order``."""

    quiver: Quiver
    gamma: Tuple[int, ...]
    series: TruncSeries

    def __post_init__(self):
        g = self.quiver.check_grade(self.gamma)
        object.__setattr__(self, "gamma", g)
        if self.series.spec.gamma != g:
            raise DimensionError(f"series spec {self.series.spec.gamma} does not match grade {g}")
        if not self.series.is_symmetric():
            raise SymmetryError(f"series of grade {g} is not symmetric")

    @classmethod
    def one(cls, q: Quiver, order: int) -> "CohaSeriesElem":
        return cls(q, q.zero(), TruncSeries.const(VarSpec(q.zero()), 1, order=order))

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def spec(self) -> VarSpec:
        return self.series.spec

    def _same(self, other):
        if self.quiver != other.quiver:
            raise QuiverMismatchError("elements belong to different quivers")
        if self.gamma != other.gamma:
            raise DimensionError(f"grades differ: {self.gamma} vs {other.gamma}")

    def __add__(self, other):
        self._same(other)
        return CohaSeriesElem(self.quiver, self.gamma, self.series + other.series)

    def __sub__(self, other):
        self._same(other)
        return CohaSeriesElem(self.quiver, self.gamma, self.series - other.series)

    def __neg__(self):
        return CohaSeriesElem(self.quiver, self.gamma, -self.series)

    def scale(self, c):
        return CohaSeriesElem(self.quiver, self.gamma, self.series.scale(c))

    def times_series(self, s: TruncSeries) -> "CohaSeriesElem":
        """Pointwise product with a (symmetric) series of the same grade."""
        return CohaSeriesElem(self.quiver, self.gamma, self.series * s)

    def __mul__(self, other):
        if isinstance(other, (CohaSeriesElem, CohaElem)):
            return coha_mul_series(self, other)
        return self.scale(other)

    def truncate(self, order: int) -> "CohaSeriesElem":
        return CohaSeriesElem(self.quiver, self.gamma, self.series.truncate(order))

    def agrees_with(self, other) -> bool:
        if isinstance(other, CohaElem):
            other = other.truncate(self.order)
        return self.quiver == other.quiver and self.gamma == other.gamma and self.series.agrees_with(other.series)

    def __eq__(self, other):
        if not isinstance(other, CohaSeriesElem):
            return NotImplemented
        return self.quiver == other.quiver and self.gamma == other.gamma and self.series == other.series

    def __hash__(self):
        return hash((self.quiver, self.gamma, self.series))

    def __repr__(self):
        return f"CohaSeriesElem({self.gamma}: {self.series.to_str()} + O({self.order}))"


# ---------------------------------------------------------------------------
# the shuffle engine (shared with the K-theoretic side)


@dataclass(frozen=True)
class Layout:
    """Identity placement of ``x'`` then ``x''`` inside each vertex group."""

    g1: Tuple[int, ...]
    g2: Tuple[int, ...]

    @property
    def gamma(self) -> Tuple[int, ...]:
        return add(self.g1, self.g2)

    @property
    def spec(self) -> VarSpec:
        return VarSpec(self.gamma)

    def first(self) -> List[int]:
        off = self.spec.offsets
        return [off[i] + a for i, g in enumerate(self.g1) for a in range(g)]

    def second(self) -> List[int]:
        off = self.spec.offsets
        return [off[i] + self.g1[i] + a for i, g in enumerate(self.g2) for a in range(g)]

    def p1(self, i: int, a: int) -> int:
        return self.spec.offsets[i] + a

    def p2(self, i: int, a: int) -> int:
        return self.spec.offsets[i] + self.g1[i] + a

    def cross_pairs(self) -> Iterable[Tuple[int, int, int, int]]:
        """``(i, j, pos(x'_{i,.}), pos(x''_{j,.}))`` for every cross pair."""
        n = len(self.g1)
        for i in range(n):
            for j in range(n):
                for a1 in range(self.g1[i]):
                    for a2 in range(self.g2[j]):
                        yield i, j, self.p1(i, a1), self.p2(j, a2)


def pole_vertices(q: Quiver) -> List[int]:
    return [i for i in range(q.vertex_count) if q.arrows[i][i] == 0]


def kernel_factors(q: Quiver, lay: Layout) -> List[Tuple[int, int, int]]:
    """Linear factors ``(b, a, e)`` meaning ``(x_b - x_a)^e`` of the cleared kernel.

    Same-vertex cross pairs carry net exponent ``a_ii - 1``; where that is
    ``-1`` the pole is replaced by the same-block Vandermonde factors (the
    combined Vandermonde is divided out after the shuffle sum).
    """
    poles = set(pole_vertices(q))
    out = []
    for i, j, pa, pb in lay.cross_pairs():
        e = q.arrows[i][j] - (1 if i == j else 0)
        if e > 0:
            out.append((pb, pa, e))
    for i in poles:
        for blk, g in ((lay.p1, lay.g1[i]), (lay.p2, lay.g2[i])):
            for a in range(g):
                for b in range(a + 1, g):
                    out.append((blk(i, b), blk(i, a), 1))
    return out


def vandermonde_pairs(q: Quiver, gamma: Sequence[int]) -> List[Tuple[int, int]]:
    spec = VarSpec(tuple(gamma))
    out = []
    for i in pole_vertices(q):
        off = spec.offsets[i]
        for a in range(spec.gamma[i]):
            for b in range(a + 1, spec.gamma[i]):
                out.append((off + b, off + a))
    return out


def _linear_power(spec: VarSpec, b: int, a: int, e: int, cls, max_degree=None):
    lin = difference(spec, b, a)
    out = {(0,) * spec.nvars: 1}
    for _ in range(e):
        out = _mul_terms(out, lin.terms, max_degree)
    return out


def _shuffle_maps(q: Quiver, lay: Layout):
    """Yield ``(src, sign)`` for every tuple of per-vertex shuffles."""
    spec = lay.spec
    poles = set(pole_vertices(q))
    per_vertex = []
    for i in range(q.vertex_count):
        p, r = lay.g1[i], lay.g2[i]
        off = spec.offsets[i]
        options = []
        for prim in itertools.combinations(range(p + r), p):
            dbl = [s for s in range(p + r) if s not in prim]
            local = [0] * (p + r)
            for a, s in enumerate(prim):
                local[s] = off + a
            for b, s in enumerate(dbl):
                local[s] = off + p + b
            inv = sum(1 for s in prim for t in dbl if t < s)
            sign = -1 if (i in poles and inv % 2) else 1
            options.append((local, sign))
        per_vertex.append(options)
    for combo in itertools.product(*per_vertex):
        src = []
        sign = 1
        for local, s in combo:
            src.extend(local)
            sign *= s
        yield src, sign


def shuffle_sum(q: Quiver, lay: Layout, block: Dict, max_degree=None) -> Dict:
    """Signed sum of ``block`` over all shuffles, divided by the pole Vandermonde.

    ``block`` holds terms over the combined spec in identity placement,
    already multiplied by :func:`kernel_factors`.
    """
    acc: Dict = {}
    for src, sign in _shuffle_maps(q, lay):
        for e, c in block.items():
            ne = tuple(e[s] for s in src)
            v = acc.get(ne, 0) + (c if sign > 0 else -c)
            if v:
                acc[ne] = v
            else:
                acc.pop(ne, None)
    pairs = vandermonde_pairs(q, lay.gamma)
    holder = LaurentPoly(lay.spec, acc, _trusted=True)
    return divide_by_differences(holder, pairs).terms


def _placed(f, lay: Layout, which: int, cls):
    pos = lay.first() if which == 1 else lay.second()
    return f.embed(lay.spec, pos).terms


def product_terms(q: Quiver, g1, g2, t1: Dict, t2: Dict, *, cls=MultiPoly, f1=None, f2=None,
                  max_degree=None, extra: Optional[Dict] = None) -> Tuple[Layout, Dict]:
    """Core product on raw operands ``f1`` (grade ``g1``) and ``f2`` (grade ``g2``).

    ``extra`` is an optional additional factor (terms over the combined spec,
    identity placement) multiplied into every shuffle term.  When
    ``max_degree`` is given, only output degrees below it are computed.
    """
    lay = Layout(tuple(g1), tuple(g2))
    spec = lay.spec
    vdeg = len(vandermonde_pairs(q, lay.gamma))
    cut = None if max_degree is None else max_degree + vdeg
    block = _mul_terms(_placed(f1, lay, 1, cls), _placed(f2, lay, 2, cls), cut)
    if extra is not None:
        block = _mul_terms(block, extra, cut)
    for b, a, e in kernel_factors(q, lay):
        block = _mul_terms(block, _linear_power(spec, b, a, e, cls, cut), cut)
    return lay, shuffle_sum(q, lay, block)


def _check_pair(f1, f2):
    if f1.quiver != f2.quiver:
        raise QuiverMismatchError("operands belong to different quivers")


def coha_mul(f1: CohaElem, f2: CohaElem) -> CohaElem:
    """Shuffle product ``f1 . f2`` in grade ``g1 + g2``."""
    _check_pair(f1, f2)
    q = f1.quiver
    lay, terms = product_terms(q, f1.gamma, f2.gamma, None, None, f1=f1.poly, f2=f2.poly)
    return CohaElem(q, lay.gamma, MultiPoly(lay.spec, terms, _trusted=True))


def product_order(q: Quiver, g1, g2, n1, n2) -> float:
    """Order to which a product of operands known to orders ``n1, n2`` is determined."""
    n = min(n1, n2)
    if n == INF:
        return INF
    return max(0, n - max(0, euler_form(q, g1, g2)))


def _series_operand(f):
    if isinstance(f, CohaSeriesElem):
        return f.series.to_poly(), f.order
    if isinstance(f, CohaElem):
        return f.poly, INF
    raise TypeError(f"unsupported operand {type(f).__name__}")


def coha_mul_series(f1, f2, extra_fn: Optional[Callable[[Layout, int], Dict]] = None) -> CohaSeriesElem:
    """Product in the completed algebra.

    The result is known below ``min(N1, N2) - max(0, chi(g1, g2))``: when the
    Euler form is positive the kernel lowers degrees, so high-order input
    terms reach low output degrees.  Polynomial operands count as exact.
    """
    _check_pair(f1, f2)
    q = f1.quiver
    p1, n1 = _series_operand(f1)
    p2, n2 = _series_operand(f2)
    out = product_order(q, f1.gamma, f2.gamma, n1, n2)
    if out == INF:
        raise ValueError("coha_mul_series needs at least one series operand")
    out = int(out)
    lay = Layout(f1.gamma, f2.gamma)
    extra = None
    if extra_fn is not None:
        vdeg = len(vandermonde_pairs(q, lay.gamma))
        extra = extra_fn(lay, out + vdeg)
    lay, terms = product_terms(q, f1.gamma, f2.gamma, None, None, f1=p1, f2=p2, max_degree=out, extra=extra)
    return CohaSeriesElem(q, lay.gamma, TruncSeries(lay.spec, terms, order=out))


# ---------------------------------------------------------------------------
# gradings and signs


@dataclass(frozen=True)
class Bidegree:
    gamma: Tuple[int, ...]
    l: int

    def __add__(self, other: "Bidegree") -> "Bidegree":
        return Bidegree(add(self.gamma, other.gamma), self.l + other.l)


def bidegree(f: CohaElem) -> Bidegree:
    if f.poly.is_zero():
        raise PreconditionError("the zero element has no bidegree")
    if not f.poly.is_homogeneous():
        raise PreconditionError("bidegree needs a homogeneous element")
    k = f.poly.degree()
    return Bidegree(f.gamma, 2 * k + euler_form(f.quiver, f.gamma, f.gamma))


def star_mul(f1: CohaElem, f2: CohaElem, psi=None) -> CohaElem:
    """``f1 * f2 = (-1)^{psi(g1, g2)} f1 . f2``; ``psi`` defaults to the ordered-basis choice."""
    _check_pair(f1, f2)
    q = f1.quiver
    m = psi_standard_matrix(q) if psi is None else check_psi(q, psi)
    return coha_mul(f1, f2).scale(form_value(m, f1.gamma, f2.gamma))


def star_iso_delta(alpha, f: CohaElem) -> CohaElem:
    """``a_g -> (-1)^{delta(g)} a_g``, intertwining the products of ``psi`` and ``psi + alpha``."""
    return f.scale(delta_fn(alpha, f.gamma))


# ---------------------------------------------------------------------------
# indecomposables


PRIM_DIMS_MAX_VARS = 6
PRIM_DIMS_MAX_DEGREE = 16


def _grades_upto(gmax: Sequence[int]) -> List[Tuple[int, ...]]:
    return [tuple(g) for g in itertools.product(*(range(m + 1) for m in gmax))]


def sym_basis(gamma: Sequence[int], degree: int) -> List[MultiPoly]:
    spec = VarSpec(tuple(gamma))
    if degree < 0:
        return []
    return [monomial_symmetric(spec, k) for k in sym_keys(spec, degree)]


def primitive_dims(q: Quiver, gamma_max, l_max: int, psi=None) -> Dict[Tuple[Tuple[int, ...], int], int]:
    """``dim H_{g,l}`` minus the rank of star products of positive-grade pieces.

    Returns a table keyed by ``(gamma, l)`` for every ``gamma <= gamma_max``
    and every ``l <= l_max`` with ``H_{gamma,l}`` possibly nonzero.
    """
    q.require_symmetric()
    gmax = q.check_grade(gamma_max)
    if sum(gmax) > PRIM_DIMS_MAX_VARS:
        raise ResourceError(f"gamma_max {gmax} exceeds {PRIM_DIMS_MAX_VARS} total variables")
    table = {}
    for g in _grades_upto(gmax):
        chi = euler_form(q, g, g)
        if not any(g):
            if l_max >= 0:
                table[(g, 0)] = 1
            continue
        for l in range(chi, l_max + 1):
            if (l - chi) % 2:
                continue
            k = (l - chi) // 2
            if k > PRIM_DIMS_MAX_DEGREE:
                raise ResourceError(f"polynomial degree {k} exceeds {PRIM_DIMS_MAX_DEGREE}")
            cols = sym_keys(VarSpec(g), k)
            rows = []
            for g1 in _grades_upto(g):
                g2 = tuple(a - b for a, b in zip(g, g1))
                if not any(g1) or not any(g2):
                    continue
                shift = euler_form(q, g1, g2)
                total = k + shift
                for k1 in range(0, total + 1):
                    k2 = total - k1
                    for b1 in sym_basis(g1, k1):
                        for b2 in sym_basis(g2, k2):
                            prod = star_mul(CohaElem(q, g1, b1), CohaElem(q, g2, b2), psi)
                            rows.append(sym_coordinates(prod.poly))
            table[(g, l)] = len(cols) - linalg.rank(rows, cols)
    return table
