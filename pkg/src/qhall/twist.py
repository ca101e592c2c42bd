"""Zhang twists of the completed CoHA and the twisted Chern homomorphisms.

For ``tau`` in ``Z^I`` and grade ``gamma`` the twist factor is

    a^gamma_tau = exp(sum_i l_i(tau) * (x_{i,1} + ... + x_{i,gamma^i}))

and ``b~^gamma_tau = (a^gamma_tau)^{-1} * mu(tau, gamma)``.  The twisted
products are ``f1 . f2 = f1 (a^{g2}_{g1}(x'') f2)`` (bullet) and
``f1 o f2 = (b~^{g1}_{g2}(x') f1) f2`` (circ).  Multiplying Chern images by
the unit series ``eta`` (resp. ``eta~``) turns the K-theoretic product into
the bullet (resp. circ) product.

Quotients that are not unit series (``k``, ``K``, ``L``) are kept as
numerator/denominator pairs and every identity between them is checked after
clearing denominators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .coha import CohaSeriesElem, Layout, coha_mul_series, product_order
from .kha import KhaElem, chern, kha_mul
from .quiver import (
    DimensionError,
    Quiver,
    add,
    check_order,
    dimvec,
    euler_form,
    l_weights,
    mu_sign,
)
from .symfun import (
    MultiPoly,
    TruncSeries,
    VarSpec,
    _mul_terms,
    compose_linear,
    difference,
    linear_form,
    series_exp,
    sym_coordinates,
    todd_coeffs,
    uni_pow,
)


@dataclass(frozen=True)
class TwistContext:
    """Symmetric quiver, truncation order and the vertex order used by ``k_gamma``."""

    quiver: Quiver
    order: int
    vertex_order: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        self.quiver.require_symmetric()
        if self.order < 1:
            raise ValueError("truncation order must be at least 1")
        object.__setattr__(self, "vertex_order", check_order(self.quiver, self.vertex_order))

    def rank(self) -> Dict[int, int]:
        return {v: r for r, v in enumerate(self.vertex_order)}


@dataclass(frozen=True)
class TwistFactor:
    gamma: Tuple[int, ...]
    series: TruncSeries
    sign: int = 1

    def value(self) -> TruncSeries:
        return self.series if self.sign == 1 else self.series.scale(-1)

    def __mul__(self, other: "TwistFactor") -> "TwistFactor":
        if self.gamma != other.gamma:
            raise DimensionError(f"grades differ: {self.gamma} vs {other.gamma}")
        return TwistFactor(self.gamma, self.series * other.series, self.sign * other.sign)


# ---------------------------------------------------------------------------
# twist factors


def _group_exp(spec: VarSpec, positions: Sequence[Sequence[int]], weights: Sequence[int], order: int) -> TruncSeries:
    """``exp(sum_i weights[i] * sum_{k in positions[i]} x_k)``."""
    coeffs = {}
    for w, pos in zip(weights, positions):
        for k in pos:
            if w:
                coeffs[k] = w
    return series_exp(linear_form(spec, coeffs), order)


def _vertex_positions(spec: VarSpec) -> List[List[int]]:
    return [list(g) for g in spec.groups()]


def _weights(ctx: TwistContext, tau, corrupt: bool = False) -> List[int]:
    w = l_weights(ctx.quiver, tau)
    if corrupt and any(tau):
        # negative control: an exponent that is not additive in tau
        w = [x + 1 for x in w]
    return w


def a_factor(ctx: TwistContext, tau, gamma, order: Optional[int] = None, corrupt: bool = False) -> TwistFactor:
    """``a^gamma_tau``; a unit series with sign ``+1``."""
    g = ctx.quiver.check_grade(gamma)
    n = ctx.order if order is None else order
    spec = VarSpec(g)
    return TwistFactor(g, _group_exp(spec, _vertex_positions(spec), _weights(ctx, tau, corrupt), n), 1)


def a_tilde_factor(ctx: TwistContext, tau, gamma, order: Optional[int] = None, corrupt: bool = False) -> TwistFactor:
    """``a~^gamma_tau = a^gamma_tau * mu(tau, gamma)``."""
    a = a_factor(ctx, tau, gamma, order, corrupt)
    return TwistFactor(a.gamma, a.series, mu_sign(ctx.quiver, tau, a.gamma))


def b_tilde_factor(ctx: TwistContext, tau, gamma, order: Optional[int] = None) -> TwistFactor:
    """``b~^gamma_tau = (a^gamma_tau)^{-1} * mu(tau, gamma)``."""
    g = ctx.quiver.check_grade(gamma)
    n = ctx.order if order is None else order
    spec = VarSpec(g)
    w = [-x for x in l_weights(ctx.quiver, tau)]
    return TwistFactor(g, _group_exp(spec, _vertex_positions(spec), w, n), mu_sign(ctx.quiver, tau, g))


def _apply(factor: TwistFactor, f: CohaSeriesElem) -> CohaSeriesElem:
    return f.times_series(factor.value())


def sigma_apply(ctx: TwistContext, tau, f: CohaSeriesElem, corrupt: bool = False) -> CohaSeriesElem:
    """``sigma_tau(f) = a^gamma_tau f``."""
    return _apply(a_factor(ctx, tau, f.gamma, f.order, corrupt), f)


def sigma_tilde_apply(ctx: TwistContext, tau, f: CohaSeriesElem, corrupt: bool = False) -> CohaSeriesElem:
    """``sigma~_tau(f) = a~^gamma_tau f``."""
    return _apply(a_tilde_factor(ctx, tau, f.gamma, f.order, corrupt), f)


def b_tilde_apply(ctx: TwistContext, tau, f: CohaSeriesElem) -> CohaSeriesElem:
    return _apply(b_tilde_factor(ctx, tau, f.gamma, f.order), f)


def bullet_mul(ctx: TwistContext, f1: CohaSeriesElem, f2: CohaSeriesElem) -> CohaSeriesElem:
    """``f1 . f2 = f1 (a^{g2}_{g1}(x'') f2)``."""
    return coha_mul_series(f1, sigma_apply(ctx, f1.gamma, f2))


def circ_mul(ctx: TwistContext, f1: CohaSeriesElem, f2: CohaSeriesElem) -> CohaSeriesElem:
    """``f1 o f2 = (b~^{g1}_{g2}(x') f1) f2``."""
    return coha_mul_series(b_tilde_apply(ctx, f2.gamma, f1), f2)


# ---------------------------------------------------------------------------
# reports


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: str = ""

    def line(self) -> str:
        if self.ok:
            return f"PASS {self.name}"
        return f"FAIL {self.name}" + (f"\n  witness: {self.witness}" if self.witness else "")


@dataclass
class Report:
    title: str
    seed: Optional[int] = None
    results: List[CheckResult] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: str = "") -> bool:
        self.results.append(CheckResult(name, bool(ok), "" if ok else witness))
        return ok

    def extend(self, other: "Report") -> None:
        self.results.extend(other.results)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def count(self) -> int:
        return len(self.results)

    @property
    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.ok]

    def lines(self) -> List[str]:
        head = f"# {self.title}" + (f" (seed={self.seed})" if self.seed is not None else "")
        return [head] + [r.line() for r in self.results]

    def __str__(self):
        return "\n".join(self.lines())


def _diff_witness(lhs, rhs) -> str:
    a, b = lhs.series, rhs.series
    n = min(a.order, b.order)
    d = a.truncate(n) - b.truncate(n)
    return f"grade {lhs.gamma}, order {n}, lhs - rhs = {d.to_str()}"


def _agree(lhs: CohaSeriesElem, rhs: CohaSeriesElem) -> bool:
    return lhs.gamma == rhs.gamma and lhs.series.agrees_with(rhs.series)


# ---------------------------------------------------------------------------
# twisting-system checks


def twisting_axiom_check(ctx: TwistContext, taus: Sequence, samples: Sequence[Tuple], corrupt: bool = False,
                         seed: Optional[int] = None) -> Report:
    """Both twisting-system axioms for ``sigma`` and ``sigma~``.

    For every sample ``(x, y, z)`` and every ``s, l`` in ``taus``:

        sigma_l(sigma_s(x) y) = sigma_{s+l}(x) sigma_l(y)
        sigma_l(y sigma_s(z)) = sigma_l(y) sigma_{l+s}(z)

    ``corrupt`` swaps in a deliberately wrong factor (negative control).
    """
    rep = Report("twisting-system axioms", seed)
    fams: List[Tuple[str, Callable]] = [("sigma", sigma_apply), ("sigma~", sigma_tilde_apply)]
    taus = [ctx.quiver.check(t) for t in taus]
    for k, (x, y, z) in enumerate(samples):
        for s in taus:
            for l in taus:
                sl = add(s, l)
                for name, ap in fams:
                    app = lambda t, f: ap(ctx, t, f, corrupt)
                    lhs = app(l, coha_mul_series(app(s, x), y))
                    rhs = coha_mul_series(app(sl, x), app(l, y))
                    rep.add(f"{name} left s={s} l={l} sample={k}", _agree(lhs, rhs), _diff_witness(lhs, rhs))
                    lhs = app(l, coha_mul_series(y, app(s, z)))
                    rhs = coha_mul_series(app(l, y), app(sl, z))
                    rep.add(f"{name} right g={l} s={s} sample={k}", _agree(lhs, rhs), _diff_witness(lhs, rhs))
    return rep


def sigma_group_check(ctx: TwistContext, taus: Sequence, samples: Sequence[Tuple], seed: Optional[int] = None) -> Report:
    """Group law and automorphism property of ``sigma`` and ``sigma~``."""
    rep = Report("sigma group law and automorphism", seed)
    taus = [ctx.quiver.check(t) for t in taus]
    for k, (x, y, _) in enumerate(samples):
        for name, ap in (("sigma", sigma_apply), ("sigma~", sigma_tilde_apply)):
            for s in taus:
                lhs = ap(ctx, s, coha_mul_series(x, y))
                rhs = coha_mul_series(ap(ctx, s, x), ap(ctx, s, y))
                rep.add(f"{name} automorphism tau={s} sample={k}", _agree(lhs, rhs), _diff_witness(lhs, rhs))
                for t in taus:
                    lhs = ap(ctx, s, ap(ctx, t, x))
                    rhs = ap(ctx, add(s, t), x)
                    rep.add(f"{name} group law {s}+{t} sample={k}", _agree(lhs, rhs), _diff_witness(lhs, rhs))
    return rep


def twisted_associativity_check(ctx: TwistContext, samples: Sequence[Tuple], seed: Optional[int] = None) -> Report:
    rep = Report("bullet/circ associativity", seed)
    for k, (x, y, z) in enumerate(samples):
        for name, mul in (("bullet", bullet_mul), ("circ", circ_mul)):
            lhs = mul(ctx, mul(ctx, x, y), z)
            rhs = mul(ctx, x, mul(ctx, y, z))
            rep.add(f"{name} associativity sample={k}", _agree(lhs, rhs), _diff_witness(lhs, rhs))
    return rep


# ---------------------------------------------------------------------------
# k, K, L and eta


@dataclass(frozen=True)
class Ratio:
    """A quotient ``num / den`` kept unreduced."""

    num: object
    den: object


def ordered_pairs(ctx: TwistContext, gamma) -> List[Tuple[int, int, int, int]]:
    """``(p, q, i, j)`` for flat positions ``p < q`` in the lexicographic order on (vertex, slot)."""
    g = ctx.quiver.check_grade(gamma)
    spec = VarSpec(g)
    rank = ctx.rank()
    slots = sorted(((rank[i], a, spec.index(i, a), i) for i in range(len(g)) for a in range(g[i])))
    out = []
    for s in range(len(slots)):
        for t in range(s + 1, len(slots)):
            out.append((slots[s][2], slots[t][2], slots[s][3], slots[t][3]))
    return out


def _gamma_factors(ctx: TwistContext, gamma):
    """Numerator and denominator factor lists ``(b, a, e)`` of ``k_gamma``."""
    a = ctx.quiver.arrows
    num, den = [], []
    for p, q, i, j in ordered_pairs(ctx, gamma):
        if a[i][j]:
            num.append((q, p, a[i][j]))
        if i == j:
            den.append((q, p, 1))
    return num, den


def _cross_factors(q: Quiver, lay: Layout):
    num, den = [], []
    for i, j, pa, pb in lay.cross_pairs():
        if q.arrows[i][j]:
            num.append((pb, pa, q.arrows[i][j]))
        if i == j:
            den.append((pb, pa, 1))
    return num, den


def _exp_var(spec: VarSpec, k: int, c: int, order: int) -> TruncSeries:
    return series_exp(linear_form(spec, {k: c}), order)


def _factor_series(spec: VarSpec, b: int, a: int, kind: str, order: int) -> TruncSeries:
    if kind == "x":
        return difference(spec, b, a).truncate(order)
    if kind == "E":
        return _exp_var(spec, b, 1, order) - _exp_var(spec, a, 1, order)
    if kind == "Et":
        return _exp_var(spec, b, -1, order) - _exp_var(spec, a, -1, order)
    if kind == "L":
        return 1 - series_exp(difference(spec, a, b), order)
    raise ValueError(kind)


def _product(spec: VarSpec, factors, kind: str, order: int) -> TruncSeries:
    out = TruncSeries.const(spec, 1, order=order)
    for b, a, e in factors:
        f = _factor_series(spec, b, a, kind, order)
        for _ in range(e):
            out = out * f
    return out


def _degree(factors) -> int:
    return sum(e for _, _, e in factors)


def k_poly(ctx: TwistContext, gamma) -> Ratio:
    """``k_gamma`` as a pair of polynomials."""
    g = ctx.quiver.check_grade(gamma)
    spec = VarSpec(g)
    num, den = _gamma_factors(ctx, g)
    big = _degree(num) + _degree(den) + 1
    return Ratio(_product(spec, num, "x", big).to_poly(), _product(spec, den, "x", big).to_poly())


def K_series(ctx: TwistContext, gamma, order: Optional[int] = None, tilde: bool = False) -> Ratio:
    """``K_gamma = k_gamma(e^x)`` (or ``K~_gamma(x) = K_gamma(-x)``) as a pair of series."""
    g = ctx.quiver.check_grade(gamma)
    n = ctx.order if order is None else order
    spec = VarSpec(g)
    num, den = _gamma_factors(ctx, g)
    kind = "Et" if tilde else "E"
    return Ratio(_product(spec, num, kind, n), _product(spec, den, kind, n))


def _eta_on(spec: VarSpec, pairs, order: int, tilde: bool) -> TruncSeries:
    """Product over ``(p, q, e)`` of the unit factors of ``eta`` (or ``eta~``)."""
    todd = todd_coeffs(order)
    out = TruncSeries.const(spec, 1, order=order)
    for p, q, e in pairs:
        if e == 0:
            continue
        t = difference(spec, q, p) if not tilde else difference(spec, p, q)
        body = compose_linear(uni_pow(todd, e, order), t, order)
        shift = _exp_var(spec, p, e if tilde else -e, order)
        out = out * body * shift
        if tilde and e % 2:
            out = out.scale(-1)
    return out


def _eta_pairs(ctx: TwistContext, gamma):
    a = ctx.quiver.arrows
    return [(p, q, a[i][j] - (1 if i == j else 0)) for p, q, i, j in ordered_pairs(ctx, gamma)]


def eta(ctx: TwistContext, gamma, order: Optional[int] = None) -> TruncSeries:
    """``eta_gamma = k_gamma / K_gamma``: per ordered pair ``(e^{-x_p} todd(x_q - x_p))^{a_ij - delta_ij}``."""
    g = ctx.quiver.check_grade(gamma)
    n = ctx.order if order is None else order
    return _eta_on(VarSpec(g), _eta_pairs(ctx, g), n, False)


def eta_tilde(ctx: TwistContext, gamma, order: Optional[int] = None) -> TruncSeries:
    """``eta~_gamma = k_gamma(x) / K_gamma(-x)``: per pair ``(-e^{x_p} todd(x_p - x_q))^{a_ij - delta_ij}``.

    The constant term is ``+1`` or ``-1``.
    """
    g = ctx.quiver.check_grade(gamma)
    n = ctx.order if order is None else order
    return _eta_on(VarSpec(g), _eta_pairs(ctx, g), n, True)


def h_sigma(ctx: TwistContext, f: KhaElem, order: Optional[int] = None) -> CohaSeriesElem:
    """``f -> eta_gamma ch(f)``, a homomorphism into the bullet-twisted algebra."""
    n = ctx.order if order is None else order
    return chern(f, n).times_series(eta(ctx, f.gamma, n))


def h_tilde(ctx: TwistContext, f: KhaElem, order: Optional[int] = None) -> CohaSeriesElem:
    """``f -> eta~_gamma ch(f)``, a homomorphism into the circ-twisted algebra."""
    n = ctx.order if order is None else order
    return chern(f, n).times_series(eta_tilde(ctx, f.gamma, n))


# ---------------------------------------------------------------------------
# identity suites


def margin(q: Quiver, g1, g2) -> int:
    """Orders lost by a product of grade ``g1`` with grade ``g2``."""
    return max(0, euler_form(q, g1, g2))


def _eq_series(rep: Report, name: str, lhs: TruncSeries, rhs: TruncSeries) -> bool:
    ok = lhs.agrees_with(rhs)
    wit = "" if ok else f"order {min(lhs.order, rhs.order)}, lhs - rhs = {(lhs - rhs).to_str()}"
    return rep.add(name, ok, wit)


def lemma_manipul_check(ctx: TwistContext, gamma1, gamma2, order: Optional[int] = None) -> Report:
    """The four factor identities behind the twisted Chern homomorphisms.

    With ``k12, K12, L`` for the cross kernels of a product of grades ``g1, g2``:

        eta_{g1+g2} = eta_{g1}(x') eta_{g2}(x'') k12 / K12
        K12 = L / a^{g2}_{g1}(x'')
        eta~_{g1+g2} = eta~_{g1}(x') eta~_{g2}(x'') k12 / K~12
        K~12 = L / b~^{g1}_{g2}(x')

    Each is checked after clearing denominators, at order
    ``N + deg(k12 numerator) + deg(k12 denominator)``.
    """
    q = ctx.quiver
    g1, g2 = q.check_grade(gamma1), q.check_grade(gamma2)
    lay = Layout(g1, g2)
    spec = lay.spec
    g = lay.gamma
    rep = Report(f"factor identities g1={g1} g2={g2}")
    kn_f, kd_f = _cross_factors(q, lay)
    n = ctx.order if order is None else order
    m = n + _degree(kn_f) + _degree(kd_f)

    kn, kd = _product(spec, kn_f, "x", m), _product(spec, kd_f, "x", m)
    Kn, Kd = _product(spec, kn_f, "E", m), _product(spec, kd_f, "E", m)
    Ktn, Ktd = _product(spec, kn_f, "Et", m), _product(spec, kd_f, "Et", m)
    Ln, Ld = _product(spec, kn_f, "L", m), _product(spec, kd_f, "L", m)

    def placed(s: TruncSeries, which: int) -> TruncSeries:
        pos = lay.first() if which == 1 else lay.second()
        return s.embed(spec, pos)

    e12 = eta(ctx, g, m)
    e1, e2 = placed(eta(ctx, g1, m), 1), placed(eta(ctx, g2, m), 2)
    _eq_series(rep, f"eta product g1={g1} g2={g2}", e12 * Kn * kd, e1 * e2 * kn * Kd)

    pos2 = [[lay.p2(i, a) for a in range(g2[i])] for i in range(len(g))]
    a21 = _group_exp(spec, pos2, l_weights(q, g1), m)
    _eq_series(rep, f"K/L relation g1={g1} g2={g2}", Kn * Ld * a21, Ln * Kd)

    et12 = eta_tilde(ctx, g, m)
    et1, et2 = placed(eta_tilde(ctx, g1, m), 1), placed(eta_tilde(ctx, g2, m), 2)
    _eq_series(rep, f"eta~ product g1={g1} g2={g2}", et12 * Ktn * kd, et1 * et2 * kn * Ktd)

    pos1 = [[lay.p1(i, a) for a in range(g1[i])] for i in range(len(g))]
    b12 = _group_exp(spec, pos1, [-w for w in l_weights(q, g2)], m).scale(mu_sign(q, g2, g1))
    _eq_series(rep, f"K~/L relation g1={g1} g2={g2}", Ktn * Ld * b12, Ln * Ktd)

    return rep


def eta_definition_check(ctx: TwistContext, gamma, order: Optional[int] = None) -> Report:
    """``eta_gamma K_gamma = k_gamma`` after clearing denominators."""
    g = ctx.quiver.check_grade(gamma)
    n = ctx.order if order is None else order
    num, den = _gamma_factors(ctx, g)
    m = n + _degree(num) + _degree(den)
    kg = k_poly(ctx, g)
    Kg = K_series(ctx, g, m)
    rep = Report(f"eta definition g={g}")
    _eq_series(rep, f"eta definition g={g}", eta(ctx, g, m) * Kg.num * kg.den.truncate(m),
               kg.num.truncate(m) * Kg.den)
    _eq_series(rep, f"eta~ definition g={g}", eta_tilde(ctx, g, m) * K_series(ctx, g, m, tilde=True).num
               * kg.den.truncate(m), kg.num.truncate(m) * K_series(ctx, g, m, tilde=True).den)
    return rep


def tocheck(ctx: TwistContext, f1: KhaElem, f2: KhaElem, tilde: bool = False) -> Tuple[bool, CohaSeriesElem, CohaSeriesElem]:
    """``h(f1) * h(f2) = h(f1 f2)`` for ``h = h_sigma`` with bullet, or ``h_tilde`` with circ.

    The left side is computed from inputs at order ``N + max(0, chi(g1, g2))``
    so both sides are known through degree ``N - 1``.
    """
    n = ctx.order
    big = n + margin(ctx.quiver, f1.gamma, f2.gamma)
    h = h_tilde if tilde else h_sigma
    mul = circ_mul if tilde else bullet_mul
    lhs = mul(ctx, h(ctx, f1, big), h(ctx, f2, big)).truncate(n)
    rhs = h(ctx, kha_mul(f1, f2), n)
    return lhs.order == n and _agree(lhs, rhs), lhs, rhs


def tocheck_suite(ctx: TwistContext, grade_pairs: Iterable[Tuple], seed: int = 0, per_pair: int = 1) -> Report:
    from .sampling import random_kha

    rng = random.Random(seed)
    rep = Report(f"twisted Chern homomorphisms N={ctx.order}", seed)
    q = ctx.quiver
    for g1, g2 in grade_pairs:
        for k in range(per_pair):
            f1 = random_kha(rng, q, g1)
            f2 = random_kha(rng, q, g2)
            for tilde, name in ((False, "h_sigma bullet"), (True, "h_tilde circ")):
                ok, lhs, rhs = tocheck(ctx, f1, f2, tilde)
                rep.add(f"{name} g1={tuple(g1)} g2={tuple(g2)} sample={k}", ok, _diff_witness(lhs, rhs))
    return rep


def injectivity_check(ctx: TwistContext, gamma, lo: int = -2, hi: int = 2) -> Report:
    """Rank of the truncated images of a spanning set with exponents in ``[lo, hi]``.

    The order is raised to ``(hi - lo) * |gamma| + 1`` when needed, so the
    truncation separates all exponent vectors in the window.
    """
    from .sampling import laurent_keys, monomial_symmetric_laurent

    q = ctx.quiver
    g = q.check_grade(gamma)
    spec = VarSpec(g)
    keys = laurent_keys(spec, lo, hi)
    n = max(ctx.order, (hi - lo) * sum(g) + 1)
    rep = Report(f"injectivity g={g}")
    for name, h in (("h_sigma", h_sigma), ("h_tilde", h_tilde)):
        rows = []
        cols = set()
        for k in keys:
            img = h(ctx, KhaElem(q, g, monomial_symmetric_laurent(spec, k)), n)
            coords = sym_coordinates(img.series)
            rows.append(coords)
            cols.update(coords)
        r = linalg.rank(rows, sorted(cols))
        rep.add(f"{name} injective on {len(keys)} basis elements g={g} N={n}", r == len(keys),
                f"rank {r} < {len(keys)}")
    return rep


def default_catalog() -> List[Tuple[Quiver, List[Tuple[Tuple[int, ...], Tuple[int, ...]]]]]:
    """Quivers and grade pairs used by the verification suites."""
    from .sampling import grades_upto

    out = []
    for m in (0, 2, 3):
        q = Quiver.one_vertex(m)
        gs = grades_upto((2,))
        out.append((q, [(a, b) for a in gs for b in gs]))
    for arrows in (((0, 1), (1, 0)), ((1, 2), (2, 1)), ((2, 1), (1, 0))):
        q = Quiver(arrows)
        gs = grades_upto((1, 1))
        out.append((q, [(a, b) for a in gs for b in gs]))
    return out


def sample_triples(rng: random.Random, q: Quiver, gmax, order: int, count: int) -> List[Tuple]:
    """Random series triples with grades ``<= gmax`` whose total stays ``<= 2 * gmax``."""
    from .sampling import grades_upto, random_series

    grades = grades_upto(gmax)
    cap = [2 * x for x in dimvec(gmax)]
    out = []
    while len(out) < count:
        gs = [rng.choice(grades) for _ in range(3)]
        tot = [sum(c) for c in zip(*gs)]
        if any(t > c for t, c in zip(tot, cap)):
            continue
        out.append(tuple(random_series(rng, q, g, order) for g in gs))
    return out


def default_taus(q: Quiver) -> List[Tuple[int, ...]]:
    n = q.vertex_count
    out = [tuple([0] * n), tuple([1] * n), tuple([-1] + [0] * (n - 1))]
    if n > 1:
        out.append(tuple([0] * (n - 1) + [2]))
    return out


def verification_suite(ctx: TwistContext, gmax, seed: int = 0, triples: int = 3, taus=None) -> Report:
    """Twisting axioms, group law, twisted associativity, factor identities,
    twisted Chern homomorphisms and injectivity for all grades ``<= gmax``."""
    from .sampling import grades_upto

    q = ctx.quiver
    gmax = q.check_grade(gmax)
    rng = random.Random(seed)
    rep = Report(f"twist verification N={ctx.order} grades<={gmax}", seed)
    samples = sample_triples(rng, q, gmax, ctx.order, triples)
    taus = default_taus(q) if taus is None else taus
    rep.extend(twisting_axiom_check(ctx, taus, samples))
    rep.extend(sigma_group_check(ctx, taus, samples))
    rep.extend(twisted_associativity_check(ctx, samples))
    grades = grades_upto(gmax)
    pairs = [(a, b) for a in grades for b in grades]
    for a, b in pairs:
        rep.extend(lemma_manipul_check(ctx, a, b))
    for g in grades:
        rep.extend(eta_definition_check(ctx, g))
    rep.extend(tocheck_suite(ctx, pairs, seed=rng.randrange(1 << 30)))
    for g in grades_upto(gmax, positive=True):
        rep.extend(injectivity_check(ctx, g))
    return rep
