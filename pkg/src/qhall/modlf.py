"""Large ideals and cyclic locally finite modules over the CoHA.

A presentation fixes, for each grade in a finite window, a cutoff ``n`` and a
few symmetric generators.  The ideal in grade ``gamma`` is

    I_gamma = span{ p * m : p a generator, m a monomial symmetric function,
                    deg(p * m) < n_gamma } + H_gamma^{>= n_gamma},

so only multiples that stay entirely below the cutoff are used.  The quotient ``H_gamma / I_gamma`` is spanned by monomial symmetric
functions of degree ``< n_gamma``.  Quotients are computed by row reduction
with high-degree columns first, so normal forms prefer low-degree
representatives.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import linalg
from .coha import CohaElem, CohaSeriesElem, coha_mul, coha_mul_series, product_order
from .kha import KhaElem
from .literal import format_grade, parse_poly
from .quiver import DimensionError, Quiver, add, dimvec, euler_form
from .symfun import MultiPoly, VarSpec, monomial_symmetric, sym_coordinates, sym_keys
from .twist import Report, TwistContext, b_tilde_apply, h_tilde, margin

Key = Tuple[int, ...]


class GradeRangeError(ValueError):
    """A grade falls outside the module's window."""


class IllDefinedActionError(ValueError):
    """The presentation is not closed under products, so actions are not well defined."""


class InsufficientOrderError(ValueError):
    """The truncation order does not reach the cutoff of the target grade."""


@dataclass(frozen=True)
class GradeBlock:
    gamma: Tuple[int, ...]
    n: int
    generators: Tuple[MultiPoly, ...] = ()


@dataclass(frozen=True)
class LargeIdealPresentation:
    quiver: Quiver
    blocks: Tuple[GradeBlock, ...]

    def __post_init__(self):
        seen = set()
        for b in self.blocks:
            g = self.quiver.check_grade(b.gamma)
            if g in seen:
                raise ValueError(f"grade {g} declared twice")
            seen.add(g)
            if b.n < 0:
                raise ValueError(f"negative cutoff in grade {g}")
            for p in b.generators:
                if p.spec.gamma != g:
                    raise DimensionError(f"generator {p} does not live in grade {g}")
                if not p.is_symmetric():
                    raise ValueError(f"generator {p} in grade {g} is not symmetric")

    @property
    def grades(self) -> List[Tuple[int, ...]]:
        return sorted(b.gamma for b in self.blocks)

    def block(self, gamma) -> GradeBlock:
        g = dimvec(gamma)
        for b in self.blocks:
            if b.gamma == g:
                return b
        raise GradeRangeError(f"grade {g} is outside the declared window {self.grades}")

    # serialization ----------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "quiver": self.quiver.to_dict(),
            "blocks": [
                {"gamma": list(b.gamma), "n": b.n, "generators": [p.to_str() for p in b.generators]}
                for b in sorted(self.blocks, key=lambda b: b.gamma)
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)

    @classmethod
    def from_dict(cls, doc: dict, quiver: Optional[Quiver] = None) -> "LargeIdealPresentation":
        q = quiver if quiver is not None else Quiver.from_dict(doc["quiver"])
        if quiver is not None and "quiver" in doc and Quiver.from_dict(doc["quiver"]) != quiver:
            raise ValueError("ideal document was written for a different quiver")
        blocks = []
        for b in doc["blocks"]:
            g = q.check_grade(b["gamma"])
            gens = tuple(parse_poly(s, g, q.vertex_count)[0] for s in b.get("generators", []))
            blocks.append(GradeBlock(g, int(b["n"]), gens))
        return cls(q, tuple(blocks))

    @classmethod
    def loads(cls, text: str, quiver: Optional[Quiver] = None) -> "LargeIdealPresentation":
        return cls.from_dict(json.loads(text), quiver)


def _columns(gamma, n: int) -> List[Key]:
    """Monomial symmetric keys of degree ``< n``, highest degree first."""
    spec = VarSpec(gamma)
    cols = []
    for d in range(n - 1, -1, -1):
        cols.extend(sym_keys(spec, d))
    return cols


def _low(p, n: int) -> Dict[Key, object]:
    return {k: c for k, c in sym_coordinates(p).items() if sum(k) < n}


@dataclass(frozen=True)
class _Quotient:
    gamma: Tuple[int, ...]
    n: int
    rows: Tuple[Dict[Key, object], ...]
    pivots: Tuple[Key, ...]
    basis: Tuple[Key, ...]

    def reduce(self, p) -> Dict[Key, object]:
        v = _low(p, self.n)
        for r, c in zip(self.rows, self.pivots):
            a = v.get(c)
            if a:
                for k, x in r.items():
                    nv = v.get(k, 0) - a * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return {k: v[k] for k in self.basis if v.get(k)}


def _quotient(block: GradeBlock) -> _Quotient:
    g, n = block.gamma, block.n
    spec = VarSpec(g)
    cols = _columns(g, n)
    gens = []
    for p in block.generators:
        for d in range(0, n - p.degree()):
            for k in sym_keys(spec, d):
                gens.append(_low(p * monomial_symmetric(spec, k), n))
    rows, pivots = linalg.rref(gens, cols)
    piv = set(pivots)
    basis = tuple(sorted((c for c in cols if c not in piv), key=lambda k: (sum(k), k)))
    return _Quotient(g, n, tuple(rows), tuple(pivots), basis)


@dataclass(frozen=True)
class ModElem:
    """Element of a cyclic module: coordinates on the quotient basis of one grade."""

    gamma: Tuple[int, ...]
    coords: Tuple[Tuple[Key, object], ...]

    def as_dict(self) -> Dict[Key, object]:
        return dict(self.coords)

    def is_zero(self) -> bool:
        return not self.coords


def _elem(gamma, coords: Dict[Key, object]) -> ModElem:
    return ModElem(tuple(gamma), tuple(sorted((k, c) for k, c in coords.items() if c)))


class CyclicModule:
    """``M = H / I`` over a finite grade window, generated by the class of ``1``."""

    def __init__(self, ideal: LargeIdealPresentation, check: bool = True):
        self.ideal = ideal
        self.quiver = ideal.quiver
        self._q = {b.gamma: _quotient(b) for b in ideal.blocks}
        self.report = is_graded_ideal(ideal, _quotients=self._q) if check else None

    @property
    def grades(self) -> List[Tuple[int, ...]]:
        return self.ideal.grades

    def _quot(self, gamma) -> _Quotient:
        g = dimvec(gamma)
        if g not in self._q:
            raise GradeRangeError(f"grade {g} is outside the declared window {self.grades}")
        return self._q[g]

    def quotient_basis(self, gamma) -> List[MultiPoly]:
        qq = self._quot(gamma)
        spec = VarSpec(qq.gamma)
        return [monomial_symmetric(spec, k) for k in qq.basis]

    def dim(self, gamma) -> int:
        return len(self._quot(gamma).basis)

    def reduce(self, f: Union[CohaElem, CohaSeriesElem, MultiPoly]) -> ModElem:
        p = f.poly if isinstance(f, CohaElem) else f.series if isinstance(f, CohaSeriesElem) else f
        qq = self._quot(p.spec.gamma)
        return _elem(qq.gamma, qq.reduce(p))

    def lift(self, m: ModElem) -> CohaElem:
        spec = VarSpec(m.gamma)
        p = MultiPoly.zero(spec)
        for k, c in m.coords:
            p = p + monomial_symmetric(spec, k).scale(c)
        return CohaElem(self.quiver, m.gamma, p)

    def generator(self) -> ModElem:
        return self.reduce(CohaElem.one(self.quiver))

    def element(self, f: CohaElem) -> ModElem:
        return self.reduce(f)

    def _require_ideal(self):
        if self.report is not None and not self.report.ok:
            bad = self.report.failures[0]
            raise IllDefinedActionError(f"presentation is not a graded ideal: {bad.name}: {bad.witness}")

    def _target(self, d, g) -> _Quotient:
        return self._quot(add(d, g))

    # actions ----------------------------------------------------------------
    def act_coha(self, f: Union[CohaElem, CohaSeriesElem], m: ModElem) -> ModElem:
        """``f . [h] = [f h]``."""
        self._require_ideal()
        tq = self._target(f.gamma, m.gamma)
        lift = self.lift(m)
        if isinstance(f, CohaElem):
            return _elem(tq.gamma, tq.reduce(coha_mul(f, lift).poly))
        prod = coha_mul_series(f, lift)
        if prod.order < tq.n:
            raise InsufficientOrderError(f"product known below degree {prod.order}, cutoff is {tq.n}")
        return _elem(tq.gamma, tq.reduce(prod.series))

    def act_circ(self, ctx: TwistContext, f: CohaSeriesElem, m: ModElem) -> ModElem:
        """``f o [h] = [(b~^{delta}_{gamma}(x') f) h]`` with ``delta, gamma`` the grades of ``f, h``."""
        self._require_ideal()
        tq = self._target(f.gamma, m.gamma)
        prod = coha_mul_series(b_tilde_apply(ctx, m.gamma, f), self.lift(m))
        if prod.order < tq.n:
            raise InsufficientOrderError(f"product known below degree {prod.order}, cutoff is {tq.n}")
        return _elem(tq.gamma, tq.reduce(prod.series))

    def act_kha(self, ctx: TwistContext, f: KhaElem, m: ModElem) -> ModElem:
        """``f . [h] = h_tilde(f) o [h]``."""
        tq = self._target(f.gamma, m.gamma)
        if ctx.order < tq.n:
            raise InsufficientOrderError(f"truncation order {ctx.order} is below the cutoff {tq.n} of grade {tq.gamma}")
        big = ctx.order + margin(self.quiver, f.gamma, m.gamma)
        return self.act_circ(ctx, h_tilde(ctx, f, big), m)

    def format(self, m: ModElem) -> str:
        return f"{self.lift(m).poly.to_str()} @{format_grade(m.gamma)}"


def is_graded_ideal(ideal: LargeIdealPresentation, bound=None, _quotients=None) -> Report:
    """Exhaustive closure check ``H_delta I_gamma <= I_{delta+gamma}`` inside the window.

    Only products whose degree can fall below the target cutoff are formed:
    the product of degrees ``d1, d2`` has degree ``d1 + d2 - chi(delta, gamma)``.
    For symmetric quivers the right-sided closure ``I_gamma H_delta`` is checked
    too and both verdicts are reported.  ``bound`` optionally restricts the
    grades ``delta`` of the acting elements.
    """
    q = ideal.quiver
    quots = _quotients or {b.gamma: _quotient(b) for b in ideal.blocks}
    window = set(quots)
    rep = Report("graded ideal closure")
    sides = ["left", "right"] if q.is_symmetric else ["left"]
    verdict = {}
    for side in sides:
        ok_side = True
        for g in sorted(window):
            src = quots[g]
            for t in sorted(window):
                d = tuple(a - b for a, b in zip(t, g))
                if any(x < 0 for x in d):
                    continue
                if bound is not None and any(x > y for x, y in zip(d, dimvec(bound))):
                    continue
                tq = quots[t]
                chi = euler_form(q, d, g) if side == "left" else euler_form(q, g, d)
                limit = tq.n + chi
                ok, wit = _closure(q, d, g, src, tq, limit, side)
                ok_side &= ok
                rep.add(f"{side} H_{d} I_{g} in I_{t}", ok, wit)
        verdict[side] = ok_side
    if len(sides) == 2:
        rep.add("left and right closure agree", verdict["left"] == verdict["right"],
                f"left={verdict['left']} right={verdict['right']}")
    return rep


def _ideal_spanning(q: Quiver, src: _Quotient, limit: int):
    """Elements of ``I_gamma`` whose products can land below the target cutoff."""
    spec = VarSpec(src.gamma)
    for r in src.rows:
        p = MultiPoly.zero(spec)
        for k, c in r.items():
            p = p + monomial_symmetric(spec, k).scale(c)
        yield p
    for dd in range(src.n, max(limit, src.n)):
        for k in sym_keys(spec, dd):
            yield monomial_symmetric(spec, k)


def _closure(q, d, g, src: _Quotient, tq: _Quotient, limit: int, side: str):
    dspec = VarSpec(d)
    for h in _ideal_spanning(q, src, limit):
        low = min(sum(e) for e in h.terms)
        for e in range(0, max(limit - low, 0)):
            for k in sym_keys(dspec, e):
                f = CohaElem(q, d, monomial_symmetric(dspec, k))
                hh = CohaElem(q, g, h)
                prod = coha_mul(f, hh) if side == "left" else coha_mul(hh, f)
                r = tq.reduce(prod.poly)
                if r:
                    return False, f"f={f.poly} h={h} product={prod.poly} has nonzero class"
    return True, ""


# ---------------------------------------------------------------------------
# fixtures


def _window(q: Quiver, cutoffs: Dict, gens: Optional[Dict] = None) -> LargeIdealPresentation:
    gens = gens or {}
    blocks = []
    for g, n in sorted(cutoffs.items()):
        g = dimvec(g)
        ps = tuple(parse_poly(s, g, q.vertex_count)[0] for s in gens.get(g, []))
        blocks.append(GradeBlock(g, n, ps))
    return LargeIdealPresentation(q, tuple(blocks))


def one_loop_fixture(max_grade: int = 3) -> LargeIdealPresentation:
    """One vertex with one loop, cutoff 1 in every grade.

    Models a framed moduli space that is an affine space: each graded piece
    of the module is one-dimensional, spanned by the class of ``1``.
    """
    return _window(Quiver.one_vertex(1), {(k,): 1 for k in range(max_grade + 1)})


def synthetic_exterior_ideal() -> LargeIdealPresentation:
    """One vertex without loops, grades 0..2 with cutoffs 1, 3, 2."""
    return _window(Quiver.one_vertex(0), {(0,): 1, (1,): 3, (2,): 2})


def synthetic_two_vertex_ideal() -> LargeIdealPresentation:
    """Two vertices joined by one arrow each way; a linear generator in grade (1,1)."""
    q = Quiver(((0, 1), (1, 0)))
    cut = {(0, 0): 1, (1, 0): 2, (0, 1): 2, (1, 1): 2}
    return _window(q, cut, {(1, 1): ["x[0,1] - x[1,1]"]})


def constant_cutoff(q: Quiver, n: int, max_grade: Sequence[int]) -> LargeIdealPresentation:
    import itertools

    grades = itertools.product(*(range(m + 1) for m in dimvec(max_grade)))
    return _window(q, {tuple(g): n for g in grades})
