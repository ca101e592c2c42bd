"""Exact sparse polynomials, Laurent polynomials and truncated power series.

Every element lives over a :class:`VarSpec`, which declares one group of
variables per quiver vertex.  Terms are stored as a dict mapping a dense
exponent tuple (vertex-major, then slot index) to a rational coefficient.
Coefficients are Python ``int`` or :class:`fractions.Fraction`; integer
inputs stay integers as long as no division is involved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from operator import add
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from gmpy2 import mpq, mpz

Exps = Tuple[int, ...]
Terms = Dict[Exps, object]


class SpecMismatchError(ValueError):
    """Operands are defined over different variable specs (or orders)."""


class DivisibilityError(ArithmeticError):
    """An exact division left a nonzero remainder."""


class NotInvertibleError(ArithmeticError):
    """A series with zero constant term was inverted."""


def as_rational(c):
    if isinstance(c, (int, Fraction)):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


@dataclass(frozen=True)
class VarSpec:
    """Variable groups ``x_{i,1..gamma^i}``, one group per vertex."""

    gamma: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(g) for g in self.gamma))
        if any(g < 0 for g in self.gamma):
            raise ValueError(f"negative group size in {self.gamma}")

    @property
    def nvars(self) -> int:
        return sum(self.gamma)

    @property
    def offsets(self) -> Tuple[int, ...]:
        out, acc = [], 0
        for g in self.gamma:
            out.append(acc)
            acc += g
        return tuple(out)

    def index(self, i: int, a: int) -> int:
        """Flat index of variable ``(i, a)``; ``a`` is 0-based here."""
        if not 0 <= a < self.gamma[i]:
            raise IndexError(f"slot {a} out of range for vertex {i} (size {self.gamma[i]})")
        return self.offsets[i] + a

    def groups(self) -> List[range]:
        return [range(o, o + g) for o, g in zip(self.offsets, self.gamma)]

    def vertex_of(self) -> List[int]:
        out = []
        for i, g in enumerate(self.gamma):
            out.extend([i] * g)
        return out

    def labels(self) -> List[Tuple[int, int]]:
        """``(vertex, 1-based slot)`` for each flat variable."""
        return [(i, a + 1) for i, g in enumerate(self.gamma) for a in range(g)]


def _zero_exps(n: int) -> Exps:
    return (0,) * n


def _add_into(acc: Terms, e: Exps, c) -> None:
    v = acc.get(e, 0) + c
    if v:
        acc[e] = v
    elif e in acc:
        del acc[e]


def _to_mpq(terms: Terms) -> Dict:
    return {e: mpq(c.numerator, c.denominator) if type(c) is Fraction else mpz(c) for e, c in terms.items()}


def _from_mpq(terms: Dict) -> Terms:
    out: Terms = {}
    for e, v in terms.items():
        if v:
            if type(v) is mpz or v.denominator == 1:
                out[e] = int(v) if type(v) is mpz else int(v.numerator)
            else:
                out[e] = Fraction(int(v.numerator), int(v.denominator))
    return out


def _mul_terms(a: Terms, b: Terms, max_degree: Optional[int] = None) -> Terms:
    """Product of two term maps, dropping total degree ``>= max_degree``.

    Coefficients run through gmpy2 rationals inside the double loop.
    """
    if not a or not b:
        return {}
    a, b = _to_mpq(a), _to_mpq(b)
    out: Dict = {}
    get = out.get
    if max_degree is None:
        bl = list(b.items())
        for ea, ca in a.items():
            for eb, cb in bl:
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
        return _from_mpq(out)
    bd: Dict[int, List[Tuple[Exps, object]]] = {}
    for eb, cb in b.items():
        bd.setdefault(sum(eb), []).append((eb, cb))
    bdegs = sorted(bd)
    for ea, ca in a.items():
        room = max_degree - sum(ea)
        for d in bdegs:
            if d >= room:
                break
            for eb, cb in bd[d]:
                e = tuple(map(add, ea, eb))
                out[e] = get(e, 0) + ca * cb
    return _from_mpq(out)


def _fmt_coeff(c) -> str:
    return str(c)


def qdiv(a, b):
    """Exact quotient of two rationals, staying in ``int`` when possible."""
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return Fraction(a) / b


class _Sparse:
    """Shared machinery for the three element types."""

    __slots__ = ("spec", "terms")
    prefix = "x"
    allow_negative = False

    def __init__(self, spec: VarSpec, terms: Optional[Dict] = None, *, _trusted: bool = False):
        if not isinstance(spec, VarSpec):
            spec = VarSpec(tuple(spec))
        self.spec = spec
        if _trusted:
            self.terms = terms if terms is not None else {}
            return
        n = spec.nvars
        clean: Terms = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise SpecMismatchError(f"exponent {e} does not match {n} variables")
            if not self.allow_negative and any(x < 0 for x in e):
                raise ValueError(f"negative exponent {e} in {type(self).__name__}")
            c = as_rational(c)
            if c:
                _add_into(clean, e, c)
        self.terms = clean

    # construction helpers -------------------------------------------------
    @classmethod
    def zero(cls, spec: VarSpec, **kw):
        return cls(spec, {}, **kw)

    @classmethod
    def const(cls, spec: VarSpec, c=1, **kw):
        if not isinstance(spec, VarSpec):
            spec = VarSpec(tuple(spec))
        return cls(spec, {_zero_exps(spec.nvars): c}, **kw)

    @classmethod
    def var(cls, spec: VarSpec, i: int, a: int, power: int = 1, **kw):
        """The variable ``(i, a)`` with 0-based slot ``a``."""
        if not isinstance(spec, VarSpec):
            spec = VarSpec(tuple(spec))
        e = [0] * spec.nvars
        e[spec.index(i, a)] = power
        return cls(spec, {tuple(e): 1}, **kw)

    def _new(self, terms: Terms):
        return type(self)(self.spec, terms, _trusted=True)

    def _like(self, spec: VarSpec, terms: Terms):
        return type(self)(spec, terms, _trusted=True)

    def _check(self, other) -> None:
        if self.spec != other.spec:
            raise SpecMismatchError(f"spec {self.spec.gamma} vs {other.spec.gamma}")

    # basic queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, e: Sequence[int]):
        return self.terms.get(tuple(e), 0)

    def constant_term(self):
        return self.terms.get(_zero_exps(self.spec.nvars), 0)

    def degree(self) -> int:
        """Largest total degree; -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def low_degree(self) -> Optional[int]:
        return min((sum(e) for e in self.terms), default=None)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int):
        return self._new({e: c for e, c in self.terms.items() if sum(e) == d})

    # arithmetic -----------------------------------------------------------
    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, _Sparse):
            other = type(self).const(self.spec, as_rational(other))
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _add_into(out, e, c)
        return self._new(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return self._new({})
        return self._new({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, _Sparse):
            return self.scale(other)
        self._check(other)
        return self._new(_mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self._new({_zero_exps(self.spec.nvars): 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, _Sparse):
            return type(self) is type(other) and self.spec == other.spec and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {_zero_exps(self.spec.nvars): other}
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.spec, frozenset(self.terms.items())))

    # variable manipulation ------------------------------------------------
    def rename(self, src: Sequence[int], spec: Optional[VarSpec] = None):
        """Return the element with new exponent vector ``e'[k] = e[src[k]]``.

        ``src[k] == -1`` marks a new variable that does not occur.
        """
        spec = spec or self.spec
        out: Terms = {}
        for e, c in self.terms.items():
            ne = tuple(e[s] if s >= 0 else 0 for s in src)
            _add_into(out, ne, c)
        return self._like(spec, out)

    def embed(self, spec: VarSpec, positions: Sequence[int]):
        """Place variable ``k`` of ``self`` at flat index ``positions[k]`` of ``spec``."""
        src = [-1] * spec.nvars
        for k, p in enumerate(positions):
            src[p] = k
        return self.rename(src, spec)

    def swap(self, p: int, q: int):
        src = list(range(self.spec.nvars))
        src[p], src[q] = src[q], src[p]
        return self.rename(src)

    def is_symmetric(self) -> bool:
        """Invariance under adjacent transpositions inside each vertex group."""
        for grp in self.spec.groups():
            for p in list(grp)[:-1]:
                if self.swap(p, p + 1).terms != self.terms:
                    return False
        return True

    # printing ---------------------------------------------------------------
    def sorted_terms(self) -> List[Tuple[Exps, object]]:
        """Graded lexicographic order, largest monomial first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        labels = self.spec.labels()
        pieces = []
        for e, c in self.sorted_terms():
            mono = []
            for (i, a), k in zip(labels, e):
                if k == 0:
                    continue
                name = f"{self.prefix}[{i},{a}]"
                mono.append(name if k == 1 else f"{name}^{k}")
            neg = c < 0
            mag = -c if neg else c
            if mono:
                body = "*".join(mono) if mag == 1 else f"{_fmt_coeff(mag)}*" + "*".join(mono)
            else:
                body = _fmt_coeff(mag)
            pieces.append(("-" if neg else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, b in pieces[1:]:
            out += f" {s} {b}"
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"{type(self).__name__}({self.spec.gamma}, {self.to_str()})"


class MultiPoly(_Sparse):
    """Polynomial with non-negative exponents."""

    __slots__ = ()

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.spec, self.terms, order=order)



class LaurentPoly(_Sparse):
    """Laurent polynomial in variables ``z_{i,a}`` (integer exponents)."""

    __slots__ = ()
    prefix = "z"
    allow_negative = True

    def monomial_shift(self) -> Exps:
        """Per-variable minimum exponent (0 for the zero polynomial)."""
        n = self.spec.nvars
        if not self.terms:
            return _zero_exps(n)
        return tuple(min(e[k] for e in self.terms) for k in range(n))

    def times_monomial(self, e: Sequence[int]) -> "LaurentPoly":
        return self._new({tuple(x + y for x, y in zip(k, e)): c for k, c in self.terms.items()})


class TruncSeries(_Sparse):
    """Power series known modulo total degree ``order``.

    All stored monomials have total degree ``< order``.
    """

    __slots__ = ("order",)

    def __init__(self, spec, terms=None, *, order: int, _trusted: bool = False):
        if order < 0:
            raise ValueError("negative truncation order")
        self.order = int(order)
        super().__init__(spec, terms, _trusted=_trusted)
        if not _trusted or any(sum(e) >= self.order for e in self.terms):
            self.terms = {e: c for e, c in self.terms.items() if sum(e) < self.order}

    @classmethod
    def const(cls, spec, c=1, *, order: int):
        if not isinstance(spec, VarSpec):
            spec = VarSpec(tuple(spec))
        return cls(spec, {_zero_exps(spec.nvars): c}, order=order)

    @classmethod
    def zero(cls, spec, *, order: int):
        return cls(spec, {}, order=order)

    @classmethod
    def var(cls, spec, i, a, power=1, *, order: int):
        p = MultiPoly.var(spec, i, a, power)
        return cls(p.spec, p.terms, order=order)

    @classmethod
    def from_poly(cls, p: MultiPoly, order: int) -> "TruncSeries":
        return cls(p.spec, p.terms, order=order)

    def _new(self, terms):
        return TruncSeries(self.spec, terms, order=self.order, _trusted=True)

    def _like(self, spec, terms):
        return TruncSeries(spec, terms, order=self.order, _trusted=True)

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            self._check(other)
            return other
        if isinstance(other, MultiPoly):
            self._check(other)
            return TruncSeries(other.spec, other.terms, order=self.order)
        if isinstance(other, _Sparse):
            raise TypeError(f"cannot combine series with {type(other).__name__}")
        return TruncSeries.const(self.spec, as_rational(other), order=self.order)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.spec, self.terms, order=min(order, self.order))

    def with_order(self, order: int) -> "TruncSeries":
        return self.truncate(order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        out = {e: c for e, c in self.terms.items() if sum(e) < n}
        for e, c in other.terms.items():
            if sum(e) < n:
                _add_into(out, e, c)
        return TruncSeries(self.spec, out, order=n, _trusted=True)

    __radd__ = __add__

    def __mul__(self, other):
        if not isinstance(other, _Sparse):
            return self.scale(other)
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncSeries(self.spec, _mul_terms(self.terms, other.terms, n), order=n, _trusted=True)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.spec == other.spec and self.order == other.order and self.terms == other.terms
        return _Sparse.__eq__(self, other)

    __hash__ = _Sparse.__hash__

    def agrees_with(self, other) -> bool:
        """Equality modulo the smaller of the two truncation orders."""
        other = self._coerce(other)
        n = min(self.order, other.order)
        return self.truncate(n).terms == other.truncate(n).terms

    def to_poly(self) -> MultiPoly:
        return MultiPoly(self.spec, dict(self.terms), _trusted=True)

    def inverse(self) -> "TruncSeries":
        return series_invert(self)

    def __repr__(self):
        return f"TruncSeries({self.spec.gamma}, {self.to_str()} + O({self.order}))"


# ---------------------------------------------------------------------------
# shuffles and division


def shuffles(p: int, q: int) -> List[Tuple[int, ...]]:
    """Positions (0-based, increasing) of the ``p`` primed slots among ``p+q``.

    The remaining slots carry the double-primed block in order.
    """
    if p < 0 or q < 0:
        raise ValueError("negative block size")
    return list(itertools.combinations(range(p + q), p))


def _divide_difference(terms: Terms, b: int, a: int) -> Terms:
    """Exact quotient of ``terms`` by ``x_b - x_a``."""
    if not terms:
        return {}
    buckets: Dict[int, Terms] = {}
    for e, c in terms.items():
        buckets.setdefault(e[b], {})[e] = c
    lo = min(buckets)
    hi = max(buckets)
    quo: Terms = {}
    for k in range(hi, lo, -1):
        bucket = buckets.pop(k, None)
        if not bucket:
            continue
        below = buckets.setdefault(k - 1, {})
        for e, c in bucket.items():
            m = list(e)
            m[b] -= 1
            quo[tuple(m)] = c
            m[a] += 1
            _add_into(below, tuple(m), c)
    if buckets.get(lo):
        raise DivisibilityError(f"not divisible by x{b} - x{a}")
    return quo


def _linear_difference(p: _Sparse) -> Optional[Tuple[int, int]]:
    """Recognise ``x_b - x_a`` and return ``(b, a)``."""
    if len(p.terms) != 2:
        return None
    items = list(p.terms.items())
    idx = []
    for e, c in items:
        if sum(e) != 1 or any(x < 0 for x in e):
            return None
        idx.append((e.index(1), c))
    (i, ci), (j, cj) = idx
    if ci == 1 and cj == -1:
        return (i, j)
    if ci == -1 and cj == 1:
        return (j, i)
    return None


def divide_by_differences(p: _Sparse, pairs: Iterable[Tuple[int, int]]):
    """Divide by the product of ``x_b - x_a`` over ``pairs`` (exactly)."""
    terms = p.terms
    for b, a in pairs:
        terms = _divide_difference(terms, b, a)
    return p._new(terms)


def exact_divide(num: _Sparse, den: _Sparse):
    """Return ``r`` with ``r * den == num``; raise :class:`DivisibilityError` otherwise."""
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lin = _linear_difference(den)
    if lin is not None:
        return num._new(_divide_difference(num.terms, *lin))
    if len(den.terms) == 1:
        (ed, cd), = den.terms.items()
        out = {}
        for e, c in num.terms.items():
            q = tuple(x - y for x, y in zip(e, ed))
            if not num.allow_negative and any(x < 0 for x in q):
                raise DivisibilityError("monomial division failed")
            out[q] = qdiv(c, cd)
        return num._new(out)
    if num.allow_negative:
        # clear negative exponents, divide as polynomials, shift back
        shift = tuple(-min(0, x) for x in num.monomial_shift())
        dshift = tuple(-min(0, x) for x in den.monomial_shift())
        pn = MultiPoly(num.spec, {tuple(x + s for x, s in zip(e, shift)): c for e, c in num.terms.items()}, _trusted=True)
        pd = MultiPoly(den.spec, {tuple(x + s for x, s in zip(e, dshift)): c for e, c in den.terms.items()}, _trusted=True)
        q = exact_divide(pn, pd)
        back = tuple(d - s for d, s in zip(dshift, shift))
        return LaurentPoly(num.spec, {tuple(x + s for x, s in zip(e, back)): c for e, c in q.terms.items()}, _trusted=True)
    key = lambda e: (sum(e), e)
    lead_d = max(den.terms, key=key)
    lead_c = den.terms[lead_d]
    rem = dict(num.terms)
    quo: Terms = {}
    while rem:
        lead = max(rem, key=key)
        shift = tuple(x - y for x, y in zip(lead, lead_d))
        if any(x < 0 for x in shift):
            raise DivisibilityError("nonzero remainder in exact_divide")
        c = qdiv(rem[lead], lead_c)
        quo[shift] = c
        for e, cd in den.terms.items():
            _add_into(rem, tuple(x + y for x, y in zip(e, shift)), -c * cd)
    return num._new(quo)


# ---------------------------------------------------------------------------
# univariate coefficient lists (used to build series in linear forms)


def uni_mul(a: Sequence, b: Sequence, n: int) -> List:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def uni_inv(a: Sequence, n: int) -> List:
    if not a or not a[0]:
        raise NotInvertibleError("zero constant term")
    inv0 = qdiv(1, a[0])
    out = [0] * n
    out[0] = inv0
    for k in range(1, n):
        s = 0
        for j in range(1, min(k, len(a) - 1) + 1):
            s += a[j] * out[k - j]
        out[k] = -s * inv0
    return out


def uni_pow(a: Sequence, k: int, n: int) -> List:
    if k < 0:
        return uni_pow(uni_inv(a, n), -k, n)
    out = [1] + [0] * (n - 1)
    base = list(a[:n]) + [0] * max(0, n - len(a))
    while k:
        if k & 1:
            out = uni_mul(out, base, n)
        k >>= 1
        if k:
            base = uni_mul(base, base, n)
    return out


def exp_coeffs(n: int) -> List:
    return [Fraction(1, factorial(k)) for k in range(n)]


def todd_coeffs(n: int) -> List:
    """Coefficients of ``u / (e^u - 1)`` up to ``u^(n-1)``."""
    return uni_inv([Fraction(1, factorial(k + 1)) for k in range(n)], n)


def bernoulli_numbers(n: int) -> List[Fraction]:
    """``B_0..B_{n-1}`` with ``B_1 = -1/2``."""
    return [c * factorial(k) for k, c in enumerate(todd_coeffs(n))]


# ---------------------------------------------------------------------------
# series built from linear forms


def _linear_data(linear: _Sparse) -> Dict[int, object]:
    coeffs = {}
    for e, c in linear.terms.items():
        d = sum(e)
        if d != 1 or any(x not in (0, 1) for x in e):
            raise ValueError("expected a homogeneous linear form")
        coeffs[e.index(1)] = c
    return coeffs


def compose_linear(coeffs: Sequence, linear: _Sparse, order: int) -> TruncSeries:
    """``sum_k coeffs[k] * linear^k`` truncated at total degree ``order``."""
    spec = linear.spec
    lin = TruncSeries(spec, linear.terms, order=order)
    if linear.terms:
        _linear_data(linear)
    out: Terms = {}
    power = TruncSeries.const(spec, 1, order=order)
    for k in range(order):
        c = coeffs[k] if k < len(coeffs) else 0
        if c:
            for e, v in power.terms.items():
                _add_into(out, e, c * v)
        if k + 1 < order:
            power = power * lin
            if not power.terms:
                break
    return TruncSeries(spec, out, order=order, _trusted=True)


def series_exp(linear: _Sparse, order: int) -> TruncSeries:
    """``exp(linear)`` for a homogeneous linear form with no constant term."""
    return compose_linear(exp_coeffs(order), linear, order)


def todd_factor(u: _Sparse, order: int) -> TruncSeries:
    """``u / (e^u - 1)`` composed with the linear form ``u``."""
    return compose_linear(todd_coeffs(order), u, order)


def series_invert(s: TruncSeries) -> TruncSeries:
    """Two-sided inverse at the stored order (Newton iteration)."""
    c0 = s.constant_term()
    if not c0:
        raise NotInvertibleError("series has zero constant term")
    n = s.order
    inv = TruncSeries.const(s.spec, qdiv(1, c0), order=n)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        st = s.truncate(prec)
        it = TruncSeries(s.spec, inv.terms, order=prec)
        inv = it * (2 - st * it)
    return TruncSeries(s.spec, inv.terms, order=n)


def laurent_to_series(f: LaurentPoly, order: int) -> TruncSeries:
    """Substitute ``z_{i,a} -> exp(x_{i,a})`` and truncate."""
    spec = f.spec
    n = spec.nvars
    out: Terms = {}
    cache: Dict[int, Dict[int, TruncSeries]] = {}

    def var_exp(k: int, v: int) -> TruncSeries:
        per = cache.setdefault(k, {})
        if v not in per:
            e = [0] * n
            e[k] = 1
            lin = MultiPoly(spec, {tuple(e): v}, _trusted=True) if v else MultiPoly.zero(spec)
            per[v] = series_exp(lin, order) if v else TruncSeries.const(spec, 1, order=order)
        return per[v]

    for e, c in f.terms.items():
        term = TruncSeries.const(spec, c, order=order)
        for k, v in enumerate(e):
            if v:
                term = term * var_exp(k, v)
        for ee, cc in term.terms.items():
            _add_into(out, ee, cc)
    return TruncSeries(spec, out, order=order, _trusted=True)


def linear_form(spec: VarSpec, coeffs: Dict[int, object]) -> MultiPoly:
    """Linear form ``sum coeffs[k] * x_k`` over flat indices."""
    terms = {}
    n = spec.nvars
    for k, c in coeffs.items():
        if c:
            e = [0] * n
            e[k] = 1
            terms[tuple(e)] = c
    return MultiPoly(spec, terms)


def difference(spec: VarSpec, b: int, a: int) -> MultiPoly:
    """``x_b - x_a`` over flat indices."""
    return linear_form(spec, {b: 1, a: -1})


# ---------------------------------------------------------------------------
# symmetric monomial bases


def partitions_bounded(d: int, parts: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``d`` into at most ``parts`` parts, padded with zeros."""
    if largest is None:
        largest = d
    if parts == 0:
        if d == 0:
            yield ()
        return
    if d == 0:
        yield (0,) * parts
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions_bounded(d - first, parts - 1, first):
            yield (first,) + rest


def sym_keys(spec: VarSpec, degree: int) -> List[Exps]:
    """Sorted representative exponents of the monomial symmetric basis in ``degree``."""
    keys = []
    gam = spec.gamma

    def rec(i, left, acc):
        if i == len(gam):
            if left == 0:
                keys.append(tuple(acc))
            return
        for d in range(left + 1):
            for lam in partitions_bounded(d, gam[i]):
                rec(i + 1, left - d, acc + list(lam))

    rec(0, degree, [])
    return sorted(keys, reverse=True)


def monomial_symmetric(spec: VarSpec, key: Exps, cls=MultiPoly):
    """Sum of the distinct permutations (within groups) of the monomial ``key``."""
    per_group = []
    for grp in spec.groups():
        part = [key[k] for k in grp]
        per_group.append(sorted(set(itertools.permutations(part))))
    terms = {}
    for combo in itertools.product(*per_group):
        e = tuple(x for blk in combo for x in blk)
        terms[e] = 1
    return cls(spec, terms, _trusted=True)


def sym_key_of(spec: VarSpec, e: Exps) -> Exps:
    out = []
    for grp in spec.groups():
        out.extend(sorted((e[k] for k in grp), reverse=True))
    return tuple(out)


def sym_coordinates(p: _Sparse) -> Dict[Exps, object]:
    """Coefficients on the monomial symmetric basis of a symmetric element."""
    return {e: c for e, c in p.terms.items() if sym_key_of(p.spec, e) == e}
