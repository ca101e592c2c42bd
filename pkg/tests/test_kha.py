import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhall.coha import CohaSeriesElem, SymmetryError, coha_mul_series
from qhall.kha import KhaElem, chern, kha_mul, kha_mul_series, unit_coeffs
from qhall.quiver import Quiver
from qhall.sampling import random_kha
from qhall.symfun import LaurentPoly, TruncSeries, VarSpec

LOOP = {m: Quiver.one_vertex(m) for m in range(4)}
TWO = Quiver(((0, 1), (1, 0)))
FAT = Quiver(((1, 2), (2, 1)))


def seeds():
    return st.integers(0, 2**32 - 1)


def test_small_products():
    one1 = KhaElem.const(LOOP[0], (1,))
    assert kha_mul(one1, one1) == KhaElem.const(LOOP[0], (2,), 1)
    one1 = KhaElem.const(LOOP[1], (1,))
    assert kha_mul(one1, one1) == KhaElem.const(LOOP[1], (2,), 2)


def test_unit_law():
    f = random_kha(random.Random(5), LOOP[2], (2,))
    one = KhaElem.one(LOOP[2])
    assert kha_mul(one, f) == f
    assert kha_mul(f, one) == f


def test_symmetry_enforced():
    with pytest.raises(SymmetryError):
        KhaElem(LOOP[0], (2,), LaurentPoly(VarSpec((2,)), {(-1, 0): 1}))


def test_chern_examples():
    q = LOOP[0]
    assert chern(KhaElem.one(q), 4).series == TruncSeries.const(VarSpec((0,)), 1, order=4)
    f = KhaElem.power_sum(q, (2,), 1)
    expected = TruncSeries(VarSpec((2,)), {(0, 0): 2, (1, 0): 1, (0, 1): 1}, order=2)
    assert chern(f, 2).series == expected


def test_unit_series_coefficients():
    # (1 - e^{-t}) / t = 1 - t/2 + t^2/6 - ...
    assert unit_coeffs(4) == [1, Fraction(-1, 2), Fraction(1, 6), Fraction(-1, 24)]


def test_series_products_of_units():
    for n in range(2, 7):
        one = chern(KhaElem.const(LOOP[1], (1,)), n)
        assert kha_mul_series(one, one).series == TruncSeries.const(VarSpec((2,)), 2, order=n)
    one = chern(KhaElem.const(LOOP[0], (1,)), 4)
    assert kha_mul_series(one, one).agrees_with(chern(KhaElem.const(LOOP[0], (2,)), 4))


def test_chern_is_not_multiplicative_for_the_cohomological_product():
    q = LOOP[0]
    a = KhaElem.const(q, (1,))
    for n in range(2, 6):
        lhs = coha_mul_series(chern(a, n), chern(a, n))
        rhs = chern(kha_mul(a, a), lhs.order)
        assert lhs != rhs


def test_series_unit_law():
    q = FAT
    s = chern(random_kha(random.Random(9), q, (1, 1)), 4)
    one = CohaSeriesElem.one(q, 4)
    assert kha_mul_series(one, s) == s
    assert kha_mul_series(s, one) == s


@given(seeds(), st.sampled_from([LOOP[0], LOOP[1], LOOP[2], TWO]))
def test_associativity(seed, q):
    rng = random.Random(seed)
    n = q.vertex_count
    gs = [tuple(rng.randint(0, 2 if n == 1 else 1) for _ in range(n)) for _ in range(3)]
    a, b, c = (random_kha(rng, q, g, terms=2) for g in gs)
    assert kha_mul(kha_mul(a, b), c) == kha_mul(a, kha_mul(b, c))


@given(seeds(), st.sampled_from([LOOP[0], LOOP[1], LOOP[3], TWO, FAT]), st.integers(3, 6))
def test_chern_intertwines_products(seed, q, n):
    rng = random.Random(seed)
    k = q.vertex_count
    g1 = tuple(rng.randint(0, 2 if k == 1 else 1) for _ in range(k))
    g2 = tuple(rng.randint(0, 1) for _ in range(k))
    a, b = random_kha(rng, q, g1, terms=2), random_kha(rng, q, g2, terms=2)
    s = kha_mul_series(chern(a, n), chern(b, n))
    assert s == chern(kha_mul(a, b), s.order)


@given(seeds())
def test_chern_additive(seed):
    rng = random.Random(seed)
    a, b = random_kha(rng, FAT, (1, 1)), random_kha(rng, FAT, (1, 1))
    assert chern(a + b, 4) == chern(a, 4) + chern(b, 4)


@given(seeds())
def test_grade_additive(seed):
    rng = random.Random(seed)
    g1 = (rng.randint(0, 2), rng.randint(0, 1))
    g2 = (rng.randint(0, 1), rng.randint(0, 2))
    p = kha_mul(random_kha(rng, TWO, g1), random_kha(rng, TWO, g2))
    assert p.gamma == (g1[0] + g2[0], g1[1] + g2[1])
    assert p.laurent.is_symmetric()
