import pytest
from hypothesis import given, strategies as st

from qhall.quiver import (
    DimensionError, PreconditionError, Quiver, SymmetryRequiredError, beta, check_psi, delta_fn,
    epsilon, euler_form, l_weight, l_weights, mu_sign, psi_standard, psi_standard_matrix,
)


def quivers(symmetric=False, max_n=3, max_a=3):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        a = [[draw(st.integers(0, max_a)) for _ in range(n)] for _ in range(n)]
        if symmetric:
            for i in range(n):
                for j in range(i):
                    a[i][j] = a[j][i]
        return Quiver(tuple(tuple(r) for r in a))
    return build()


def grade_for(q, lo=0, hi=4):
    return st.lists(st.integers(lo, hi), min_size=q.vertex_count, max_size=q.vertex_count).map(tuple)


def test_euler_form_examples():
    assert euler_form(Quiver.one_vertex(3), (2,), (5,)) == -20
    assert euler_form(Quiver(((0, 2), (2, 0))), (1, 1), (1, 1)) == -2
    assert euler_form(Quiver(((1, 2), (0, 1))), (0, 0), (3, 1)) == 0


def test_euler_form_length_mismatch():
    with pytest.raises(DimensionError):
        euler_form(Quiver.one_vertex(1), (1, 1), (1,))


def test_epsilon_examples():
    assert epsilon(Quiver.one_vertex(0), (1,)) == -1
    assert epsilon(Quiver.one_vertex(0), (0,)) == 1
    assert epsilon(Quiver.one_vertex(2), (3,)) == -1


def test_beta_examples():
    q = Quiver.one_vertex(0)
    assert beta(q, (1,), (1,)) == 1
    assert beta(q, (0,), (3,)) == 1


def test_beta_rejects_nonsymmetric():
    with pytest.raises(SymmetryRequiredError):
        beta(Quiver(((0, 1), (0, 0))), (1, 0), (0, 1))


def test_l_weight_examples():
    for m in range(4):
        assert l_weight(Quiver.one_vertex(m), 0, (1,)) == 1 - m
    assert l_weights(Quiver.one_vertex(2), (0,)) == [0]
    assert l_weight(Quiver(((1, 1), (1, 1))), 0, (2, 3)) == -3


def test_mu_sign_examples():
    assert mu_sign(Quiver.one_vertex(0), (0,), (3,)) == 1
    assert mu_sign(Quiver.one_vertex(0), (1,), (1,)) == -1
    assert mu_sign(Quiver.one_vertex(1), (1,), (1,)) == 1


def test_psi_standard_diagonal_even():
    q = Quiver(((1, 2, 0), (2, 0, 1), (0, 1, 3)))
    for i in range(3):
        e = tuple(int(k == i) for k in range(3))
        assert psi_standard(q, None, e, e) == 1


def test_delta_basis_and_zero():
    alpha = [[1, 0], [0, 1]]
    assert delta_fn(alpha, (0, 0)) == 1
    assert delta_fn(alpha, (1, 0)) == 1
    assert delta_fn(alpha, (0, 1)) == 1


def test_delta_rejects_nonsymmetric():
    with pytest.raises(PreconditionError):
        delta_fn([[0, 1], [0, 0]], (1, 1))


def test_check_psi_rejects_bad_form():
    q = Quiver.one_vertex(0)
    q2 = Quiver(((0, 2), (2, 0)))
    with pytest.raises(PreconditionError):
        check_psi(q2, [[0, 0], [0, 0]])
    assert check_psi(q, [[1]]) is not None


def test_quiver_json_roundtrip():
    q = Quiver(((1, 2), (2, 0)))
    assert Quiver.loads(q.dumps()) == q


@given(st.data())
def test_euler_form_bilinear(data):
    q = data.draw(quivers())
    a, b, c = (data.draw(grade_for(q)) for _ in range(3))
    ab = tuple(x + y for x, y in zip(a, b))
    assert euler_form(q, ab, c) == euler_form(q, a, c) + euler_form(q, b, c)
    assert euler_form(q, c, ab) == euler_form(q, c, a) + euler_form(q, c, b)


@given(st.data())
def test_symmetric_quiver_gives_symmetric_form(data):
    q = data.draw(quivers(symmetric=True))
    a, b = data.draw(grade_for(q)), data.draw(grade_for(q))
    assert euler_form(q, a, b) == euler_form(q, b, a)
    assert beta(q, a, a) == 1


@given(st.data())
def test_psi_standard_refines_beta(data):
    q = data.draw(quivers(symmetric=True))
    a, b = data.draw(grade_for(q)), data.draw(grade_for(q))
    order = data.draw(st.permutations(range(q.vertex_count)))
    m = psi_standard_matrix(q, order)
    check_psi(q, m)
    assert psi_standard(q, order, a, b) * psi_standard(q, order, b, a) == beta(q, a, b)


@given(st.data())
def test_delta_refines_alpha(data):
    n = data.draw(st.integers(1, 3))
    alpha = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            alpha[i][j] = alpha[j][i] = data.draw(st.integers(0, 1))
    g = data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    h = data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    gh = [x + y for x, y in zip(g, h)]
    par = sum(alpha[i][j] * g[i] * h[j] for i in range(n) for j in range(n)) % 2
    assert delta_fn(alpha, gh) * delta_fn(alpha, g) * delta_fn(alpha, h) == (-1) ** par


@given(st.data())
def test_mu_sign_biadditive(data):
    q = data.draw(quivers())
    t1, t2, g = (data.draw(grade_for(q)) for _ in range(3))
    t12 = tuple(x + y for x, y in zip(t1, t2))
    assert mu_sign(q, t12, g) == mu_sign(q, t1, g) * mu_sign(q, t2, g)
    g2 = data.draw(grade_for(q))
    gg = tuple(x + y for x, y in zip(g, g2))
    assert mu_sign(q, t1, gg) == mu_sign(q, t1, g) * mu_sign(q, t1, g2)


@given(st.data())
def test_l_weights_linear(data):
    q = data.draw(quivers())
    t1, t2 = data.draw(grade_for(q, -3, 3)), data.draw(grade_for(q, -3, 3))
    t12 = tuple(x + y for x, y in zip(t1, t2))
    assert l_weights(q, t12) == [x + y for x, y in zip(l_weights(q, t1), l_weights(q, t2))]
