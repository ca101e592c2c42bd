"""Quivers, dimension vectors, the Euler form and the Z/2 sign calculus.

Signs are returned multiplicatively as ``+1`` / ``-1``.  A Z/2-valued
bilinear form is represented by an ``n x n`` matrix of 0/1 entries,
``form(g1, g2) = g1^T M g2 mod 2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

DimVector = Tuple[int, ...]
Z2Form = Tuple[Tuple[int, ...], ...]


class DimensionError(ValueError):
    """A dimension vector does not match the quiver."""


class SymmetryRequiredError(ValueError):
    """An operation defined only for symmetric quivers got a non-symmetric one."""

    def __init__(self, msg: str, pair: Optional[Tuple[int, int]] = None):
        super().__init__(msg)
        self.pair = pair


class PreconditionError(ValueError):
    """Input violates a documented precondition."""


def dimvec(g) -> DimVector:
    if isinstance(g, int):
        return (g,)
    return tuple(int(x) for x in g)


def add(g1: Sequence[int], g2: Sequence[int]) -> DimVector:
    return tuple(a + b for a, b in zip(g1, g2))


def is_nonnegative(g: Sequence[int]) -> bool:
    return all(x >= 0 for x in g)


def basis_vector(n: int, i: int) -> DimVector:
    return tuple(1 if k == i else 0 for k in range(n))


@dataclass(frozen=True)
class Quiver:
    """``arrows[i][j]`` is the number of arrows from vertex ``i`` to ``j``."""

    arrows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.arrows)
        n = len(rows)
        if n == 0:
            raise ValueError("a quiver needs at least one vertex")
        if any(len(r) != n for r in rows):
            raise ValueError("arrow matrix must be square")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("arrow counts must be non-negative")
        object.__setattr__(self, "arrows", rows)

    @classmethod
    def one_vertex(cls, loops: int) -> "Quiver":
        return cls(((loops,),))

    @property
    def vertex_count(self) -> int:
        return len(self.arrows)

    @property
    def is_symmetric(self) -> bool:
        return self.asymmetric_pair() is None

    def asymmetric_pair(self) -> Optional[Tuple[int, int]]:
        n = self.vertex_count
        for i in range(n):
            for j in range(i + 1, n):
                if self.arrows[i][j] != self.arrows[j][i]:
                    return (i, j)
        return None

    def require_symmetric(self) -> None:
        pair = self.asymmetric_pair()
        if pair is not None:
            i, j = pair
            raise SymmetryRequiredError(
                f"quiver is not symmetric: a[{i}][{j}]={self.arrows[i][j]} != a[{j}][{i}]={self.arrows[j][i]}",
                pair,
            )

    def check(self, g: Sequence[int]) -> DimVector:
        g = dimvec(g)
        if len(g) != self.vertex_count:
            raise DimensionError(f"dimension vector {g} has length {len(g)}, quiver has {self.vertex_count} vertices")
        return g

    def check_grade(self, g: Sequence[int]) -> DimVector:
        g = self.check(g)
        if not is_nonnegative(g):
            raise DimensionError(f"grade {g} must be non-negative")
        return g

    def zero(self) -> DimVector:
        return (0,) * self.vertex_count

    # serialization ----------------------------------------------------------
    def to_dict(self) -> dict:
        return {"vertices": self.vertex_count, "arrows": [list(r) for r in self.arrows]}

    @classmethod
    def from_dict(cls, doc: dict) -> "Quiver":
        try:
            n = int(doc["vertices"])
            rows = doc["arrows"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"quiver document needs 'vertices' and 'arrows': {exc}") from None
        if len(rows) != n:
            raise ValueError(f"'arrows' has {len(rows)} rows, expected {n}")
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def loads(cls, text: str) -> "Quiver":
        return cls.from_dict(json.loads(text))

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def euler_form(q: Quiver, g1, g2) -> int:
    g1, g2 = q.check(g1), q.check(g2)
    n = q.vertex_count
    diag = sum(g1[i] * g2[i] for i in range(n))
    arr = sum(q.arrows[i][j] * g1[i] * g2[j] for i in range(n) for j in range(n))
    return diag - arr


def _sign(parity: int) -> int:
    return -1 if parity % 2 else 1


def epsilon(q: Quiver, g) -> int:
    return _sign(euler_form(q, g, g))


def beta(q: Quiver, g1, g2) -> int:
    q.require_symmetric()
    par = euler_form(q, g1, g2) + (euler_form(q, g1, g1) % 2) * (euler_form(q, g2, g2) % 2)
    return _sign(par)


def beta_matrix(q: Quiver) -> Z2Form:
    n = q.vertex_count
    return tuple(
        tuple(0 if beta(q, basis_vector(n, i), basis_vector(n, j)) == 1 else 1 for j in range(n))
        for i in range(n)
    )


def default_order(q: Quiver) -> Tuple[int, ...]:
    return tuple(range(q.vertex_count))


def check_order(q: Quiver, vertex_order: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if vertex_order is None:
        return default_order(q)
    vo = tuple(int(v) for v in vertex_order)
    if sorted(vo) != list(range(q.vertex_count)):
        raise PreconditionError(f"vertex order {vo} is not a permutation of the vertices")
    return vo


def psi_standard_matrix(q: Quiver, vertex_order: Optional[Sequence[int]] = None) -> Z2Form:
    """``psi(e_i, e_j) = beta(e_i, e_j)`` when ``i`` comes after ``j``, else 0."""
    q.require_symmetric()
    vo = check_order(q, vertex_order)
    rank = {v: r for r, v in enumerate(vo)}
    b = beta_matrix(q)
    n = q.vertex_count
    return tuple(tuple(b[i][j] if rank[i] > rank[j] else 0 for j in range(n)) for i in range(n))


def form_value(m: Z2Form, g1: Sequence[int], g2: Sequence[int]) -> int:
    """Multiplicative value ``(-1)^{g1^T m g2}``."""
    n = len(m)
    return _sign(sum(g1[i] * m[i][j] * g2[j] for i in range(n) for j in range(n)))


def psi_standard(q: Quiver, vertex_order, g1, g2) -> int:
    g1, g2 = q.check(g1), q.check(g2)
    return form_value(psi_standard_matrix(q, vertex_order), g1, g2)


def as_form(m, n: int) -> Z2Form:
    rows = tuple(tuple(int(x) % 2 for x in r) for r in m)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionError(f"bilinear form must be {n}x{n}")
    return rows


def is_symmetric_form(m: Z2Form) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(n))


def check_psi(q: Quiver, psi) -> Z2Form:
    """Validate ``psi(g1,g2) + psi(g2,g1) = beta(g1,g2)`` on the basis."""
    q.require_symmetric()
    m = as_form(psi, q.vertex_count)
    b = beta_matrix(q)
    n = q.vertex_count
    for i in range(n):
        for j in range(n):
            if (m[i][j] + m[j][i]) % 2 != b[i][j]:
                raise PreconditionError(f"psi fails psi(e_{i},e_{j}) + psi(e_{j},e_{i}) = beta(e_{i},e_{j})")
    return m


def delta_fn(alpha, g) -> int:
    """Quadratic refinement of a symmetric Z/2 form.

    ``delta(e_{i_1} + ... + e_{i_n})`` sums ``alpha(e_{i_s}, e_{i_t})`` over
    ``s < t``, so that ``alpha(g, g') = delta(g + g') + delta(g) + delta(g')``
    and ``delta(0) = delta(e_i) = 0``.
    """
    m = as_form(alpha, len(alpha))
    if not is_symmetric_form(m):
        raise PreconditionError("delta_fn needs a symmetric bilinear form")
    g = dimvec(g)
    if len(g) != len(m):
        raise DimensionError("dimension vector does not match the form")
    n = len(m)
    par = sum(m[i][j] * g[i] * g[j] for i in range(n) for j in range(i + 1, n))
    par += sum(m[i][i] * (g[i] * (g[i] - 1) // 2) for i in range(n))
    return _sign(par)


def l_weight(q: Quiver, i: int, tau) -> int:
    tau = q.check(tau)
    return tau[i] - sum(q.arrows[i][j] * tau[j] for j in range(q.vertex_count))


def l_weights(q: Quiver, tau) -> List[int]:
    return [l_weight(q, i, tau) for i in range(q.vertex_count)]


def mu_sign(q: Quiver, tau, g) -> int:
    tau, g = q.check(tau), q.check(g)
    n = q.vertex_count
    par = sum(g[i] * tau[i] for i in range(n))
    par += sum(q.arrows[i][j] * g[i] * tau[j] for i in range(n) for j in range(n))
    return _sign(par)
