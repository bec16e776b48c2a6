"""Left-invariant geometry of metric Lie algebras.

Everything lives on a fixed frame ``e_1 .. e_n``.  Structure constants,
the metric, and all derived tensors are constant, so covariant and Lie
derivatives reduce to finite exact contractions; the directional terms of
the usual formulas vanish identically and are not coded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import ShapeError
from .linalg import Matrix, Vector
from .rational import HALF, ZERO, as_scalar
from .reporting import Report
from .tensor import Tensor, lower, metric_tensor
from . import tensor as tz


@dataclass(frozen=True)
class LieAlgebra:
    """Bracket of a finite-dimensional real Lie algebra in a fixed frame.

    ``bracket`` is the (1,2) tensor of structure constants:
    ``[e_i, e_j] = sum_k bracket[i, j, k] e_k``.  The constructor does not
    check antisymmetry or Jacobi; ``validate_lie_algebra`` reports on both.
    """

    dim: int
    bracket: Tensor

    def __post_init__(self):
        if (self.bracket.contra, self.bracket.arity) != (1, 2):
            raise ShapeError("structure constants form a (1,2) tensor")
        if self.bracket.dim != self.dim:
            raise ShapeError("structure constant dimension mismatch")

    @classmethod
    def from_nonzero(cls, dim: int, entries: dict[tuple[int, int, int], Fraction | int | str]) -> LieAlgebra:
        """Build from sparse 1-based entries ``{(i, j, k): c^k_ij}``.

        Only listed entries are set; in particular the (j, i) partner of a
        listed bracket is NOT filled in automatically.
        """
        dense = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), value in entries.items():
            for index in (i, j, k):
                if not 1 <= index <= dim:
                    raise ShapeError(f"bracket index {index} out of range 1..{dim}")
            dense[i - 1][j - 1][k - 1] = as_scalar(value)
        return cls(dim, Tensor.build(1, 2, dim, lambda i, j, k: dense[i][j][k]))

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebra:
        return cls(dim, Tensor.zeros(1, 2, dim))

    def bracket_vectors(self, x: Vector, y: Vector) -> Vector:
        out = [ZERO] * self.dim
        for (i, j, k), value in self.bracket.nonzero():
            out[k] += value * x[i] * y[j]
        return Vector(out)


def validate_lie_algebra(alg: LieAlgebra) -> Report:
    """Report antisymmetry and Jacobi violations, one line per failed tuple."""
    report = Report("lie algebra axioms")
    c = alg.bracket
    n = alg.dim
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                report.require(
                    "antisymmetry", (i + 1, j + 1, k + 1), c[i, j, k], -c[j, i, k]
                )
    # Jacobi totals are sums of products of two structure constants, so
    # only tuples touched by two nonzero entries can fail; every other
    # total is identically zero and needs no entry in the report.
    by_inner: dict[int, list] = {}
    for (m, l, k), w in c.nonzero():
        by_inner.setdefault(m, []).append((l, k, w))
    totals: dict[tuple[int, int, int, int], Fraction] = {}
    for (i, j, m), v in c.nonzero():
        for l, k, w in by_inner.get(m, ()):
            p = v * w
            for key in ((i, j, l, k), (l, i, j, k), (j, l, i, k)):
                totals[key] = totals.get(key, ZERO) + p
    for (i, j, l, k), total in sorted(totals.items()):
        report.require("jacobi", (i + 1, j + 1, l + 1, k + 1), total, ZERO)
    return report


@dataclass(frozen=True)
class Connection:
    """Coefficients of a left-invariant linear connection.

    ``gamma`` is a (1,2) tensor: ``D_{e_i} e_j = sum_k gamma[i, j, k] e_k``.
    """

    gamma: Tensor

    def __post_init__(self):
        if (self.gamma.contra, self.gamma.arity) != (1, 2):
            raise ShapeError("connection coefficients form a (1,2) tensor")

    @property
    def dim(self) -> int:
        return self.gamma.dim


@dataclass(frozen=True, eq=False)
class MetricLieAlgebra:
    """Lie algebra with a (pseudo-)metric on the frame.

    Treated as immutable; the Levi-Civita connection, its symmetric
    braces, and the inverse metric are computed once and cached.
    """

    algebra: LieAlgebra
    metric: Matrix

    def __post_init__(self):
        if self.metric.rows != self.metric.cols or self.metric.rows != self.algebra.dim:
            raise ShapeError("metric dimension mismatch")

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def metric_inverse(self) -> Matrix:
        return self.metric.inverse()

    @cached_property
    def metric_as_tensor(self) -> Tensor:
        return metric_tensor(self.metric)

    @cached_property
    def levi_civita(self) -> Connection:
        """Unique torsion-free metric connection, from the Koszul formula.

        With all fields left-invariant the formula collapses to
        ``2 g(D_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y)``.
        """
        n = self.dim
        g = self.metric
        c = self.algebra.bracket
        cg = [
            [
                [
                    sum((c[a, b, m] * g[m, z] for m in range(n)), ZERO)
                    for z in range(n)
                ]
                for b in range(n)
            ]
            for a in range(n)
        ]
        ginv = self.metric_inverse

        def fn(i, j, k):
            return sum(
                (
                    HALF * (cg[i][j][l] - cg[j][l][i] + cg[l][i][j]) * ginv[l, k]
                    for l in range(n)
                ),
                ZERO,
            )

        return Connection(Tensor.build(1, 2, n, fn))

    @cached_property
    def braces(self) -> Tensor:
        """Symmetrized Levi-Civita derivative ``{x, y} = D_x y + D_y x``."""
        gamma = self.levi_civita.gamma
        return gamma + tz.permute_args(gamma, (1, 0))


def validate_metric(mla: MetricLieAlgebra) -> Report:
    """Symmetry and nondegeneracy of the frame metric."""
    report = Report("metric")
    g = mla.metric
    n = mla.dim
    for i in range(n):
        for j in range(i + 1, n):
            report.require("symmetry", (i + 1, j + 1), g[i, j], g[j, i])
    if g.is_symmetric():
        report.require("nondegeneracy (rank = dim)", (), g.rank(), n)
    return report


def covariant_derivative(conn: Connection, t: Tensor) -> Tensor:
    """Covariant derivative of a constant tensor; the direction slot comes FIRST.

    For a (0,s) tensor only the argument corrections survive:
    ``(D_x t)(y..) = -sum_j t(y_1, .., D_x y_j, .., y_s)``.
    A (1,s) tensor additionally gets the derivative of its output vector.
    """
    n = t.dim
    if conn.dim != n:
        raise ShapeError("connection dimension mismatch")
    gamma = conn.gamma

    if t.contra == 0:

        def fn(x, *args):
            total = ZERO
            for j, yj in enumerate(args):
                for m in range(n):
                    coeff = gamma[x, yj, m]
                    if coeff != 0:
                        total -= coeff * t[args[:j] + (m,) + args[j + 1:]]
            return total

        return Tensor.build(0, t.arity + 1, n, fn)

    def fn(x, *rest):
        *args, k = rest
        args = tuple(args)
        total = ZERO
        for m in range(n):
            coeff = gamma[x, m, k]
            if coeff != 0:
                total += coeff * t[args + (m,)]
        for j, yj in enumerate(args):
            for m in range(n):
                coeff = gamma[x, yj, m]
                if coeff != 0:
                    total -= coeff * t[args[:j] + (m,) + args[j + 1:] + (k,)]
        return total

    return Tensor.build(1, t.arity + 1, n, fn)


def covariant_derivative_vector(conn: Connection, v: Vector) -> Tensor:
    """Derivative of a constant vector field, as a (1,1) tensor ``out[x, k]``."""
    n = conn.dim
    if len(v) != n:
        raise ShapeError("vector dimension mismatch")
    gamma = conn.gamma
    return Tensor.build(
        1, 1, n, lambda x, k: sum((v[m] * gamma[x, m, k] for m in range(n)), ZERO)
    )


def connection_torsion(conn: Connection, alg: LieAlgebra) -> Tensor:
    """Torsion ``T(x, y) = D_x y - D_y x - [x, y]`` as a (1,2) tensor."""
    gamma = conn.gamma
    return gamma - tz.permute_args(gamma, (1, 0)) - alg.bracket


def lie_derivative_metric(mla: MetricLieAlgebra, xi: Vector) -> Tensor:
    """Lie derivative of the metric: ``g(D_x xi, y) + g(x, D_y xi)``."""
    dxi = covariant_derivative_vector(mla.levi_civita, xi)
    low = lower(dxi, mla.metric)  # (0,2): g(D_x xi, y)
    return low + tz.permute_args(low, (1, 0))


def lie_derivative_covector(alg: LieAlgebra, xi: Vector, eta: Tensor) -> Tensor:
    """Lie derivative of a constant one-form: ``(L_xi eta)(x) = -eta([xi, x])``."""
    if eta.contra != 0 or eta.arity != 1:
        raise ShapeError("need a one-form")
    c = alg.bracket
    n = alg.dim

    def fn(x):
        total = ZERO
        for a in range(n):
            if xi[a] == 0:
                continue
            for k in range(n):
                total -= xi[a] * c[a, x, k] * eta[k]
        return total

    return Tensor.build(0, 1, n, fn)
