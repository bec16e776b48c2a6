"""Almost contact 3-structures with Hermitian-Norden metrics.

A triple of almost contact structures ``(phi_a, xi_a, eta_a)`` on a metric
Lie algebra, numbered ``a = 1, 2, 3`` with metric characters fixed to
``(+1, -1, -1)``: the first structure is metric-compatible in the
Hermitian way, the other two in the Norden (B-metric) way.  The triple
interacts through the quaternionic-like composition laws checked by
``validate_ac3``.  Appending one flat time-like direction produces an
almost hypercomplex frame with the matching Hermitian-Norden metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ShapeError, ValidationError
from .linalg import Matrix, Vector, signature
from .liealg import LieAlgebra, MetricLieAlgebra
from .rational import ONE, ZERO
from .reporting import Report
from .tensor import Tensor, covector

EPSILONS = (1, -1, -1)


def epsilon_symbol(a: int, b: int, c: int) -> int:
    """Totally antisymmetric symbol on {1, 2, 3}."""
    if {a, b, c} != {1, 2, 3}:
        return 0
    return 1 if (a, b, c) in ((1, 2, 3), (2, 3, 1), (3, 1, 2)) else -1


@dataclass(frozen=True)
class AlmostContactStructure:
    """One almost contact structure: endomorphism, Reeb vector, contact form."""

    phi: Matrix
    xi: Vector
    eta: Tensor
    epsilon: int

    def __post_init__(self):
        n = self.phi.rows
        if self.phi.cols != n or len(self.xi) != n:
            raise ShapeError("structure tensor dimensions disagree")
        if (self.eta.contra, self.eta.arity, self.eta.dim) != (0, 1, n):
            raise ShapeError("eta must be a one-form of matching dimension")
        if self.epsilon not in (1, -1):
            raise ShapeError("epsilon must be +1 or -1")

    @property
    def dim(self) -> int:
        return self.phi.rows


@dataclass(frozen=True, eq=False)
class HN3Manifold:
    """Metric Lie algebra carrying an almost contact 3-structure.

    The constructor enforces shapes and the fixed character pattern
    ``(+1, -1, -1)``; the geometric identities themselves are checked by
    the ``validate_*`` functions, which report every violated component.
    """

    mla: MetricLieAlgebra
    structures: tuple[AlmostContactStructure, ...]

    def __post_init__(self):
        if len(self.structures) != 3:
            raise ValidationError("exactly three structures required")
        if any(s.dim != self.mla.dim for s in self.structures):
            raise ShapeError("structure dimensions disagree with the algebra")
        if tuple(s.epsilon for s in self.structures) != EPSILONS:
            raise ValidationError("metric characters must be (+1, -1, -1)")

    @property
    def dim(self) -> int:
        return self.mla.dim

    @property
    def metric(self) -> Matrix:
        return self.mla.metric

    def structure(self, alpha: int) -> AlmostContactStructure:
        return self.structures[alpha - 1]

    def phi(self, alpha: int) -> Matrix:
        return self.structure(alpha).phi

    def xi(self, alpha: int) -> Vector:
        return self.structure(alpha).xi

    def eta(self, alpha: int) -> Tensor:
        return self.structure(alpha).eta

    def eps(self, alpha: int) -> int:
        return self.structure(alpha).epsilon


def validate_ac3(h: HN3Manifold) -> Report:
    """Composition laws of the structure triple, all pairs, all components.

    Checked for every ordered pair (a, b) with e = epsilon_symbol(a, b, c):
    ``phi_a phi_b = -delta_ab I + xi_a (x) eta_b + e phi_c``,
    ``phi_a xi_b = e xi_c``, ``eta_a . phi_b = e eta_c``,
    ``eta_a(xi_b) = delta_ab``.
    """
    report = Report("almost contact 3-structure")
    n = h.dim
    if n % 4 != 3:
        report.warnings.append(
            f"dimension {n} is not of the form 4m+3; the frame cannot split into "
            "three contact distributions of equal rank"
        )
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            c = ({1, 2, 3} - {a, b}).pop() if a != b else 0
            e = epsilon_symbol(a, b, c) if a != b else 0
            lhs = h.phi(a) @ h.phi(b)
            rhs = Matrix.outer(h.xi(a), [h.eta(b)[j] for j in range(n)])
            if a == b:
                rhs = rhs - Matrix.identity(n)
            else:
                rhs = rhs + h.phi(c) * e
            for i in range(n):
                for j in range(n):
                    report.require(
                        f"phi{a}.phi{b} composition", (a, b, i + 1, j + 1),
                        lhs[i, j], rhs[i, j],
                    )
            vec_lhs = h.phi(a).apply(h.xi(b))
            vec_rhs = h.xi(c) * e if a != b else Vector.zero(n)
            for i in range(n):
                report.require(
                    f"phi{a}.xi{b}", (a, b, i + 1), vec_lhs[i], vec_rhs[i]
                )
            for j in range(n):
                form_lhs = sum(
                    (h.eta(a)[m] * h.phi(b)[m, j] for m in range(n)), ZERO
                )
                form_rhs = h.eta(c)[j] * e if a != b else ZERO
                report.require(
                    f"eta{a}.phi{b}", (a, b, j + 1), form_lhs, form_rhs
                )
            pairing = sum((h.eta(a)[m] * h.xi(b)[m] for m in range(n)), ZERO)
            report.require(
                f"eta{a}(xi{b})", (a, b), pairing, ONE if a == b else ZERO
            )
    return report


def validate_hn_metric(h: HN3Manifold) -> Report:
    """Metric compatibility of Hermitian-Norden type for each structure.

    ``g(phi_a x, phi_a y) = eps_a g(x, y) + eta_a(x) eta_a(y)`` together
    with its consequences ``eta_a = -eps_a (xi_a . g)`` and
    ``g(xi_a, xi_a) = -eps_a``.
    """
    report = Report("Hermitian-Norden metric compatibility")
    g = h.metric
    n = h.dim
    for a in (1, 2, 3):
        phi, xi, eta, eps = h.phi(a), h.xi(a), h.eta(a), h.eps(a)
        gphi = phi.transpose() @ g @ phi
        for i in range(n):
            for j in range(n):
                report.require(
                    f"g(phi{a}.,phi{a}.) compatibility", (a, i + 1, j + 1),
                    gphi[i, j], eps * g[i, j] + eta[i] * eta[j],
                )
        gxi = g.apply(xi)
        for i in range(n):
            report.require(f"eta{a} duality", (a, i + 1), eta[i], -eps * gxi[i])
        norm = sum((xi[i] * gxi[i] for i in range(n)), ZERO)
        report.require(f"xi{a} square norm", (a,), norm, -eps)
    sig = signature(g) if g.is_symmetric() else None
    if sig is not None:
        report.findings["metric_signature"] = f"({sig[0]},{sig[1]},{sig[2]})"
    return report


@dataclass(frozen=True, eq=False)
class ProductExtension:
    """The algebra extended by one flat central time-like direction.

    The new frame vector sits LAST (index dim+1); each structure becomes
    an almost complex operator ``J_a`` mixing its Reeb direction with the
    new one, and the extended metric is the original one with a ``-1``
    block appended.
    """

    base: HN3Manifold
    mla: MetricLieAlgebra
    j_ops: tuple[Matrix, Matrix, Matrix]

    @property
    def dim(self) -> int:
        return self.mla.dim

    @cached_property
    def metric_signature(self) -> tuple[int, int, int]:
        return signature(self.mla.metric)


def build_product(h: HN3Manifold, validate: bool = True) -> ProductExtension:
    """Extend by the flat direction; refuses an invalid base unless told not to."""
    if validate:
        for rep in (validate_ac3(h), validate_hn_metric(h)):
            if not rep.passed:
                first = rep.violations[0].render()
                raise ValidationError(
                    f"base fails {rep.check}: {first} "
                    f"({len(rep.violations)} violations in total)"
                )
    n = h.dim
    ext_g = Matrix(
        [
            [h.metric[i, j] if i < n and j < n else ZERO for j in range(n + 1)]
            for i in range(n)
        ]
        + [[ZERO] * n + [-ONE]]
    )
    old = h.mla.algebra.bracket
    ext_bracket = Tensor.build(
        1, 2, n + 1,
        lambda i, j, k: old[i, j, k] if i < n and j < n and k < n else ZERO,
    )
    ext_mla = MetricLieAlgebra(LieAlgebra(n + 1, ext_bracket), ext_g)
    js = []
    for a in (1, 2, 3):
        phi, xi, eta = h.phi(a), h.xi(a), h.eta(a)
        rows = [
            [phi[i, j] if j < n else -xi[i] for j in range(n + 1)] for i in range(n)
        ]
        rows.append([eta[j] for j in range(n)] + [ZERO])
        js.append(Matrix(rows))
    return ProductExtension(h, ext_mla, tuple(js))


def validate_hypercomplex_hn(p: ProductExtension) -> Report:
    """Almost hypercomplex frame checks on the extension.

    ``J_a^2 = -I``, the quaternionic products ``J_a J_b = e J_c`` for
    ``a != b``, and metric compatibility ``G(J_a X, J_a Y) = eps_a G(X, Y)``
    (Hermitian for a = 1, Norden for a = 2, 3).
    """
    report = Report("hypercomplex Hermitian-Norden extension")
    n = p.dim
    g = p.mla.metric
    minus_id = -Matrix.identity(n)
    for a in (1, 2, 3):
        j = p.j_ops[a - 1]
        sq = j @ j
        for r in range(n):
            for c in range(n):
                report.require(f"J{a} squares to -I", (a, r + 1, c + 1), sq[r, c], minus_id[r, c])
        comp = j.transpose() @ g @ j
        eps = EPSILONS[a - 1]
        for r in range(n):
            for c in range(n):
                report.require(
                    f"G(J{a}.,J{a}.) compatibility", (a, r + 1, c + 1),
                    comp[r, c], eps * g[r, c],
                )
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            if a == b:
                continue
            c = ({1, 2, 3} - {a, b}).pop()
            e = epsilon_symbol(a, b, c)
            prod = p.j_ops[a - 1] @ p.j_ops[b - 1]
            target = p.j_ops[c - 1] * e
            for r in range(n):
                for col in range(n):
                    report.require(
                        f"J{a}J{b} = {'+' if e > 0 else '-'}J{c}",
                        (a, b, r + 1, col + 1),
                        prod[r, col], target[r, col],
                    )
    report.findings["extension_signature"] = "({},{},{})".format(*p.metric_signature)
    return report
