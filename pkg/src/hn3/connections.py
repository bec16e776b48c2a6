"""Natural connections with totally skew-symmetric torsion.

A connection D is natural for a structure when it annihilates phi, xi,
eta and the metric.  Requiring its torsion to be a 3-form pins D down
uniquely, but only inside a class of structures cut out by one first
order condition on the fundamental tensor:

* first structure: the four-term reflection identity
  ``F(phi x, y, z) + F(phi y, x, z) + F(x, y, phi z) + F(y, x, phi z) = 0``;
* second and third structures: vanishing cyclic sum of F together with a
  Killing Reeb vector.

Inside the class the torsion has a closed form in F, and
``D = LC + torsion/2`` after raising the last slot.  The coincidence
check asks whether the three structure-wise connections are one and the
same connection, which is exactly the componentwise equality of the
three torsion forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ExistenceError, SymmetryError
from .liealg import Connection, connection_torsion, covariant_derivative, \
    covariant_derivative_vector
from .nijenhuis import (
    associated_nijenhuis,
    exterior_d_eta,
    fundamental_tensor,
    metric_lie_derivative,
    nijenhuis_tensor,
)
from .reporting import Report
from .structures import HN3Manifold
from .tensor import (
    Tensor,
    contract_arg_with_vector,
    covector_times,
    cyclic_sum,
    interior,
    is_three_form,
    lower,
    permute_args,
    precompose,
    raise_last,
    tensor_from_operator,
    times_covector,
    wedge_1_2,
)

HALF = Fraction(1, 2)


def class_condition_alpha1(h: HN3Manifold, fund: Tensor | None = None) -> bool:
    """Whether the first structure admits a natural connection with 3-form torsion."""
    f = fundamental_tensor(h, 1) if fund is None else fund
    phi = h.phi(1)
    a = precompose(f, phi, 0)
    b = precompose(f, phi, 2)
    expr = a + permute_args(a, (1, 0, 2)) + b + permute_args(b, (1, 0, 2))
    return expr.is_zero()


def class_condition_alpha23(h: HN3Manifold, alpha: int, fund: Tensor | None = None) -> bool:
    """Same admissibility for the Norden-type structures: cyclic-free F, Killing Reeb."""
    if alpha not in (2, 3):
        raise ValueError("this condition applies to the second and third structures")
    f = fundamental_tensor(h, alpha) if fund is None else fund
    return cyclic_sum(f).is_zero() and metric_lie_derivative(h, alpha).is_zero()


def in_skew_torsion_class(h: HN3Manifold, alpha: int, fund: Tensor | None = None) -> bool:
    if alpha == 1:
        return class_condition_alpha1(h, fund)
    return class_condition_alpha23(h, alpha, fund)


def torsion_alpha1(
    h: HN3Manifold, fund: Tensor | None = None, force: bool = False
) -> Tensor:
    """Torsion 3-form of the natural connection of the first structure.

    ``T(x,y,z) = F(x,y,phi z) - F(y,x,phi z) - F(phi z,x,y)
    + 2 F(x,phi y,xi) eta(z)``.  Raises unless the class condition holds;
    ``force`` computes the raw expression anyway.
    """
    f = fundamental_tensor(h, 1) if fund is None else fund
    if not force and not class_condition_alpha1(h, f):
        raise ExistenceError(
            "the first structure does not admit a natural connection with "
            "totally skew-symmetric torsion (reflection identity fails)"
        )
    phi, xi, eta = h.phi(1), h.xi(1), h.eta(1)
    b = precompose(f, phi, 2)
    c = permute_args(precompose(f, phi, 0), (2, 0, 1))  # F(phi z, x, y)
    w = contract_arg_with_vector(precompose(f, phi, 1), xi, 2)
    return b - permute_args(b, (1, 0, 2)) - c + times_covector(w, eta) * 2


def torsion_alpha1_via_forms(h: HN3Manifold) -> Tensor:
    """The same torsion assembled from exterior objects.

    ``-eta ^ d eta + d^phi Phi + N - eta ^ (xi -| N)`` with
    ``Phi(x, y) = g(x, phi y)``, ``d Phi = -cyclic_sum(F)`` and
    ``d^phi Phi (x,y,z) = -d Phi (phi x, phi y, phi z)``.  Only meaningful
    where the class condition holds; outside it the interior product of N
    is not antisymmetric and the assembly refuses.
    """
    eta, phi, xi = h.eta(1), h.phi(1), h.xi(1)
    deta = exterior_d_eta(h, 1)
    n_form = nijenhuis_tensor(h, 1)[1]
    dphi_big = -cyclic_sum(fundamental_tensor(h, 1))
    d_phi_phi = -precompose(
        precompose(precompose(dphi_big, phi, 0), phi, 1), phi, 2
    )
    return (
        -wedge_1_2(eta, deta)
        + d_phi_phi
        + n_form
        - wedge_1_2(eta, interior(xi, n_form))
    )


def torsion_alpha23(
    h: HN3Manifold, alpha: int, fund: Tensor | None = None, force: bool = False
) -> Tensor:
    """Torsion 3-form for the Norden-type structures.

    ``T = -1/2 cyclic_sum( F(x,y,phi z) - 3 eta(x) F(y,phi z,xi) )``.
    """
    if alpha not in (2, 3):
        raise ValueError("this torsion applies to the second and third structures")
    f = fundamental_tensor(h, alpha) if fund is None else fund
    if not force and not class_condition_alpha23(h, alpha, f):
        raise ExistenceError(
            f"structure {alpha} does not admit a natural connection with totally "
            "skew-symmetric torsion (cyclic or Killing condition fails)"
        )
    phi, xi, eta = h.phi(alpha), h.xi(alpha), h.eta(alpha)
    u = precompose(f, phi, 2)
    w = contract_arg_with_vector(precompose(f, phi, 1), xi, 2)  # F(y, phi z, xi)
    return cyclic_sum(u - covector_times(eta, w) * 3) * (-HALF)


def structure_torsion(
    h: HN3Manifold, alpha: int, fund: Tensor | None = None, force: bool = False
) -> Tensor:
    if alpha == 1:
        return torsion_alpha1(h, fund, force)
    return torsion_alpha23(h, alpha, fund, force)


@dataclass(frozen=True, eq=False)
class NaturalConnection:
    """A structure-preserving connection together with its 3-form torsion."""

    alpha: int
    connection: Connection
    torsion: Tensor


def natural_connection(
    h: HN3Manifold,
    alpha: int,
    torsion: Tensor | None = None,
    force: bool = False,
) -> NaturalConnection:
    """Build ``D = LC + torsion/2`` and re-derive the torsion as a consistency check."""
    t = structure_torsion(h, alpha, force=force) if torsion is None else torsion
    if not is_three_form(t):
        raise SymmetryError("torsion must be totally skew-symmetric")
    gamma = h.mla.levi_civita.gamma + raise_last(t, h.mla.metric_inverse) * HALF
    conn = Connection(gamma)
    recomputed = lower(connection_torsion(conn, h.mla.algebra), h.metric)
    if recomputed != t:
        raise RuntimeError("torsion round-trip failed; inconsistent metric data")
    return NaturalConnection(alpha, conn, t)


def naturality_report(conn: Connection, h: HN3Manifold, alpha: int) -> Report:
    """Does the connection annihilate phi, xi, eta and g of one structure?"""
    report = Report(f"naturality for structure {alpha}")
    dphi = covariant_derivative(conn, tensor_from_operator(h.phi(alpha)))
    dxi = covariant_derivative_vector(conn, h.xi(alpha))
    deta = covariant_derivative(conn, h.eta(alpha))
    dg = covariant_derivative(conn, h.mla.metric_as_tensor)
    for name, t in (("D.phi", dphi), ("D.xi", dxi), ("D.eta", deta), ("D.g", dg)):
        for idx, value in t.nonzero():
            report.require(name, tuple(i + 1 for i in idx), value, 0)
    return report


@dataclass(frozen=True, eq=False)
class Coincidence:
    """Outcome of comparing the three structure-wise natural connections.

    ``connections_equal`` is None when some torsion expression was not a
    3-form, which can only happen under ``force``.
    """

    torsions_equal: dict[tuple[int, int], bool]
    connections_equal: dict[tuple[int, int], bool] | None

    @property
    def routes_agree(self) -> bool:
        if self.connections_equal is None:
            return True
        return self.torsions_equal == self.connections_equal

    @property
    def common_exists(self) -> bool:
        return all(self.torsions_equal.values())

    def summary(self) -> str:
        def word(pair):
            return "=" if self.torsions_equal[pair] else "!="

        chain = f"D1 {word((1, 2))} D2, D1 {word((1, 3))} D3, D2 {word((2, 3))} D3"
        if self.common_exists:
            return (
                f"{chain}; the three torsion forms coincide, so one natural "
                "connection with totally skew-symmetric torsion preserves the "
                "whole 3-structure"
            )
        return (
            f"{chain}; the torsion forms do not all coincide, so no unique "
            "natural connection with totally skew-symmetric torsion preserves "
            "the whole 3-structure"
        )


def coincidence_check(h: HN3Manifold, force: bool = False) -> Coincidence:
    """Compare the three natural connections by two independent routes.

    Route one compares the closed-form torsion expressions componentwise;
    route two builds each connection and compares coefficient tensors.
    The two verdicts agree identically since the metric is fixed; both are
    computed anyway and exposed.
    """
    funds = {a: fundamental_tensor(h, a) for a in (1, 2, 3)}
    if not force:
        missing = [a for a in (1, 2, 3) if not in_skew_torsion_class(h, a, funds[a])]
        if missing:
            raise ExistenceError(
                f"structures {missing} fail their class condition; "
                "per-structure natural connections do not all exist"
            )
        hats = [a for a in (1, 2, 3) if not associated_nijenhuis(h, a)[0].is_zero()]
        if hats:
            raise ExistenceError(
                f"associated Nijenhuis tensor of structures {hats} does not vanish"
            )
    torsions = {a: structure_torsion(h, a, funds[a], force=True) for a in (1, 2, 3)}
    pairs = ((1, 2), (1, 3), (2, 3))
    torsions_equal = {(a, b): torsions[a] == torsions[b] for a, b in pairs}
    if all(is_three_form(t) for t in torsions.values()):
        conns = {a: natural_connection(h, a, torsions[a]) for a in (1, 2, 3)}
        connections_equal = {
            (a, b): conns[a].connection.gamma == conns[b].connection.gamma
            for a, b in pairs
        }
    else:
        connections_equal = None
    return Coincidence(torsions_equal, connections_equal)
