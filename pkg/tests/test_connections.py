"""Structure-preserving connections with totally skew-symmetric torsion.

Covers the class conditions gating existence, the closed-form torsion
tables, the agreement of the two independent torsion routes for the
first structure, naturality of the built connections with negative
controls, and the coincidence comparison of all three.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from conftest import form_from_seeds, signed_perms, zoo_f
from hn3 import (
    class_condition_alpha1,
    class_condition_alpha23,
    coincidence_check,
    connection_torsion,
    in_skew_torsion_class,
    natural_connection,
    naturality_report,
    structure_torsion,
    torsion_alpha1,
    torsion_alpha1_via_forms,
    torsion_alpha23,
)
from hn3.errors import ExistenceError, SymmetryError
from hn3.tensor import Tensor, is_three_form, lower


def torsion_seeds(alpha: int, lam: Fraction) -> dict:
    if alpha in (1, 3):
        return {(1, 2, 7): -lam, (3, 4, 7): -lam}
    half = lam / 2
    return {(1, 2, 7): -half, (3, 4, 7): -half, (1, 4, 5): half, (2, 3, 5): half}


def expected_torsion(h, alpha: int, lam: Fraction) -> Tensor:
    return form_from_seeds(h.dim, 3, torsion_seeds(alpha, lam), signed_perms)


class TestClassConditions:
    def test_hold_on_builtin_family(self, lam_family):
        for lam in (Fraction(1), Fraction(-1), Fraction(5, 2)):
            h = lam_family[lam]
            assert class_condition_alpha1(h, zoo_f(h, 1))
            for alpha in (2, 3):
                assert class_condition_alpha23(h, alpha, zoo_f(h, alpha))
            assert all(in_skew_torsion_class(h, a, zoo_f(h, a)) for a in (1, 2, 3))

    def test_hold_trivially_on_flat(self, flat):
        assert all(in_skew_torsion_class(flat, a) for a in (1, 2, 3))

    def test_fail_on_non_killing_reebs(self, solvable):
        # every Reeb vector of the solvable fixture has a Killing defect
        for alpha in (2, 3):
            assert not class_condition_alpha23(solvable, alpha, zoo_f(solvable, alpha))

    def test_fail_on_broken_reflection_identity(self, solvable):
        assert not class_condition_alpha1(solvable, zoo_f(solvable, 1))
        with pytest.raises(ExistenceError, match="reflection identity"):
            torsion_alpha1(solvable)

    def test_gate_the_torsion_constructors(self, solvable):
        with pytest.raises(ExistenceError):
            torsion_alpha23(solvable, 2)
        forced = torsion_alpha23(solvable, 2, force=True)
        assert not forced.is_zero()

    def test_alpha_range_guard(self, builtin2):
        with pytest.raises(ValueError):
            torsion_alpha23(builtin2, 1)


class TestTorsionForms:
    @pytest.mark.parametrize("lam", [Fraction(1), Fraction(2), Fraction(-3)])
    def test_component_tables(self, lam, lam_family):
        h = lam_family[lam]
        for alpha in (1, 2, 3):
            assert structure_torsion(h, alpha, zoo_f(h, alpha)) == (
                expected_torsion(h, alpha, lam)
            )

    def test_totally_skew(self, lam_family):
        h = lam_family[Fraction(5, 2)]
        for alpha in (1, 2, 3):
            assert is_three_form(structure_torsion(h, alpha, zoo_f(h, alpha)))

    def test_two_routes_for_first_structure(self, lam_family, flat):
        for h in (lam_family[Fraction(2)], lam_family[Fraction(-7, 3)], flat):
            assert torsion_alpha1(h, zoo_f(h, 1)) == torsion_alpha1_via_forms(h)

    def test_zero_on_flat(self, flat):
        for alpha in (1, 2, 3):
            assert structure_torsion(flat, alpha).is_zero()


class TestNaturalConnections:
    def test_connections_annihilate_their_structure(self, builtin2):
        for alpha in (1, 2, 3):
            d = natural_connection(builtin2, alpha)
            report = naturality_report(d.connection, builtin2, alpha)
            assert report.passed, report.render()

    def test_coefficients_are_levi_civita_plus_half_torsion(self, builtin2):
        d = natural_connection(builtin2, 1)
        lc = builtin2.mla.levi_civita.gamma
        lowered = lower(d.connection.gamma - lc, builtin2.metric)
        assert lowered == d.torsion * Fraction(1, 2)

    def test_torsion_round_trip(self, builtin2):
        for alpha in (1, 2, 3):
            d = natural_connection(builtin2, alpha)
            recomputed = lower(
                connection_torsion(d.connection, builtin2.mla.algebra),
                builtin2.metric,
            )
            assert recomputed == d.torsion

    def test_levi_civita_is_not_natural(self, builtin2):
        # non-trivial negative control: the torsion-free connection does
        # not preserve phi_1 on this example
        report = naturality_report(builtin2.mla.levi_civita, builtin2, 1)
        assert not report.passed
        assert any(v.identity == "D.phi" for v in report.violations)

    def test_second_connection_breaks_first_structure(self, builtin2):
        d2 = natural_connection(builtin2, 2)
        report = naturality_report(d2.connection, builtin2, 1)
        assert not report.passed

    def test_non_three_form_rejected(self, builtin2):
        # the fundamental tensor has the right shape but is not totally skew
        with pytest.raises(SymmetryError):
            natural_connection(builtin2, 1, torsion=zoo_f(builtin2, 1))


class TestCoincidence:
    def test_builtin_verdict(self, builtin2):
        c = coincidence_check(builtin2)
        assert c.torsions_equal == {(1, 2): False, (1, 3): True, (2, 3): False}
        assert c.connections_equal == c.torsions_equal
        assert c.routes_agree
        assert not c.common_exists
        assert "no unique" in c.summary()

    def test_flat_all_coincide(self, flat):
        c = coincidence_check(flat)
        assert c.common_exists
        assert c.routes_agree
        assert "one natural connection" in c.summary()

    def test_gating_without_force(self, solvable):
        with pytest.raises(ExistenceError):
            coincidence_check(solvable)

    def test_forced_comparison_still_reports(self, solvable):
        c = coincidence_check(solvable, force=True)
        assert set(c.torsions_equal) == {(1, 2), (1, 3), (2, 3)}
        assert c.routes_agree

    def test_verdict_stable_across_lambda(self, lam_family):
        for lam in (Fraction(1), Fraction(-3), Fraction(5, 2)):
            c = coincidence_check(lam_family[lam])
            assert c.torsions_equal == {(1, 2): False, (1, 3): True, (2, 3): False}
