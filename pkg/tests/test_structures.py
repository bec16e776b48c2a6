"""Structure axioms, metric compatibility, and the product extension."""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction

import pytest

from conftest import LAMBDAS
from hn3 import (
    Matrix,
    Vector,
    build_product,
    builtin_example,
    signature,
    validate_ac3,
    validate_hn_metric,
    validate_hypercomplex_hn,
)
from hn3.builtin import standard_metric, standard_structures
from hn3.errors import ValidationError
from hn3.liealg import LieAlgebra, MetricLieAlgebra
from hn3.structures import AlmostContactStructure, HN3Manifold
from hn3.tensor import covector


class TestStructureAxioms:
    def test_validators_pass_on_fixtures(self, bracket_fixtures):
        for name, h in bracket_fixtures.items():
            assert validate_ac3(h).passed, name
            assert validate_hn_metric(h).passed, name

    def test_phi_identities(self, builtin2):
        for a in (1, 2, 3):
            phi, xi, eta = builtin2.phi(a), builtin2.xi(a), builtin2.eta(a)
            assert phi.rank() == builtin2.dim - 1
            assert phi.apply(xi).is_zero()
            assert all(
                sum(eta[i] * phi[i, j] for i in range(builtin2.dim)) == 0
                for j in range(builtin2.dim)
            )
            assert eta.value_at(xi) == 1

    def test_metric_signature_finding(self, builtin2):
        report = validate_hn_metric(builtin2)
        assert report.findings["metric_signature"] == "(4,3,0)"
        assert signature(builtin2.metric) == (4, 3, 0)

    def test_reeb_square_norms(self, builtin2):
        g = builtin2.metric
        for a in (1, 2, 3):
            xi = builtin2.xi(a)
            sq = sum(xi[i] * g[i, j] * xi[j] for i in range(7) for j in range(7))
            assert sq == -builtin2.eps(a)


class TestStructurePerturbations:
    def test_broken_phi_is_caught(self, builtin2):
        structures = list(builtin2.structures)
        bad_phi = structures[0].phi * Fraction(2)
        structures[0] = replace(structures[0], phi=bad_phi)
        h = HN3Manifold(builtin2.mla, tuple(structures))
        report = validate_ac3(h)
        assert not report.passed

    def test_broken_metric_is_caught(self, builtin2):
        flipped = Matrix.diagonal([1, 1, -1, -1, -1, 1, -1])
        h = HN3Manifold(
            MetricLieAlgebra(builtin2.mla.algebra, flipped), builtin2.structures
        )
        report = validate_hn_metric(h)
        assert not report.passed

    def test_epsilon_pattern_enforced(self, builtin2):
        structures = list(builtin2.structures)
        structures[1] = replace(structures[1], epsilon=1)
        with pytest.raises(ValidationError):
            HN3Manifold(builtin2.mla, tuple(structures))

    def test_exactly_three_structures(self, builtin2):
        with pytest.raises(ValidationError):
            HN3Manifold(builtin2.mla, builtin2.structures[:2])

    def test_dimension_warning(self):
        # a frame of dimension 5 cannot split into three equal contact
        # distributions; the validator warns and the identities fail
        mla = MetricLieAlgebra(LieAlgebra.abelian(5), Matrix.identity(5) * -1)
        j = Matrix([[0, -1], [1, 0]])
        phi = Matrix(
            [[j[i, k] if i < 2 and k < 2 else 0 for k in range(5)] for i in range(5)]
        )
        s = AlmostContactStructure(
            phi, Vector.basis(5, 4), covector(Vector.basis(5, 4)), 1
        )
        h = HN3Manifold(mla, (s, replace(s, epsilon=-1), replace(s, epsilon=-1)))
        report = validate_ac3(h)
        assert report.warnings and "4m+3" in report.warnings[0]
        assert not report.passed


class TestProductExtension:
    def test_extension_shapes_and_signature(self, builtin2):
        p = build_product(builtin2)
        assert p.mla.dim == 8
        assert p.metric_signature == (4, 4, 0)
        assert validate_hypercomplex_hn(p).passed
        assert validate_hypercomplex_hn(p).findings["extension_signature"] == "(4,4,0)"

    def test_extension_across_lambda_family(self):
        for lam in LAMBDAS:
            p = build_product(builtin_example(lam))
            assert validate_hypercomplex_hn(p).passed

    def test_extension_on_bracket_fixtures(self, bracket_fixtures):
        for name, h in bracket_fixtures.items():
            assert validate_hypercomplex_hn(build_product(h)).passed, name

    def test_operator_blocks(self, builtin2):
        p = build_product(builtin2)
        n = builtin2.dim
        for a in (1, 2, 3):
            j = p.j_ops[a - 1]
            phi, xi, eta = builtin2.phi(a), builtin2.xi(a), builtin2.eta(a)
            for i in range(n):
                for k in range(n):
                    assert j[i, k] == phi[i, k]
                assert j[i, n] == -xi[i]
                assert j[n, i] == eta[i]
            assert j[n, n] == 0

    def test_invalid_base_rejected(self):
        mla = MetricLieAlgebra(LieAlgebra.abelian(7), Matrix.identity(7))
        h = HN3Manifold(mla, standard_structures())  # metric has the wrong characters
        with pytest.raises(ValidationError):
            build_product(h)
        p = build_product(h, validate=False)
        assert not validate_hypercomplex_hn(p).passed

    def test_extended_brackets_zero_pad(self, solvable):
        p = build_product(solvable)
        c = p.mla.algebra.bracket
        base = solvable.mla.algebra.bracket
        n = solvable.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    assert c[i, j, k] == base[i, j, k]
                assert c[i, j, n] == 0
                assert c[i, n, j] == 0 and c[n, i, j] == 0
