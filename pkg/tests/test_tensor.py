"""Tensor container and the multilinear operations built on it.

Covers index lowering and raising, cyclic sums, alternation, interior
products, the eta-wedge, and the combinators the geometry modules compose
their formulas from.
"""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hn3 import Matrix, Vector, builtin_example
from hn3.errors import ShapeError, SymmetryError
from hn3.tensor import (
    Tensor,
    alternation,
    contract_arg_with_vector,
    covector,
    covector_times,
    cyclic_sum,
    interior,
    is_three_form,
    lower,
    metric_tensor,
    operator_from_tensor,
    permute_args,
    postcompose,
    precompose,
    raise_last,
    swap_args,
    tensor_from_operator,
    times_covector,
    times_vector,
    wedge_1_2,
)

rationals = st.builds(
    Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=4)
)


def tensors(contra: int, arity: int, dim: int = 3):
    n = dim ** (contra + arity)
    return st.lists(rationals, min_size=n, max_size=n).map(
        lambda comps: Tensor(contra, arity, dim, comps)
    )


METRIC3 = Matrix.diagonal([1, -1, 1])


class TestContainer:
    def test_component_count_enforced(self):
        with pytest.raises(ShapeError):
            Tensor(0, 2, 3, [Fraction(0)] * 8)

    def test_getitem_row_major(self):
        t = Tensor.build(0, 2, 2, lambda i, j: Fraction(10 * i + j))
        assert t[1, 0] == 10
        assert t[(0, 1)] == 1

    def test_nonzero_and_entries_agree(self):
        t = Tensor.build(0, 2, 3, lambda i, j: Fraction(1) if (i, j) == (2, 1) else Fraction(0))
        assert list(t.nonzero()) == [((2, 1), Fraction(1))]
        assert t.entries_1based() == [((3, 2), Fraction(1))]

    def test_value_at_multilinear(self):
        g = metric_tensor(METRIC3)
        u, v = Vector([1, 2, 0]), Vector([0, 1, 1])
        assert g.value_at(u, v) == Fraction(-2)
        assert g.value_at(u + v, v) == g.value_at(u, v) + g.value_at(v, v)

    def test_operator_round_trip(self):
        m = Matrix([[0, 1, 0], [2, 0, 0], [0, 0, 3]])
        assert operator_from_tensor(tensor_from_operator(m)) == m


class TestMetricOps:
    @given(tensors(1, 2))
    @settings(max_examples=20, deadline=None)
    def test_lower_then_raise(self, t):
        assert raise_last(lower(t, METRIC3), METRIC3) == t

    def test_lower_places_output_last(self):
        m = Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])  # e2 -> e1
        low = lower(tensor_from_operator(m), METRIC3)
        # g(m(e2), e1) = g(e1, e1) = 1 sits at argument slot (2) output slot (1)
        assert low[1, 0] == 1

    def test_interior_contracts_first_slot(self):
        g = metric_tensor(METRIC3)
        assert interior(Vector.basis(3, 1), g) == covector(Vector([0, -1, 0]))

    def test_contract_arg_with_vector_hits_chosen_slot(self):
        t = Tensor.build(0, 3, 3, lambda i, j, k: Fraction(i * 9 + j * 3 + k))
        v = Vector([1, 1, 0])
        c = contract_arg_with_vector(t, v, 1)
        assert c[2, 1] == t[2, 0, 1] + t[2, 1, 1]


class TestCyclicAndAlternation:
    @given(tensors(0, 3))
    @settings(max_examples=20, deadline=None)
    def test_cyclic_sum_is_cycle_invariant(self, t):
        s = cyclic_sum(t)
        assert s == permute_args(s, (1, 2, 0))

    @given(tensors(0, 3))
    @settings(max_examples=20, deadline=None)
    def test_alternation_is_three_form(self, t):
        assert is_three_form(alternation(t))

    @given(tensors(0, 3))
    @settings(max_examples=20, deadline=None)
    def test_three_forms_are_alternation_fixed_points(self, t):
        a = alternation(t)
        assert alternation(a) == a
        assert is_three_form(t) == (alternation(t) == t)

    def test_cyclic_sum_of_three_form_is_triple(self):
        t = alternation(Tensor.build(0, 3, 3, lambda i, j, k: Fraction(i - 2 * j + k * k)))
        assert cyclic_sum(t) == t * 3

    def test_cyclic_sum_rejects_other_shapes(self):
        with pytest.raises(ShapeError):
            cyclic_sum(metric_tensor(METRIC3))


class TestWedge:
    def test_wedge_requires_antisymmetric_factor(self):
        eta = covector(Vector([1, 0, 0]))
        with pytest.raises(SymmetryError):
            wedge_1_2(eta, metric_tensor(METRIC3))

    def test_wedge_is_three_form_and_kills_common_factor(self):
        eta = covector(Vector([1, 0, 0]))
        om = Tensor.build(0, 2, 3, lambda i, j: Fraction((i - j) * (i + j + 1)))
        w = wedge_1_2(eta, om)
        assert is_three_form(w)
        assert w.value_at(Vector.basis(3, 0), Vector.basis(3, 1), Vector.basis(3, 2)) == (
            om.value_at(Vector.basis(3, 1), Vector.basis(3, 2))
        )

    def test_eta_wedge_d_eta_on_example(self):
        h = builtin_example(2)
        from hn3 import exterior_d_eta

        w = wedge_1_2(h.eta(3), exterior_d_eta(h, 3))
        assert is_three_form(w)
        assert w.entries_1based()[0] == ((1, 2, 7), Fraction(-2))


class TestCombinators:
    def test_precompose_each_slot(self):
        g = metric_tensor(METRIC3)
        m = Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        assert precompose(g, m, 0).value_at(Vector.basis(3, 0), Vector.basis(3, 1)) == (
            g.value_at(Vector.basis(3, 1), Vector.basis(3, 1))
        )
        assert precompose(g, m, 1) == swap_args(precompose(g, m, 0), 0, 1)

    def test_postcompose_acts_on_output(self):
        br = Tensor.build(1, 2, 3, lambda i, j, k: Fraction(1) if (i, j, k) == (0, 1, 2) else Fraction(0))
        m = Matrix.diagonal([5, 5, 5])
        assert postcompose(br, m)[0, 1, 2] == 5

    def test_times_and_covector_products(self):
        eta = covector(Vector([0, 1, 0]))
        om = covector(Vector([1, 0, 0]))
        left = covector_times(eta, om)
        assert left == times_covector(eta, om)  # both are eta (x) om
        assert left[1, 0] == 1 and left[0, 1] == 0
        assert times_covector(om, eta) == swap_args(left, 0, 1)

    def test_times_vector_appends_output(self):
        om = covector(Vector([1, 2, 0]))
        t = times_vector(om, Vector([0, 0, 3]))
        assert t[1, 2] == 6
        assert (t.contra, t.arity) == (1, 1)

    @given(tensors(0, 3))
    @settings(max_examples=20, deadline=None)
    def test_permute_args_round_trip(self, t):
        assert permute_args(permute_args(t, (1, 2, 0)), (2, 0, 1)) == t

    @given(tensors(0, 2))
    @settings(max_examples=20, deadline=None)
    def test_swap_args_is_involutive(self, t):
        assert swap_args(swap_args(t, 0, 1), 0, 1) == t
