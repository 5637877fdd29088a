from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

import example_values as pv
from chordal_betti import closed_form as cf
from chordal_betti.algebra import IntPolynomial
from chordal_betti.closed_form import CMClass
from chordal_betti.complex_core import validate_spec
from chordal_betti.errors import BadRowRequest
from strategies import specs


def test_f_vector_and_independence(example):
    assert cf.f_vector(example).entries == pv.F_VECTOR
    assert cf.independence_polynomial(example).coefficients == pv.INDEPENDENCE
    assert cf.f_vector(validate_spec((4,))).entries == (1, 4, 6, 4, 1)
    assert cf.f_vector(validate_spec((3, 3), (1,))).f(0) == 5
    assert cf.independence_polynomial(validate_spec((2,))).coefficients == (1, 2, 1)


def test_hilbert_numerator_small_cases(example):
    assert cf.hilbert_numerator(validate_spec((3,))) == IntPolynomial((1,))
    assert cf.hilbert_numerator(example)[0] == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_example_skeleton_tables(example, k):
    assert cf.skeleton_betti_table(example, k) == pv.table(pv.PRIMAL[k])


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_example_skeleton_totals(example, k):
    assert cf.skeleton_betti_table(example, k).totals() == pv.PRIMAL_TOTALS[k]


def test_example_skeleton_spot_entries(example):
    k1 = cf.skeleton_betti_table(example, 1)
    assert (k1[1, 2], k1[1, 3], k1[7, 9]) == (12, 30, 16)
    k4 = cf.skeleton_betti_table(example, 4)
    assert (k4[1, 6], k4[4, 9]) == (1, 1)
    full = cf.skeleton_betti_table(example, 5)
    assert full[6, 7] == 1 and full.proj_dim == 6
    # k beyond the dimension clamps to the full complex
    assert cf.skeleton_betti_table(example, 9) == full


def test_general_theorem_entry(example):
    f = cf.f_vector(example)
    assert cf.general_skeleton_betti(f, 9, 2, 1, 1, 2) == 30
    assert cf.general_skeleton_betti(f, 9, 2, 1, 0, 0) == 1
    with pytest.raises(BadRowRequest):
        cf.general_skeleton_betti(f, 9, 2, 1, -1, 2)


def test_general_theorem_matches_glued_form(example):
    f = cf.f_vector(example)
    for k in range(0, example.dim):
        table = cf.skeleton_betti_table(example, k)
        for i in range(1, 10):
            for j in range(0, 7):
                assert cf.general_skeleton_betti(f, 9, 2, k, i, j) == table[i, i + j]


@pytest.mark.parametrize("k", sorted(pv.PRIMAL_SUMMARY))
def test_example_summary(example, k):
    inv = cf.skeleton_invariants(example, k)
    assert (inv.multiplicity, inv.h_degree, inv.euler) == pv.PRIMAL_SUMMARY[k]


def test_example_invariants(example):
    inv = cf.skeleton_invariants(example, 2)
    assert (inv.regularity, inv.proj_dim, inv.depth) == (3, 6, 3)
    full = cf.skeleton_invariants(example, 5)
    assert (full.regularity, full.proj_dim, full.h_degree, full.euler) == (1, 6, 4, 0)
    assert CMClass.INITIALLY_CM in full.cm_class
    assert CMClass.COHEN_MACAULAY not in full.cm_class
    assert full.a_invariant == full.h_degree - full.krull_dim


def test_single_simplex_invariants():
    inv = cf.skeleton_invariants(validate_spec((3,)), 2)
    # the Stanley-Reisner ideal is zero, so the ring has regularity 0
    assert (inv.regularity, inv.proj_dim, inv.depth) == (0, 0, 3)
    assert CMClass.COHEN_MACAULAY in inv.cm_class


def test_euler_cases(example):
    assert cf.euler_characteristic(example, 1) == -16
    assert cf.euler_characteristic(example, 3) == -6
    assert cf.euler_characteristic(validate_spec((2, 2), (0,)), 1) == 1


def test_extremal_corner_cancellation():
    # an edge and a disjoint triangle: at k = 1 the t^2 coefficient cancels
    spec = validate_spec((2, 3), (0,))
    assert cf.extremal_corner_cancels(spec, 1)
    assert cf.h_polynomial(spec, 1) == IntPolynomial((1, 3))
    assert cf.h_degree(spec, 1) == 1
    assert not cf.extremal_corner_cancels(validate_spec((3, 3), (0,)), 1)


@settings(max_examples=80, deadline=None)
@given(specs(max_vertices=14, max_n=7))
def test_numerator_consistency(spec):
    full = cf.skeleton_betti_table(spec, spec.dim)
    assert full.numerator() == cf.hilbert_numerator(spec)
    faces = IntPolynomial()
    N = spec.n_vertices
    for t, f in enumerate(cf.f_vector(spec).entries):
        faces = faces + IntPolynomial.monomial(t, f) * IntPolynomial.one_minus_t_power(N - t)
    assert faces == cf.hilbert_numerator(spec)


@settings(max_examples=80, deadline=None)
@given(specs(max_vertices=14, max_n=7))
def test_row_support_and_invariants(spec):
    for k in range(-1, spec.dim + 1):
        table = cf.skeleton_betti_table(spec, k)
        inv = cf.skeleton_invariants(spec, k)
        if k < spec.dim:
            assert table.row_support() <= {0, 1, k + 1}
        assert table.regularity == inv.regularity
        assert table.proj_dim == inv.proj_dim
        assert inv.depth == spec.n_vertices - inv.proj_dim
        assert inv.depth <= inv.krull_dim
        h = cf.h_polynomial(spec, k)
        assert h(1) == inv.multiplicity
        assert h.degree == inv.h_degree


@settings(max_examples=80, deadline=None)
@given(specs(max_vertices=14, max_n=7))
def test_independence_coefficients_are_faces(spec):
    assert cf.independence_polynomial(spec).coefficients == cf.f_vector(spec).entries


def test_invariants_depend_on_multisets_only():
    base = validate_spec((3, 5, 6), (2, 3))
    for n in set(itertools.permutations(base.n)):
        for r in set(itertools.permutations(base.r)):
            try:
                other = validate_spec(n, r)
            except ValueError:
                continue
            for k in range(-1, 6):
                assert cf.skeleton_betti_table(other, k) == cf.skeleton_betti_table(base, k)
