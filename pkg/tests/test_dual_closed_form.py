from __future__ import annotations

import pytest
from hypothesis import given, settings

import example_values as pv
from chordal_betti import dual_closed_form as dcf
from chordal_betti.algebra import IntPolynomial
from chordal_betti.complex_core import alexander_dual, brute_f_vector, realize, validate_spec
from chordal_betti.dual_closed_form import Monomial
from chordal_betti.errors import RangeError, VoidDual
from strategies import specs


def test_dual_f_vector_matches_brute_force(example):
    f = dcf.dual_f_vector(example)
    assert f == brute_f_vector(alexander_dual(realize(example)))
    assert f.dim == 6 and f.f(6) == 12


def test_dual_h_vector(example):
    h, mult = dcf.dual_h_vector(example)
    assert mult == 12
    assert h.degree == 5
    assert h == dcf.dual_f_vector(example).h_polynomial()


def test_dual_table(example):
    table = dcf.dual_betti_table(example)
    assert table == pv.table(pv.DUAL)
    assert table.totals() == pv.DUAL_TOTALS
    assert (table.proj_dim, table.regularity) == (2, 5)


def test_dual_resolution_matches_printed_maps(example):
    res = dcf.dual_resolution(example)
    assert res.d1 == tuple(Monomial.from_vertices(9, v) for v in pv.D1)
    expected = tuple(
        tuple(None if e is None else Monomial.from_vertices(9, e[1], e[0]) for e in row)
        for row in pv.D2
    )
    assert res.d2 == expected
    assert res.composition_is_zero() and res.is_homogeneous() and res.columns_well_formed()
    assert res.numerator() == dcf.dual_betti_table(example).numerator()
    assert str(res.d2[1][0]) == "-x4x5x6"


def test_dual_profile(example):
    prof = dcf.dual_profile(example)
    assert (prof.krull_dim, prof.regularity, prof.a_invariant) == (7, 5, -2)
    assert (prof.cm_type, prof.multiplicity) == (2, 12)
    assert not prof.gorenstein and not prof.pure_resolution and not prof.linear_resolution
    assert prof.acyclic and prof.sphere_dim is None


def test_complete_intersection_case():
    # two triangles sharing an edge: the dual ideal is generated by two coprime monomials
    spec = validate_spec((3, 3), (2,))
    prof = dcf.dual_profile(spec)
    assert prof.gorenstein and prof.pure_resolution and prof.linear_resolution
    table = dcf.dual_betti_table(spec)
    assert table.totals() == [1, 2, 1]
    assert table[1, 1] == 2 and table[2, 2] == 1


def test_disconnected_dual_is_a_sphere():
    spec = validate_spec((2, 2), (0,))
    prof = dcf.dual_profile(spec)
    assert prof.sphere_count == 1 and prof.sphere_dim == 1
    top = dcf.dual_skeleton_profile(spec, 1)
    assert top.euler == -1 and top.sphere_count == 1


@pytest.mark.parametrize("k", [1, 2, 4])
def test_dual_skeleton_tables(example, k):
    table = dcf.dual_skeleton_betti_table(example, k)
    assert table == pv.table(pv.DUAL_SKELETON[k])
    assert table.totals() == pv.DUAL_SKELETON_TOTALS[k]


@pytest.mark.parametrize("k", sorted(pv.DUAL_SUMMARY))
def test_dual_summary(example, k):
    prof = dcf.dual_skeleton_profile(example, k)
    assert (prof.multiplicity, prof.h_degree, prof.euler) == pv.DUAL_SUMMARY[k]


def test_dual_skeleton_profile_details(example):
    prof = dcf.dual_skeleton_profile(example, 2)
    assert (prof.krull_dim, prof.proj_dim, prof.depth) == (3, 6, 3)
    assert prof.cohen_macaulay and prof.cm_type == 55 == prof.sphere_count
    assert prof.ideal_regularity == 4
    assert not prof.simplex_equal
    assert dcf.dual_skeleton_profile(example, 1).simplex_equal
    top = dcf.dual_skeleton_profile(example, 6)
    assert top.ideal_regularity == 6 and top.proj_dim == 2


def test_regularity_bound(example):
    eq = dcf.regularity_bound_check(example, 4)
    assert eq.ideal_reg_full == 6 and eq.skeleton_gen_degree == 6
    assert eq.bound_holds and eq.equality
    above = dcf.regularity_bound_check(example, 5)
    assert above.bound_holds and not above.equality
    with pytest.raises(RangeError):
        dcf.regularity_bound_check(example, 3)
    with pytest.raises(RangeError):
        dcf.regularity_bound_check(example, 6)


def test_errors(example):
    for fn in (dcf.dual_f_vector, dcf.dual_betti_table, dcf.dual_profile, dcf.dual_resolution):
        with pytest.raises(VoidDual):
            fn(validate_spec((4,)))
    with pytest.raises(RangeError):
        dcf.dual_skeleton_betti_table(example, 7)
    with pytest.raises(RangeError):
        dcf.dual_skeleton_profile(example, -2)


@settings(max_examples=60, deadline=None)
@given(specs(min_e=2, max_vertices=14, max_n=7))
def test_dual_structure(spec):
    res = dcf.dual_resolution(spec)
    assert res.composition_is_zero() and res.is_homogeneous() and res.columns_well_formed()
    table = dcf.dual_betti_table(spec)
    assert table.numerator() == res.numerator()
    h, mult = dcf.dual_h_vector(spec)
    f = dcf.dual_f_vector(spec)
    N = spec.n_vertices
    assert table.numerator() == h * IntPolynomial.one_minus_t_power(2)
    assert mult == f.f(f.dim)
    for k in range(-1, N - 2):
        sk = dcf.dual_skeleton_betti_table(spec, k)
        assert sk.numerator() == f.truncate(k).h_polynomial() * IntPolynomial.one_minus_t_power(
            N - k - 1
        )
        assert sk.proj_dim == dcf.dual_skeleton_profile(spec, k).proj_dim
