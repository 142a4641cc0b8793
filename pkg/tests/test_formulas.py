"""Closed-form product formulas against the enumeration and determinant routes."""

import pytest

from treefactor import (
    Disconnected,
    FormMismatch,
    NotDivisibleCount,
    NotThresholdSequence,
    Partition,
    Polynomial,
    Spectrum,
    TreeStatistic,
    WeightScheme,
    cartesian_product,
    cayley_prufer_rhs,
    complete_graph,
    coordinate_sum,
    count_from_spectrum,
    cube_rhs,
    cube_subset_factor,
    decoupled_enumerator_factors,
    directions_rhs,
    enumerate_sum,
    hypercube,
    merris_count,
    product_spectrum,
    spanning_tree_count,
    threshold_degree_rhs,
    threshold_f_factor,
    threshold_g_factor,
    threshold_graph,
    threshold_rewrite_rhs,
    threshold_rhs,
    tree_enumerator_det,
    x,
    y,
)
from treefactor.formulas import InvalidSize
from treefactor.polyring import div_exact

P = Polynomial.parse


def test_cayley_prufer_small():
    assert cayley_prufer_rhs(2) == P("x1*x2")
    assert cayley_prufer_rhs(3) == P("x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2")
    with pytest.raises(InvalidSize):
        cayley_prufer_rhs(1)


def test_cayley_prufer_matches_other_routes():
    for n in (3, 4, 5):
        rhs = cayley_prufer_rhs(n)
        g = complete_graph(n)
        assert rhs == enumerate_sum(g, TreeStatistic.DEGREE)
        assert rhs == tree_enumerator_det(g, WeightScheme.CAYLEY_PRUFER)


def test_directions_rhs_small():
    assert directions_rhs((3,)) == P("3*q1^2")
    assert directions_rhs((2, 2)) == P("2*q1^2*q2 + 2*q1*q2^2")


def test_directions_rhs_matches_enumeration():
    for dims in [(2, 2), (2, 3), (2, 2, 2)]:
        g = cartesian_product([complete_graph(d) for d in dims])
        assert directions_rhs(dims) == enumerate_sum(g, TreeStatistic.DIRECTION)


def test_directions_rhs_strips_unit_factors():
    with pytest.warns(UserWarning):
        rhs = directions_rhs((2, 1, 3))
    # kept factors keep their original direction indices
    g = cartesian_product([complete_graph(2), complete_graph(1), complete_graph(3)])
    assert rhs == enumerate_sum(g, TreeStatistic.DIRECTION)
    with pytest.warns(UserWarning):
        assert directions_rhs((1, 1)) == Polynomial.one()


def test_directions_rhs_rejects_bad_dims():
    with pytest.raises(InvalidSize):
        directions_rhs(())
    with pytest.raises(InvalidSize):
        directions_rhs((2, 0))


def test_product_spectrum_subset_order():
    spec = product_spectrum((2, 3))
    assert len(spec) == 4
    pairs = list(spec)
    assert pairs[0] == (Polynomial.zero(), 1)
    assert pairs[1] == (P("2*q1"), 1)
    assert pairs[2] == (P("3*q2"), 2)
    assert pairs[3] == (P("2*q1 + 3*q2"), 2)
    assert spec.total_multiplicity() == 6


def test_count_from_spectrum_numeric_and_symbolic():
    spec = product_spectrum((2, 3), qs=[1, 1])
    assert count_from_spectrum(spec, 6).as_int() == 75
    assert count_from_spectrum(spec, 6).as_int() == spanning_tree_count(
        cartesian_product([complete_graph(2), complete_graph(3)])
    )
    assert count_from_spectrum(product_spectrum((2, 2)), 4) == directions_rhs((2, 2))


def test_count_from_spectrum_requires_simple_kernel():
    bad = Spectrum([(Polynomial.zero(), 2), (P("q1"), 1)])
    with pytest.raises(NotDivisibleCount):
        count_from_spectrum(bad, 2)


def test_decoupled_factor_list():
    factors = decoupled_enumerator_factors((2, 2))
    rendered = sorted((base.render(), e) for base, e in factors)
    assert rendered == [
        ("q1", 1),
        ("q2", 1),
        ("x(1,1)", 2),
        ("x(1,2)", 2),
        ("x(2,1)", 2),
        ("x(2,2)", 2),
    ]


def test_decoupled_factors_complete_for_single_direction():
    # one direction: the factor list is the whole enumerator
    g = cartesian_product([complete_graph(3)])
    enum = tree_enumerator_det(g, WeightScheme.DECOUPLED)
    prod = Polynomial.one()
    for base, e in decoupled_enumerator_factors((3,)):
        prod = prod * base ** e
    assert prod == enum


def test_decoupled_factors_divide_enumerator():
    # several directions: the factors divide; the quotient is the part the
    # non-negativity scan examines
    for dims in [(2, 2), (2, 3)]:
        g = cartesian_product([complete_graph(d) for d in dims])
        enum = tree_enumerator_det(g, WeightScheme.DECOUPLED)
        prod = Polynomial.one()
        for base, e in decoupled_enumerator_factors(dims):
            prod = prod * base ** e
        quotient = div_exact(enum, prod)
        assert prod * quotient == enum, dims
        assert not quotient.is_zero


def test_coordinate_sum():
    assert coordinate_sum(2, 3) == P("x(2,1) + x(2,2) + x(2,3)")


def test_cube_subset_factor():
    assert cube_subset_factor([1, 3]) == P("q1*x1^-1 + q1*x1 + q3*x3^-1 + q3*x3")


def test_cube_rhs_small():
    assert cube_rhs(1) == P("q1")
    assert cube_rhs(2) == P("q1*q2") * cube_subset_factor([1, 2])
    with pytest.raises(InvalidSize):
        cube_rhs(0)


def test_cube_rhs_matches_enumeration():
    for n in (1, 2, 3):
        g = hypercube(n)
        assert cube_rhs(n) == enumerate_sum(g, TreeStatistic.CUBE_SUBSTITUTED), n


def test_merris_counts():
    assert merris_count((2, 2, 2)) == 3
    assert merris_count((3, 1, 1, 1)) == 1
    assert merris_count((3, 3, 2, 2)) == 8
    assert merris_count((4, 3, 2, 2, 1)) == 8
    assert merris_count((1, 1)) == 1


def test_merris_rejects_bad_input():
    with pytest.raises(Disconnected):
        merris_count((1, 1, 0))
    with pytest.raises(NotThresholdSequence):
        merris_count((2, 2, 1, 1))


def test_threshold_rhs_star():
    assert threshold_rhs((3, 1, 1, 1)) == P("x1^3*y2*y3*y4")
    assert threshold_rhs((1, 1)) == P("x1*y2")


def test_threshold_rhs_matches_enumeration():
    for lam in [(2, 2, 2), (3, 1, 1, 1), (3, 3, 2, 2), (4, 3, 2, 2, 1)]:
        g = threshold_graph(lam)
        assert threshold_rhs(lam) == enumerate_sum(g, TreeStatistic.IN_OUT_DEGREE), lam
        assert threshold_rhs(lam) == tree_enumerator_det(g, WeightScheme.THRESHOLD_IN_OUT), lam


def test_threshold_degree_rhs_is_y_to_x_specialization():
    for lam in [(2, 2, 2), (3, 3, 2, 2), (4, 3, 2, 2, 1)]:
        n = len(lam)
        sub = {y(i): Polynomial.variable(x(i)) for i in range(1, n + 1)}
        assert threshold_rhs(lam).substitute(sub) == threshold_degree_rhs(lam), lam
        g = threshold_graph(lam)
        assert threshold_degree_rhs(lam) == enumerate_sum(g, TreeStatistic.DEGREE), lam


def test_threshold_factor_pieces():
    lam = Partition((2, 2, 2))
    assert threshold_f_factor(lam, 2) == P("x1*y2 + x2*y2 + x2*y3")
    assert threshold_g_factor(Partition((3, 1, 1, 1)), 2) == P("x1")
    assert threshold_g_factor(Partition((3, 1, 1, 1)), 4) == Polynomial.zero()


def test_threshold_rewrite_star():
    assert threshold_rewrite_rhs((3, 1, 1, 1)) == P("x1^3*y2*y3*y4")


def test_threshold_rewrite_agrees_everywhere():
    # the rewrite internally cross-checks against the direct product
    from treefactor import connected_threshold_sequences

    for n in range(2, 6):
        for lam in connected_threshold_sequences(n):
            assert threshold_rewrite_rhs(lam) == threshold_rhs(lam)


def test_threshold_rhs_all_ones_is_merris_count():
    for lam in [(2, 2, 2), (3, 3, 2, 2), (4, 3, 2, 2, 1)]:
        rhs = threshold_rhs(lam)
        ones = {v: Polynomial.one() for v in rhs.variables()}
        assert rhs.substitute(ones).as_int() == merris_count(lam), lam
