from __future__ import annotations

import numpy as np
import pytest

from wmod.cotangent import (GradedBlock, JacobianOnCurve, degree_window, graded_block, jacobian_on_curve, t1_graded_piece,
                            t1_report)
from wmod.errors import NotCompleteIntersection, NotPrime, WmodWarning
from wmod.presentation import minimal_presentation
from wmod.semigroup import enumerate_semigroups, from_generators

NEGATIVE_4_7_10 = [-20, -16, -14, -13, -12, -10, -9, -8, -6, -5, -4, -2, -1]


def negative_dim(J: JacobianOnCurve, F=0) -> int:
    lo, _ = degree_window(J)
    return sum(t1_graded_piece(J, d, F).dim for d in range(lo, 0))


def test_jacobian_entries(s4710, s23) -> None:
    J = jacobian_on_curve(minimal_presentation(s4710))
    assert [[tuple(e) for e in row] for row in J.entries] == [
        [(-1, 10), (2, 7), (-1, 4)],
        [(-5, 16), (0, None), (2, 10)],
    ]
    np.testing.assert_array_equal(J.coefficient_matrix(), np.array([[-1, 2, -1], [-5, 0, 2]]))
    J = jacobian_on_curve(minimal_presentation(s23))
    assert [tuple(e) for e in J.entries[0]] == [(-3, 4), (2, 3)]


def test_jacobian_requires_complete_intersection(s345) -> None:
    with pytest.raises(NotCompleteIntersection):
        jacobian_on_curve(minimal_presentation(s345))
    assert len(JacobianOnCurve(minimal_presentation(s345), strict=False).entries) == 3


def test_graded_block(s4710) -> None:
    J = jacobian_on_curve(minimal_presentation(s4710))
    assert graded_block(J, -4) == GradedBlock(-4, (0, 1), (0,), ((-1,), (-5,)))
    assert graded_block(J, -3) == GradedBlock(-3, (0, 1), (1, 2), ((2, -1), (0, 2)))
    assert graded_block(J, -11) == GradedBlock(-11, (), (), ())


def test_t1_of_4_7_10(s4710) -> None:
    report = t1_report(s4710)
    assert sorted(report.by_degree) == NEGATIVE_4_7_10 + [2]
    assert set(report.by_degree.values()) == {1}
    assert report.negative_dim == 13
    assert report.nonnegative_dim == 1
    assert report.tjurina == 14
    assert report.coordinate_weights == [1, 2, 4, 5, 6, 8, 9, 10, 12, 13, 14, 16, 20]
    assert report.warnings == ()


def test_t1_of_cusp(s23) -> None:
    report = t1_report(s23)
    assert report.by_degree == {-6: 1, -4: 1}
    assert report.tjurina == 2


def test_t1_over_admissible_prime(s4710) -> None:
    assert t1_report(s4710, 3).by_degree == t1_report(s4710).by_degree
    assert t1_report(s4710, 1_000_000_007).by_degree == t1_report(s4710).by_degree


def test_t1_over_inadmissible_prime_warns(s4710) -> None:
    with pytest.warns(WmodWarning):
        report = t1_report(s4710, 2)
    assert report.characteristic == 2
    assert len(report.warnings) == 1
    with pytest.raises(NotPrime):
        t1_report(s4710, 9)


def test_t1_requires_complete_intersection(s345) -> None:
    with pytest.raises(NotCompleteIntersection):
        t1_report(s345)


def test_t1_json(s4710) -> None:
    data = t1_report(s4710).to_json()
    assert data["by_degree"][0] == [-20, 1]
    assert data["by_degree"][-1] == [2, 1]
    assert data["tjurina"] == 14


def test_tjurina_is_twice_the_genus() -> None:
    for genus in range(1, 8):
        for S in enumerate_semigroups(genus, complete_intersection=True):
            assert t1_report(S).tjurina == 2 * genus


def test_negative_dimension_ignores_tie_break() -> None:
    for genus in range(2, 7):
        for S in enumerate_semigroups(genus, complete_intersection=True):
            least = JacobianOnCurve(minimal_presentation(S))
            greatest = JacobianOnCurve(minimal_presentation(S, tie_break="greatest"))
            assert negative_dim(least) == negative_dim(greatest) == t1_report(S).negative_dim


def test_dyadic_t1(codim4) -> None:
    report = t1_report(codim4)
    assert report.negative_dim == 33
    assert report.tjurina == 2 * codim4.genus


def test_t1_of_the_trivial_semigroup() -> None:
    report = t1_report(from_generators([1]))
    assert report.pieces == ()
    assert report.tjurina == 0
