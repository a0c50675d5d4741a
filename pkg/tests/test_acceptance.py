from __future__ import annotations

import pytest

from wmod.canonicalmodel import all_syzygies, check_guards, verify_shrunk_syzygy
from wmod.cotangent import t1_report
from wmod.errors import GuardError
from wmod.presentation import minimal_presentation
from wmod.semigroup import codim_two_family, dyadic_family, enumerate_semigroups
from wmod.unfolding import moduli_report, normalize, trivial_action_rank, unfold


@pytest.mark.parametrize("tau", [1, 2, 3, 4])
def test_codim_two_family(tau) -> None:
    S = codim_two_family(tau)
    assert S.genus == 3 + 4 * tau
    P = minimal_presentation(S)
    U = unfold(P)
    assert len(U.coefficients) == 12 + 8 * tau
    assert trivial_action_rank(P) == 2 * tau + 5
    t1 = t1_report(S)
    assert t1.negative_dim == 7 + 6 * tau
    assert t1.tjurina == 2 * S.genus
    report = moduli_report(S)
    assert report.dimension == 6 + 6 * tau
    assert list(report.weights) == t1.coordinate_weights


def test_codim_two_family_nonnegative_part() -> None:
    t1 = t1_report(codim_two_family(2))
    assert t1.negative_dim == 19
    assert sorted(d for d in t1.by_degree if d >= 0) == [2, 3, 6]
    assert t1.nonnegative_dim == 3


@pytest.mark.parametrize("tau", [1, 2, pytest.param(3, marks=pytest.mark.slow)])
def test_dyadic_family(tau) -> None:
    S = dyadic_family(4, tau)
    assert S.genus == 32 * tau
    assert S.frobenius == 64 * tau - 1
    P = minimal_presentation(S)
    assert len(unfold(P).coefficients) == 24 * tau + 24
    assert trivial_action_rank(P) == 4 * tau + 11
    assert t1_report(S).negative_dim == 20 * tau + 13
    assert moduli_report(S).dimension == 20 * tau + 12


@pytest.mark.slow
def test_genus_eighty() -> None:
    S = dyadic_family(5, 1)
    assert S.minimal_generators == (32, 33, 34, 36, 40, 48)
    P = minimal_presentation(S)
    N = normalize(unfold(P))
    assert len(N.coefficients) == 75
    assert trivial_action_rank(P) == 21
    assert len(N.moduli_coordinates) == 54
    assert moduli_report(S).dimension == 53


def complete_intersections(genus):
    for S in enumerate_semigroups(genus, complete_intersection=True):
        if not S.is_hyperelliptic():
            yield S


@pytest.mark.parametrize("genus", [
    3, 4, 5, 6, 7,
    *[pytest.param(g, marks=pytest.mark.slow) for g in (8, 9, 10, 11, 12)],
])
def test_moduli_dimension_matches_negative_t1(genus) -> None:
    for S in complete_intersections(genus):
        report = moduli_report(S)
        t1 = t1_report(S)
        assert len(report.weights) == t1.negative_dim
        assert list(report.weights) == t1.coordinate_weights
        assert moduli_report(S, 1_000_003).weights == report.weights


@pytest.mark.parametrize("genus", [4, 5, 6, 7, *[pytest.param(g, marks=pytest.mark.slow) for g in (8, 9)]])
def test_syzygies_for_complete_intersections(genus) -> None:
    for S in complete_intersections(genus):
        try:
            check_guards(S)
        except GuardError:
            continue
        for cert in all_syzygies(S):
            assert cert.expand() == 0
            assert verify_shrunk_syzygy(S, cert).residue == 0
