from __future__ import annotations

import pytest

from wmod.canonicalmodel import (SyzygyCertificate, all_syzygies, canonical_curve, canonical_quadrics, check_guards,
                                 excluded_targets, expand_combination, find_syzygy, quadric_by_label, shrink,
                                 verify_shrunk_syzygy)
from wmod.errors import ExcludedTarget, GuardViolation, NotCompleteIntersection, NotSymmetric, OutOfRange
from wmod.presentation import _betti_components, _factor_tuples, minimal_presentation
from wmod.semigroup import from_generators
from wmod.utils.polyutils import monomial, polynomial_ring

QUADRICS_4_7_10 = [
    ("F_{8,1}", "X4^2 - X0*X8"),
    ("F_{11,1}", "X4*X7 - X0*X11"),
    ("F_{12,1}", "X4*X8 - X0*X12"),
    ("F_{14,1}", "X7^2 - X4*X10"),
    ("F_{15,1}", "X7*X8 - X4*X11"),
    ("F_{16,1}", "X8^2 - X4*X12"),
    ("F_{18,1}", "X8*X10 - X7*X11"),
    ("F_{19,1}", "X8*X11 - X7*X12"),
    ("F_{20,1}", "X10^2 - X8*X12"),
    ("F_{22,1}", "X11^2 - X10*X12"),
]


@pytest.mark.parametrize("gens, reason", [
    ((2, 5), "hyperelliptic"),
    ((3, 4), "genus"),
    ((4, 5), "<4,5>"),
    ((3, 7), "n1=3"),
    ((4, 5, 6), "n1=g"),
])
def test_guards(gens, reason) -> None:
    with pytest.raises(GuardViolation) as info:
        check_guards(from_generators(gens))
    assert info.value.reason == reason


def test_guards_pass(s4710, s345) -> None:
    check_guards(s4710)
    check_guards(from_generators([4, 6, 9]))
    with pytest.raises(NotSymmetric):
        check_guards(s345)


def test_quadrics_of_4_7_10(s4710) -> None:
    quadrics = canonical_quadrics(s4710)
    assert [(q.name, q.render()) for q in quadrics] == QUADRICS_4_7_10
    assert quadric_by_label(s4710, (14, 1)).plus == (7, 7)
    assert quadrics[0].to_json() == {"s": 8, "i": 2, "name": "F_{8,1}", "plus": [4, 4], "minus": [0, 8]}
    with pytest.raises(OutOfRange):
        quadric_by_label(s4710, (13, 1))


def test_quadric_count_for_genus_six() -> None:
    S = from_generators([4, 6, 9])
    assert len(canonical_quadrics(S)) == 6
    assert len(excluded_targets(S)) == 4


def test_canonical_curve(s4710) -> None:
    curve = canonical_curve(s4710)
    R = curve.ring
    for q in canonical_quadrics(s4710):
        assert curve.vanishes(q.polynomial(R, curve.weights))
    off = monomial(R, (0, 2, 0, 0, 0, 0, 0)) - monomial(R, (1, 0, 1, 0, 0, 0, 0))
    assert not curve.vanishes(off)


def test_excluded_targets(s4710) -> None:
    assert excluded_targets(s4710) == [(12, 1), (16, 1), (19, 1), (20, 1), (22, 1)]
    with pytest.raises(ExcludedTarget):
        find_syzygy(s4710, (12, 1))


def test_syzygy_of_f14(s4710) -> None:
    cert = find_syzygy(s4710, (14, 1))
    assert [(t.n, t.quadric.label, t.eps) for t in cert.terms] == [
        (12, (14, 1), 1), (7, (19, 1), 1), (8, (18, 1), 1), (10, (16, 1), -1)]
    assert cert.render() == "X12*F_{14,1} + X7*F_{19,1} + X8*F_{18,1} - X10*F_{16,1}"
    assert cert.expand() == 0
    assert cert.to_json()["target"] == "F_{14,1}"


def test_syzygy_of_f8(s4710) -> None:
    cert = find_syzygy(s4710, (8, 1))
    assert cert.render() == "X12*F_{8,1} + X4*F_{16,1} - X8*F_{12,1}"


def test_sign_of_the_f18_term_matters(s4710) -> None:
    flipped = expand_combination(s4710, [(12, (14, 1), 1), (7, (19, 1), 1), (8, (18, 1), -1), (10, (16, 1), -1)])
    assert flipped != 0
    assert flipped == expand_combination(s4710, [(8, (18, 1), -2)])
    with pytest.raises(OutOfRange):
        expand_combination(s4710, [(9, (14, 1), 1)])


def test_all_syzygies(s4710) -> None:
    certs = all_syzygies(s4710)
    assert len(certs) == 5
    assert [c.target.label for c in certs] == [(8, 1), (11, 1), (14, 1), (15, 1), (18, 1)]
    for cert in certs:
        assert cert.terms[0].n == 12 and cert.terms[0].eps == 1
        assert cert.expand() == 0


def test_shrink(s4710) -> None:
    curve = canonical_curve(s4710)
    R = curve.ring
    P = minimal_presentation(s4710)
    F14 = quadric_by_label(s4710, (14, 1)).polynomial(R, curve.weights)
    F16 = quadric_by_label(s4710, (16, 1)).polynomial(R, curve.weights)
    assert shrink(s4710, F14) == P.polynomials()[0]
    assert shrink(s4710, F16) == 0
    with pytest.raises(OutOfRange):
        shrink(s4710, P.polynomials()[0])


def test_shrunk_trace_of_f14(s4710) -> None:
    trace = verify_shrunk_syzygy(s4710, find_syzygy(s4710, (14, 1)))
    assert trace.lines == (
        "X12*F_{14,1} -> X4^3*G1",
        "X7*F_{19,1} -> 0",
        "X8*F_{18,1} -> -X4^3*G1",
        "-X10*F_{16,1} -> 0",
        "G1: X4^3 - X4^3 = 0",
        "residue: 0",
    )
    assert trace.trivial
    assert trace.residue == 0
    assert [j for j, _ in trace.contributions] == [0]


def test_shrunk_trace_of_f8(s4710) -> None:
    trace = verify_shrunk_syzygy(s4710, find_syzygy(s4710, (8, 1)))
    assert trace.contributions == ()
    assert trace.trivial
    assert trace.lines[-1] == "residue: 0"
    assert trace.to_json()["trivial"] is True


def test_shrunk_trace_requires_complete_intersection() -> None:
    S = from_generators([5, 7, 8, 9])
    check_guards(S)
    q = canonical_quadrics(S)[0]
    with pytest.raises(NotCompleteIntersection):
        verify_shrunk_syzygy(S, SyzygyCertificate(S, q, ()))


def test_genus_six_certificates() -> None:
    S = from_generators([4, 6, 9])
    certs = all_syzygies(S)
    assert len(certs) == 2
    for cert in certs:
        assert cert.expand() == 0
        assert verify_shrunk_syzygy(S, cert).residue == 0


def test_certificate_in_genus_32(codim4) -> None:
    cert = find_syzygy(codim4, (32, 1))
    assert (cert.terms[0].n, cert.terms[0].quadric.label, cert.terms[0].eps) == (62, (32, 1), 1)
    assert all(t.eps in (-1, 1) for t in cert.terms)
    assert len({(t.n, t.quadric.label) for t in cert.terms}) == len(cert.terms)
    assert cert.expand() == 0
    assert verify_shrunk_syzygy(codim4, cert).residue == 0


@pytest.mark.slow
def test_all_certificates_in_genus_32(codim4) -> None:
    certs = all_syzygies(codim4)
    assert len(certs) == len(canonical_quadrics(codim4)) - len(excluded_targets(codim4))
    assert all(cert.expand() == 0 for cert in certs)


def test_proposed_sign_is_flagged(s4710) -> None:
    cert = find_syzygy(s4710, (14, 1))
    printed = [(12, (14, 1), 1), (7, (19, 1), 1), (8, (18, 1), -1), (10, (16, 1), -1)]
    trace = verify_shrunk_syzygy(s4710, cert, proposed=printed)
    assert trace.lines[-3] == "residue: 0"
    assert trace.lines[-2:] == (
        "flag: X8*F_{18,1} has sign +1, proposed -1",
        "flag: proposed combination leaves -2*X8*F_{18,1}",
    )
    agreeing = [(t.n, t.quadric.label, t.eps) for t in cert.terms]
    assert verify_shrunk_syzygy(s4710, cert, proposed=agreeing).lines == verify_shrunk_syzygy(s4710, cert).lines


def test_caches_are_bounded() -> None:
    for cached in (canonical_quadrics, minimal_presentation, _betti_components, _factor_tuples, polynomial_ring):
        assert cached.cache_info().maxsize is not None
