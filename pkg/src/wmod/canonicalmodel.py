import logging
from collections import defaultdict, namedtuple
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
from sympy.polys.rings import PolyElement, PolyRing

from .errors import (ExcludedTarget, GuardViolation, NoCertificate, NonZeroResidue, NotCompleteIntersection,
                     NotSymmetric, OutOfRange)
from .monomialbasis import decompositions_two, shrunk_representative
from .presentation import ExponentVector, connect_factorizations, minimal_presentation
from .semigroup import NumericalSemigroup
from .utils.polyutils import monomial, polynomial_ring, render_polynomial, render_signed

logger = logging.getLogger(__name__)

Label = Tuple[int, int]

SyzygyTerm = namedtuple("SyzygyTerm", ["n", "quadric", "eps"])


def check_guards(S: NumericalSemigroup):
    """Raise unless the canonical ideal of ``S`` is generated by the binomial quadrics."""
    if not S.is_symmetric():
        raise NotSymmetric(f"{S!r} is not symmetric")
    if S.is_hyperelliptic():
        raise GuardViolation("hyperelliptic", f"{S!r} is hyperelliptic")
    g = S.genus
    if g <= 3:
        raise GuardViolation("genus", f"{S!r} has genus {g} <= 3")
    if S.minimal_generators == (4, 5):
        raise GuardViolation("<4,5>", "the canonical ideal of <4,5> needs a cubic")
    if S.multiplicity == 3:
        raise GuardViolation("n1=3", f"{S!r} is trigonal")
    if S.multiplicity == g:
        raise GuardViolation("n1=g", f"{S!r} has multiplicity equal to its genus {g}")


@dataclass(frozen=True)
class CanonicalCurve:
    """The monomial canonical curve ``(a^{n_i} b^{l_{g-i}-1})_i``."""
    semigroup: NumericalSemigroup
    weights: Tuple[int, ...]
    exponent_pairs: Tuple[Tuple[int, int], ...]

    @property
    def ring(self) -> PolyRing:
        return polynomial_ring(self.weights)

    def vanishes(self, poly: PolyElement) -> bool:
        image = defaultdict(int)
        for monom, coeff in poly.terms():
            a = sum(e * p[0] for e, p in zip(monom, self.exponent_pairs))
            b = sum(e * p[1] for e, p in zip(monom, self.exponent_pairs))
            image[(a, b)] += int(coeff)
        return all(c == 0 for c in image.values())


def canonical_curve(S: NumericalSemigroup) -> CanonicalCurve:
    check_guards(S)
    g = S.genus
    canon = S.canonical_generators()
    gaps = S.gaps
    pairs = tuple((n, gaps[g - 1 - i] - 1) for i, n in enumerate(canon))
    return CanonicalCurve(S, canon, pairs)


@dataclass(frozen=True)
class CanonicalQuadric:
    """``X_{a_si} X_{b_si} - X_{a_s} X_{b_s}``, the ``i``-th decomposition against the first."""
    s: int
    i: int
    plus: Tuple[int, int]
    minus: Tuple[int, int]

    @property
    def label(self) -> Label:
        return (self.s, self.i - 1)

    @property
    def name(self) -> str:
        return f"F_{{{self.s},{self.i - 1}}}"

    def polynomial(self, R: PolyRing, weights: Sequence[int]) -> PolyElement:
        index = {w: k for k, w in enumerate(weights)}
        return _pair_monomial(R, index, self.plus) - _pair_monomial(R, index, self.minus)

    def render(self) -> str:
        return f"{_pair_name(self.plus)} - {_pair_name(self.minus)}"

    def to_json(self) -> dict:
        return {"s": self.s, "i": self.i, "name": self.name, "plus": list(self.plus), "minus": list(self.minus)}


def _pair_monomial(R: PolyRing, index: Dict[int, int], pair: Tuple[int, int]) -> PolyElement:
    exps = [0] * len(index)
    for w in pair:
        exps[index[w]] += 1
    return monomial(R, exps)


def _pair_name(pair: Tuple[int, int]) -> str:
    a, b = pair
    return f"X{a}^2" if a == b else f"X{a}*X{b}"


@lru_cache(maxsize=64)
def canonical_quadrics(S: NumericalSemigroup) -> Tuple[CanonicalQuadric, ...]:
    check_guards(S)
    out = []
    for s in S.nongaps(4 * S.genus - 4):
        decs = decompositions_two(S, s)
        for k in range(1, len(decs)):
            out.append(CanonicalQuadric(s, k + 1, decs[k], decs[0]))
    return tuple(out)


def excluded_targets(S: NumericalSemigroup) -> List[Label]:
    """Labels ``(n_i + 2g - 2, 1)``, ``i <= g - 3``, which no certificate targets."""
    labels = {q.label for q in canonical_quadrics(S)}
    canon = S.canonical_generators()
    top = 2 * S.genus - 2
    return [(n + top, 1) for n in canon[:S.genus - 2] if (n + top, 1) in labels]


def quadric_by_label(S: NumericalSemigroup, target: Union[Label, CanonicalQuadric]) -> CanonicalQuadric:
    if isinstance(target, CanonicalQuadric):
        return target
    for q in canonical_quadrics(S):
        if q.label == tuple(target):
            return q
    raise OutOfRange(f"{S!r} has no canonical quadric F_{{{target[0]},{target[1]}}}")


@dataclass(frozen=True)
class SyzygyCertificate:
    semigroup: NumericalSemigroup
    target: CanonicalQuadric
    terms: Tuple[SyzygyTerm, ...]

    def expand(self) -> PolyElement:
        return expand_combination(self.semigroup, [(t.n, t.quadric, t.eps) for t in self.terms])

    def render(self) -> str:
        return render_signed((t.eps, f"X{t.n}*{t.quadric.name}") for t in self.terms)

    def to_json(self) -> dict:
        return {
            "target": self.target.name,
            "terms": [{"n": t.n, "s": t.quadric.s, "i": t.quadric.i, "eps": t.eps} for t in self.terms],
            "rendered": self.render(),
        }


def expand_combination(S: NumericalSemigroup, terms: Sequence[Tuple[int, Union[Label, CanonicalQuadric], int]]) \
        -> PolyElement:
    """``sum(eps * X_n * F)`` in the canonical polynomial ring."""
    canon = S.canonical_generators()
    R = polynomial_ring(canon)
    index = {w: k for k, w in enumerate(canon)}
    total = R.zero
    for n, target, eps in terms:
        q = quadric_by_label(S, target)
        if n not in index:
            raise OutOfRange(f"X{n} is not a canonical variable of {S!r}")
        exps = [0] * len(canon)
        exps[index[n]] = 1
        total += monomial(R, exps, eps) * q.polynomial(R, canon)
    return total


def find_syzygy(S: NumericalSemigroup, target: Union[Label, CanonicalQuadric]) -> SyzygyCertificate:
    """A relation ``X_{2g-2} F_target + sum eps X_n F = 0`` with ``eps`` in {-1, 1}.

    Every candidate ``X_n F_{s,i}`` of weight ``s_target + 2g - 2`` is a
    binomial, i.e. an edge between two cubic monomials. A certificate is a
    path from ``X_{2g-2} * plus`` to ``X_{2g-2} * minus`` that avoids the
    target's own edge. The path is walked greedily along shortest-path
    distances, taking the first candidate (by ``n``, then quadric order) at
    each step.
    """
    quad = quadric_by_label(S, target)
    if quad.label in excluded_targets(S):
        raise ExcludedTarget(f"{quad.name} is an excluded target of {S!r}")
    top = 2 * S.genus - 2
    total = quad.s + top
    candidates = [(n, q) for n in S.canonical_generators() for q in canonical_quadrics(S)
                  if n + q.s == total and not (n == top and q == quad)]

    G = nx.Graph()
    for k, (n, q) in enumerate(candidates):
        plus, minus = _cubic(n, q.plus), _cubic(n, q.minus)
        if not G.has_edge(plus, minus):
            G.add_edge(plus, minus, term=k, head=plus)
    start, end = _cubic(top, quad.plus), _cubic(top, quad.minus)
    if start not in G or end not in G:
        raise NoCertificate(f"no syzygy with leading term X{top}*{quad.name} on {S!r}")
    distance = nx.single_source_shortest_path_length(G, end)
    if start not in distance:
        raise NoCertificate(f"no syzygy with leading term X{top}*{quad.name} on {S!r}")

    signs = {}
    node = start
    while node != end:
        step = min((G.edges[node, nb]["term"], nb) for nb in G.neighbors(node)
                   if distance.get(nb) == distance[node] - 1)
        k, nxt = step
        # +1 when the plus monomial of the edge is the next node
        signs[k] = 1 if G.edges[node, nxt]["head"] == nxt else -1
        node = nxt
    terms = [SyzygyTerm(top, quad, 1)]
    terms += [SyzygyTerm(*candidates[k], signs[k]) for k in sorted(signs)]
    cert = SyzygyCertificate(S, quad, tuple(terms))
    if cert.expand() != 0:
        raise NoCertificate(f"certificate for {quad.name} does not expand to zero")
    logger.debug("%r: %s (%d cubic monomials)", S, cert.render(), G.number_of_nodes())
    return cert


def _cubic(n: int, pair: Tuple[int, int]) -> Tuple[int, int, int]:
    return tuple(sorted((n,) + tuple(pair)))


def all_syzygies(S: NumericalSemigroup) -> List[SyzygyCertificate]:
    excluded = set(excluded_targets(S))
    return [find_syzygy(S, q) for q in canonical_quadrics(S) if q.label not in excluded]


def shrink(S: NumericalSemigroup, poly: PolyElement) -> PolyElement:
    """Ring map ``X_{n_0} -> 1``, ``X_{n_i} -> X^{Pi(n_i)}`` into the minimal-generator ring."""
    canon = S.canonical_generators()
    source = polynomial_ring(canon)
    if poly.ring != source:
        raise OutOfRange(f"expected a polynomial in the canonical variables of {S!r}")
    target = polynomial_ring(S.minimal_generators)
    images = [shrunk_representative(S, n).exponents for n in canon]
    out = defaultdict(int)
    for monom, coeff in poly.terms():
        image = [0] * len(S.minimal_generators)
        for e, img in zip(monom, images):
            if e:
                image = [x + e * y for x, y in zip(image, img)]
        out[tuple(image)] += int(coeff)
    return target.from_dict({m: c for m, c in out.items() if c})


@dataclass(frozen=True)
class ShrunkSyzygyTrace:
    certificate: SyzygyCertificate
    contributions: Tuple[Tuple[int, Tuple[Tuple[int, ExponentVector], ...]], ...]
    coefficients: Tuple[PolyElement, ...]
    residue: PolyElement
    lines: Tuple[str, ...]

    @property
    def trivial(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def to_json(self) -> dict:
        return {
            "target": self.certificate.target.name,
            "trivial": self.trivial,
            "residue": str(self.residue),
            "lines": list(self.lines),
        }


def verify_shrunk_syzygy(S: NumericalSemigroup,
                         cert: SyzygyCertificate,
                         proposed: Optional[Sequence[Tuple[int, Union[Label, CanonicalQuadric], int]]] = None) \
        -> ShrunkSyzygyTrace:
    """Push a certificate through the shrinking map and reduce it by the minimal presentation.

    Each shrunk term is written as a combination of the generators ``G_j``;
    collecting the cofactors gives ``sum_j M_j G_j``, which must vanish.

    Args:
        S: a symmetric complete intersection passing the canonical guards.
        cert: certificate from :func:`find_syzygy`.
        proposed: ``(n, quadric, eps)`` terms of a combination to check against
            ``cert``. Every sign that differs is flagged at the end of the trace,
            together with what the proposed combination leaves over.
    """
    P = minimal_presentation(S)
    if not P.is_complete_intersection:
        raise NotCompleteIntersection(f"{S!r} is not a complete intersection")
    gens = S.minimal_generators
    R = P.ring()
    contributions: Dict[int, List[Tuple[int, ExponentVector]]] = defaultdict(list)
    lines = []
    for term in cert.terms:
        u = shrunk_representative(S, term.n)
        plus = shrunk_representative(S, term.quadric.plus[0]) + shrunk_representative(S, term.quadric.plus[1])
        minus = shrunk_representative(S, term.quadric.minus[0]) + shrunk_representative(S, term.quadric.minus[1])
        pieces = []
        for move in connect_factorizations(P, plus, minus):
            mono = u + move.cofactor
            contributions[move.relation].append((term.eps * move.sign, mono))
            factor = "" if mono.is_zero() else f"{mono.render()}*"
            pieces.append((term.eps * move.sign, f"{factor}G{move.relation + 1}"))
        head = render_signed([(term.eps, f"X{term.n}*{term.quadric.name}")])
        lines.append(f"{head} -> {render_signed(pieces)}")
    coefficients = []
    residue = R.zero
    for j, G in enumerate(P.generators):
        coeff = R.zero
        for sign, mono in contributions.get(j, []):
            coeff += sign * mono.polynomial(R)
        coefficients.append(coeff)
        residue += coeff * G.polynomial(R)
        if j in contributions:
            listed = render_signed((sign, mono.render()) for sign, mono in contributions[j])
            lines.append(f"G{j + 1}: {listed} = {render_polynomial(coeff, gens)}")
    lines.append(f"residue: {render_polynomial(residue, gens)}")
    if residue != 0:
        raise NonZeroResidue(f"shrunk syzygy of {cert.target.name} on {S!r} leaves {render_polynomial(residue, gens)}")
    if proposed is not None:
        lines.extend(sign_flags(S, cert, proposed))
    return ShrunkSyzygyTrace(cert, tuple((j, tuple(v)) for j, v in sorted(contributions.items())), tuple(coefficients),
                             residue, tuple(lines))


def sign_flags(S: NumericalSemigroup,
               cert: SyzygyCertificate,
               proposed: Sequence[Tuple[int, Union[Label, CanonicalQuadric], int]]) -> List[str]:
    """Trace lines for every term whose sign in ``proposed`` differs from ``cert``."""
    verified = {(t.n, t.quadric.label): t.eps for t in cert.terms}
    names = {(t.n, t.quadric.label): t.quadric.name for t in cert.terms}
    given: Dict[Tuple[int, Label], int] = {}
    for n, target, eps in proposed:
        q = quadric_by_label(S, target)
        names.setdefault((n, q.label), q.name)
        given[(n, q.label)] = given.get((n, q.label), 0) + eps
    lines, leftover = [], []
    for key in list(verified) + [k for k in given if k not in verified]:
        have, want = verified.get(key, 0), given.get(key, 0)
        if have == want:
            continue
        term = f"X{key[0]}*{names[key]}"
        lines.append(f"flag: {term} has sign {have:+d}, proposed {want:+d}")
        leftover.append((want - have, term))
    if lines:
        lines.append(f"flag: proposed combination leaves {render_signed(leftover)}")
    return lines
