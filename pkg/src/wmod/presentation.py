import logging
from collections import deque, namedtuple
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from sympy.polys.rings import PolyElement, PolyRing

from .errors import NegativeInput, NonZeroResidue
from .semigroup import NumericalSemigroup
from .utils.fields import check_characteristic
from .utils.polyutils import (exponents_from_json, exponents_to_json, monomial, polynomial_ring, render_monomial)

logger = logging.getLogger(__name__)

PresentationMove = namedtuple("PresentationMove", ["relation", "sign", "cofactor"])


@dataclass(frozen=True, order=True)
class ExponentVector:
    """Exponents of a monomial in the variables ``X_{a_1}, ..., X_{a_r}``.

    ``weight`` is the degree of the monomial under ``deg X_a = a``.
    """
    exponents: Tuple[int, ...]
    generators: Tuple[int, ...] = field(compare=False, repr=False)
    weight: int = field(init=False, compare=False, repr=False)
    degree: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        gens = tuple(int(a) for a in self.generators)
        if len(exps) != len(gens):
            raise ValueError(f"{len(exps)} exponents for {len(gens)} generators")
        if any(e < 0 for e in exps):
            raise NegativeInput(f"exponents must be nonnegative, got {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "weight", sum(a * e for a, e in zip(gens, exps)))
        object.__setattr__(self, "degree", sum(exps))

    @classmethod
    def zero(cls, generators: Sequence[int]) -> "ExponentVector":
        return cls((0,) * len(generators), tuple(generators))

    @classmethod
    def from_parts(cls, parts: Sequence[int], generators: Sequence[int]) -> "ExponentVector":
        """Collect a multiset of generators (zeros ignored) into exponents."""
        index = {a: i for i, a in enumerate(generators)}
        exps = [0] * len(generators)
        for p in parts:
            if p == 0:
                continue
            exps[index[p]] += 1
        return cls(tuple(exps), tuple(generators))

    def parts(self) -> List[int]:
        """The ascending list of generators, with multiplicity."""
        return [a for a, e in zip(self.generators, self.exponents) for _ in range(e)]

    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_zero(self) -> bool:
        return self.degree == 0

    def divides(self, other: "ExponentVector") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def common(self, other: "ExponentVector") -> "ExponentVector":
        return ExponentVector(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)), self.generators)

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        return ExponentVector(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.generators)

    def __sub__(self, other: "ExponentVector") -> "ExponentVector":
        if not other.divides(self):
            raise ValueError(f"{other.render()} does not divide {self.render()}")
        return ExponentVector(tuple(a - b for a, b in zip(self.exponents, other.exponents)), self.generators)

    def __mul__(self, k: int) -> "ExponentVector":
        return ExponentVector(tuple(k * e for e in self.exponents), self.generators)

    def render(self, prefix: str = "X") -> str:
        return render_monomial(self.exponents, self.generators, prefix)

    def polynomial(self, R: PolyRing) -> PolyElement:
        return monomial(R, self.exponents)

    def to_json(self) -> Dict[str, int]:
        return exponents_to_json(self.exponents, self.generators)

    @classmethod
    def from_json(cls, data: Dict[str, int], generators: Sequence[int]) -> "ExponentVector":
        return cls(exponents_from_json(data, generators), tuple(generators))


@dataclass(frozen=True)
class IsobaricBinomial:
    """``X^plus - X^minus`` with equal weights and disjoint supports."""
    plus: ExponentVector
    minus: ExponentVector

    def __post_init__(self):
        if self.plus.generators != self.minus.generators:
            raise ValueError("binomial sides live in different polynomial rings")
        if self.plus.weight != self.minus.weight:
            raise ValueError(f"binomial is not isobaric: {self.plus.weight} != {self.minus.weight}")
        if set(self.plus.support()) & set(self.minus.support()):
            raise ValueError(f"binomial sides share a variable: {self.plus.render()} / {self.minus.render()}")
        if self.plus == self.minus:
            raise ValueError("binomial sides coincide")

    @property
    def weight(self) -> int:
        return self.plus.weight

    @property
    def generators(self) -> Tuple[int, ...]:
        return self.plus.generators

    def gradient(self) -> Tuple[int, ...]:
        """Exponent differences ``plus_i - minus_i``, the Jacobian row on the curve."""
        return tuple(p - q for p, q in zip(self.plus.exponents, self.minus.exponents))

    def polynomial(self, R: PolyRing) -> PolyElement:
        return self.plus.polynomial(R) - self.minus.polynomial(R)

    def render(self, prefix: str = "X") -> str:
        return f"{self.plus.render(prefix)} - {self.minus.render(prefix)}"

    def to_json(self) -> dict:
        return {"plus": self.plus.to_json(), "minus": self.minus.to_json(), "weight": self.weight}

    @classmethod
    def from_json(cls, data: dict, generators: Sequence[int]) -> "IsobaricBinomial":
        return cls(ExponentVector.from_json(data["plus"], generators), ExponentVector.from_json(data["minus"], generators))


@dataclass(frozen=True)
class ToricPresentation:
    semigroup: NumericalSemigroup
    generators: Tuple[IsobaricBinomial, ...]
    betti_weights: Tuple[int, ...]

    @property
    def is_complete_intersection(self) -> bool:
        return len(self.generators) == self.semigroup.embedding_dimension - 1

    @property
    def relation_weights(self) -> Tuple[int, ...]:
        return tuple(G.weight for G in self.generators)

    def ring(self) -> PolyRing:
        return polynomial_ring(self.semigroup.minimal_generators)

    def polynomials(self) -> List[PolyElement]:
        R = self.ring()
        return [G.polynomial(R) for G in self.generators]

    def render(self) -> str:
        return "\n".join(f"G{j + 1} = {G.render()}    [{G.weight}]" for j, G in enumerate(self.generators))

    def to_json(self) -> dict:
        return {
            "complete_intersection": self.is_complete_intersection,
            "betti_weights": list(self.betti_weights),
            "binomials": [G.to_json() for G in self.generators],
            "rendered": [G.render() for G in self.generators],
        }


# ----- factorizations -----
@lru_cache(maxsize=1 << 16)
def _factor_tuples(generators: Tuple[int, ...], m: int, index: int) -> Tuple[Tuple[int, ...], ...]:
    """Factorizations of ``m`` over ``generators[:index + 1]``, largest generator chosen first."""
    if index < 0:
        return ((),) if m == 0 else ()
    a = generators[index]
    out = []
    for e in range(m // a, -1, -1):
        for rest in _factor_tuples(generators, m - e * a, index - 1):
            out.append(rest + (e,))
    return tuple(out)


def factorizations(S: NumericalSemigroup, m: int) -> List[ExponentVector]:
    """All exponent vectors of weight ``m``, in descending lexicographic order."""
    if m < 0:
        raise NegativeInput(f"factorizations are defined for nonnegative integers, got {m}")
    gens = S.minimal_generators
    if not S.is_member(m):
        return []
    found = _factor_tuples(gens, m, len(gens) - 1)
    return [ExponentVector(exps, gens) for exps in sorted(found, reverse=True)]


def factorization_graph(S: NumericalSemigroup, m: int) -> nx.Graph:
    """Factorizations of ``m``, adjacent when they share a variable."""
    facts = factorizations(S, m)
    graph = nx.Graph()
    graph.add_nodes_from(facts)
    for i in range(S.embedding_dimension):
        touching = [f for f in facts if f.exponents[i]]
        if len(touching) > 1:
            nx.add_path(graph, touching)
    return graph


def _components(S: NumericalSemigroup, m: int) -> List[List[ExponentVector]]:
    comps = [sorted(c) for c in nx.connected_components(factorization_graph(S, m))]
    comps.sort(key=lambda c: c[0])
    return comps


@lru_cache(maxsize=256)
def _betti_components(S: NumericalSemigroup) -> Tuple[Tuple[int, Tuple[Tuple[ExponentVector, ...], ...]], ...]:
    gens = S.minimal_generators
    if len(gens) < 2:
        return ()
    # minimal relations have weight below max generator + max Apery element
    bound = gens[-1] + max(S.apery_set(gens[0]))
    out = []
    for m in range(2 * gens[0], bound + 1):
        if not S.is_member(m):
            continue
        if len(_factor_tuples(gens, m, len(gens) - 1)) < 2:
            continue
        comps = _components(S, m)
        if len(comps) > 1:
            logger.debug("%r: Betti element %d with %d components", S, m, len(comps))
            out.append((m, tuple(tuple(c) for c in comps)))
    return tuple(out)


def betti_elements(S: NumericalSemigroup) -> List[int]:
    return [m for m, _ in _betti_components(S)]


@lru_cache(maxsize=256)
def minimal_presentation(S: NumericalSemigroup, tie_break: str = "least") -> ToricPresentation:
    """Minimal binomial generators of the ideal of the monomial curve.

    At every Betti element the factorization-graph components are joined to the
    component holding the lexicographically least factorization, each component
    represented by its least member. ``tie_break="greatest"`` uses the mirrored rule.
    """
    if tie_break not in ("least", "greatest"):
        raise NotImplementedError(f"Unrecognized tie break, expect [least|greatest], got {tie_break}")
    binomials = []
    for m, comps in _betti_components(S):
        if tie_break == "least":
            reps = [c[0] for c in comps]
        else:
            reps = sorted((c[-1] for c in comps), reverse=True)
        hub = reps[0]
        for other in reps[1:]:
            shared = hub.common(other)
            binomials.append(IsobaricBinomial(hub - shared, other - shared))
    return ToricPresentation(S, tuple(binomials), tuple(betti_elements(S)))


def is_complete_intersection(S: NumericalSemigroup) -> bool:
    return minimal_presentation(S).is_complete_intersection


def char_is_admissible(P: ToricPresentation, p: int) -> bool:
    """Whether ``p`` divides none of the nonzero exponents of the presentation."""
    check_characteristic(p)
    if p == 0:
        return True
    for G in P.generators:
        for e in G.plus.exponents + G.minus.exponents:
            if e and e % p == 0:
                return False
    return True


def connect_factorizations(P: ToricPresentation, u: ExponentVector, v: ExponentVector) -> List[PresentationMove]:
    """Write ``X^u - X^v`` as ``sum(sign * X^cofactor * G_relation)``.

    Breadth-first search over the factorizations of the common weight, one
    presentation binomial applied per step.
    """
    if u.weight != v.weight:
        raise ValueError(f"cannot connect monomials of weights {u.weight} and {v.weight}")
    if u == v:
        return []
    parent: Dict[ExponentVector, Optional[Tuple[ExponentVector, PresentationMove]]] = {u: None}
    queue = deque([u])
    while queue and v not in parent:
        w = queue.popleft()
        for j, G in enumerate(P.generators):
            for sign, src, dst in ((1, G.plus, G.minus), (-1, G.minus, G.plus)):
                if not src.divides(w):
                    continue
                cofactor = w - src
                nxt = cofactor + dst
                if nxt not in parent:
                    parent[nxt] = (w, PresentationMove(j, sign, cofactor))
                    queue.append(nxt)
    if v not in parent:
        raise NonZeroResidue(f"{u.render()} and {v.render()} are not connected by the presentation moves")
    moves = []
    node = v
    while parent[node] is not None:
        node, move = parent[node]
        moves.append(move)
    return moves[::-1]
