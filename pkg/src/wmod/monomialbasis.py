import logging
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

from .errors import ConsistencyError, GenusZero, Hyperelliptic, NegativeInput, NotAMember, NotSymmetric, OutOfRange
from .presentation import ExponentVector, minimal_presentation
from .semigroup import NumericalSemigroup
from .utils.polyutils import render_monomial

logger = logging.getLogger(__name__)


@lru_cache(maxsize=1 << 16)
def _lex_least_parts(parts: Tuple[int, ...], m: int, start: int, count: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically least ascending multiset from ``parts[start:]`` summing to ``m``.

    ``count < 0`` leaves the number of parts free and forbids the part 0;
    otherwise exactly ``count`` parts are used and 0 pads.
    """
    if count == 0:
        return () if m == 0 else None
    if count < 0 and m == 0:
        return ()
    for k in range(start, len(parts)):
        p = parts[k]
        if p > m:
            break
        if p == 0 and count < 0:
            continue
        rest = _lex_least_parts(parts, m - p, k, count - 1 if count > 0 else -1)
        if rest is not None:
            return (p,) + rest
    return None


def shrunk_representative(S: NumericalSemigroup, m: int) -> ExponentVector:
    """The factorization of ``m`` whose ascending list of parts is lexicographically least."""
    if m < 0:
        raise NegativeInput(f"expected a nonnegative member, got {m}")
    if not S.is_member(m):
        raise NotAMember(f"{m} is a gap of {S!r}")
    gens = S.minimal_generators
    parts = _lex_least_parts(gens, m, 0, -1)
    assert parts is not None, f"member {m} of {S!r} has no factorization"
    return ExponentVector.from_parts(parts, gens)


@dataclass(frozen=True)
class ShrunkBasis:
    semigroup: NumericalSemigroup
    bound: int
    table: Tuple[Tuple[int, ExponentVector], ...]

    def __getitem__(self, m: int) -> ExponentVector:
        for weight, vec in self.table:
            if weight == m:
                return vec
        raise NotAMember(f"{m} is not a member of {self.semigroup!r} below {self.bound}")

    def __len__(self):
        return len(self.table)

    def as_dict(self) -> Dict[int, ExponentVector]:
        return dict(self.table)


def shrunk_basis(S: NumericalSemigroup, bound: Optional[int] = None) -> ShrunkBasis:
    """Shrunk representatives for every member up to ``bound``.

    The default bound is one less than the largest relation weight, which
    covers every monomial the unfolding needs.
    """
    if bound is None:
        weights = minimal_presentation(S).relation_weights
        bound = max(weights) - 1 if weights else 0
    if bound < 0:
        raise OutOfRange(f"bound must be nonnegative, got {bound}")
    table = tuple((m, shrunk_representative(S, m)) for m in S.nongaps(bound))
    return ShrunkBasis(S, bound, table)


def _check_canonical(S: NumericalSemigroup):
    if not S.is_symmetric():
        raise NotSymmetric(f"{S!r} is not symmetric")
    if S.is_hyperelliptic():
        raise Hyperelliptic(f"{S!r} is hyperelliptic")


@dataclass(frozen=True)
class CanonicalDeltaBasis:
    """One degree-``n`` monomial in the canonical variables per member ``s <= n(2g-2)``."""
    semigroup: NumericalSemigroup
    degree: int
    variables: Tuple[int, ...]
    elements: Tuple[Tuple[int, Tuple[int, ...]], ...]

    def __len__(self):
        return len(self.elements)

    def weights(self) -> List[int]:
        return [s for s, _ in self.elements]

    def monomial(self, s: int) -> Tuple[int, ...]:
        for weight, exps in self.elements:
            if weight == s:
                return exps
        raise NotAMember(f"no basis monomial of weight {s}")

    def render(self) -> List[str]:
        return [f"{s}: {render_monomial(exps, self.variables)}" for s, exps in self.elements]


def delta_basis(S: NumericalSemigroup, n: int) -> CanonicalDeltaBasis:
    _check_canonical(S)
    if n < 2:
        raise OutOfRange(f"delta bases start in degree 2, got {n}")
    canon = S.canonical_generators()
    g = S.genus
    index = {w: i for i, w in enumerate(canon)}
    elements = []
    for s in S.nongaps(n * (2 * g - 2)):
        parts = _lex_least_parts(canon, s, 0, n)
        if parts is None:
            raise ConsistencyError(f"{s} is not a sum of {n} canonical generators of {S!r}")
        exps = [0] * g
        for p in parts:
            exps[index[p]] += 1
        elements.append((s, tuple(exps)))
    expected = (2 * n - 1) * (g - 1)
    if len(elements) != expected:
        raise ConsistencyError(f"delta basis of degree {n} has {len(elements)} elements, expected {expected}")
    return CanonicalDeltaBasis(S, n, canon, tuple(elements))


def decompositions_two(S: NumericalSemigroup, s: int) -> List[Tuple[int, int]]:
    """Pairs ``a <= b`` of canonical generators with ``a + b = s``, ordered by ``a``."""
    if not S.is_symmetric():
        raise NotSymmetric(f"{S!r} is not symmetric")
    if s < 0:
        raise NegativeInput(f"expected a nonnegative member, got {s}")
    if not S.is_member(s):
        raise NotAMember(f"{s} is a gap of {S!r}")
    g = S.genus
    if s > 4 * g - 4:
        raise OutOfRange(f"{s} exceeds 4g - 4 = {4 * g - 4}")
    top = 2 * g - 2
    nongaps = S.nongaps(top)
    members = set(nongaps)
    return [(a, s - a) for a in nongaps if a <= s - a and (s - a) in members]


def quadric_excess(S: NumericalSemigroup) -> int:
    """Sum of ``(#decompositions - 1)`` over members up to ``4g - 4``."""
    if S.genus == 0:
        return 0
    return sum(len(decompositions_two(S, s)) - 1 for s in S.nongaps(4 * S.genus - 4))


def ideal_dimension(S: NumericalSemigroup, n: int) -> int:
    """Dimension of the degree-``n`` part of the canonical ideal."""
    g = S.genus
    if g == 0:
        raise GenusZero(f"{S!r} has genus 0")
    if n < 2:
        raise OutOfRange(f"expected n >= 2, got {n}")
    return comb(n + g - 1, n) - (2 * n - 1) * (g - 1)
