import logging
import os
from collections import namedtuple
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .config import Settings, load_settings
from .errors import (BoundExceeded, EmptyInput, GenusZero, InputError, NegativeInput, NonCoprime, NotAMember,
                     OutOfRange)

logger = logging.getLogger(__name__)

BuchweitzRow = namedtuple("BuchweitzRow", ["n", "count", "bound", "obstructed"])

BuchweitzVerdict = namedtuple("BuchweitzVerdict", ["rows", "obstructed", "first_obstruction"])
BuchweitzVerdict.__new__.__defaults__ = (None,)


def _sieve(generators: Sequence[int], bound: int) -> np.ndarray:
    member = np.zeros(bound + 1, dtype=bool)
    member[0] = True
    gens = np.asarray(generators, dtype=np.int64)
    for x in range(1, bound + 1):
        steps = gens[gens <= x]
        if steps.size:
            member[x] = member[x - steps].any()
    return member


class NumericalSemigroup:
    """A cofinite additive submonoid of the nonnegative integers.

    Instances are immutable and compare by their minimal generators. Build them
    with :meth:`from_generators` or :meth:`from_gaps`.
    """

    __slots__ = ("_generators", "_table", "_gaps")

    def __init__(self, minimal_generators: Tuple[int, ...], membership_table: np.ndarray):
        table = np.array(membership_table, dtype=bool)
        table.setflags(write=False)
        self._generators = tuple(int(a) for a in minimal_generators)
        self._table = table
        self._gaps = tuple(int(x) for x in np.flatnonzero(~table))

    # ----- construction -----
    @classmethod
    def from_generators(cls, generators: Iterable[int]) -> "NumericalSemigroup":
        gens = [int(a) for a in generators]
        if len(gens) == 0:
            raise EmptyInput("a numerical semigroup needs at least one generator")
        if any(a <= 0 for a in gens):
            raise NegativeInput(f"generators must be positive, got {gens}")
        if reduce(gcd, gens) != 1:
            raise NonCoprime(f"generators must be coprime, got gcd {reduce(gcd, gens)} for {gens}")
        gens = sorted(set(gens))
        if gens[0] == 1:
            return cls((1,), np.zeros(0, dtype=bool))

        # Frobenius number is below (min - 1)(max - 1)
        member = _sieve(gens, gens[0] * gens[-1])
        frobenius = int(np.flatnonzero(~member)[-1])
        minimal = tuple(a for a in gens if not cls._is_sum_of_two(member, a))
        return cls(minimal, member[:frobenius + 1])

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        gap_set = sorted(set(int(x) for x in gaps))
        if any(x <= 0 for x in gap_set):
            raise NegativeInput(f"gaps must be positive, got {gap_set}")
        if len(gap_set) == 0:
            return cls((1,), np.zeros(0, dtype=bool))
        conductor = gap_set[-1] + 1
        table = np.ones(conductor, dtype=bool)
        table[gap_set] = False
        nongaps = np.flatnonzero(table)
        for x in nongaps[1:]:
            for y in nongaps[1:]:
                if x + y >= conductor:
                    break
                if not table[x + y]:
                    raise InputError(f"gap set {gap_set} is not the complement of a semigroup: {x} + {y}")

        def member(x):
            return x >= conductor or bool(table[x])

        multiplicity = next(x for x in range(1, conductor + 1) if member(x))
        minimal = []
        for n in range(1, conductor + multiplicity):
            if not member(n):
                continue
            if not any(member(b) and member(n - b) for b in range(1, n // 2 + 1)):
                minimal.append(n)
        return cls(tuple(minimal), table)

    @staticmethod
    def _is_sum_of_two(member: np.ndarray, a: int) -> bool:
        return any(member[b] and member[a - b] for b in range(1, a // 2 + 1))

    # ----- invariants -----
    @property
    def minimal_generators(self) -> Tuple[int, ...]:
        return self._generators

    @property
    def membership_table(self) -> np.ndarray:
        return self._table

    @property
    def conductor(self) -> int:
        return len(self._table)

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def gaps(self) -> Tuple[int, ...]:
        return self._gaps

    @property
    def genus(self) -> int:
        return len(self._gaps)

    @property
    def multiplicity(self) -> int:
        return self._generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self._generators)

    def is_member(self, m: int) -> bool:
        if m < 0:
            raise NegativeInput(f"membership is defined for nonnegative integers, got {m}")
        if m >= self.conductor:
            return True
        return bool(self._table[m])

    def __contains__(self, m) -> bool:
        return m >= 0 and self.is_member(m)

    def nongaps(self, upto: int) -> List[int]:
        """Members of the semigroup in ``[0, upto]``."""
        return [x for x in range(0, upto + 1) if self.is_member(x)]

    def apery_set(self, a: int) -> List[int]:
        """Least member in each residue class mod ``a``, indexed by residue."""
        if a <= 0 or not self.is_member(a):
            raise NotAMember(f"Apery sets are taken with respect to a nonzero member, got {a}")
        result = [None] * a
        missing = a
        x = 0
        while missing:
            r = x % a
            if result[r] is None and self.is_member(x):
                result[r] = x
                missing -= 1
            x += 1
        return result

    def canonical_generators(self) -> Tuple[int, ...]:
        """The first ``g`` nongaps ``n_0 = 0 < n_1 < ... < n_{g-1}``."""
        if self.genus == 0:
            raise GenusZero("the canonical generators of N are undefined (genus 0)")
        out = []
        x = 0
        while len(out) < self.genus:
            if self.is_member(x):
                out.append(x)
            x += 1
        return tuple(out)

    def is_symmetric(self) -> bool:
        return self.frobenius == 2 * self.genus - 1

    def symmetric_pairing_holds(self) -> bool:
        F = self.frobenius
        return all(self.is_member(x) != self.is_member(F - x) for x in range(0, F + 1))

    def is_hyperelliptic(self) -> bool:
        return self.is_member(2)

    def is_ordinary(self) -> bool:
        return self._gaps == tuple(range(1, self.genus + 1))

    def weierstrass_weight(self) -> int:
        return sum(gap - i for i, gap in enumerate(self._gaps, start=1))

    def effective_generators(self) -> Tuple[int, ...]:
        return tuple(a for a in self._generators if a > self.frobenius)

    def children(self) -> List["NumericalSemigroup"]:
        """Descendants in the semigroup tree, ordered by the removed generator."""
        return [NumericalSemigroup.from_gaps(self._gaps + (a,)) for a in self.effective_generators()]

    def buchweitz_screen(self, n_max: Optional[int] = None, settings: Optional[Settings] = None) -> BuchweitzVerdict:
        """Compare the n-fold sums of gaps with ``(2n-1)(g-1)`` for ``2 <= n <= n_max``.

        An exceeding count shows the semigroup is not a Weierstrass semigroup.
        Genus below 2 is never obstructed.
        """
        if n_max is None:
            n_max = (settings or load_settings()).buchweitz_max_n
        if n_max < 2:
            raise OutOfRange(f"the Buchweitz screen starts at n = 2, got n_max = {n_max}")
        g = self.genus
        rows = []
        sums = set(self._gaps)
        for n in range(2, n_max + 1):
            sums = {x + gap for x in sums for gap in self._gaps}
            bound = (2 * n - 1) * (g - 1)
            rows.append(BuchweitzRow(n, len(sums), bound, g >= 2 and len(sums) > bound))
        first = next((row.n for row in rows if row.obstructed), None)
        return BuchweitzVerdict(tuple(rows), first is not None, first)

    # ----- dunder -----
    def text(self) -> str:
        return ",".join(str(a) for a in self._generators)

    def __repr__(self):
        return f"<{self.text()}>"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and other._generators == self._generators

    def __hash__(self):
        return hash(("NumericalSemigroup", self._generators))

    def __getstate__(self):
        return (self._generators, self._table.tolist())

    def __setstate__(self, state):
        generators, table = state
        self.__init__(generators, np.array(table, dtype=bool))


def from_generators(generators: Iterable[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(generators)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse ``"4,7,10"``, ``"4 7 10"`` or ``"<4,7,10>"``."""
    body = text.strip().strip("<>").replace(",", " ")
    tokens = body.split()
    if len(tokens) == 0:
        raise EmptyInput(f"no generators in {text!r}")
    try:
        gens = [int(tok) for tok in tokens]
    except ValueError:
        raise InputError(f"cannot parse generators from {text!r}")
    return NumericalSemigroup.from_generators(gens)


def read_batch(path: str) -> List[Tuple[int, str]]:
    """Read a batch file: one semigroup per line, ``#`` starts a comment.

    Returns:
        list: ``(line_number, text)`` for every non-empty line; parsing is left to the caller.
    """
    if not os.path.isfile(path):
        raise InputError(f"batch file {path} does not exist")
    entries = []
    with open(path, "r") as f:
        for lineno, line in enumerate(f, start=1):
            text = line.split("#", 1)[0].strip()
            if text:
                entries.append((lineno, text))
    return entries


def enumerate_semigroups(genus: int,
                         symmetric: bool = False,
                         complete_intersection: bool = False,
                         settings: Optional[Settings] = None) -> Iterator[NumericalSemigroup]:
    """All semigroups of the given genus, level by level in the semigroup tree.

    Args:
        genus: target genus.
        symmetric: keep only symmetric semigroups.
        complete_intersection: keep only complete intersections (implies symmetric).
        settings: supplies ``max_genus``; defaults to the environment.
    """
    settings = settings or load_settings()
    if genus < 0:
        raise NegativeInput(f"genus must be nonnegative, got {genus}")
    if genus > settings.max_genus:
        raise BoundExceeded(f"genus {genus} exceeds the enumeration bound {settings.max_genus} (WMOD_MAX_GENUS)")
    return _walk_tree(genus, symmetric or complete_intersection, complete_intersection)


def _walk_tree(genus: int, symmetric: bool, complete_intersection: bool) -> Iterator[NumericalSemigroup]:
    from .presentation import is_complete_intersection

    level = [NumericalSemigroup.from_generators([1])]
    for depth in range(genus):
        level = [child for node in level for child in node.children()]
        logger.debug("semigroup tree level %d: %d nodes", depth + 1, len(level))
    for S in level:
        if symmetric and not S.is_symmetric():
            continue
        if complete_intersection and not is_complete_intersection(S):
            continue
        yield S


def codim_two_family(tau: int) -> NumericalSemigroup:
    """The family ``<4, 3+4t, 6+4t>``."""
    if tau < 1:
        raise OutOfRange(f"family parameter must be at least 1, got {tau}")
    return NumericalSemigroup.from_generators([4, 3 + 4 * tau, 6 + 4 * tau])


def dyadic_family(k: int, tau: int) -> NumericalSemigroup:
    """The family ``<2^k, 1+2^k t, 2+2^k t, ..., 2^(k-1)+2^k t>``."""
    if k < 1 or tau < 1:
        raise OutOfRange(f"family parameters must be at least 1, got k={k}, tau={tau}")
    m = 2**k
    return NumericalSemigroup.from_generators([m] + [2**i + m * tau for i in range(k)])
