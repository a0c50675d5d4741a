import logging
import warnings
from collections import namedtuple
from typing import Dict, List, NamedTuple, Tuple

import numpy as np

from .errors import NonVanishingTail, NotCompleteIntersection, WmodWarning
from .presentation import ToricPresentation, char_is_admissible, minimal_presentation
from .semigroup import NumericalSemigroup
from .utils.fields import ScalarField, as_field

logger = logging.getLogger(__name__)

JacobianEntry = namedtuple("JacobianEntry", ["coefficient", "weight"])

# rows index relations (slots of an unfolding), columns index variables (substitutions)
GradedBlock = namedtuple("GradedBlock", ["degree", "slots", "substitutions", "matrix"])

T1Piece = namedtuple("T1Piece", ["degree", "ambient", "rank", "dim"])


class JacobianOnCurve:
    """Partial derivatives of the presentation restricted to the monomial curve.

    Entry ``(j, i)`` is ``coefficient * t^weight`` with coefficient
    ``plus_i - minus_i`` of relation ``j`` and weight ``s_j - a_i``
    (``None`` when the coefficient vanishes).
    """

    def __init__(self, presentation: ToricPresentation, strict: bool = True):
        if strict and not presentation.is_complete_intersection:
            raise NotCompleteIntersection(f"{presentation.semigroup!r} is not a complete intersection")
        self.presentation = presentation
        self.semigroup = presentation.semigroup
        self.generators = self.semigroup.minimal_generators
        self.relation_weights = presentation.relation_weights
        entries = []
        for G in presentation.generators:
            row = []
            for a, c in zip(self.generators, G.gradient()):
                row.append(JacobianEntry(c, G.weight - a if c != 0 else None))
            entries.append(tuple(row))
        self.entries: Tuple[Tuple[JacobianEntry, ...], ...] = tuple(entries)

    def coefficient_matrix(self) -> np.ndarray:
        return np.array([[e.coefficient for e in row] for row in self.entries], dtype=np.int64).reshape(
            len(self.entries), len(self.generators))

    def __repr__(self):
        return f"JacobianOnCurve({self.semigroup!r}, {len(self.entries)}x{len(self.generators)})"


def jacobian_on_curve(P: ToricPresentation) -> JacobianOnCurve:
    return JacobianOnCurve(P)


def graded_block(J: JacobianOnCurve, d: int) -> GradedBlock:
    """The degree-``d`` block ``M_d``.

    Rows: relations ``j`` with ``s_j + d`` in S. Columns: variables ``i`` with
    ``a_i + d`` in S.
    """
    S = J.semigroup
    slots = tuple(j for j, s in enumerate(J.relation_weights) if s + d >= 0 and S.is_member(s + d))
    subs = tuple(i for i, a in enumerate(J.generators) if a + d >= 0 and S.is_member(a + d))
    matrix = tuple(tuple(J.entries[j][i].coefficient for i in subs) for j in slots)
    return GradedBlock(d, slots, subs, matrix)


def t1_graded_piece(J: JacobianOnCurve, d: int, F=0) -> T1Piece:
    field = as_field(F)
    block = graded_block(J, d)
    rank = field.rank(block.matrix, len(block.substitutions))
    return T1Piece(d, len(block.slots), rank, len(block.slots) - rank)


class GradedT1Report(NamedTuple):
    semigroup: NumericalSemigroup
    characteristic: int
    pieces: Tuple[T1Piece, ...]
    warnings: Tuple[str, ...] = ()

    @property
    def by_degree(self) -> Dict[int, int]:
        return {p.degree: p.dim for p in self.pieces if p.dim}

    @property
    def negative_dim(self) -> int:
        return sum(p.dim for p in self.pieces if p.degree < 0)

    @property
    def nonnegative_dim(self) -> int:
        return sum(p.dim for p in self.pieces if p.degree >= 0)

    @property
    def tjurina(self) -> int:
        return self.negative_dim + self.nonnegative_dim

    @property
    def coordinate_weights(self) -> List[int]:
        """Weights ``-d`` of the negative pieces, with multiplicity, ascending."""
        return sorted(-p.degree for p in self.pieces if p.degree < 0 for _ in range(p.dim))

    def to_json(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "by_degree": [[d, n] for d, n in sorted(self.by_degree.items())],
            "negative_dim": self.negative_dim,
            "nonnegative_dim": self.nonnegative_dim,
            "tjurina": self.tjurina,
            "coordinate_weights": self.coordinate_weights,
            "warnings": list(self.warnings),
        }


def degree_window(J: JacobianOnCurve) -> Tuple[int, int]:
    top = max(J.relation_weights)
    return -top, J.semigroup.conductor + top


def t1_report(S: NumericalSemigroup, F=0) -> GradedT1Report:
    """All graded pieces of ``T^1`` for a complete-intersection monomial curve.

    Beyond the window every row and column is present, so the last piece
    must already vanish.
    """
    field: ScalarField = as_field(F)
    P = minimal_presentation(S)
    J = jacobian_on_curve(P)
    notes = []
    if not char_is_admissible(P, field.characteristic):
        msg = (f"characteristic {field.characteristic} divides an exponent of the presentation of {S!r}; "
               f"graded dimensions may differ from characteristic 0")
        warnings.warn(msg, WmodWarning)
        notes.append(msg)
    if not P.generators:
        return GradedT1Report(S, field.characteristic, (), tuple(notes))
    lo, hi = degree_window(J)
    pieces = tuple(t1_graded_piece(J, d, field) for d in range(lo, hi + 1))
    if pieces[-1].dim != 0:
        raise NonVanishingTail(f"T^1 of {S!r} does not vanish in degree {hi} over {field!r}")
    logger.debug("T1 of %r over %r: %d pieces", S, field, sum(1 for p in pieces if p.dim))
    return GradedT1Report(S, field.characteristic, pieces, tuple(notes))
