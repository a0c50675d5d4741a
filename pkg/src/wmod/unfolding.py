"""Negative-weight unfolding of a complete-intersection presentation.

Every relation ``G_j`` of weight ``s_j`` is perturbed by ``-sum c_{s_j,m} X^{Pi(m)}``
over the members ``m < s_j``, ``Pi(m)`` the shrunk representative. Coefficients
absorbed by the first-order action of coordinate changes are normalized to zero;
the remaining ones are the weighted coordinates of the moduli space.
"""
import logging
import warnings
from collections import namedtuple
from dataclasses import dataclass, replace
from enum import Enum
from typing import List, NamedTuple, Tuple

from .cotangent import GradedBlock, JacobianOnCurve, graded_block
from .errors import DegenerateNormalization, Hyperelliptic, NotCompleteIntersection, NotSymmetric, WmodWarning
from .monomialbasis import shrunk_representative
from .presentation import ExponentVector, ToricPresentation, char_is_admissible, minimal_presentation
from .semigroup import NumericalSemigroup
from .utils.fields import ScalarField, as_field
from .utils.polyutils import render_signed

logger = logging.getLogger(__name__)

TrivialActionBlock = GradedBlock

Substitution = namedtuple("Substitution", ["target", "source"])


class CoefficientStatus(str, Enum):
    FREE = "free"
    NORMALIZED = "normalized_to_zero"


@dataclass(frozen=True)
class UnfoldCoefficient:
    relation_index: int
    relation_weight: int
    monomial: ExponentVector
    status: CoefficientStatus = CoefficientStatus.FREE

    @property
    def monomial_weight(self) -> int:
        return self.monomial.weight

    @property
    def weight(self) -> int:
        return self.relation_weight - self.monomial.weight

    @property
    def name(self) -> str:
        return f"c_{{{self.relation_weight},{self.monomial_weight}}}"

    @property
    def is_free(self) -> bool:
        return self.status is CoefficientStatus.FREE

    def term(self) -> str:
        mono = self.monomial.render()
        return self.name if mono == "1" else f"{self.name}*{mono}"

    def to_json(self) -> dict:
        return {
            "relation": self.relation_index,
            "s": self.relation_weight,
            "m": self.monomial_weight,
            "weight": self.weight,
            "monomial": self.monomial.to_json(),
            "status": self.status.value,
        }


@dataclass(frozen=True)
class UnfoldedSystem:
    presentation: ToricPresentation
    coefficients: Tuple[UnfoldCoefficient, ...]
    warnings: Tuple[str, ...] = ()

    def by_relation(self, j: int) -> List[UnfoldCoefficient]:
        return [c for c in self.coefficients if c.relation_index == j]

    @property
    def moduli_coordinates(self) -> Tuple[UnfoldCoefficient, ...]:
        return tuple(c for c in self.coefficients if c.is_free)

    def weights(self) -> List[int]:
        return sorted(c.weight for c in self.moduli_coordinates)

    def equations(self) -> List[str]:
        lines = []
        for j, G in enumerate(self.presentation.generators):
            terms = [(1, G.plus.render()), (-1, G.minus.render())]
            terms += [(-1, c.term()) for c in self.by_relation(j) if c.is_free]
            lines.append(render_signed(terms))
        return lines

    def render(self) -> str:
        return "\n".join(self.equations())

    def to_json(self) -> dict:
        return {
            "coefficients": [c.to_json() for c in self.coefficients],
            "free": len(self.moduli_coordinates),
            "total": len(self.coefficients),
            "equations": self.equations(),
        }


def unfold(P: ToricPresentation) -> UnfoldedSystem:
    notes = []
    if not P.is_complete_intersection:
        msg = f"unfolding a presentation of {P.semigroup!r} that is not a complete intersection"
        warnings.warn(msg, WmodWarning)
        notes.append(msg)
    S = P.semigroup
    coeffs = []
    for j, G in enumerate(P.generators):
        for m in S.nongaps(G.weight - 1):
            coeffs.append(UnfoldCoefficient(j, G.weight, shrunk_representative(S, m)))
    logger.debug("unfolding of %r: %d coefficients", S, len(coeffs))
    return UnfoldedSystem(P, tuple(coeffs), tuple(notes))


def trivial_action_matrix(P: ToricPresentation, d: int, F=0) -> TrivialActionBlock:
    """First-order action of ``X_{a_i} -> X_{a_i} + eps * Z_{a_i + d}`` on the degree-``d`` slots.

    The block coincides with the Jacobian block ``M_d``; over GF(p) its entries
    are reduced mod p.
    """
    field = as_field(F)
    block = graded_block(JacobianOnCurve(P, strict=False), d)
    p = field.characteristic
    if p:
        block = block._replace(matrix=tuple(tuple(x % p for x in row) for row in block.matrix))
    return block


def trivial_action_rank(P: ToricPresentation, F=0) -> int:
    field = as_field(F)
    if not P.generators:
        return 0
    J = JacobianOnCurve(P, strict=False)
    total = 0
    for d in range(-max(P.relation_weights), 0):
        block = graded_block(J, d)
        total += field.rank(block.matrix, len(block.substitutions))
    return total


def linear_substitutions(S: NumericalSemigroup) -> List[Substitution]:
    """The weight-lowering linear changes ``X_{a_i} -> X_{a_i} + d X_{a_j} + d_0``, ``a_j < a_i``.

    A constant shift is recorded with source 0.
    """
    gens = S.minimal_generators
    return [Substitution(a, b) for i, a in enumerate(gens) for b in (0,) + gens[:i]]


def normalize(U: UnfoldedSystem, F=0) -> UnfoldedSystem:
    """Set to zero the coefficients reachable by the trivial action.

    In every negative degree the transposed block is row-reduced with slots in
    relation order; pivot slots are normalized. Under a characteristic dividing
    an exponent a rank drop raises ``DegenerateNormalization``.
    """
    field: ScalarField = as_field(F)
    P = U.presentation
    S = P.semigroup
    notes = list(U.warnings)
    admissible = char_is_admissible(P, field.characteristic)
    reference = ScalarField(0)
    normalized = set()
    dropped = []
    if P.generators:
        J = JacobianOnCurve(P, strict=False)
        for d in range(-max(P.relation_weights), 0):
            block = graded_block(J, d)
            if not block.slots or not block.substitutions:
                continue
            nslots = len(block.slots)
            transpose = [[block.matrix[r][c] for r in range(nslots)] for c in range(len(block.substitutions))]
            pivots = field.rref_pivots(transpose, nslots)
            if field.characteristic and len(pivots) < reference.rank(block.matrix, len(block.substitutions)):
                dropped.append(d)
            for col in pivots:
                j = block.slots[col]
                normalized.add((j, P.generators[j].weight + d))
    if dropped:
        if not admissible:
            raise DegenerateNormalization(
                f"characteristic {field.characteristic} lowers the trivial-action rank of {S!r} in degrees {dropped}")
        logger.debug("%r: rank drop over %r in degrees %s", S, field, dropped)
    if not admissible:
        msg = f"characteristic {field.characteristic} is not admissible for {S!r}; normalization kept its rank"
        if msg not in notes:
            warnings.warn(msg, WmodWarning)
            notes.append(msg)
    coeffs = []
    for c in U.coefficients:
        status = CoefficientStatus.NORMALIZED if (c.relation_index, c.monomial_weight) in normalized \
            else CoefficientStatus.FREE
        coeffs.append(replace(c, status=status))
    return UnfoldedSystem(P, tuple(coeffs), tuple(notes))


class ModuliReport(NamedTuple):
    semigroup: NumericalSemigroup
    weights: Tuple[int, ...]
    system: UnfoldedSystem
    characteristic: int = 0

    @property
    def dimension(self) -> int:
        return len(self.weights) - 1

    @property
    def warnings(self) -> Tuple[str, ...]:
        return self.system.warnings

    def render(self) -> str:
        return "P(" + ",".join(str(w) for w in self.weights) + ")"

    def to_json(self) -> dict:
        return {
            "characteristic": self.characteristic,
            "weights": list(self.weights),
            "dimension": self.dimension,
            "projective_space": self.render(),
            "coordinates": [c.name for c in self.system.moduli_coordinates],
            "equations": self.system.equations(),
        }


def moduli_report(S: NumericalSemigroup, F=0) -> ModuliReport:
    """The weighted projective space of negative-weight deformations."""
    field = as_field(F)
    if not S.is_symmetric():
        raise NotSymmetric(f"{S!r} is not symmetric")
    if S.is_hyperelliptic():
        raise Hyperelliptic(f"{S!r} is hyperelliptic")
    P = minimal_presentation(S)
    if not P.is_complete_intersection:
        raise NotCompleteIntersection(f"{S!r} is not a complete intersection")
    system = normalize(unfold(P), field)
    return ModuliReport(S, tuple(system.weights()), system, field.characteristic)
