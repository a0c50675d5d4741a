"""Exact linear algebra over Q and GF(p) on top of sympy's DomainMatrix."""
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from ..errors import NotPrime

IntRows = Sequence[Sequence[int]]


def check_characteristic(characteristic: int) -> int:
    if isinstance(characteristic, bool) or not isinstance(characteristic, int):
        raise NotPrime(f"characteristic must be an integer, got {characteristic!r}")
    if characteristic != 0 and not isprime(characteristic):
        raise NotPrime(f"characteristic must be 0 or a prime, got {characteristic}")
    return characteristic


class ScalarField:
    """The prime field of a given characteristic: Q for 0, GF(p) otherwise.

    Integer matrices are lifted exactly. Over Q the matrix is built over ZZ and
    moved to the fraction field, so sympy's fraction-free elimination is used
    where it applies.
    """

    def __init__(self, characteristic: int = 0):
        self.characteristic = check_characteristic(characteristic)
        self.domain = QQ if characteristic == 0 else GF(characteristic)

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __eq__(self, other):
        return isinstance(other, ScalarField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("ScalarField", self.characteristic))

    def matrix(self, rows: IntRows, ncols: int) -> DomainMatrix:
        nrows = len(rows)
        if self.characteristic == 0:
            return DomainMatrix([[ZZ(int(x)) for x in row] for row in rows], (nrows, ncols), ZZ).to_field()
        p = self.characteristic
        dom = self.domain
        return DomainMatrix([[dom(int(x) % p) for x in row] for row in rows], (nrows, ncols), dom)

    def rank(self, rows: IntRows, ncols: int = None) -> int:
        ncols = (len(rows[0]) if len(rows) else 0) if ncols is None else ncols
        if len(rows) == 0 or ncols == 0:
            return 0
        return int(self.matrix(rows, ncols).rank())

    def rref(self, rows: IntRows, ncols: int = None) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
        """Reduced row echelon form.

        Returns:
            tuple: entries as ``Fraction`` (residues for GF(p)) and the pivot columns.
        """
        ncols = (len(rows[0]) if len(rows) else 0) if ncols is None else ncols
        if len(rows) == 0 or ncols == 0:
            return [list(map(Fraction, row)) for row in rows], ()
        reduced, pivots = self.matrix(rows, ncols).rref()
        mat = reduced.to_Matrix()
        entries = [[Fraction(int(mat[i, j].p), int(mat[i, j].q)) for j in range(ncols)] for i in range(len(rows))]
        if self.characteristic != 0:
            p = self.characteristic
            entries = [[Fraction(int(x) % p) for x in row] for row in entries]
        return entries, tuple(int(c) for c in pivots)

    def rref_pivots(self, rows: IntRows, ncols: int = None) -> Tuple[int, ...]:
        ncols = (len(rows[0]) if len(rows) else 0) if ncols is None else ncols
        if len(rows) == 0 or ncols == 0:
            return ()
        _, pivots = self.matrix(rows, ncols).rref()
        return tuple(int(c) for c in pivots)


def as_field(field) -> ScalarField:
    """Accept a ``ScalarField`` or a bare characteristic."""
    if isinstance(field, ScalarField):
        return field
    return ScalarField(0 if field is None else field)
