"""
Matrix models of the block embedding sl_m < sl_N.

Basis order is fixed: the subalgebra first (off-diagonal E_ij of the upper-left block,
then the Cartan differences H_i = E_ii - E_{i+1,i+1}), then the complement (every
other E_ij, then trace-zero diagonals D_t that are trace-orthogonal to the block).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from rigid_jets.constants import Matrix
from rigid_jets.exceptions import DimensionMismatch, InvalidModel
from rigid_jets.jetcore import linalg
from rigid_jets.jetcore.scalars import QQ_FIELD

Root = Tuple[int, ...]


def zero_matrix(size: int) -> Matrix:
    return [[Fraction(0)] * size for _ in range(size)]


def elementary(size: int, i: int, j: int) -> Matrix:
    matrix = zero_matrix(size)
    matrix[i][j] = Fraction(1)
    return matrix


def diagonal(entries: Sequence[Fraction]) -> Matrix:
    matrix = zero_matrix(len(entries))
    for i, value in enumerate(entries):
        matrix[i][i] = Fraction(value)
    return matrix


def is_zero(matrix: Matrix) -> bool:
    return all(v == 0 for row in matrix for v in row)


def trace_product(a: Matrix, b: Matrix) -> Fraction:
    return sum((a[i][j] * b[j][i] for i in range(len(a)) for j in range(len(a))), Fraction(0))


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """
    The commutator AB - BA, exact.
    """
    if len(a) != len(b) or any(len(row) != len(a) for row in a) or any(len(row) != len(b) for row in b):
        raise DimensionMismatch("Brackets need square matrices of equal size")
    ab = linalg.mat_mul(QQ_FIELD, a, b)
    ba = linalg.mat_mul(QQ_FIELD, b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def root_of(size: int, i: int, j: int) -> Root:
    return tuple((1 if t == i else 0) - (1 if t == j else 0) for t in range(size))


def is_simple_root(root: Optional[Root]) -> bool:
    """
    e_i - e_{i+1}, the simple roots of sl_N for the upper-triangular Borel.
    """
    if root is None:
        return False
    nonzero = [t for t, v in enumerate(root) if v]
    return len(nonzero) == 2 and root[nonzero[0]] == 1 and nonzero[1] == nonzero[0] + 1


@dataclass(frozen=True)
class LieAlgebraModel:
    """
    sl_N with the block subalgebra sl_m and its trace-orthogonal complement.

    `roots[i]` is the root of basis vector i, or None for diagonal basis vectors.
    """

    size: int
    small: int
    basis: Tuple[Matrix, ...]
    labels: Tuple[str, ...]
    roots: Tuple[Optional[Root], ...]
    subalgebra: Tuple[int, ...]
    complement: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @cached_property
    def _gram_inverse(self) -> Matrix:
        gram = [[trace_product(a, b) for b in self.basis] for a in self.basis]
        return linalg.inverse(QQ_FIELD, gram)

    def killing_gram(self) -> Matrix:
        """
        Gram matrix of the Killing form B(X, Y) = 2N tr(XY) in the model basis.
        """
        scale = 2 * self.size
        return [[scale * trace_product(a, b) for b in self.basis] for a in self.basis]

    def from_coordinates(self, coords: Sequence[Fraction]) -> Matrix:
        result = zero_matrix(self.size)
        for coefficient, element in zip(coords, self.basis):
            if coefficient:
                for i in range(self.size):
                    for j in range(self.size):
                        result[i][j] += coefficient * element[i][j]
        return result

    def coordinates(self, matrix: Matrix) -> List[Fraction]:
        """
        Coordinates in the model basis, read off with the trace form.

        Raises:
            InvalidModel: If the matrix is not in sl_N
        """
        pairings = [trace_product(element, matrix) for element in self.basis]
        coords = [sum((g * p for g, p in zip(row, pairings)), Fraction(0)) for row in self._gram_inverse]
        if self.from_coordinates(coords) != [list(row) for row in matrix]:
            raise InvalidModel("Matrix does not lie in sl_N")
        return coords

    def in_subalgebra(self, matrix: Matrix) -> bool:
        coords = self.coordinates(matrix)
        return all(coords[i] == 0 for i in self.complement)

    def in_complement(self, matrix: Matrix) -> bool:
        coords = self.coordinates(matrix)
        return all(coords[i] == 0 for i in self.subalgebra)

    def ad_matrix(self, element: Matrix) -> Matrix:
        """
        Matrix of ad_X in the model basis; column j holds the coordinates of [X, basis_j].
        """
        columns = [self.coordinates(bracket(element, b)) for b in self.basis]
        return [[columns[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def check_bracket_closure(self) -> bool:
        for a in self.basis:
            for b in self.basis:
                try:
                    self.coordinates(bracket(a, b))
                except InvalidModel:
                    return False
        return True

    def check_complement_invariance(self) -> bool:
        return all(
            self.in_complement(bracket(self.basis[g], self.basis[c]))
            for g in self.subalgebra
            for c in self.complement
        )


def build_sl_embedding(small: int, big: int) -> LieAlgebraModel:
    """
    The model of sl_small embedded as the upper-left block of sl_big.

    Raises:
        InvalidModel: Unless 2 <= small < big, or if an invariant check fails
    """
    if small < 2 or small >= big:
        raise InvalidModel(f"Need 2 <= m < N for the embedding sl_m < sl_N, got m={small}, N={big}")

    basis: List[Matrix] = []
    labels: List[str] = []
    roots: List[Optional[Root]] = []

    def add(matrix: Matrix, label: str, root: Optional[Root]) -> int:
        basis.append(matrix)
        labels.append(label)
        roots.append(root)
        return len(basis) - 1

    subalgebra = []
    for i in range(small):
        for j in range(small):
            if i != j:
                subalgebra.append(add(elementary(big, i, j), f"E{i + 1}{j + 1}", root_of(big, i, j)))
    for i in range(small - 1):
        entries = [Fraction(0)] * big
        entries[i], entries[i + 1] = Fraction(1), Fraction(-1)
        subalgebra.append(add(diagonal(entries), f"H{i + 1}", None))

    complement = []
    for i in range(big):
        for j in range(big):
            if i != j and (i >= small or j >= small):
                complement.append(add(elementary(big, i, j), f"E{i + 1}{j + 1}", root_of(big, i, j)))
    for t in range(small, big):
        entries = [Fraction(1)] * t + [Fraction(-t)] + [Fraction(0)] * (big - t - 1)
        complement.append(add(diagonal(entries), f"D{t + 1}", None))

    model = LieAlgebraModel(
        size=big,
        small=small,
        basis=tuple(basis),
        labels=tuple(labels),
        roots=tuple(roots),
        subalgebra=tuple(subalgebra),
        complement=tuple(complement),
    )
    if len(subalgebra) + len(complement) != big * big - 1:
        raise InvalidModel("Subalgebra and complement do not span sl_N")
    if not model.check_bracket_closure():
        raise InvalidModel("Basis is not closed under brackets")
    if not model.check_complement_invariance():
        raise InvalidModel("Complement is not invariant under the subalgebra")
    return model
