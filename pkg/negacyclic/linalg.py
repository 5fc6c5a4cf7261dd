"""
Linear algebra over F_p on numpy integer matrices.
"""
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .field import PrimeField

__all__ = ["mod_p", "rref", "rank", "left_kernel_vector", "FpBasis"]


def mod_p(matrix: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(matrix % p, dtype=np.int64)


def rref(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row-echelon form over F_p, zero rows dropped.

    Returns the reduced matrix and its pivot columns.
    """
    A = mod_p(np.array(matrix, dtype=np.int64, copy=True), p)
    if A.ndim != 2:
        raise ValueError(f"Expected a matrix, got shape {A.shape}")

    m, n = A.shape
    r = 0
    pivots: List[int] = []
    for c in range(n):
        if r == m:
            break
        nonzero = np.nonzero(A[r:, c])[0]
        if not nonzero.size:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        others = np.nonzero(A[:, c])[0]
        for i in others:
            if i != r:
                A[i] = (A[i] - A[i, c] * A[r]) % p
        pivots.append(c)
        r += 1

    return A[:r], pivots


def rank(matrix: np.ndarray, p: int) -> int:
    if not np.size(matrix):
        return 0
    return len(rref(matrix, p)[1])


def left_kernel_vector(matrix: np.ndarray, p: int) -> Optional[np.ndarray]:
    """
    A nonzero y with y @ matrix = 0 (mod p), or None when the rows are
    independent.

    The vector is read off the echelon form of the transpose: the first free
    column gets 1 and every pivot variable takes minus its entry there.
    """
    rows = matrix.shape[0]
    if not matrix.shape[1]:
        return np.eye(1, rows, dtype=np.int64)[0] if rows else None
    reduced, pivots = rref(matrix.T, p)
    free = next((c for c in range(rows) if c not in pivots), None)
    if free is None:
        return None
    y = np.zeros(rows, dtype=np.int64)
    y[free] = 1
    for row, c in zip(reduced, pivots):
        y[c] = -row[free] % p
    return y


class FpBasis:
    """
    A subspace of F_p^(4n) held as a reduced row-echelon basis.

    Columns are laid out by layer: coefficients of f0 first, then f1, f2 and
    f3, each block indexed by the power of x. With that order the echelon
    rows whose pivot falls in block k have zeros in every earlier block, so
    the blocks of a basis expose the torsion filtration of a code directly.
    """

    LAYERS = 4

    def __init__(self, matrix: np.ndarray, field: PrimeField, n: int) -> None:
        matrix = np.asarray(matrix, dtype=np.int64).reshape(-1, self.LAYERS * n)
        self.field = field
        self.n = n
        self.matrix, self.pivots = rref(matrix, field.p)

    @classmethod
    def span(
        cls, vectors: Iterable[Sequence[int]], field: PrimeField, n: int
    ) -> "FpBasis":
        rows = [np.asarray(vector, dtype=np.int64) for vector in vectors]
        if not rows:
            return cls(np.zeros((0, cls.LAYERS * n), dtype=np.int64), field, n)
        return cls(np.stack(rows), field, n)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def width(self) -> int:
        return self.LAYERS * self.n

    @property
    def rows(self) -> List[Tuple[int, ...]]:
        """
        Basis rows as codewords: n blocks of the four components (a, b, c, d)
        of each position.
        """
        n = self.n
        interleaved = self.matrix.reshape(-1, self.LAYERS, n).transpose(0, 2, 1)
        return [tuple(int(v) for v in row.reshape(-1)) for row in interleaved]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FpBasis):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.n, self.matrix.tobytes()))

    def __repr__(self) -> str:
        return f"<FpBasis dim={self.dim} of F_{self.p}^{self.width}>"

    def __len__(self) -> int:
        return self.dim

    def block_rows(self, layer: int) -> np.ndarray:
        """
        Basis rows whose pivot falls in the given layer.
        """
        lo, hi = layer * self.n, (layer + 1) * self.n
        selected = [i for i, c in enumerate(self.pivots) if lo <= c < hi]
        return self.matrix[selected]

    def layer_span(self, layer: int) -> List[np.ndarray]:
        """
        Layer parts of the elements vanishing on every earlier layer.
        """
        lo, hi = layer * self.n, (layer + 1) * self.n
        return list(self.block_rows(layer)[:, lo:hi])

    def solve_prefix(self, target: Sequence[int]) -> Optional[np.ndarray]:
        """
        An element of the subspace whose leading coordinates equal target,
        or None when no such element exists.

        The element is the combination fixed by the pivots inside the prefix,
        so the answer does not depend on how the subspace was presented.
        """
        target = np.asarray(target, dtype=np.int64) % self.p
        size = target.shape[0]
        element = np.zeros(self.width, dtype=np.int64)
        for row, c in zip(self.matrix, self.pivots):
            if c >= size:
                break
            if target[c]:
                element = (element + target[c] * row) % self.p
        if not np.array_equal(element[:size], target):
            return None
        return element

    def contains(self, vector: Sequence[int]) -> bool:
        vector = np.asarray(vector, dtype=np.int64) % self.p
        return self.solve_prefix(vector) is not None

    def includes(self, other: "FpBasis") -> bool:
        return all(self.contains(row) for row in other.matrix)

    def restricted_rank(self, columns: Sequence[int]) -> int:
        if not self.dim or not len(columns):
            return 0
        return rank(self.matrix[:, list(columns)], self.p)

    def coordinates(self, vector: Sequence[int]) -> np.ndarray:
        """
        Coefficients expressing a member vector in the echelon basis.
        """
        vector = np.asarray(vector, dtype=np.int64) % self.p
        return np.array([vector[c] for c in self.pivots], dtype=np.int64)
