from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from dlmkit.errors import DlmkitError


@dataclass(frozen=True, slots=True)
class IntSymMatrix:
    """Dense symmetric matrix of Python integers; entries are kept exactly as constructed."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise DlmkitError(f"Matrix is not {self.n}x{self.n}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise DlmkitError(f"Matrix is not symmetric at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntSymMatrix":
        return cls(len(rows), tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntSymMatrix":
        n = len(values)
        return cls(n, tuple(tuple(int(values[i]) if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def identity(cls, n: int) -> "IntSymMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def zero(cls, n: int) -> "IntSymMatrix":
        return cls.diagonal([0] * n)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.entries]

    def max_abs_entry(self) -> int:
        return max((abs(x) for row in self.entries for x in row), default=0)

    def principal_submatrix(self, indices: Iterable[int]) -> "IntSymMatrix":
        keep = sorted(set(indices))
        return IntSymMatrix(len(keep), tuple(tuple(self.entries[i][j] for j in keep) for i in keep))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=float).reshape(self.n, self.n)
