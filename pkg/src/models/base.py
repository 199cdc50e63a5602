from typing import Any

import numpy as np


class MatrixBacked:
    """
    Base class for immutable values backed by a square integer matrix.

    The matrix is copied on construction, cast to ``int64`` and marked
    read-only, so instances can be shared freely between workers. Equality
    and hashing go through the raw matrix bytes.

    Attributes:
        repr_cols (tuple): Names of properties shown in the `__repr__` output.
    """

    __slots__ = ("_matrix",)

    repr_cols: tuple[str, ...] = tuple()

    def __init__(self, matrix: Any):
        array = np.array(matrix, dtype=np.int64)
        if array.size == 0:
            array = array.reshape(0, 0)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {array.shape}")
        if not np.array_equal(array, -array.T):
            raise ValueError("matrix is not skew-symmetric")
        array.flags.writeable = False
        self._matrix = array

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def to_bytes(self) -> bytes:
        return self._matrix.shape[0].to_bytes(4, "little") + self._matrix.tobytes()

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return np.array_equal(self._matrix, other._matrix)

    def __hash__(self) -> int:
        return hash(self.to_bytes())

    def __repr__(self) -> str:
        """
        Generate a string representation of the value.

        :return: The class name followed by the properties listed in `repr_cols`.
        :rtype: str
        """
        cols = [f"{name}={repr(getattr(self, name))}" for name in self.repr_cols]
        return f"<{self.__class__.__name__}({', '.join(cols)})>"
