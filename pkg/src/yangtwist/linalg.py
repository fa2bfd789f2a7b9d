"""Dense matrices over exact scalars or spectral polynomials, with labeled bases.

Rows and columns carry basis labels (integers for a single factor, ``(l, k)``
pairs on a two-fold tensor product, triples on three factors).  Column ``j``
holds the image of basis vector ``cols[j]``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .exact import PoleError, entry_to_json, format_rational

ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    __slots__ = ("rows", "cols", "entries", "_row_index", "_col_index")

    def __init__(self, rows: Sequence[Hashable], cols: Sequence[Hashable],
                 entries: Sequence[Sequence]):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.entries = tuple(tuple(r) for r in entries)
        if len(self.entries) != len(self.rows) or any(
                len(r) != len(self.cols) for r in self.entries):
            raise ValueError("entries do not match the basis sizes")
        self._row_index = None
        self._col_index = None

    # construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols) -> "Matrix":
        return cls(rows, cols, [[ZERO] * len(cols) for _ in rows])

    @classmethod
    def identity(cls, basis) -> "Matrix":
        basis = tuple(basis)
        n = len(basis)
        return cls(basis, basis, [[ONE if i == j else ZERO for j in range(n)]
                                  for i in range(n)])

    @classmethod
    def diagonal(cls, basis, values: Iterable) -> "Matrix":
        basis = tuple(basis)
        vals = list(values)
        n = len(basis)
        return cls(basis, basis, [[vals[i] if i == j else ZERO for j in range(n)]
                                  for i in range(n)])

    @classmethod
    def from_action(cls, cols, rows, action: Callable[[Hashable], Mapping]) -> "Matrix":
        """Assemble a matrix column by column from ``action(col) -> {row: coeff}``.

        Nonzero coefficients on labels outside ``rows`` raise ``ValueError``.
        """
        rows, cols = tuple(rows), tuple(cols)
        index = {r: i for i, r in enumerate(rows)}
        grid = [[ZERO] * len(cols) for _ in rows]
        for j, c in enumerate(cols):
            for target, coeff in action(c).items():
                if not coeff:
                    continue
                i = index.get(target)
                if i is None:
                    raise ValueError(f"image of {c} has a component on {target}, "
                                     "which is outside the row basis")
                grid[i][j] = grid[i][j] + coeff
        return cls(rows, cols, grid)

    # access ---------------------------------------------------------------

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def row_index(self, label) -> int:
        if self._row_index is None:
            self._row_index = {r: i for i, r in enumerate(self.rows)}
        return self._row_index[label]

    def col_index(self, label) -> int:
        if self._col_index is None:
            self._col_index = {c: i for i, c in enumerate(self.cols)}
        return self._col_index[label]

    def at(self, row, col):
        return self.entries[self.row_index(row)][self.col_index(col)]

    def column(self, col) -> dict:
        j = self.col_index(col)
        return {r: self.entries[i][j] for i, r in enumerate(self.rows)
                if self.entries[i][j]}

    def map(self, fn) -> "Matrix":
        return Matrix(self.rows, self.cols, [[fn(x) for x in r] for r in self.entries])

    # algebra --------------------------------------------------------------

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("basis mismatch in matrix product")
        n, m = len(self.rows), len(other.cols)
        b = other.entries
        out = []
        for i in range(n):
            acc = [ZERO] * m
            for k, a in enumerate(self.entries[i]):
                if not a:
                    continue
                for j, x in enumerate(b[k]):
                    if x:
                        acc[j] = acc[j] + a * x
            out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def _check_same(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("basis mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.rows, self.cols,
                      [[x + y for x, y in zip(r, s)]
                       for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.rows, self.cols,
                      [[x - y for x, y in zip(r, s)]
                       for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    __hash__ = None

    def first_difference(self, other: "Matrix"):
        """First ``(row, col, mine, theirs)`` where the matrices differ, else ``None``."""
        self._check_same(other)
        for i, (r, s) in enumerate(zip(self.entries, other.entries)):
            for j, (x, y) in enumerate(zip(r, s)):
                if x != y:
                    return self.rows[i], self.cols[j], x, y
        return None

    def is_diagonal(self) -> bool:
        return self.rows == self.cols and all(
            not x for i, r in enumerate(self.entries) for j, x in enumerate(r) if i != j)

    def diagonal_entries(self) -> list:
        return [self.entries[i][i] for i in range(min(self.shape))]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, list(zip(*self.entries)) if self.entries
                      else [[] for _ in self.cols])

    def relabel(self, rows=None, cols=None) -> "Matrix":
        return Matrix(self.rows if rows is None else rows,
                      self.cols if cols is None else cols, self.entries)

    def reorder(self, rows, cols) -> "Matrix":
        """Same operator with rows/cols permuted into the given label order."""
        return Matrix(rows, cols, [[self.at(r, c) for c in cols] for r in rows])

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan elimination (scalar entries only)."""
        n = len(self.rows)
        if n != len(self.cols):
            raise ValueError("only square matrices can be inverted")
        a = [list(r) + [ONE if i == j else ZERO for j in range(n)]
             for i, r in enumerate(self.entries)]
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c] != 0), None)
            if p is None:
                raise PoleError("matrix is singular", where=c)
            a[c], a[p] = a[p], a[c]
            piv = a[c][c]
            a[c] = [x / piv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c] != 0:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return Matrix(self.cols, self.rows, [r[n:] for r in a])

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        """TensorOperator schema: polynomials as coefficient arrays."""
        data = {}
        if self.rows == self.cols:
            data["basis"] = [_label_json(b) for b in self.rows]
        else:
            data["row_basis"] = [_label_json(b) for b in self.rows]
            data["col_basis"] = [_label_json(b) for b in self.cols]
        data["entries"] = [[entry_to_json(x) for x in r] for r in self.entries]
        return data

    def to_rep_json(self) -> dict:
        """RepMatrix schema: ``{rows, cols, entries}`` with scalar strings."""
        return {"rows": len(self.rows), "cols": len(self.cols),
                "entries": [[format_rational(x) for x in r] for r in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "Matrix":
        from .exact import SpectralPoly

        if "basis" in data:
            rows = cols = [_label_from_json(b) for b in data["basis"]]
        else:
            rows = [_label_from_json(b) for b in data["row_basis"]]
            cols = [_label_from_json(b) for b in data["col_basis"]]
        entries = []
        for r in data["entries"]:
            row = []
            for e in r:
                p = SpectralPoly.from_json(e)
                row.append(p.coeffs[0] if p.degree == 0 else (ZERO if p.degree < 0 else p))
            entries.append(row)
        return cls(rows, cols, entries)

    def __repr__(self):
        return f"Matrix({len(self.rows)}x{len(self.cols)})"


def _label_json(b):
    return list(b) if isinstance(b, tuple) else b


def _label_from_json(b):
    return tuple(b) if isinstance(b, list) else b


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; labels become pairs in lexicographic order."""
    rows = [(r, s) for r in a.rows for s in b.rows]
    cols = [(c, d) for c in a.cols for d in b.cols]
    out = []
    for ra in a.entries:
        for rb in b.entries:
            out.append([x * y if x and y else ZERO for x in ra for y in rb])
    return Matrix(rows, cols, out)


def flip_conjugate(m: Matrix, rows=None, cols=None) -> Matrix:
    """``P . m . P`` for the tensor flip ``(a, b) -> (b, a)``.

    ``m`` acts on ``W2 (x) W1``; the result acts on ``W1 (x) W2`` with rows and
    columns in the requested order (default: flipped labels, sorted).
    """
    if rows is None:
        rows = sorted((b, a) for a, b in m.rows)
    if cols is None:
        cols = sorted((b, a) for a, b in m.cols)
    return Matrix(rows, cols, [[m.at((r[1], r[0]), (c[1], c[0])) for c in cols]
                               for r in rows])


def flip_matrix(basis12, basis21=None) -> Matrix:
    """Permutation ``P: W1 (x) W2 -> W2 (x) W1`` sending ``(a, b)`` to ``(b, a)``."""
    basis12 = tuple(basis12)
    if basis21 is None:
        basis21 = tuple(sorted((b, a) for a, b in basis12))
    return Matrix.from_action(basis12, basis21, lambda v: {(v[1], v[0]): ONE})
