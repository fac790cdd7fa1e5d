"""Exact integer symmetric bilinear forms.

Everything here is arbitrary-precision: matrices hold Python ints, signatures
are computed by congruence diagonalization over the rationals, and
determinants use fraction-free Bareiss elimination.  No float ever appears, so
no overflow or rounding can occur at any input size.

Forms can be described in a small text grammar::

    H                   one hyperbolic plane [[0,1],[1,0]]
    3H                  direct sum of three hyperbolic planes
    diag(1,-1,-1)       diagonal form
    matrix [[0,1],[1,0]]  explicit symmetric matrix

"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence


class FormError(ValueError):
    """Invalid construction or use of a form or matrix."""


class FormParseError(FormError):
    """Text that does not match the form grammar."""


class DegenerateFormError(FormError):
    """Raised when an operation needs a nonzero determinant."""


def _check_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormError(f"matrix entries must be integers, got {value!r}")
    return value


class IntegerMatrix:
    """Immutable dense matrix over the integers."""

    __slots__ = ("_data", "_rows", "_cols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(_check_int(x) for x in row) for row in rows)
        self._rows = len(data)
        self._cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != self._cols:
                raise FormError("matrix rows must all have the same length")
        self._data = data

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def block_diagonal(cls, blocks: Sequence["IntegerMatrix"]) -> "IntegerMatrix":
        size = sum(b.rows for b in blocks)
        out = [[0] * size for _ in range(size)]
        offset = 0
        for b in blocks:
            if b.rows != b.cols:
                raise FormError("block_diagonal needs square blocks")
            for i in range(b.rows):
                for j in range(b.cols):
                    out[offset + i][offset + j] = b.entry(i, j)
            offset += b.rows
        return cls(out)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    def entry(self, i: int, j: int) -> int:
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def entries(self) -> tuple[tuple[int, ...], ...]:
        return self._data

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self._data]

    @property
    def is_symmetric(self) -> bool:
        if self._rows != self._cols:
            return False
        return all(
            self._data[i][j] == self._data[j][i]
            for i in range(self._rows)
            for j in range(i + 1, self._cols)
        )

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            [[self._data[i][j] for i in range(self._rows)] for j in range(self._cols)]
        )

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self._cols != other._rows:
            raise FormError("matrix dimensions do not match for multiplication")
        return IntegerMatrix(
            [
                [
                    sum(self._data[i][k] * other._data[k][j] for k in range(self._cols))
                    for j in range(other._cols)
                ]
                for i in range(self._rows)
            ]
        )

    def determinant(self) -> int:
        """Exact determinant by fraction-free Bareiss elimination."""
        if self._rows != self._cols:
            raise FormError("determinant needs a square matrix")
        n = self._rows
        if n == 0:
            return 1
        a = [list(row) for row in self._data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if pivot_row is None:
                    return 0
                a[k], a[pivot_row] = a[pivot_row], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    # exact division is guaranteed by the Bareiss identity
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"IntegerMatrix({[list(r) for r in self._data]!r})"


_HYPERBOLIC_ROWS = ((0, 1), (1, 0))


class IntersectionForm:
    """Symmetric integer matrix with cached structural metadata.

    Wraps an :class:`IntegerMatrix` and exposes the handful of invariants the
    obstruction engines need: parity, signature, determinant, unimodularity.
    Metadata is computed lazily and exactly.
    """

    def __init__(self, matrix: IntegerMatrix):
        if matrix.rows != matrix.cols:
            raise FormError("an intersection form must be square")
        if not matrix.is_symmetric:
            raise FormError("an intersection form must be symmetric")
        self._matrix = matrix

    @classmethod
    def hyperbolic(cls, k: int = 1) -> "IntersectionForm":
        """Direct sum of k copies of the hyperbolic plane."""
        if k < 1:
            raise FormError("hyperbolic sum needs k >= 1")
        h = IntegerMatrix(_HYPERBOLIC_ROWS)
        return cls(IntegerMatrix.block_diagonal([h] * k))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntersectionForm":
        if not entries:
            raise FormError("diagonal form needs at least one entry")
        n = len(entries)
        return cls(
            IntegerMatrix(
                [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
            )
        )

    @property
    def matrix(self) -> IntegerMatrix:
        return self._matrix

    @property
    def rank(self) -> int:
        return self._matrix.rows

    def evaluate(self, x: Sequence[int]) -> int:
        """Return Q(x, x)."""
        return self.pair(x, x)

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Return the bilinear pairing Q(x, y)."""
        n = self.rank
        if len(x) != n or len(y) != n:
            raise FormError(f"vectors must have length {n}")
        for v in x:
            _check_int(v)
        for v in y:
            _check_int(v)
        m = self._matrix
        return sum(x[i] * m.entry(i, j) * y[j] for i in range(n) for j in range(n))

    @cached_property
    def is_even(self) -> bool:
        """True when every diagonal entry is even (type II form)."""
        return all(self._matrix.entry(i, i) % 2 == 0 for i in range(self.rank))

    @cached_property
    def determinant(self) -> int:
        return self._matrix.determinant()

    @cached_property
    def is_unimodular(self) -> bool:
        return self.determinant in (1, -1)

    @cached_property
    def signature(self) -> int:
        """Signature by exact congruence diagonalization over Q.

        Sylvester's law of inertia makes the count of positive and negative
        diagonal entries independent of the diagonalization path.  Raises
        DegenerateFormError when the determinant vanishes.
        """
        if self.determinant == 0:
            raise DegenerateFormError("signature of a degenerate form is undefined")
        n = self.rank
        a = [[Fraction(self._matrix.entry(i, j)) for j in range(n)] for i in range(n)]
        positive = 0
        negative = 0
        for k in range(n):
            if a[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
                if pivot is not None:
                    self._swap_symmetric(a, k, pivot)
                else:
                    # all active diagonal entries vanish; a nonzero pairing
                    # a[i][j] exists because the form is nondegenerate
                    i, j = next(
                        (i, j)
                        for i in range(k, n)
                        for j in range(i + 1, n)
                        if a[i][j] != 0
                    )
                    for t in range(n):
                        a[i][t] += a[j][t]
                    for t in range(n):
                        a[t][i] += a[t][j]
                    if i != k:
                        self._swap_symmetric(a, k, i)
            d = a[k][k]
            if d > 0:
                positive += 1
            else:
                negative += 1
            for i in range(k + 1, n):
                f = a[i][k] / d
                if f == 0:
                    continue
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
                for j in range(k + 1, n):
                    a[j][i] = a[i][j]
                a[i][k] = Fraction(0)
                a[k][i] = Fraction(0)
        return positive - negative

    @staticmethod
    def _swap_symmetric(a: list[list[Fraction]], i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    @cached_property
    def hyperbolic_summands(self) -> int | None:
        """k when the matrix literally equals a block-diagonal sum kH, else None.

        This is a syntactic check, not an isometry test: a form isometric to
        kH in a rotated basis is not recognized.
        """
        n = self.rank
        if n == 0 or n % 2 != 0:
            return None
        m = self._matrix
        for i in range(n):
            for j in range(n):
                pair_block = i // 2 == j // 2
                expected = 1 if (pair_block and i != j) else 0
                if m.entry(i, j) != expected:
                    return None
        return n // 2

    def descriptor(self) -> str:
        """Canonical text form: "H", "kH", "diag(...)" or "matrix [[...]]"."""
        k = self.hyperbolic_summands
        if k == 1:
            return "H"
        if k is not None:
            return f"{k}H"
        m = self._matrix
        if all(
            m.entry(i, j) == 0 for i in range(self.rank) for j in range(self.rank) if i != j
        ):
            inner = ",".join(str(m.entry(i, i)) for i in range(self.rank))
            return f"diag({inner})"
        rows = ",".join(
            "[" + ",".join(str(v) for v in m.row(i)) + "]" for i in range(self.rank)
        )
        return f"matrix [{rows}]"

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntersectionForm):
            return NotImplemented
        return self._matrix == other._matrix

    def __hash__(self) -> int:
        return hash(self._matrix)

    def __repr__(self) -> str:
        return f"IntersectionForm({self.descriptor()!r})"


_INT_RE = re.compile(r"[+-]?\d+")
_HYPERBOLIC_RE = re.compile(r"^([+-]?\d+)?\s*H$")
_DIAG_RE = re.compile(r"^diag\s*\((.*)\)$", re.DOTALL)
_MATRIX_RE = re.compile(r"^matrix\s*(\[.*\])$", re.DOTALL)


def _parse_int(text: str) -> int:
    text = text.strip()
    if not _INT_RE.fullmatch(text):
        raise FormParseError(f"expected an integer, got {text!r}")
    return int(text)


def _parse_matrix_literal(text: str) -> list[list[int]]:
    squeezed = re.sub(r"\s+", "", text)
    if not (squeezed.startswith("[[") and squeezed.endswith("]]")):
        raise FormParseError(f"malformed matrix literal: {text!r}")
    body = squeezed[2:-2]
    if "[" in body.replace("],[", "") or "]" in body.replace("],[", ""):
        raise FormParseError(f"malformed matrix literal: {text!r}")
    rows = []
    for chunk in body.split("],["):
        if not chunk:
            raise FormParseError("matrix rows must be nonempty")
        rows.append([_parse_int(piece) for piece in chunk.split(",")])
    return rows


def build_form(spec: str) -> IntersectionForm:
    """Parse a form descriptor.

    Grammar: ``kH`` (k >= 1), ``H``, ``diag(d1,...,dr)`` or
    ``matrix [[...],...]``.  Whitespace between tokens is ignored; integers
    are base 10 with an optional sign.
    """
    if not isinstance(spec, str):
        raise FormParseError("form descriptor must be a string")
    text = spec.strip()
    if not text:
        raise FormParseError("empty form descriptor")

    match = _HYPERBOLIC_RE.match(text)
    if match:
        k = int(match.group(1)) if match.group(1) is not None else 1
        if k < 1:
            raise FormParseError(f"hyperbolic sum needs k >= 1, got {k}")
        return IntersectionForm.hyperbolic(k)

    match = _DIAG_RE.match(text)
    if match:
        inner = match.group(1).strip()
        if not inner:
            raise FormParseError("diag(...) needs at least one entry")
        entries = [_parse_int(piece) for piece in inner.split(",")]
        return IntersectionForm.diagonal(entries)

    match = _MATRIX_RE.match(text)
    if match:
        rows = _parse_matrix_literal(match.group(1))
        matrix = IntegerMatrix(rows)
        if matrix.rows != matrix.cols:
            raise FormParseError("matrix literal must be square")
        if not matrix.is_symmetric:
            raise FormError("matrix literal must be symmetric")
        return IntersectionForm(matrix)

    raise FormParseError(f"unrecognized form descriptor: {spec!r}")
