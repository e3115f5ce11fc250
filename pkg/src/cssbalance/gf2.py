"""Bit-packed linear algebra over GF(2).

Matrices store one Python int per row (bit c of row r is ``(row >> c) & 1``),
so XOR is vector addition and ``int.bit_count`` is the Hamming weight. All
values are immutable after construction and safe to share across threads.
Empty matrices (0 rows or 0 columns) are legal everywhere and act as the
empty map.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence


class BitVector:
    """A vector over GF(2), packed into a single int."""

    __slots__ = ("n", "value")

    def __init__(self, n: int, value: int = 0):
        if n < 0:
            raise ValueError("vector length must be >= 0")
        if value < 0 or value >> n:
            raise ValueError(f"value does not fit in {n} bits")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):
        raise AttributeError("BitVector is immutable")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        bits = list(bits)
        value = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError("bits must be 0 or 1")
            value |= b << i
        return cls(len(bits), value)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, i: int) -> "BitVector":
        if not 0 <= i < n:
            raise ValueError("unit index out of range")
        return cls(n, 1 << i)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError("bit index out of range")
        return (self.value >> i) & 1

    def bits(self) -> list[int]:
        return [(self.value >> i) & 1 for i in range(self.n)]

    def weight(self) -> int:
        return self.value.bit_count()

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.value ^ other.value)

    __add__ = __xor__

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitVector)
            and self.n == other.n
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.n, self.value))

    def __repr__(self) -> str:
        return f"BitVector({''.join(str(b) for b in self.bits())})"


class BitMatrix:
    """A rows x cols matrix over GF(2) with bit-packed rows."""

    __slots__ = ("rows", "cols", "_r")

    def __init__(self, rows: int, cols: int, row_values: Iterable[int] = ()):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be >= 0")
        vals = tuple(row_values)
        if len(vals) != rows:
            raise ValueError(f"expected {rows} row values, got {len(vals)}")
        for v in vals:
            if v < 0 or v >> cols:
                raise ValueError(f"row value does not fit in {cols} bits")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_r", vals)

    def __setattr__(self, name, val):
        raise AttributeError("BitMatrix is immutable")

    @classmethod
    def from_rows(cls, bit_rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        bit_rows = [list(r) for r in bit_rows]
        if cols is None:
            cols = len(bit_rows[0]) if bit_rows else 0
        vals = []
        for r in bit_rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            vals.append(BitVector.from_bits(r).value)
        return cls(len(bit_rows), cols, vals)

    @classmethod
    def from_strings(cls, lines: Sequence[str], cols: Optional[int] = None) -> "BitMatrix":
        return cls.from_rows([[int(ch) for ch in line] for line in lines], cols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, [0] * rows)

    def row(self, r: int) -> int:
        """Row r as a packed int."""
        return self._r[r]

    def row_vector(self, r: int) -> BitVector:
        return BitVector(self.cols, self._r[r])

    def row_ints(self) -> tuple[int, ...]:
        return self._r

    def bit(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError("matrix index out of range")
        return (self._r[r] >> c) & 1

    def to_bits(self) -> list[list[int]]:
        return [[(v >> c) & 1 for c in range(self.cols)] for v in self._r]

    def is_zero(self) -> bool:
        return not any(self._r)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._r == other._r
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self._r))

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in matrix addition")
        return BitMatrix(
            self.rows, self.cols, [a ^ b for a, b in zip(self._r, other._r)]
        )

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.cols
        for r, v in enumerate(self._r):
            while v:
                low = v & -v
                cols[low.bit_length() - 1] |= 1 << r
                v ^= low
        return BitMatrix(self.cols, self.rows, cols)

    def mul_vec(self, v: BitVector) -> BitVector:
        """Matrix-vector product A*v over GF(2)."""
        if self.cols != v.n:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} times length {v.n}"
            )
        x = v.value
        out = 0
        for r, rv in enumerate(self._r):
            out |= ((rv & x).bit_count() & 1) << r
        return BitVector(self.rows, out)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        orows = other._r
        vals = []
        for v in self._r:
            acc = 0
            while v:
                low = v & -v
                acc ^= orows[low.bit_length() - 1]
                v ^= low
            vals.append(acc)
        return BitMatrix(self.rows, other.cols, vals)

    def kron(self, other: "BitMatrix") -> "BitMatrix":
        """Kronecker product, left factor major: row (i,j) -> i*other.rows + j,
        column (p,q) -> p*other.cols + q."""
        bc = other.cols
        vals = []
        for a in self._r:
            for b in other._r:
                row = 0
                v = a
                while v:
                    low = v & -v
                    row |= b << ((low.bit_length() - 1) * bc)
                    v ^= low
                vals.append(row)
        return BitMatrix(self.rows * other.rows, self.cols * other.cols, vals)

    def row_weights(self) -> list[int]:
        return [v.bit_count() for v in self._r]

    def col_weights(self) -> list[int]:
        w = [0] * self.cols
        for v in self._r:
            while v:
                low = v & -v
                w[low.bit_length() - 1] += 1
                v ^= low
        return w

    def rank(self) -> int:
        work = list(self._r)
        rank = 0
        for col in range(self.cols):
            mask = 1 << col
            pivot = None
            for i in range(rank, len(work)):
                if work[i] & mask:
                    pivot = i
                    break
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for i in range(len(work)):
                if i != rank and work[i] & mask:
                    work[i] ^= work[rank]
            rank += 1
            if rank == len(work):
                break
        return rank

    def _rref(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon form; returns (rows, pivot column indices)."""
        work = list(self._r)
        pivots: list[int] = []
        row = 0
        for col in range(self.cols):
            mask = 1 << col
            pivot = None
            for i in range(row, len(work)):
                if work[i] & mask:
                    pivot = i
                    break
            if pivot is None:
                continue
            work[row], work[pivot] = work[pivot], work[row]
            for i in range(len(work)):
                if i != row and work[i] & mask:
                    work[i] ^= work[row]
            pivots.append(col)
            row += 1
            if row == len(work):
                break
        return work, pivots

    def pivot_columns(self) -> list[int]:
        """Column indices of the leading ones in reduced row echelon form;
        these columns are independent and span the column space."""
        return self._rref()[1]

    def kernel_basis(self) -> list[BitVector]:
        """Basis of ker(A); size cols - rank, ordered by ascending free column."""
        work, pivots = self._rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = 1 << free
            for i, p in enumerate(pivots):
                if (work[i] >> free) & 1:
                    v |= 1 << p
            basis.append(BitVector(self.cols, v))
        return basis

    def solve(self, b: BitVector) -> Optional[BitVector]:
        """Some x with A*x = b, or None when b is outside the column span."""
        if b.n != self.rows:
            raise ValueError("dimension mismatch in solve")
        aug_col = self.cols
        work = [self._r[i] | (b.bit(i) << aug_col) for i in range(self.rows)]
        pivots: list[int] = []
        row = 0
        for col in range(self.cols + 1):
            mask = 1 << col
            pivot = None
            for i in range(row, len(work)):
                if work[i] & mask:
                    pivot = i
                    break
            if pivot is None:
                continue
            if col == aug_col:
                return None
            work[row], work[pivot] = work[pivot], work[row]
            for i in range(len(work)):
                if i != row and work[i] & mask:
                    work[i] ^= work[row]
            pivots.append(col)
            row += 1
            if row == len(work):
                break
        x = 0
        for i, p in enumerate(pivots):
            if (work[i] >> aug_col) & 1:
                x |= 1 << p
        return BitVector(self.cols, x)


def dot(a: BitVector, b: BitVector) -> int:
    """Standard bilinear pairing over GF(2)."""
    if a.n != b.n:
        raise ValueError("length mismatch")
    return (a.value & b.value).bit_count() & 1


def block(grid: Sequence[Sequence]) -> BitMatrix:
    """Assemble a matrix from a grid of blocks.

    Entries are BitMatrix, or None/0 for an all-zero block whose shape is
    inferred from its row and column neighbours. Blocks in a grid row must
    share row counts and blocks in a grid column must share column counts.
    """
    nrows = len(grid)
    ncols = len(grid[0]) if nrows else 0
    for row in grid:
        if len(row) != ncols:
            raise ValueError("ragged block grid")

    def entry(i, j):
        e = grid[i][j]
        return e if isinstance(e, BitMatrix) else None

    heights: list[Optional[int]] = [None] * nrows
    widths: list[Optional[int]] = [None] * ncols
    for i in range(nrows):
        for j in range(ncols):
            e = entry(i, j)
            if e is None:
                continue
            if heights[i] is None:
                heights[i] = e.rows
            elif heights[i] != e.rows:
                raise ValueError(f"inconsistent block heights in grid row {i}")
            if widths[j] is None:
                widths[j] = e.cols
            elif widths[j] != e.cols:
                raise ValueError(f"inconsistent block widths in grid column {j}")
    if any(h is None for h in heights) or any(w is None for w in widths):
        raise ValueError("cannot infer the shape of an all-zero block row or column")

    col_offsets = [0] * ncols
    off = 0
    for j in range(ncols):
        col_offsets[j] = off
        off += widths[j]
    total_cols = off
    vals: list[int] = []
    for i in range(nrows):
        rows_here = [0] * heights[i]
        for j in range(ncols):
            e = entry(i, j)
            if e is None:
                continue
            shift = col_offsets[j]
            for r in range(e.rows):
                rows_here[r] |= e.row(r) << shift
        vals.extend(rows_here)
    return BitMatrix(sum(heights), total_cols, vals)


def row_basis(a: BitMatrix) -> BitMatrix:
    """Rows of a that greedily (in ascending order) form a row-space basis."""
    kept, _ = _greedy_independent_rows(a)
    return BitMatrix(len(kept), a.cols, [a.row(r) for r in kept])


def nonsingular_row_partition(a: BitMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split row indices into (V', V'') with a[V'] square and invertible.

    Requires the columns of a to be independent (rank == cols). The choice is
    deterministic: scanning rows in ascending order, a row is kept exactly
    when it increases the running rank, until cols rows are kept.
    """
    kept, rest = _greedy_independent_rows(a, stop_at=a.cols)
    if len(kept) < a.cols:
        raise ValueError("columns are dependent: no invertible row selection exists")
    return tuple(kept), tuple(rest)


def _greedy_independent_rows(a: BitMatrix, stop_at: Optional[int] = None):
    basis: list[tuple[int, int]] = []  # (pivot column, reduced row value)
    kept: list[int] = []
    for r in range(a.rows):
        if stop_at is not None and len(kept) == stop_at:
            break
        v = a.row(r)
        for p, bval in basis:
            if (v >> p) & 1:
                v ^= bval
        if v:
            kept.append(r)
            basis.append(((v & -v).bit_length() - 1, v))
    keep_set = set(kept)
    rest = [i for i in range(a.rows) if i not in keep_set]
    return kept, rest


def write_pcm(a: BitMatrix) -> str:
    """Canonical text serialization: header line 'rows cols', then one 0/1
    line per row."""
    lines = [f"{a.rows} {a.cols}"]
    for r in range(a.rows):
        v = a.row(r)
        lines.append("".join("1" if (v >> c) & 1 else "0" for c in range(a.cols)))
    return "\n".join(lines) + "\n"


def parse_pcm(text: str) -> BitMatrix:
    """Parse the text format written by write_pcm. Lines starting with '#'
    are comments; the trailing newline is optional. Row lines of a
    zero-column matrix are legitimately empty, so blank lines are rows."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [ln for ln in lines if not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line: {lines[0]!r}")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"bad header line: {lines[0]!r}") from None
    if rows < 0 or cols < 0:
        raise ValueError("negative dimensions")
    body = lines[1:]
    if len(body) != rows:
        raise ValueError(f"expected {rows} rows, found {len(body)}")
    vals = []
    for ln in body:
        if len(ln) != cols or set(ln) - {"0", "1"}:
            raise ValueError(f"bad matrix row: {ln!r}")
        v = 0
        for c, ch in enumerate(ln):
            if ch == "1":
                v |= 1 << c
        vals.append(v)
    return BitMatrix(rows, cols, vals)
