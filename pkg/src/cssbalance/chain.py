"""Chain complexes over GF(2) and their code views.

A complex is stored highest grade first: ``spaces[0]`` is the dimension of
the top space and ``diffs[i]`` maps ``spaces[i]`` down to ``spaces[i+1]``.
Construction is permissive; ``validate`` reports the first shape or
composition violation instead of raising, so invalid complexes can be
inspected.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .gf2 import BitMatrix, block, parse_pcm, write_pcm


class ChainComplex:
    """An ordered list of differentials with (intended) zero composites."""

    __slots__ = ("spaces", "diffs", "labels")

    def __init__(
        self,
        spaces: Sequence[int],
        diffs: Sequence[BitMatrix] = (),
        labels: Optional[Sequence[str]] = None,
    ):
        spaces = tuple(int(d) for d in spaces)
        diffs = tuple(diffs)
        if not spaces:
            raise ValueError("a complex needs at least one space")
        if any(d < 0 for d in spaces):
            raise ValueError("space dimensions must be >= 0")
        if len(diffs) != len(spaces) - 1:
            raise ValueError(
                f"{len(spaces)} spaces need {len(spaces) - 1} differentials, got {len(diffs)}"
            )
        if labels is None:
            top = len(spaces) - 1
            labels = tuple(f"C{top - i}" for i in range(len(spaces)))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != len(spaces):
                raise ValueError("one label per space required")
        object.__setattr__(self, "spaces", spaces)
        object.__setattr__(self, "diffs", diffs)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, val):
        raise AttributeError("ChainComplex is immutable")

    @property
    def top_grade(self) -> int:
        return len(self.spaces) - 1

    def dim(self, grade: int) -> int:
        """Dimension of the space at the given grade (0 = rightmost)."""
        if not 0 <= grade <= self.top_grade:
            raise IndexError("grade out of range")
        return self.spaces[self.top_grade - grade]

    def diff(self, grade: int) -> BitMatrix:
        """The differential leaving the given grade (grade -> grade - 1)."""
        if not 1 <= grade <= self.top_grade:
            raise IndexError("no differential leaves that grade")
        return self.diffs[self.top_grade - grade]

    def validate(self) -> Optional[str]:
        """None when every shape conforms and all composites vanish,
        otherwise a message naming the first failing differential pair."""
        k = self.top_grade
        for i, d in enumerate(self.diffs):
            g = k - i
            if d.cols != self.spaces[i] or d.rows != self.spaces[i + 1]:
                return (
                    f"d{g} has shape {d.rows}x{d.cols}, expected "
                    f"{self.spaces[i + 1]}x{self.spaces[i]}"
                )
        for i in range(len(self.diffs) - 1):
            g = k - i
            if not (self.diffs[i + 1] @ self.diffs[i]).is_zero():
                return f"nonzero composite at pair (d{g}, d{g - 1})"
        return None

    def is_valid(self) -> bool:
        return self.validate() is None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChainComplex)
            and self.spaces == other.spaces
            and self.diffs == other.diffs
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.spaces, self.diffs, self.labels))

    def __repr__(self) -> str:
        arrows = " -> ".join(str(d) for d in self.spaces)
        return f"ChainComplex({arrows})"


def cocomplex(c: ChainComplex) -> ChainComplex:
    """Reverse the arrows: spaces reversed, every differential transposed.
    An involution; on a 3-term complex it swaps the X and Z roles."""
    return ChainComplex(
        tuple(reversed(c.spaces)),
        tuple(d.transpose() for d in reversed(c.diffs)),
        tuple(reversed(c.labels)),
    )


def window(c: ChainComplex, hi: int, lo: int) -> ChainComplex:
    """The sub-complex spanning grades hi down to lo, inclusive."""
    if not (0 <= lo <= hi <= c.top_grade):
        raise IndexError("window grades out of range")
    a = c.top_grade - hi
    b = c.top_grade - lo
    return ChainComplex(c.spaces[a : b + 1], c.diffs[a:b], c.labels[a : b + 1])


def homological_product(x: ChainComplex, y: ChainComplex) -> ChainComplex:
    """Tensor product of complexes: the grade-p space is the direct sum of
    x_i (x) y_{p-i}, and d(u(x)v) = du(x)v + u(x)dv (no signs over GF(2)).

    Summands are laid out with the x grade descending, matching the order in
    which blocks appear in the balanced-code check matrices, and each
    summand is indexed left factor major.
    """
    for name, c in (("left", x), ("right", y)):
        problem = c.validate()
        if problem is not None:
            raise ValueError(f"invalid {name} complex: {problem}")

    kx, ky = x.top_grade, y.top_grade

    def summands(p: int) -> list[tuple[int, int]]:
        top_i = min(kx, p)
        lo_i = max(0, p - ky)
        return [(i, p - i) for i in range(top_i, lo_i - 1, -1)]

    spaces = []
    for p in range(kx + ky, -1, -1):
        spaces.append(sum(x.dim(i) * y.dim(j) for i, j in summands(p)))

    diffs = []
    for p in range(kx + ky, 0, -1):
        src = summands(p)
        dst = summands(p - 1)
        dst_index = {ij: row for row, ij in enumerate(dst)}
        grid: list[list] = [[None] * len(src) for _ in dst]
        # Every summand provably touches at least one map, so block() can
        # always infer the shape of the remaining zero blocks.
        for col, (i, j) in enumerate(src):
            if i >= 1 and (i - 1, j) in dst_index:
                grid[dst_index[(i - 1, j)]][col] = x.diff(i).kron(
                    BitMatrix.identity(y.dim(j))
                )
            if j >= 1 and (i, j - 1) in dst_index:
                grid[dst_index[(i, j - 1)]][col] = BitMatrix.identity(x.dim(i)).kron(
                    y.diff(j)
                )
        diffs.append(block(grid))
    return ChainComplex(spaces, diffs)


class CssCode:
    """View of a valid 3-term complex as a quantum CSS code.

    The top differential is H_Z transposed and the bottom one is H_X, so
    H_X * H_Z^T = 0 is exactly the chain condition.
    """

    __slots__ = ("complex", "h_x", "h_z")

    def __init__(self, complex: ChainComplex):
        if complex.top_grade != 2:
            raise ValueError(
                f"a CSS code needs a 3-term complex, got {complex.top_grade + 1} terms"
            )
        problem = complex.validate()
        if problem is not None:
            raise ValueError(f"invalid complex: {problem}")
        object.__setattr__(self, "complex", complex)
        object.__setattr__(self, "h_z", complex.diff(2).transpose())
        object.__setattr__(self, "h_x", complex.diff(1))

    def __setattr__(self, name, val):
        raise AttributeError("CssCode is immutable")

    @property
    def n(self) -> int:
        return self.complex.dim(1)

    @property
    def n_x(self) -> int:
        return self.complex.dim(0)

    @property
    def n_z(self) -> int:
        return self.complex.dim(2)

    @classmethod
    def from_check_matrices(cls, h_x: BitMatrix, h_z: BitMatrix) -> "CssCode":
        if h_x.cols != h_z.cols:
            raise ValueError("H_X and H_Z must act on the same qubits")
        c = ChainComplex(
            (h_z.rows, h_x.cols, h_x.rows), (h_z.transpose(), h_x)
        )
        return cls(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, CssCode) and self.complex == other.complex

    def __hash__(self) -> int:
        return hash(self.complex)

    def __repr__(self) -> str:
        return f"CssCode(n={self.n}, n_x={self.n_x}, n_z={self.n_z})"


class ClassicalCode:
    """A linear code given by its parity-check matrix H (s checks, t bits)."""

    __slots__ = ("h", "t", "s", "independent_checks")

    def __init__(self, h: BitMatrix):
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "t", h.cols)
        object.__setattr__(self, "s", h.rows)
        object.__setattr__(self, "independent_checks", h.rank() == h.rows)

    def __setattr__(self, name, val):
        raise AttributeError("ClassicalCode is immutable")

    @property
    def complex(self) -> ChainComplex:
        """The code as the 2-term complex bits -> checks."""
        return ChainComplex((self.t, self.s), (self.h,))

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassicalCode) and self.h == other.h

    def __hash__(self) -> int:
        return hash(self.h)

    def __repr__(self) -> str:
        return f"ClassicalCode(t={self.t}, s={self.s})"


def as_css(c: ChainComplex) -> CssCode:
    return CssCode(c)


def as_classical(c: ChainComplex) -> ClassicalCode:
    if c.top_grade != 1:
        raise ValueError(
            f"a classical code needs a 2-term complex, got {c.top_grade + 1} terms"
        )
    problem = c.validate()
    if problem is not None:
        raise ValueError(f"invalid complex: {problem}")
    return ClassicalCode(c.diff(1))


def complex_to_obj(c: ChainComplex) -> dict:
    return {
        "spaces": list(c.spaces),
        "diffs": [write_pcm(d) for d in c.diffs],
        "labels": list(c.labels),
    }


def complex_to_json(c: ChainComplex) -> str:
    return json.dumps(complex_to_obj(c), indent=1)


def complex_from_obj(obj: dict) -> ChainComplex:
    try:
        spaces = obj["spaces"]
        diffs = [parse_pcm(s) for s in obj["diffs"]]
        labels = obj.get("labels")
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed complex object: {exc}") from None
    return ChainComplex(spaces, diffs, labels)


def complex_from_json(text: str) -> ChainComplex:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ValueError("complex JSON must be an object")
    return complex_from_obj(obj)
