"""Named code generators and symbolic parameter tables.

All randomness is drawn from a ``random.Random`` seeded explicitly, so the
same spec and seed always reproduce the same matrices bit for bit.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .chain import ChainComplex, ClassicalCode, CssCode
from .gf2 import BitMatrix, block, parse_pcm
from .io import load_code


def rep_standard(l: int) -> ClassicalCode:
    """Chain-of-pairs checks for the length-l repetition code: row i is
    e_i + e_{i+1}, an (l-1) x l matrix with independent checks."""
    if l < 2:
        raise ValueError("repetition length must be >= 2")
    return ClassicalCode(BitMatrix(l - 1, l, [0b11 << i for i in range(l - 1)]))


def rep_modified(l: int) -> ClassicalCode:
    """Alternative checks for the same code: row i is e_i + e_{l-1}, so one
    column carries weight l-1. Same kernel as rep_standard(l)."""
    if l < 2:
        raise ValueError("repetition length must be >= 2")
    last = 1 << (l - 1)
    return ClassicalCode(BitMatrix(l - 1, l, [(1 << i) | last for i in range(l - 1)]))


def q_complex(hhat: BitMatrix) -> CssCode:
    """Doubled-check complex on 2n qubits: H_Z = [I_n | I_n] and
    H_X = [hhat | hhat]. The chain condition holds identically since the
    two copies of hhat cancel. Inherits dimension and Z-distance from
    ker(hhat) and has X-distance 2 whenever any logical qubit exists."""
    n = hhat.cols
    if n < 1:
        raise ValueError("check matrix must have at least one column")
    eye = BitMatrix.identity(n)
    h_z = block([[eye, eye]])
    h_x = block([[hhat, hhat]])
    return CssCode(
        ChainComplex((n, 2 * n, hhat.rows), (h_z.transpose(), h_x))
    )


def hamming74() -> ClassicalCode:
    """The [7, 4, 3] code whose check columns are the numbers 1..7 in
    binary (bit i of column j is bit i of j)."""
    vals = [0, 0, 0]
    for j in range(1, 8):
        for i in range(3):
            if (j >> i) & 1:
                vals[i] |= 1 << (j - 1)
    return ClassicalCode(BitMatrix(3, 7, vals))


def random_ldpc(
    t: int,
    s: int,
    row_w: int,
    col_w: int,
    seed: int,
    max_resamples: int = 1000,
) -> ClassicalCode:
    """Pseudorandom s x t matrix with row weights in [1, row_w] and column
    weights at most col_w, resampled until the checks are independent.

    Exactly regular profiles are avoided on purpose: saturating an even
    column weight everywhere forces the rows to sum to zero, so some slack
    in the row weights is what makes independent checks reachable.

    Raises when the requested profile is infeasible by counting or when no
    independent-check sample is found within the resample budget.
    """
    if s > t:
        raise ValueError(f"more checks than bits (s = {s} > t = {t})")
    if row_w < 1 or col_w < 1:
        raise ValueError("weights must be >= 1")
    if row_w > t:
        raise ValueError(f"row weight {row_w} exceeds length {t}")
    if s * row_w > t * col_w:
        raise ValueError(
            f"infeasible profile: {s} rows of weight {row_w} cannot fit "
            f"column weight {col_w} over {t} columns"
        )
    rng = random.Random(seed)
    for _ in range(max_resamples):
        col_load = [0] * t
        vals = []
        ok = True
        for _ in range(s):
            open_cols = [c for c in range(t) if col_load[c] < col_w]
            w = rng.randint(1, min(row_w, len(open_cols))) if open_cols else 0
            if w == 0:
                ok = False
                break
            chosen = rng.sample(open_cols, w)
            v = 0
            for c in chosen:
                v |= 1 << c
                col_load[c] += 1
            vals.append(v)
        if not ok:
            continue
        h = BitMatrix(s, t, vals)
        if h.rank() == s:
            return ClassicalCode(h)
    raise RuntimeError(
        f"no independent-check sample with this profile in {max_resamples} tries"
    )


def random_css(
    n: int, n_x: int, n_z: int, seed: int, max_resamples: int = 1000
) -> CssCode:
    """Random CSS code on n qubits with n_z independent Z-checks and n_x
    independent X-checks drawn from the orthogonal complement."""
    if n < 1:
        raise ValueError("need at least one qubit")
    if n_x < 0 or n_z < 0 or n_x + n_z > n:
        raise ValueError("check counts must satisfy 0 <= n_x + n_z <= n")
    rng = random.Random(seed)

    def sample_independent(dim: int, count: int, combine) -> Optional[list[int]]:
        rows: list[int] = []
        basis: list[tuple[int, int]] = []
        for _ in range(max_resamples):
            if len(rows) == count:
                return rows
            v = combine(rng.getrandbits(dim))
            reduced = v
            for p, b in basis:
                if (reduced >> p) & 1:
                    reduced ^= b
            if reduced:
                rows.append(v)
                basis.append(((reduced & -reduced).bit_length() - 1, reduced))
        return rows if len(rows) == count else None

    hz_rows = sample_independent(n, n_z, lambda v: v)
    if hz_rows is None:
        raise RuntimeError("could not sample independent Z-checks")
    h_z = BitMatrix(n_z, n, hz_rows)
    kernel = [b.value for b in h_z.kernel_basis()]

    def from_kernel(mask: int) -> int:
        v = 0
        m = mask
        for i, b in enumerate(kernel):
            if (m >> i) & 1:
                v ^= b
        return v

    hx_rows = sample_independent(len(kernel), n_x, from_kernel)
    if hx_rows is None:
        raise RuntimeError("could not sample independent X-checks")
    h_x = BitMatrix(n_x, n, hx_rows)
    return CssCode.from_check_matrices(h_x, h_z)


FAMILIES = (
    "rep",
    "rep_modified",
    "q_complex",
    "hamming74",
    "random_ldpc",
    "random_css",
    "from_file",
)


@dataclass(frozen=True)
class CodeSpec:
    """A buildable description of a code: family name plus parameters.

    Families and parameters:
      rep, rep_modified: l
      q_complex: hhat (nested classical CodeSpec) or path (a matrix file)
      hamming74: none
      random_ldpc: t, s, row_w, col_w, seed
      random_css: n, n_x, n_z, seed
      from_file: path
    """

    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def describe(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}({inner})"

    def with_seed(self, seed: int) -> "CodeSpec":
        if self.family in ("random_ldpc", "random_css"):
            return CodeSpec(self.family, {**self.params, "seed": seed})
        if self.family == "q_complex" and "hhat" in self.params:
            hhat = as_spec(self.params["hhat"]).with_seed(seed)
            return CodeSpec(self.family, {**self.params, "hhat": hhat})
        return self

    def build(self) -> Union[ClassicalCode, CssCode]:
        p = self.params
        if self.family == "rep":
            return rep_standard(int(p["l"]))
        if self.family == "rep_modified":
            return rep_modified(int(p["l"]))
        if self.family == "hamming74":
            return hamming74()
        if self.family == "random_ldpc":
            return random_ldpc(
                int(p["t"]), int(p["s"]), int(p["row_w"]), int(p["col_w"]),
                int(p.get("seed", 0)),
            )
        if self.family == "random_css":
            return random_css(
                int(p["n"]), int(p["n_x"]), int(p["n_z"]), int(p.get("seed", 0))
            )
        if self.family == "q_complex":
            if "hhat" in p:
                inner = as_spec(p["hhat"]).build()
                if not isinstance(inner, ClassicalCode):
                    raise ValueError("q_complex needs a classical inner code")
                return q_complex(inner.h)
            return q_complex(parse_pcm(Path(p["path"]).read_text()))
        if self.family == "from_file":
            return load_code(Path(p["path"]))
        raise ValueError(f"unknown family {self.family!r}")


def as_spec(obj) -> CodeSpec:
    if isinstance(obj, CodeSpec):
        return obj
    if isinstance(obj, dict):
        return CodeSpec(obj["family"], dict(obj.get("params", {})))
    raise ValueError(f"cannot interpret {obj!r} as a code spec")


def _cell(text: str, symbolic: bool = True, value: Optional[str] = None) -> dict:
    out = {"formula": text, "symbolic": symbolic}
    if value is not None:
        out["value"] = value
    return out


_ROW_ORDER = ("physical_qubits", "soundness", "distance", "dimension", "rate", "locality")


def param_table(
    scenario: str,
    n: Optional[int] = None,
    t: Optional[int] = None,
    l: Optional[int] = None,
    alpha: Optional[Fraction] = None,
) -> dict:
    """Parameter formula sheets for the balancing constructions.

    Every asymptotic entry is emitted as a formula and flagged symbolic;
    exact numbers appear only where they follow from the given inputs.

      table1: balancing the doubled-check complex with the two repetition
              check matrices (standard vs modified).
      table4: the doubled-check complex balanced with repetition checks vs
              a general independent-check classical code.
      genParams: growing the dimension of square-root-distance code
              families by double balancing with a classical code of
              length t.
      exampleParams: the same at logarithmic and polynomial classical
              lengths; with alpha given, the polynomial exponents are
              evaluated exactly.
    """
    key = scenario.strip()
    lower = {"table1": "table1", "table4": "table4",
             "genparams": "genParams", "exampleparams": "exampleParams"}.get(key.lower())
    if lower is None:
        raise ValueError(f"unknown scenario {scenario!r}")

    if lower == "table1":
        columns = [
            {
                "label": "standard repetition checks",
                "cells": {
                    "physical_qubits": _cell("O(n*l)"),
                    "soundness": _cell("Omega(1/l)"),
                    "distance": _cell("Theta(min(n, l))"),
                    "dimension": _cell("Theta(n)"),
                    "locality": _cell("Theta(1)"),
                },
            },
            {
                "label": "modified repetition checks",
                "cells": {
                    "physical_qubits": _cell("O(n*l)"),
                    "soundness": _cell("Omega(1)"),
                    "distance": _cell("Theta(min(n, l))"),
                    "dimension": _cell("Theta(n)"),
                    "locality": _cell("(avg, max) = (Theta(1), Theta(l))"),
                },
            },
        ]
    elif lower == "table4":
        qubits_rep = _cell("Theta(n*l)")
        if n is not None and l is not None:
            qubits_rep["value"] = str(n * l)
        qubits_gen = _cell("Theta(n*t)")
        if n is not None and t is not None:
            qubits_gen["value"] = str(n * t)
        columns = [
            {
                "label": "repetition checks, length l",
                "cells": {
                    "physical_qubits": qubits_rep,
                    "soundness": _cell("Omega(1/l)"),
                    "distance": _cell("Theta(min(n, l))"),
                    "rate": _cell("Theta(1/l)"),
                    "locality": _cell("Theta(1)"),
                },
            },
            {
                "label": "independent-check classical code, length t",
                "cells": {
                    "physical_qubits": qubits_gen,
                    "soundness": _cell("Omega(1/t)"),
                    "distance": _cell("Theta(min(n, t))"),
                    "rate": _cell("Theta(1)"),
                    "locality": _cell("Theta(1)"),
                },
            },
            {
                "label": "logarithmic classical length",
                "cells": {
                    "physical_qubits": _cell("n"),
                    "soundness": _cell("Omega(1/log(n))"),
                    "distance": _cell("Theta(log(n))"),
                    "rate": _cell("Theta(1)"),
                    "locality": _cell("Theta(1)"),
                },
            },
        ]
    elif lower == "genParams":
        columns = [
            {
                "label": "hypersphere product family",
                "cells": {
                    "physical_qubits": _cell("n"),
                    "soundness": _cell("1/log(n)^2"),
                    "distance": _cell("Theta(sqrt(n))"),
                    "dimension": _cell("2", symbolic=False),
                    "locality": _cell("Theta(log(n)/loglog(n))"),
                },
            },
            {
                "label": "hemicubic family",
                "cells": {
                    "physical_qubits": _cell("n"),
                    "soundness": _cell("Omega(1/log(n))"),
                    "distance": _cell("Theta(sqrt(n))"),
                    "dimension": _cell("1", symbolic=False),
                    "locality": _cell("O(log(n))"),
                },
            },
            {
                "label": "double balanced, hypersphere product input",
                "cells": {
                    "physical_qubits": _cell("Theta(n*t^2)"),
                    "soundness": _cell("Omega(1/(log(n)^2*t^2))"),
                    "distance": _cell("Theta(sqrt(n)*t)"),
                    "dimension": _cell("Theta(t^2)"),
                    "locality": _cell("Theta(log(n)/loglog(n))"),
                },
            },
            {
                "label": "double balanced, hemicubic input",
                "cells": {
                    "physical_qubits": _cell("Theta(n*t^2)"),
                    "soundness": _cell("Omega(1/(log(n)*t^2))"),
                    "distance": _cell("Theta(sqrt(n)*t)"),
                    "dimension": _cell("Theta(t^2)"),
                    "locality": _cell("O(log(n))"),
                },
            },
        ]
    else:  # exampleParams
        if alpha is not None:
            expo = (2 * alpha) / (1 + 2 * alpha)
            dim_cell = _cell(f"Theta(n^({expo}))")
            dim_cell["exponent"] = str(expo)
            snd_cell = _cell(f"Omega(1/(n^({expo})*log(n)))")
            snd_cell["exponent"] = str(expo)
        else:
            dim_cell = _cell("Theta(n^(2a/(1+2a)))")
            snd_cell = _cell("Omega(1/(n^(2a/(1+2a))*log(n)))")
        columns = [
            {
                "label": "logarithmic classical length (t = sqrt(log(n)))",
                "cells": {
                    "physical_qubits": _cell("n"),
                    "soundness": _cell("Omega(1/log(n)^2)"),
                    "distance": _cell("Theta(sqrt(n))"),
                    "dimension": _cell("Theta(log(n))"),
                    "locality": _cell("O(log(n))"),
                },
            },
            {
                "label": "polynomial classical length (t = n^a)",
                "cells": {
                    "physical_qubits": _cell("n"),
                    "soundness": snd_cell,
                    "distance": _cell("Theta(sqrt(n))"),
                    "dimension": dim_cell,
                    "locality": _cell("O(log(n))"),
                },
            },
        ]
    return {"scenario": lower, "rows": _row_names(columns), "columns": columns}


def _row_names(columns: list[dict]) -> list[str]:
    names = []
    for row in _ROW_ORDER:
        if any(row in col["cells"] for col in columns):
            names.append(row)
    return names
