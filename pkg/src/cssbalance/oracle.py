"""Exact brute-force code analysis: dimension, distances, locality, soundness.

Every quantity here is computed by exhaustive enumeration or exact rank
arithmetic and reported as an int or a reduced Fraction; no floating point
is involved anywhere (``math.inf`` only marks the absence of a nonzero
codeword or logical operator). Enumerations walk Gray-code orderings of
kernel and syndrome spaces, so each step is a single XOR plus a popcount,
and every result is independent of scan order.

The enumeration budget is a hard cap on the number of words any single
exhaustive scan may visit. The soundness scan visits one representative
per syndrome coset times the kernel, i.e. all 2^t words of the ambient
space, so its requirement is 2^t <= cap; distance scans require
2^dim(kernel) <= cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .chain import ClassicalCode, CssCode
from .gf2 import BitMatrix, BitVector

DEFAULT_CAP = 1 << 24

INFINITE = math.inf

Distance = Union[int, float]


class CapExceeded(Exception):
    """An exhaustive scan would visit more words than the configured cap."""

    def __init__(self, what: str, log2_size: int, cap: int):
        self.what = what
        self.log2_size = log2_size
        self.cap = cap
        super().__init__(
            f"{what} needs 2^{log2_size} words, cap is {cap} (2^{cap.bit_length() - 1})"
        )


def _check_cap(what: str, log2_size: int, cap: int) -> None:
    if log2_size >= cap.bit_length() or (1 << log2_size) > cap:
        raise CapExceeded(what, log2_size, cap)


def _gray_flips(m: int):
    """Flip indices of the binary reflected Gray walk over m-bit masks."""
    for i in range(1, 1 << m):
        yield (i & -i).bit_length() - 1


def classical_dimension(code: ClassicalCode) -> int:
    """Number of encoded bits: t - rank(H)."""
    return code.t - code.h.rank()


def classical_distance(code: ClassicalCode, cap: int = DEFAULT_CAP) -> Distance:
    """Minimum weight of a nonzero codeword; INFINITE for the trivial code."""
    basis = code.h.kernel_basis()
    if not basis:
        return INFINITE
    _check_cap("codeword enumeration", len(basis), cap)
    vals = [b.value for b in basis]
    v = 0
    best = code.t + 1
    for j in _gray_flips(len(vals)):
        v ^= vals[j]
        w = v.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


def distance_to_code(x: BitVector, code: ClassicalCode, cap: int = DEFAULT_CAP) -> int:
    """Hamming distance from x to ker(H), by scanning the whole kernel."""
    if x.n != code.t:
        raise ValueError("word length does not match the code length")
    basis = code.h.kernel_basis()
    _check_cap("kernel enumeration", len(basis), cap)
    return _min_coset_weight(x.value, [b.value for b in basis], 0)


def _min_coset_weight(x0: int, kernel_vals: list[int], lower_bound: int) -> int:
    v = x0
    best = v.bit_count()
    if best <= lower_bound:
        return best
    for i in range(1, 1 << len(kernel_vals)):
        v ^= kernel_vals[(i & -i).bit_length() - 1]
        w = v.bit_count()
        if w < best:
            best = w
            if best <= lower_bound:
                return best
    return best


def classical_soundness(
    code: ClassicalCode, cap: int = DEFAULT_CAP
) -> Optional[Fraction]:
    """The largest rho with |Hx|/s >= rho * d(x, ker H)/t for every word x.

    Both |Hx| and d(x, ker H) depend on x only through its syndrome coset,
    so the minimum of t*|Hx| / (s*d(x, ker H)) is taken over one
    minimum-weight representative per nonzero coset; cosets are scanned
    exhaustively. Words inside the code are excluded (the inequality is
    vacuous there). When ker(H) = {0} every nonzero word participates with
    d(x, ker H) = |x|.

    Returns None (undefined) when there are no checks or the code is the
    full space.
    """
    h = code.h
    t, s = code.t, code.s
    if s == 0 or t == 0:
        return None
    kernel = h.kernel_basis()
    kdim = len(kernel)
    if kdim == t:
        return None  # code is the full space; every syndrome vanishes
    _check_cap("syndrome coset scan", t, cap)

    rank = t - kdim
    pivots = h.pivot_columns()
    # Independent columns of h: flipping bit p_i of x toggles column p_i of
    # the syndrome, so subsets of pivot columns enumerate every coset once.
    ht = h.transpose()
    col_vals = [ht.row(p) for p in pivots]
    e_vals = [1 << p for p in pivots]
    kernel_vals = [b.value for b in kernel]
    max_col_w = max(h.col_weights(), default=0)

    best: Optional[Fraction] = None
    best_num = best_den = 1  # best as integers, avoiding Fraction in the loop
    x = 0
    sig = 0
    for j in _gray_flips(rank):
        x ^= e_vals[j]
        sig ^= col_vals[j]
        w_sig = sig.bit_count()
        # Coset minimum weight is at most t, so the ratio is at least
        # w_sig/s; skip the scan when that already cannot beat the best.
        if best is not None and w_sig * best_den >= best_num * s:
            continue
        lower = -(-w_sig // max_col_w)  # ceil; each bit flips <= max_col_w checks
        min_w = _min_coset_weight(x, kernel_vals, lower)
        ratio = Fraction(t * w_sig, s * min_w)
        if best is None or ratio < best:
            best = ratio
            best_num, best_den = ratio.numerator, ratio.denominator
    return best


def locality(obj) -> int:
    """Maximum row or column weight over all parity-check matrices."""
    if isinstance(obj, CssCode):
        mats = [obj.h_x, obj.h_z]
    elif isinstance(obj, ClassicalCode):
        mats = [obj.h]
    elif isinstance(obj, BitMatrix):
        mats = [obj]
    else:
        raise TypeError(f"no parity checks on {type(obj).__name__}")
    w = 0
    for m in mats:
        w = max([w] + m.row_weights() + m.col_weights())
    return w


def quantum_dimension(q: CssCode) -> int:
    """Number of logical qubits: n - rank(H_X) - rank(H_Z)."""
    return q.n - q.h_x.rank() - q.h_z.rank()


def _logical_min_weight(
    stab_checks: BitMatrix, other_checks: BitMatrix, what: str, cap: int
) -> Distance:
    """Minimum weight over ker(stab_checks) minus the row space of
    other_checks.

    Membership in the row space is decided by pairing against a basis of
    ker(other_checks): a kernel word lies in the row space exactly when all
    those pairings vanish. Pairing bits update incrementally along the Gray
    walk, one XOR per step.
    """
    kernel = stab_checks.kernel_basis()
    _check_cap(what, len(kernel), cap)
    probes = [u.value for u in other_checks.kernel_basis()]
    vals = [b.value for b in kernel]
    masks = []
    for b in vals:
        m = 0
        for j, u in enumerate(probes):
            m |= ((b & u).bit_count() & 1) << j
        masks.append(m)

    best = None
    v = 0
    cls = 0
    for i in range(1, 1 << len(vals)):
        j = (i & -i).bit_length() - 1
        v ^= vals[j]
        cls ^= masks[j]
        if cls:
            w = v.bit_count()
            if best is None or w < best:
                best = w
                if best == 1:
                    break
    return INFINITE if best is None else best


def quantum_distance_x(q: CssCode, cap: int = DEFAULT_CAP) -> Distance:
    """Minimum weight over ker(H_Z) outside the row space of H_X."""
    if quantum_dimension(q) == 0:
        return INFINITE
    return _logical_min_weight(q.h_z, q.h_x, "X-distance enumeration", cap)


def quantum_distance_z(q: CssCode, cap: int = DEFAULT_CAP) -> Distance:
    """Minimum weight over ker(H_X) outside the row space of H_Z."""
    if quantum_dimension(q) == 0:
        return INFINITE
    return _logical_min_weight(q.h_x, q.h_z, "Z-distance enumeration", cap)


def quantum_distances(q: CssCode, cap: int = DEFAULT_CAP) -> tuple[Distance, Distance]:
    return quantum_distance_x(q, cap), quantum_distance_z(q, cap)


def component_soundness(
    q: CssCode, cap: int = DEFAULT_CAP
) -> tuple[Optional[Fraction], Optional[Fraction]]:
    """Soundness of the two classical component codes (H_X code, H_Z code)."""
    rho_x = classical_soundness(ClassicalCode(q.h_x), cap)
    rho_z = classical_soundness(ClassicalCode(q.h_z), cap)
    return rho_x, rho_z


def quantum_soundness(q: CssCode, cap: int = DEFAULT_CAP) -> Optional[Fraction]:
    """Component soundness of the CSS code: the minimum over the two
    classical component codes, undefined when either side is undefined.

    The testability constant of the CSS code itself agrees with this value
    up to a factor of two in either direction; the component minimum is
    what gets reported.
    """
    rho_x, rho_z = component_soundness(q, cap)
    if rho_x is None or rho_z is None:
        return None
    return min(rho_x, rho_z)


def fraction_obj(f: Optional[Fraction]):
    if f is None:
        return "undefined"
    return {"num": f.numerator, "den": f.denominator}


def distance_obj(d):
    if d is None:
        return "cap-exceeded"
    if d == INFINITE:
        return "inf"
    return int(d)


@dataclass
class CodeReport:
    """Exact analysis record for a classical or quantum code.

    Fields skipped because their enumeration exceeded the cap are listed in
    ``incomplete`` and serialize as "cap-exceeded"; an undefined soundness
    serializes as "undefined".
    """

    kind: str
    n: int
    dimension: int
    locality: int
    soundness: Optional[Fraction]
    provenance: str
    d: Optional[Distance] = None
    d_x: Optional[Distance] = None
    d_z: Optional[Distance] = None
    s: Optional[int] = None
    n_x: Optional[int] = None
    n_z: Optional[int] = None
    soundness_x: Optional[Fraction] = None
    soundness_z: Optional[Fraction] = None
    incomplete: tuple[str, ...] = field(default_factory=tuple)

    def to_obj(self) -> dict:
        def dist(name, value):
            return "cap-exceeded" if name in self.incomplete else distance_obj(value)

        if self.kind == "classical":
            return {
                "kind": "classical",
                "n": self.n,
                "K": self.dimension,
                "d": dist("d", self.d),
                "locality": self.locality,
                "soundness": (
                    "cap-exceeded"
                    if "soundness" in self.incomplete
                    else fraction_obj(self.soundness)
                ),
                "s": self.s,
                "provenance": self.provenance,
            }
        return {
            "kind": "quantum",
            "n": self.n,
            "K": self.dimension,
            "dX": dist("dX", self.d_x),
            "dZ": dist("dZ", self.d_z),
            "locality": self.locality,
            "soundness": (
                "cap-exceeded"
                if "soundness" in self.incomplete
                else fraction_obj(self.soundness)
            ),
            "nX": self.n_x,
            "nZ": self.n_z,
            "provenance": self.provenance,
        }

    def to_text(self) -> str:
        obj = self.to_obj()
        lines = []
        for key, val in obj.items():
            if isinstance(val, dict):
                val = val["num"] if val["den"] == 1 else f"{val['num']}/{val['den']}"
            if key == "soundness" and self.kind == "quantum":
                key = "soundness (component)"
                if val == "undefined":
                    missing = [name for name, rho in
                               (("X", self.soundness_x), ("Z", self.soundness_z))
                               if rho is None]
                    val = f"undefined ({'/'.join(missing)} side)"
            lines.append(f"{key:<22} {val}")
        return "\n".join(lines)


def analyze_classical(
    code: ClassicalCode, cap: int = DEFAULT_CAP, provenance: str = ""
) -> CodeReport:
    incomplete = []
    d = None
    try:
        d = classical_distance(code, cap)
    except CapExceeded:
        incomplete.append("d")
    rho = None
    try:
        rho = classical_soundness(code, cap)
    except CapExceeded:
        incomplete.append("soundness")
    return CodeReport(
        kind="classical",
        n=code.t,
        dimension=classical_dimension(code),
        locality=locality(code),
        soundness=rho,
        provenance=provenance,
        d=d,
        s=code.s,
        incomplete=tuple(incomplete),
    )


def analyze_quantum(
    q: CssCode, cap: int = DEFAULT_CAP, provenance: str = ""
) -> CodeReport:
    incomplete = []
    d_x = d_z = None
    try:
        d_x = quantum_distance_x(q, cap)
    except CapExceeded:
        incomplete.append("dX")
    try:
        d_z = quantum_distance_z(q, cap)
    except CapExceeded:
        incomplete.append("dZ")
    rho_x = rho_z = rho = None
    try:
        rho_x, rho_z = component_soundness(q, cap)
        rho = None if (rho_x is None or rho_z is None) else min(rho_x, rho_z)
    except CapExceeded:
        incomplete.append("soundness")
    return CodeReport(
        kind="quantum",
        n=q.n,
        dimension=quantum_dimension(q),
        locality=locality(q),
        soundness=rho,
        provenance=provenance,
        d_x=d_x,
        d_z=d_z,
        n_x=q.n_x,
        n_z=q.n_z,
        soundness_x=rho_x,
        soundness_z=rho_z,
        incomplete=tuple(incomplete),
    )
