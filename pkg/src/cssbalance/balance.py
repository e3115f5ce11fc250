"""Distance balancing of CSS codes against classical codes.

Tensor a 3-term quantum complex with the reversed 2-term complex of a
classical code and keep the bottom three terms of the 4-term result. With
an independent-check classical [t, k, d] code this multiplies the quantum
dimension by k and the X-distance by d while preserving the Z-distance,
at the price of n*t + n_X*s qubits. Exact lower bounds on the soundness of
the two new component codes are available in terms of the input component
soundness, and ``bound_check`` verifies them against the enumeration
oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chain import ClassicalCode, CssCode, as_css, cocomplex, homological_product, window
from .oracle import (
    DEFAULT_CAP,
    INFINITE,
    classical_dimension,
    classical_distance,
    classical_soundness,
    component_soundness,
    fraction_obj,
    locality,
    quantum_dimension,
    quantum_distances,
)


class DependentChecksError(ValueError):
    """The classical code has dependent checks; balancing such a code can
    produce something other than a balanced version of the input."""


class UndefinedSoundnessError(ValueError):
    def __init__(self, side: str, detail: str):
        self.side = side
        super().__init__(f"soundness undefined on side {side}: {detail}")


@dataclass(frozen=True)
class BalancedCode:
    """A balanced CSS code together with its tensor coordinate layout.

    Qubits split into an n*t block (input qubit, classical bit) followed by
    an n_X*s block (input X-check, classical check); Z-checks split into
    n_Z*t then n*s; X-checks are a single n_X*t block. Each block is
    indexed left factor major.
    """

    code: CssCode
    parent_quantum: str
    parent_classical: str
    block_layout: dict

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def n_x(self) -> int:
        return self.code.n_x

    @property
    def n_z(self) -> int:
        return self.code.n_z


def _ranges(sizes: list[tuple[str, int]]) -> dict:
    out = {}
    off = 0
    for name, size in sizes:
        out[name] = [off, off + size]
        off += size
    return out


def distance_balance(
    q: CssCode, r: ClassicalCode, provenance: tuple[str, str] = ("", "")
) -> BalancedCode:
    """Balance q against r; requires independent checks and s <= t."""
    if r.s > r.t:
        raise ValueError(f"more checks than bits (s = {r.s} > t = {r.t})")
    if not r.independent_checks:
        raise DependentChecksError(
            f"classical code has dependent checks (rank {r.h.rank()} < s = {r.s})"
        )
    product = homological_product(q.complex, cocomplex(r.complex))
    code = as_css(window(product, 2, 0))
    n, n_x, n_z, t, s = q.n, q.n_x, q.n_z, r.t, r.s
    layout = {
        "qubits": _ranges([("n*t", n * t), ("nX*s", n_x * s)]),
        "z_checks": _ranges([("nZ*t", n_z * t), ("n*s", n * s)]),
        "x_checks": _ranges([("nX*t", n_x * t)]),
    }
    return BalancedCode(
        code=code,
        parent_quantum=provenance[0] or repr(q),
        parent_classical=provenance[1] or repr(r),
        block_layout=layout,
    )


def double_balance(
    q: CssCode, r: ClassicalCode, provenance: tuple[str, str] = ("", "")
) -> BalancedCode:
    """Balance, swap the X and Z roles, balance again, swap back.

    Both distances get multiplied by the classical distance and the
    dimension picks up two factors of the classical dimension; the final
    swap returns X and Z to their starting positions.
    """
    first = distance_balance(q, r)
    flipped = as_css(cocomplex(first.code.complex))
    second = distance_balance(flipped, r)
    final = as_css(cocomplex(second.code.complex))
    # The last swap turns the second-round Z-check blocks into X-check
    # blocks and vice versa; qubit blocks are untouched.
    layout = {
        "qubits": second.block_layout["qubits"],
        "z_checks": second.block_layout["x_checks"],
        "x_checks": second.block_layout["z_checks"],
    }
    return BalancedCode(
        code=final,
        parent_quantum=provenance[0] or repr(q),
        parent_classical=provenance[1] or repr(r),
        block_layout=layout,
    )


@dataclass(frozen=True)
class QuantumParams:
    n: int
    dimension: int
    d_x: float
    d_z: float
    n_x: int
    n_z: int
    rho_x: Optional[Fraction] = None
    rho_z: Optional[Fraction] = None
    locality: int = 0


@dataclass(frozen=True)
class ClassicalParams:
    t: int
    dimension: int
    d: float
    s: int
    locality: int = 0


@dataclass(frozen=True)
class PredictedParams:
    """Parameters of a balanced code computed from input parameters alone."""

    n: int
    dimension: int
    d_x: float
    d_z: float
    n_x: int
    n_z: int
    soundness_bound_x: Optional[Fraction]
    soundness_bound_z: Optional[Fraction]
    locality_bound: int


def bound_x(
    n: int, n_x: int, n_z: int, t: int, s: int, rho_z: Optional[Fraction]
) -> Optional[Fraction]:
    """Soundness lower bound for the balanced Z-check code (the checks that
    detect X errors, i.e. the transposed upper differential):
    1/(s+1) * min(n_Z*rho_Z/n, 1) * (n*t + n_X*s)/(n_Z*t + n*s)."""
    if rho_z is None or n == 0 or n_z * t + n * s == 0:
        return None
    clamp = min(Fraction(n_z) * rho_z / n, Fraction(1))
    return Fraction(1, s + 1) * clamp * Fraction(n * t + n_x * s, n_z * t + n * s)


def bound_z(
    n: int, n_x: int, n_z: int, t: int, s: int, rho_x: Optional[Fraction]
) -> Optional[Fraction]:
    """Soundness lower bound for the balanced X-check code (the bottom
    differential): 1/t * min(n_X*rho_X/n, 1) * (n*t + n_X*s)/(n_X*t)."""
    if rho_x is None or n == 0 or n_x * t == 0:
        return None
    clamp = min(Fraction(n_x) * rho_x / n, Fraction(1))
    return Fraction(1, t) * clamp * Fraction(n * t + n_x * s, n_x * t)


def predicted_params(qp: QuantumParams, rp: ClassicalParams) -> PredictedParams:
    """Single balancing step: K' = K*k, d_X' = d_X*d, d_Z' = d_Z,
    n' = n*t + n_X*s, plus the two soundness bounds, all in exact
    arithmetic.

    A dimension-zero result has no logical operators at all, so both
    predicted distances are infinite there; the d_Z' = d_Z preservation
    only speaks about codes that still encode something.
    """
    if rp.s > rp.t:
        raise ValueError(f"more checks than bits (s = {rp.s} > t = {rp.t})")
    dimension = qp.dimension * rp.dimension
    return PredictedParams(
        n=qp.n * rp.t + qp.n_x * rp.s,
        dimension=dimension,
        d_x=qp.d_x * rp.d if dimension else INFINITE,
        d_z=qp.d_z if dimension else INFINITE,
        n_x=qp.n_x * rp.t,
        n_z=qp.n_z * rp.t + qp.n * rp.s,
        soundness_bound_x=bound_x(qp.n, qp.n_x, qp.n_z, rp.t, rp.s, qp.rho_z),
        soundness_bound_z=bound_z(qp.n, qp.n_x, qp.n_z, rp.t, rp.s, qp.rho_x),
        locality_bound=qp.locality + rp.locality,
    )


def predicted_double_params(qp: QuantumParams, rp: ClassicalParams) -> PredictedParams:
    """Two balancing steps with an X/Z swap in between: K'' = K*k^2,
    d_X'' = d*d_X, d_Z'' = d*d_Z, n'' = n'*t + n_Z'*s."""
    once = predicted_params(qp, rp)
    dimension = qp.dimension * rp.dimension * rp.dimension
    return PredictedParams(
        n=once.n * rp.t + once.n_z * rp.s,
        dimension=dimension,
        d_x=qp.d_x * rp.d if dimension else INFINITE,
        d_z=qp.d_z * rp.d if dimension else INFINITE,
        n_x=once.n_z * rp.t,
        n_z=once.n_x * rp.t + once.n * rp.s,
        soundness_bound_x=None,
        soundness_bound_z=None,
        locality_bound=qp.locality + 2 * rp.locality,
    )


def measured_quantum_params(
    q: CssCode, cap: int = DEFAULT_CAP, with_soundness: bool = True
) -> QuantumParams:
    d_x, d_z = quantum_distances(q, cap)
    rho_x = rho_z = None
    if with_soundness:
        rho_x, rho_z = component_soundness(q, cap)
    return QuantumParams(
        n=q.n,
        dimension=quantum_dimension(q),
        d_x=d_x,
        d_z=d_z,
        n_x=q.n_x,
        n_z=q.n_z,
        rho_x=rho_x,
        rho_z=rho_z,
        locality=locality(q),
    )


def measured_classical_params(r: ClassicalCode, cap: int = DEFAULT_CAP) -> ClassicalParams:
    return ClassicalParams(
        t=r.t,
        dimension=classical_dimension(r),
        d=classical_distance(r, cap),
        s=r.s,
        locality=locality(r),
    )


@dataclass(frozen=True)
class SideCheck:
    side: str  # "X": the transposed upper differential; "Z": the bottom one
    measured: Fraction
    bound: Fraction
    holds: bool

    def to_obj(self) -> dict:
        return {
            "side": self.side,
            "measured": fraction_obj(self.measured),
            "bound": fraction_obj(self.bound),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class BoundCheck:
    sides: tuple[SideCheck, SideCheck]
    rho_x: Fraction
    rho_z: Fraction
    rho_cap: Optional[Fraction]  # min(2n/n_Z, 2n/n_X) of the input
    hypothesis_ok: bool  # min component soundness within rho_cap

    @property
    def all_hold(self) -> bool:
        return all(s.holds for s in self.sides)

    def to_obj(self) -> list:
        return [s.to_obj() for s in self.sides]


def bound_check(
    q: CssCode,
    r: ClassicalCode,
    cap: int = DEFAULT_CAP,
    assume_rho: Optional[Fraction] = None,
) -> BoundCheck:
    """Measure the soundness of both balanced component codes and compare
    against the exact lower-bound formulas, as exact rationals.

    The bounds are evaluated at the measured component soundness of the
    input (or at ``assume_rho`` for both sides when given). The returned
    record also flags whether the soundness used stays within
    min(2n/n_Z, 2n/n_X); the bound formulas themselves hold regardless
    because of their min(., 1) clamp.
    """
    if assume_rho is not None:
        rho_x = rho_z = assume_rho
    else:
        rho_x, rho_z = component_soundness(q, cap)
        if rho_x is None:
            raise UndefinedSoundnessError("Z", "the input H_X code has no soundness")
        if rho_z is None:
            raise UndefinedSoundnessError("X", "the input H_Z code has no soundness")

    bal = distance_balance(q, r)

    measured_x = classical_soundness(ClassicalCode(bal.code.h_z), cap)
    if measured_x is None:
        raise UndefinedSoundnessError("X", "balanced Z-check code has no soundness")
    measured_z = classical_soundness(ClassicalCode(bal.code.h_x), cap)
    if measured_z is None:
        raise UndefinedSoundnessError("Z", "balanced X-check code has no soundness")

    bx = bound_x(q.n, q.n_x, q.n_z, r.t, r.s, rho_z)
    bz = bound_z(q.n, q.n_x, q.n_z, r.t, r.s, rho_x)
    if bx is None:
        raise UndefinedSoundnessError("X", "bound is undefined for this geometry")
    if bz is None:
        raise UndefinedSoundnessError("Z", "bound is undefined for this geometry")

    rho_cap = None
    if q.n_x > 0 and q.n_z > 0:
        rho_cap = min(Fraction(2 * q.n, q.n_z), Fraction(2 * q.n, q.n_x))
    hypothesis_ok = rho_cap is not None and min(rho_x, rho_z) <= rho_cap

    return BoundCheck(
        sides=(
            SideCheck("X", measured_x, bx, measured_x >= bx),
            SideCheck("Z", measured_z, bz, measured_z >= bz),
        ),
        rho_x=rho_x,
        rho_z=rho_z,
        rho_cap=rho_cap,
        hypothesis_ok=hypothesis_ok,
    )
