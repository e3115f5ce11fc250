"""Independent reference implementations used to check the fast oracles.

Everything here is written in the most literal way possible: triple-loop
matrix products, full sweeps over all 2^t words, and row-space membership
decided by an explicit linear solve. Nothing is shared with the package's
enumeration code paths.
"""

from fractions import Fraction

from cssbalance import BitMatrix, BitVector

INF = float("inf")


def naive_mul(a: BitMatrix, v: BitVector) -> list[int]:
    bits = a.to_bits()
    x = v.bits()
    out = []
    for r in range(a.rows):
        acc = 0
        for c in range(a.cols):
            acc ^= bits[r][c] & x[c]
        out.append(acc)
    return out


def all_vectors(n: int):
    for value in range(1 << n):
        yield BitVector(n, value)


def naive_kernel(h: BitMatrix) -> list[BitVector]:
    return [v for v in all_vectors(h.cols) if not any(naive_mul(h, v))]


def naive_rank(h: BitMatrix) -> int:
    span = {0}
    for r in range(h.rows):
        span |= {s ^ h.row(r) for s in span}
    return len(span).bit_length() - 1


def naive_distance(h: BitMatrix):
    weights = [v.weight() for v in naive_kernel(h) if v.value]
    return min(weights) if weights else INF


def naive_distance_to_code(x: BitVector, h: BitMatrix) -> int:
    return min((x ^ c).weight() for c in naive_kernel(h))


def naive_soundness(h: BitMatrix):
    """min over words outside the code of t|Hx| / (s d(x, ker)); None when
    there are no checks or the code is the whole space."""
    t, s = h.cols, h.rows
    if s == 0 or t == 0:
        return None
    kernel = naive_kernel(h)
    if len(kernel) == 1 << t:
        return None
    best = None
    for x in all_vectors(t):
        syndrome = sum(naive_mul(h, x))
        if syndrome == 0:
            continue
        ratio = Fraction(t * syndrome, s * naive_distance_to_code(x, h))
        if best is None or ratio < best:
            best = ratio
    return best


def in_row_space(m: BitMatrix, v: BitVector) -> bool:
    """Membership via an explicit solve against the transpose."""
    return m.transpose().solve(v) is not None


def naive_quantum_distances(h_x: BitMatrix, h_z: BitMatrix):
    n = h_x.cols
    d_x = d_z = INF
    for v in all_vectors(n):
        if v.value == 0:
            continue
        w = v.weight()
        if not any(naive_mul(h_z, v)) and not in_row_space(h_x, v):
            d_x = min(d_x, w)
        if not any(naive_mul(h_x, v)) and not in_row_space(h_z, v):
            d_z = min(d_z, w)
    return d_x, d_z
