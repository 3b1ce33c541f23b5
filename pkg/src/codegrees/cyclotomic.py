"""Exact arithmetic with sums of e-th roots of unity.

A character value is held as multiplicities of the powers of a fixed
primitive e-th root z: either a dense length-e vector or a sparse tuple
of (exponent, multiplicity) pairs.  Equality of such sums is decided by
reducing the difference polynomial modulo the e-th cyclotomic
polynomial over the integers; no floating point is involved anywhere.
"""

import numpy as np

_CYCLO_CACHE: dict[int, tuple[int, ...]] = {1: (-1, 1)}

# int64 headroom guard for the vectorised remainder computation; the
# object-dtype fallback keeps the check exact if it ever trips.
_INT64_GUARD = 1 << 55


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num, den):
    """Quotient of num by monic den; remainder must vanish."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i, y in enumerate(den):
                num[k + i] -= c * y
    if any(num[:dd]):
        raise AssertionError("polynomial division left a remainder")
    return out


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of the e-th cyclotomic polynomial, ascending."""
    if e not in _CYCLO_CACHE:
        for d in _divisors(e):
            if d in _CYCLO_CACHE:
                continue
            num = [-1] + [0] * (d - 1) + [1]
            for dp in _divisors(d)[:-1]:
                num = _poly_divexact(num, _CYCLO_CACHE[dp])
            _CYCLO_CACHE[d] = tuple(num)
    return _CYCLO_CACHE[e]


def phi_degree(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


def reduce_mod_cyclotomic(rows: np.ndarray, e: int) -> np.ndarray:
    """Remainders of integer polynomials (one per row, ascending
    coefficients, length e) modulo the e-th cyclotomic polynomial."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    R = np.array(rows, dtype=np.int64, copy=True)
    if R.ndim == 1:
        R = R[None, :]
    if R.shape[1] < e:
        R = np.pad(R, ((0, 0), (0, e - R.shape[1])))
    low = phi[:-1]
    lowv = np.array(low, dtype=np.int64)
    for pos in range(R.shape[1] - 1, deg - 1, -1):
        c = R[:, pos].copy()
        R[:, pos - deg:pos] -= c[:, None] * lowv[None, :]
        R[:, pos] = 0
        if np.abs(R).max() > _INT64_GUARD:
            return _reduce_object(rows, e)
    return R[:, :deg]


def _reduce_object(rows, e):
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    arr = np.array(rows, dtype=object, copy=True)
    if arr.ndim == 1:
        arr = arr[None, :]
    out = []
    for row in arr:
        r = list(int(x) for x in row) + [0] * max(0, e - len(row))
        for pos in range(len(r) - 1, deg - 1, -1):
            c = r[pos]
            if c:
                for i in range(deg):
                    r[pos - deg + i] -= c * phi[i]
                r[pos] = 0
        out.append(r[:deg])
    return np.array(out, dtype=np.int64)


def dense_from_pairs(pairs, e: int) -> np.ndarray:
    v = np.zeros(e, dtype=np.int64)
    for k, m in pairs:
        v[k % e] += m
    return v


def conj_pairs(pairs, e: int):
    """Complex conjugation: z^k -> z^(-k)."""
    return tuple(sorted(((-k) % e, m) for k, m in pairs))


def pairs_equal_as_values(a, b, e: int) -> bool:
    """Exact equality of two root-of-unity sums."""
    diff = dense_from_pairs(a, e) - dense_from_pairs(b, e)
    return not reduce_mod_cyclotomic(diff, e).any()


def render_pairs(pairs) -> str:
    """Human form of a root-of-unity sum, z the primitive root: '1 + 2z^3'."""
    terms = []
    for k, m in sorted(pairs):
        if m == 0:
            continue
        if k == 0:
            terms.append(str(m))
        else:
            zk = "z" if k == 1 else f"z^{k}"
            terms.append(zk if m == 1 else f"{m}{zk}")
    return " + ".join(terms) if terms else "0"
