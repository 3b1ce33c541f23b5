"""Linear algebra over a prime field F_q on numpy int64 arrays.

Entries are kept reduced to [0, q).  The moduli used here stay well
below 2^20, so products and the dot products that appear never overflow
int64.  Inverses go through the extended gcd rather than any library
call, because exactness is the whole point.
"""

import numpy as np


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        t, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - t * x1
        y0, y1 = y1, y0 - t * y1
    return a, x0, y0


def inv_mod(a: int, q: int) -> int:
    g, x, _ = egcd(a % q, q)
    if g != 1:
        raise ZeroDivisionError(f"{a} is not invertible mod {q}")
    return x % q


def rref(M: np.ndarray, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns, deterministically
    (first nonzero entry of each column is the pivot)."""
    R = np.array(M, dtype=np.int64) % q
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            R[[r, p]] = R[[p, r]]
        R[r] = (R[r] * inv_mod(int(R[r, c]), q)) % q
        other = np.nonzero(R[:, c])[0]
        other = other[other != r]
        if other.size:
            R[other] = (R[other] - np.outer(R[other, c], R[r])) % q
        pivots.append(c)
        r += 1
    return R[:r], pivots


def kernel_basis(M: np.ndarray, q: int) -> np.ndarray:
    """Rows spanning the null space {x : M x = 0}, in rref order."""
    R, pivots = rref(M, q)
    cols = M.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, p in enumerate(pivots):
            basis[i, p] = (-R[r, f]) % q
    return basis


def charpoly(M: np.ndarray, q: int) -> np.ndarray:
    """Monic characteristic polynomial coefficients (ascending powers)
    via Hessenberg reduction and the leading-minor recurrence."""
    H = np.array(M, dtype=np.int64) % q
    n = H.shape[0]
    if n == 0:
        return np.array([1], dtype=np.int64)
    for j in range(n - 2):
        nz = np.nonzero(H[j + 1:, j])[0]
        if nz.size == 0:
            continue
        p = j + 1 + int(nz[0])
        if p != j + 1:
            H[[j + 1, p]] = H[[p, j + 1]]
            H[:, [j + 1, p]] = H[:, [p, j + 1]]
        piv_inv = inv_mod(int(H[j + 1, j]), q)
        f = (H[j + 2:, j] * piv_inv) % q
        H[j + 2:] = (H[j + 2:] - np.outer(f, H[j + 1])) % q
        H[:, j + 1] = (H[:, j + 1] + H[:, j + 2:] @ f) % q
    # p_k = charpoly of leading k x k block, expanded along the last column.
    polys = [np.array([1], dtype=np.int64)]
    for k in range(1, n + 1):
        pk = np.zeros(k + 1, dtype=np.int64)
        prev = polys[k - 1]
        pk[1:k + 1] += prev
        pk[:k] = (pk[:k] - H[k - 1, k - 1] * prev) % q
        subdiag = 1
        for i in range(1, k):
            subdiag = (subdiag * H[k - i, k - i - 1]) % q
            coef = (H[k - 1 - i, k - 1] * subdiag) % q
            pk[:k - i] = (pk[:k - i] - coef * polys[k - 1 - i]) % q
        polys.append(pk % q)
    return polys[n]


def poly_roots(coeffs: np.ndarray, q: int) -> list[int]:
    """All roots in F_q, ascending, found by evaluating everywhere."""
    xs = np.arange(q, dtype=np.int64)
    acc = np.full(q, int(coeffs[-1]) % q, dtype=np.int64)
    for c in coeffs[-2::-1]:
        acc = (acc * xs + int(c)) % q
    return [int(x) for x in np.nonzero(acc == 0)[0]]
