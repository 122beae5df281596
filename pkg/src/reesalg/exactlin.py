"""Dense exact linear algebra over a prime field F_p.

Matrices are numpy ``int64`` arrays whose entries live in ``[0, p)``.  For the
primes used here (p < 2**31) every product of two reduced entries fits in an
int64, so a row operation ``row - c * pivot_row`` reduced mod p is exact.
Field elements are plain Python ints.
"""

from __future__ import annotations

import numpy as np

DEFAULT_PRIME = 10007


def as_matrix(rows, p: int, ncols: int | None = None) -> np.ndarray:
    """Build a reduced int64 matrix from nested lists (or an array)."""
    m = np.array(rows, dtype=np.int64)
    if m.size == 0:
        return np.zeros((len(rows) if hasattr(rows, "__len__") else 0, ncols or 0), dtype=np.int64)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    return np.mod(m, p)


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod p")
    return pow(a, p - 2, p)


def rref(m: np.ndarray, p: int) -> tuple[int, np.ndarray, list[int]]:
    """Reduced row-echelon form.

    Returns ``(rank, reduced, pivots)``; ``reduced`` has the same shape as
    ``m`` with the nonzero rows first, and ``pivots`` lists the pivot column
    of each of the first ``rank`` rows.
    """
    a = np.mod(np.array(m, dtype=np.int64, copy=True), p)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * inv_mod(int(a[r, c]), p)) % p
        col = a[:, c].copy()
        col[r] = 0
        others = np.nonzero(col)[0]
        if others.size:
            a[others] = (a[others] - np.outer(col[others], a[r])) % p
        pivots.append(c)
        r += 1
    return r, a, pivots


def rank(m: np.ndarray, p: int) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return rref(m, p)[0]


def row_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Rows of the RREF spanning the row space of ``m`` (shape rank x cols)."""
    m = np.asarray(m, dtype=np.int64)
    if m.shape[0] == 0:
        return m.reshape(0, m.shape[1] if m.ndim == 2 else 0)
    r, red, _ = rref(m, p)
    return red[:r]


def kernel_basis(m: np.ndarray, p: int) -> list[np.ndarray]:
    """Basis of the right kernel ``{v : m v = 0}`` as a list of 1-d arrays."""
    m = np.asarray(m, dtype=np.int64)
    ncols = m.shape[1]
    if m.shape[0] == 0:
        return [np.eye(ncols, dtype=np.int64)[k] for k in range(ncols)]
    r, red, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-red[row, f]) % p
        basis.append(v)
    return basis


def kernel_matrix(m: np.ndarray, p: int) -> np.ndarray:
    """Kernel basis stacked as rows (shape nullity x cols)."""
    m = np.asarray(m, dtype=np.int64)
    ker = kernel_basis(m, p)
    if not ker:
        return np.zeros((0, m.shape[1]), dtype=np.int64)
    return np.array(ker, dtype=np.int64)


def det(m: np.ndarray, p: int) -> int:
    """Exact determinant by Gaussian elimination."""
    a = np.mod(np.array(m, dtype=np.int64, copy=True), p)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("determinant needs a square matrix")
    n = a.shape[0]
    result = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
            result = -result
        pv = int(a[c, c])
        result = (result * pv) % p
        inv = inv_mod(pv, p)
        below = a[c + 1:, c]
        rows = np.nonzero(below)[0] + c + 1
        if rows.size:
            factors = (a[rows, c] * inv) % p
            a[rows] = (a[rows] - np.outer(factors, a[c])) % p
    return result % p


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact product mod p.

    Accumulating a full dot product of int64 entries can overflow for long
    inner dimensions, so the inner dimension is split into chunks whose
    partial sums stay below 2**63.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[1]
    chunk = max(1, (2**62) // max(1, (p - 1) ** 2))
    if inner <= chunk:
        return (a @ b) % p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, inner, chunk):
        out = (out + a[:, s:s + chunk] @ b[s:s + chunk]) % p
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod_p(a: int, p: int) -> int | None:
    """A square root of ``a`` mod p, or None when ``a`` is a non-residue."""
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks: write p - 1 = q * 2**s with q odd.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """A solution x of a x = b (b a 1-d vector); raises if inconsistent."""
    a = np.asarray(a, dtype=np.int64)
    aug = np.concatenate([a, np.asarray(b, dtype=np.int64).reshape(-1, 1)], axis=1)
    r, red, pivots = rref(aug, p)
    n = a.shape[1]
    if pivots and pivots[-1] == n:
        raise ValueError("inconsistent linear system")
    x = np.zeros(n, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = red[row, n]
    return x


def independent_rows(m: np.ndarray, p: int) -> list[int]:
    """Indices of a maximal set of linearly independent rows, chosen greedily."""
    m = np.asarray(m, dtype=np.int64)
    if m.shape[0] == 0:
        return []
    _, _, pivots = rref(m.T, p)
    return list(pivots)
