"""Hilbert-Burch input: validation, minors, g1/g2, banded coefficient matrices.

The matrix phi is 3x2 with columns of degrees d1 <= d2.  Entry (r, m) is a
binary form stored as a coefficient list indexed by the x-exponent, so the list
runs from the y-pure monomial to the x-pure one.  The symmetric-algebra
equations are g_m = T1 phi[0][m] + T2 phi[1][m] + T3 phi[2][m], and
c_{l,m} denotes the linear form multiplying x^l y^(d_m - l) in g_m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

import numpy as np

from . import exactlin as el
from .polyring import (
    Poly, biform, biform_coeffs, gcd_biforms, monomials_of_degree, tvar,
    xvar, yvar, X, Y,
)


class ValidationError(ValueError):
    """The input is not a Hilbert-Burch matrix of a height-2, 3-generated ideal."""


class ExtensionRequired(ValueError):
    """A normal form needs roots that do not exist in F_p."""


Coeffs = tuple[int, ...]


@dataclass(frozen=True)
class HBMatrix:
    """A validated 3x2 Hilbert-Burch matrix over F_p.

    ``cols[m][r]`` is the coefficient tuple of entry (r, m).  Build instances
    with :func:`validate`; the constructor itself performs no checks.
    """

    p: int
    cols: tuple[tuple[Coeffs, Coeffs, Coeffs], tuple[Coeffs, Coeffs, Coeffs]]
    name: str = field(default="", compare=False)

    @property
    def d1(self) -> int:
        return len(self.cols[0][0]) - 1

    @property
    def d2(self) -> int:
        return len(self.cols[1][0]) - 1

    @property
    def degs(self) -> tuple[int, int]:
        return (self.d1, self.d2)

    @property
    def d(self) -> int:
        return self.d1 + self.d2

    @property
    def delta(self) -> int:
        return self.d - 2

    def entry(self, r: int, m: int) -> Poly:
        return biform(self.cols[m][r], self.p)

    @cached_property
    def phi(self) -> list[list[Poly]]:
        return [[self.entry(r, m) for m in range(2)] for r in range(3)]

    @cached_property
    def h(self) -> tuple[Poly, Poly, Poly]:
        return signed_minors(self.phi)

    @cached_property
    def g(self) -> tuple[Poly, Poly]:
        p = self.p
        return tuple(
            sum((tvar(r + 1, p) * self.phi[r][m] for r in range(3)), Poly.zero(p))
            for m in range(2)
        )

    @cached_property
    def c_table(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """c_table[m][l] = (a1, a2, a3) with c_{l,m} = a1 T1 + a2 T2 + a3 T3."""
        return tuple(
            tuple(tuple(self.cols[m][r][l] % self.p for r in range(3)) for l in range(self.degs[m] + 1))
            for m in range(2)
        )

    def c(self, l: int, m: int) -> Poly:
        """The linear form c_{l,m}; m is 1 or 2; zero outside 0 <= l <= d_m."""
        dm = self.degs[m - 1]
        if l < 0 or l > dm:
            return Poly.zero(self.p)
        a = self.c_table[m - 1][l]
        return sum((tvar(k + 1, self.p) * a[k] for k in range(3)), Poly.zero(self.p))

    def key(self) -> tuple:
        return (self.p, self.cols)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "degrees": [self.d1, self.d2],
            "phi": [[list(self.cols[m][r]) for m in range(2)] for r in range(3)],
        }


def signed_minors(phi: list[list[Poly]]) -> tuple[Poly, Poly, Poly]:
    """h_j = (-1)^(j+1) det(phi without row j), so that [h1 h2 h3] phi = 0."""
    def minor(a, b):
        return phi[a][0] * phi[b][1] - phi[b][0] * phi[a][1]
    return (minor(1, 2), -minor(0, 2), minor(0, 1))


def _as_coeffs(entry, p: int) -> Coeffs:
    if isinstance(entry, Poly):
        if entry.is_zero():
            raise ValidationError("zero Poly entries need an explicit degree; pass a coefficient list")
        n = entry.bidegree()[0]
        return tuple(biform_coeffs(entry, n))
    return tuple(int(c) % p for c in entry)


def validate(raw, p: int, name: str = "") -> HBMatrix:
    """Check and normalize a raw 3x2 matrix of binary forms.

    ``raw[r][m]`` is a coefficient list (x-exponent order) or a :class:`Poly`.
    Columns are swapped if needed so that d1 <= d2.
    """
    if not el.is_prime(p) or p < 5:
        raise ValidationError(f"p = {p} must be a prime >= 5")
    if len(raw) != 3 or any(len(row) != 2 for row in raw):
        raise ValidationError("phi must be a 3x2 matrix")
    cols = []
    for m in range(2):
        col = tuple(_as_coeffs(raw[r][m], p) for r in range(3))
        if len({len(e) for e in col}) != 1 or len(col[0]) < 2:
            raise ValidationError(f"column {m + 1} entries must share one positive degree")
        cols.append(col)
    if len(cols[0][0]) > len(cols[1][0]):
        cols.reverse()
    hb = HBMatrix(p, (cols[0], cols[1]), name)
    check_invariants(hb)
    return hb


def check_invariants(hb: HBMatrix) -> None:
    h = hb.h
    for m in range(2):
        if not sum((h[r] * hb.phi[r][m] for r in range(3)), Poly.zero(hb.p)).is_zero():
            raise ValidationError("internal error: [h] phi is not zero")
    if any(f.is_zero() for f in h):
        raise ValidationError("not minimally 3-generated: a maximal minor vanishes")
    if gcd_biforms(list(h)).bidegree() != (0, 0):
        raise ValidationError("ideal not height 2: the maximal minors share a factor")
    mat = np.array([biform_coeffs(f, hb.d) for f in h], dtype=np.int64)
    if el.rank(mat, hb.p) < 3:
        raise ValidationError("not minimally 3-generated: the minors are linearly dependent")


def from_polys(rows: list[list[Poly]], p: int, name: str = "") -> HBMatrix:
    return validate(rows, p, name)


def upsilon(hb: HBMatrix, n: int, m: int) -> list[np.ndarray]:
    """Upsilon_{n,m} as three (d_m + n) x n matrices, one per T-variable.

    Entry (r, c) is c_{r-c,m}; the matrix sends the coordinates of a form of
    degree n-1 (basis y^(n-1), ..., x^(n-1)) to those of its product with g_m.
    """
    if n < 1 or m not in (1, 2):
        raise ValueError("need n >= 1 and m in {1, 2}")
    dm = hb.degs[m - 1]
    mats = [np.zeros((dm + n, n), dtype=np.int64) for _ in range(3)]
    for c in range(n):
        for l in range(dm + 1):
            for k in range(3):
                mats[k][l + c, c] = hb.c_table[m - 1][l][k]
    return mats


def upsilon_poly(hb: HBMatrix, n: int, m: int) -> list[list[Poly]]:
    mats = upsilon(hb, n, m)
    p = hb.p
    rows, cols = mats[0].shape
    return [[sum((tvar(k + 1, p) * int(mats[k][r, c]) for k in range(3)), Poly.zero(p))
             for c in range(cols)] for r in range(rows)]


def generalized_zero_col1(hb: HBMatrix) -> tuple[bool, int]:
    """(has_gz, mu1): mu1 is the dimension of the span of the first-column entries."""
    mu1 = el.rank(np.array(hb.cols[0], dtype=np.int64), hb.p)
    return mu1 <= 2, mu1


def coeff_C(hb: HBMatrix) -> list[list[Poly]]:
    """The (d1+1) x 2 matrix C = [Upsilon_{1,1} | Upsilon_{1,2}] (needs d1 = d2)."""
    if hb.d1 != hb.d2:
        raise ValueError("C is defined for equal column degrees only")
    return [[hb.c(l, m) for m in (1, 2)] for l in range(hb.d1 + 1)]


def phi_from_C(C: list[list[Poly]], p: int, name: str = "") -> HBMatrix:
    """Inverse of :func:`coeff_C`; the result is validated and may be rejected."""
    from .polyring import linear_coeffs
    d1 = len(C) - 1
    raw = [[[0] * (d1 + 1) for _ in range(2)] for _ in range(3)]
    for l in range(d1 + 1):
        for m in range(2):
            a = linear_coeffs(C[l][m])
            for j in range(3):
                raw[j][m][l] = a[j]
    return validate(raw, p, name)


def _s2_vector(f: Poly) -> list[int]:
    mons = monomials_of_degree(3, 2)
    v = [0] * len(mons)
    for e, c in f.terms.items():
        v[mons.index(e[2:])] = c
    return v


def mu_I2C(hb: HBMatrix) -> int:
    """Dimension of the span of the 2x2 minors of C inside S_2."""
    C = coeff_C(hb)
    rows = []
    for a, b in combinations(range(len(C)), 2):
        f = C[a][0] * C[b][1] - C[b][0] * C[a][1]
        rows.append(_s2_vector(f))
    return el.rank(np.array(rows, dtype=np.int64), hb.p)


def mu_I1(hb: HBMatrix) -> int:
    """Dimension of the span of the six entries of phi inside R_{d1} (d1 = d2)."""
    if hb.d1 != hb.d2:
        raise ValueError("mu(I1(phi)) is computed for equal column degrees only")
    mat = np.array([hb.cols[m][r] for m in range(2) for r in range(3)], dtype=np.int64)
    return el.rank(mat, hb.p)


# --------------------------------------------------------------------------
# canonical first column when d1 = 2

X2Y2_XY = "X2Y2_XY"   # [x^2 + y^2, xy, 0]
Y2_X2 = "Y2_X2"       # [y^2, x^2, 0]

CANONICAL_COL1 = {
    X2Y2_XY: ((1, 0, 1), (0, 1, 0), (0, 0, 0)),
    Y2_X2: ((1, 0, 0), (0, 0, 1), (0, 0, 0)),
}


@dataclass(frozen=True)
class Transform:
    """phi' = P . phi(L(x, y)), where L sends x -> L[0][0] x + L[0][1] y and
    y -> L[1][0] x + L[1][1] y."""

    P: tuple[tuple[int, ...], ...]
    L: tuple[tuple[int, int], tuple[int, int]]


def canonical_shape(hb: HBMatrix) -> str | None:
    for shape, col in CANONICAL_COL1.items():
        if tuple(tuple(e) for e in hb.cols[0]) == col:
            return shape
    return None


def apply_transform(hb: HBMatrix, t: Transform) -> HBMatrix:
    p = hb.p
    x, y = xvar(p), yvar(p)
    sub = {X: x * t.L[0][0] + y * t.L[0][1], Y: x * t.L[1][0] + y * t.L[1][1]}
    moved = [[hb.phi[r][m].subs(sub) for m in range(2)] for r in range(3)]
    raw = [[[0] * (hb.degs[m] + 1) for m in range(2)] for _ in range(3)]
    for r in range(3):
        for m in range(2):
            f = sum((moved[s][m] * t.P[r][s] for s in range(3)), Poly.zero(p))
            raw[r][m] = biform_coeffs(f, hb.degs[m])
    return validate(raw, p, hb.name)


def _degenerate_member(q: list[int], p: int) -> tuple[int, tuple[int, int]]:
    """Write a degenerate binary quadratic (coeffs of y^2, xy, x^2) as c * l^2.

    Returns c and l = (u, v) meaning u x + v y.
    """
    C, B, A = (q[0] % p, q[1] % p, q[2] % p)
    if A:
        return A, (1, B * el.inv_mod(2 * A, p) % p)
    return C, (0, 1)


def canonicalize_col1(hb: HBMatrix, prefer: str = Y2_X2) -> tuple[HBMatrix, str, Transform]:
    """Bring the first column to [y^2, x^2, 0] or [x^2 + y^2, xy, 0].

    Needs d1 = 2 and a generalized zero in column 1.  An input that already has
    a canonical first column is returned unchanged with the identity transform.
    """
    p = hb.p
    if hb.d1 != 2:
        raise ValueError("canonicalization needs d1 = 2")
    has_gz, _ = generalized_zero_col1(hb)
    if not has_gz:
        raise ValueError("canonicalization needs a generalized zero in column 1")
    ident = Transform(((1, 0, 0), (0, 1, 0), (0, 0, 1)), ((1, 0), (0, 1)))
    shape = canonical_shape(hb)
    if shape is not None:
        return hb, shape, ident
    if prefer not in CANONICAL_COL1:
        raise ValueError(f"unknown shape {prefer}")

    # Row operation moving a zero into the third slot of column 1.
    K = np.array(hb.cols[0], dtype=np.int64)
    v = el.kernel_basis(K.T, p)[0]
    P0 = None
    for a, b in ((0, 1), (0, 2), (1, 2)):
        cand = np.array([np.eye(3, dtype=np.int64)[a], np.eye(3, dtype=np.int64)[b], v])
        if el.det(cand, p):
            P0 = cand
            break
    q = (P0[:2] @ K) % p   # the two pencil generators
    # members a q1 + b q2 have coefficients (C, B, A) = a q1 + b q2; the
    # discriminant B^2 - 4AC is a binary quadratic alpha a^2 + beta ab + gamma b^2.
    def coef(u, w):
        return int(u[w])
    C1, B1, A1 = (coef(q[0], 0), coef(q[0], 1), coef(q[0], 2))
    C2, B2, A2 = (coef(q[1], 0), coef(q[1], 1), coef(q[1], 2))
    alpha = (B1 * B1 - 4 * A1 * C1) % p
    beta = (2 * B1 * B2 - 4 * (A1 * C2 + A2 * C1)) % p
    gamma = (B2 * B2 - 4 * A2 * C2) % p
    roots: list[tuple[int, int]] = []
    if alpha == 0 and beta == 0 and gamma == 0:
        raise ExtensionRequired("every member of the pencil is degenerate")
    if alpha == 0:
        roots.append((1, 0))
        if beta:
            roots.append(((-gamma) * el.inv_mod(beta, p) % p, 1))
    else:
        disc = (beta * beta - 4 * alpha * gamma) % p
        s = el.sqrt_mod_p(disc, p)
        if s is None:
            raise ExtensionRequired("the degenerate members of the pencil are not defined over F_p")
        inv = el.inv_mod(2 * alpha, p)
        roots = [((-beta + s) * inv % p, 1), ((-beta - s) * inv % p, 1)]
    if len(roots) < 2 or roots[0] == roots[1]:
        raise ExtensionRequired("the pencil has a single degenerate member")
    members = []
    for a, b in roots:
        coeffs = [(a * int(q[0][w]) + b * int(q[1][w])) % p for w in range(3)]
        c, lin = _degenerate_member(coeffs, p)
        members.append((a, b, c, lin))
    # rows l1^2, l2^2 of the pencil
    R2 = np.array([[a * el.inv_mod(c, p) % p, b * el.inv_mod(c, p) % p] for a, b, c, _ in members],
                  dtype=np.int64)
    (u1, v1), (u2, v2) = members[0][3], members[1][3]
    M = np.array([[u2, v2], [u1, v1]], dtype=np.int64)   # (x, y) -> (l2, l1)
    inv2 = _inv2(M, p)
    if prefer == Y2_X2:
        # l1 -> y and l2 -> x: substitute (x, y) -> M^-1 (x, y)
        L = inv2
        R_final = R2
    else:
        # l1 -> x + y and l2 -> x - y, then (r1 + r2)/2 = x^2 + y^2, (r1 - r2)/4 = xy
        target = np.array([[1, -1], [1, 1]], dtype=np.int64)   # rows: l2 -> x - y, l1 -> x + y
        L = (inv2 @ target) % p
        half, quarter = el.inv_mod(2, p), el.inv_mod(4, p)
        mix = np.array([[half, half], [quarter, (-quarter) % p]], dtype=np.int64)
        R_final = (mix @ R2) % p
    P = np.zeros((3, 3), dtype=np.int64)
    P[:2] = (R_final @ P0[:2]) % p
    P[2] = P0[2]
    t = Transform(tuple(tuple(int(a) for a in row) for row in P),
                  tuple(tuple(int(a) for a in row) for row in L))
    out = apply_transform(hb, t)
    if canonical_shape(out) != prefer:
        raise ExtensionRequired("internal error: normal form not reached")
    return out, prefer, t


def _inv2(M: np.ndarray, p: int) -> np.ndarray:
    a, b, c, d = (int(M[0, 0]), int(M[0, 1]), int(M[1, 0]), int(M[1, 1]))
    dt = (a * d - b * c) % p
    if dt == 0:
        raise ExtensionRequired("the degenerate members share a linear factor")
    inv = el.inv_mod(dt, p)
    return np.array([[d * inv, -b * inv], [-c * inv, a * inv]], dtype=np.int64) % p


def random_hb(d1: int, d2: int, p: int, rng, name: str = "", max_tries: int = 200) -> HBMatrix:
    """A random valid matrix with column degrees (d1, d2); ``rng`` is a random.Random."""
    for _ in range(max_tries):
        raw = [[[rng.randrange(p) for _ in range(d + 1)] for d in (d1, d2)] for _ in range(3)]
        try:
            return validate(raw, p, name)
        except ValidationError:
            continue
    raise ValidationError(f"no valid matrix of degrees ({d1}, {d2}) found in {max_tries} tries")
