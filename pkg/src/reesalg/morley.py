"""Morley forms and explicit generators of A when d1 = 2.

Tensor encoding: an element of B (x)_S B is a polynomial in seven variables
(x(x)1, y(x)1, 1(x)x, 1(x)y, T1, T2, T3).  The matrix H satisfies
[g_m(x)1 - 1(x)g_m] = [x(x)1 - 1(x)x, y(x)1 - 1(x)y] H, and the coefficients
q_beta of det H give, through a syzygy chi of Upsilon^T, the element
nu1(chi) = sum_beta q_beta chi_beta of A_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import exactlin as el
from .hb import HBMatrix, X2Y2_XY, Y2_X2, canonical_shape, generalized_zero_col1, upsilon_poly
from .polyring import Poly, poly_det, tvar, xy_monomial

TENSOR_NVARS = 7
X1, Y1, X2, Y2 = range(4)


# ------------------------------------------------------------------ tensors

def to_tensor(f: Poly, side: int) -> Poly:
    """Embed a B-polynomial on the left (side 0) or right (side 1) factor."""
    out = {}
    for e, c in f.terms.items():
        xy = (e[0], e[1], 0, 0) if side == 0 else (0, 0, e[0], e[1])
        out[xy + tuple(e[2:])] = c
    return Poly(out, f.p, TENSOR_NVARS)


def _tmono(a: int, b: int, c: int, d: int, p: int) -> Poly:
    return Poly({(a, b, c, d, 0, 0, 0): 1}, p, TENSOR_NVARS)


def _column_entries(hb: HBMatrix, m: int) -> tuple[Poly, Poly]:
    p = hb.p
    dm = hb.degs[m - 1]
    top = Poly.zero(p, TENSOR_NVARS)
    bottom = Poly.zero(p, TENSOR_NVARS)
    for l in range(dm + 1):
        cl = to_tensor(hb.c(l, m), 0)
        for beta in range(l):
            top = top + cl * _tmono(l - 1 - beta, 0, beta, dm - l, p)
        for gamma in range(dm - l):
            bottom = bottom + cl * _tmono(l, dm - l - 1 - gamma, 0, gamma, p)
    return top, bottom


def h_matrix(hb: HBMatrix) -> list[list[Poly]]:
    """The 2x2 matrix H with the tensor difference identity."""
    h11, h21 = _column_entries(hb, 1)
    h12, h22 = _column_entries(hb, 2)
    return [[h11, h12], [h21, h22]]


def h_identity_holds(hb: HBMatrix) -> bool:
    p = hb.p
    H = h_matrix(hb)
    dx = _tmono(1, 0, 0, 0, p) - _tmono(0, 0, 1, 0, p)
    dy = _tmono(0, 1, 0, 0, p) - _tmono(0, 0, 0, 1, p)
    for m in range(2):
        lhs = to_tensor(hb.g[m], 0) - to_tensor(hb.g[m], 1)
        if lhs != dx * H[0][m] + dy * H[1][m]:
            return False
    return True


def _bracket(hb: HBMatrix, i: int, w: int, beta: int) -> Poly:
    """sum over S1 of c_{l,1} c_{m,2} minus sum over S2 of c_{m,1} c_{l,2}."""
    d1, d2 = hb.degs
    total = Poly.zero(hb.p)
    s = w + 1 + beta
    for l in range(beta + 1, d1 + 1):
        m = s - l
        if 0 <= m <= d2 - i - 1 + w:
            total = total + hb.c(l, 1) * hb.c(m, 2)
    for l in range(beta + 1, d2 + 1):
        m = s - l
        if 0 <= m <= d1 - i - 1 + w:
            total = total - hb.c(m, 1) * hb.c(l, 2)
    return total


def morley_det_closed_form(hb: HBMatrix) -> Poly:
    p, delta = hb.p, hb.delta
    total = Poly.zero(p, TENSOR_NVARS)
    for i in range(delta + 1):
        for beta in range(delta - i + 1):
            for w in range(i + 1):
                br = _bracket(hb, i, w, beta)
                if br:
                    total = total + to_tensor(br, 0) * _tmono(w, i - w, beta, delta - i - beta, p)
    return total


def morley_delta_check(hb: HBMatrix) -> bool:
    """det H equals the closed quadruple sum, as polynomials."""
    H = h_matrix(hb)
    return poly_det(H) == morley_det_closed_form(hb)


def q_forms(hb: HBMatrix, i: int) -> list[Poly]:
    """[q_{0,delta-i}, ..., q_{delta-i,0}], representatives in B_(i,2)."""
    if not 0 <= i <= hb.delta:
        raise ValueError("need 0 <= i <= delta")
    p = hb.p
    out = []
    for beta in range(hb.delta - i + 1):
        q = Poly.zero(p)
        for w in range(i + 1):
            br = _bracket(hb, i, w, beta)
            if br:
                q = q + br * xy_monomial(w, i - w, p)
        out.append(q)
    return out


def q_forms_d1_2(hb: HBMatrix, i: int) -> list[Poly]:
    """The same q's through the specialized formula valid when d1 = 2."""
    d1, d2 = hb.degs
    if d1 != 2 or not 1 <= i <= d2 - 1:
        raise ValueError("needs d1 = 2 and 1 <= i <= d2-1")
    p = hb.p
    c = hb.c
    out = []
    for beta in range(d2 - i + 1):
        q = Poly.zero(p)
        if beta == 0:
            for w in range(i + 1):
                q = q + c(1, 1) * c(w, 2) * xy_monomial(w, i - w, p)
            for w in range(1, i + 1):
                q = q + c(2, 1) * c(w - 1, 2) * xy_monomial(w, i - w, p)
        if beta == 1:
            for w in range(i + 1):
                q = q + c(2, 1) * c(w, 2) * xy_monomial(w, i - w, p)
        if beta <= d2 - i - 1:
            q = q - c(0, 1) * c(i + 1 + beta, 2) * xy_monomial(i, 0, p)
        q = q - c(1, 1) * c(i + beta, 2) * xy_monomial(i, 0, p)
        q = q - c(0, 1) * c(i + beta, 2) * xy_monomial(i - 1, 1, p)
        out.append(q)
    return out


# ------------------------------------------------------------------ syzygy catalogs

SHAPE_A = "A"
SHAPE_FRAK_A = "frakA"


def a_matrix(l: int, shape: str, p: int) -> list[list[Poly]]:
    """The (l-2) x l band matrix: rows (T1, T2, T1) or (T1, 0, T2), shifted."""
    if l < 3:
        raise ValueError("need l >= 3")
    t1, t2, zero = tvar(1, p), tvar(2, p), Poly.zero(p)
    pattern = (t1, t2, t1) if shape == SHAPE_A else (t1, zero, t2)
    rows = []
    for r in range(l - 2):
        row = [zero] * l
        for k in range(3):
            row[r + k] = pattern[k]
        rows.append(row)
    return rows


def b_matrix(k: int, p: int) -> list[list[Poly]]:
    """B_k: A_{k+1} with its last column removed, a (k-1) x k matrix."""
    if k < 2:
        raise ValueError("need k >= 2")
    return [row[:-1] for row in a_matrix(k + 1, SHAPE_A, p)]


def dagger(m: list[list[Poly]]) -> list[list[Poly]]:
    return [list(reversed(row)) for row in reversed(m)]


def signed_maximal_minors(m: list[list[Poly]], p: int) -> list[Poly]:
    """For an (n-1) x n matrix: (-1)^(i+1) det(m without column i), i = 1..n."""
    n = len(m[0]) if m else 1
    out = []
    for i in range(n):
        sub = [row[:i] + row[i + 1:] for row in m]
        dt = poly_det(sub) if sub else Poly.const(1, p)
        out.append(dt if i % 2 == 0 else -dt)
    return out


def minors_m(k: int, p: int) -> list[Poly]:
    """m_1..m_k of B_k (returned 0-based)."""
    return signed_maximal_minors(b_matrix(k, p), p)


def minors_M(k: int, p: int) -> list[Poly]:
    """Signed maximal minors of B_k^dagger (0-based)."""
    return signed_maximal_minors(dagger(b_matrix(k, p)), p)


@dataclass(frozen=True)
class SyzygyCatalog:
    ell: int
    shape: str
    matrix: tuple
    columns: tuple            # two columns, each a tuple of Poly of length ell
    twists: tuple[int, int]


def _catalog_a(l: int, p: int) -> tuple[list, list, tuple[int, int]]:
    zero, one = Poly.zero(p), Poly.const(1, p)
    if l == 3:
        # (0, T1, -T2) is what the odd pattern gives at k = 1; (0, T2, -T1)
        # is not a syzygy of (T1, T2, T1).
        return [one, zero, -one], [zero, tvar(1, p), -tvar(2, p)], (1, 2)
    if l % 2 == 0:
        k = l // 2
        m = minors_m(k, p)
        col1 = m[:k] + [zero] + [-m[b] for b in range(k - 1, 0, -1)]
        col2 = [-m[b] for b in range(1, k)] + [zero] + [m[b] for b in range(k - 1, -1, -1)]
        return col1, col2, (k, k)
    k = (l - 1) // 2
    m = minors_m(k, p)
    M = minors_M(k + 1, p)
    col1 = m[:k] + [zero] + [-m[b] for b in range(k - 1, -1, -1)]
    col2 = [-M[b] for b in range(k - 2, -1, -1)] + [zero] + M[:k + 1]
    return col1, col2, (k, k + 1)


def kappa(alpha: int, p: int) -> dict[int, Poly]:
    """kappa_alpha = sum_{a+b=alpha} (T2 t^2)^a (-T1 s^2)^b, keyed by s-exponent."""
    t1, t2 = tvar(1, p), tvar(2, p)
    return {2 * b: t2 ** (alpha - b) * (-t1) ** b for b in range(alpha + 1)}


def _catalog_frak(l: int, p: int) -> tuple[list, list, tuple[int, int]]:
    """Columns in Sym_(l-1) V with basis t^(l-1), s t^(l-2), ..., s^(l-1) (index = s-exponent)."""
    zero = Poly.zero(p)

    def place(elt: dict[int, Poly], s_shift: int) -> list[Poly]:
        col = [zero] * l
        for s_exp, coef in elt.items():
            col[s_exp + s_shift] = coef
        return col

    if l % 2 == 1:
        col1 = place(kappa((l - 3) // 2, p), 1)          # s t kappa_{(l-3)/2}
        col2 = place(kappa((l - 1) // 2, p), 0)          # kappa_{(l-1)/2}
        k = (l - 1) // 2
        return col1, col2, (k, k + 1)
    k = l // 2
    col1 = place(kappa((l - 2) // 2, p), 1)              # s kappa_{(l-2)/2}
    col2 = place(kappa((l - 2) // 2, p), 0)              # t kappa_{(l-2)/2}
    return col1, col2, (k, k)


def frak_columns_displayed(l: int, p: int) -> list[list[Poly]]:
    """The columns written out entrywise: powers of T2 and -T1 in alternating slots."""
    t1, t2, zero = tvar(1, p), tvar(2, p), Poly.zero(p)
    col1, col2 = [zero] * l, [zero] * l
    if l % 2 == 0:
        k = l // 2
        for j in range(k):
            col1[2 * j + 1] = (-t1) ** j * t2 ** (k - 1 - j)
            col2[2 * j] = (-t1) ** j * t2 ** (k - 1 - j)
    else:
        k = (l - 1) // 2
        for j in range(k):
            col1[2 * j + 1] = (-t1) ** j * t2 ** (k - 1 - j)
        for j in range(k + 1):
            col2[2 * j] = (-t1) ** j * t2 ** (k - j)
    return [col1, col2]


def syzygy_catalog(l: int, shape: str, p: int) -> SyzygyCatalog:
    if l < 3:
        raise ValueError("need l >= 3")
    if shape == SHAPE_A:
        c1, c2, tw = _catalog_a(l, p)
    elif shape == SHAPE_FRAK_A:
        c1, c2, tw = _catalog_frak(l, p)
    else:
        raise ValueError(f"unknown shape {shape}")
    mat = a_matrix(l, shape, p)
    return SyzygyCatalog(l, shape, tuple(tuple(r) for r in mat), (tuple(c1), tuple(c2)), tw)


def _u_vector(f: Poly, deg: int) -> list[int]:
    """Coefficients of a form of degree deg in k[T1,T2], indexed by the T2-exponent."""
    v = [0] * (deg + 1)
    for e, c in f.terms.items():
        if e[0] or e[1] or e[4] or e[2] + e[3] != deg:
            raise ValueError("not a form in T1, T2 of the stated degree")
        v[e[3]] = c
    return v


def catalog_kernel_dims(cat: SyzygyCatalog, p: int, tmax: int) -> list[tuple[int, int, int]]:
    """For each degree t <= tmax: (kernel dim of the matrix, span of the columns, free HF).

    Sources are U(-1)^l in degree t, i.e. l copies of U_(t-1); the free
    Hilbert function of U(-a) + U(-b) is (t-a+1)_+ + (t-b+1)_+.
    """
    l = cat.ell
    out = []
    for t in range(1, tmax + 1):
        n = t  # dim U_(t-1)
        # matrix of the map in degree t: column (slot, mono), row (row, mono of degree t)
        cols = []
        for slot in range(l):
            for a in range(n):  # T1^(t-1-a) T2^a
                mono = Poly({(0, 0, t - 1 - a, a, 0): 1}, p)
                col = []
                for r in range(l - 2):
                    col += _u_vector(cat.matrix[r][slot] * mono, t)
                cols.append(col)
        M = np.array(cols, dtype=np.int64).T
        kdim = M.shape[1] - el.rank(M, p)
        # span of U-multiples of the catalog columns landing in degree t
        gens = []
        for col, tw in zip(cat.columns, cat.twists):
            if t - tw < 0:
                continue
            for a in range(t - tw + 1):
                mono = Poly({(0, 0, t - tw - a, a, 0): 1}, p)
                vec = []
                for slot in range(l):
                    vec += _u_vector(col[slot] * mono, t - 1) if not (col[slot] * mono).is_zero() else [0] * t
                gens.append(vec)
        span = el.rank(np.array(gens, dtype=np.int64), p) if gens else 0
        free = sum(max(0, t - b + 1) for b in cat.twists)
        out.append((kdim, span, free))
    return out


def catalog_is_exact(cat: SyzygyCatalog, p: int, tmax: int | None = None) -> bool:
    """matrix * columns = 0 and the columns freely generate the kernel up to tmax."""
    zero = Poly.zero(p)
    for col in cat.columns:
        for row in cat.matrix:
            if sum((a * b for a, b in zip(row, col)), zero) != zero:
                return False
    if tmax is None:
        tmax = max(cat.twists) + 2
    return all(k == s == f for k, s, f in catalog_kernel_dims(cat, p, tmax))


# ------------------------------------------------------------------ nu1

def nu1(hb: HBMatrix, i: int, chi: list[Poly]) -> Poly:
    """[q_0 ... q_{delta-i}] . chi, after checking Upsilon_{d2-i-1,1}^T chi = 0."""
    if not hb.d1 - 1 <= i <= hb.d2 - 2:
        raise ValueError("needs d1-1 <= i <= d2-2")
    if len(chi) != hb.delta - i + 1:
        raise ValueError("chi has the wrong length")
    ups = upsilon_poly(hb, hb.d2 - i - 1, 1)
    zero = Poly.zero(hb.p)
    for c in range(len(ups[0])):
        if sum((ups[r][c] * chi[r] for r in range(len(chi))), zero) != zero:
            raise ValueError("chi is not a syzygy of Upsilon^T")
    q = q_forms(hb, i)
    return sum((a * b for a, b in zip(q, chi)), zero)


# ------------------------------------------------------------------ explicit generators

@dataclass(frozen=True)
class Goal5Generators:
    shape: str
    gens: tuple[tuple[str, tuple[int, int], Poly], ...]   # (case label, bidegree, element)

    def bidegrees(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for _, bd, _g in self.gens:
            out[bd] = out.get(bd, 0) + 1
        return out


def _check_goal5(hb: HBMatrix) -> str:
    if hb.d1 != 2 or hb.d2 <= 2:
        raise ValueError("the explicit generators need d1 = 2 < d2 and a generalized zero in column 1")
    if not generalized_zero_col1(hb)[0]:
        raise ValueError("the explicit generators need d1 = 2 < d2 and a generalized zero in column 1")
    shape = canonical_shape(hb)
    if shape is None:
        raise ValueError("first column is not canonical; run canonicalize_col1 first")
    return shape


def gens_bidegrees(d2: int) -> dict[tuple[int, int], int]:
    """Bidegrees (besides the implicit equation) of the minimal generators."""
    out: dict[tuple[int, int], int] = {}
    for i in range(1, d2 - 1):
        if (d2 - i) % 2 == 0:
            bd = (i, (d2 + 2 - i) // 2)
            out[bd] = out.get(bd, 0) + 1
    bd = (1, (d2 + 3) // 2) if d2 % 2 else (1, (d2 + 2) // 2)
    out[bd] = out.get(bd, 0) + (1 if d2 % 2 else 2)
    return out


def goal5_generators(hb: HBMatrix) -> Goal5Generators:
    """Explicit generators, transcribed case by case."""
    shape = _check_goal5(hb)
    d2, p = hb.d2, hb.p
    T1, T2 = tvar(1, p), tvar(2, p)
    x = lambda a, b: xy_monomial(a, b, p)   # noqa: E731
    c = lambda w: hb.c(w, 2)                 # noqa: E731
    zero = Poly.zero(p)
    out = []
    if shape == X2Y2_XY:
        for i in range(1, d2 - 1):
            if (d2 - i) % 2:
                continue
            bd = (i, (d2 + 2 - i) // 2)
            if i <= d2 - 4:
                k = (d2 - i) // 2
                m = [None] + minors_m(k, p)          # 1-based
                g = zero
                for w in range(i + 1):
                    g = g + T2 * c(w) * x(w, i - w) * m[1] + T1 * c(w) * x(w, i - w) * m[2]
                for w in range(1, i + 1):
                    g = g + T1 * c(w - 1) * x(w, i - w) * m[1]
                inner = zero
                for b in range(2, k + 1):
                    inner = inner + c(d2 + 2 - b) * m[b]
                for b in range(1, k + 1):
                    inner = inner - c(b + i) * m[b]
                g = g + T1 * x(i, 0) * inner
                inner = zero
                for b in range(1, k + 1):
                    inner = inner + (c(d2 + 1 - b) - c(b + i - 1)) * m[b]
                g = g + (T2 * x(i, 0) + T1 * x(i - 1, 1)) * inner
                out.append(("1.a", bd, g))
            else:
                g = zero
                for w in range(d2 - 2):
                    g = g + T2 * c(w) * x(w, d2 - 2 - w)
                for w in range(1, d2 - 1):
                    g = g + T1 * c(w - 1) * x(w, d2 - 2 - w)
                g = g - T1 * c(d2 - 1) * x(d2 - 2, 0) - T1 * c(d2 - 2) * x(d2 - 3, 1)
                g = g + T2 * c(d2) * x(d2 - 2, 0) + T1 * c(d2) * x(d2 - 3, 1)
                out.append(("1.a'", bd, g))
        if d2 % 2:
            K = (d2 + 1) // 2
            M = [None] + minors_M(K, p)
            h = (d2 - 1) // 2
            g = zero
            if d2 == 3:
                g = g + (T1 * c(0) * x(0, 1) + T1 * c(1) * x(1, 0)) * M[1]
            if d2 >= 5:
                g = g - (T2 * c(0) * x(0, 1) + T2 * c(1) * x(1, 0) + T1 * c(0) * x(1, 0)) * M[(d2 - 3) // 2]
            if d2 >= 7:
                g = g - (T1 * c(0) * x(0, 1) + T1 * c(1) * x(1, 0)) * M[(d2 - 5) // 2]
            for b in range(1, h + 1):
                g = g - T1 * c(K + b) * x(1, 0) * M[b]
            for b in range(1, (d2 - 3) // 2 + 1):
                g = g + (T1 * c(K - b) * x(1, 0) + T2 * c(h - b) * x(1, 0) + T1 * c(h - b) * x(0, 1)) * M[b]
            for b in range(1, K + 1):
                g = g - (T2 * c(h + b) * x(1, 0) + T1 * c(h + b) * x(0, 1)) * M[b]
            out.append(("1.b", (1, (d2 + 3) // 2), g))
        else:
            k = d2 // 2
            m = [None] + minors_m(k, p)
            g = (T2 * c(0) * x(0, 1) + T2 * c(1) * x(1, 0) + T1 * c(0) * x(1, 0)) * m[1]
            g = g + (T1 * c(0) * x(0, 1) + T1 * c(1) * x(1, 0)) * m[2]
            for b in range(1, k + 1):
                g = g - (T1 * c(1 + b) * x(1, 0) + T2 * c(b) * x(1, 0) + T1 * c(b) * x(0, 1)) * m[b]
            for b in range(3, k + 1):
                g = g + T1 * c(d2 + 3 - b) * x(1, 0) * m[b]
            for b in range(2, k + 1):
                g = g + (T2 * c(d2 + 2 - b) * x(1, 0) + T1 * c(d2 + 2 - b) * x(0, 1)) * m[b]
            gp = -(T2 * c(0) * x(0, 1) + T2 * c(1) * x(1, 0) + T1 * c(0) * x(1, 0)) * m[2]
            if d2 >= 6:
                gp = gp - (T1 * c(0) * x(0, 1) + T1 * c(1) * x(1, 0)) * m[3]
            for b in range(2, k + 1):
                gp = gp + (T1 * c(b) * x(1, 0) + T2 * c(b - 1) * x(1, 0) + T1 * c(b - 1) * x(0, 1)
                           - T1 * c(d2 - b + 2) * x(1, 0)) * m[b]
            for b in range(1, k + 1):
                gp = gp - (T2 * c(1 + d2 - b) * x(1, 0) + T1 * c(1 + d2 - b) * x(0, 1)) * m[b]
            bd = (1, (d2 + 2) // 2)
            out.append(("1.c", bd, g))
            out.append(("1.c'", bd, gp))
    else:
        mT1 = -T1
        for i in range(1, d2 - 1):
            if (d2 - i) % 2:
                continue
            K = (d2 - i) // 2
            g = zero
            for w in range(i + 1):
                g = g + c(w) * x(w, i - w) * T2 ** K
            for lam in range(1, K + 1):
                g = g + (c(i + 2 * lam - 1) * x(0, 1) + c(i + 2 * lam) * x(1, 0)) * x(i - 1, 0) \
                    * mT1 ** lam * T2 ** (K - lam)
            out.append(("2.a", (i, (d2 + 2 - i) // 2), g))
        if d2 % 2:
            K = (d2 + 1) // 2
            g = zero
            for lam in range(1, K + 1):
                g = g + c(2 * lam - 1) * x(0, 1) * mT1 ** lam * T2 ** (K - lam)
            for lam in range(0, (d2 - 1) // 2 + 1):
                g = g + c(2 * lam) * x(1, 0) * mT1 ** lam * T2 ** (K - lam)
            out.append(("2.b", (1, (d2 + 3) // 2), g))
        else:
            K = d2 // 2
            g = zero
            for lam in range(1, K + 1):
                g = g + c(2 * lam - 1) * x(0, 1) * mT1 ** lam * T2 ** (K - lam)
            for lam in range(0, K + 1):
                g = g + c(2 * lam) * x(1, 0) * mT1 ** lam * T2 ** (K - lam)
            gp = zero
            for lam in range(0, K + 1):
                gp = gp + c(2 * lam) * x(0, 1) * mT1 ** lam * T2 ** (K - lam)
            for lam in range(0, (d2 - 2) // 2 + 1):
                gp = gp + c(1 + 2 * lam) * x(1, 0) * mT1 ** lam * T2 ** (K - lam)
            bd = (1, (d2 + 2) // 2)
            out.append(("2.c", bd, g))
            out.append(("2.c'", bd, gp))
    return Goal5Generators(shape, tuple(out))


def goal5_via_nu1(hb: HBMatrix) -> Goal5Generators:
    """The same generators built as nu1(chi) with chi from the syzygy catalogs."""
    shape = _check_goal5(hb)
    d2, p = hb.d2, hb.p
    cat_shape = SHAPE_A if shape == X2Y2_XY else SHAPE_FRAK_A
    out = []
    for i in range(1, d2 - 1):
        if (d2 - i) % 2 == 0:
            cat = syzygy_catalog(d2 - i + 1, cat_shape, p)
            out.append(("family", (i, (d2 + 2 - i) // 2), nu1(hb, i, list(cat.columns[0]))))
    cat = syzygy_catalog(d2, cat_shape, p)
    if d2 % 2:
        out.append(("i=1 odd", (1, (d2 + 3) // 2), nu1(hb, 1, list(cat.columns[1]))))
    else:
        bd = (1, (d2 + 2) // 2)
        out.append(("i=1 even", bd, nu1(hb, 1, list(cat.columns[0]))))
        out.append(("i=1 even'", bd, nu1(hb, 1, list(cat.columns[1]))))
    return Goal5Generators(shape, tuple(out))
