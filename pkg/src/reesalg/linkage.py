"""Linkage generators: Lambda_l, a canonical Xi_l, and the Delta minors.

For 1 <= l <= d1, the row vector [y^l, x y^(l-1), ..., x^l] has the
bidiagonal Hilbert-Burch matrix Lambda_l, and [g1 g2] = [y^l ... x^l] Xi_l for
an (l+1) x 2 matrix Xi_l.  The maximal minors of Psi_l = [Lambda_l | Xi_l]
that use both Xi columns generate A_(>= i) when l = d-1-i >= 1 and
d2-1 <= i <= delta.
"""

from __future__ import annotations

import numpy as np

from . import exactlin as el
from .hb import HBMatrix
from .oracle import get_oracle
from .polyring import Poly, coeff_vector, poly_det, strand, xvar, xy_monomial, yvar


def lambda_matrix(l: int, p: int) -> list[list[Poly]]:
    """(l+1) x l matrix with -x on the diagonal and y just below it."""
    if l < 1:
        raise ValueError("need l >= 1")
    zero = Poly.zero(p)
    m = [[zero] * l for _ in range(l + 1)]
    for c in range(l):
        m[c][c] = -xvar(p)
        m[c + 1][c] = yvar(p)
    return m


def xi_matrix(hb: HBMatrix, l: int) -> list[list[Poly]]:
    """Canonical Xi_l: x^w y^(d_m-w) of g_m goes to row a = min(w, l)."""
    if not 1 <= l <= hb.d1:
        raise ValueError("need 1 <= l <= d1")
    p = hb.p
    m_ = [[Poly.zero(p), Poly.zero(p)] for _ in range(l + 1)]
    for m in (1, 2):
        dm = hb.degs[m - 1]
        for w in range(dm + 1):
            a = min(w, l)
            m_[a][m - 1] = m_[a][m - 1] + hb.c(w, m) * xy_monomial(w - a, dm - w - l + a, p)
    return m_


def row_basis_forms(l: int, p: int) -> list[Poly]:
    return [xy_monomial(a, l - a, p) for a in range(l + 1)]


def psi_matrix(hb: HBMatrix, l: int) -> list[list[Poly]]:
    lam, xi = lambda_matrix(l, hb.p), xi_matrix(hb, l)
    return [lam[r] + xi[r] for r in range(l + 1)]


def delta_minors(hb: HBMatrix, i: int) -> list[Poly]:
    """The d-1-i maximal minors of Psi_(d-1-i) containing both Xi columns.

    Minor k deletes Lambda column k; it is expanded along the two Xi columns
    (generalized Laplace expansion over row pairs).
    """
    if not hb.d2 - 1 <= i <= hb.delta:
        raise ValueError("need d2-1 <= i <= delta")
    l = hb.d - 1 - i
    p = hb.p
    lam, xi = lambda_matrix(l, p), xi_matrix(hb, l)
    out = []
    for k in range(l):
        cols = [c for c in range(l) if c != k]
        total = Poly.zero(p)
        # The reduced square matrix has columns cols + [xi1, xi2]; the Xi block
        # sits in columns l-1, l (0-based) of an (l+1) x (l+1) matrix.
        for r1 in range(l + 1):
            for r2 in range(r1 + 1, l + 1):
                block = xi[r1][0] * xi[r2][1] - xi[r2][0] * xi[r1][1]
                if block.is_zero():
                    continue
                rest = [r for r in range(l + 1) if r not in (r1, r2)]
                if rest:
                    comp = poly_det([[lam[r][c] for c in cols] for r in rest])
                else:
                    comp = Poly.const(1, p)
                sign = (r1 + r2 + (l - 1) + l) % 2
                term = block * comp
                total = total - term if sign else total + term
        out.append(total)
    return out


def sylvester_form(hb: HBMatrix) -> Poly:
    """det Xi_1, the generator of A_(delta, 2)."""
    return delta_minors(hb, hb.delta)[0]


def span_dim_in_sym(hb: HBMatrix, polys: list[Poly], i: int, j: int) -> int:
    """Dimension of the span of the classes of ``polys`` in Sym(I)_(i,j)."""
    if not polys:
        return 0
    s = strand(i, j)
    rows = np.array([coeff_vector(f, s) for f in polys], dtype=np.int64)
    return el.rank(get_oracle(hb).normal_form(rows, i, j), hb.p)
