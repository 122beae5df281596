"""Brute-force strands of Sym(I), the torsion ideal A and the Rees ideal J.

Everything here is plain linear algebra on the monomial bases of
B_(i,j) = R_i (x) S_j, ordered by x-exponent w first and T-exponent second.
In that order, multiplying by x^a y^(k-a) sends basis index ``w * nT + t`` of
B_(i,j) to ``(w + a) * nT + t`` of B_(i+k,j), with nT = dim S_j.

* Sym(I)_(i,j) is B_(i,j) modulo the span of the monomial multiples of g1, g2.
* A_(i,j), for i <= d-2, is the set of classes killed by every monomial of
  degree d-1-i (the annihilator of m^(d-1-i)); A_(i,j) = 0 for i >= d-1.
* J_(i,j) is the kernel of T_k -> h_k, a map B_(i,j) -> R_(i+jd).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from . import exactlin as el
from .hb import HBMatrix
from .polyring import (
    Poly, T1, biform_coeffs, coeff_vector, from_vector, squarefree_multiplicities,
    strand, strand_dim, t_exponents, upoly_monic,
)

Multiset = dict[tuple[int, int], int]


@dataclass(frozen=True)
class SymStrand:
    bidegree: tuple[int, int]
    relations: np.ndarray      # RREF rows spanning the relation space
    pivots: tuple[int, ...]
    basis: tuple[int, ...]     # monomial indices complementing the relations

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class AStrand:
    bidegree: tuple[int, int]
    lifts: np.ndarray          # rows: B-coordinates of a basis of A_(i,j)

    @property
    def dim(self) -> int:
        return self.lifts.shape[0]


@dataclass(frozen=True)
class ImplicitEquation:
    F: Poly
    r: int
    res: Poly


def _empty(n: int) -> np.ndarray:
    return np.zeros((0, n), dtype=np.int64)


@lru_cache(maxsize=None)
def t_shift_index(j: int, k: int) -> np.ndarray:
    """Index map S_j -> S_(j+1) for multiplication by T_(k+1)."""
    src = t_exponents(j)
    dst = {e: n for n, e in enumerate(t_exponents(j + 1))}
    out = np.empty(len(src), dtype=np.int64)
    for n, e in enumerate(src):
        f = list(e)
        f[k] += 1
        out[n] = dst[tuple(f)]
    return out


def t_multiply(rows: np.ndarray, i: int, j: int, k: int) -> np.ndarray:
    """Multiply B_(i,j) coordinate rows by T_(k+1), giving B_(i,j+1) rows."""
    nT, nT1 = comb(j + 2, 2), comb(j + 3, 2)
    idx = t_shift_index(j, k)
    out = np.zeros((rows.shape[0], (i + 1) * nT1), dtype=np.int64)
    for w in range(i + 1):
        out[:, w * nT1 + idx] = rows[:, w * nT:(w + 1) * nT]
    return out


def xy_multiply(rows: np.ndarray, i: int, j: int, a: int, b: int) -> np.ndarray:
    """Multiply B_(i,j) coordinate rows by x^a y^b, giving B_(i+a+b,j) rows."""
    nT = comb(j + 2, 2)
    out = np.zeros((rows.shape[0], (i + a + b + 1) * nT), dtype=np.int64)
    out[:, a * nT:a * nT + rows.shape[1]] = rows
    return out


class Oracle:
    """Strand computations for one Hilbert-Burch matrix, memoized per bidegree."""

    def __init__(self, hb: HBMatrix):
        self.hb = hb
        self.p = hb.p
        self._rel: dict = {}
        self._a: dict = {}
        self._j: dict = {}
        self._g_terms = [list(g.terms.items()) for g in hb.g]

    # ---------------------------------------------------------------- Sym(I)
    def relation_rows(self, i: int, j: int) -> np.ndarray:
        """Spanning rows of (g1, g2) in B_(i,j): every monomial multiple of g_m."""
        tgt = strand(i, j)
        rows = []
        if j >= 1:
            for m, dm in enumerate(self.hb.degs):
                if i - dm < 0:
                    continue
                for mono in strand(i - dm, j - 1).monomials:
                    v = np.zeros(len(tgt), dtype=np.int64)
                    for e, c in self._g_terms[m]:
                        v[tgt.index[tuple(a + b for a, b in zip(mono, e))]] = c
                    rows.append(v)
        if not rows:
            return _empty(len(tgt))
        return np.array(rows, dtype=np.int64)

    def sym_strand(self, i: int, j: int) -> SymStrand:
        key = (i, j)
        if key not in self._rel:
            rows = self.relation_rows(i, j)
            n = strand_dim(i, j)
            if rows.shape[0]:
                r, red, piv = el.rref(rows, self.p)
                red = red[:r]
            else:
                red, piv = _empty(n), []
            pset = set(piv)
            basis = tuple(c for c in range(n) if c not in pset)
            self._rel[key] = SymStrand(key, red, tuple(piv), basis)
        return self._rel[key]

    def sym_dim(self, i: int, j: int) -> int:
        if i < 0 or j < 0:
            return 0
        return self.sym_strand(i, j).dim

    def normal_form(self, rows: np.ndarray, i: int, j: int) -> np.ndarray:
        """Coordinates of B_(i,j) rows in Sym(I)_(i,j) (on the complement basis).

        With the relations in RREF with pivots P and complement N, the class of v
        is v[N] - v[P] . R[:, N]; this map kills exactly the relation space.
        """
        st = self.sym_strand(i, j)
        rows = np.asarray(rows, dtype=np.int64)
        nb = list(st.basis)
        out = rows[:, nb] % self.p
        if st.pivots:
            out = (out - el.matmul(rows[:, list(st.pivots)], st.relations[:, nb], self.p)) % self.p
        return out

    # ---------------------------------------------------------------- A
    def a_strand(self, i: int, j: int) -> AStrand:
        key = (i, j)
        if key in self._a:
            return self._a[key]
        n = strand_dim(i, j)
        d = self.hb.d
        if i < 0 or j < 0 or i >= d - 1:
            res = AStrand(key, _empty(max(n, 0)))
        else:
            k = d - 1 - i
            st = self.sym_strand(d - 1, j)
            # quotient map Q on the target strand (columns of B_(d-1,j))
            N = strand_dim(d - 1, j)
            Q = np.zeros((st.dim, N), dtype=np.int64)
            Q[np.arange(st.dim), list(st.basis)] = 1
            if st.pivots:
                Q[:, list(st.pivots)] = (-st.relations[:, list(st.basis)].T) % self.p
            nT = comb(j + 2, 2)
            blocks = [Q[:, a * nT:a * nT + n] for a in range(k + 1)]
            M = np.vstack(blocks)
            K = el.kernel_matrix(M, self.p)
            if K.shape[0]:
                nf = self.normal_form(K, i, j)
                keep = el.independent_rows(nf, self.p)
                K = K[keep]
            res = AStrand(key, K)
        self._a[key] = res
        return res

    def a_dim(self, i: int, j: int) -> int:
        return self.a_strand(i, j).dim

    # ---------------------------------------------------------------- J
    @lru_cache(maxsize=None)
    def _h_powers(self, j: int) -> np.ndarray:
        """Row t: coefficients (x-exponent order) of h^e for the t-th e in S_j."""
        d, p = self.hb.d, self.p
        h = [np.array(biform_coeffs(f, d), dtype=np.int64) for f in self.hb.h]
        out = np.zeros((comb(j + 2, 2), j * d + 1), dtype=np.int64)
        for t, e in enumerate(t_exponents(j)):
            v = np.array([1], dtype=np.int64)
            for k in range(3):
                for _ in range(e[k]):
                    v = np.convolve(v, h[k]) % p
            out[t] = v
        return out

    def substitution_matrix(self, i: int, j: int) -> np.ndarray:
        """Matrix of B_(i,j) -> R_(i+jd), F -> F(x, y, h1, h2, h3)."""
        d = self.hb.d
        H = self._h_powers(j)
        nT = H.shape[0]
        out = np.zeros((i + j * d + 1, (i + 1) * nT), dtype=np.int64)
        for w in range(i + 1):
            out[w:w + j * d + 1, w * nT:(w + 1) * nT] = H.T
        return out

    def j_strand(self, i: int, j: int) -> np.ndarray:
        key = (i, j)
        if key not in self._j:
            self._j[key] = el.kernel_matrix(self.substitution_matrix(i, j), self.p)
        return self._j[key]

    def j_dim(self, i: int, j: int) -> int:
        if i < 0 or j < 0:
            return 0
        return self.j_strand(i, j).shape[0]

    # ---------------------------------------------------------------- generators
    def _lower_products(self, kind: str, i: int, j: int, imin: int, over_b: bool) -> np.ndarray:
        """B-coordinates of S1 M_(i,j-1) (and R1 M_(i-1,j) when over_b)."""
        parts = []
        if j >= 1:
            low = self._module_rows(kind, i, j - 1)
            if low.shape[0]:
                parts += [t_multiply(low, i, j - 1, k) for k in range(3)]
        if over_b and i - 1 >= imin:
            low = self._module_rows(kind, i - 1, j)
            if low.shape[0]:
                parts += [xy_multiply(low, i - 1, j, 1, 0), xy_multiply(low, i - 1, j, 0, 1)]
        if not parts:
            return _empty(strand_dim(i, j))
        return np.vstack(parts)

    def _module_rows(self, kind: str, i: int, j: int) -> np.ndarray:
        return self.a_strand(i, j).lifts if kind == "A" else self.j_strand(i, j)

    def generator_count(self, kind: str, i: int, j: int, imin: int = 0, over_b: bool = True) -> int:
        if kind == "A":
            top = self.a_dim(i, j)
            if top == 0:
                return 0
            prods = self._lower_products(kind, i, j, imin, over_b)
            if prods.shape[0] == 0:
                return top
            return top - el.rank(self.normal_form(prods, i, j), self.p)
        top = self.j_dim(i, j)
        if top == 0:
            return 0
        prods = self._lower_products(kind, i, j, imin, over_b)
        return top - el.rank(prods, self.p)


@lru_cache(maxsize=64)
def get_oracle(hb: HBMatrix) -> Oracle:
    return Oracle(hb)


# ---------------------------------------------------------------- function API

def sym_strand(hb, i, j) -> SymStrand:
    return get_oracle(hb).sym_strand(i, j)


def sym_dim(hb, i, j) -> int:
    return get_oracle(hb).sym_dim(i, j)


def a_strand(hb, i, j) -> AStrand:
    return get_oracle(hb).a_strand(i, j)


def a_dim(hb, i, j) -> int:
    return get_oracle(hb).a_dim(i, j)


def j_dim(hb, i, j) -> int:
    return get_oracle(hb).j_dim(i, j)


def a_lifts(hb, i, j) -> list[Poly]:
    """Polynomial lifts in B of a basis of A_(i,j)."""
    s = strand(i, j)
    return [from_vector(v, s, hb.p) for v in a_strand(hb, i, j).lifts]


def minimal_generators(hb: HBMatrix, which: str, imax: int | None = None, jmax: int = 8,
                       imin: int = 0) -> Multiset:
    """Bidegrees (with multiplicity) of minimal generators inside the window.

    ``which`` is ``A_as_S_per_i`` (each A_i as an S-module), ``A_as_B`` or
    ``J_as_B``.  For the B-module cases, ``imin`` restricts to the submodule
    living in x-degrees >= imin (for instance A_{>= d1-1}).
    """
    if imax is None:
        imax = hb.delta + 1
    orc = get_oracle(hb)
    kind = "J" if which == "J_as_B" else "A"
    over_b = which != "A_as_S_per_i"
    if which not in ("A_as_S_per_i", "A_as_B", "J_as_B"):
        raise ValueError(f"unknown module {which}")
    out: Multiset = {}
    for i in range(imin, imax + 1):
        for j in range(jmax + 1):
            n = orc.generator_count(kind, i, j, imin, over_b)
            if n:
                out[(i, j)] = n
    return out


def generated_submodule(hb: HBMatrix, gens: list[Poly], imax: int,
                        jmax: int) -> tuple[dict[tuple[int, int], int], Multiset]:
    """Strand dimensions and minimal generator bidegrees of the B-submodule of
    Sym(I) generated by ``gens`` (bi-homogeneous elements of B)."""
    orc = get_oracle(hb)
    p = hb.p
    rows: dict[tuple[int, int], np.ndarray] = {}
    dims: dict[tuple[int, int], int] = {}
    mingens: Multiset = {}
    for i in range(imax + 1):
        for j in range(jmax + 1):
            s = strand(i, j)
            prods = []
            if j >= 1 and rows[(i, j - 1)].shape[0]:
                prods += [t_multiply(rows[(i, j - 1)], i, j - 1, k) for k in range(3)]
            if i >= 1 and rows[(i - 1, j)].shape[0]:
                low = rows[(i - 1, j)]
                prods += [xy_multiply(low, i - 1, j, 1, 0), xy_multiply(low, i - 1, j, 0, 1)]
            own = [coeff_vector(g, s).reshape(1, -1) for g in gens if g.bidegree() == (i, j)]
            low_rank = 0
            if prods:
                low_rank = el.rank(orc.normal_form(np.vstack(prods) % p, i, j), p)
            parts = prods + own
            if parts:
                stacked = np.vstack(parts) % p
                keep = el.independent_rows(orc.normal_form(stacked, i, j), p)
                basis = stacked[keep]
            else:
                basis = _empty(len(s))
            rows[(i, j)] = basis
            dims[(i, j)] = basis.shape[0]
            if basis.shape[0] > low_rank:
                mingens[(i, j)] = basis.shape[0] - low_rank
    return dims, mingens


def multiset_to_list(ms: Multiset) -> list[list[int]]:
    return [[i, j, n] for (i, j), n in sorted(ms.items())]


# ---------------------------------------------------------------- resultant

def sylvester_matrix(hb: HBMatrix) -> list[list[Poly]]:
    """d x d Sylvester matrix of g1, g2 in (x, y); entries are linear forms in T.

    Column index is the x-exponent of the monomials of degree d-1; rows are
    y^a x^b g1 (a + b = d2 - 1) followed by the same shifts of g2.
    """
    d1, d2, d = hb.d1, hb.d2, hb.d
    zero = Poly.zero(hb.p)
    rows = []
    for m, (dm, other) in enumerate(((d1, d2), (d2, d1))):
        for shift in range(other):
            row = [zero] * d
            for l in range(dm + 1):
                row[l + shift] = hb.c(l, m + 1)
            rows.append(row)
    return rows


def _eval_linear(f: Poly, pt: tuple[int, int, int], p: int) -> int:
    s = 0
    for e, c in f.terms.items():
        s += c * pt[0] ** e[2] * pt[1] ** e[3] * pt[2] ** e[4]
    return s % p


def resultant_poly(hb: HBMatrix) -> Poly:
    """Res(g1, g2) in S_d by evaluation at (1, a, b), a + b <= d, and interpolation.

    The triangular grid is unisolvent for polynomials of total degree <= d in
    (T2, T3), which determines the dehomogenization at T1 = 1.
    """
    p, d = hb.p, hb.d
    if d >= p:
        raise ValueError("interpolation grid needs p > d")
    syl = sylvester_matrix(hb)
    mons = [(u, v) for u in range(d + 1) for v in range(d + 1 - u)]
    vals, V = [], []
    for a, b in mons:
        pt = (1, a, b)
        num = np.array([[_eval_linear(f, pt, p) for f in row] for row in syl], dtype=np.int64)
        vals.append(el.det(num, p))
        V.append([pow(a, u, p) * pow(b, v, p) % p for u, v in mons])
    coeffs = el.solve(np.array(V, dtype=np.int64), np.array(vals, dtype=np.int64), p)
    return Poly({(0, 0, d - u - v, u, v): int(c) for (u, v), c in zip(mons, coeffs)}, p)


def implicit_equation(hb: HBMatrix) -> Poly:
    """Generator of J_(0,*) in the lowest T-degree where it is nonzero."""
    orc = get_oracle(hb)
    for j in range(1, hb.d + 1):
        K = orc.j_strand(0, j)
        if K.shape[0]:
            if K.shape[0] != 1:
                raise ArithmeticError("implicit equation is not unique")
            return from_vector(K[0], strand(0, j), hb.p)
    raise ArithmeticError("no implicit equation found up to degree d")


def proportional(f: Poly, g: Poly) -> int | None:
    """The scalar c with f = c g, or None."""
    if g.is_zero():
        return 0 if f.is_zero() else None
    e = next(iter(g.terms))
    c = f.terms.get(e, 0) * el.inv_mod(g.terms[e], f.p) % f.p
    return c if f == g * c else None


def _binary_rth_power(f: Poly, r: int, alpha: int, beta: int) -> bool:
    """Is f(1, T2, alpha + beta T2) an r-th power, counting the root at infinity?"""
    p = f.p
    d = f.total_degree()
    u = [0] * (d + 1)
    special = f.subs({T1 + 2: Poly({(0, 0, 1, 0, 0): alpha, (0, 0, 0, 1, 0): beta}, p)})
    for e, c in special.terms.items():
        u[e[3]] = (u[e[3]] + c) % p
    u = upoly_monic(u, p)
    if not u:
        return False
    if (d - (len(u) - 1)) % r:
        return False
    return all(k % r == 0 for k in squarefree_multiplicities(u, p))


def resultant(hb: HBMatrix) -> ImplicitEquation:
    """Resultant, implicit equation F and the degree r with res = unit * F^r."""
    res = resultant_poly(hb)
    if res.is_zero():
        raise ArithmeticError("resultant vanishes; the input is not a valid Hilbert-Burch matrix")
    F = implicit_equation(hb)
    degF = F.bidegree()[1]
    if hb.d % degF:
        raise ArithmeticError("deg F does not divide d")
    r = hb.d // degF
    if proportional(res, F ** r) in (None, 0):
        raise ArithmeticError("resultant is not a scalar multiple of F^r")
    return ImplicitEquation(F, r, res)


def rth_power_degree(hb: HBMatrix, res: Poly | None = None, trials: int = 3) -> int:
    """Largest r | d such that specializations of res look like r-th powers.

    This is the specialization test: it never needs F, and is cross-checked
    against :func:`resultant` in the tests.
    """
    if res is None:
        res = resultant_poly(hb)
    d = hb.d
    for r in sorted((k for k in range(1, d + 1) if d % k == 0), reverse=True):
        ok = all(_binary_rth_power(res, r, 3 + 5 * t, 7 + 2 * t) for t in range(trials))
        if ok:
            return r
    return 1


# ---------------------------------------------------------------- validators

def hilbert_series_check(twists, n: int) -> bool:
    return sum(twists) == n


def free_hilbert_function(twists, j: int) -> int:
    """dim_k of (sum_b S(-b))_j."""
    return sum(comb(j - b + 2, 2) for b in twists if j - b >= 0)


def pairing_injectivity(hb: HBMatrix, i: int, jmax: int) -> bool:
    """No nonzero v in A_(i,j), j <= jmax, is killed by all of Sym(I)_(delta-i, *).

    Sym(I)_(delta-i) is generated over S by the monomials of R_(delta-i), so it
    is enough to pair with those (T-degree 0 partners); the products land in
    A_(delta, j).
    """
    delta = hb.delta
    if not 0 <= i <= delta:
        raise ValueError("need 0 <= i <= delta")
    orc = get_oracle(hb)
    k = delta - i
    for j in range(jmax + 1):
        L = orc.a_strand(i, j).lifts
        if L.shape[0] == 0:
            continue
        blocks = [orc.normal_form(xy_multiply(L, i, j, a, k - a), delta, j) for a in range(k + 1)]
        M = np.hstack(blocks)
        if el.rank(M, hb.p) < L.shape[0]:
            return False
    return True
