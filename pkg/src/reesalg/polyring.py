"""Sparse polynomials over F_p and strand coordinates for B = k[x,y,T1,T2,T3].

A :class:`Poly` maps exponent tuples to nonzero coefficients in ``[1, p)``.
Elements of R = k[x,y], S = k[T1,T2,T3] and B all use the same five-variable
layout ``(x, y, T1, T2, T3)``, so products between them need no conversion.
A binary form is a Poly whose T-exponents vanish, an S-form one whose x,y
exponents vanish.  Polynomials with other variable counts (the tensor
encoding used for Morley forms) are supported as long as both operands agree.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable

import numpy as np

from .exactlin import inv_mod

NVARS = 5
X, Y, T1, T2, T3 = range(5)
VAR_NAMES = ("x", "y", "T1", "T2", "T3")


class Poly:
    """Sparse polynomial: ``terms`` maps exponent tuples to coefficients mod p."""

    __slots__ = ("terms", "p", "nvars")

    def __init__(self, terms: dict | None, p: int, nvars: int = NVARS):
        self.p = p
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            c %= p
            if c:
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have {nvars} entries")
                clean[tuple(e)] = c
        self.terms = clean

    # construction helpers
    @classmethod
    def zero(cls, p: int, nvars: int = NVARS) -> "Poly":
        return cls({}, p, nvars)

    @classmethod
    def const(cls, c: int, p: int, nvars: int = NVARS) -> "Poly":
        return cls({(0,) * nvars: c}, p, nvars)

    @classmethod
    def var(cls, k: int, p: int, nvars: int = NVARS) -> "Poly":
        e = [0] * nvars
        e[k] = 1
        return cls({tuple(e): 1}, p, nvars)

    @classmethod
    def monomial(cls, exps: Iterable[int], p: int, c: int = 1) -> "Poly":
        exps = tuple(exps)
        return cls({exps: c}, p, len(exps))

    # arithmetic
    def _check(self, other: "Poly"):
        if self.p != other.p or self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, np.integer)):
            return Poly.const(int(other), self.p, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = (t.get(e, 0) + c) % self.p
        return Poly(t, self.p, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, self.p, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return Poly({e: c * int(other) for e, c in self.terms.items()}, self.p, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = (t.get(e, 0) + c1 * c2) % p
        return Poly(t, p, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.p, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = Poly.const(int(other), self.p, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.p == other.p and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # grading
    def bidegree(self) -> tuple[int, int] | None:
        """(x,y)-degree and T-degree for five-variable polys; None for zero."""
        if not self.terms:
            return None
        degs = {(e[0] + e[1], sum(e[2:])) for e in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is not bi-homogeneous")
        return next(iter(degs))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def scale(self, c: int) -> "Poly":
        return self * int(c)

    def subs(self, values: dict[int, "Poly"]) -> "Poly":
        """Substitute polynomials for some variables (indices into the exponent tuple)."""
        result = Poly.zero(self.p, self.nvars)
        cache: dict = {}
        for e, c in self.terms.items():
            keep = [0] * self.nvars
            term = Poly.const(c, self.p, self.nvars)
            for k, a in enumerate(e):
                if a == 0:
                    continue
                if k in values:
                    key = (k, a)
                    if key not in cache:
                        cache[key] = values[k] ** a
                    term = term * cache[key]
                else:
                    keep[k] = a
            result = result + term * Poly.monomial(keep, self.p)
        return result

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def format_poly(f: Poly, names: tuple[str, ...] | None = None) -> str:
    """Deterministic human-readable rendering (terms sorted by exponent)."""
    if names is None:
        names = VAR_NAMES if f.nvars == NVARS else tuple(f"v{k}" for k in range(f.nvars))
    if not f.terms:
        return "0"
    parts = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        mono = "*".join(n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts)


# --------------------------------------------------------------------------
# ring-specific constructors

def biform(coeffs: Iterable[int], p: int) -> Poly:
    """Binary form sum_w coeffs[w] x^w y^(n-w), with n = len(coeffs) - 1."""
    coeffs = list(coeffs)
    n = len(coeffs) - 1
    return Poly({(w, n - w, 0, 0, 0): c for w, c in enumerate(coeffs)}, p)


def biform_coeffs(f: Poly, n: int) -> list[int]:
    """Inverse of :func:`biform` for a form of known degree n (zero allowed)."""
    out = [0] * (n + 1)
    for e, c in f.terms.items():
        if e[0] + e[1] != n or any(e[2:]):
            raise ValueError("not a binary form of the stated degree")
        out[e[0]] = c
    return out


def spoly_linear(coeffs: Iterable[int], p: int) -> Poly:
    """Linear form a1 T1 + a2 T2 + a3 T3."""
    a = list(coeffs)
    return Poly({(0, 0, 1, 0, 0): a[0], (0, 0, 0, 1, 0): a[1], (0, 0, 0, 0, 1): a[2]}, p)


def xvar(p):
    return Poly.var(X, p)


def yvar(p):
    return Poly.var(Y, p)


def tvar(k: int, p: int) -> Poly:
    """T_k for k = 1, 2, 3."""
    return Poly.var(T1 + k - 1, p)


def xy_monomial(a: int, b: int, p: int, c: int = 1) -> Poly:
    return Poly({(a, b, 0, 0, 0): c}, p)


def linear_coeffs(f: Poly) -> list[int]:
    """Coefficients (a1, a2, a3) of a linear S-form (zero allowed)."""
    out = [0, 0, 0]
    for e, c in f.terms.items():
        if e[0] or e[1] or sum(e[2:]) != 1:
            raise ValueError("not a linear form in T")
        out[e[2:].index(1)] = c
    return out


# --------------------------------------------------------------------------
# strands

@lru_cache(maxsize=None)
def t_exponents(j: int) -> tuple[tuple[int, int, int], ...]:
    """Exponent vectors of the monomials of S_j in ascending lexicographic order."""
    out = []
    for e1 in range(j + 1):
        for e2 in range(j - e1 + 1):
            out.append((e1, e2, j - e1 - e2))
    return tuple(sorted(out))


class Strand:
    """Ordered monomial basis of B_(i,j): w ascending, then T-exponent lex."""

    __slots__ = ("i", "j", "monomials", "index")

    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        mons = []
        for w in range(i + 1):
            for e in t_exponents(j):
                mons.append((w, i - w) + e)
        self.monomials = tuple(mons)
        self.index = {m: k for k, m in enumerate(mons)}

    def __len__(self):
        return len(self.monomials)


@lru_cache(maxsize=None)
def strand(i: int, j: int) -> Strand:
    if i < 0 or j < 0:
        raise ValueError("negative bidegree")
    return Strand(i, j)


def strand_dim(i: int, j: int) -> int:
    if i < 0 or j < 0:
        return 0
    return (i + 1) * comb(j + 2, 2)


def coeff_vector(f: Poly, s: Strand) -> np.ndarray:
    v = np.zeros(len(s), dtype=np.int64)
    for e, c in f.terms.items():
        try:
            v[s.index[e]] = c
        except KeyError:
            raise ValueError(f"monomial {e} is not in B_({s.i},{s.j})") from None
    return v


def from_vector(v, s: Strand, p: int) -> Poly:
    return Poly({s.monomials[k]: int(c) for k, c in enumerate(v) if c % p}, p)


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def substitute_T(f: Poly, h1: Poly, h2: Poly, h3: Poly) -> Poly:
    """F(x, y, h1, h2, h3) for binary forms h of a common degree."""
    degs = {h.bidegree()[0] for h in (h1, h2, h3) if not h.is_zero()}
    if len(degs) > 1:
        raise ValueError("the substituted forms must share one degree")
    return f.subs({T1: h1, T2: h2, T3: h3})


# --------------------------------------------------------------------------
# univariate helpers (coefficient lists, index = exponent) used for binary forms

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def upoly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = inv_mod(b[-1], p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] * inv % p
        q[shift] = f
        for k, c in enumerate(b):
            a[k + shift] = (a[k + shift] - f * c) % p
        _trim(a)
    return q, a


def upoly_monic(a: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    if not a:
        return a
    inv = inv_mod(a[-1], p)
    return [c * inv % p for c in a]


def upoly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        _, r = upoly_divmod(a, b, p)
        a, b = b, r
    return upoly_monic(a, p)


def upoly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _trim(out)


def upoly_deriv(a: list[int], p: int) -> list[int]:
    return _trim([(k * c) % p for k, c in enumerate(a)][1:])


def squarefree_multiplicities(a: list[int], p: int) -> dict[int, list[int]]:
    """Yun's algorithm: {multiplicity: monic squarefree factor}.  Needs deg < p."""
    a = upoly_monic(a, p)
    if len(a) - 1 >= p:
        raise ValueError("degree too large for this characteristic")
    out: dict[int, list[int]] = {}
    if len(a) <= 1:
        return out
    da = upoly_deriv(a, p)
    g = upoly_gcd(a, da, p)
    c, _ = upoly_divmod(a, g, p)
    d = _sub(upoly_divmod(da, g, p)[0], upoly_deriv(c, p), p)
    k = 1
    while len(c) > 1:
        f = upoly_gcd(c, d, p)
        if len(f) > 1:
            out[k] = f
        c, _ = upoly_divmod(c, f, p)
        d = _sub(upoly_divmod(d, f, p)[0], upoly_deriv(c, p), p)
        k += 1
    return out


def _sub(a: list[int], b: list[int], p: int) -> list[int]:
    return _trim([(u - v) % p for u, v in _zip_pad(a, b)])


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def gcd_biforms(forms: list[Poly]) -> Poly:
    """Monic gcd of binary forms via dehomogenization at y = 1.

    A binary form f of degree n dehomogenizes to u(x) = f(x, 1) of degree
    deg_x; the missing degree n - deg_x is a power of y dividing f.  The gcd
    is the univariate gcd of the u's times y to the smallest such power.
    """
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise ValueError("gcd of zero forms is undefined")
    p = nonzero[0].p
    g: list[int] = []
    ypow = None
    for f in nonzero:
        n = f.bidegree()[0]
        u = biform_coeffs(f, n)
        u = _trim(u)
        ypow_f = n - (len(u) - 1)
        ypow = ypow_f if ypow is None else min(ypow, ypow_f)
        g = upoly_gcd(g, u, p) if g else upoly_monic(u, p)
    # u(x) for a form divisible by y^k keeps no record of that factor, so the
    # y-power bookkeeping above is what restores it.
    deg = len(g) - 1
    return Poly({(w, deg - w + ypow, 0, 0, 0): c for w, c in enumerate(g)}, p)


# --------------------------------------------------------------------------
# determinants of small polynomial matrices

def poly_det(m: list[list[Poly]]) -> Poly:
    """Determinant by cofactor expansion along the first row (small matrices)."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    p, nv = m[0][0].p, m[0][0].nvars
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = Poly.zero(p, nv)
    for c in range(n):
        if m[0][c].is_zero():
            continue
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        term = m[0][c] * poly_det(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def monomials_of_degree(nvars: int, deg: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(nvars), deg):
        e = [0] * nvars
        for k in combo:
            e[k] += 1
        out.append(tuple(e))
    return sorted(out)
