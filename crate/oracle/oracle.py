#!/usr/bin/env python3
"""Independent reference computations for the scmlab test fixtures.

Everything here is graded linear algebra over GF(p) on explicit monomial
bases; no Groebner bases are involved. Betti numbers come from Tor(R/I, k)
computed as the homology of the Koszul complex on the variables tensored
with R/I, degree by degree.

    python3 oracle/oracle.py > crates/core/tests/fixtures/oracle.json
"""

import itertools
import json
import sys
from functools import lru_cache
from math import comb

import numpy as np
import sympy

P = 32003


# ---------------------------------------------------------------- polynomials

def parse(text, names):
    syms = sympy.symbols(names)
    poly = sympy.Poly(sympy.sympify(text, locals=dict(zip(names, syms))), *syms)
    return {e: int(c) % P for e, c in poly.terms() if int(c) % P}


def degree(f):
    return sum(next(iter(f)))


def mul(f, g):
    out = {}
    for a, c in f.items():
        for b, d in g.items():
            e = tuple(x + y for x, y in zip(a, b))
            out[e] = (out.get(e, 0) + c * d) % P
    return {e: c for e, c in out.items() if c}


def mono_mul(f, m):
    return {tuple(x + y for x, y in zip(e, m)): c for e, c in f.items()}


@lru_cache(maxsize=None)
def monomials(n, d):
    if d < 0:
        return ()
    if n == 1:
        return ((d,),)
    return tuple((a,) + rest for a in range(d, -1, -1) for rest in monomials(n - 1, d - a))


@lru_cache(maxsize=None)
def mono_index(n, d):
    return {m: i for i, m in enumerate(monomials(n, d))}


# ------------------------------------------------------------- linear algebra

def rref(mat):
    """Reduced row echelon form mod P; returns (rows, pivot columns)."""
    m = np.array(mat, dtype=np.int64) % P
    if m.size == 0:
        return m.reshape(0, m.shape[1] if m.ndim == 2 else 0), []
    rows, cols = m.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = m[r] * pow(int(m[r, c]), P - 2, P) % P
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % P
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(mat):
    a = np.array(mat, dtype=np.int64)
    if a.size == 0:
        return 0
    return len(rref(a)[1])


def vector(f, n, d):
    idx = mono_index(n, d)
    v = np.zeros(len(idx), dtype=np.int64)
    for e, c in f.items():
        v[idx[e]] = c
    return v


# ------------------------------------------------------------ graded quotient

class Quotient:
    """Graded pieces of R/I with explicit complement bases."""

    def __init__(self, n, gens):
        self.n = n
        self.gens = [g for g in gens if g]
        self.cache = {}

    def ideal_rows(self, d):
        rows = []
        for g in self.gens:
            e = degree(g)
            for m in monomials(self.n, d - e):
                rows.append(vector(mono_mul(g, m), self.n, d))
        return rows

    def piece(self, d):
        if d not in self.cache:
            size = comb(self.n - 1 + d, self.n - 1) if d >= 0 else 0
            rows = self.ideal_rows(d)
            red, piv = rref(np.array(rows).reshape(len(rows), size)) if rows else (np.zeros((0, size), np.int64), [])
            basis = [c for c in range(size) if c not in set(piv)]
            self.cache[d] = (red, piv, basis)
        return self.cache[d]

    def hf(self, d):
        return len(self.piece(d)[2]) if d >= 0 else 0

    def reduce(self, v, d):
        """Coordinates of v in the complement basis of degree d."""
        red, piv, basis = self.piece(d)
        v = v.copy() % P
        for row, c in zip(red, piv):
            if v[c]:
                v = (v - v[c] * row) % P
        return v[basis]

    def multiplication(self, d, f):
        """Matrix of multiplication by f : (R/I)_d -> (R/I)_{d + deg f}, columns = basis images."""
        _, _, basis = self.piece(d)
        mons = monomials(self.n, d)
        e = degree(f)
        cols = [self.reduce(vector(mono_mul(f, mons[b]), self.n, d + e), d + e) for b in basis]
        return np.array(cols, dtype=np.int64).T.reshape(self.hf(d + e), len(basis))


def var(n, k):
    return {tuple(1 if i == k else 0 for i in range(n)): 1}


def betti(n, gens, dmax):
    """beta[i][j] = dim Tor_i(R/I, k)_j for j <= dmax."""
    q = Quotient(n, gens)
    xs = [var(n, k) for k in range(n)]
    mults = {}

    def xmat(d, k):
        if (d, k) not in mults:
            mults[(d, k)] = q.multiplication(d, xs[k])
        return mults[(d, k)]

    table = {}
    for j in range(dmax + 1):
        dims = []
        maps = {}
        for i in range(n + 1):
            dims.append(comb(n, i) * q.hf(j - i))
        for i in range(1, n + 1):
            # d_i : wedge^i (x) (R/I)_{j-i} -> wedge^{i-1} (x) (R/I)_{j-i+1}
            src = list(itertools.combinations(range(n), i))
            tgt = {s: t for t, s in enumerate(itertools.combinations(range(n), i - 1))}
            hs, ht = q.hf(j - i), q.hf(j - i + 1)
            m = np.zeros((len(tgt) * ht, len(src) * hs), dtype=np.int64)
            if hs and ht:
                for si, s in enumerate(src):
                    for pos, k in enumerate(s):
                        face = tgt[s[:pos] + s[pos + 1:]]
                        sign = 1 if pos % 2 == 0 else P - 1
                        block = xmat(j - i, k) * sign % P
                        m[face * ht:(face + 1) * ht, si * hs:(si + 1) * hs] += block
                m %= P
            maps[i] = m
        for i in range(n + 1):
            r_out = rank(maps[i]) if i >= 1 and maps[i].size else 0
            r_in = rank(maps[i + 1]) if i + 1 <= n and maps[i + 1].size else 0
            b = dims[i] - r_out - r_in
            if b:
                table.setdefault(i, {})[j] = b
    return table, q


def numerator(table):
    top = max((j for row in table.values() for j in row), default=0)
    num = [0] * (top + 1)
    for i, row in table.items():
        for j, b in row.items():
            num[j] += (-1) ** i * b
    return num


def pole_order_drop(num):
    """Largest k with (1 - t)^k dividing num."""
    k = 0
    num = list(num)
    while any(num) and sum(num) == 0:
        # divide by (1 - t)
        out = []
        acc = 0
        for c in num[:-1]:
            acc += c
            out.append(acc)
        num = out
        k += 1
    return k


# ------------------------------------------------------------ analytic spread

def jacobian_rank(n, gens, points=3):
    rng = np.random.default_rng(12345)
    best = 0
    for _ in range(points):
        pt = [int(v) for v in rng.integers(1, P, size=n)]
        rows = []
        for g in gens:
            row = []
            for k in range(n):
                s = 0
                for e, c in g.items():
                    if e[k]:
                        term = c * e[k]
                        for i, a in enumerate(e):
                            term = term * pow(pt[i], a - (1 if i == k else 0), P) % P
                        s = (s + term) % P
                row.append(s)
            rows.append(row)
        best = max(best, rank(rows))
    return best


def mu_of(n, gens):
    """Number of minimal generators, degree by degree."""
    degs = sorted({degree(g) for g in gens})
    total = 0
    for d in degs:
        lower = []
        for g in gens:
            e = degree(g)
            if e < d:
                for m in monomials(n, d - e):
                    lower.append(vector(mono_mul(g, m), n, d))
        same = [vector(g, n, d) for g in gens if degree(g) == d]
        total += rank(lower + same) - rank(lower)
    return total


def fiber_spread(n, gens, jmax=7):
    """Analytic spread from the growth of mu(I^j): degree of the polynomial plus one."""
    seq = []
    power = [dict(g) for g in gens]
    for j in range(1, jmax + 1):
        if j > 1:
            power = [mul(a, g) for a in power for g in gens]
            power = [dict(t) for t in {tuple(sorted(p.items())) for p in power}]
        seq.append(mu_of(n, power))
    diffs = seq[2:]
    for k in range(len(diffs)):
        if all(v == diffs[0] for v in diffs):
            return k + 1 if diffs[0] else k, seq
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    raise RuntimeError("fiber cone growth did not stabilise")


# ---------------------------------------------------------------- Koszul H_i

def koszul_hf(n, gens, dmax):
    """dim H_i(gens; R)_d for 0 <= d <= dmax."""
    m = len(gens)
    degs = [degree(g) for g in gens]
    out = {i: [] for i in range(m + 1)}

    def rdim(d):
        return comb(n - 1 + d, n - 1) if d >= 0 else 0

    for d in range(dmax + 1):
        maps = {}
        dims = {}
        for i in range(m + 1):
            basis = list(itertools.combinations(range(m), i))
            dims[i] = sum(rdim(d - sum(degs[k] for k in s)) for s in basis)
        for i in range(1, m + 1):
            src = list(itertools.combinations(range(m), i))
            tgt = list(itertools.combinations(range(m), i - 1))
            toff, acc = {}, 0
            for s in tgt:
                toff[s] = acc
                acc += rdim(d - sum(degs[k] for k in s))
            mat = np.zeros((acc, dims[i]), dtype=np.int64)
            col = 0
            for s in src:
                sd = d - sum(degs[k] for k in s)
                for mono in monomials(n, sd):
                    for pos, k in enumerate(s):
                        face = s[:pos] + s[pos + 1:]
                        fd = d - sum(degs[t] for t in face)
                        idx = mono_index(n, fd)
                        sign = 1 if pos % 2 == 0 else P - 1
                        for e, c in mono_mul(gens[k], mono).items():
                            mat[toff[face] + idx[e], col] = (mat[toff[face] + idx[e], col] + sign * c) % P
                    col += 1
            maps[i] = mat
        for i in range(m + 1):
            r_out = rank(maps[i]) if i >= 1 and maps[i].size else 0
            r_in = rank(maps[i + 1]) if i + 1 <= m and maps[i + 1].size else 0
            out[i].append(dims[i] - r_out - r_in)
    return out


def kernel_hf(n, gens, i, dmax):
    """dim ker(d_i : K_i -> K_{i-1})_d of the Koszul complex on gens."""
    m = len(gens)
    degs = [degree(g) for g in gens]
    hf = []

    def rdim(d):
        return comb(n - 1 + d, n - 1) if d >= 0 else 0

    for d in range(dmax + 1):
        src = list(itertools.combinations(range(m), i))
        tgt = list(itertools.combinations(range(m), i - 1))
        toff, acc = {}, 0
        for s in tgt:
            toff[s] = acc
            acc += rdim(d - sum(degs[k] for k in s))
        cols = []
        for s in src:
            for mono in monomials(n, d - sum(degs[k] for k in s)):
                v = np.zeros(acc, dtype=np.int64)
                for pos, k in enumerate(s):
                    face = s[:pos] + s[pos + 1:]
                    idx = mono_index(n, d - sum(degs[t] for t in face))
                    sign = 1 if pos % 2 == 0 else P - 1
                    for e, c in mono_mul(gens[k], mono).items():
                        v[toff[face] + idx[e]] = (v[toff[face] + idx[e]] + sign * c) % P
                cols.append(v)
        hf.append(len(cols) - (rank(np.array(cols).T) if cols and acc else 0))
    return hf


# ---------------------------------------------------------- quadratic equations

def null_space(a):
    """Basis of the right kernel of a mod P, as rows."""
    cols = a.shape[1]
    red, piv = rref(a) if a.size else (np.zeros((0, cols), np.int64), [])
    out = []
    for f in [c for c in range(cols) if c not in set(piv)]:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for row, c in zip(red, piv):
            v[c] = (-row[f]) % P
        out.append(v)
    return out


def quadratic_equations(n, gens, emax):
    """x-degrees e <= emax of minimal Rees equations of T-degree 2 (equigenerated input).

    In bidegree (e, 2) the full equation space is the kernel of
    R_e (x) Sym^2 -> R_{e + 2 delta}; the part generated by lower equations is
    spanned by T_k times linear syzygies of x-degree e and by x_k times
    quadratic equations of x-degree e - 1.
    """
    mu = len(gens)
    delta = degree(gens[0])
    pairs = list(itertools.combinations_with_replacement(range(mu), 2))
    pos = {p: i for i, p in enumerate(pairs)}
    prods = [mul(gens[a], gens[b]) for a, b in pairs]
    found = []
    previous = []
    for e in range(emax + 1):
        mons = monomials(n, e)
        idx = mono_index(n, e)
        cols = [vector(mono_mul(p, m), n, e + 2 * delta) for p in prods for m in mons]
        kernel = null_space(np.array(cols).T)
        lin = [vector(mono_mul(g, m), n, e + delta) for g in gens for m in mons]
        span = []
        for s in null_space(np.array(lin).T):
            for k in range(mu):
                v = np.zeros(len(pairs) * len(mons), dtype=np.int64)
                for i in np.nonzero(s)[0]:
                    j, mi = divmod(int(i), len(mons))
                    key = pos[tuple(sorted((j, k)))]
                    v[key * len(mons) + mi] = (v[key * len(mons) + mi] + s[i]) % P
                span.append(v)
        if e > 0:
            low = monomials(n, e - 1)
            for q in previous:
                for k in range(n):
                    v = np.zeros(len(pairs) * len(mons), dtype=np.int64)
                    for i in np.nonzero(q)[0]:
                        key, mi = divmod(int(i), len(low))
                        m = tuple(a + (1 if t == k else 0) for t, a in enumerate(low[mi]))
                        v[key * len(mons) + idx[m]] = q[i]
                    span.append(v)
        if len(kernel) > (rank(span) if span else 0):
            found.append(e)
        previous = kernel
    return found


# --------------------------------------------------------------------- inputs

CORPUS = [
    ("ci_xy", ["x", "y", "z"], ["x", "y"]),
    ("ci_quadrics", ["x", "y", "z"], ["x^2", "y^2", "z^2"]),
    ("maximal3", ["x", "y", "z"], ["x", "y", "z"]),
    ("m_squared2", ["x", "y"], ["x^2", "x*y", "y^2"]),
    ("embedded_point", ["x", "y"], ["x^2", "x*y"]),
    ("three_lines", ["x", "y", "z"], ["x*y", "x*z", "y*z"]),
    ("two_planes", ["x", "y", "z", "w"], ["x*z", "x*w", "y*z", "y*w"]),
    ("twisted_cubic", ["x", "y", "z", "w"], ["x*z - y^2", "x*w - y*z", "y*w - z^2"]),
    ("circulant_minors", ["x1", "x2", "x3", "x4"],
     ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x1^2 - x2*x4", "x2*x4 - x3^2", "x2*x1 - x4*x3", "x3*x1 - x4^2"]),
    ("monomial_mixed", ["x", "y", "z"], ["x^3", "x^2*y", "x*y*z", "y^2*z^2"]),
    ("pfaffians_linear4", ["x", "y", "z", "w"], None),
    ("ci_mixed_degrees", ["x", "y", "z", "w"], ["x*y - z*w", "x^3 + y^3 + z^3 + w^3"]),
]

# Alternating 5 x 5 matrix of linear forms, upper triangle by rows.
PFAFFIAN_LINEAR4 = {
    (0, 1): "x", (0, 2): "y", (0, 3): "z", (0, 4): "w",
    (1, 2): "z", (1, 3): "w", (1, 4): "x",
    (2, 3): "x + w", (2, 4): "y",
    (3, 4): "z + y",
}


def pfaffian(mat, idx):
    if not idx:
        return sympy.Integer(1)
    first, rest = idx[0], idx[1:]
    total = sympy.Integer(0)
    for pos, j in enumerate(rest):
        sub = rest[:pos] + rest[pos + 1:]
        total += (-1) ** pos * mat[first][j] * pfaffian(mat, sub)
    return sympy.expand(total)


def submaximal_pfaffians(mat):
    k = len(mat)
    return [pfaffian(mat, [i for i in range(k) if i != omit]) for omit in range(k)]


def alternating(names, upper):
    syms = dict(zip(names, sympy.symbols(names)))
    mat = [[sympy.Integer(0)] * 5 for _ in range(5)]
    for (i, j), text in upper.items():
        mat[i][j] = sympy.sympify(text, locals=syms)
        mat[j][i] = -mat[i][j]
    return mat


def minors(mat, k):
    rows = len(mat)
    cols = len(mat[0])
    out = []
    for r in itertools.combinations(range(rows), k):
        for c in itertools.combinations(range(cols), k):
            out.append(sympy.expand(sympy.Matrix([[mat[i][j] for j in c] for i in r]).det()))
    return [m for m in out if m != 0]


def to_text(exprs):
    return [str(e).replace("**", "^") for e in exprs if e != 0]


def to_polys(exprs, names):
    return [parse(str(e), names) for e in exprs if e != 0]


def linear_presentation(names, gens):
    """Columns of linear syzygies of an equigenerated ideal, as sympy entries."""
    n, mu = len(names), len(gens)
    d = degree(gens[0]) + 1
    cols = [vector(mul(g, var(n, v)), n, d) for g in gens for v in range(n)]
    syms = sympy.symbols(names)
    out = []
    for z in null_space(np.array(cols, dtype=np.int64).T):
        out.append([sum(int(z[k * n + v]) * syms[v] for v in range(n)) for k in range(mu)])
    return [[col[k] for col in out] for k in range(mu)]


def summary(name, names, gens, dmax):
    n = len(names)
    table, q = betti(n, gens, dmax)
    num = numerator(table)
    dim = n - pole_order_drop(num)
    pd = max(table)
    mu = sum(table.get(1, {}).values())
    equi = len({degree(g) for g in gens}) == 1
    if equi:
        ell = jacobian_rank(n, gens)
        method = "jacobian"
    else:
        ell, _ = fiber_spread(n, gens)
        method = "fiber_growth"
    return {
        "name": name,
        "vars": names,
        "mu": mu,
        "dim": dim,
        "depth": n - pd,
        "height": n - dim,
        "analytic_spread": ell,
        "analytic_spread_method": method,
        "betti": sorted([i, j, b] for i, row in table.items() for j, b in row.items()),
        "hilbert_function": [q.hf(d) for d in range(dmax + 1)],
    }


def main():
    with open(sys.argv[1]) as fh:
        pinned = json.load(fh)
    out = {"prime": P, "corpus": [], "koszul_hilbert": [], "kernels": [], "pfaffian4": {}}
    for name, names, gens_text in CORPUS:
        if gens_text is None:
            exprs = submaximal_pfaffians(alternating(names, PFAFFIAN_LINEAR4))
            gens_text = [str(e).replace("**", "^") for e in exprs]
        gens = [parse(g, names) for g in gens_text]
        maxdeg = max(degree(g) for g in gens)
        entry = summary(name, names, gens, dmax=len(names) + 2 * maxdeg + 2)
        entry["generators"] = gens_text
        out["corpus"].append(entry)

    for name, names, gens_text, dmax in [
        ("three_lines", ["x", "y", "z"], ["x*y", "x*z", "y*z"], 8),
        ("embedded_point", ["x", "y"], ["x^2", "x*y"], 8),
        ("circulant_minors", CORPUS[8][1], CORPUS[8][2], 8),
    ]:
        gens = [parse(g, names) for g in gens_text]
        hf = koszul_hf(len(names), gens, dmax)
        out["koszul_hilbert"].append({"name": name, "generators": gens_text, "hf": [hf[i] for i in sorted(hf)]})

    names, gens_text = CORPUS[8][1], CORPUS[8][2]
    gens = [parse(g, names) for g in gens_text]
    out["kernels"].append({"name": "circulant_minors", "i": 2, "generators": gens_text,
                           "hf": kernel_hf(len(names), gens, 2, 9)})

    # pinned generic Pfaffian instance: matrix exported by the Rust builder
    names = pinned["vars"]
    syms = dict(zip(names, sympy.symbols(names)))
    mat = [[sympy.sympify(e, locals=syms) for e in row] for row in pinned["matrix"]]
    pf = submaximal_pfaffians(mat)
    gens = to_polys(pf, names)
    n = len(names)
    entry = summary("pfaffian4", names, gens, dmax=10)
    fitting = []
    for i, k in [(1, 4), (2, 3), (3, 2)]:
        m = to_polys(minors(mat, k), names)
        table, _ = betti(n, m, 8)
        fitting.append({"i": i, "minor_size": k, "height": pole_order_drop(numerator(table))})
    entry["generators"] = to_text(pf)
    entry["fitting_heights"] = fitting
    entry["quadratic_equation_x_degrees"] = quadratic_equations(n, gens, 3)
    hf = koszul_hf(n, gens, 10)
    entry["koszul_hf"] = [hf[i] for i in sorted(hf)]
    out["pfaffian4"] = entry

    names, gens_text = CORPUS[8][1], CORPUS[8][2]
    gens = [parse(g, names) for g in gens_text]
    out["circulant_quadratic_equation_x_degrees"] = quadratic_equations(len(names), gens, 2)
    # is the square of the last generator in J*I, J = the first five?
    sq = mul(gens[5], gens[5])
    span = [vector(mul(a, b), len(names), 4) for a in gens[:5] for b in gens]
    out["circulant_last_square_in_JI"] = rank(span + [vector(sq, len(names), 4)]) == rank(span)
    # Fitting ideals of a linearly presented ideal, from its syzygy matrix
    name, names, gens_text = next(c for c in CORPUS if c[0] == "two_planes")
    gens = [parse(g, names) for g in gens_text]
    mat = linear_presentation(names, gens)
    heights = []
    for i in range(1, len(gens)):
        m = to_polys(minors(mat, len(gens) - i), names)
        table, _ = betti(len(names), m, 8)
        heights.append({"i": i, "minor_size": len(gens) - i, "height": pole_order_drop(numerator(table))})
    out["two_planes_fitting"] = {"syzygies": len(mat[0]), "heights": heights}
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
