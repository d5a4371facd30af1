# Copyright 2026 The sepinv Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent oracle: graded Betti numbers of K[x]/I via Koszul homology,
beta_{i,j} = dim H_i(K(x) (x) K[x]/I)_j, using sympy only for the Groebner
basis (normal forms) and plain modular Gaussian elimination.

Usage: python3 koszul_betti_oracle.py  (prints tables for bundled cases)
"""
from itertools import combinations, combinations_with_replacement
from sympy import symbols, groebner, Poly, expand


def rank_mod(rows, p):
    rows = [r[:] for r in rows if any(r)]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                c = rows[r][col]
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def betti(gens, xs, p, maxdeg):
    n = len(xs)
    G = groebner(gens, *xs, modulus=p, order="grevlex")
    lts = [Poly(g, *xs, modulus=p).monoms(order="grevlex")[0] for g in G.exprs]

    def standard(d):
        out = []
        for c in combinations_with_replacement(range(n), d):
            e = [0] * n
            for v in c:
                e[v] += 1
            if not any(all(e[k] >= m[k] for k in range(n)) for m in lts):
                out.append(tuple(e))
        return out

    def mono(e):
        r = 1
        for v, k in zip(xs, e):
            r *= v**k
        return r

    std = {d: standard(d) for d in range(maxdeg + 1)}
    idx = {d: {m: i for i, m in enumerate(std[d])} for d in std}

    def nf_vec(expr, d):
        _, r = G.reduce(expand(expr))
        vec = [0] * len(std[d])
        if r == 0:
            return vec
        P = Poly(r, *xs, modulus=p)
        for m, c in P.terms():
            vec[idx[d][m]] = int(c) % p
        return vec

    # chain space C_{i,j} = Lambda^i (x) (R/I)_{j-i}; d(e_S (x) m) = sum +- x_s m e_{S-s}
    def basis(i, j):
        if j - i < 0 or j - i > maxdeg:
            return []
        return [(S, m) for S in combinations(range(n), i) for m in std[j - i]]

    def dmat(i, j):
        src, dst = basis(i, j), basis(i - 1, j)
        pos = {b: k for k, b in enumerate(dst)}
        rows = []
        for S, m in src:
            row = [0] * len(dst)
            for t, s in enumerate(S):
                sign = 1 if t % 2 == 0 else p - 1
                T = S[:t] + S[t + 1:]
                v = nf_vec(xs[s] * mono(m), j - i + 1)
                for k, c in enumerate(v):
                    if c:
                        key = (T, std[j - i + 1][k])
                        row[pos[key]] = (row[pos[key]] + sign * c) % p
            rows.append(row)
        return rows, len(src), len(dst)

    table = {}
    for j in range(maxdeg + n + 1):
        for i in range(n + 1):
            if j - i < 0 or j - i > maxdeg - 1:
                continue
            dim = len(basis(i, j))
            if dim == 0:
                continue
            r_out = rank_mod(dmat(i, j)[0], p) if i > 0 and basis(i - 1, j) else 0
            r_in = 0
            if i < n and basis(i + 1, j):
                r_in = rank_mod(dmat(i + 1, j)[0], p)
            b = dim - r_out - r_in
            if b:
                table[(i, j)] = b
    return table


if __name__ == "__main__":
    x, y, z = symbols("x y z")
    print("koszul xy:", betti([x, y], (x, y), 5, 4))
    print("koszul xyz:", betti([x, y, z], (x, y, z), 5, 4))
    print("principal xy:", betti([x * y], (x, y), 5, 5))
    x1, x2, x3, x4 = symbols("x1 x2 x3 x4")
    planes = [x1**2 - x3**2, x2**2 - x4**2, x1*x2 - x3*x4, x1*x4 - x2*x3]
    t = betti(planes, (x1, x2, x3, x4), 5, 6)
    print("two planes:", t)
    pd = max(i for i, _ in t)
    print("two planes pd =", pd, "depth =", 4 - pd)
