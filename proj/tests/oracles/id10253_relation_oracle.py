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

"""Independent oracle: all degree-6 relations over F_2 among f1, f2, f3, f4, h
(weights 1, 1, 4, 4, 3) of the C2^3 example, as printed, via sympy + GF(2)
elimination. Prints one line per basis relation."""
from itertools import product

from sympy import Poly, expand, symbols

X = symbols("x1:5")
x1, x2, x3, x4 = X
f1 = x1
f2 = x3
f3 = x1**2*x3*x4 + x1**2*x4**2 + x1*x3**2*x4 + x1*x3*x4**2 + x3**2*x4**2 + x4**4
f4 = (x1**3*x2 + x1*x2*x3**2 + x1*x3**2*x4 + x1*x3*x4**2 + x2**4
      + x2**2*x3**2 + x3**3*x4 + x3**2*x4**2)
h = x1**2*x2 + x1*x2**2 + x3**2*x4 + x3*x4**2
gens = [("f1", f1, 1), ("f2", f2, 1), ("f3", f3, 4), ("f4", f4, 4), ("h", h, 3)]

mons = [e for e in product(range(7), range(7), range(2), range(2), range(3))
        if sum(k * g[2] for k, g in zip(e, gens)) == 6]
cols = []
for e in mons:
    p = 1
    for k, g in zip(e, gens):
        p *= g[1]**k
    cols.append(Poly(expand(p), *X, modulus=2).as_dict())
rows = sorted({m for c in cols for m in c})
A = [[int(c.get(m, 0)) % 2 for c in cols] for m in rows]

pivots, r = [], 0
for col in range(len(mons)):
    pr = next((i for i in range(r, len(A)) if A[i][col]), None)
    if pr is None:
        continue
    A[r], A[pr] = A[pr], A[r]
    for i in range(len(A)):
        if i != r and A[i][col]:
            A[i] = [a ^ b for a, b in zip(A[i], A[r])]
    pivots.append(col)
    r += 1


def show(e):
    parts = []
    for k, g in zip(e, gens):
        if k:
            parts.append(g[0] if k == 1 else f"{g[0]}^{k}")
    return "*".join(parts)


for free in (j for j in range(len(mons)) if j not in pivots):
    v = [0] * len(mons)
    v[free] = 1
    for i, pc in enumerate(pivots):
        if A[i][free]:
            v[pc] = 1
    print(" + ".join(show(e) for e, b in zip(mons, v) if b))
