#!/usr/bin/env python3
"""Reference acceptance/rejection tables for the three worked fixtures.

Independent mod-p Gaussian elimination; prints, for every subset S of the
players (bitmask order 0..2^n-1), whether the symplectified restriction
accepts and whether it rejects. The strings are frozen into the C++ tests.
"""


def rank_mod(M, p):
    M = [list(r) for r in M]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [v * inv % p for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c] % p:
                f = M[i][c]
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        r += 1
    return r


def tables(G, F, n, p):
    acc, rej = "", ""
    for mask in range(1 << n):
        rows = [i for i in range(n) if mask >> i & 1]
        rows = rows + [i + n for i in rows]
        PG = [G[i] for i in rows]
        PGF = [G[i] + F[i] for i in rows]
        rg = rank_mod(PG, p) if G[0] else 0
        rgf = rank_mod(PGF, p)
        acc += "1" if rgf == rg + len(F[0]) else "0"
        rej += "1" if rgf == rg else "0"
    return acc, rej


EX1_G = [[1, 0], [1, 0], [2, 2], [0, 1], [0, 1], [0, 2]]
EX1_F = [[2, 0], [1, 0], [1, 2], [1, 0], [0, 2], [1, 2]]
EX2_G = [[1, 0, 0], [1, 0, 0], [2, 2, 2], [0, 1, 0], [0, 1, 2], [0, 2, 2]]
EX2_F = [[2, 0], [1, 1], [1, 2], [0, 0], [0, 2], [0, 2]]


def ex3(p):
    G = [[1, 0] for _ in range(p)] + [[0, 1] for _ in range(p)]
    F = [[j, 0] for j in range(p)] + [[0, j] for j in range(p)]
    return G, F


if __name__ == "__main__":
    print("ex1", tables(EX1_G, EX1_F, 3, 3))
    print("ex2", tables(EX2_G, EX2_F, 3, 3))
    for p in (3, 5):
        G, F = ex3(p)
        print("ex3", p, tables(G, F, p, p))
    # 2x2 symplectic Gram of Example 1 columns
    def symp(v, w, n, p):
        return sum(v[i] * w[n + i] - w[i] * v[n + i] for i in range(n)) % p
    cols = lambda M: [list(c) for c in zip(*M)]
    print("ex1 G gram", [[symp(a, b, 3, 3) for b in cols(EX1_G)] for a in cols(EX1_G)])
    print("ex1 F-G gram", [[symp(a, b, 3, 3) for b in cols(EX1_G)] for a in cols(EX1_F)])
    print("ex2 G gram", [[symp(a, b, 3, 3) for b in cols(EX2_G)] for a in cols(EX2_G)])
    print("ex2 F-G gram", [[symp(a, b, 3, 3) for b in cols(EX2_G)] for a in cols(EX2_F)])
    print("ex1 rank P{1,2}(G,F)", rank_mod([EX1_G[i] + EX1_F[i] for i in (0, 1, 3, 4)], 3))
