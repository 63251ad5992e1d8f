"""Integer Smith normal form with unimodular transforms (``U A V = D``)."""

from __future__ import annotations

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(r == c) for c in range(n)] for r in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else [() for _ in range(cols)]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: Matrix, cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*a)]


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U a V = D`` diagonal, ``D[k][k] | D[k+1][k+1]``, ``D[k][k] >= 0``."""
    m = len(a)
    n = len(a[0]) if m else 0
    D = [list(map(int, row)) for row in a]
    U = identity(m)
    V = identity(n)

    def swap_rows(i: int, j: int) -> None:
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i: int, j: int) -> None:
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src: int, dst: int, f: int) -> None:  # row dst += f * row src
        if f:
            D[dst] = [x + f * y for x, y in zip(D[dst], D[src])]
            U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(src: int, dst: int, f: int) -> None:  # col dst += f * col src
        if f:
            for row in D:
                row[dst] += f * row[src]
            for row in V:
                row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // p))
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // p))
                    if D[t][j]:
                        done = False
            if done:
                # divisibility of the rest of the block
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if D[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                add_row(bad, t, 1)
                continue
            # move the smallest remaining entry of row/col t onto the pivot
            cand = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
            cand += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
            _, i, j = min(cand)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def inverse_unimodular(a: Matrix) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(a)
    U, D, V = smith_normal_form(a)
    for k in range(n):
        if D[k][k] != 1:
            raise ValueError("matrix is not unimodular")
    # a = U^-1 V^-1  =>  a^-1 = V U
    return matmul(V, U)


def rank(a: Matrix) -> int:
    if not a or not a[0]:
        return 0
    _, D, _ = smith_normal_form(a)
    return sum(1 for k in range(min(len(D), len(D[0]))) if D[k][k])
