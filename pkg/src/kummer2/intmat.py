"""Exact integer/rational matrix helpers (lists of lists, no floating point)."""

from __future__ import annotations

from fractions import Fraction


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(r) for r in zip(*M)] if M else []


def matmul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def bilinear(G, u, v):
    return dot(u, matvec(G, v))


def determinant(M) -> int:
    """Bareiss fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank(M) -> int:
    A = [[Fraction(x) for x in r] for r in M]
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def inverse(M):
    """Exact inverse over the rationals."""
    n = len(M)
    A = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(M)]
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [r[n:] for r in A]


def smith_normal_form(M):
    """Return ``(D, U, V)`` with ``U M V = D`` diagonal, d1 | d2 | ..., U and V unimodular.

    ``D`` is returned as the full diagonal list (length min(rows, cols)),
    nonnegative, zeros last.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = [list(r) for r in M]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in A:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]

    def add_row(src, dst, f):  # row_dst += f row_src
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, f):
        for R in A:
            R[dst] += f * R[src]
        for R in V:
            R[dst] += f * R[src]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return [A[i][i] for i in range(min(m, n))], U, V
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    dirty |= A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    dirty |= A[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    return [A[i][i] for i in range(min(m, n))], U, V


def column_basis(M):
    """Columns of an integer matrix spanning the same Z-module, linearly independent."""
    if not M or not M[0]:
        return []
    D, U, V = smith_normal_form(M)
    Uinv = inverse(U)
    basis = []
    for i, d in enumerate(D):
        if d:
            basis.append([int(Uinv[r][i] * d) for r in range(len(M))])
    return basis


def congruence_inertia(G):
    """(n_plus, n_minus, n_zero) by symmetric Gaussian elimination over Q."""
    n = len(G)
    A = [[Fraction(x) for x in r] for r in G]
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if A[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # row_i += row_j, col_i += col_j makes A[i][i] = 2 A[i][j] != 0
            A[i] = [a + b for a, b in zip(A[i], A[j])]
            for R in A:
                R[i] += R[j]
            piv = i
        A[k], A[piv] = A[piv], A[k]
        for R in A:
            R[k], R[piv] = R[piv], R[k]
        p = A[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if A[i][k]:
                f = A[i][k] / p
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
                # matching column operation keeps A symmetric
                for r in range(n):
                    A[r][i] -= f * A[r][k]
        k += 1
    return pos, neg, n - pos - neg
