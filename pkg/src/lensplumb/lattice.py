"""Smith normal form over the integers and orders in finitely generated abelian groups."""

from math import gcd


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M):
    """Return (U, D, V) with U * M * V = D diagonal, U and V unimodular and
    each diagonal entry dividing the next.  ``M`` is a list of integer rows."""
    m = len(M)
    n = len(M[0]) if m else 0
    D = [list(r) for r in M]
    U = _identity(m)
    V = _identity(n)

    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(src, dst, k):  # row dst += k * row src
        D[dst] = [x + k * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not nonzero:
                return U, D, V
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t][t]
            done = True
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    add_row(t, i, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(t, j, -q)
                if D[t][j]:
                    done = False
            if not done:
                continue
            # divisibility: fold a non-divisible entry into row t and retry
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return U, D, V


def invariant_factors(M):
    _, D, _ = smith_normal_form(M)
    n = len(M[0]) if M else 0
    return [D[i][i] if i < len(D) else 0 for i in range(n)]


def element_order(M, v):
    """Order of ``v`` in Z^n / (row span of M), or ``None`` if it has infinite order."""
    U, D, V = smith_normal_form(M)
    n = len(v)
    w = [sum(v[k] * V[k][i] for k in range(n)) for i in range(n)]
    order = 1
    for i in range(n):
        d = D[i][i] if i < len(D) else 0
        if d == 0:
            if w[i] != 0:
                return None
            continue
        part = d // gcd(d, w[i])
        order = order * part // gcd(order, part)
    return order


def in_row_span(M, v):
    return element_order(M, v) == 1
